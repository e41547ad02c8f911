"""Chain complexes of based free modules, and the full cube of resolutions.

A ``ChainComplex`` stores, for each homological degree ``k``, a list of
generators (label, quantum degree) and the differential ``d^k`` as sparse
columns: ``d[k][j]`` maps row indices in degree ``k+1`` to ring elements.
The cube construction here is the brute-force path; ``simplify`` is the fast one.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import NamedTuple

from .diagram import Diagram, ab_coloring, resolve
from .errors import KhssError, MarkRequiredForReduced, NotACycle, TooLargeForCube
from .rings import RingSpec

DEFAULT_CUBE_CAP = 12


def debug_enabled() -> bool:
    """Expensive invariant checks, switched on with ``KHSS_DEBUG=1``."""
    return os.environ.get("KHSS_DEBUG", "0").lower() not in ("", "0", "false", "off", "no")


class Gen(NamedTuple):
    label: object
    q: int


@dataclass
class CycleVector:
    degree: int
    coords: dict            # generator index -> ring element

    def dense(self, n: int, zero) -> list:
        return [self.coords.get(i, zero) for i in range(n)]


@dataclass
class ChainComplex:
    ring: RingSpec
    gens: dict                      # degree -> list[Gen]
    d: dict = field(default_factory=dict)   # degree -> {col: {row: value}}

    def __post_init__(self):
        for k in list(self.gens):
            self.d.setdefault(k, {})

    # -- shape

    @property
    def degrees(self) -> list:
        ks = [k for k, g in self.gens.items() if g]
        if not ks:
            return []
        return list(range(min(ks), max(ks) + 1))

    def rank(self, k: int) -> int:
        return len(self.gens.get(k, ()))

    def ranks(self) -> dict:
        return {k: self.rank(k) for k in self.degrees}

    def total_rank(self) -> int:
        return sum(len(g) for g in self.gens.values())

    def entries(self, k: int):
        for j, col in self.d.get(k, {}).items():
            for i, v in col.items():
                yield i, j, v

    def matrix(self, k: int) -> list:
        """Dense matrix of d^k: rows = degree k+1, columns = degree k."""
        R = self.ring
        rows, cols = self.rank(k + 1), self.rank(k)
        M = [[R.zero] * cols for _ in range(rows)]
        for i, j, v in self.entries(k):
            M[i][j] = v
        return M

    def apply(self, k: int, coords: dict) -> dict:
        out = {}
        col = self.d.get(k, {})
        for j, a in coords.items():
            if not a:
                continue
            for i, v in col.get(j, {}).items():
                out[i] = out.get(i, self.ring.zero) + v * a
        return {i: v for i, v in out.items() if v}

    def is_cycle(self, z: CycleVector) -> bool:
        return not self.apply(z.degree, z.coords)

    def check_d2(self) -> bool:
        for k in self.degrees:
            for j in range(self.rank(k)):
                if self.apply(k + 1, self.apply(k, {j: self.ring.one})):
                    return False
        return True

    def has_unit_entries(self) -> bool:
        R = self.ring
        return any(R.is_unit(v) for k in self.degrees for _, _, v in self.entries(k))

    # -- simplification

    def reduce(self, cycles=()):
        """Cancel unit entries by Gaussian elimination, transporting ``cycles``.

        Returns ``(complex, cycles)``; the new complex is chain homotopy
        equivalent and has no unit entries left.
        """
        R = self.ring
        out: dict = {}
        inn: dict = {}
        for k, gl in self.gens.items():
            for j in range(len(gl)):
                out[(k, j)] = {}
                inn[(k, j)] = {}
        for k in self.gens:
            for j, col in self.d.get(k, {}).items():
                for i, v in col.items():
                    if v:
                        out[(k, j)][(k + 1, i)] = v
                        inn[(k + 1, i)][(k, j)] = v
        zs = [(z.degree, {(z.degree, i): a for i, a in z.coords.items() if a}) for z in cycles]
        eliminate_units(R, out, inn, zs)
        return _rebuild(self, out, zs)

    # -- text

    def summary(self) -> str:
        parts = []
        for k in self.degrees:
            parts.append(f"{self.ring.name}^{self.rank(k)}[{k}]")
        return " -> ".join(parts) if parts else "0"

    def dump(self, cycles=()) -> str:
        R = self.ring
        lines = []
        for k in self.degrees:
            qs = [g.q for g in self.gens[k]]
            lines.append(f"C^{k}: rank {self.rank(k)}  q = {qs}")
        for k in self.degrees:
            if self.rank(k) and self.rank(k + 1):
                lines.append(f"d^{k}:")
                for row in self.matrix(k):
                    lines.append("  [" + ", ".join(R.fmt(v) for v in row) + "]")
        for z in cycles:
            vec = z.dense(self.rank(z.degree), R.zero)
            lines.append(f"cycle in degree {z.degree}: (" + ", ".join(R.fmt(v) for v in vec) + ")")
        return "\n".join(lines)


def eliminate_units(R: RingSpec, out: dict, inn: dict, zs: list) -> None:
    """Sparse Gaussian elimination on unit entries, in place.

    ``out[g][h] = inn[h][g] = d(g -> h)``; generators are keys ``(degree, id)``.
    ``zs`` is a list of ``(degree, coords)`` cycles transported along.
    """
    is_unit = R.is_unit
    while True:
        cands = []
        for g, row in out.items():
            for h, v in row.items():
                if is_unit(v):
                    cands.append(((len(row) - 1) * (len(inn[h]) - 1), g, h))
        if not cands:
            return
        cands.sort(key=lambda t: t[0])
        for _, g, h in cands:
            if g not in out or h not in inn:
                continue
            u = out[g].get(h)
            if u is None or not is_unit(u):
                continue
            _eliminate(R, out, inn, zs, g, h, u)


def _eliminate(R, out, inn, zs, g, h, u):
    uinv = R.inv(u)
    targets = [(r, b) for r, b in out[g].items() if r != h]
    sources = [(c, a) for c, a in inn[h].items() if c != g]
    for c, a in sources:
        oc = out[c]
        f = uinv * a
        for r, b in targets:
            v = oc.get(r)
            nv = (-(b * f)) if v is None else v - b * f
            if nv:
                oc[r] = nv
                inn[r][c] = nv
            elif v is not None:
                del oc[r]
                del inn[r][c]
    for deg, z in zs:
        if deg == g[0]:
            z.pop(g, None)
        elif deg == h[0]:
            lam = z.pop(h, None)
            if lam:
                f = uinv * lam
                for r, b in targets:
                    nv = z.get(r, R.zero) - b * f
                    if nv:
                        z[r] = nv
                    else:
                        z.pop(r, None)
    for x in (g, h):
        for r in out[x]:
            del inn[r][x]
        for c in inn[x]:
            del out[c][x]
        del out[x]
        del inn[x]


def _rebuild(C: ChainComplex, out: dict, zs: list):
    gens = {}
    index = {}
    for k in sorted(C.gens):
        gl = []
        for j, gen in enumerate(C.gens[k]):
            if (k, j) in out:
                index[(k, j)] = len(gl)
                gl.append(gen)
        gens[k] = gl
    d = {k: {} for k in gens}
    for g, row in out.items():
        if row:
            col = {index[h]: v for h, v in row.items()}
            d[g[0]][index[g]] = col
    cycles = [CycleVector(deg, {index[x]: a for x, a in z.items()}) for deg, z in zs]
    return ChainComplex(C.ring, gens, d), cycles


# ---------------------------------------------------------------------------
# the cube of resolutions


def gradings(D: Diagram, state, labels, reduced: bool = False):
    """``(gr_h, gr_q)`` of an enhanced state; labels are 0 for 1, 1 for X, None when marked."""
    size = sum(state)
    h = size - D.n_neg
    deg = sum(0 if l is None else (1 if l == 0 else -1) for l in labels)
    q = deg + size + D.n_pos - 2 * D.n_neg
    return h, q


def build_cube(D: Diagram, R: RingSpec, reduced: bool = False, cap: int = DEFAULT_CUBE_CAP):
    """Khovanov complex over R with (h, t) = (c, 0), and the Lee cycle.

    Returns ``(ChainComplex, CycleVector)``.  Generator labels are
    ``(state, labels)`` with one label per circle of ``resolve(D, state)``
    (``None`` on the marked circle in the reduced theory).
    """
    n = D.n_crossings
    if n > cap:
        raise TooLargeForCube(f"{n} crossings exceeds the cube cap of {cap}")
    if reduced and D.marked_edge is None:
        raise MarkRequiredForReduced("reduced complex needs a marked edge")
    c = R.c
    zero, one = R.zero, R.one
    col = ab_coloring(D)
    seifert = col.resolution.state
    lam = None
    if reduced:
        lam = c if col.of_edge(D.marked_edge) == "a" else zero

    states = list(itertools.product((0, 1), repeat=n))
    res = {u: resolve(D, u) for u in states}

    def marked_of(u):
        return res[u].circle_of_edge[D.marked_edge] if reduced else None

    gens: dict = {}
    index: dict = {}
    for u in states:
        m = marked_of(u)
        nc = len(res[u].circles)
        free = [k for k in range(nc) if k != m]
        for bits in itertools.product((0, 1), repeat=len(free)):
            labels = [None] * nc
            for k, b in zip(free, bits):
                labels[k] = b
            labels = tuple(labels)
            h, q = gradings(D, u, labels, reduced)
            gl = gens.setdefault(h, [])
            index[(u, labels)] = (h, len(gl))
            gl.append(Gen((u, labels), q))
    for k in range(-D.n_neg, n - D.n_neg + 1):
        gens.setdefault(k, [])
    d = {k: {} for k in gens}

    for u in states:
        ru = res[u]
        mu = marked_of(u)
        nc = len(ru.circles)
        for i in range(n):
            if u[i]:
                continue
            v = u[:i] + (1,) + u[i + 1:]
            rv = res[v]
            mv = marked_of(v)
            sign = -1 if sum(u[:i]) % 2 else 1
            cset = set(ru.circles)
            vset = set(rv.circles)
            old = [k for k, cc in enumerate(ru.circles) if cc not in vset]
            new = [k for k, cc in enumerate(rv.circles) if cc not in cset]
            same = {k: rv.circles.index(cc) for k, cc in enumerate(ru.circles) if cc in vset}
            for bits in itertools.product((0, 1), repeat=nc - (mu is not None)):
                src = [None] * nc
                it = iter(bits)
                for k in range(nc):
                    if k != mu:
                        src[k] = next(it)
                src = tuple(src)
                base = [None] * len(rv.circles)
                for k, kk in same.items():
                    base[kk] = src[k]
                images = _edge_map(src, old, new, mu, mv, base, c, lam, zero, one)
                h, j = index[(u, src)]
                colmap = d[h].setdefault(j, {})
                for labels, coef in images:
                    _, i2 = index[(v, labels)]
                    val = colmap.get(i2, zero) + sign * coef
                    if val:
                        colmap[i2] = val
                    else:
                        colmap.pop(i2, None)
    C = ChainComplex(R, gens, d)

    # Lee cycle on the Seifert state
    rs = res[seifert]
    ms = marked_of(seifert)
    per_circle = []
    for k in range(len(rs.circles)):
        if k == ms:
            per_circle.append([(None, one)])
        elif col.color[k] == "a":
            per_circle.append([(1, one)])
        else:
            per_circle.append([(0, -c), (1, one)])
    coords = {}
    h0 = None
    for combo in itertools.product(*per_circle):
        labels = tuple(l for l, _ in combo)
        coef = one
        for _, a in combo:
            coef = coef * a
        h0, j = index[(seifert, labels)]
        coords[j] = coef
    z = CycleVector(h0 if h0 is not None else 0, {j: a for j, a in coords.items() if a})
    if debug_enabled():
        if not C.check_d2():
            raise KhssError("cube complex fails d^2 = 0")
        if not C.is_cycle(z):
            raise NotACycle("Lee chain is not a cycle")
    return C, z


def _edge_map(src, old, new, mu, mv, base, c, lam, zero, one):
    """Images of one enhanced state under the merge/split map of a cube edge."""
    out = []

    def emit(assign, coef):
        labels = list(base)
        for k, l in assign.items():
            labels[k] = l
        out.append((tuple(labels), coef))

    if len(old) == 2:                       # merge
        k1, k2 = old
        (kn,) = new
        if mu is not None and mu in old:
            other = k2 if mu == k1 else k1
            x = src[other]
            emit({kn: None}, one if x == 0 else lam)
        else:
            x, y = src[k1], src[k2]
            if x == 0 and y == 0:
                emit({kn: 0}, one)
            elif x + y == 1:
                emit({kn: 1}, one)
            else:
                emit({kn: 1}, c)
    else:                                   # split
        (ko,) = old
        k1, k2 = new
        if mu is not None and mu == ko:
            keep, other = (k1, k2) if mv == k1 else (k2, k1)
            emit({keep: None, other: 1}, one)
            v = lam - c
            if v:
                emit({keep: None, other: 0}, v)
        else:
            x = src[ko]
            if x == 1:
                emit({k1: 1, k2: 1}, one)
            else:
                emit({k1: 1, k2: 0}, one)
                emit({k1: 0, k2: 1}, one)
                emit({k1: 0, k2: 0}, -c)
    return out
