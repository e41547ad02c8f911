"""Smith normal form and homology presentations over Euclidean rings."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .complex import ChainComplex, CycleVector, debug_enabled
from .errors import KhssError, NotACycle, NotEuclidean, ZeroClassModTorsion
from .rings import RingSpec


def identity(R: RingSpec, n: int) -> list:
    return [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]


def matmul(R: RingSpec, A: list, B: list) -> list:
    if not A:
        return []
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [R.zero] * n
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def matvec(R: RingSpec, A: list, x: list) -> list:
    out = []
    for row in A:
        acc = R.zero
        for a, b in zip(row, x):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


@dataclass
class SNFResult:
    diagonal: list          # nonzero invariant factors d1 | d2 | ... (canonical)
    rows: int
    cols: int
    P: list | None = None
    Pinv: list | None = None
    Q: list | None = None
    Qinv: list | None = None

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def snf(R: RingSpec, A: list, transforms: bool = True, cols: int | None = None) -> SNFResult:
    """Smith normal form ``S = P A Q`` of a dense matrix (list of rows)."""
    if not R.snf_capable:
        raise NotEuclidean(f"Smith normal form is not available over {R.name}")
    m = len(A)
    n = len(A[0]) if m else (cols or 0)
    M = [list(r) for r in A]
    P = identity(R, m) if transforms else None
    Pi = identity(R, m) if transforms else None
    Q = identity(R, n) if transforms else None
    Qi = identity(R, n) if transforms else None
    size = R.size

    def swap_rows(i, j):
        if i == j:
            return
        M[i], M[j] = M[j], M[i]
        if transforms:
            P[i], P[j] = P[j], P[i]
            for row in Pi:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in M:
            row[i], row[j] = row[j], row[i]
        if transforms:
            for row in Q:
                row[i], row[j] = row[j], row[i]
            Qi[i], Qi[j] = Qi[j], Qi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        rs, rd = M[src], M[dst]
        for k in range(n):
            if rs[k]:
                rd[k] = rd[k] + q * rs[k]
        if transforms:
            Ps, Pd = P[src], P[dst]
            for k in range(m):
                if Ps[k]:
                    Pd[k] = Pd[k] + q * Ps[k]
            for row in Pi:
                if row[dst]:
                    row[src] = row[src] - q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for row in M:
            if row[src]:
                row[dst] = row[dst] + q * row[src]
        if transforms:
            for row in Q:
                if row[src]:
                    row[dst] = row[dst] + q * row[src]
            Qs, Qd = Qi[src], Qi[dst]
            for k in range(n):
                if Qd[k]:
                    Qs[k] = Qs[k] - q * Qd[k]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                if row[j]:
                    s = size(row[j])
                    if best is None or s < best[0]:
                        best = (s, i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            piv = M[t][t]
            moved = False
            for i in range(t + 1, m):
                if M[i][t]:
                    q, r = R.divmod(M[i][t], piv)
                    add_row(i, t, -q)
                    if r:
                        moved = True
            for j in range(t + 1, n):
                if M[t][j]:
                    q, r = R.divmod(M[t][j], piv)
                    add_col(j, t, -q)
                    if r:
                        moved = True
            if moved:
                best = (size(piv), t, t)
                for i in range(t + 1, m):
                    if M[i][t] and size(M[i][t]) < best[0]:
                        best = (size(M[i][t]), i, t)
                for j in range(t + 1, n):
                    if M[t][j] and size(M[t][j]) < best[0]:
                        best = (size(M[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if M[i][j] and R.exact_div(M[i][j], piv) is None:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, R.one)
        y, u = R.normalize(M[t][t])
        if u != R.one:
            M[t] = [u * a for a in M[t]]
            if transforms:
                P[t] = [u * a for a in P[t]]
                ui = R.inv(u)
                for row in Pi:
                    row[t] = row[t] * ui
        diag.append(M[t][t])
        t += 1
    for i in range(m):
        for j in range(n):
            if M[i][j] and not (i == j and i < len(diag)):
                raise KhssError("Smith normal form left an off-diagonal entry")
    return SNFResult(diag, m, n, P, Pi, Q, Qi)


# ---------------------------------------------------------------------------


@dataclass
class HomologyPresentation:
    ring: RingSpec
    degree: int
    free_rank: int
    torsion: list
    class_coords: dict = field(default_factory=dict)

    def signature(self):
        """Basis-independent shape: free rank and sorted torsion factors."""
        return self.free_rank, sorted(self.ring.fmt(t) for t in self.torsion)


def homology_at(C: ChainComplex, k: int, classes=None) -> HomologyPresentation:
    """H^k = ker d^k / im d^{k-1} with coordinates of ``classes`` in the free part.

    ``classes`` is a mapping name -> CycleVector (or a list, named 0, 1, ...).
    """
    R = C.ring
    if not R.snf_capable:
        raise NotEuclidean(f"homology over {R.name} is not supported")
    if classes is None:
        classes = {}
    elif not isinstance(classes, dict):
        classes = dict(enumerate(classes))
    nk = C.rank(k)
    for name, z in classes.items():
        if z.degree != k:
            raise NotACycle(f"class {name!r} lives in degree {z.degree}, not {k}")
        if not C.is_cycle(z):
            raise NotACycle(f"class {name!r} is not a cycle")
    out = C.matrix(k)
    inc = C.matrix(k - 1)
    S1 = snf(R, out, transforms=True, cols=nk) if out else SNFResult([], 0, nk, [], [], identity(R, nk), identity(R, nk))
    r = S1.rank
    kdim = nk - r
    # image of d^{k-1} in kernel coordinates
    if inc and inc[0]:
        W = matmul(R, S1.Qinv, inc)
        for i in range(r):
            if any(W[i]):
                raise KhssError("d^k d^(k-1) != 0")
        N = W[r:]
    else:
        N = []
    ncols = len(inc[0]) if inc else 0
    if N and ncols:
        S2 = snf(R, N, transforms=True)
    else:
        S2 = SNFResult([], kdim, ncols, identity(R, kdim), identity(R, kdim), None, None)
    r2 = S2.rank
    torsion = [a for a in S2.diagonal if not R.is_unit(a)]
    free = kdim - r2
    coords = {}
    for name, z in classes.items():
        vec = z.dense(nk, R.zero)
        w = matvec(R, S1.Qinv, vec)[r:]
        y = matvec(R, S2.P, w)
        coords[name] = y[r2:]
    P = HomologyPresentation(R, k, free, torsion, coords)
    if debug_enabled() and classes:
        _check_lift_independence(C, k, classes, P, inc)
    return P


def _check_lift_independence(C, k, classes, P, inc):
    R = C.ring
    if not inc or not inc[0]:
        return
    for name, z in classes.items():
        col = [row[0] for row in inc]
        shifted = CycleVector(k, dict(z.coords))
        for i, a in enumerate(col):
            if a:
                shifted.coords[i] = shifted.coords.get(i, R.zero) + a
        again = homology_at_plain(C, k, {name: shifted})
        if again.class_coords[name] != P.class_coords[name]:
            raise KhssError("class coordinates depend on the chosen lift")


def homology_at_plain(C, k, classes):
    import os
    old = os.environ.get("KHSS_DEBUG")
    os.environ["KHSS_DEBUG"] = "0"
    try:
        return homology_at(C, k, classes)
    finally:
        if old is None:
            del os.environ["KHSS_DEBUG"]
        else:
            os.environ["KHSS_DEBUG"] = old


def homology(C: ChainComplex) -> dict:
    """Degree -> (free rank, torsion factors) for the whole complex."""
    R = C.ring
    if not R.snf_capable:
        raise NotEuclidean(f"homology over {R.name} is not supported")
    ranks = {}
    factors = {}
    for k in C.degrees + [C.degrees[-1] + 1] if C.degrees else []:
        M = C.matrix(k)
        if M and M[0]:
            S = snf(R, M, transforms=False)
            ranks[k], factors[k] = S.rank, S.diagonal
        else:
            ranks[k], factors[k] = 0, []
    out = {}
    for k in C.degrees:
        free = C.rank(k) - ranks.get(k, 0) - ranks.get(k - 1, 0)
        tors = [a for a in factors.get(k - 1, []) if not R.is_unit(a)]
        out[k] = (free, tors)
    return out


def class_divisibility(P: HomologyPresentation, name=0, c=None) -> int:
    """Largest k with the class in c^k (H/Tor)."""
    R = P.ring
    coords = P.class_coords[name]
    vals = [R.valuation(a, c) for a in coords if a]
    if not vals:
        raise ZeroClassModTorsion(f"class {name!r} vanishes modulo torsion")
    v = min(vals)
    assert v != math.inf
    return v
