"""Diagram generators and independent oracles shared by the tests."""

from __future__ import annotations

import csv
import random
from fractions import Fraction
from pathlib import Path

from khss.diagram import Diagram, renumber
from khss.rings import EisInt, GaussInt, Poly, ring_from_cli

DATA = Path(__file__).parent / "data"

SNF_RING_FLAGS = [("z", "2"), ("z", "3"), ("q-poly", "H"), ("f2-poly", "H"), ("f3-poly", "H"),
                  ("gauss", "1+i"), ("eisen", "1+w")]


def ring(t, c=None):
    return ring_from_cli(t, c)


# ---------------------------------------------------------------------------
# braid closures


def braid_closure(word, n: int, name=None) -> Diagram:
    """Closure of a braid word on ``n`` strands.

    Letters are nonzero integers: ``i`` is sigma_i (positive crossing), ``-i``
    its inverse.  Strands run upward; strands not touched by any letter become
    free loops.
    """
    pos = list(range(1, n + 1))          # current edge label at each position
    nxt = n + 1
    xs = []
    for g in word:
        i = abs(g) - 1
        x_in, y_in = pos[i], pos[i + 1]
        x_out, y_out = nxt, nxt + 1
        nxt += 2
        if g > 0:
            xs.append([y_in, x_out, y_out, x_in])
        else:
            xs.append([x_in, y_in, x_out, y_out])
        pos[i], pos[i + 1] = y_out, x_out
    # close up: the label leaving the top at position p is the one entering at p
    close = {pos[p]: p + 1 for p in range(n)}
    xs = [[close.get(e, e) for e in x] for x in xs]
    used = {e for x in xs for e in x}
    loops = [p for p in range(1, n + 1) if p not in used]
    return renumber(Diagram(xs, loops, None, name))


def random_braid(rng: random.Random, n: int, length: int, positive=False):
    word = []
    for _ in range(length):
        g = rng.randint(1, n - 1)
        if not positive and rng.random() < 0.5:
            g = -g
        word.append(g)
    return word


def random_knot_braid(rng, max_crossings=7, positive=False, min_crossings=1):
    """A braid word whose closure is a knot using every generator."""
    while True:
        n = rng.randint(2, 4)
        length = rng.randint(max(min_crossings, n - 1), max_crossings)
        w = random_braid(rng, n, length, positive)
        if {abs(g) for g in w} != set(range(1, n)):
            continue
        D = braid_closure(w, n)
        if D.n_components == 1:
            return w, n, D


def random_link_braid(rng, max_crossings=7):
    while True:
        n = rng.randint(2, 4)
        w = random_braid(rng, n, rng.randint(n - 1, max_crossings))
        if {abs(g) for g in w} == set(range(1, n)):
            return w, n, braid_closure(w, n)


# ---------------------------------------------------------------------------
# Reidemeister moves on PD codes

KINKS = ("neg_a", "pos_a", "pos_b", "neg_b")


def add_kink(D: Diagram, edge: int, kind: str) -> Diagram:
    """Insert a curl on ``edge``.  Returns a diagram with consecutive labels."""
    e1 = edge
    e2 = max(D.edges) + 1
    l = e2 + 1
    hx, hp = D.head[edge]
    xs = [list(x) for x in D.crossings]
    xs[hx][hp] = e2
    if kind == "neg_a":
        new = [e1, l, l, e2]
    elif kind == "pos_a":
        new = [e1, e2, l, l]
    elif kind == "pos_b":
        new = [l, l, e2, e1]
    elif kind == "neg_b":
        new = [l, e1, e2, l]
    else:
        raise ValueError(kind)
    xs.append(new)
    mark = D.marked_edge
    return renumber(Diagram(xs, D.loops, mark, D.name), start_edge=mark)


def insert_r2(word, rng):
    """Insert a cancelling pair sigma_i^e sigma_i^-e at a random position."""
    n = max(abs(g) for g in word) + 1
    i = rng.randint(1, n - 1)
    e = rng.choice((1, -1))
    k = rng.randint(0, len(word))
    return word[:k] + [e * i, -e * i] + word[k:]


# ---------------------------------------------------------------------------
# signature oracle (Gordon-Litherland form of a checkerboard surface)


def _corner(D, x, i):
    y, j = D.other_end((x, (i + 1) % 4))
    return D.face_of_dart[(y, j)]


def checkerboard(D: Diagram) -> dict:
    """Face index -> 0/1 with adjacent faces of different shade."""
    nf = len(D.faces)
    adj = {f: set() for f in range(nf)}
    for x in range(D.n_crossings):
        for i in range(4):
            a, b = _corner(D, x, i), _corner(D, x, i + 1)
            adj[a].add(b)
            adj[b].add(a)
    shade = {}
    for f in range(nf):
        if f in shade:
            continue
        shade[f] = 0
        stack = [f]
        while stack:
            g = stack.pop()
            for h in adj[g]:
                if h not in shade:
                    shade[h] = 1 - shade[g]
                    stack.append(h)
                elif shade[h] == shade[g]:
                    raise ValueError("diagram regions are not two-colorable")
    return shade


def symmetric_signature(M) -> int:
    """Signature of a rational symmetric matrix by congruence diagonalization."""
    A = [[Fraction(v) for v in row] for row in M]
    n = len(A)
    sig = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if A[i][i] != 0), None)
        if p is None:
            q = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if q is None:
                break
            i, j = q
            # row/col i += row/col j makes a nonzero diagonal entry
            for t in range(n):
                A[i][t] += A[j][t]
            for t in range(n):
                A[t][i] += A[t][j]
            if A[i][i] == 0:
                for t in range(n):
                    A[i][t] -= 2 * A[j][t]
                for t in range(n):
                    A[t][i] -= 2 * A[t][j]
            p = i
        A[k], A[p] = A[p], A[k]
        for row in A:
            row[k], row[p] = row[p], row[k]
        piv = A[k][k]
        sig += 1 if piv > 0 else -1
        for i in range(k + 1, n):
            f = A[i][k] / piv
            if f:
                for t in range(k, n):
                    A[i][t] -= f * A[k][t]
        for i in range(k + 1, n):
            A[k][i] = A[i][k] = Fraction(0)
        k += 1
    return sig


def goeritz_signature(D: Diagram, surface_shade: int = 1) -> int:
    """Knot signature from a checkerboard surface, normalized so that positive
    knots have positive signature.

    The surface is the union of the faces of shade ``surface_shade``; the
    Goeritz form lives on the other faces, and crossings at which the Seifert
    smoothing joins the surface corners contribute the correction term.
    """
    shade = checkerboard(D)
    white = sorted(f for f, s in shade.items() if s != surface_shade)
    idx = {f: k for k, f in enumerate(white)}
    n = len(white)
    G = [[0] * n for _ in range(n)]
    mu = 0
    state = D.seifert_state()
    for x in range(D.n_crossings):
        corners = [_corner(D, x, i) for i in range(4)]
        w_pair = (1, 3) if shade[corners[1]] != surface_shade else (0, 2)
        eta = 1 if w_pair == (1, 3) else -1
        f, g = corners[w_pair[0]], corners[w_pair[1]]
        if f != g:
            i, j = idx[f], idx[g]
            G[i][j] -= eta
            G[j][i] -= eta
            G[i][i] += eta
            G[j][j] += eta
        merged = (1, 3) if state[x] == 0 else (0, 2)
        if merged != w_pair:
            mu += eta
    G = [row[1:] for row in G[1:]]
    return symmetric_signature(G) - mu


def load_reference() -> dict:
    out = {}
    with open(DATA / "knot_reference.tsv", encoding="utf-8") as f:
        rows = [line for line in f if not line.startswith("#")]
    for row in csv.DictReader(rows, fieldnames=["name", "alternating", "signature", "rasmussen"],
                              delimiter="\t"):
        out[row["name"]] = {
            "alternating": row["alternating"] == "Y",
            "signature": int(row["signature"]),
            "rasmussen": int(row["rasmussen"]),
        }
    return out


# ---------------------------------------------------------------------------
# random ring elements


def random_element(R, rng: random.Random, size: int = 6):
    k = R.kind
    if k == "Z":
        return rng.randint(-size * 3, size * 3)
    if k == "Z_gauss":
        return GaussInt(rng.randint(-size, size), rng.randint(-size, size))
    if k == "Z_eisenstein6":
        return EisInt(rng.randint(-size, size), rng.randint(-size, size))
    deg = rng.randint(-1, 3)
    if deg < 0:
        return R.zero
    if R.mod == -1 or R.mod > 0:
        cs = [rng.randint(-size, size) for _ in range(deg + 1)]
    else:
        cs = [Fraction(rng.randint(-size, size), rng.randint(1, 3)) for _ in range(deg + 1)]
    return Poly(cs, R.mod)


# ---------------------------------------------------------------------------
# homology of a full cube, by a separate elimination routine


def cube_invariants(C, z):
    """Homology signature and Lee-class divisibility of a big complex.

    Unit entries are cancelled one at a time (Gaussian elimination written
    independently of the package), then the small remainder goes through
    Smith normal form.
    """
    from khss.complex import ChainComplex, CycleVector, Gen
    from khss.homology import class_divisibility, homology, homology_at

    R = C.ring
    out = {}      # (k, j) -> {(k+1, i): v}
    inn = {}
    for k in C.degrees:
        for j in range(C.rank(k)):
            out[(k, j)] = {}
            inn[(k, j)] = {}
    for k in C.degrees:
        for i, j, v in C.entries(k):
            out[(k, j)][(k + 1, i)] = v
            inn[(k + 1, i)][(k, j)] = v
    cyc = {(z.degree, i): a for i, a in z.coords.items() if a}
    while True:
        best = None
        for b, row in out.items():
            for a, u in row.items():
                if R.is_unit(u):
                    cost = (len(row) - 1) * (len(inn[a]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, b, a, u)
                    if cost == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, b, a, u = best
        ui = R.inv(u)
        targets = {t: v for t, v in out[b].items() if t != a}
        sources = {s: v for s, v in inn[a].items() if s != b}
        for s, phi in sources.items():
            f = phi * ui
            for t, v in targets.items():
                w = out[s].get(t, R.zero) - f * v
                if w:
                    out[s][t] = w
                    inn[t][s] = w
                else:
                    out[s].pop(t, None)
                    inn[t].pop(s, None)
        if a in cyc:
            f = cyc[a] * ui
            for t, v in targets.items():
                w = cyc.get(t, R.zero) - f * v
                if w:
                    cyc[t] = w
                else:
                    cyc.pop(t, None)
        cyc.pop(a, None)
        cyc.pop(b, None)
        for g in (a, b):
            for t in out[g]:
                inn[t].pop(g, None)
            for s in inn[g]:
                out[s].pop(g, None)
            del out[g]
            del inn[g]
    # rebuild a small complex
    gens = {}
    index = {}
    for (k, j) in sorted(out):
        index[(k, j)] = len(gens.setdefault(k, []))
        gens[k].append(Gen((k, j), 0))
    d = {k: {} for k in gens}
    for g, row in out.items():
        for t, v in row.items():
            d[g[0]].setdefault(index[g], {})[index[t]] = v
    small = ChainComplex(R, gens, d)
    zz = CycleVector(z.degree, {index[g]: v for g, v in cyc.items()})
    sig = {k: (f, sorted(R.fmt(t) for t in tors)) for k, (f, tors) in homology(small).items() if f or tors}
    try:
        div = class_divisibility(homology_at(small, z.degree, [zz]))
    except Exception as e:
        div = type(e).__name__
    return sig, div


def pipeline_invariants(C, z):
    from khss.homology import class_divisibility, homology, homology_at

    R = C.ring
    sig = {k: (f, sorted(R.fmt(t) for t in tors)) for k, (f, tors) in homology(C).items() if f or tors}
    try:
        div = class_divisibility(homology_at(C, z.degree, [z]))
    except Exception as e:
        div = type(e).__name__
    return sig, div
