import pytest

from khss.complex import build_cube
from khss.diagram import add_pointed_unknot, disjoint_union, knot, parse_pd, unknot
from khss.homology import class_divisibility, homology, homology_at
from khss.rings import ring_from_cli
from khss.simplify import boundary_widths, scan_order, simplify_diagram

from helpers import braid_closure

TREFOIL = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]", name="3_1")
K14 = parse_pd("[[1,19,2,18],[19,1,20,28],[20,13,21,14],[12,17,13,18],[16,21,17,22],[5,15,6,14],"
               "[15,5,16,4],[6,27,7,28],[2,7,3,8],[26,3,27,4],[25,23,26,22],[11,9,12,8],"
               "[23,10,24,11],[9,24,10,25]]", name="K14n19265", marked_edge=1)


def test_scan_order_is_permutation_with_small_boundary():
    order = scan_order(K14)
    assert sorted(order) == list(range(14))
    assert max(boundary_widths(K14, order)) <= 16


def test_trefoil_golden_complex():
    R = ring_from_cli("z", "2")
    C, z = simplify_diagram(TREFOIL.with_mark(1), R, reduced=True)
    assert C.ranks() == {-3: 1, -2: 1, -1: 0, 0: 1}
    assert C.matrix(-3) == [[2]] or C.matrix(-3) == [[-2]]
    assert z.dense(1, 0) in ([2], [-2])
    P = homology_at(C, 0, [z])
    assert class_divisibility(P) == 1


def _signature(C):
    return {k: (f, sorted(map(str, t))) for k, (f, t) in homology(C).items() if f or t}


def _div(C, z):
    return class_divisibility(homology_at(C, 0, [z]))


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2", "6_1"])
@pytest.mark.parametrize("reduced", [False, True])
def test_matches_cube(name, reduced):
    D = knot(name).with_mark(1)
    for t, c in (("z", "2"), ("z", "3"), ("gauss", "1+i"), ("q-poly", "H")):
        R = ring_from_cli(t, c)
        C1, z1 = simplify_diagram(D, R, reduced=reduced, check=True)
        C2, z2 = build_cube(D, R, reduced=reduced)
        assert _signature(C1) == _signature(C2)
        assert _div(C1, z1) == _div(C2, z2)


def test_free_loops_and_pointed_unknot():
    R = ring_from_cli("z", "3")
    for D in (unknot(marked=True), add_pointed_unknot(knot("3_1")),
              disjoint_union(knot("3_1").with_mark(1), unknot())):
        for reduced in (False, True):
            C1, z1 = simplify_diagram(D, R, reduced=reduced, check=True)
            C2, z2 = build_cube(D, R, reduced=reduced)
            assert _signature(C1) == _signature(C2)
            assert _div(C1, z1) == _div(C2, z2)


def test_unknot_complex():
    R = ring_from_cli("eisen")
    C, z = simplify_diagram(unknot(marked=True), R, reduced=True)
    assert C.summary() == "Z[w]^1[0]"
    assert z.dense(1, R.zero) == [R.one]


def test_custom_order_gives_same_homology():
    R = ring_from_cli("z", "2")
    D = braid_closure([1, -2, 1, -2, 1], 3).with_mark(1)
    base = _signature(simplify_diagram(D, R, reduced=True)[0])
    for order in ([4, 3, 2, 1, 0], [2, 0, 4, 1, 3]):
        C, z = simplify_diagram(D, R, reduced=True, order=order, check=True)
        assert _signature(C) == base


def test_stats():
    st = {}
    simplify_diagram(knot("5_1").with_mark(1), ring_from_cli("z"), reduced=True, stats=st)
    assert st["eliminations"] > 0 and st["max_gens"] > 0
    assert sorted(st["order"]) == list(range(5))


def test_k14_over_z_poly():
    """Simplification over Z[H] without homology: shape of the degree 0 block."""
    R = ring_from_cli("z-poly", "H")
    C, z = simplify_diagram(K14, R, reduced=True)
    assert C.rank(0) == 4
    nz = [v for row in C.matrix(0) for v in row if v]
    assert len(nz) == 1 and R.canonical_associate(nz[0]) == R.H
    H4 = R.H ** 4
    alpha = z.dense(4, R.zero)
    assert all(R.valuation(a) >= 4 for a in alpha if a)
    # alpha is H^4 times a cycle basis vector, modulo one boundary
    kernel = [j for j in range(4) if not any(row[j] for row in C.matrix(0))]
    B = C.matrix(-1)
    found = False
    for g in kernel:
        target = [a - (H4 if i == g else R.zero) for i, a in enumerate(alpha)]
        if not any(target):
            found = True
        for j in range(C.rank(-1)):
            col = [B[i][j] for i in range(4)]
            piv = next((i for i in range(4) if col[i]), None)
            if piv is None:
                continue
            t = R.exact_div(target[piv], col[piv])
            if t is not None and all(target[i] == t * col[i] for i in range(4)):
                found = True
    assert found
