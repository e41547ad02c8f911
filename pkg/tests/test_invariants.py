import pytest

from khss.diagram import disjoint_union, knot, mirror, parse_pd, unknot
from khss.errors import NotEuclidean
from khss.invariants import (
    epsilon_c,
    mirror_check,
    reduced_s,
    refined_class,
    unreduced_s,
    unreduced_via_plus,
)
from khss.rings import ring_from_cli

Z2 = ring_from_cli("z", "2")
Z3 = ring_from_cli("z", "3")


def test_trefoil_report():
    rep = reduced_s(knot("3_1"), Z2)
    assert (rep.d_c, rep.w, rep.r, rep.s) == (1, -3, 2, -2)
    assert rep.s == 2 * rep.d_c + rep.w - rep.r + 1
    assert "s=-2" in rep.line()
    assert rep.csv_fields() == [1, -3, 2, -2]


def test_unknot_values():
    for R in (Z2, Z3, ring_from_cli("gauss")):
        assert reduced_s(unknot(), R).s == 0
        assert unreduced_s(unknot(), R).s == 0


def test_unreduced_paths_agree():
    for name in ("3_1", "4_1", "5_2", "6_2"):
        for R in (Z2, Z3, ring_from_cli("f3-poly")):
            D = knot(name)
            assert unreduced_s(D, R).s == unreduced_via_plus(D, R).s


def test_epsilon():
    for name in ("3_1", "5_1", "6_3"):
        assert epsilon_c(knot(name), Z2) == 0
        assert epsilon_c(knot(name), Z3) in (0, 2)


def test_refined_class():
    assert refined_class(knot("3_1"), Z2) in ([1], [-1])
    assert refined_class(unknot(), Z2) == [1]
    coords = refined_class(knot("4_1"), Z2)
    g = 0
    for a in coords:
        g = Z2.gcd(g, a)
    assert g == 1


def test_mirror_check():
    assert mirror_check(knot("3_1"), Z2) == (-2, 2, True)
    assert mirror_check(unknot(), Z3) == (0, 0, True)


def test_disjoint_circle_drops_s_by_one():
    D = knot("5_2").with_mark(1)
    for R in (Z2, Z3):
        a = reduced_s(D, R)
        b = reduced_s(disjoint_union(D, unknot()), R)
        assert b.d_c == a.d_c
        assert b.s == a.s - 1


def test_link_parity():
    hopf = parse_pd("[[1,3,2,4],[3,1,4,2]]")
    assert reduced_s(hopf, Z2).s % 2 == 1
    assert reduced_s(mirror(hopf), Z3).s % 2 == 1


def test_needs_euclidean_ring():
    with pytest.raises(NotEuclidean):
        reduced_s(knot("3_1"), ring_from_cli("z-poly", "H"))
