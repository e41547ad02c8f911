import itertools

import pytest

from khss.complex import ChainComplex, CycleVector, Gen, build_cube, gradings
from khss.diagram import knot, parse_pd, resolve
from khss.errors import MarkRequiredForReduced, TooLargeForCube
from khss.homology import homology
from khss.rings import ring_from_cli

TREFOIL = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]")


def _cube_size(D, reduced):
    n = 0
    for u in itertools.product((0, 1), repeat=D.n_crossings):
        k = len(resolve(D, u))
        n += 2 ** (k - 1 if reduced else k)
    return n


@pytest.mark.parametrize("reduced", [False, True])
def test_cube_shape_and_d2(reduced):
    D = TREFOIL.with_mark(1)
    for t, c in (("z", "2"), ("f3-poly", "H"), ("z-poly", "H")):
        R = ring_from_cli(t, c)
        C, z = build_cube(D, R, reduced=reduced)
        assert C.total_rank() == _cube_size(D, reduced)
        assert C.degrees == [-3, -2, -1, 0]
        assert C.check_d2()
        assert z.degree == 0 and C.is_cycle(z)


def test_gradings():
    D = TREFOIL
    # Seifert state (1,1,1) sits in homological degree 0
    assert gradings(D, (1, 1, 1), (0, 1))[0] == 0
    h, q = gradings(D, (0, 0, 0), (0, 0, 0))
    assert h == -3 and q == 3 - 6
    # the marked circle contributes nothing to q
    assert gradings(D, (1, 1, 1), (None, 1), reduced=True)[1] == gradings(D, (1, 1, 1), (0, 1))[1] - 1


def test_cube_guards():
    R = ring_from_cli("z")
    with pytest.raises(MarkRequiredForReduced):
        build_cube(TREFOIL, R, reduced=True)
    with pytest.raises(TooLargeForCube):
        build_cube(knot("8_1"), R, cap=7)


def test_reduce_keeps_homology_and_cycle():
    R = ring_from_cli("z", "2")
    C, z = build_cube(knot("4_1").with_mark(1), R, reduced=True)
    C2, (z2,) = C.reduce([z])
    assert not C2.has_unit_entries()
    assert C2.total_rank() < C.total_rank()
    assert homology(C2) == homology(C)
    assert C2.is_cycle(z2) and z2.coords


def test_matrix_layout():
    R = ring_from_cli("z")
    C = ChainComplex(R, {0: [Gen("a", 0), Gen("b", 2)], 1: [Gen("c", 2)]},
                     {0: {0: {0: 2}, 1: {0: -1}}})
    assert C.matrix(0) == [[2, -1]]
    assert C.apply(0, {0: 1, 1: 2}) == {}
    assert C.is_cycle(CycleVector(0, {0: 1, 1: 2}))
    C2, (z,) = C.reduce([CycleVector(0, {0: 1, 1: 2})])
    assert C2.ranks() == {0: 1}
    assert C2.summary() == "Z^1[0]"
