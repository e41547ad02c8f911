import pytest

from khss.complex import ChainComplex, CycleVector, Gen, build_cube
from khss.diagram import parse_pd
from khss.errors import NotACycle, NotEuclidean, ZeroClassModTorsion
from khss.homology import class_divisibility, homology, homology_at, matmul, snf
from khss.rings import ring_from_cli


def test_snf_over_z():
    R = ring_from_cli("z")
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    S = snf(R, A)
    assert S.diagonal == [2, 6, 12]
    D = matmul(R, matmul(R, S.P, A), S.Q)
    assert D == [[2, 0, 0], [0, 6, 0], [0, 0, 12]]


def test_snf_rank_deficient_and_empty():
    R = ring_from_cli("z")
    S = snf(R, [[1, 2], [2, 4]])
    assert S.diagonal == [1]
    S = snf(R, [], cols=3)
    assert S.rank == 0 and S.cols == 3


def test_snf_polynomial():
    R = ring_from_cli("q-poly")
    H = R.H
    A = [[H, H * H], [R.zero, H * H * H]]
    S = snf(R, A)
    assert [R.fmt(a) for a in S.diagonal] == ["H", "H^3"]


def test_snf_needs_euclidean_ring():
    R = ring_from_cli("z-poly", "H")
    with pytest.raises(NotEuclidean):
        snf(R, [[R.H]])


def test_trefoil_homology():
    R = ring_from_cli("z", "2")
    D = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]", marked_edge=1)
    C, z = build_cube(D, R, reduced=True)
    H = homology(C)
    assert H[-3] == (0, [])
    assert H[-2] == (0, [2])
    assert H[-1] == (0, [])
    assert H[0] == (1, [])
    P = homology_at(C, 0, {"a": z})
    assert P.free_rank == 1
    assert class_divisibility(P, "a") == 1


def test_class_checks():
    R = ring_from_cli("z")
    C = ChainComplex(R, {0: [Gen("a", 0)], 1: [Gen("b", 0)]}, {0: {0: {0: 2}}})
    with pytest.raises(NotACycle):
        homology_at(C, 0, [CycleVector(0, {0: 1})])
    with pytest.raises(NotACycle):
        homology_at(C, 0, [CycleVector(1, {0: 1})])
    P = homology_at(C, 1, [CycleVector(1, {0: 1})])
    assert P.free_rank == 0 and P.torsion == [2]
    with pytest.raises(ZeroClassModTorsion):
        class_divisibility(P, 0)


def test_coordinates_ignore_boundaries(monkeypatch):
    monkeypatch.setenv("KHSS_DEBUG", "1")
    R = ring_from_cli("z", "3")
    # Z --3--> Z^2 (first coordinate) ; class (3, 1) is (0, 1) modulo the image
    C = ChainComplex(R, {0: [Gen("a", 0)], 1: [Gen("b", 0), Gen("c", 0)]}, {0: {0: {0: 3}}})
    P = homology_at(C, 1, {"z": CycleVector(1, {0: 3, 1: 9})})
    assert P.free_rank == 1 and P.torsion == [3]
    assert class_divisibility(P, "z") == 2
