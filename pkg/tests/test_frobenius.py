import pytest

from khss.diagram import knot, parse_pd
from khss.errors import MarkRequiredForReduced, MixedRings
from khss.frobenius import (
    X,
    X_a,
    X_b,
    AlgebraElement,
    comultiply,
    counit,
    delta_power,
    lee_chain,
    unit,
)
from khss.rings import ring_from_cli

Z2 = ring_from_cli("z", "2")


def test_relation_and_roots():
    R = ring_from_cli("z", "3")
    x = X(R)
    assert x * x == x.scale(R.c)
    assert X_a(R) * X_b(R) == AlgebraElement(0, 0, R)
    # the handle element squares to c^2
    h = x.scale(2) - unit(R).scale(R.c)
    assert h * h == unit(R).scale(R.c * R.c)


def test_comultiplication_formulas():
    R = Z2
    assert comultiply(unit(R)) == {(1, 0): 1, (0, 1): 1, (0, 0): -2}
    assert comultiply(X(R)) == {(1, 1): 1}
    assert counit(unit(R)) == 0 and counit(X(R)) == 1


def test_x_a_and_x_b_are_eigenvectors():
    R = ring_from_cli("gauss")
    for z, lam in ((X_a(R), R.c), (X_b(R), R.zero)):
        assert X(R) * z == z.scale(lam)


def test_delta_power_matches_iterated_coproduct():
    R = ring_from_cli("z", "3")
    c = R.c
    # Delta^(2)(1) coefficients: 1(x)1 -> -c, one X -> 1, X(x)X -> 0
    assert delta_power(1, 0, 2, 0, c) == -c
    assert delta_power(1, 0, 2, 1, c) == 1
    assert delta_power(1, 0, 2, 2, c) == 0
    assert delta_power(0, 1, 3, 3, c) == 1
    assert delta_power(5, 7, 0, 0, c) == 7


def test_mixed_rings():
    with pytest.raises(MixedRings):
        unit(Z2) + unit(ring_from_cli("z", "3"))


def test_lee_chain_trefoil():
    D = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]")
    L = lee_chain(D, Z2)
    assert L.state == (1, 1, 1)
    assert sorted(L.colors.values()) == ["a", "b"]
    with pytest.raises(MarkRequiredForReduced):
        lee_chain(D, Z2, reduced=True)
    Lr = lee_chain(D.with_mark(1), Z2, reduced=True)
    assert len(Lr.factors) == 1


def test_lee_chain_factors_match_colors():
    R = ring_from_cli("eisen")
    L = lee_chain(knot("6_2"), R)
    for k, col in L.colors.items():
        assert L.factors[k] == (X_a(R) if col == "a" else X_b(R))
