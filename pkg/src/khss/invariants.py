"""Slice-torus invariants from the c-divisibility of Lee classes.

For a diagram D with writhe w and r Seifert circles,

    s = 2 d + w - r + 1,

where d is the c-divisibility of the (reduced or unreduced) Lee class modulo
torsion.  Over (F[H], H) this is the Rasmussen invariant s^F.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import ChainComplex, CycleVector
from .diagram import Diagram, add_pointed_unknot, mirror, seifert_data
from .errors import KhssError, NotEuclidean
from .homology import class_divisibility, homology, homology_at
from .rings import RingSpec
from .simplify import simplify_diagram

LEE = "alpha"


@dataclass
class InvariantReport:
    ring: RingSpec
    reduced: bool
    d_c: int
    w: int
    r: int
    s: int
    lee_coords: list
    complex_summary: dict = field(default_factory=dict)
    components: int = 1
    name: str | None = None

    def line(self) -> str:
        kind = "reduced" if self.reduced else "unreduced"
        return (f"{self.name or '?'} {self.ring.name} c={self.ring.fmt(self.ring.c)} {kind}: "
                f"d={self.d_c} w={self.w} r={self.r} s={self.s}")

    def csv_fields(self) -> list:
        return [self.d_c, self.w, self.r, self.s]


def _default_mark(D: Diagram) -> Diagram:
    if D.marked_edge is not None:
        return D
    return D.with_mark(D.edges[0])


def _require_snf(R: RingSpec):
    if not R.snf_capable:
        raise NotEuclidean(f"invariants need a Euclidean ring; {R.name} is not one")


def lee_divisibility(C: ChainComplex, z: CycleVector):
    P = homology_at(C, 0, {LEE: z})
    return class_divisibility(P, LEE), P


def _report(D, R, reduced, C, z) -> InvariantReport:
    d, P = lee_divisibility(C, z)
    r, w, _ = seifert_data(D)
    s = 2 * d + w - r + 1
    summary = {k: v for k, v in homology(C).items()} if C.degrees else {}
    return InvariantReport(R, reduced, d, w, r, s, P.class_coords[LEE], summary,
                           D.n_components, D.name)


def reduced_s(D: Diagram, R: RingSpec) -> InvariantReport:
    """s~s_c from the reduced Lee class (default mark: smallest edge label)."""
    _require_snf(R)
    D = _default_mark(D)
    C, z = simplify_diagram(D, R, reduced=True)
    return _report(D, R, True, C, z)


def unreduced_s(D: Diagram, R: RingSpec) -> InvariantReport:
    """ss_c from the unreduced Lee class, computed on D itself."""
    _require_snf(R)
    C, z = simplify_diagram(D, R, reduced=False)
    return _report(D, R, False, C, z)


def unreduced_via_plus(D: Diagram, R: RingSpec) -> InvariantReport:
    """ss_c through the reduced theory of D with a pointed unknot added."""
    _require_snf(R)
    Dp = add_pointed_unknot(D)
    C, z = simplify_diagram(Dp, R, reduced=True)
    d, P = lee_divisibility(C, z)
    r, w, _ = seifert_data(D)
    return InvariantReport(R, False, d, w, r, 2 * d + w - r + 1, P.class_coords[LEE],
                           {}, D.n_components, D.name)


def epsilon_c(D: Diagram, R: RingSpec) -> int:
    """ss_c - s~s_c, which is 0 or 2."""
    e = unreduced_s(D, R).s - reduced_s(D, R).s
    if e not in (0, 2):
        raise KhssError(f"epsilon = {e} is outside {{0, 2}}")
    return e


def refined_class(D: Diagram, R: RingSpec) -> list:
    """Free-part coordinates of c^(-d) times the reduced Lee class."""
    rep = reduced_s(D, R)
    ck = R.c ** rep.d_c if rep.d_c else R.one
    out = []
    for a in rep.lee_coords:
        q = R.exact_div(a, ck)
        assert q is not None
        out.append(q)
    return out


def mirror_check(D: Diagram, R: RingSpec, reduced: bool = True):
    """``(s(D), s(mirror D), s(mirror D) == -s(D))``."""
    f = reduced_s if reduced else unreduced_s
    a = f(D, R).s
    b = f(mirror(D), R).s
    return a, b, a == -b

