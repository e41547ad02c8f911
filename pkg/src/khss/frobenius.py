"""The Frobenius algebra A = R[X]/(X^2 - cX) and Lee cycles.

The theory is normalized to h = c, t = 0, with roots a = 0 and b = c, so
``X_a = X`` and ``X_b = X - c``.  Elements are pairs ``(u, v)`` standing for
``u*1 + v*X``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, ab_coloring
from .errors import MarkRequiredForReduced, MixedRings
from .rings import RingSpec


@dataclass(frozen=True)
class AlgebraElement:
    u: object
    v: object
    ring: RingSpec

    def __add__(self, o):
        self._same(o)
        return AlgebraElement(self.u + o.u, self.v + o.v, self.ring)

    def __sub__(self, o):
        self._same(o)
        return AlgebraElement(self.u - o.u, self.v - o.v, self.ring)

    def __neg__(self):
        return AlgebraElement(-self.u, -self.v, self.ring)

    def scale(self, k):
        return AlgebraElement(k * self.u, k * self.v, self.ring)

    def __mul__(self, o):
        return multiply(self, o)

    def _same(self, o):
        if not isinstance(o, AlgebraElement) or o.ring != self.ring:
            raise MixedRings("algebra elements over different rings")

    def __repr__(self):
        return f"({self.u})1 + ({self.v})X"


def unit(R: RingSpec) -> AlgebraElement:
    return AlgebraElement(R.one, R.zero, R)


def X(R: RingSpec) -> AlgebraElement:
    return AlgebraElement(R.zero, R.one, R)


def X_a(R: RingSpec) -> AlgebraElement:
    return X(R)


def X_b(R: RingSpec) -> AlgebraElement:
    return AlgebraElement(-R.c, R.one, R)


def mul_pair(u1, v1, u2, v2, c):
    """(u1 + v1 X)(u2 + v2 X) with X^2 = cX."""
    return u1 * u2, u1 * v2 + v1 * u2 + v1 * v2 * c


def multiply(z: AlgebraElement, w: AlgebraElement) -> AlgebraElement:
    z._same(w)
    u, v = mul_pair(z.u, z.v, w.u, w.v, z.ring.c)
    return AlgebraElement(u, v, z.ring)


def comultiply(z: AlgebraElement) -> dict:
    """Delta(z) as ``{(i, j): coeff}`` on the basis ``0 = 1``, ``1 = X``.

    Delta(1) = X(x)1 + 1(x)X - c 1(x)1 and Delta(X) = X(x)X.
    """
    R = z.ring
    out = {}
    terms = [((1, 0), z.u), ((0, 1), z.u), ((0, 0), -R.c * z.u), ((1, 1), z.v)]
    for k, a in terms:
        if a:
            out[k] = out.get(k, R.zero) + a
    return {k: a for k, a in out.items() if a}


def counit(z: AlgebraElement):
    return z.v


def delta_power(u, v, m: int, j: int, c):
    """Coefficient of a basis tensor with ``j`` factors X in Delta^(m)(u + vX).

    Delta^(m) is the m-fold iterated coproduct A -> A^(x m); Delta^(1) = id
    and Delta^(0) is the counit.
    """
    if m == 0:
        return v
    if j == m:
        return v
    return u * (-c) ** (m - 1 - j)


@dataclass(frozen=True)
class LeeChain:
    """Lee cycle on the Seifert state: one algebra element per circle."""

    state: tuple
    circles: tuple
    factors: dict          # circle index -> AlgebraElement
    colors: dict           # circle index -> "a" | "b"
    marked_circle: int | None = None


def lee_chain(D: Diagram, R: RingSpec, reduced: bool = False, outer=None) -> LeeChain:
    """The Lee cycle alpha(D) for the diagram's orientation.

    In the reduced case the factor on the marked circle is dropped.
    """
    if reduced and D.marked_edge is None:
        raise MarkRequiredForReduced("reduced Lee cycle needs a marked edge")
    col = ab_coloring(D, outer)
    res = col.resolution
    marked = res.circle_of_edge[D.marked_edge] if reduced else None
    factors = {}
    for k in range(len(res.circles)):
        if k == marked:
            continue
        factors[k] = X_a(R) if col.color[k] == "a" else X_b(R)
    return LeeChain(res.state, res.circles, factors, dict(col.color), marked)
