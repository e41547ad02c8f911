"""Exact coefficient rings with a distinguished prime ``c``.

Supported rings::

    kind             flag        c
    Z                z           a rational prime
    Q_poly_H         q-poly      H
    Fp_poly_H        f<p>-poly   H
    Z_gauss          gauss       1+i
    Z_eisenstein6    eisen       1+w   (w = exp(2 pi i / 6), w^2 = w - 1)
    Z_poly_H         z-poly      H     (not Euclidean, no Smith form)

Integers are plain Python ``int``.  The other rings use the small immutable
classes ``Poly``, ``GaussInt`` and ``EisInt`` below, which support the usual
arithmetic operators and mix freely with ``int``.

>>> R = ring_from_cli("gauss", "1+i")
>>> R.mul(R.parse("1+i"), R.parse("1-i"))
GaussInt(2, 0)
>>> R.valuation(R.from_int(2))
2
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import (
    InvalidPrime,
    MixedRings,
    NotEuclidean,
    UnknownRing,
    UnsupportedCForRing,
)

INFINITY = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


# ---------------------------------------------------------------------------
# polynomials in H

Q_COEFFS = 0    # rationals
Z_COEFFS = -1   # integers
# any positive value is the characteristic of a prime field


def _norm_q(a):
    if type(a) is Fraction and a.denominator == 1:
        return a.numerator
    return a


class Poly:
    """Polynomial in H, coefficients stored low degree first, no trailing zeros."""

    __slots__ = ("co", "mod", "_h")

    def __init__(self, coeffs, mod: int):
        cs = list(coeffs)
        if mod > 0:
            cs = [a % mod for a in cs]
        elif mod == Q_COEFFS:
            cs = [_norm_q(Fraction(a)) if not isinstance(a, int) else a for a in cs]
        while cs and not cs[-1]:
            cs.pop()
        self.co = tuple(cs)
        self.mod = mod
        self._h = None

    @classmethod
    def _raw(cls, co: tuple, mod: int) -> "Poly":
        p = object.__new__(cls)
        p.co = co
        p.mod = mod
        p._h = None
        return p

    def _lift(self, other) -> "Poly":
        if type(other) is Poly:
            if other.mod != self.mod:
                raise MixedRings("polynomials over different coefficient rings")
            return other
        if isinstance(other, (int, Fraction)):
            if isinstance(other, Fraction) and self.mod != Q_COEFFS:
                raise MixedRings("rational constant outside Q[H]")
            return Poly((other,), self.mod)
        raise MixedRings(f"cannot combine Poly with {type(other).__name__}")

    def _fix(self, cs: list) -> "Poly":
        m = self.mod
        if m > 0:
            cs = [a % m for a in cs]
        elif m == Q_COEFFS:
            cs = [_norm_q(a) for a in cs]
        while cs and not cs[-1]:
            cs.pop()
        return Poly._raw(tuple(cs), m)

    def __add__(self, other):
        o = self._lift(other)
        a, b = self.co, o.co
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, x in enumerate(b):
            cs[i] += x
        return self._fix(cs)

    __radd__ = __add__

    def __neg__(self):
        return self._fix([-a for a in self.co])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        a, b = self.co, o.co
        if not a or not b:
            return Poly._raw((), self.mod)
        if len(b) == 1:
            x = b[0]
            return self._fix([y * x for y in a])
        if len(a) == 1:
            x = a[0]
            return self._fix([y * x for y in b])
        cs = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    cs[i + j] += x * y
        return self._fix(cs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = Poly._raw((1,), self.mod)
        base = self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def __eq__(self, other):
        if type(other) is Poly:
            return self.mod == other.mod and self.co == other.co
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.co
            return len(self.co) == 1 and self.co[0] == (other % self.mod if self.mod > 0 else other)
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            if not self.co:
                self._h = 0
            elif len(self.co) == 1:
                self._h = hash(self.co[0])
            else:
                self._h = hash((self.co, self.mod))
        return self._h

    def __bool__(self):
        return bool(self.co)

    @property
    def degree(self) -> int:
        return len(self.co) - 1

    @property
    def lead(self):
        return self.co[-1]

    def __repr__(self):
        return f"Poly({list(self.co)!r}, mod={self.mod})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: Poly, var: str = "H") -> str:
    if not p.co:
        return "0"
    terms = []
    for k in range(len(p.co) - 1, -1, -1):
        a = p.co[k]
        if not a:
            continue
        neg = False
        if p.mod <= 0 and a < 0:
            neg, a = True, -a
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if a == 1:
                body = mono
            elif isinstance(a, Fraction):
                body = f"({a}){mono}"
            else:
                body = f"{a}{mono}"
        terms.append(("-" if neg else "+", body))
    s = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


# ---------------------------------------------------------------------------
# quadratic integers


def _round_div(n: int, d: int) -> int:
    """Nearest integer to n/d for d > 0 (halves round up)."""
    return (2 * n + d) // (2 * d)


class GaussInt:
    """a + b i with i^2 = -1."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    @staticmethod
    def _lift(o):
        if type(o) is GaussInt:
            return o
        if isinstance(o, int):
            return GaussInt(o, 0)
        raise MixedRings(f"cannot combine GaussInt with {type(o).__name__}")

    def __add__(self, o):
        o = self._lift(o)
        return GaussInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return GaussInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return self._lift(o) - self

    def __neg__(self):
        return GaussInt(-self.a, -self.b)

    def __mul__(self, o):
        if type(o) is int:
            return GaussInt(self.a * o, self.b * o)
        o = self._lift(o)
        return GaussInt(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = GaussInt(1, 0)
        for _ in range(n):
            r = r * self
        return r

    def conj(self):
        return GaussInt(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def __eq__(self, o):
        if type(o) is GaussInt:
            return self.a == o.a and self.b == o.b
        if isinstance(o, int):
            return self.b == 0 and self.a == o
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"GaussInt({self.a}, {self.b})"

    def __str__(self):
        return _format_quad(self.a, self.b, "i")


class EisInt:
    """a + b w with w = exp(2 pi i/6), so w^2 = w - 1."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    @staticmethod
    def _lift(o):
        if type(o) is EisInt:
            return o
        if isinstance(o, int):
            return EisInt(o, 0)
        raise MixedRings(f"cannot combine EisInt with {type(o).__name__}")

    def __add__(self, o):
        o = self._lift(o)
        return EisInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return EisInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return self._lift(o) - self

    def __neg__(self):
        return EisInt(-self.a, -self.b)

    def __mul__(self, o):
        if type(o) is int:
            return EisInt(self.a * o, self.b * o)
        o = self._lift(o)
        bd = self.b * o.b
        return EisInt(self.a * o.a - bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = EisInt(1, 0)
        for _ in range(n):
            r = r * self
        return r

    def conj(self):
        # conj(w) = 1 - w
        return EisInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b + self.b * self.b

    def __eq__(self, o):
        if type(o) is EisInt:
            return self.a == o.a and self.b == o.b
        if isinstance(o, int):
            return self.b == 0 and self.a == o
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, "w"))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"EisInt({self.a}, {self.b})"

    def __str__(self):
        return _format_quad(self.a, self.b, "w")


def _format_quad(a: int, b: int, sym: str) -> str:
    if b == 0:
        return str(a)
    mono = sym if abs(b) == 1 else f"{abs(b)}{sym}"
    if a == 0:
        return mono if b > 0 else "-" + mono
    return f"{a}{'+' if b > 0 else '-'}{mono}"


# ---------------------------------------------------------------------------
# ring descriptors

KINDS = ("Z", "Q_poly_H", "Fp_poly_H", "Z_gauss", "Z_eisenstein6", "Z_poly_H")


class RingSpec:
    """A coefficient ring together with its distinguished prime ``c``."""

    def __init__(self, kind: str, c=None, p: int | None = None):
        if kind not in KINDS:
            raise UnknownRing(kind)
        self.kind = kind
        self.p = p
        if kind == "Fp_poly_H":
            if p is None or not is_prime(p):
                raise InvalidPrime(f"characteristic {p} is not prime")
            self.mod = p
        elif kind == "Q_poly_H":
            self.mod = Q_COEFFS
        elif kind == "Z_poly_H":
            self.mod = Z_COEFFS
        else:
            self.mod = None
        self.snf_capable = kind != "Z_poly_H"
        self.zero = self.from_int(0)
        self.one = self.from_int(1)
        if c is None:
            c = self._default_c()
        self.c = self._validate_c(self.coerce(c))

    # -- construction helpers

    def _default_c(self):
        if self.kind == "Z":
            return 2
        if self.kind == "Z_gauss":
            return GaussInt(1, 1)
        if self.kind == "Z_eisenstein6":
            return EisInt(1, 1)
        return self.H

    @property
    def H(self) -> Poly:
        if self.mod is None:
            raise UnsupportedCForRing(f"{self.kind} has no variable H")
        return Poly._raw((0, 1), self.mod)

    def _validate_c(self, c):
        if not c or self.is_unit(c):
            raise InvalidPrime(f"c = {self.fmt(c)} is zero or a unit")
        if self.kind == "Z":
            if c < 0 or not is_prime(c):
                raise InvalidPrime(f"c = {c} is not a positive prime")
            return c
        if self.kind == "Z_gauss":
            target = GaussInt(1, 1)
        elif self.kind == "Z_eisenstein6":
            target = EisInt(1, 1)
        else:
            target = self.H
        if self.canonical_associate(c) != self.canonical_associate(target):
            raise UnsupportedCForRing(
                f"c = {self.fmt(c)} is not supported over {self.kind}; use {self.fmt(target)}")
        return target

    def __eq__(self, other):
        return isinstance(other, RingSpec) and (self.kind, self.p, self.c) == (other.kind, other.p, other.c)

    def __hash__(self):
        return hash((self.kind, self.p, self.c))

    def __repr__(self):
        return f"RingSpec({self.kind}{'' if self.p is None else ' p=%d' % self.p}, c={self.fmt(self.c)})"

    @property
    def flag(self) -> str:
        return {
            "Z": "z", "Q_poly_H": "q-poly", "Z_gauss": "gauss",
            "Z_eisenstein6": "eisen", "Z_poly_H": "z-poly",
        }.get(self.kind) or f"f{self.p}-poly"

    @property
    def name(self) -> str:
        return {
            "Z": "Z", "Q_poly_H": "Q[H]", "Z_gauss": "Z[i]",
            "Z_eisenstein6": "Z[w]", "Z_poly_H": "Z[H]",
        }.get(self.kind) or f"F{self.p}[H]"

    # -- element plumbing

    def from_int(self, n: int):
        if self.kind == "Z":
            return n
        if self.kind == "Z_gauss":
            return GaussInt(n, 0)
        if self.kind == "Z_eisenstein6":
            return EisInt(n, 0)
        return Poly((n,), self.mod)

    def contains(self, x) -> bool:
        k = self.kind
        if k == "Z":
            return type(x) is int
        if k == "Z_gauss":
            return type(x) is GaussInt
        if k == "Z_eisenstein6":
            return type(x) is EisInt
        return type(x) is Poly and x.mod == self.mod

    def coerce(self, x):
        if self.contains(x):
            return x
        if type(x) is int:
            return self.from_int(x)
        if type(x) is Fraction and self.kind == "Q_poly_H":
            return Poly((x,), self.mod)
        raise MixedRings(f"{x!r} is not an element of {self.name}")

    def _check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise MixedRings(f"{x!r} is not an element of {self.name}")

    # -- arithmetic (checked entry points; internal code uses operators)

    def add(self, x, y):
        self._check(x, y)
        return x + y

    def sub(self, x, y):
        self._check(x, y)
        return x - y

    def mul(self, x, y):
        self._check(x, y)
        return x * y

    def neg(self, x):
        self._check(x)
        return -x

    def is_unit(self, x) -> bool:
        k = self.kind
        if k == "Z":
            return x == 1 or x == -1
        if k in ("Z_gauss", "Z_eisenstein6"):
            return x.norm() == 1
        if len(x.co) != 1:
            return False
        if self.mod == Z_COEFFS:
            return x.co[0] in (1, -1)
        return True

    def inv(self, u):
        """Inverse of a unit."""
        k = self.kind
        if k == "Z":
            if u in (1, -1):
                return u
        elif k in ("Z_gauss", "Z_eisenstein6"):
            if u.norm() == 1:
                return u.conj()
        elif len(u.co) == 1:
            a = u.co[0]
            if self.mod > 0:
                return Poly._raw((pow(a, -1, self.mod),), self.mod)
            if self.mod == Q_COEFFS:
                return Poly._raw((_norm_q(Fraction(1) / a),), self.mod)
            if a in (1, -1):
                return u
        raise ZeroDivisionError(f"{self.fmt(u)} is not a unit in {self.name}")

    def units(self) -> list:
        """The finite unit group, for the rings where it is finite."""
        k = self.kind
        if k == "Z":
            return [1, -1]
        if k == "Z_gauss":
            return [GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1)]
        if k == "Z_eisenstein6":
            w = EisInt(0, 1)
            return [w ** j for j in range(6)]
        if self.mod == Z_COEFFS:
            return [self.one, -self.one]
        if self.mod > 0:
            return [Poly((a,), self.mod) for a in range(1, self.mod)]
        raise ValueError(f"{self.name} has infinitely many units")

    def canonical_associate(self, x):
        """Canonical representative of the associate class of ``x``."""
        return self.normalize(x)[0]

    def normalize(self, x):
        """Return ``(y, u)`` with ``y = u * x`` canonical and ``u`` a unit."""
        k = self.kind
        if not x:
            return x, self.one
        if k == "Z":
            return (x, 1) if x > 0 else (-x, -1)
        if k == "Z_gauss":
            u = GaussInt(1, 0)
            y = x
            while not (y.a > 0 and y.b >= 0):
                y = GaussInt(-y.b, y.a)   # times i
                u = GaussInt(-u.b, u.a)
            return y, u
        if k == "Z_eisenstein6":
            u = EisInt(1, 0)
            y = x
            w = EisInt(0, 1)
            while not (y.a > 0 and y.b >= 0):
                y = y * w
                u = u * w
            return y, u
        lead = x.co[-1]
        if self.mod == Z_COEFFS:
            return (x, self.one) if lead > 0 else (-x, -self.one)
        u = self.inv(Poly._raw((lead,), self.mod))
        return x * u, u

    def size(self, x) -> int:
        """Euclidean size: |x|, degree, or norm."""
        k = self.kind
        if k == "Z":
            return abs(x)
        if k in ("Z_gauss", "Z_eisenstein6"):
            return x.norm()
        if not self.snf_capable:
            raise NotEuclidean(f"{self.name} is not a Euclidean domain")
        return len(x.co) - 1 if x.co else -1

    def divmod(self, x, y):
        """Euclidean division ``x = q*y + r`` with ``r = 0`` or ``size(r) < size(y)``."""
        if not self.snf_capable:
            raise NotEuclidean(f"{self.name} is not a Euclidean domain")
        self._check(x, y)
        if not y:
            raise ZeroDivisionError("division by zero")
        k = self.kind
        if k == "Z":
            q, r = divmod(x, y)
            # keep |r| < |y| and prefer the smaller remainder
            if 2 * abs(r) > abs(y):
                q, r = (q + 1, r - y)
            return q, r
        if k in ("Z_gauss", "Z_eisenstein6"):
            cls = type(x)
            n = y.norm()
            t = x * y.conj()
            q = cls(_round_div(t.a, n), _round_div(t.b, n))
            return q, x - q * y
        return _poly_divmod(x, y)

    def exact_div(self, x, y):
        """``q`` with ``x = q*y`` if ``y`` divides ``x``, otherwise ``None``."""
        self._check(x, y)
        if not y:
            raise ZeroDivisionError("division by zero")
        k = self.kind
        if k == "Z":
            q, r = divmod(x, y)
            return q if r == 0 else None
        if k in ("Z_gauss", "Z_eisenstein6"):
            n = y.norm()
            t = x * y.conj()
            if t.a % n or t.b % n:
                return None
            return type(x)(t.a // n, t.b // n)
        if self.mod == Z_COEFFS:
            return _poly_exact_div_z(x, y)
        q, r = _poly_divmod(x, y)
        return q if not r else None

    def divides(self, y, x) -> bool:
        return self.exact_div(x, y) is not None

    def valuation(self, x, c=None):
        """Largest k with c^k | x (``math.inf`` for x = 0)."""
        if c is None:
            c = self.c
        self._check(x, c)
        if not x:
            return INFINITY
        if self.mod is not None and c == self.H:
            return next(i for i, a in enumerate(x.co) if a)
        k = 0
        while True:
            q = self.exact_div(x, c)
            if q is None:
                return k
            x = q
            k += 1

    def gcd(self, x, y):
        """Canonical gcd (Euclidean rings only)."""
        while y:
            x, y = y, self.divmod(x, y)[1]
        return self.canonical_associate(x)

    # -- text

    def parse(self, text: str):
        return parse_element(self, text)

    def fmt(self, x) -> str:
        return str(x)


def _poly_divmod(x: Poly, y: Poly):
    mod = x.mod
    if y.mod != mod:
        raise MixedRings("polynomials over different coefficient rings")
    r = list(x.co)
    dy = len(y.co) - 1
    if mod > 0:
        inv_lead = pow(y.co[-1], -1, mod)
    else:
        inv_lead = Fraction(1) / y.co[-1]
    q = [0] * max(len(r) - dy, 0)
    for i in range(len(r) - 1 - dy, -1, -1):
        a = r[i + dy]
        if not a:
            continue
        t = a * inv_lead
        if mod > 0:
            t %= mod
        else:
            t = _norm_q(t)
        q[i] = t
        for j, b in enumerate(y.co):
            r[i + j] -= t * b
            if mod > 0:
                r[i + j] %= mod
    return Poly(q, mod), Poly(r, mod)


def _poly_exact_div_z(x: Poly, y: Poly):
    r = list(x.co)
    dy = len(y.co) - 1
    lead = y.co[-1]
    q = [0] * max(len(r) - dy, 0)
    for i in range(len(r) - 1 - dy, -1, -1):
        a = r[i + dy]
        if not a:
            continue
        t, rem = divmod(a, lead)
        if rem:
            return None
        q[i] = t
        for j, b in enumerate(y.co):
            r[i + j] -= t * b
    if any(r):
        return None
    return Poly(q, x.mod)


# ---------------------------------------------------------------------------
# parsing

_FLAG_KINDS = {
    "z": "Z",
    "q-poly": "Q_poly_H",
    "z-poly": "Z_poly_H",
    "gauss": "Z_gauss",
    "eisen": "Z_eisenstein6",
}

_TERM = re.compile(r"([+-]?)((?:\([^)]*\)|[^+-])+)")
# coefficient (maybe parenthesized), optional H^k, optional trailing /d
_POLY_TERM = re.compile(r"(\(\d+(?:/\d+)?\)|\d+(?:/\d+)?)?\*?(H)?(?:\^(\d+))?(?:/(\d+))?")


def parse_element(R: RingSpec, text: str):
    """Parse ``"12"``, ``"-3"``, ``"H^2 + 2H - 1"``, ``"1+i"``, ``"2-w"`` and the like."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty ring element")
    if R.kind == "Z":
        try:
            return int(s)
        except ValueError:
            raise UnsupportedCForRing(f"{text!r} is not an integer") from None
    if R.kind in ("Z_gauss", "Z_eisenstein6"):
        sym = "i" if R.kind == "Z_gauss" else "w"
        a = b = 0
        for sign, body in _TERM.findall(s):
            sg = -1 if sign == "-" else 1
            if body.endswith(sym):
                coef = body[:-1].rstrip("*")
                b += sg * (int(coef) if coef else 1)
            else:
                try:
                    a += sg * int(body)
                except ValueError:
                    raise UnsupportedCForRing(f"{text!r} is not an element of {R.name}") from None
        return type(R.zero)(a, b)
    cs: dict[int, object] = {}
    for sign, body in _TERM.findall(s):
        sg = -1 if sign == "-" else 1
        m = _POLY_TERM.fullmatch(body)
        if m is None:
            raise UnsupportedCForRing(f"{text!r} is not an element of {R.name}")
        coef, var, power, den = m.groups()
        if not coef and not var:
            raise UnsupportedCForRing(f"{text!r} is not an element of {R.name}")
        a = Fraction(coef.strip("()")) if coef else Fraction(1)
        if den:
            a /= int(den)
        k = (int(power) if power else 1) if var else 0
        if R.mod != Q_COEFFS and isinstance(a, Fraction):
            if a.denominator != 1:
                raise UnsupportedCForRing(f"{text!r} has non-integral coefficients")
            a = int(a)
        cs[k] = cs.get(k, 0) + sg * a
    n = max(cs) + 1
    return Poly([cs.get(k, 0) for k in range(n)], R.mod)


def ring_from_cli(type_flag: str, c_flag: str | None = None) -> RingSpec:
    """Validate a ring flag and a prime flag, e.g. ``("z", "3")`` or ``("f2-poly", "H")``."""
    flag = type_flag.strip().lower()
    kind = _FLAG_KINDS.get(flag)
    p = None
    if kind is None:
        m = re.fullmatch(r"f(\d+)-poly", flag)
        if not m:
            raise UnknownRing(f"unknown ring type {type_flag!r}")
        p = int(m.group(1))
        if not is_prime(p):
            raise InvalidPrime(f"f{p}-poly: {p} is not prime")
        kind = "Fp_poly_H"
    R = RingSpec(kind, p=p)
    if c_flag is None:
        return R
    c = parse_element(R, c_flag)
    return RingSpec(kind, c=c, p=p)


# module-level conveniences mirroring the RingSpec methods


def is_unit(R: RingSpec, x) -> bool:
    return R.is_unit(x)


def canonical_associate(R: RingSpec, x):
    return R.canonical_associate(x)


def exact_div(R: RingSpec, x, y):
    return R.exact_div(x, y)


def valuation(R: RingSpec, x, c=None):
    return R.valuation(x, c)


def euclid_divmod(R: RingSpec, x, y):
    return R.divmod(x, y)
