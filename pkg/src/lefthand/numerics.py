"""Exact arithmetic: rationals, integer polynomials, rational functions.

Rationals are :class:`fractions.Fraction` (always reduced, denominator > 0).
Polynomials have arbitrary-precision integer coefficients stored in
ascending degree order; the zero polynomial has no coefficients.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Optional, Union

Rational = Fraction
Number = Union[int, Fraction]

DEFAULT_GRID = 1 << 10
# extra halvings allowed when trying to pin a bracket inside one tol-cell
SETTLE_STEPS = 24


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or a decimal string such as ``"0.125"`` exactly."""
    if not isinstance(text, str):
        raise ValueError(f"expected rational string, got {text!r}")
    s = text.strip()
    if not s:
        raise ValueError("empty rational")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ValueError(f"malformed rational {text!r}") from None
        if d <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return Fraction(n, d)
    try:
        return Fraction(Decimal(s))
    except (ArithmeticError, ValueError):
        raise ValueError(f"malformed rational {text!r}") from None


def format_rational(r: Fraction) -> str:
    """``"num/den"`` form; integers are written as ``"n/1"``."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def format_decimal(r: Fraction, digits: int = 12) -> str:
    """Decimal rendering of ``r`` to ``digits`` significant digits (display only)."""
    r = Fraction(r)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(r.numerator) / Decimal(r.denominator))


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def variable(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def lowest(self) -> int:
        """Lowest-degree nonzero coefficient (0 for the zero polynomial)."""
        for c in self.coeffs:
            if c:
                return c
        return 0

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> "IntPolynomial":
        return poly_primitive(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "p" if k == 1 else f"p^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_arith(self, other, "sub")

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_arith(other, self, "sub")

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_arith(self, other, "mul")

    __rmul__ = __mul__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        out = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Number) -> int:
        """Sign of the value at rational ``x`` using integer arithmetic only."""
        x = Fraction(x)
        n, d = x.numerator, x.denominator
        if not self.coeffs:
            return 0
        # homogenised Horner: d**deg * a(n/d), same sign since d > 0
        acc, dpow = self.coeffs[-1], d
        for c in reversed(self.coeffs[:-1]):
            acc = acc * n + c * dpow
            dpow *= d
        return (acc > 0) - (acc < 0)


def poly_arith(a: IntPolynomial, b: IntPolynomial, op: str) -> IntPolynomial:
    if op == "add":
        n = max(len(a.coeffs), len(b.coeffs))
        ca = a.coeffs + (0,) * (n - len(a.coeffs))
        cb = b.coeffs + (0,) * (n - len(b.coeffs))
        return IntPolynomial(x + y for x, y in zip(ca, cb))
    if op == "sub":
        return poly_arith(a, -b, "add")
    if op == "mul":
        if a.is_zero() or b.is_zero():
            return IntPolynomial()
        out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)
    raise ValueError(f"unknown polynomial op {op!r}")


def poly_primitive(a: IntPolynomial) -> IntPolynomial:
    """Divide out the content; make the lowest nonzero coefficient positive."""
    if a.is_zero():
        raise ValueError("zero polynomial has no primitive part")
    c = a.content()
    if a.lowest < 0:
        c = -c
    return IntPolynomial(x // c for x in a.coeffs)


def poly_divexact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient ``a / b`` in Z[x]; raises if ``b`` does not divide ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading
    if a.degree < db:
        if a.is_zero():
            return IntPolynomial()
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (a.degree - db + 1)
    for k in range(a.degree - db, -1, -1):
        top = rem[k + db]
        if top % lb:
            raise ArithmeticError("inexact polynomial division")
        q = top // lb
        quot[k] = q
        if q:
            for j, c in enumerate(b.coeffs):
                rem[k + j] -= q * c
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return IntPolynomial(quot)


def poly_prem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder of ``a`` by ``b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db, lb = b.degree, b.leading
    while len(r) - 1 >= db and any(r):
        dr = len(r) - 1
        lr = r[-1]
        r = [c * lb for c in r]
        shift = dr - db
        for j, c in enumerate(b.coeffs):
            r[shift + j] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    return IntPolynomial(r)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in Z[x] (primitive PRS), normalised by :func:`poly_primitive`
    up to the integer content gcd."""
    if a.is_zero() and b.is_zero():
        return IntPolynomial()
    if a.is_zero():
        return poly_primitive(b) * b.content()
    if b.is_zero():
        return poly_primitive(a) * a.content()
    c = math.gcd(a.content(), b.content())
    a, b = poly_primitive(a), poly_primitive(b)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = poly_prem(a, b)
        a, b = b, (IntPolynomial() if r.is_zero() else poly_primitive(r))
    return poly_primitive(a) * c


class RationalFunction:
    """Quotient of integer polynomials in lowest terms.

    The numerator and denominator share no nonconstant factor and no integer
    content; the denominator's lowest nonzero coefficient is positive, so a
    denominator with nonzero constant term is positive at 0.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPolynomial, den: Optional[IntPolynomial] = None):
        if den is None:
            den = IntPolynomial.constant(1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = IntPolynomial(), IntPolynomial.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0 or abs(g.leading) != 1:
                g = poly_primitive(g) if g.degree > 0 else IntPolynomial.constant(1)
                num, den = poly_divexact(num, g), poly_divexact(den, g)
            c = math.gcd(num.content(), den.content())
            if den.lowest < 0:
                c = -c
            if c != 1:
                num = IntPolynomial(x // c for x in num.coeffs)
                den = IntPolynomial(x // c for x in den.coeffs)
        self.num = num
        self.den = den

    @classmethod
    def variable(cls) -> "RationalFunction":
        return cls(IntPolynomial.variable())

    def __repr__(self) -> str:
        return f"RationalFunction(({self.num}) / ({self.den}))"

    def __str__(self) -> str:
        if self.den == IntPolynomial.constant(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RationalFunction(IntPolynomial.constant(other))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction(IntPolynomial.constant(other))
        if isinstance(other, IntPolynomial):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __call__(self, x: Number) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d


def _settled(lo: Fraction, hi: Fraction, tol: Fraction) -> bool:
    # both ends inside one half-open cell [k*tol, (k+1)*tol)
    return math.floor(lo / tol) == math.floor(hi / tol)


def bisect_bracket(
    same_as_lo: Callable[[Fraction], Optional[bool]],
    lo: Fraction,
    hi: Fraction,
    tol: Fraction,
) -> tuple[Fraction, Fraction, Optional[Fraction]]:
    """Shrink ``[lo, hi]`` around the switch point of a monotone predicate.

    ``same_as_lo(m)`` reports whether ``m`` behaves like ``lo`` (True), like
    ``hi`` (False), or is itself the switch point (None).  Halving continues
    until the width is at most ``tol``, then for up to ``SETTLE_STEPS`` more
    halvings until the bracket sits inside a single ``tol``-aligned cell, so
    that its ``tol``-resolution digits are certified.

    Returns ``(lo, hi, exact)`` where ``exact`` is a midpoint that hit the
    switch point exactly, else None.
    """
    extra = 0
    while hi - lo > tol or (not _settled(lo, hi, tol) and extra < SETTLE_STEPS):
        if hi - lo <= tol:
            extra += 1
        mid = (lo + hi) / 2
        side = same_as_lo(mid)
        if side is None:
            return lo, hi, mid
        if side:
            lo = mid
        else:
            hi = mid
    return lo, hi, None


def _isolate_zero(a: IntPolynomial, z: Fraction, w: Fraction) -> Optional[tuple[Fraction, Fraction]]:
    # bracket an exact rational root z; None when the sign does not change there
    for _ in range(200):
        sl, sh = a.sign_at(z - w), a.sign_at(z + w)
        if sl and sh:
            return (z - w, z + w) if sl != sh else None
        w /= 2
    return None


def smallest_root(
    a: IntPolynomial,
    lo: Fraction,
    hi: Fraction,
    tol: Fraction,
    grid: int = DEFAULT_GRID,
) -> Optional[tuple[Fraction, Fraction]]:
    """Smallest sign-change bracket of ``a`` inside ``(lo, hi)``.

    Scans a uniform grid of ``grid`` cells, then bisects the first cell whose
    endpoints differ in sign.  The returned ``(l, h)`` satisfies
    ``sign(a(l)) != sign(a(h))``, both nonzero, and ``h - l <= tol``.
    Roots of even multiplicity produce no sign change and are not found.
    """
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if lo >= hi:
        raise ValueError("need lo < hi")
    if a.is_zero() or a.sign_at(lo) == 0 or a.sign_at(hi) == 0:
        raise ValueError("root at interval endpoint")
    if a.degree == 0:
        return None
    step = (hi - lo) / grid
    half = min(tol, step) / 2
    prev_x, prev_s = lo, a.sign_at(lo)
    for i in range(1, grid + 1):
        x = lo + step * i
        s = a.sign_at(x)
        if s == 0:
            br = _isolate_zero(a, x, half)
            if br is not None:
                return br
            continue
        if s != prev_s:
            base = prev_s

            def same(m: Fraction) -> Optional[bool]:
                sm = a.sign_at(m)
                return None if sm == 0 else sm == base

            l, h, exact = bisect_bracket(same, prev_x, x, tol)
            if exact is not None:
                return _isolate_zero(a, exact, min(half, (h - l) / 2))
            return l, h
        prev_x, prev_s = x, s
    return None

