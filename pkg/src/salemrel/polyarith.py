"""Exact arithmetic on univariate integer polynomials.

Coefficients are arbitrary-precision Python ints stored densely in ascending
order: coeffs[i] is the coefficient of x**i.  The zero polynomial has an empty
coefficient tuple and degree -inf (a sentinel distinct from 0).  No floating
point is used anywhere in this module.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]

NEG_INF = float("-inf")


class NotReciprocalError(ValueError):
    """The operation requires a self-reciprocal (palindromic) polynomial."""


class OddDegreeError(ValueError):
    """The operation requires an even-degree polynomial."""


class Sign(enum.IntEnum):
    """Sign of an exact quantity, ordered NEGATIVE < ZERO < POSITIVE."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @staticmethod
    def of(value: Rational) -> "Sign":
        if value > 0:
            return Sign.POSITIVE
        if value < 0:
            return Sign.NEGATIVE
        return Sign.ZERO


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPoly:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _trim(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "_coeffs", cs)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPoly":
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        return cls((0,) * exponent + (coefficient,))

    # -- basic queries -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self._coeffs[-1] if self._coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def sort_key(self) -> tuple:
        """Deterministic ordering key: by degree, then coefficient tuple."""
        return (len(self._coeffs), self._coeffs)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self._coeffs)
        b = other._coeffs
        if len(b) > len(out):
            out.extend([0] * (len(b) - len(out)))
        for i, c in enumerate(b):
            out[i] -= c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self._coeffs))

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly(tuple(c * other for c in self._coeffs))
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def __rmul__(self, other: int) -> "IntPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Pseudo-division (quotient, remainder).

        Satisfies lc(q)**(deg p - deg q + 1) * p == Q*q + R when
        deg p >= deg q; when the divisor is monic this is plain Euclidean
        division over the integers.  For deg p < deg q returns (0, p).
        """
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        dp, dq = len(self._coeffs) - 1, len(other._coeffs) - 1
        if dp < dq:
            return IntPoly(), self
        lcq = other.lc
        den = other._coeffs
        rem = list(self._coeffs)
        quo = [0] * (dp - dq + 1)
        for k in range(dp - dq, -1, -1):
            if lcq != 1:
                for i in range(len(rem)):
                    rem[i] *= lcq
                for i in range(len(quo)):
                    quo[i] *= lcq
            q_c = rem[k + dq] // lcq if lcq != 1 else rem[k + dq]
            quo[k] += q_c
            if q_c:
                for i in range(dq + 1):
                    rem[k + i] -= q_c * den[i]
        return IntPoly(quo), IntPoly(rem)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[1]

    # -- structural operations -------------------------------------------------

    def derivative(self) -> "IntPoly":
        cs = self._coeffs
        return IntPoly(tuple(i * cs[i] for i in range(1, len(cs))))

    def reciprocal(self) -> "IntPoly":
        """x**deg(p) * p(1/x); trailing zero coefficients drop the degree."""
        return IntPoly(tuple(reversed(self._coeffs)))

    def compose(self, inner: "IntPoly") -> "IntPoly":
        """Exact composition self(inner(x)) by Horner's rule."""
        result = IntPoly()
        for c in reversed(self._coeffs):
            result = result * inner + IntPoly((c,))
        return result

    def shift_mul(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self._coeffs)

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._coeffs:
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    def primitive_part(self) -> "IntPoly":
        """self divided by its content; the leading-coefficient sign is kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(tuple(c // g for c in self._coeffs))

    # -- evaluation ------------------------------------------------------------

    def eval_int(self, t: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def eval_fraction(self, t: Rational) -> Fraction:
        fr = Fraction(t)
        n, d = fr.numerator, fr.denominator
        if d == 1:
            return Fraction(self.eval_int(n))
        deg = len(self._coeffs) - 1
        if deg < 0:
            return Fraction(0)
        acc = self._coeffs[-1]
        dp = 1
        for i in range(deg - 1, -1, -1):
            dp *= d
            acc = acc * n + self._coeffs[i] * dp
        return Fraction(acc, dp)

    def sign_at(self, t: Rational) -> Sign:
        """Exact sign of p(t) via the scaled integer den**deg * p(num/den)."""
        fr = Fraction(t)
        n, d = fr.numerator, fr.denominator
        deg = len(self._coeffs) - 1
        if deg < 0:
            return Sign.ZERO
        acc = self._coeffs[-1]
        dp = 1
        for i in range(deg - 1, -1, -1):
            dp *= d
            acc = acc * n + self._coeffs[i] * dp
        return Sign.of(acc)

    # -- printing ----------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)!r})"


def format_poly(p: IntPoly) -> str:
    """Canonical form: descending powers, explicit signs, no zero terms."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = "x" if mag == 1 else f"{mag}x"
        else:
            body = f"x^{i}" if mag == 1 else f"{mag}x^{i}"
        parts.append(sign + body)
    return "".join(parts)


def eval_sign(p: IntPoly, t: Rational) -> Sign:
    """Exact sign of p at a rational point."""
    return p.sign_at(t)


# -- gcd ------------------------------------------------------------------------


def _pseudo_rem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Pseudo-remainder prem(a, b) with multiplier lc(b)**(deg a - deg b + 1)."""
    da, db = len(a) - 1, len(b) - 1
    lcb = b[-1]
    rem = list(a)
    steps = 0
    for k in range(da - db, -1, -1):
        for i in range(len(rem)):
            rem[i] *= lcb
        steps += 1
        head = rem[k + db]
        q_c = head // lcb
        for i in range(db + 1):
            rem[k + i] -= q_c * b[i]
    # prem is defined with exactly da-db+1 multiplier factors; steps == da-db+1 here
    return _trim(rem)


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Gcd over the rationals as a primitive polynomial with positive lc.

    Computed with the subresultant polynomial remainder sequence, which keeps
    intermediate coefficients from exploding the way rational-PRS gcds do.
    """
    if p.is_zero and q.is_zero:
        return IntPoly()
    if p.is_zero:
        return _pos_primitive(q)
    if q.is_zero:
        return _pos_primitive(p)
    a = p.primitive_part().coeffs
    b = q.primitive_part().coeffs
    if len(a) < len(b):
        a, b = b, a
    g = 1
    h = 1
    while True:
        if len(b) == 1:
            # nonzero constant: coprime over Q
            return IntPoly((1,))
        delta = (len(a) - 1) - (len(b) - 1)
        r = _pseudo_rem(a, b)
        if not r:
            return _pos_primitive(IntPoly(b))
        divisor = g * h ** delta
        r = tuple(c // divisor for c in r)
        a, b = b, r
        g = a[-1]
        if delta >= 1:
            h = g ** delta // h ** (delta - 1)
        # delta == 0 leaves h unchanged


def _pos_primitive(p: IntPoly) -> IntPoly:
    pp = p.primitive_part()
    return -pp if pp.lc < 0 else pp


def div_exact(p: IntPoly, q: IntPoly) -> IntPoly:
    """Exact quotient p/q over Q, required to land back in Z[x]."""
    if q.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    num = [Fraction(c) for c in p.coeffs]
    den = q.coeffs
    dq = len(den) - 1
    dp = len(num) - 1
    if dp < dq:
        if p.is_zero:
            return IntPoly()
        raise ValueError("division is not exact")
    lcq = Fraction(den[-1])
    quo = [Fraction(0)] * (dp - dq + 1)
    for k in range(dp - dq, -1, -1):
        c = num[k + dq] / lcq
        quo[k] = c
        if c:
            for i in range(dq + 1):
                num[k + i] -= c * den[i]
    if any(num):
        raise ValueError("division is not exact")
    out = []
    for c in quo:
        if c.denominator != 1:
            raise ValueError("exact quotient has non-integer coefficients")
        out.append(int(c))
    return IntPoly(out)


# -- trace-polynomial transforms ---------------------------------------------------


def trace_lift(g: IntPoly) -> IntPoly:
    """Reciprocal lift x**s * g(x + 1/x) of a degree-s polynomial g.

    The roots of the result come in pairs z, 1/z with z + 1/z running over the
    roots of g; the result is self-reciprocal of degree 2s and is monic exactly
    when g is.
    """
    s = g.degree
    if g.is_zero or s < 1:
        raise ValueError("polynomial of degree >= 1 required")
    acc = IntPoly()
    base = IntPoly((1, 0, 1))  # x^2 + 1
    power = IntPoly.one()
    # x^s*g(x+1/x) = sum_j g_j x^(s-j) (x^2+1)^j
    terms = []
    for j in range(s + 1):
        if g[j]:
            terms.append((j, power * g[j]))
        if j < s:
            power = power * base
    for j, t in terms:
        acc = acc + t.shift_mul(s - j)
    return acc


def trace_project(f: IntPoly) -> IntPoly:
    """Inverse of trace_lift: the g with f = x**s * g(x + 1/x).

    Raises NotReciprocalError unless f equals its reciprocal, OddDegreeError
    for odd degree.
    """
    if f.is_zero:
        raise ValueError("nonzero polynomial required")
    if f != f.reciprocal():
        raise NotReciprocalError(f"{f} is not self-reciprocal")
    deg = f.degree
    if deg % 2 == 1:
        raise OddDegreeError(f"degree {deg} is odd")
    s = deg // 2
    rem = f
    out = [0] * (s + 1)
    base = IntPoly((1, 0, 1))
    powers = [IntPoly.one()]
    for _ in range(s):
        powers.append(powers[-1] * base)
    for j in range(s, -1, -1):
        c = rem[s + j]
        out[j] = c
        if c:
            rem = rem - (powers[j] * c).shift_mul(s - j)
    if not rem.is_zero:
        raise NotReciprocalError("no trace-polynomial preimage exists")
    return IntPoly(out)


def pair_sum_lift(h: IntPoly) -> IntPoly:
    """Lift h (monic, degree k) to (-1)**k x**(2k) h((x+1/x)(1-x-1/x)).

    Stage one substitutes y(1-y) into h, giving the monic trace polynomial
    (-1)**k h(y - y^2) whose roots pair up with sum 1; stage two is trace_lift.
    The result is self-reciprocal of degree 4k.
    """
    k = h.degree
    if not h.is_monic or k < 1:
        raise ValueError("monic polynomial of degree >= 1 required")
    g = pair_sum_trace_poly(h)
    return trace_lift(g)


def pair_sum_trace_poly(h: IntPoly) -> IntPoly:
    """The intermediate monic polynomial (-1)**k h(y - y^2) of degree 2k."""
    k = h.degree
    if not h.is_monic or k < 1:
        raise ValueError("monic polynomial of degree >= 1 required")
    inner = IntPoly((0, 1, -1))  # y - y^2
    g = h.compose(inner)
    if k % 2 == 1:
        g = -g
    return g


def norm_form(p: IntPoly, q: IntPoly, m: int) -> IntPoly:
    """p**2 - m*q**2 for a positive squarefree integer m.

    This is the norm of p + sqrt(m)*q from Q(sqrt(m))[x] down to Q[x]; its
    roots are the roots of the two conjugate factors p +- sqrt(m)*q.
    """
    if m <= 0:
        raise ValueError("m must be positive")
    mm = m
    d = 2
    while d * d <= mm:
        if mm % (d * d) == 0:
            raise ValueError("m must be squarefree")
        d += 1
    return p * p - (q * q) * m


def trace(p: IntPoly) -> int:
    """Sum of the roots of a monic polynomial: -coefficient of x**(deg-1)."""
    if not p.is_monic or p.degree < 1:
        raise ValueError("monic polynomial of degree >= 1 required")
    return -p[p.degree - 1]
