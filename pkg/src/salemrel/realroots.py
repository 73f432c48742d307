"""Exact real-root counting, isolation, and refinement for integer polynomials.

Root counting uses Sturm chains built on the squarefree part.  All interval
endpoints are rational (or +-infinity), all signs are evaluated exactly, and
every returned interval certificate (RootBox) either brackets exactly one real
root with a strict sign change or pins a rational root exactly.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Optional, Union

from .polyarith import IntPoly, Sign, _pseudo_rem, div_exact, poly_gcd

POS_INF = math.inf
NEG_INF = -math.inf

Point = Union[int, Fraction, float, None]


class EndpointIsRootError(ValueError):
    """A finite counting endpoint coincides with a root of the polynomial."""


class RootBox:
    """Certificate bracketing one real root of `poly` (its squarefree part).

    Either `exact` is a rational root and lo == hi == exact, or lo < hi,
    poly(lo) and poly(hi) are nonzero with opposite signs, and exactly one
    root lies in the open interval (lo, hi).
    """

    __slots__ = ("poly", "lo", "hi", "exact")

    def __init__(self, poly: IntPoly, lo: Fraction, hi: Fraction,
                 exact: Optional[Fraction] = None):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if exact is not None:
            exact = Fraction(exact)
            if poly.sign_at(exact) != Sign.ZERO:
                raise ValueError("exact value is not a root")
            lo = hi = exact
        else:
            if not lo < hi:
                raise ValueError("empty interval")
            slo, shi = poly.sign_at(lo), poly.sign_at(hi)
            if slo == Sign.ZERO or shi == Sign.ZERO:
                raise ValueError("interval endpoint is a root")
            if slo == shi:
                raise ValueError("no sign change across the interval")
        self.poly = poly
        self.lo = lo
        self.hi = hi
        self.exact = exact

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self) -> str:
        if self.exact is not None:
            return f"RootBox(exact={self.exact})"
        return f"RootBox({self.lo}, {self.hi})"


def squarefree_part(p: IntPoly) -> IntPoly:
    """Primitive polynomial with the same roots as p, all simple."""
    if p.is_zero:
        raise ValueError("nonzero polynomial required")
    pp = p.primitive_part()
    if pp.degree < 1:
        return pp
    g = poly_gcd(pp, pp.derivative())
    if g.degree < 1:
        return pp
    return div_exact(pp, g)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@functools.lru_cache(maxsize=512)
def _sqf_and_chain(p: IntPoly) -> tuple[IntPoly, tuple[IntPoly, ...]]:
    """Squarefree part and its Sturm chain.

    The chain is computed with the subresultant PRS for speed; a running sign
    is tracked so every stored element is a positive rational multiple of the
    textbook Sturm element (negated remainders), which is what the
    sign-variation count requires.
    """
    sqf = squarefree_part(p)
    if sqf.degree < 1:
        return sqf, (sqf,)
    f0 = sqf
    f1 = sqf.derivative().primitive_part()
    chain = [f0, f1]
    A = f0.coeffs
    B = f1.coeffs
    sA = 1  # sign of the multiplier relating A to the true Sturm element
    sB = 1
    g = 1
    h = 1
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        R = _pseudo_rem(A, B)
        if not R:
            break
        divisor = g * h ** delta
        R = tuple(c // divisor for c in R)
        sign_new = -(_sign(B[-1]) ** (delta + 1)) * sA * _sign(divisor)
        elem = (IntPoly(R) * sign_new).primitive_part()
        chain.append(elem)
        A, B = B, R
        sA, sB = sB, sign_new
        g = A[-1]
        if delta >= 1:
            h = g ** delta // h ** (delta - 1)
        if len(B) == 1:
            break
    return sqf, tuple(chain)


def _sign_at_extended(f: IntPoly, point) -> Sign:
    if point is POS_INF:
        return Sign.of(f.lc)
    if point is NEG_INF:
        deg = len(f.coeffs) - 1
        if deg < 0:
            return Sign.ZERO
        return Sign.of(f.lc * (-1) ** deg)
    return f.sign_at(point)


def _variations(chain, point) -> int:
    count = 0
    last = 0
    for f in chain:
        s = int(_sign_at_extended(f, point))
        if s == 0:
            continue
        if last != 0 and s != last:
            count += 1
        last = s
    return count


def _as_point(value: Point, side: str):
    if value is None:
        return NEG_INF if side == "lo" else POS_INF
    if isinstance(value, float):
        if value == POS_INF:
            return POS_INF
        if value == NEG_INF:
            return NEG_INF
        raise TypeError("finite endpoints must be exact rationals, not floats")
    return Fraction(value)


def count_roots(p: IntPoly, lo: Point, hi: Point) -> int:
    """Number of distinct real roots of p strictly between lo and hi.

    lo/hi may be rationals, None, or +-math.inf (None means the infinite
    endpoint on its side).  Raises EndpointIsRootError if a finite endpoint
    is itself a root.
    """
    if p.is_zero:
        raise ValueError("nonzero polynomial required")
    a = _as_point(lo, "lo")
    b = _as_point(hi, "hi")
    fa = isinstance(a, Fraction)
    fb = isinstance(b, Fraction)
    if fa and fb and not a < b:
        raise ValueError("lo < hi required")
    if (a is POS_INF) or (b is NEG_INF):
        raise ValueError("lo < hi required")
    sqf, chain = _sqf_and_chain(p)
    if sqf.degree < 1:
        return 0
    if fa and sqf.sign_at(a) == Sign.ZERO:
        raise EndpointIsRootError(f"{a} is a root")
    if fb and sqf.sign_at(b) == Sign.ZERO:
        raise EndpointIsRootError(f"{b} is a root")
    return _variations(chain, a) - _variations(chain, b)


def _count_open(w: IntPoly, a: Fraction, b: Fraction) -> int:
    """Root count for an already-squarefree w with nonroot endpoints."""
    _, chain = _sqf_and_chain(w)
    return _variations(chain, a) - _variations(chain, b)


def _kth_root_ceil(m: int, k: int) -> int:
    """Smallest t >= 0 with t**k >= m."""
    if m <= 0:
        return 0
    if k == 1:
        return m
    t = max(1, int(round(m ** (1.0 / k))))
    while t ** k >= m:
        t -= 1
    while t ** k < m:
        t += 1
    return t


def root_bound(p: IntPoly) -> int:
    """Integer B with every real root of p strictly inside (-B, B).

    Lagrange-style bound 2*max_i |c_{n-i}/lc|^{1/i}, rounded outward; stays
    small even when mid coefficients are huge.
    """
    if p.is_zero or p.degree < 1:
        return 1
    coeffs = p.coeffs
    n = len(coeffs) - 1
    lc = abs(coeffs[-1])
    best = 0
    for i in range(1, n + 1):
        c = abs(coeffs[n - i])
        if c == 0:
            continue
        best = max(best, _kth_root_ceil(-(-c // lc), i))
    return 2 * best + 1


def isolate_roots(p: IntPoly) -> list[RootBox]:
    """Pairwise-disjoint RootBoxes covering all real roots, sorted ascending.

    Non-degenerate boxes have width <= 1.  Rational roots hit during bisection
    (and all roots of linear factors) become exact degenerate boxes; all other
    boxes carry a strict sign change of the squarefree part.
    """
    if p.is_zero:
        raise ValueError("nonzero polynomial required")
    sqf = squarefree_part(p)
    if sqf.degree < 1:
        return []
    bound = root_bound(sqf)
    boxes: list[RootBox] = []
    work = [(Fraction(-bound), Fraction(bound), sqf)]
    while work:
        a, b, w = work.pop()
        if w.degree < 1:
            continue
        n = _count_open(w, a, b)
        if n == 0:
            continue
        if n == 1:
            if w.degree == 1:
                r = Fraction(-w[0], w[1])
                boxes.append(RootBox(sqf, r, r, exact=r))
                continue
            if b - a <= 1:
                aa = _clear_endpoint(sqf, w, a, b, left=True)
                bb = _clear_endpoint(sqf, w, aa, b, left=False)
                boxes.append(RootBox(sqf, aa, bb))
                continue
        mid = (a + b) / 2
        if w.sign_at(mid) == Sign.ZERO:
            boxes.append(RootBox(sqf, mid, mid, exact=mid))
            num, den = mid.numerator, mid.denominator
            w = div_exact(w, IntPoly((-num, den)))
            if w.degree >= 1 and w.sign_at(mid) == Sign.ZERO:
                raise AssertionError("squarefree part had a repeated root")
        work.append((a, mid, w))
        work.append((mid, b, w))
    boxes.sort(key=lambda bx: (bx.lo, bx.hi))
    return boxes


def _clear_endpoint(sqf: IntPoly, w: IntPoly, a: Fraction, b: Fraction,
                    left: bool) -> Fraction:
    """Move an endpoint off any root of sqf without losing the w-root."""
    e = a if left else b
    if sqf.sign_at(e) != Sign.ZERO:
        return e
    # step toward the single w-root in (a, b); stop before reaching it
    span = b - a
    for j in range(1, 128):
        t = (a + span / (1 << j)) if left else (b - span / (1 << j))
        if w.sign_at(t) == Sign.ZERO or sqf.sign_at(t) == Sign.ZERO:
            continue
        inner = _count_open(w, a, t) if left else _count_open(w, t, b)
        if inner == 0:
            return t
    raise AssertionError("could not separate endpoint from root")


def refine(box: RootBox, eps) -> RootBox:
    """Bisect a RootBox until its width is below eps.

    A rational midpoint that happens to be the root collapses the box to an
    exact degenerate certificate.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if box.exact is not None:
        return box
    if box.poly.degree == 1:
        r = Fraction(-box.poly[0], box.poly[1])
        return RootBox(box.poly, r, r, exact=r)
    lo, hi = box.lo, box.hi
    if hi - lo < eps:
        return box
    s_lo = box.poly.sign_at(lo)
    while hi - lo >= eps:
        mid = (lo + hi) / 2
        sm = box.poly.sign_at(mid)
        if sm == Sign.ZERO:
            return RootBox(box.poly, mid, mid, exact=mid)
        if sm == s_lo:
            lo = mid
        else:
            hi = mid
    return RootBox(box.poly, lo, hi)


# -- window predicates for cubics x^3 - a*x + b ---------------------------------
#
# The discriminant-style inequality 27*b**2 < 4*a**3 encodes |b| < 2a*sqrt(a)/
# (3*sqrt(3)) without irrational arithmetic (both sides nonnegative where it
# is applied), so the predicates below are exact integer tests.


def cubic_all_in_band(a: int, b: int) -> bool:
    """True iff x^3 - a*x + b has three distinct real roots, all in (-2, 2)."""
    if not (0 < a < 4):
        return False
    if not (2 * a - 8 < b < 8 - 2 * a):
        return False
    return b == 0 or 27 * b * b < 4 * a ** 3


def cubic_salem_split(a: int, b: int) -> bool:
    """True iff x^3 - a*x + b has two distinct roots in (-2, 2) and one in (2, oo)."""
    if not (3 < a < 12):
        return False
    if not b < -abs(2 * a - 8):
        return False
    return 27 * b * b < 4 * a ** 3


# -- exact square-root bounds ----------------------------------------------------


def sqrt_interval(lo: Fraction, hi: Fraction, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Rational L <= sqrt(lo) and U >= sqrt(hi) with ~2**-bits slack."""
    lo = Fraction(lo)
    hi = Fraction(hi)
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    scale = 1 << bits
    zl = lo.numerator * lo.denominator
    zh = hi.numerator * hi.denominator
    lower = Fraction(math.isqrt(zl * scale * scale), lo.denominator * scale)
    upper = Fraction(math.isqrt(zh * scale * scale) + 1, hi.denominator * scale)
    return lower, upper
