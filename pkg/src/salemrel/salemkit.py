"""Salem-number certification and the constructive enumerations built on it.

A monic reciprocal f of even degree 2s is the minimal polynomial of a Salem
number exactly when it is irreducible and its trace polynomial g (with
f(x) = x^s g(x + 1/x)) has one root in (2, oo) and s-1 roots in (-2, 2); the
root beyond 2 is beta_1 = alpha + 1/alpha.  Everything here stays in exact
rational arithmetic: root placement by Sturm counts, alpha bracketed through
interval arithmetic on beta_1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import SalemSeq, seq_poly, cyclotomic_progressions, ProgressionSet
from .factorint import is_irreducible
from .polyarith import (IntPoly, pair_sum_lift, trace, trace_lift,
                        trace_project)
from .realroots import (EndpointIsRootError, RootBox, count_roots,
                        cubic_salem_split, isolate_roots, refine,
                        sqrt_interval)

_BETA_WIDTH = Fraction(1, 1 << 16)
_ALPHA_BITS = 80


class RejectionKind(enum.Enum):
    NOT_MONIC = "NotMonic"
    NOT_RECIPROCAL = "NotReciprocal"
    ODD_DEGREE = "OddDegree"
    DEGREE_TOO_SMALL = "DegreeTooSmall"
    REDUCIBLE = "Reducible"
    ROOT_WINDOW_VIOLATION = "RootWindowViolation"


@dataclass(frozen=True)
class RejectionReason:
    kind: RejectionKind
    detail: str = ""

    def __bool__(self) -> bool:  # rejections are falsy, certificates truthy
        return False


@dataclass(frozen=True)
class SalemCertificate:
    """Certified minimal polynomial of a Salem number.

    beta_boxes bracket the roots of trace_poly in descending order: the first
    lies in (2, oo), the remaining s-1 in (-2, 2); alpha is the larger root
    of x^2 - beta_1*x + 1, bracketed by a sign change of minpoly itself.
    """

    minpoly: IntPoly
    degree: int
    trace: int
    alpha: RootBox
    trace_poly: IntPoly
    beta_boxes: tuple[RootBox, ...]

    def __bool__(self) -> bool:
        return True


class ConstructionFailed(RuntimeError):
    """A construction that is guaranteed to succeed did not (internal bug)."""


def _confine(box: RootBox, lo: int, hi) -> RootBox:
    """Refine until the box lies strictly inside (lo, hi); hi may be None."""
    while True:
        if box.exact is not None:
            return box
        if box.lo > lo and (hi is None or box.hi < hi):
            return box
        box = refine(box, box.width / 2)


def _alpha_box(f: IntPoly, beta1: RootBox) -> RootBox:
    """Bracket alpha = (beta_1 + sqrt(beta_1^2 - 4)) / 2 from the beta_1 box.

    Valid because alpha is increasing in beta_1 on (2, oo) and the only real
    roots of f exceeding 1 is alpha itself.
    """
    box = beta1
    target = Fraction(1, 1 << (_ALPHA_BITS + 8))
    if box.width > target:
        box = refine(box, target)
    lo, hi = box.lo, box.hi
    rl, ru = sqrt_interval(lo * lo - 4, hi * hi - 4, _ALPHA_BITS)
    alo = (lo + rl) / 2
    ahi = (hi + ru) / 2
    if not 1 < alo < ahi:
        raise AssertionError("alpha bracket collapsed")
    return RootBox(f, alo, ahi)


def salem_check(f: IntPoly):
    """SalemCertificate if f is a Salem minimal polynomial, else RejectionReason.

    Decision chain: monic -> reciprocal -> even degree -> degree >= 4 ->
    trace-polynomial root placement (one root in (2, oo), s-1 in (-2, 2)) ->
    irreducibility of the trace polynomial.  With the placement established,
    irreducibility of f is equivalent to irreducibility of g, so no complex
    arithmetic is ever needed.
    """
    if f.is_zero or not f.is_monic:
        return RejectionReason(RejectionKind.NOT_MONIC)
    if f.reciprocal() != f:
        return RejectionReason(RejectionKind.NOT_RECIPROCAL)
    if f.degree % 2 == 1:
        return RejectionReason(RejectionKind.ODD_DEGREE)
    if f.degree < 4:
        return RejectionReason(RejectionKind.DEGREE_TOO_SMALL)
    g = trace_project(f)
    s = f.degree // 2
    if g.sign_at(2) == 0 or g.sign_at(-2) == 0:
        return RejectionReason(RejectionKind.ROOT_WINDOW_VIOLATION,
                               "root at the window boundary")
    n_up = count_roots(g, 2, None)
    if n_up != 1:
        return RejectionReason(RejectionKind.ROOT_WINDOW_VIOLATION,
                               f"{n_up} roots beyond 2 (need exactly 1)")
    n_band = count_roots(g, -2, 2)
    if n_band != s - 1:
        return RejectionReason(RejectionKind.ROOT_WINDOW_VIOLATION,
                               f"{n_band} roots in (-2,2) (need {s - 1})")
    if not is_irreducible(g):
        return RejectionReason(RejectionKind.REDUCIBLE)
    boxes = [refine(b, _BETA_WIDTH) for b in isolate_roots(g)]
    boxes.reverse()
    boxes[0] = _confine(boxes[0], 2, None)
    boxes[1:] = [_confine(b, -2, 2) for b in boxes[1:]]
    alpha = _alpha_box(f, boxes[0])
    return SalemCertificate(minpoly=f, degree=f.degree, trace=trace(f),
                            alpha=alpha, trace_poly=g,
                            beta_boxes=tuple(boxes))


def build_salem_from_trace_poly(g: IntPoly):
    """Lift a monic g to x^s*g(x+1/x) and certify, checking placement first."""
    if g.is_zero or not g.is_monic or g.degree < 1:
        raise ValueError("monic polynomial of degree >= 1 required")
    s = g.degree
    if g.sign_at(2) == 0 or g.sign_at(-2) == 0:
        return RejectionReason(RejectionKind.ROOT_WINDOW_VIOLATION,
                               "root at the window boundary")
    if count_roots(g, 2, None) != 1 or count_roots(g, -2, 2) != s - 1:
        return RejectionReason(RejectionKind.ROOT_WINDOW_VIOLATION)
    return salem_check(trace_lift(g))


# -- degree-6 trace-0 enumeration --------------------------------------------------


@dataclass(frozen=True)
class Deg6Trace0Result:
    pairs: tuple[tuple[int, int], ...]
    discarded_cubics: tuple[IntPoly, ...]
    certificates: tuple[SalemCertificate, ...]


def enum_deg6_trace0_detail() -> Deg6Trace0Result:
    """Exhaustive degree-6 trace-0 Salem search via the cubic window sweep.

    A trace-0 Salem sextic has trace polynomial x^3 - a*x + b with two roots
    in (-2, 2) and one in (2, oo); the window predicate confines (a, b) to
    finitely many pairs, swept here in full.
    """
    pairs = []
    for a in range(4, 12):
        for b in range(-40, 0):
            if cubic_salem_split(a, b):
                pairs.append((a, b))
    pairs.sort(key=lambda ab: (ab[0], -ab[1]))
    discarded = []
    certs = []
    for a, b in pairs:
        cubic = IntPoly((b, -a, 0, 1))
        if not is_irreducible(cubic):
            discarded.append(cubic)
            continue
        cert = salem_check(trace_lift(cubic))
        if not cert:
            raise ConstructionFailed(f"window pair ({a},{b}) failed to lift")
        certs.append(cert)
    return Deg6Trace0Result(tuple(pairs), tuple(discarded), tuple(certs))


def enum_deg6_trace0() -> tuple[SalemCertificate, ...]:
    return enum_deg6_trace0_detail().certificates


# -- degree-4k enumeration from root-window polynomials h --------------------------


def _coeff_bound(k: int, j: int) -> int:
    """Symmetric-function bound for the coefficient of x^(k-j): roots consist
    of k-1 values of modulus < 2 and one of modulus < 6."""
    return (math.comb(k - 1, j) * 2 ** j
            + (6 * math.comb(k - 1, j - 1) * 2 ** (j - 1) if j >= 1 else 0))


def _ceil_gt(x: Fraction) -> int:
    """Smallest integer strictly greater than x."""
    return math.floor(x) + 1


def _floor_lt(x: Fraction) -> int:
    """Largest integer strictly less than x."""
    return math.ceil(x) - 1


def _interval_eval(coeffs: list[Fraction], lo: Fraction, hi: Fraction):
    """Range of a polynomial (descending coeffs) over [lo, hi], by interval
    Horner; conservative but exact-rational."""
    rlo = rhi = Fraction(0)
    for c in coeffs:
        a, b, cc, d = rlo * lo, rlo * hi, rhi * lo, rhi * hi
        rlo = min(a, b, cc, d) + c
        rhi = max(a, b, cc, d) + c
    return rlo, rhi


def window_poly_search(k: int) -> list[IntPoly]:
    """All monic integer h of degree k with k-1 roots in (-2, 1/4) and one
    root in (-6, -2).

    Enumerates coefficients top-down.  At level m the partial data determine
    D_m = h^(k-m) up to its constant term, which is linear in the new
    coefficient; necessary conditions (endpoint signs on (-6, 1/4), weak sign
    alternation at the critical points of D_m, the crude symmetric-function
    coefficient bound) clip the integer range before descending.  The final
    exact filter is a pair of Sturm counts on h itself.
    """
    if k < 2:
        raise ValueError("k >= 2 required")
    quarter = Fraction(1, 4)
    results: list[IntPoly] = []

    def descend(m: int, coeffs: list[int], crit_boxes):
        # known part of D_m (descending powers), with the constant term open
        slope = math.factorial(k - m)
        known = [math.factorial(k - j) // math.factorial(m - j) * c
                 for j, c in enumerate([1] + coeffs)]
        lo_b = -_coeff_bound(k, m)
        hi_b = _coeff_bound(k, m)
        # D_m(1/4) > 0
        val = sum(Fraction(c) * quarter ** (m - j) for j, c in enumerate(known))
        lo_b = max(lo_b, _ceil_gt(-val / slope))
        # (-1)^m * D_m(-6) > 0
        val = sum(Fraction(c) * Fraction(-6) ** (m - j)
                  for j, c in enumerate(known))
        if m % 2 == 0:
            lo_b = max(lo_b, _ceil_gt(-val / slope))
        else:
            hi_b = min(hi_b, _floor_lt(-val / slope))
        # weak alternation at the critical points (roots of D_{m-1}, descending)
        frac_known = [Fraction(c) for c in known] + [Fraction(0)]
        for idx, (blo, bhi) in enumerate(crit_boxes):
            elo, ehi = _interval_eval(frac_known, blo, bhi)
            if idx % 2 == 0:  # largest critical point first: need D_m <= 0
                hi_b = min(hi_b, math.floor(-elo / slope))
            else:  # need D_m >= 0 somewhere in the box
                lo_b = max(lo_b, math.ceil(-ehi / slope))
        for c in range(lo_b, hi_b + 1):
            if m == k:
                h = IntPoly(tuple(reversed([1] + coeffs + [c])))
                if (h.sign_at(-6) == 0 or h.sign_at(-2) == 0
                        or h.sign_at(quarter) == 0):
                    continue
                if (count_roots(h, -2, quarter) == k - 1
                        and count_roots(h, -6, -2) == 1):
                    results.append(h)
                continue
            d_m = IntPoly(tuple(reversed(known + [0]))) + IntPoly((c * slope,))
            try:
                if count_roots(d_m, -6, quarter) != m:
                    continue
            except EndpointIsRootError:
                # a derivative root on the window edge cannot come from a
                # strictly confined h
                continue
            boxes = isolate_roots(d_m)
            if len(boxes) != m:
                continue
            boxes = [refine(b, Fraction(1, 64)) for b in boxes]
            boxes.reverse()
            descend(m + 1, coeffs + [c],
                    [(b.lo, b.hi) for b in boxes])

    descend(1, [], [])
    results.sort(key=IntPoly.sort_key)
    return results


@dataclass(frozen=True)
class WindowEnumResult:
    """Outcome of the degree-4k enumeration: window-satisfying h's and the
    Salem certificates of those whose lift is irreducible."""

    k: int
    satisfying: tuple[IntPoly, ...]
    salem: tuple[SalemCertificate, ...]


def pair_sum_enum(k: int) -> WindowEnumResult:
    """Every Salem number of degree 4k whose conjugates admit the four-term
    constant-sum pattern: h window search, lift, certify."""
    satisfying = window_poly_search(k)
    certs = []
    for h in satisfying:
        cert = salem_check(pair_sum_lift(h))
        if cert:
            certs.append(cert)
    return WindowEnumResult(k, tuple(satisfying), tuple(certs))


# -- trace-0 Salem numbers of every even degree >= 6 -------------------------------

FAMILIES: tuple[SalemSeq, ...] = (
    SalemSeq(IntPoly((-1, -1, 0, 1)), 1),
    SalemSeq(IntPoly((-1, -1, 1)), -1, divide_by_x_minus_1=True),
    SalemSeq(IntPoly((-1, 0, -1, 1)), -1, divide_by_x_minus_1=True),
)


def family_degree_shift(seq: SalemSeq) -> int:
    """Degree of the emitted member minus n."""
    return seq.f.degree - (1 if seq.divide_by_x_minus_1 else 0)


@dataclass(frozen=True)
class Trace0Detail:
    certificate: SalemCertificate
    family: int  # 1-based family index; 0 = degree-6 direct list
    n: int
    attempts: tuple[tuple[int, int, str], ...]  # (family, n, rejection kind)


def trace0_salem_detail(d: int) -> Trace0Detail:
    """Trace-0 Salem certificate of degree d, trying the three sequence
    families in order; some family always clears its bad-degree progressions.
    """
    if d % 2 != 0 or d < 6:
        raise ValueError("even degree >= 6 required")
    if d == 6:
        return Trace0Detail(enum_deg6_trace0()[0], 0, 0, ())
    attempts = []
    for idx, seq in enumerate(FAMILIES, start=1):
        n = d - family_degree_shift(seq)
        if n < 2:
            continue
        g = seq_poly(seq, n)
        cert = salem_check(g)
        if cert:
            if cert.trace != 0:
                raise ConstructionFailed(f"family {idx} gave nonzero trace")
            return Trace0Detail(cert, idx, n, tuple(attempts))
        attempts.append((idx, n, cert.kind.value))
    raise ConstructionFailed(f"no family produced degree {d}")


def trace0_salem(d: int) -> SalemCertificate:
    return trace0_salem_detail(d).certificate


def family_progressions(family: int) -> ProgressionSet:
    """Index progressions (in n) of cyclotomic factors for family 1, 2 or 3."""
    if family not in (1, 2, 3):
        raise ValueError("family must be 1, 2 or 3")
    return cyclotomic_progressions(FAMILIES[family - 1])


@dataclass(frozen=True)
class BadDegreeReport:
    family: int
    shift: int  # d = n + shift
    n_entries: tuple[tuple[int, tuple[int, ...]], ...]
    d_entries: tuple[tuple[int, tuple[int, ...]], ...]
    sporadic_n: tuple[int, ...]
    sporadic_d: tuple[int, ...]
    bad_degrees: tuple[int, ...]  # enumerated bad d up to the requested bound


def bad_degrees(family: int, max_degree: int) -> BadDegreeReport:
    """Degrees d where the family member keeps a cyclotomic factor.

    Translates the n-progressions by the family's degree shift and enumerates
    the union up to max_degree.
    """
    seq = FAMILIES[family - 1]
    shift = family_degree_shift(seq)
    ps = family_progressions(family)
    n_entries = tuple((e.order, tuple(sorted(e.residues))) for e in ps.entries)
    d_entries = tuple((order, tuple(sorted((r + shift) % order for r in res)))
                      for order, res in n_entries)
    sporadic_n = tuple(n for _, n in ps.sporadic)
    sporadic_d = tuple(n + shift for n in sporadic_n)
    bad = set()
    for d in range(2 + shift, max_degree + 1):
        n = d - shift
        hit = any(n % order in res for order, res in n_entries)
        if not hit and n in sporadic_n:
            hit = True
        if hit:
            bad.add(d)
    return BadDegreeReport(family, shift, n_entries, d_entries,
                           sporadic_n, sporadic_d, tuple(sorted(bad)))
