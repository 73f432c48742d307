import math
from fractions import Fraction

import pytest

from salemrel.realroots import refine, sqrt_interval
from salemrel.relations import (CERTIFIED_PAIRSUM, CERTIFIED_QUADSPLIT,
                                CERTIFIED_TRACE, NUMERIC_ONLY,
                                PairingViolation, RelationVector, certify,
                                find_relations, min_length_scan, pair_reduce)

_SCALE_BITS = 160
_BOX_EPS = Fraction(1, 1 << 170)


def _scaled(lo: Fraction, hi: Fraction) -> tuple[int, int]:
    s = 1 << _SCALE_BITS
    return math.floor(lo * s), math.ceil(hi * s)


def _conjugate_intervals(cert):
    """Scaled-integer enclosures of (Re, Im) for each conjugate.

    Order: alpha, 1/alpha, then both members of each unit pair by
    descending beta; the second member of a pair is the complex conjugate.
    """
    a = refine(cert.alpha, _BOX_EPS)
    out = [(_scaled(a.lo, a.hi), (0, 0)),
           (_scaled(1 / a.hi, 1 / a.lo), (0, 0))]
    for box in cert.beta_boxes[1:]:
        b = refine(box, _BOX_EPS)
        lo2, hi2 = sorted((b.lo ** 2, b.hi ** 2))
        if b.lo < 0 < b.hi:
            lo2 = Fraction(0)
        sl, sh = sqrt_interval(4 - hi2, 4 - lo2, 200)
        re = _scaled(b.lo / 2, b.hi / 2)
        im = _scaled(sl / 2, sh / 2)
        out.append((re, im))
        out.append((re, (-im[1], -im[0])))
    return out


def _dot_contains_zero(intervals, ks) -> bool:
    rlo = rhi = ilo = ihi = 0
    for (re, im), k in zip(intervals, ks):
        if k >= 0:
            rlo += k * re[0]; rhi += k * re[1]
            ilo += k * im[0]; ihi += k * im[1]
        else:
            rlo += k * re[1]; rhi += k * re[0]
            ilo += k * im[1]; ihi += k * im[0]
    return rlo <= 0 <= rhi and ilo <= 0 <= ihi


def _int_vectors(s, max_sum):
    vec = [0] * s

    def rec(i, budget):
        if i == s:
            if any(vec):
                yield tuple(vec)
            return
        for c in range(-budget, budget + 1):
            vec[i] = c
            yield from rec(i + 1, budget - abs(c))
        vec[i] = 0

    yield from rec(0, max_sum)


# -- vectors and pair reduction ---------------------------------------------------------


def test_relation_vector_basics():
    v = RelationVector((1, 1, -2, -2))
    assert v.length == 6
    with pytest.raises(ValueError):
        RelationVector((0, 0, 0, 0))
    with pytest.raises(ValueError):
        RelationVector(())


def test_pair_reduce():
    assert pair_reduce(RelationVector((1, 1, -1, -1))) == (1, -1)
    assert pair_reduce(RelationVector((1,) * 12)) == (1,) * 6
    assert pair_reduce(RelationVector((3, 3, 0, 0, -2, -2))) == (3, 0, -2)
    with pytest.raises(PairingViolation):
        pair_reduce(RelationVector((1, -1, -1, 1)))
    with pytest.raises(ValueError):
        pair_reduce(RelationVector((1, 1, 1)))  # odd length is a shape error


# -- exact certification ------------------------------------------------------------------


def test_certify_statuses(deg8_cert, deg12_cert):
    assert certify(deg8_cert, (1, -1, -1, 1)) == CERTIFIED_PAIRSUM
    assert certify(deg8_cert, (1, 1, 1, 1)) == NUMERIC_ONLY  # trace is 2
    assert certify(deg12_cert, (1, 1, 1, 1, 1, 1)) == CERTIFIED_TRACE
    assert certify(deg12_cert, (1, 0, 0, 1, 1, 0)) == CERTIFIED_QUADSPLIT
    assert certify(deg12_cert, (0, 1, 1, 0, 0, 1)) == CERTIFIED_QUADSPLIT
    assert certify(deg12_cert, (1, -1, 0, 0, 0, 0)) == NUMERIC_ONLY
    with pytest.raises(ValueError):
        certify(deg8_cert, (1, -1, -1))


def test_certify_trace_on_sextics(sextic_certs):
    for cert in sextic_certs:
        assert certify(cert, (1, 1, 1)) == CERTIFIED_TRACE


# -- relation search ----------------------------------------------------------------------


def test_deg8_pairsum_relation(deg8_cert):
    reports = find_relations(deg8_cert, max_length=8)
    assert len(reports) == 1
    r = reports[0]
    assert r.reduced == (1, -1, -1, 1)
    assert r.vector.coeffs == (1, 1, -1, -1, -1, -1, 1, 1)
    assert r.vector.length == 8
    assert r.nontrivial and r.status == CERTIFIED_PAIRSUM
    assert r.precision_bits == 64


def test_deg12_quadsplit_relations(deg12_cert):
    reports = find_relations(deg12_cert, max_length=6)
    assert len(reports) == 2
    assert {r.reduced for r in reports} == {(1, 0, 0, 1, 1, 0),
                                            (0, 1, 1, 0, 0, 1)}
    for r in reports:
        assert r.nontrivial and r.status == CERTIFIED_QUADSPLIT
        assert r.vector.length == 6


def test_sextics_only_trivial_relation(sextic_certs):
    for cert in sextic_certs:
        reports = find_relations(cert, max_length=10)
        assert len(reports) == 1
        r = reports[0]
        assert not r.nontrivial
        assert r.reduced == (1, 1, 1) and r.status == CERTIFIED_TRACE


def test_min_length_scan(deg8_cert, deg12_cert):
    assert min_length_scan(deg8_cert, 6)
    assert min_length_scan(deg12_cert, 6)
    assert min_length_scan(deg8_cert, 1)
    assert not min_length_scan(deg8_cert, 9)  # the length-8 relation is there


def test_argument_validation(deg8_cert):
    for bad in (0, 25, -3):
        with pytest.raises(ValueError):
            find_relations(deg8_cert, bad)
        with pytest.raises(ValueError):
            min_length_scan(deg8_cert, bad)
    with pytest.raises(ValueError):
        find_relations(deg8_cert, 8, precision_bits=0)


def test_screening_stable_under_higher_precision(deg8_cert, deg12_cert):
    for cert, length in ((deg8_cert, 8), (deg12_cert, 6)):
        base = [(r.reduced, r.status) for r in find_relations(cert, length)]
        fine = [(r.reduced, r.status)
                for r in find_relations(cert, length, precision_bits=128)]
        assert base == fine


# -- independent conjugate-level verification ---------------------------------------------


def test_deg8_relation_certified_against_conjugate_arithmetic(deg8_cert):
    # screen every integer vector on all 8 conjugates, no pairing assumed;
    # survivors must be exactly the +-pairsum relation
    intervals = _conjugate_intervals(deg8_cert)
    survivors = [ks for ks in _int_vectors(8, 8)
                 if _dot_contains_zero(intervals, ks)]
    expected = (1, 1, -1, -1, -1, -1, 1, 1)
    assert sorted(survivors) == sorted(
        [expected, tuple(-c for c in expected)]
    )


def test_deg12_relations_verified_on_conjugates(deg12_cert):
    intervals = _conjugate_intervals(deg12_cert)
    for reduced in ((1, 0, 0, 1, 1, 0), (0, 1, 1, 0, 0, 1), (1,) * 6):
        full = tuple(m for m in reduced for _ in range(2))
        assert _dot_contains_zero(intervals, full)
    for reduced in ((1, 0, 0, 0, 0, 0), (1, -1, 0, 0, 0, 1)):
        full = tuple(m for m in reduced for _ in range(2))
        assert not _dot_contains_zero(intervals, full)
