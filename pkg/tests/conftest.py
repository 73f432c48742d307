import pytest

from salemrel.polyarith import IntPoly, norm_form, pair_sum_lift, trace_lift
from salemrel.salemkit import enum_deg6_trace0, salem_check


@pytest.fixture(scope="session")
def deg8_cert():
    cert = salem_check(pair_sum_lift(IntPoly((1, 4, 1))))
    assert cert
    return cert


@pytest.fixture(scope="session")
def deg12_cert():
    g = norm_form(IntPoly((-3, -5, 0, 1)), IntPoly((2, 1)), 2)
    cert = salem_check(trace_lift(g))
    assert cert
    return cert


@pytest.fixture(scope="session")
def sextic_certs():
    certs = enum_deg6_trace0()
    assert len(certs) == 4
    return certs
