import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetareps import intreps
from zetareps.core import ConfigError, DomainError, PoleError, reflect_functional
from zetareps.reference import PartialSumSpec, eta_reference, partial_sum, zeta_reference

from oracles import ETA, ZETA, ZETA_ZEROS, rel


def test_zeta_examples():
    assert abs(zeta_reference(2).value - math.pi**2 / 6) < 1e-13
    assert abs(zeta_reference(-1).value + 1 / 12) < 1e-13
    assert abs(zeta_reference(complex(0.5, 14.1347251417)).value) < 1e-9


def test_zeta_pole_and_height_limit():
    with pytest.raises(PoleError):
        zeta_reference(1)
    with pytest.raises(DomainError):
        zeta_reference(complex(0.5, 600))


@pytest.mark.parametrize("s", sorted(ZETA, key=lambda z: (z.real, z.imag)))
def test_zeta_frozen(s):
    assert rel(zeta_reference(s).value, ZETA[s]) < 1e-13


@pytest.mark.parametrize("s", sorted(ETA, key=lambda z: (z.real, z.imag)))
def test_eta_frozen(s):
    assert rel(eta_reference(s).value, ETA[s]) < 1e-13


def test_eta_examples():
    assert eta_reference(1).value == pytest.approx(math.log(2), abs=1e-15)
    assert abs(eta_reference(2).value - math.pi**2 / 12) < 1e-14
    assert abs(eta_reference(0).value - 0.5) < 1e-14


def test_eta_near_one_is_continuous():
    for d in (1e-3, -1e-3, 1e-3j, 0.05 + 0.05j):
        s = 1 + d
        assert abs(eta_reference(s).value - complex(mpmath.altzeta(s))) < 1e-13


@settings(max_examples=100, deadline=None)
@given(st.floats(-12, 12), st.floats(-60, 60))
def test_zeta_vs_mpmath(sig, rho):
    s = complex(sig, rho)
    if abs(s - 1) < 1e-6:
        return
    ref = complex(mpmath.zeta(s))
    assert abs(zeta_reference(s).value - ref) <= 1e-12 * max(1.0, abs(ref))


def test_partial_sum_examples():
    assert partial_sum(2, PartialSumSpec(2)) == 1.25
    assert abs(partial_sum(1, PartialSumSpec(3, alternating=True)) - 5 / 6) < 1e-15
    s = complex(0.5, 3)
    naive = sum(k ** (-s) for k in range(1, 101))
    assert abs(partial_sum(s, PartialSumSpec(100)) - naive) < 1e-14 * 100


def test_partial_sum_validation():
    with pytest.raises(ConfigError):
        PartialSumSpec(0)


def _grid():
    for sig in (1.1, 1.5, 2.0, 2.5, 2.9):
        for rho in (-20, -12, -5, -1, 0, 0.5, 3, 8, 15, 20):
            yield complex(sig, rho)


def test_functional_equation_residual():
    for s in _grid():
        lhs = zeta_reference(1 - s).value
        assert abs(lhs - reflect_functional(zeta_reference(s).value, s)) < 1e-10 * max(1, abs(lhs))


def test_eta_zeta_relation_on_grid():
    for s in _grid():
        z = zeta_reference(s).value
        assert abs(eta_reference(s).value - (1 - 2 ** (1 - s)) * z) < 1e-12


@pytest.mark.parametrize("s", [1.5, 2.5, 4.0])
@pytest.mark.parametrize("N", [1, 5, 10, 20])
def test_remainder_bound_directions(s, N):
    true_rem = zeta_reference(s).value.real - partial_sum(s, PartialSumSpec(N)).real
    lower, upper = intreps.remainder_bounds(s, N)
    assert lower <= true_rem <= upper


def test_first_zero_located_by_reference():
    lo, hi = 14.1, 14.2
    f = lambda r: (zeta_reference(complex(0.5, r)).value * mpmath.exp(1j * mpmath.siegeltheta(r))).real
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    assert abs(0.5 * (lo + hi) - ZETA_ZEROS[0]) < 1e-9
