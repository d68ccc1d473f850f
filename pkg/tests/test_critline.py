import cmath
import math
import warnings

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetareps import critline
from zetareps.core import ConfigError, DomainError
from zetareps.critline import (
    CRIT_FUNCS,
    FULL_ZERO,
    HALF_ZERO_DENOMINATOR,
    HALF_ZERO_NUMERATOR,
    C_and_S,
    C_of_rho,
    S_of_rho,
    ZeroBracket,
    counterexample_nu,
    eta_strip_RI,
    f_crit,
    fg_modulus_identity,
    functional_residual,
    g_crit,
    nu_factor,
    ratio_parts,
    ratio_RI,
    scan_zeros,
    zeta_via_CS,
)
from zetareps.reference import eta_reference, zeta_reference

from oracles import ETA, ZETA, ZETA_ZEROS
from test_quad import trapezoid_mellin

RHO0 = ZETA_ZEROS[0]


def oracle_zeta_line(rho):
    return complex(mpmath.zeta(complex(0.5, rho)))


def test_crit_funcs_definitions():
    s = complex(0.5, 3)
    f = -(math.pi ** (s - 1)) * cmath.sin(math.pi * s / 2) / (s - 1)
    g = 2 ** (s - 1) / complex(mpmath.gamma(s + 1))
    assert abs(f_crit(s) - f) < 1e-15 * abs(f)
    assert abs(g_crit(s) - g) < 1e-14 * abs(g)
    assert CRIT_FUNCS.f(s) == f_crit(s)
    t = np.array([0.3, 2.0])
    h = np.sqrt(t) * (1 / np.sinh(t) ** 2 - 1 / t**2)
    assert np.allclose(CRIT_FUNCS.h(t), h, rtol=1e-13)


def test_h_limits():
    small = CRIT_FUNCS.h(np.array([1e-10]))[0]
    assert abs(small / math.sqrt(1e-10) + 1 / 3) < 1e-12
    big = CRIT_FUNCS.h(np.array([60.0]))[0]
    assert abs(big + 60.0**-1.5) < 1e-15


def test_s_vanishes_at_zero():
    assert S_of_rho(0).value == 0
    c = C_of_rho(0).value
    assert abs(c - trapezoid_mellin(0.0).real) < 1e-8


def test_c_at_one_vs_trapezoid():
    ref = trapezoid_mellin(1.0)
    assert abs(C_of_rho(1).value - ref.real) < 1e-8
    assert abs(S_of_rho(1).value - ref.imag) < 1e-8


@pytest.mark.parametrize("rho", [2.0, 7.5, 12.0])
def test_mellin_against_oracle(rho):
    s = complex(0.5, rho)
    ref = complex(mpmath.zeta(s) * mpmath.gamma(s + 1) / mpmath.power(2, s - 1))
    c, sn = C_and_S(rho)
    assert abs(complex(c, sn) - ref) < 1e-12 * abs(ref)


def test_c_and_s_vanish_together_at_first_zero():
    c0, s0 = C_and_S(RHO0)
    c1, s1 = C_and_S(RHO0 + 0.3)
    scale = math.hypot(c1, s1)
    assert abs(c0) < 1e-8 * scale
    assert abs(s0) < 1e-8 * scale


def test_conjugate_in_rho():
    a = C_and_S(5.0)
    b = C_and_S(-5.0)
    assert a[0] == pytest.approx(b[0], rel=1e-15)
    assert a[1] == pytest.approx(-b[1], rel=1e-15)


def test_height_limit():
    with pytest.raises(DomainError):
        C_of_rho(1000.0)
    with pytest.raises(DomainError):
        C_of_rho(math.inf)


def test_zeta_via_cs_examples():
    a, b = zeta_via_CS(1.0)
    ref = ZETA[0.5 + 1j]
    assert abs(a - ref) < 1e-8 and abs(b - ref) < 1e-8
    a, b = zeta_via_CS(5.0)
    assert abs(a - b) < 1e-8
    a, b = zeta_via_CS(RHO0)
    assert abs(a) < 1e-8 and abs(b) < 1e-8


@pytest.mark.parametrize("rho", [1, 3, 7, 10, 25, 60])
def test_zeta_via_cs_agreement(rho):
    a, b = zeta_via_CS(rho)
    ref = oracle_zeta_line(rho)
    assert abs(a - b) < 1e-8
    assert abs(a - ref) < 1e-10 * max(1, abs(ref))


@pytest.mark.parametrize("rho", [2.0, 5.0])
def test_ratio_examples(rho):
    z = oracle_zeta_line(rho)
    assert abs(ratio_RI(rho) - z.real / z.imag) < 1e-9 * max(1, abs(z.real / z.imag))


def test_ratio_on_grid():
    checked = 0
    for rho in np.arange(0.5, 25.0001, 0.5):
        z = oracle_zeta_line(rho)
        if abs(z.imag) <= 1e-6:
            continue
        r = z.real / z.imag
        assert abs(ratio_RI(rho) - r) < 1e-8 * max(1, abs(r)), rho
        checked += 1
    assert checked >= 45


def test_ratio_parts_never_both_zero_on_grid():
    worst = min(max(abs(a) for a in ratio_parts(r)) for r in np.arange(0.1, 30.0, 0.01))
    assert worst > 1e-10


def test_fg_identity_examples():
    for rho in (1.0, 14.13, 0.0):
        assert fg_modulus_identity(rho) < 1e-12


@settings(max_examples=50, deadline=None)
@given(st.floats(0.0, 30.0))
def test_fg_identity_property(rho):
    assert fg_modulus_identity(rho) < 1e-12


def test_scan_first_zero():
    brackets = scan_zeros(14, 14.3)
    full = [b for b in brackets if b.kind == FULL_ZERO]
    assert len(full) == 1
    assert full[0].contains(14.1347251417)
    assert full[0].width <= 1e-6
    assert full[0].derivative_ratio is not None


def test_scan_second_zero():
    full = [b for b in scan_zeros(20.9, 21.1) if b.kind == FULL_ZERO]
    assert len(full) == 1
    assert full[0].contains(21.0220396388)


def test_scan_no_zero_below_fourteen():
    assert not [b for b in scan_zeros(2, 3) if b.kind == FULL_ZERO]


def test_scan_interlacing():
    brackets = scan_zeros(10, 30)
    full = [b for b in brackets if b.kind == FULL_ZERO]
    assert [round(b.rho_lo, 3) for b in full] == [round(z, 3) for z in ZETA_ZEROS]
    for lo, hi in zip(full, full[1:]):
        between = [b for b in brackets if b.kind != FULL_ZERO and lo.rho_hi < b.rho_lo < hi.rho_lo]
        assert between, (lo, hi)
    kinds = {b.kind for b in brackets}
    assert {HALF_ZERO_NUMERATOR, HALF_ZERO_DENOMINATOR} <= kinds
    # half-zeros of Re and Im really are zeros of the oracle parts
    for b in brackets:
        if b.kind == FULL_ZERO:
            continue
        z = oracle_zeta_line(0.5 * (b.rho_lo + b.rho_hi))
        part = z.imag if b.kind == HALF_ZERO_DENOMINATOR else z.real
        assert abs(part) < 1e-5


def test_scan_parallel_matches_serial():
    assert scan_zeros(10, 26, jobs=2) == scan_zeros(10, 26)


def test_scan_validation():
    with pytest.raises(ConfigError):
        scan_zeros(3, 2)
    with pytest.raises(ConfigError):
        scan_zeros(0, 2)
    with pytest.raises(ConfigError):
        ZeroBracket(1.0, 1.0, FULL_ZERO)
    with pytest.raises(ConfigError):
        ZeroBracket(1.0, 2.0, "Other")


def test_scan_coarse_step_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        scan_zeros(13.5, 15.5, step=1.5)
    full = [b for b in scan_zeros(13.5, 15.5, step=0.05) if b.kind == FULL_ZERO]
    assert len(full) == 1
    assert all(issubclass(w.category, RuntimeWarning) for w in caught)


@pytest.mark.parametrize("sigma,rho,tol", [(0.5, 3.0, 1e-8), (0.3, 2.0, 1e-7), (0.7, -4.0, 1e-8)])
def test_eta_strip_examples(sigma, rho, tol):
    re, im = eta_strip_RI(sigma, rho)
    ref = ETA[complex(sigma, rho)]
    assert abs(re.value.real - ref.real) < tol
    assert abs(im.value.real - ref.imag) < tol


@settings(max_examples=15, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(0.0, 8.0))
def test_eta_strip_conjugate_symmetry(sigma, rho):
    re_p, im_p = eta_strip_RI(sigma, rho)
    re_m, im_m = eta_strip_RI(sigma, -rho)
    assert abs(re_p.value - re_m.value) < 1e-12
    assert abs(im_p.value + im_m.value) < 1e-12


@pytest.mark.parametrize("rho", [1.0, 2.5, 6.0])
def test_eta_strip_consistent_across_sigma(rho):
    for sigma in (0.3, 0.5, 0.7):
        s = complex(sigma, rho)
        re, im = eta_strip_RI(sigma, rho)
        z = (re.value.real + 1j * im.value.real) / (1 - 2 ** (1 - s))
        assert abs(z - complex(mpmath.zeta(s))) < 1e-8


def test_eta_strip_reports_loss_at_height():
    re, im = eta_strip_RI(0.5, 20.0)
    ref = complex(mpmath.altzeta(complex(0.5, 20.0)))
    got = re.value.real + 1j * im.value.real
    assert abs(got - ref) <= re.err_estimate + im.err_estimate
    assert re.digits_lost > 5


def test_eta_strip_precondition():
    for sigma in (0.0, 1.2, -0.5):
        with pytest.raises(DomainError):
            eta_strip_RI(sigma, 1.0)


def test_counterexample():
    s0 = 0.3 + 2j
    assert abs(nu_factor(1, s0) - 1) < 1e-12
    assert abs(counterexample_nu(s0, s0)) < 1e-10
    assert abs(zeta_reference(s0).value) > 0.1
    fn = lambda s: counterexample_nu(s, s0)
    assert functional_residual(fn, 2 + 1j) < 1e-9


@settings(max_examples=10, deadline=None)
@given(st.floats(-2.5, 3.5), st.floats(-6, 6))
def test_nu_symmetric_under_reflection(sig, rho):
    s = complex(sig, rho)
    s0 = 0.3 + 2j
    a, b = nu_factor(s, s0), nu_factor(1 - s, s0)
    assert abs(a - b) <= 1e-9 * max(1, abs(a))


def test_nu_degenerate_s0():
    with pytest.raises(DomainError):
        nu_factor(2, 3.0)
