import math

import mpmath
import numpy as np
import pytest

from zetareps import intreps
from zetareps.core import ConfigError, ConvergenceError, DomainError
from zetareps.quad import (
    ExpDamped,
    Finite,
    OscillatoryDamped,
    QuadratureSpec,
    SemiInfinite,
    Smooth,
    integrate,
    integrate_contour_theta,
    inv_sinh2_minus_inv_t2,
    mellin_inv_sinh2,
)

from oracles import ZETA


def h_numpy(t):
    """sqrt(t) (1/sinh^2 t - 1/t^2) with a Taylor branch near 0."""
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    small = t < 0.05
    ts = t[small]
    t2 = ts * ts
    out[small] = -1 / 3 + t2 / 15 - 2 * t2 * t2 / 189 + t2**3 / 675
    tl = t[~small]
    e = np.exp(-2 * tl)
    out[~small] = 4 * e / (1 - e) ** 2 - 1 / (tl * tl)
    return np.sqrt(t) * out


def trapezoid_mellin(rho: float, n: int = 2_000_000) -> complex:
    """int_0^inf h(t) t^{i rho} dt by the trapezoid rule in u = ln t."""
    u = np.linspace(-40.0, 95.0, n)
    t = np.exp(u)
    f = h_numpy(t) * t * np.exp(1j * rho * u)
    du = u[1] - u[0]
    return complex(du * (f.sum() - 0.5 * (f[0] + f[-1])))


# 20 integrals with closed forms: (integrand, spec, exact)
SELF_TEST = [
    (lambda t: np.exp(-t), QuadratureSpec(SemiInfinite(0.0), ExpDamped(1.0)), 1.0),
    (lambda t: t * np.exp(-t), QuadratureSpec(SemiInfinite(0.0), ExpDamped(1.0)), 1.0),
    (lambda t: t**3 * np.exp(-2 * t), QuadratureSpec(SemiInfinite(0.0), ExpDamped(2.0)), 6 / 16),
    (lambda t: np.exp(-t * t), QuadratureSpec(SemiInfinite(0.0), Smooth()), math.sqrt(math.pi) / 2),
    (lambda t: 1 / (1 + t * t), QuadratureSpec(SemiInfinite(0.0), Smooth()), math.pi / 2),
    (lambda t: np.sin(t), QuadratureSpec(Finite(0.0, math.pi)), 2.0),
    (lambda t: np.cos(10 * t), QuadratureSpec(Finite(0.0, 1.0)), math.sin(10) / 10),
    (lambda t: np.sqrt(t), QuadratureSpec(Finite(0.0, 1.0)), 2 / 3),
    (lambda t: 1 / np.sqrt(t), QuadratureSpec(Finite(0.0, 1.0)), 2.0),
    (lambda t: np.log(t), QuadratureSpec(Finite(0.0, 1.0)), -1.0),
    (lambda t: np.exp(1j * t), QuadratureSpec(Finite(0.0, math.pi)), 2j),
    (lambda t: t / np.sinh(t), QuadratureSpec(SemiInfinite(1e-300), ExpDamped(1.0)), math.pi**2 / 4),
    (lambda t: t / (np.exp(t) - 1), QuadratureSpec(SemiInfinite(1e-300), ExpDamped(1.0)), math.pi**2 / 6),
    (lambda t: t**2 / (np.exp(t) - 1), QuadratureSpec(SemiInfinite(1e-300), ExpDamped(1.0)), 2 * ZETA[3]),
    (lambda t: 1 / np.cosh(t), QuadratureSpec(SemiInfinite(0.0), ExpDamped(1.0)), math.pi / 2),
    (lambda t: np.exp(-t) * np.cos(t), QuadratureSpec(SemiInfinite(0.0), ExpDamped(1.0)), 0.5),
    (lambda t: np.exp(-t) * np.sin(3 * t), QuadratureSpec(SemiInfinite(0.0), ExpDamped(1.0)), 0.3),
    (lambda t: 1 / (1 + t) ** 3, QuadratureSpec(SemiInfinite(0.0), Smooth()), 0.5),
    (lambda t: t**4, QuadratureSpec(Finite(-1.0, 2.0)), 33 / 5),
    (lambda t: np.exp(-t) / np.sqrt(t), QuadratureSpec(SemiInfinite(1e-300), ExpDamped(1.0)), math.sqrt(math.pi)),
]


def test_exp_example():
    out = integrate(lambda t: np.exp(-t), QuadratureSpec(SemiInfinite(0.0), ExpDamped(1.0), 1e-13))
    assert abs(out.value - 1) < 1e-12
    assert out.nodes_used > 0
    assert out.digits_lost == 0


def test_gr527_gives_zeta3():
    out = intreps.evaluate("ZETA_GR527", 3)
    assert abs(out.value - ZETA[3]) < 1e-10


def test_log_oscillatory_against_trapezoid():
    spec = QuadratureSpec(SemiInfinite(0.0), OscillatoryDamped(5.0, 0.5), 1e-12)
    u_spec = integrate(lambda t: np.sqrt(t) * inv_sinh2_minus_inv_t2(t) * np.cos(5 * np.log(t)), spec)
    ref = trapezoid_mellin(5.0).real
    assert abs(u_spec.value.real - ref) < 1e-8


def test_contour_theta():
    assert abs(integrate_contour_theta(lambda th: np.ones_like(th)).value - math.pi) < 1e-14
    out = integrate_contour_theta(lambda th: np.exp(2j * th))
    assert abs(out.value) < 1e-13


@pytest.mark.parametrize("tol", [1e-6, 1e-8, 1e-10])
def test_error_estimate_reliability(tol):
    covered = 0
    for f, spec, exact in SELF_TEST:
        spec = QuadratureSpec(spec.domain, spec.mode, tol)
        out = integrate(f, spec)
        err = abs(out.value - exact)
        assert err < 100 * tol * max(1, abs(exact))
        covered += err <= max(out.err_estimate, 4 * np.finfo(float).eps * abs(exact))
    assert covered >= 0.95 * len(SELF_TEST)


def test_nodes_growth_bounded():
    for f, spec, _ in SELF_TEST:
        for tol in (1e-6, 1e-8):
            a = integrate(f, QuadratureSpec(spec.domain, spec.mode, tol))
            b = integrate(f, QuadratureSpec(spec.domain, spec.mode, tol / 2))
            assert b.nodes_used <= 8 * a.nodes_used


def test_linearity():
    spec = QuadratureSpec(SemiInfinite(0.0), ExpDamped(1.0), 1e-11)
    f = lambda t: np.exp(-t) * np.cos(t)
    g = lambda t: t * np.exp(-2 * t)
    a, b = 2.5, -1.5j
    lhs = integrate(lambda t: a * f(t) + b * g(t), spec)
    rf, rg = integrate(f, spec), integrate(g, spec)
    combined = abs(a) * rf.err_estimate + abs(b) * rg.err_estimate + lhs.err_estimate
    assert abs(lhs.value - (a * rf.value + b * rg.value)) <= combined + 1e-15


def test_scalar_integrand_is_accepted():
    out = integrate(lambda t: math.exp(-t), QuadratureSpec(Finite(0.0, 1.0)))
    assert abs(out.value - (1 - math.exp(-1))) < 1e-14


def test_convergence_failure_carries_estimate():
    spec = QuadratureSpec(Finite(0.0, 1.0), Smooth(), 1e-14, max_depth=2)
    with pytest.raises(ConvergenceError) as info:
        integrate(lambda t: np.sin(1 / (t + 1e-3)), spec)
    assert info.value.best is not None


def test_spec_validation():
    with pytest.raises(ConfigError):
        Finite(1.0, 0.0)
    with pytest.raises(ConfigError):
        ExpDamped(0.0)
    with pytest.raises(ConfigError):
        QuadratureSpec(Finite(0.0, 1.0), tol=0.0)


def test_inv_sinh2_branches_agree():
    t = np.array([0.999999, 1.000001, 1e-3, 0.5, 3.0])
    ref = np.array([1 / math.sinh(x) ** 2 - 1 / x**2 for x in t])
    got = inv_sinh2_minus_inv_t2(t)
    assert np.allclose(got[[0, 1, 3, 4]], ref[[0, 1, 3, 4]], rtol=1e-13, atol=0)
    assert abs(got[2] + 1 / 3) < 1e-6
    z = np.array([0.3 + 0.4j, 2 + 1j])
    ref_c = 1 / np.sinh(z) ** 2 - 1 / z**2
    assert np.allclose(inv_sinh2_minus_inv_t2(z), ref_c, rtol=1e-12)


@pytest.mark.parametrize("p", [0.5 + 1j, 0.5 - 30j, -0.5, 0.9 + 3j, -0.9 - 7j, 0.5 + 120j])
def test_mellin_inv_sinh2_vs_mpmath(p):
    p = complex(p)
    ref = complex(mpmath.zeta(p) * mpmath.gamma(p + 1) / mpmath.power(2, p - 1))
    out = mellin_inv_sinh2(p)
    assert abs(out.value - ref) < 1e-12 * abs(ref)
    assert abs(out.value - ref) <= out.err_estimate


def test_mellin_inv_sinh2_domain():
    with pytest.raises(DomainError):
        mellin_inv_sinh2(1.5)
