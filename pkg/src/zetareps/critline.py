"""Zeta on and near the critical line.

On s = 1/2 + i rho,

    zeta(s) = g(s) int_0^inf h(t) t^{i rho} dt = g(s) (C(rho) + i S(rho))

with f(s) = -pi^(s-1) sin(pi s/2)/(s-1), g(s) = 2^(s-1)/Gamma(s+1) and
h(t) = sqrt(t) (1/sinh(t)^2 - 1/t^2).  Since |f| = |g| on the line, the
functional equation turns this into two real one-parameter forms, one
carried by C and one by S.
"""
from __future__ import annotations

import cmath
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import quad
from .core import DEFAULT_OPTIONS, ConfigError, ConvergenceError, DomainError, EvalOptions, EvalOutcome, to_complex
from .quad import ExpDamped, Finite, OscillatoryDamped, QuadratureSpec, SemiInfinite
from .reference import zeta_reference
from .specfun import _log_sin_pi, gamma, loggamma

PI = math.pi
SQRT_PI = math.sqrt(PI)
_LOG_2PI = math.log(2 * PI)
# C, S ~ e^{-pi rho/2} underflow past here
_RHO_MAX = 440.0


# ---------------------------------------------------------------- f, g, h


def log_f_crit(s: complex) -> complex:
    s = to_complex(s)
    return cmath.log(-1 / (s - 1)) + (s - 1) * math.log(PI) + _log_sin_pi(s / 2)


def log_g_crit(s: complex) -> complex:
    s = to_complex(s)
    return (s - 1) * math.log(2) - loggamma(s + 1)


def f_crit(s: complex) -> complex:
    s = to_complex(s)
    if abs(s.imag) < 200:
        return -(PI ** (s - 1)) * cmath.sin(PI * s / 2) / (s - 1)
    return cmath.exp(log_f_crit(s))


def g_crit(s: complex) -> complex:
    return cmath.exp(log_g_crit(s))


def h_crit(t):
    """sqrt(t) (1/sinh(t)^2 - 1/t^2) for t > 0, vectorized."""
    t = np.asarray(t, dtype=float)
    return np.sqrt(t) * quad.inv_sinh2_minus_inv_t2(t)


@dataclass(frozen=True)
class CritFuncs:
    f: object = f_crit
    g: object = g_crit
    h: object = h_crit


CRIT_FUNCS = CritFuncs()


# ---------------------------------------------------------------- C and S


def _mellin_h(rho: float, opts: EvalOptions) -> EvalOutcome:
    """int_0^inf h(t) t^{i rho} dt = C(rho) + i S(rho), on a rotated ray."""
    rho = float(rho)
    if not math.isfinite(rho):
        raise DomainError("rho must be finite")
    if abs(rho) > _RHO_MAX:
        raise DomainError(f"C and S are below the double range for |rho| > {_RHO_MAX:g}")
    tol = max(2e-14, min(opts.rel_tol, opts.abs_tol))
    return quad.mellin_inv_sinh2(complex(0.5, rho), tol, opts.max_nodes)


def C_of_rho(rho: float, opts: EvalOptions = DEFAULT_OPTIONS) -> EvalOutcome:
    """int_0^inf h(t) cos(rho ln t) dt."""
    out = _mellin_h(rho, opts)
    return EvalOutcome(out.value.real, out.err_estimate, out.nodes_used, 0, True, out.digits_lost)


def S_of_rho(rho: float, opts: EvalOptions = DEFAULT_OPTIONS) -> EvalOutcome:
    """int_0^inf h(t) sin(rho ln t) dt."""
    if rho == 0:
        return EvalOutcome(0.0)
    out = _mellin_h(rho, opts)
    return EvalOutcome(out.value.imag, out.err_estimate, out.nodes_used, 0, True, out.digits_lost)


def C_and_S(rho: float, opts: EvalOptions = DEFAULT_OPTIONS) -> tuple[float, float]:
    v = _mellin_h(rho, opts).value
    return v.real, (0.0 if rho == 0 else v.imag)


def zeta_via_CS(rho: float, opts: EvalOptions = DEFAULT_OPTIONS) -> tuple[complex, complex]:
    """zeta(1/2 + i rho) from C alone and from S alone."""
    s = complex(0.5, rho)
    lg = log_g_crit(s)
    # |g/f| = 1 on the line, so work with the phase q = g/f
    q = cmath.exp(lg - log_f_crit(s))
    if abs(1 + q) < 1e-14 or abs(1 - q) < 1e-14:
        raise DomainError(f"f +- g vanishes at rho={rho}: one of the forms is indeterminate")
    c, s_val = C_and_S(rho, opts)

    def times_g(x: float) -> complex:
        return cmath.exp(lg + cmath.log(x)) if x else 0j

    return 2 * times_g(c) / (1 + q), 2j * times_g(s_val) / (1 - q)


def fg_modulus_identity(rho: float) -> float:
    """| |f|^2 - |g|^2 | / |g|^2 on the critical line."""
    s = complex(0.5, rho)
    return abs(math.expm1(2 * (log_f_crit(s).real - log_g_crit(s).real)))


# ---------------------------------------------------------------- real/imaginary ratio


def _cp_cm(rho: float) -> tuple[float, float]:
    gm = gamma(complex(0.5, rho))
    ch = math.cosh(PI * rho / 2)
    sh = math.sinh(PI * rho / 2)
    cp = gm.real * ch + gm.imag * sh
    cm = gm.imag * ch - gm.real * sh
    return cp, cm


def ratio_parts(rho: float) -> tuple[float, float]:
    """Numerator and denominator of Re zeta / Im zeta on the critical line."""
    cp, cm = _cp_cm(rho)
    c = math.cos(rho * _LOG_2PI)
    s = math.sin(rho * _LOG_2PI)
    return cm * c - cp * s, cp * c + cm * s - SQRT_PI


def ratio_RI(rho: float) -> float:
    """Re zeta(1/2 + i rho) / Im zeta(1/2 + i rho) from Gamma(1/2 + i rho) alone."""
    num, den = ratio_parts(rho)
    if den == 0:
        raise ZeroDivisionError(f"Im zeta vanishes at rho={rho} (half-zero)")
    return num / den


# ---------------------------------------------------------------- zero scan


HALF_ZERO_NUMERATOR = "HalfZeroNumerator"
HALF_ZERO_DENOMINATOR = "HalfZeroDenominator"
FULL_ZERO = "FullZero"


@dataclass(frozen=True)
class ZeroBracket:
    rho_lo: float
    rho_hi: float
    kind: str
    # predicted (Re zeta)'/(Im zeta)' at a full zero, from the ratio formula
    derivative_ratio: Optional[float] = None

    def __post_init__(self) -> None:
        if not self.rho_lo < self.rho_hi:
            raise ConfigError("bracket needs rho_lo < rho_hi")
        if self.kind not in (HALF_ZERO_NUMERATOR, HALF_ZERO_DENOMINATOR, FULL_ZERO):
            raise ConfigError(f"unknown bracket kind {self.kind!r}")

    @property
    def width(self) -> float:
        return self.rho_hi - self.rho_lo

    def contains(self, rho: float) -> bool:
        return self.rho_lo <= rho <= self.rho_hi


def _bisect(fn, lo: float, hi: float, f_lo: float, width: float) -> tuple[float, float]:
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid)
        if f_mid == 0:
            return mid - width / 4, mid + width / 4
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return lo, hi


def _cs_grid(rhos: list[float], opts: EvalOptions) -> list[tuple[float, float]]:
    return [C_and_S(r, opts) for r in rhos]


def scan_zeros(
    rho_min: float,
    rho_max: float,
    step: float = 0.05,
    opts: EvalOptions = DEFAULT_OPTIONS,
    width: float = 1e-6,
    jobs: int = 1,
) -> list[ZeroBracket]:
    """Zero brackets on the critical line.

    A C bracket and an S bracket whose midpoints lie within 2*step of each
    other form a FullZero; unpaired C or S changes come from f +- g = 0 and
    are not reported.  Half-zeros are sign changes of the ratio numerator,
    labelled by whether Re zeta or Im zeta vanishes there.
    """
    if not 0 < rho_min < rho_max:
        raise ConfigError("scan needs 0 < rho_min < rho_max")
    if not step > 0:
        raise ConfigError("step must be positive")
    n = max(1, int(math.ceil((rho_max - rho_min) / step)))
    rhos = [rho_min + (rho_max - rho_min) * i / n for i in range(n + 1)]
    if jobs > 1:
        chunks = [rhos[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_cs_grid, chunks, [opts] * jobs))
        values: list[tuple[float, float]] = [None] * len(rhos)  # type: ignore[list-item]
        for i, part in enumerate(parts):
            values[i::jobs] = part
    else:
        values = _cs_grid(rhos, opts)

    def refine(index: int, comp: int) -> tuple[float, float]:
        lo, hi = rhos[index], rhos[index + 1]
        return _bisect(lambda r: C_and_S(r, opts)[comp], lo, hi, values[index][comp], width)

    c_br, s_br = [], []
    for i in range(n):
        for comp, store in ((0, c_br), (1, s_br)):
            a, b = values[i][comp], values[i + 1][comp]
            if a == 0 or (a > 0) != (b > 0):
                store.append(refine(i, comp))

    out: list[ZeroBracket] = []
    used: set[int] = set()
    for lo, hi in c_br:
        mid = 0.5 * (lo + hi)
        match = None
        for j, (lo2, hi2) in enumerate(s_br):
            if j not in used and abs(0.5 * (lo2 + hi2) - mid) < 2 * step:
                match = j
                break
        if match is None:
            continue
        used.add(match)
        lo2, hi2 = s_br[match]
        a, b = max(lo, lo2), min(hi, hi2)
        if not a < b:
            warnings.warn(
                f"C and S brackets near rho={mid:.6f} paired but disjoint; reporting their hull",
                RuntimeWarning,
                stacklevel=2,
            )
            a, b = min(lo, lo2), max(hi, hi2)
        num, den = ratio_parts(0.5 * (a + b))
        out.append(ZeroBracket(a, b, FULL_ZERO, num / den if den else None))

    # num = sqrt(pi) sin(psi) and den = sqrt(pi) (cos(psi) - 1) for a phase psi(rho):
    # num changes sign both where Re zeta = 0 (den = -2 sqrt(pi)) and where
    # Im zeta = 0 (den touches 0 without changing sign)
    def num(r: float) -> float:
        return ratio_parts(r)[0]

    prev = num(rhos[0])
    for i in range(n):
        cur = num(rhos[i + 1])
        if (prev > 0) != (cur > 0):
            lo, hi = _bisect(num, rhos[i], rhos[i + 1], prev, width)
            den = ratio_parts(0.5 * (lo + hi))[1]
            kind = HALF_ZERO_DENOMINATOR if den > -SQRT_PI else HALF_ZERO_NUMERATOR
            out.append(ZeroBracket(lo, hi, kind))
        prev = cur
    out.sort(key=lambda b: (b.rho_lo, b.kind))
    return out


# ---------------------------------------------------------------- eta in the strip


def eta_strip_RI(sigma: float, rho: float, opts: EvalOptions = DEFAULT_OPTIONS) -> tuple[EvalOutcome, EvalOutcome]:
    """Real and imaginary parts of eta(sigma + i rho) for 0 < sigma <= 1.

    The integral over the whole t line is folded onto t >= 0.  The weight
    e^{rho atan t} grows to e^{|rho| pi/2} on one side, so that factor is
    pulled out and the cancellation is reported as digits lost.
    """
    sigma = float(sigma)
    rho = float(rho)
    if not 0 < sigma <= 1:
        raise DomainError("strip form needs 0 < sigma <= 1")
    if not math.isfinite(rho):
        raise DomainError("rho must be finite")
    sp = math.sin(PI * sigma)
    cp = math.cos(PI * sigma)
    sin2 = sp * sp
    big = abs(rho) * PI / 2
    phi_c = complex(rho, sigma)
    log_s2 = math.log(sigma * sigma)
    # e^{A(0)} = sigma^{i rho}, times the scale
    a0 = cmath.exp(0.5j * rho * log_s2 - big)

    def even_odd(t):
        # e^{A} cosh(phi) and e^{A} sinh(phi) with the e^{|rho| pi/2} scale removed
        at = np.arctan(t)
        amp = -0.5 * sigma * np.log1p(t * t) + 0.5j * rho * (log_s2 + np.log1p(t * t))
        phi = phi_c * at
        ep = np.exp(amp + phi - big)
        em = np.exp(amp - phi - big)
        return 0.5 * (ep + em), 0.5 * (ep - em)

    def integrand(t):
        t = np.asarray(t, dtype=float)
        e = np.exp(-PI * sigma * t)
        e2 = e * e
        den = (1 - e2) ** 2 + 4 * e2 * sin2
        ca = 2 * e * (1 + e2) / den  # cosh / (sinh^2 + sin^2)
        sb = 2 * e * (1 - e2) / den  # sinh / (sinh^2 + sin^2)
        ch, sh = even_odd(t)
        # sp * ca integrates to 1/(2 sigma) on its own; subtracting a0 * ca
        # removes the spike of width ~sp at t = 0
        return 2 * sp * ca * (ch - a0) + 2j * cp * sb * sh

    tol = max(2e-14, min(opts.rel_tol, opts.abs_tol))
    brk = tuple(x for x in (1.0, abs(rho)) if x > 0)
    spec = QuadratureSpec(SemiInfinite(0.0), ExpDamped(PI * sigma), tol, max_nodes=opts.max_nodes, breakpoints=brk)
    body = quad.integrate(integrand, spec)
    scaled = body.value + a0 / sigma
    pre = 0.5 * sigma ** (1 - sigma)
    grow = math.exp(big)
    x = pre * grow * scaled
    err = pre * grow * (body.err_estimate + 1e-16 * (abs(body.value) + abs(a0 / sigma)))
    mass = quad.integrate(lambda t: np.abs(integrand(t)), QuadratureSpec(SemiInfinite(0.0), ExpDamped(PI * sigma), 1e-6, breakpoints=brk))
    spread = pre * grow * (mass.value.real + abs(a0) / sigma)
    err += pre * grow * 1e-16 * mass.value.real
    lost = math.log10(spread / abs(x)) if x != 0 and spread > abs(x) else 0.0
    # eta = conj(x)
    re = EvalOutcome(x.real, err, body.nodes_used, 0, True, lost)
    im = EvalOutcome(-x.imag, err, body.nodes_used, 0, True, lost)
    return re, im


# ---------------------------------------------------------------- counterexample


def nu_factor(s: complex, s0: complex) -> complex:
    """Entire factor, symmetric under s -> 1-s, with nu(1) = 1 and zeros at +-s0, +-conj(s0)."""
    s = to_complex(s)
    s0 = to_complex(s0)
    if s0.imag == 0 and s0.real == math.floor(s0.real):
        raise DomainError("s0 must not be a real integer")
    sig, r = s0.real, s0.imag
    norm = 1.0 / (math.cosh(PI * r) ** 2 - math.cos(PI * sig) ** 2) ** 2
    c0 = s0.conjugate()
    return (
        norm
        * cmath.sin(PI * (s - s0))
        * cmath.sin(PI * (s + s0))
        * cmath.sin(PI * (s - c0))
        * cmath.sin(PI * (s + c0))
    )


def counterexample_nu(s: complex, s0: complex) -> complex:
    """nu(s) zeta(s): obeys zeta's functional equation yet vanishes at s0."""
    return nu_factor(s, s0) * zeta_reference(to_complex(s)).value


def functional_residual(fn, s: complex) -> float:
    """|F(1-s) - 2 (2 pi)^-s cos(pi s/2) Gamma(s) F(s)| relative to |F(1-s)|."""
    s = to_complex(s)
    lhs = fn(1 - s)
    rhs = 2 * (2 * PI) ** (-s) * cmath.cos(PI * s / 2) * gamma(s) * fn(s)
    return abs(lhs - rhs) / max(abs(lhs), 1e-300)
