"""Standalone identities as runnable checks.

Each check evaluates both sides from independent primitives and reports
``|lhs - rhs| / max(1, |rhs|)``.
"""
from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from . import quad
from .core import ConfigError, UnknownIdError, ZetaRepsError
from .quad import ExpDamped, Finite, QuadratureSpec, SemiInfinite
from .specfun import (
    CONSTANTS,
    digamma_pair,
    expint_E,
    hurwitz_zeta,
    polylog,
    zeta_even,
    zeta_int,
)

PI = math.pi
E2 = math.exp(2.0)
LOG2 = math.log(2.0)

# expected value of log(G(1 + i/pi) / G(1 - i/pi)) / i
BARNES_EXPECTED = 0.232662175652953


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    formula: str
    lhs: Callable[[], complex]
    rhs: Callable[[], complex]
    tol: float


@dataclass(frozen=True)
class IdentityResult:
    id: str
    lhs: complex
    rhs: complex
    residual: float
    tol: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.residual < self.tol


class IdentityError(ZetaRepsError):
    """A side of an identity failed to evaluate."""

    def __init__(self, check_id: str, cause: Exception):
        super().__init__(f"{check_id}: {cause}")
        self.check_id = check_id
        self.cause = cause
        self.exit_code = getattr(cause, "exit_code", 1)


# ---------------------------------------------------------------- building blocks


def _sum_until(term: Callable[[int], complex], start: int = 1, tol: float = 1e-18, limit: int = 100000) -> complex:
    """Plain summation for terms that fall off at least geometrically."""
    total = 0j
    small = 0
    for k in range(start, start + limit):
        t = term(k)
        total += t
        small = small + 1 if abs(t) <= tol * max(1.0, abs(total)) else 0
        if small >= 3:
            return total
    raise ZetaRepsError("series did not settle")


def _even_zeta_series(weight: Callable[[int], complex], x2: float, tol: float = 1e-18) -> complex:
    """sum_{k>=1} zeta(2k) x2^k weight(k), for |x2| < 1."""
    return _sum_until(lambda k: zeta_even(k) * x2**k * weight(k), tol=tol)


def _arctan_sum(a: float) -> float:
    """sum_{k>=1} arctan(a/k)/k, head directly and tail through Hurwitz zeta."""
    m = max(2, int(math.ceil(2 * abs(a))))
    head = math.fsum(math.atan(a / k) / k for k in range(1, m + 1))
    # arctan(a/k)/k = sum_j (-1)^j a^{2j+1} / ((2j+1) k^{2j+2})
    tail = _sum_until(lambda j: (-1) ** j * a ** (2 * j + 1) / (2 * j + 1) * hurwitz_zeta(2 * j + 2, m + 1).real, start=0)
    return head + tail.real


def _log_sum_series() -> float:
    """sum_k log(1 + 1/(pi k)^2) via log(1+x) expansion and zeta(2j)."""
    c = 1 / PI**2
    return _even_zeta_series(lambda j: (-1) ** (j + 1) / j, c).real


def _e1_sum(omega: float) -> float:
    return _sum_until(lambda k: expint_E(1, 2 * k * omega)).real


def _e1_over_k_sum() -> float:
    return _sum_until(lambda k: expint_E(1, 2 * k) / k).real


def _sumz2k_series() -> float:
    return _even_zeta_series(lambda k: 1 / k**2, -1 / PI**2).real


def _log_sinh_over_t(t: np.ndarray) -> np.ndarray:
    """log(sinh t / t), Taylor branch near 0."""
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    small = t < 0.1
    x = t[small] ** 2
    out[small] = x * (1 / 6 + x * (-1 / 180 + x * (1 / 2835 + x * (-1 / 37800))))
    big = t[~small]
    out[~small] = np.log(-np.expm1(-2 * big) / (2 * big)) + big
    return out


def _integrate(f, domain, mode=None, tol: float = 1e-13, breakpoints=()) -> complex:
    spec = QuadratureSpec(domain, mode or quad.Smooth(), tol, breakpoints=breakpoints)
    return quad.integrate(f, spec).value


# ---------------------------------------------------------------- sides


def logsum_lhs() -> complex:
    return _log_sum_series()


def logsum_rhs() -> complex:
    return -1 - LOG2 + math.log(E2 - 1)


E1SUM_OMEGA = 1.0


def e1sum_lhs(omega: float = E1SUM_OMEGA) -> complex:
    return _e1_sum(omega)


def e1sum_rhs(omega: float = E1SUM_OMEGA) -> complex:
    # arctanh(i x)/i = arctan(x) keeps everything real for omega > 0
    return (
        -_arctan_sum(omega / PI) / PI
        + 0.5 * math.log(omega / PI)
        + 1 / (2 * omega)
        + CONSTANTS.euler_gamma / 2
    )


def d2s1_lhs() -> complex:
    return 0.5 * _sumz2k_series()


def d2s1_rhs(gamma1: Optional[float] = None) -> complex:
    g = CONSTANTS.euler_gamma
    g1 = CONSTANTS.stieltjes_gamma1 if gamma1 is None else gamma1
    # log sum: direct head plus Hurwitz tail of the log1p expansion
    m = 20
    head = math.fsum(math.log1p(1 / (PI * k) ** 2) for k in range(1, m + 1))
    c = 1 / PI**2
    tail = _sum_until(lambda j: (-1) ** (j + 1) * c**j / j * hurwitz_zeta(2 * j, m + 1).real).real
    log_sum = head + tail
    e1k = math.fsum(expint_E(1, 2 * k).real / k for k in range(1, 40))
    odd = -0.5 * math.sqrt(2 * E2 - 2) / (math.exp(-2) - 1)
    return (
        PI**2 / 12
        - g * g / 2
        - LOG2
        - g1
        + LOG2**2 / 2
        + 0.5
        - 0.5 * log_sum
        - math.log(odd)
        - e1k
    )


def e1kk_lhs() -> complex:
    return _e1_over_k_sum()


def e1kk_rhs() -> complex:
    return -_integrate(lambda t: np.log(-np.expm1(-2 * t)) / t, SemiInfinite(1.0), ExpDamped(2.0)).real


def sumz2k_lhs() -> complex:
    return _sumz2k_series()


def sumz2k_rhs() -> complex:
    return -2 * _integrate(lambda t: _log_sinh_over_t(t) / t, Finite(0.0, 1.0)).real


def gamma1_int_lhs() -> complex:
    # v = e^{-u}: dv/v = du, and e^{-2/v} is negligible once u > 4
    def f(u):
        v = np.exp(-u)
        with np.errstate(over="ignore"):
            far = np.where(u < 4.0, np.log(-np.expm1(-2 / v)), 0.0)
        return far + _log_sinh_over_t(v) + v

    return _integrate(f, SemiInfinite(0.0), ExpDamped(1.0), breakpoints=(4.0,)).real


def gamma1_int_rhs(gamma1: Optional[float] = None) -> complex:
    g = CONSTANTS.euler_gamma
    g1 = CONSTANTS.stieltjes_gamma1 if gamma1 is None else gamma1
    return -(PI**2) / 12 + g * g / 2 + g1 - LOG2**2 / 2 + 2


def barnes_const_closed() -> complex:
    """log(G(1+i/pi)/G(1-i/pi)) in closed form with Li_2(e^-2)."""
    inner = 6 + 4 * math.log(2 * PI) + 2 * polylog(2, math.exp(-2)).real - 4 * math.log(E2 - 1) - PI**2 / 3
    return 1j / (4 * PI) * inner


def barnes_const_series() -> complex:
    """i log(2 pi)/pi - i/pi + sum_k (k log((k+i/pi)/(k-i/pi)) - 2i/pi)."""
    a = 1 / PI
    # k log(...) - 2ia = 2i (k arctan(a/k) - a) = 2i sum_j (-1)^j a^{2j+1}/((2j+1) k^{2j})
    s = _even_zeta_series(lambda j: (-1) ** j * a / (2 * j + 1), a * a)
    return 1j * math.log(2 * PI) / PI - 1j / PI + 2j * s


GBARNES_POINTS = (1j / PI, 0.2 + 0.1j)


def gbarnes_lhs(t: complex) -> complex:
    """pi int_0^t v cot(pi v) dv - t log(2 pi) along the segment from 0."""
    def f(x):
        v = t * x
        # v cot(pi v) by its even series near 0
        z = PI * v
        out = np.empty_like(z)
        small = np.abs(z) < 0.1
        zs = z[small] ** 2
        out[small] = (1 - zs / 3 - zs**2 / 45 - 2 * zs**3 / 945 - zs**4 / 4725) / PI
        zb = z[~small]
        out[~small] = v[~small] * np.cos(zb) / np.sin(zb)
        return out * t

    return PI * _integrate(f, Finite(0.0, 1.0)) - t * math.log(2 * PI)


def gbarnes_rhs(t: complex) -> complex:
    b2 = t * t - t + 1 / 6
    return (
        t * cmath.log(cmath.sin(PI * t) / PI)
        + 0.5j * PI * b2
        + cmath.exp(-0.5j * PI) * polylog(2, cmath.exp(2j * PI * t)) / (2 * PI)
    )


INTV2_T = 0.25


def intv2_lhs(t: float = INTV2_T) -> complex:
    return _even_zeta_series(lambda k: 1 / (k + 1), t * t)


def intv2_rhs(t: float = INTV2_T) -> complex:
    z = cmath.exp(2j * PI * t)
    return (
        1j * PI * t / 3
        + 0.5
        - cmath.log(1 - z)
        + 1j * polylog(2, z) / (PI * t)
        - (polylog(3, z) - zeta_int(3)) / (2 * PI**2 * t * t)
    )


PSIDIFF_V = 0.5
PSIDIFF_S = 0.5


def psidiff_lhs(v: float = PSIDIFF_V, s: complex = PSIDIFF_S) -> complex:
    """sum_{k>=1} zeta(2k) v^{2k} / (2k - s)."""
    return _even_zeta_series(lambda k: 1 / (2 * k - s), v * v)


def psidiff_rhs(v: float = PSIDIFF_V, s: complex = PSIDIFF_S) -> complex:
    def f(t):
        out = np.empty(len(t), dtype=complex)
        for i, ti in enumerate(t):
            out[i] = ti ** (-s) * digamma_pair(ti)[0]
        return out

    return 0.5 * v**s * _integrate(f, Finite(0.0, v))


INTCOT2_V = 0.5
INTCOT2_S = 0.0


def intcot2_lhs(v: float = INTCOT2_V, s: complex = INTCOT2_S) -> complex:
    """sum_{k>=1} zeta(2k) (2k-1) v^{2k} / (2k - s)."""
    return _even_zeta_series(lambda k: (2 * k - 1) / (2 * k - s), v * v)


def intcot2_rhs(v: float = INTCOT2_V, s: complex = INTCOT2_S) -> complex:
    def f(t):
        # pi^2 csc^2(pi t) - 1/t^2 = -pi^2 (1/sinh^2(i pi t) - 1/(i pi t)^2)
        reg = -(PI**2) * quad.inv_sinh2_minus_inv_t2(1j * PI * t)
        return np.exp((1 - s) * np.log(t)) * reg

    return 0.5 * v**s * _integrate(f, Finite(0.0, v))


# ---------------------------------------------------------------- registry


_CHECKS = (
    IdentityCheck("LOGSUM", "sum log(1 + 1/(pi k)^2) = -1 - log 2 + log(e^2 - 1)", logsum_lhs, logsum_rhs, 1e-10),
    IdentityCheck("E1SUM", "sum E1(2 k omega) vs arctan sum, omega = 1", e1sum_lhs, e1sum_rhs, 1e-10),
    IdentityCheck("D2S1", "1/2 sum zeta(2k)(-1)^k pi^-2k / k^2 vs constants, log sum and E1 sum", d2s1_lhs, d2s1_rhs, 1e-10),
    IdentityCheck("E1KK", "sum E1(2k)/k = -int_1^inf log(1 - e^-2t)/t dt", e1kk_lhs, e1kk_rhs, 1e-10),
    IdentityCheck("SUMZ2K", "sum zeta(2k)(-1)^k pi^-2k / k^2 = -2 int_0^1 log(sinh t / t)/t dt", sumz2k_lhs, sumz2k_rhs, 1e-10),
    IdentityCheck(
        "GAMMA1_INT",
        "int_0^1 log((1 - e^-2/v)(e^2v - 1)/(2v)) dv/v = -pi^2/12 + gamma^2/2 + gamma_1 - log^2 2 / 2 + 2",
        gamma1_int_lhs,
        gamma1_int_rhs,
        1e-8,
    ),
    IdentityCheck(
        "BARNES_CONST",
        "log(G(1+i/pi)/G(1-i/pi)): closed form with Li2(e^-2) vs expected 0.232662175652953 i",
        barnes_const_closed,
        lambda: complex(0.0, BARNES_EXPECTED),
        1e-12,
    ),
    IdentityCheck(
        "GBARNES_LI",
        "pi int_0^t v cot(pi v) dv - t log 2pi vs t log(sin(pi t)/pi) + i pi B2(t)/2 - i Li2(e^2pi i t)/(2 pi)",
        lambda: gbarnes_lhs(GBARNES_POINTS[0]),
        lambda: gbarnes_rhs(GBARNES_POINTS[0]),
        1e-10,
    ),
    IdentityCheck(
        "INTV2_LI",
        "sum zeta(2k) t^2k/(k+1) vs Li2/Li3 closed form, t = 1/4",
        intv2_lhs,
        intv2_rhs,
        1e-10,
    ),
    IdentityCheck(
        "PSIDIFF",
        "sum_{k>=1} zeta(2k) v^2k/(2k-s) = v^s/2 int_0^v t^-s (psi(1+t) - psi(1-t)) dt, v = 1/2, s = 1/2",
        psidiff_lhs,
        psidiff_rhs,
        1e-10,
    ),
    IdentityCheck(
        "INTCOT2",
        "sum_{k>=1} zeta(2k)(2k-1) v^2k/(2k-s) = v^s/2 int_0^v t^(1-s) (pi^2 csc^2(pi t) - 1/t^2) dt, v = 1/2, s = 0",
        intcot2_lhs,
        intcot2_rhs,
        1e-10,
    ),
)

CHECKS = {c.id: c for c in _CHECKS}
IDENTITY_IDS = tuple(CHECKS)


def lookup_identity(check_id: str) -> IdentityCheck:
    try:
        return CHECKS[check_id]
    except KeyError:
        raise UnknownIdError(f"unknown identity id {check_id!r}") from None


def _residual(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def evaluate_identity(check_id: str) -> IdentityResult:
    check = lookup_identity(check_id)
    try:
        if check_id == "GBARNES_LI":
            return _gbarnes_result(check)
        lhs = complex(check.lhs())
        rhs = complex(check.rhs())
    except ZetaRepsError as exc:
        raise IdentityError(check_id, exc) from exc
    note = ""
    if check_id == "GAMMA1_INT":
        alt = _residual(lhs, complex(gamma1_int_rhs(gamma1=1.0)))
        note = f"gamma(1) read as Stieltjes gamma_1; residual if read as Gamma(1)=1: {alt:.3e}"
    elif check_id == "BARNES_CONST":
        series = barnes_const_series()
        note = f"series form differs from closed form by {abs(series - lhs):.3e}"
    return IdentityResult(check_id, lhs, rhs, _residual(lhs, rhs), check.tol, note)


def _gbarnes_result(check: IdentityCheck) -> IdentityResult:
    # both points are checked; the worse one is reported
    worst = None
    for t in GBARNES_POINTS:
        lhs, rhs = gbarnes_lhs(t), gbarnes_rhs(t)
        r = _residual(lhs, rhs)
        if worst is None or r > worst[2]:
            worst = (lhs, rhs, r, t)
    lhs, rhs, r, t = worst
    return IdentityResult(check.id, lhs, rhs, r, check.tol, f"worst of t in {GBARNES_POINTS}, at t={t}")


def run_identity(check_id: str) -> float:
    """Residual |lhs - rhs| / max(1, |rhs|) for one identity."""
    return evaluate_identity(check_id).residual


def run_identities(ids: Optional[Iterable[str]] = None, jobs: int = 1) -> list[IdentityResult]:
    """Evaluate several checks, results in the order of ``ids``."""
    chosen = list(IDENTITY_IDS if ids is None else ids)
    for i in chosen:
        lookup_identity(i)
    if jobs < 1:
        raise ConfigError("jobs must be >= 1")
    if jobs == 1:
        return [evaluate_identity(i) for i in chosen]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(evaluate_identity, chosen))
