"""Catalog of series representations of zeta and of its split pieces.

The split pieces are

    zeta_minus(s) = int_0^omega t^s / sinh(t)^2 dt
    zeta_plus(s)  = int_omega^inf t^s / sinh(t)^2 dt

with ``zeta(s) Gamma(s+1) / 2^(s-1) = zeta_minus(s) + zeta_plus(s)``.

Every entry reduces to ``closed + outer * sum_k term(k)``.  Geometric series
are summed directly, algebraically convergent ones through an extrapolation
of geometrically sampled partial sums, and m-sums whose summand expands in powers of 1/m^2 are summed
directly up to a cut M with the rest added as a combination of Hurwitz zeta
values.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Mapping, Optional

from . import quad
from .core import (
    DEFAULT_OPTIONS,
    AllS,
    ConfigError,
    ConvergenceError,
    Custom,
    DomainError,
    EvalOptions,
    EvalOutcome,
    PoleError,
    RegionError,
    SigmaGreaterThan,
    SigmaLessThan,
    UnknownIdError,
    ValidityRegion,
    classify_region,
    digits_lost,
    to_complex,
)
from .reference import zeta_reference
from .specfun import (
    digamma,
    expint_E,
    gamma,
    gamma_ratio,
    hurwitz_zeta,
    gamma_upper,
    hyp1f1_1,
    hyp2f1_series,
    loggamma,
    polylog,
    rgamma,
    zeta_even,
    zeta_int,
)

PI = math.pi
_LOG_2PI = math.log(2 * PI)
KINDS = ("Infinite", "FiniteRecursion", "Split")
TARGETS = ("zeta", "zeta_head", "zeta_minus", "zeta_plus", "kappa")


# ---------------------------------------------------------------- zeta values


def _is_int(z: complex) -> bool:
    return z.imag == 0 and z.real == math.floor(z.real)


@lru_cache(maxsize=4096)
def _zeta(z: complex) -> complex:
    """zeta at an auxiliary argument; exact tables on the integers."""
    if _is_int(z) and abs(z.real) < 300:
        return complex(zeta_int(int(z.real)))
    if z.real > 30:
        # few Dirichlet terms suffice far right
        total = 1 + 0j
        n = 2
        while True:
            t = cmath.exp(-z * math.log(n))
            total += t
            if abs(t) < 1e-18:
                return total
            n += 1
    return zeta_reference(z).value


@lru_cache(maxsize=4096)
def _log_zeta(z: complex) -> Optional[complex]:
    """A logarithm of zeta(z), or None where zeta(z) = 0.

    Far left of the strip zeta overflows, so the functional equation is
    applied in log form.
    """
    if z.real > -20:
        v = _zeta(z)
        return None if v == 0 else cmath.log(v)
    w = 1 - z
    if _is_int(z) and int(z.real) % 2 == 0:
        return None
    return (
        math.log(2)
        + cmath.log(cmath.cos(PI * w / 2))
        + loggamma(w)
        - w * _LOG_2PI
        + cmath.log(_zeta(w))
    )


def _scaled_zeta(z: complex, log_scale: complex) -> complex:
    """zeta(z) * exp(log_scale) without overflow in either factor."""
    lz = _log_zeta(z)
    if lz is None:
        return 0j
    return cmath.exp(lz + log_scale)


def _sin_half_pi(s: complex) -> complex:
    """sin(pi s / 2), exactly zero at even integers."""
    if _is_int(s) and int(s.real) % 2 == 0:
        return 0j
    return cmath.sin(PI * s / 2)


def _cos_half_pi(s: complex) -> complex:
    """cos(pi s / 2), exactly zero at odd integers."""
    if _is_int(s) and int(s.real) % 2 == 1:
        return 0j
    return cmath.cos(PI * s / 2)


def _falling(s: complex, k: int) -> complex:
    """s (s-1) ... (s-k+1) = Gamma(s+1)/Gamma(s-k+1)."""
    out = 1 + 0j
    for j in range(k):
        out *= s - j
    return out


def _pochhammer(a: complex, n: int) -> complex:
    out = 1 + 0j
    for j in range(n):
        out *= a + j
    return out


def _log_e2w_minus_1(omega: float) -> float:
    return 2 * omega + math.log1p(-math.exp(-2 * omega))


def _coth(x: float) -> float:
    return 1.0 / math.tanh(x)


# ---------------------------------------------------------------- summation


class _Neumaier:
    __slots__ = ("total", "comp", "abs_total")

    def __init__(self) -> None:
        self.total = 0j
        self.comp = 0j
        self.abs_total = 0.0

    def add(self, x: complex) -> None:
        for part, unit in ((x.real, 1), (x.imag, 1j)):
            cur = self.total.real if unit == 1 else self.total.imag
            t = cur + part
            if abs(cur) >= abs(part):
                c = (cur - t) + part
            else:
                c = (part - t) + cur
            self.comp += c * unit
            if unit == 1:
                self.total = complex(t, self.total.imag)
            else:
                self.total = complex(self.total.real, t)
        self.abs_total += abs(x)

    @property
    def value(self) -> complex:
        return self.total + self.comp


def _d_transform_estimate(samples: list[tuple[int, complex, complex]], m: int) -> complex:
    """Solve S_R = S + R a_R sum_{j<m} beta_j R^-j over the first m+1 samples."""
    import numpy as np

    A = np.zeros((m + 1, m + 1), dtype=complex)
    rhs = np.zeros(m + 1, dtype=complex)
    for i, (R, a_R, S_R) in enumerate(samples[: m + 1]):
        w = R * a_R
        A[i, 0] = 1.0
        for j in range(m):
            A[i, 1 + j] = -w / float(R) ** j
        rhs[i] = S_R
    return complex(np.linalg.solve(A, rhs)[0])


@dataclass
class _Plan:
    term: Callable[[int], complex]
    start: int = 0
    closed: complex = 0j
    outer: complex = 1.0
    accel: str = "plain"  # plain | extrap | finite | tail | split
    last: Optional[int] = None
    tail: Optional[Callable[[int], complex]] = None
    formal: bool = False
    # first sampled index for extrapolation, late enough that geometric
    # components of the summand have died out
    extrap_from: int = 0


def _run_plain(plan: _Plan, opts: EvalOptions):
    acc = _Neumaier()
    small = 0
    k = plan.start
    outer = abs(plan.outer)
    n = 0
    last_mag = 0.0
    while n < opts.max_terms:
        t = plan.term(k)
        if not cmath.isfinite(t):
            raise DomainError(f"non-finite series term at k={k}")
        acc.add(t)
        n += 1
        k += 1
        mag = outer * abs(t)
        last_mag = mag
        if mag < opts.abs_tol * max(1.0, outer * abs(acc.value)):
            small += 1
            if small >= 3:
                return acc, n, last_mag
        else:
            small = 0
    if plan.formal:
        return acc, n, last_mag
    best = EvalOutcome(plan.closed + plan.outer * acc.value, last_mag, 0, n, True, 0.0)
    raise ConvergenceError(f"series not converged after {n} terms", best)


def _run_extrap(plan: _Plan, opts: EvalOptions):
    """Sidi's d(1)-transform sampled on geometrically spaced partial sums.

    Sparse sampling keeps the linear systems well conditioned for
    logarithmically convergent series, where Levin-type transforms on
    consecutive partial sums lose most of the double precision range.
    """
    acc = _Neumaier()
    outer = abs(plan.outer)
    target = max(opts.abs_tol, 1e-15)
    first = plan.start + max(8, plan.extrap_from)
    grid = []
    r = float(first)
    while len(grid) < 18:
        R = int(round(r))
        if not grid or R > grid[-1]:
            grid.append(R)
        r *= 1.3
    samples: list[tuple[int, complex, complex]] = []
    best = (math.inf, 0j)
    prev = None
    hits = 0
    small = 0
    k = plan.start
    n = 0
    gi = 0
    while gi < len(grid) and n < opts.max_terms:
        t = plan.term(k)
        if not cmath.isfinite(t):
            raise DomainError(f"non-finite series term at k={k}")
        acc.add(t)
        n += 1
        if outer * abs(t) < opts.abs_tol * max(1.0, outer * abs(acc.value)):
            small += 1
            if small >= 3:
                return acc.value, acc.abs_total, n, outer * abs(t)
        else:
            small = 0
        if k == grid[gi]:
            gi += 1
            if t != 0:
                samples.append((k, t, acc.value))
            m = len(samples) - 1
            if m >= 2:
                est = _d_transform_estimate(samples, m)
                if prev is not None:
                    diff = outer * abs(est - prev)
                    if diff < best[0]:
                        best = (diff, est)
                    if diff < target * max(1.0, outer * abs(est)):
                        hits += 1
                        if hits >= 2:
                            return est, acc.abs_total, n, diff
                    else:
                        hits = 0
                prev = est
        k += 1
    diff, est = best
    # accept the most stable order when it is within a few hundred ulps of the target
    if diff < 1e3 * target * max(1.0, outer * abs(est)):
        return est, acc.abs_total, n, diff
    out = EvalOutcome(plan.closed + plan.outer * est, diff, 0, n, True, 0.0)
    raise ConvergenceError(f"series extrapolation stalled (estimate {diff:.3g})", out)


def _execute(plan: _Plan, opts: EvalOptions) -> EvalOutcome:
    if plan.outer == 0 and plan.accel == "split":
        return EvalOutcome(plan.closed, 4e-16 * abs(plan.closed), 0, 0, True, 0.0, plan.formal)
    if plan.accel == "extrap":
        total, abs_sum, n, err = _run_extrap(plan, opts)
    elif plan.accel in ("finite", "tail"):
        acc = _Neumaier()
        n = 0
        for k in range(plan.start, plan.last + 1):
            acc.add(plan.term(k))
            n += 1
        if plan.tail is not None:
            acc.add(plan.tail(plan.last))
        total, abs_sum = acc.value, acc.abs_total
        err = 4e-16 * abs_sum * abs(plan.outer)
    else:
        # plain and split (whose tail is summed plainly)
        acc, n, last_mag = _run_plain(plan, opts)
        total, abs_sum = acc.value, acc.abs_total
        err = 3 * last_mag + 4e-16 * abs_sum * abs(plan.outer)
    value = plan.closed + plan.outer * total
    spread = abs(plan.closed) + abs(plan.outer) * abs_sum
    lost = digits_lost(spread, value)
    err += 1e-16 * spread
    return EvalOutcome(value, err, 0, n, True, lost, plan.formal)


def _hurwitz_tail(coeffs: Callable[[int], complex], power: Callable[[int], float], j0: int, M: int, tol: float = 1e-17) -> complex:
    """sum_{j>=j0} coeffs(j) * zeta_H(power(j), M + 1), stopped on small terms."""
    total = 0j
    small = 0
    for j in range(j0, j0 + 400):
        t = coeffs(j) * hurwitz_zeta(power(j), M + 1)
        total += t
        if abs(t) <= tol * max(1e-300, abs(total)):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise ConvergenceError("Hurwitz tail expansion did not converge")


# ---------------------------------------------------------------- kappa


def _kappa_closed(p: int, omega: float) -> float:
    w = omega
    c = _coth(w)
    sh2 = math.sinh(w) ** 2
    if p == 1:
        return -0.5 + w * c / 2
    if p == 2:
        return -0.5 + w * w / (4 * sh2) + w * c / 4
    if p == 3:
        return (
            3 * w / 16 * c**3
            - 0.5 * c**2
            + w * c * (-3 + 2 * w * w) / (16 * sh2)
            + (8 + 3 * w * w) / (16 * sh2)
        )
    raise ConfigError("closed form available for p = 1, 2, 3 only")


def kappa_series(r: int, p: int, omega: float) -> float:
    """sum_m m^r / (1 + t^2 m^2)^p with t = pi/omega, direct head plus Hurwitz tail."""
    if p < 1 or not r < 2 * p - 1:
        raise DomainError(f"kappa diverges for r={r}, p={p}")
    if not omega > 0:
        raise DomainError("omega must be positive")
    t = PI / omega
    # binomial expansion in 1/(t m)^2 converges quickly once t M > 2
    M = max(4, int(math.ceil(2.0 / t)))
    head = math.fsum(m**r / (1 + (t * m) ** 2) ** p for m in range(1, M + 1))

    def coeff(j: int) -> float:
        return math.comb(p + j - 1, j) * (-1) ** j * t ** (-2 * p - 2 * j)

    tail = _hurwitz_tail(coeff, lambda j: 2 * p + 2 * j - r, 0, M)
    return head + tail.real


def kappa_direct(r: int, p: int, omega: float, n_terms: int = 1_000_000) -> float:
    """Plain truncated sum of the first ``n_terms`` terms (no tail correction)."""
    import numpy as np

    t = PI / omega
    m = np.arange(1, n_terms + 1, dtype=float)
    terms = m**r / (1.0 + (t * m) ** 2) ** p
    return float(math.fsum(terms[::-1]))


def kappa(r: int, p: int, omega: float) -> float:
    """kappa(r, p, pi/omega); closed form for r = 0, p <= 3."""
    if p < 1 or not r < 2 * p - 1:
        raise DomainError(f"kappa diverges for r={r}, p={p}")
    if not omega > 0:
        raise DomainError("omega must be positive")
    if r == 0 and p in (1, 2, 3):
        return _kappa_closed(p, omega)
    return kappa_series(r, p, omega)


# ---------------------------------------------------------------- catalog types


@dataclass(frozen=True)
class SeriesRep:
    id: str
    formula: str
    region: ValidityRegion
    setup: Callable[[complex, Mapping[str, Any]], _Plan]
    params: Mapping[str, Any] = field(default_factory=dict)
    kind: str = "Infinite"
    target: str = "zeta"
    formal: bool = False

    def term(self, k: int, s: complex, params: Optional[Mapping[str, Any]] = None) -> complex:
        """The k-th summand, outer factor included."""
        plan = self.setup(to_complex(s), {**self.params, **(params or {})})
        return plan.outer * plan.term(k)

    def closed_terms(self, s: complex, params: Optional[Mapping[str, Any]] = None) -> complex:
        plan = self.setup(to_complex(s), {**self.params, **(params or {})})
        return plan.closed


def _omega(params: Mapping[str, Any], below_pi: bool = False) -> float:
    w = float(params["omega"])
    if not w > 0:
        raise ConfigError("omega must be positive")
    if below_pi and not w < PI:
        raise DomainError(f"series needs omega < pi (got {w})")
    return w


# ---------------------------------------------------------------- entries: zeta


def _setup_zeta0(s, p):
    if _is_int(s) and s.real >= 0 and int(s.real) % 2 == 0:
        # the series collapses to zeta(2n)
        return _Plan(lambda k: 0j, 0, complex(zeta_even(int(s.real) // 2)), 1.0, "finite", -1)
    outer = -2 / PI * _sin_half_pi(s)

    def term(k):
        z = -1.5 if k == 0 else zeta_even(k) - 1.0
        return (-1) ** k * z / (2 * k - s)

    # sum_k (-1)^k / (2k - s) in closed form
    ones = 0.25 * (digamma(0.5 - s / 4) - digamma(-s / 4))
    return _Plan(term, 0, outer * ones, outer)


def _setup_gamma_sum(s, p):
    outer = 2**s * PI ** (s - 1) * _sin_half_pi(s) / (2 ** (1 - s) - 1)

    def term(k):
        return 4.0**-k * _zeta(1 - s + 2 * k) * gamma_ratio(2 - s + 2 * k, 2 * k + 2)

    return _Plan(term, 0, 0j, outer)


def _setup_gamma_sum2(s, p):
    outer = 2**s * PI ** (s - 1) * _sin_half_pi(s) / (2 ** (1 - s) - 2 + s)

    def term(k):
        return 4.0**-k * _zeta(1 - s + 2 * k) * gamma_ratio(2 - s + 2 * k, 2 * k + 2)

    return _Plan(term, 1, 0j, outer)


def _setup_tyho(s, p):
    outer = PI ** (s - 1) * _sin_half_pi(s) / (1 - 2 ** (1 - s))

    def term(k):
        return (2 - 2 ** (s - 2 * k)) * _zeta(1 - s + 2 * k) * gamma_ratio(1 - s + 2 * k, 2 * k + 2)

    return _Plan(term, 1, 0j, outer, "extrap", extrap_from=28)


def _setup_gamma_sum2a(s, p):
    outer = rgamma(s) / (2**s - 1 - s)

    def term(k):
        return 4.0**-k * _zeta(s + 2 * k) * gamma_ratio(1 + s + 2 * k, 2 * k + 2)

    return _Plan(term, 1, 0j, outer)


def _scaled_eta(z: complex, log_scale: complex) -> complex:
    """eta(z) * exp(log_scale), overflow-free; eta(1) = log 2."""
    if z == 1:
        return math.log(2) * cmath.exp(log_scale)
    if (1 - z).real > 60:
        # 1 - 2^{1-z} = -2^{1-z} (1 - 2^{z-1})
        log_f = 1j * PI + (1 - z) * math.log(2) + cmath.log(1 - 2 ** (z - 1))
        return _scaled_zeta(z, log_scale + log_f)
    f = 1 - 2 ** (1 - z)
    if f == 0:
        return 0j
    return _scaled_zeta(z, log_scale + cmath.log(f))


def _setup_from_eta(s, p):
    lq = math.log(PI * PI / 4)

    def term(k):
        scale = k * lq - loggamma(k + 0.5) - loggamma(k + 1)
        return (-1) ** k * _scaled_eta(s - 2 * k, scale)

    return _Plan(term, 0, 0j, -math.sqrt(PI), "extrap", extrap_from=28)


def _setup_from_zeta(s, p):
    outer = -0.5 / (1 - 2 ** (-s))
    lq = math.log(PI * PI)

    def term(k):
        scale = k * lq - loggamma(2 * k + 1)
        return (-1) ** k * _scaled_eta(s - 2 * k, scale)

    return _Plan(term, 1, 0j, outer, "extrap", extrap_from=28)


def _setup_from_zeta_reflected(s, p):
    outer = 0.5 * PI**s / ((2 ** (-s) - 1) * _cos_half_pi(s))

    def inv_gammas(k):
        # 1/(Gamma(2k+1) Gamma(s-2k)) via reflection once s - 2k is far left
        z = s - 2 * k
        if z.real > -20:
            return rgamma(z) / math.factorial(2 * k)
        return cmath.sin(PI * z) / PI * gamma_ratio(1 - z, 2 * k + 1)

    def term(k):
        return _zeta(1 - s + 2 * k) * (2 ** (s - 2 * k - 1) - 1) * inv_gammas(k)

    return _Plan(term, 1, 0j, outer, "extrap", extrap_from=28)


def _exp_1f1(b: complex, z: float) -> complex:
    """e^{-z} 1F1(1; b; z) for z > 0, without overflow at large z."""
    if z > 30 and z > 2 * abs(b):
        a = b - 1
        return a * cmath.exp(-a * math.log(z)) * (gamma(a) - gamma_upper(a, z))
    return math.exp(-z) * hyp1f1_1(b, z)


def _setup_combined(s, p):
    w = _omega(p)
    outer = 4 * w ** (s + 1) / (2 ** (1 - s) * gamma(s + 1))

    def term(k):
        z = 2 * k * w
        return k * (expint_E(-s, z) + _exp_1f1(s + 2, z) / (s + 1))

    return _Plan(term, 1, 0j, outer, "extrap")


def _setup_sinh2_formal(s, p):
    lead = -_sin_half_pi(s) / (s - 1)

    def f(t):
        import numpy as np

        e = np.exp(-2 * PI * t)
        return np.exp((1 - s) * np.log(t)) * 4 * e / (1 - e) ** 2

    integral = quad.integrate(f, quad.QuadratureSpec(quad.SemiInfinite(1.0), quad.ExpDamped(2 * PI), 1e-13)).value

    def term(k):
        return (-1) ** k * (2 * k - 1) * _zeta(complex(2 * k)) / (2 * k - s)

    plan = _Plan(term, 0, lead * PI * integral, lead * 2 / PI, formal=True)
    return plan


# ---------------------------------------------------------------- entries: zeta_minus


def _setup_minus1(s, p):
    w = _omega(p, below_pi=True)
    x = (w / PI) ** 2

    def term(k):
        return (-x) ** k * (k - 0.5) * _zeta(complex(2 * k)) / (2 * k - 1 + s)

    return _Plan(term, 0, 0j, 4 * w ** (s - 1))


def _minus_closing(s, w):
    return -(w**s) * _coth(w) + s * w ** (s - 1) / (s - 1)


def _lerch_small(b: complex, y: float, j0: int) -> complex:
    """sum_{j>=j0} b/(b+j) (-y)^j for 0 <= y < 1."""
    total = 0j
    power = (-y) ** j0
    j = j0
    while True:
        t = b / (b + j) * power
        total += t
        if abs(t) <= 1e-17 * max(abs(total), 1e-300) or power == 0:
            return total
        power *= -y
        j += 1


def _tail_cut(w: float) -> int:
    # omega/(pi (M+1)) <= 1/2 keeps the 1/m^2 expansion fast
    return max(2, int(math.ceil(2 * w / PI)))


def _setup_minus2(s, p):
    w = _omega(p)
    b = 0.5 + s / 2
    q = (w / PI) ** 2

    def term(m):
        y = q / (m * m)
        f = _lerch_small(b, y, 0) if y < 0.5 else hyp2f1_series(1, b, b + 1, -y)
        return f / (m * m)

    M = _tail_cut(w)

    def tail(M):
        return _hurwitz_tail(lambda j: b / (b + j) * (-q) ** j, lambda j: 2 + 2 * j, 0, M)

    outer = 2 * s * w ** (s + 1) / (PI * PI * (s + 1))
    return _Plan(term, 1, _minus_closing(s, w), outer, "tail", M, tail)


def _setup_minus3(s, p):
    w = _omega(p)
    b = 0.5 + s / 2

    def term(k):
        # Gamma(1/2+s/2) Gamma(k+1) / Gamma(k+3/2+s/2) = k! / (b)_{k+1}
        return math.factorial(k) / _pochhammer(b, k + 1) * kappa_series(0, k + 1, w)

    return _Plan(term, 0, _minus_closing(s, w), s * w ** (s - 1))


def _double_sum_plan(f, diagonal: bool, x: float, closed, outer) -> _Plan:
    """Plan for sum_k sum_m f(m, k); the diagonal variant sums along m + k = n."""
    if diagonal:
        def term(n):
            return sum(f(m, n - m) for m in range(n + 1))
    else:
        def term(k):
            total = 0j
            m = 0
            small = 0
            while m < 10000:
                t = f(m, k)
                total += t
                m += 1
                if abs(t) <= 1e-17 * max(abs(total), 1e-300):
                    small += 1
                    if small >= 2:
                        break
                else:
                    small = 0
            return total
    return _Plan(term, 0, closed, outer)


def _nested_omega(p) -> float:
    w = _omega(p, below_pi=True)
    # inner sums of size (x/(1-x))^k cancel down to (x/(1+x))^k
    if not (w / PI) ** 2 < 0.5:
        raise DomainError(f"nested double sum cancels catastrophically for omega >= pi/sqrt(2) (got {w})")
    return w


def _setup_minus5(s, p):
    w = _nested_omega(p)
    x = (w / PI) ** 2
    b = 0.5 + s / 2

    def f(m, k):
        n = m + k
        return (
            (-1) ** m * x ** (n + 1) * _zeta(complex(2 * n + 2))
            * math.perm(n, k) / _pochhammer(b, k + 1)
        )

    return _double_sum_plan(f, bool(p.get("diagonal", False)), x, _minus_closing(s, w), s * w ** (s - 1))


def _setup_minus6(s, p):
    w = _nested_omega(p)
    x = (w / PI) ** 2
    a = 0.5 + s / 2

    # (a)_n / n!, grown on demand; both factors overflow on their own
    ratio = [1 + 0j]

    def poch_over_fact(n):
        while len(ratio) <= n:
            j = len(ratio) - 1
            ratio.append(ratio[-1] * (a + j) / (j + 1))
        return ratio[n]

    def f(m, k):
        n = m + k
        return (
            (-1) ** m * x ** (n + 1) * poch_over_fact(n) * math.comb(n, k) * _zeta(complex(2 * n + 2))
            / (2 * k + 1 + s)
        )

    return _double_sum_plan(f, bool(p.get("diagonal", False)), x, _minus_closing(s, w), 2 * s * w ** (s - 1))


def _setup_minus7(s, p):
    w = _omega(p, below_pi=True)
    x = (w / PI) ** 2

    def term(k):
        return (-x) ** k * _zeta(complex(2 * k)) / (2 * k - 1 + s)

    return _Plan(term, 0, -(w**s) * _coth(w), -2 * s * w ** (s - 1))


def _setup_minus8(s, p):
    w = _omega(p)
    q = (w / PI) ** 2
    a = (s - 1) / 2

    def term(m):
        # (2F1(1, (s-1)/2; (s+1)/2; -y) - 1) / (s - 1)
        y = q / (m * m)
        if y < 0.5:
            return _lerch_small(a, y, 1) / (s - 1)
        return (hyp2f1_series(1, a, a + 1, -y) - 1) / (s - 1)

    M = _tail_cut(w)

    def tail(M):
        return _hurwitz_tail(lambda j: (-q) ** j / (s - 1 + 2 * j), lambda j: 2 * j, 1, M)

    closed = s * w ** (s - 1) / (s - 1) - w**s * _coth(w)
    return _Plan(term, 1, closed, -2 * s * w ** (s - 1), "tail", M, tail)


# ---------------------------------------------------------------- entries: zeta_plus


def _setup_plus_e(s, p):
    w = _omega(p)

    def term(k):
        return k * expint_E(-s, 2 * w * k)

    return _Plan(term, 1, 0j, 4 * w ** (s + 1))


def plus_en_closed(s: complex, omega: float, N: int) -> complex:
    """Finite part of the N-fold recurrence form of zeta_plus."""
    w = omega
    e = math.exp(-2 * w)
    out = -s * w ** (s - 1) * _log_e2w_minus_1(w) + 2 * s * w**s + 2 * w**s * e / (1 - e)
    acc = 0j
    for k in range(2, N + 2):
        acc += _falling(s, k) * polylog(k, e) / (2 * w) ** k
    return out + 2 * w**s * acc


def _setup_plus_en(s, p):
    w = _omega(p)
    N = int(p["N"])
    if N < 0:
        raise ConfigError("N must be >= 0")
    outer = 2 * w ** (s - N - 1) * _falling(s, N + 2) / 2 ** (N + 1)

    def term(k):
        return expint_E(N + 2 - s, 2 * k * w) / k ** (N + 1)

    return _Plan(term, 1, plus_en_closed(s, w, N), outer, "split")


def _setup_plus_1f1(s, p):
    w = _omega(p)

    def term(k):
        z = 2 * k * w
        return k * _exp_1f1(s + 2, z)

    closed = 2 ** (1 - s) * gamma(s + 1) * zeta_reference(s).value
    return _Plan(term, 1, closed, -4 * w ** (s + 1) / (s + 1), "extrap")


# ---------------------------------------------------------------- finite recursions


def _even_n(s: complex) -> int:
    return int(s.real) // 2


def _rec_a(n):
    def term(k):
        return (-1) ** k * PI ** (2 * k) * (2 * n - 2 * k - 1) * zeta_even(n - k) / math.factorial(2 * k + 1)

    return term, -0.5 / (2.0 ** (-2 * n) + n - 1), 1, n


def _rec_b(n):
    def term(k):
        return (-PI * PI) ** k * (1 - 2.0 ** (1 - 2 * n + 2 * k)) * zeta_even(n - k) / math.factorial(2 * k)

    return term, 1 / (2 * (2.0 ** (-2 * n) - 1)), 1, n


def _rec_c(n):
    def term(k):
        return (
            (1 - 2.0 ** (2 * n - 2 * k - 1)) * (2 * PI) ** (2 * k) * zeta_even(n - k)
            * (-1) ** k / math.factorial(2 * k + 1)
        )

    return term, 2 * 2.0 ** (-2 * n) / (1 - 2.0 ** (1 - 2 * n)), 1, n


def _rec_ar(n):
    def term(k):
        return (2 * k - 1) * zeta_even(k) / ((-PI * PI) ** k * math.factorial(2 * n - 2 * k + 1))

    return term, -((-PI * PI) ** n) / (2.0 ** (1 - 2 * n) + 2 * n - 2), 0, n - 1


def _rec_br(n):
    def term(k):
        return (1 - 2.0 ** (1 - 2 * k)) * zeta_even(k) / ((-PI * PI) ** k * math.factorial(2 * n - 2 * k))

    return term, (-PI * PI) ** n / (2.0 ** (1 - 2 * n) - 2), 0, n - 1


def _rec_cr(n):
    def term(k):
        return (
            (1 - 2.0 ** (2 * k - 1)) * zeta_even(k) * (-1) ** k
            / ((2 * PI) ** (2 * k) * math.factorial(2 * n - 2 * k + 1))
        )

    return term, 2 * (-PI * PI) ** n / (1 - 2.0 ** (1 - 2 * n)), 0, n - 1


_RECURSIONS = {"A": _rec_a, "B": _rec_b, "C": _rec_c, "AR": _rec_ar, "BR": _rec_br, "CR": _rec_cr}


def _recursion_setup(variant: str):
    def setup(s, p):
        term, outer, lo, hi = _RECURSIONS[variant](_even_n(s))
        return _Plan(lambda k: complex(term(k)), lo, 0j, outer, "finite", hi)

    return setup


def zeta_even_recursion(variant: str, n: int) -> float:
    """zeta(2n) from the finite recursion ``variant`` seeded with zeta(0..2n-2)."""
    if variant not in _RECURSIONS:
        raise ConfigError(f"unknown recursion variant {variant!r}")
    if n < 1:
        raise DomainError("recursion needs n >= 1")
    term, outer, lo, hi = _RECURSIONS[variant](n)
    return outer * math.fsum(term(k) for k in range(lo, hi + 1))


# ---------------------------------------------------------------- zeta(2..5) by splitting

# summand of each m-sum as a power series in x^2, x = omega/(pi m):
# coefficient of x^{2i}, i >= 1
_NOVEL_COEFF = {
    2: lambda i: (-1) ** i / (2 * i + 1),
    3: lambda i: (-1) ** i / (i + 1),
    4: lambda i: (-1) ** (i + 1) / (2 * i + 3),
    5: lambda i: (-1) ** (i + 1) / (i + 2),
}


def _novel_direct(n: int, x: float) -> float:
    if n == 2:
        return math.atan(x) / x - 1
    if n == 3:
        return math.log1p(x * x) / (x * x) - 1
    if n == 4:
        return math.atan(x) / x**3 - 1 / x**2 + 1 / 3
    return math.log1p(x * x) / x**4 - 1 / x**2 + 0.5


def _novel_summand(n: int, x: float) -> float:
    if x >= 0.5:
        return _novel_direct(n, x)
    c = _NOVEL_COEFF[n]
    x2 = x * x
    power = x2
    total = 0.0
    for i in range(1, 200):
        t = c(i) * power
        total += t
        if abs(t) < 1e-18 * abs(total):
            break
        power *= x2
    return total


def _novel_closed(n: int, w: float) -> float:
    e = math.exp(-2 * w)
    lg = _log_e2w_minus_1(w)
    li = {k: polylog(k, e).real for k in range(2, n + 1)}
    if n == 2:
        return li[2] - 2 * w * lg + 3 * w * w + 2 * w
    if n == 3:
        return 2 * w * li[2] + li[3] - 2 * w * w * lg + (10 * w + 3) * w * w / 3
    if n == 4:
        return (
            2 * w * w * li[2] + 2 * w * li[3] + li[4]
            - 4 / 3 * w**3 * lg + 7 * w**4 / 3 + 4 * w**3 / 9
        )
    return (
        4 / 3 * w**3 * li[2] + 2 * w * w * li[3] + 2 * w * li[4] + li[5]
        - 2 / 3 * w**4 * lg + 6 * w**5 / 5 + w**4 / 6
    )


_NOVEL_OUTER = {2: lambda w: -4 * w, 3: lambda w: -2 * w * w, 4: lambda w: 8 / 3 * w**3, 5: lambda w: 2 / 3 * w**4}


def _novel_setup(n: int):
    def setup(s, p):
        w = _omega(p)
        c = _NOVEL_COEFF[n]
        q = (w / PI) ** 2
        M = _tail_cut(w)

        def term(m):
            return complex(_novel_summand(n, w / (PI * m)))

        def tail(M):
            return _hurwitz_tail(lambda i: c(i) * q**i, lambda i: 2 * i, 1, M)

        return _Plan(term, 1, _novel_closed(n, w), _NOVEL_OUTER[n](w), "tail", M, tail)

    return setup


# ---------------------------------------------------------------- kappa entry


def _setup_kappa(s, p):
    value = kappa(int(p["r"]), int(p["p"]), float(p["omega"]))
    return _Plan(lambda k: 0j, 0, complex(value), 1.0, "finite", -1)


# ---------------------------------------------------------------- catalog

_ALL = AllS()
_S_NE_1 = Custom("s_ne_1")
_NEAR_POLES = Custom("s_ne_1_minus_2k")

_CATALOG: tuple[SeriesRep, ...] = (
    SeriesRep("ZETA0_SUM", "zeta_0(s) = -(2/pi) sin(pi s/2) sum_{k>=0} (-1)^k zeta(2k)/(2k-s)",
              _ALL, _setup_zeta0, target="zeta_head"),
    SeriesRep("ZETA_GAMMA_SUM",
              "zeta = 2^s pi^(s-1) sin(pi s/2)/(2^(1-s)-1) sum_{k>=0} 4^-k zeta(1-s+2k) Gamma(2-s+2k)/Gamma(2k+2)",
              _S_NE_1, _setup_gamma_sum),
    SeriesRep("ZETA_GAMMA_SUM2",
              "zeta = 2^s pi^(s-1) sin(pi s/2)/(2^(1-s)-2+s) sum_{k>=1} 4^-k zeta(1-s+2k) Gamma(2-s+2k)/Gamma(2k+2)",
              _S_NE_1, _setup_gamma_sum2),
    SeriesRep("ZETA_TYHO",
              "zeta = pi^(s-1) sin(pi s/2)/(1-2^(1-s)) sum_{k>=1} (2-2^(s-2k)) zeta(1-s+2k) Gamma(1-s+2k)/Gamma(2k+2)",
              SigmaGreaterThan(0.0), _setup_tyho),
    SeriesRep("ZETA_GAMMA_SUM2A",
              "zeta = sum_{k>=1} 4^-k zeta(s+2k) Gamma(1+s+2k)/Gamma(2k+2) / (Gamma(s) (2^s-1-s))",
              _S_NE_1, _setup_gamma_sum2a),
    SeriesRep("ZETA_FROM_ETA_SUM",
              "zeta = -sqrt(pi) sum_{k>=0} (-pi^2/4)^k eta(s-2k) / (Gamma(k+1/2) k!)",
              SigmaGreaterThan(1.0), _setup_from_eta),
    SeriesRep("ZETA_FROM_ZETA_SUM",
              "zeta = -1/2 sum_{k>=1} (-pi^2)^k (1-2^(1-s+2k)) zeta(s-2k)/(2k)! / (1-2^-s)",
              SigmaGreaterThan(1.0), _setup_from_zeta),
    SeriesRep("ZETA_FROM_ZETA_SUM_REFLECTED",
              "zeta = pi^s/2 sum_{k>=1} zeta(1-s+2k) (2^(s-2k-1)-1)/((2k)! Gamma(s-2k)) / ((2^-s-1) cos(pi s/2))",
              SigmaGreaterThan(1.0), _setup_from_zeta_reflected),
    SeriesRep("ZETA_MINUS_1",
              "zeta_minus = 4 w^(s-1) sum_{k>=0} (-w^2/pi^2)^k (k-1/2) zeta(2k)/(2k-1+s), w < pi",
              _NEAR_POLES, _setup_minus1, {"omega": 1.0}, target="zeta_minus"),
    SeriesRep("ZETA_MINUS_2",
              "zeta_minus = 2s w^(s+1)/(pi^2 (s+1)) sum_m m^-2 2F1(1,(1+s)/2;(3+s)/2;-w^2/(pi m)^2)"
              " - w^s coth w + s w^(s-1)/(s-1)",
              _NEAR_POLES, _setup_minus2, {"omega": 1.0}, target="zeta_minus"),
    SeriesRep("ZETA_MINUS_3",
              "zeta_minus = s w^(s-1) Gamma((1+s)/2) sum_k k!/Gamma(k+(3+s)/2) kappa(0,k+1,pi/w)"
              " - w^s coth w + s w^(s-1)/(s-1)",
              _NEAR_POLES, _setup_minus3, {"omega": 1.0}, target="zeta_minus"),
    SeriesRep("ZETA_MINUS_5",
              "zeta_minus = s w^(s-1) Gamma((1+s)/2) sum_k sum_m (-1)^m (m+k)! zeta(2m+2k+2) x^(m+k+1)"
              "/(Gamma(k+(3+s)/2) m!) - w^s coth w + s w^(s-1)/(s-1), x = w^2/pi^2",
              _NEAR_POLES, _setup_minus5, {"omega": 1.0, "diagonal": False}, target="zeta_minus"),
    SeriesRep("ZETA_MINUS_6",
              "zeta_minus = 2s w^(s-1)/Gamma((1+s)/2) sum_k x^(k+1) sum_m (-x)^m Gamma(m+k+(1+s)/2)"
              " zeta(2m+2k+2)/(m! k! (2k+1+s)) - w^s coth w + s w^(s-1)/(s-1)",
              _NEAR_POLES, _setup_minus6, {"omega": 1.0, "diagonal": False}, target="zeta_minus"),
    SeriesRep("ZETA_MINUS_7",
              "zeta_minus = -2s w^(s-1) sum_{k>=0} (-w^2/pi^2)^k zeta(2k)/(2k-1+s) - w^s coth w",
              _NEAR_POLES, _setup_minus7, {"omega": 1.0}, target="zeta_minus"),
    SeriesRep("ZETA_MINUS_8",
              "zeta_minus = -2s w^(s-1)/(s-1) sum_m [2F1(1,(s-1)/2;(s+1)/2;-w^2/(pi m)^2) - 1]"
              " + s w^(s-1)/(s-1) - w^s coth w",
              _NEAR_POLES, _setup_minus8, {"omega": 1.0}, target="zeta_minus"),
    SeriesRep("KAPPA", "kappa(r,p,pi/w) = sum_{m>=1} m^r/(1+(pi m/w)^2)^p",
              _ALL, _setup_kappa, {"r": 0, "p": 1, "omega": 1.0}, target="kappa"),
    SeriesRep("ZETA_PLUS_E", "zeta_plus = 4 w^(s+1) sum_{k>=1} k E_{-s}(2 w k)",
              _ALL, _setup_plus_e, {"omega": 1.0}, target="zeta_plus"),
    SeriesRep("ZETA_PLUS_EN",
              "zeta_plus = -s w^(s-1) log(e^(2w)-1) + 2s w^s - 2w^s/(1-e^(2w))"
              " + 2w^s sum_{k=2}^{N+1} Gamma(s+1)/Gamma(s-k+1) Li_k(e^-2w)/(2w)^k"
              " + 2 w^(s-N-1) Gamma(s+1)/(Gamma(s-N-1) 2^(N+1)) sum_k E_{N+2-s}(2kw)/k^(N+1)",
              _ALL, _setup_plus_en, {"omega": 1.0, "N": 3}, kind="Split", target="zeta_plus"),
    SeriesRep("ZETA_PLUS_1F1",
              "zeta_plus = 2^(1-s) Gamma(s+1) zeta(s) - 4 w^(s+1)/(s+1) sum_k k e^(-2kw) 1F1(1;2+s;2kw)",
              SigmaGreaterThan(1.0), _setup_plus_1f1, {"omega": 1.0}, target="zeta_plus"),
    SeriesRep("ZETA_COMBINED",
              "2^(1-s) Gamma(s+1) zeta = 4 w^(s+1) sum_k k (E_{-s}(2kw) + 1F1(s+1;s+2;-2kw)/(s+1))",
              SigmaGreaterThan(1.0), _setup_combined, {"omega": 1.0}),
    SeriesRep("ZETA_SINH2_FORMAL",
              "zeta = -sin(pi s/2)/(s-1) [(2/pi) sum_k (-1)^k (2k-1) zeta(2k)/(2k-s)"
              " + pi int_1^inf t^(1-s)/sinh(pi t)^2 dt]  (formal: the sum does not converge)",
              SigmaLessThan(0.0), _setup_sinh2_formal, {"max_terms": 200}, formal=True),
    SeriesRep("EVEN_RECURSION_A",
              "zeta(2n) = -1/2 sum_{k=1}^n (-1)^k pi^(2k) (2n-2k-1) zeta(2n-2k)/(2k+1)! / (2^-2n+n-1)",
              Custom("pos_even_int"), _recursion_setup("A"), kind="FiniteRecursion"),
    SeriesRep("EVEN_RECURSION_B",
              "zeta(2n) = sum_{k=1}^n (-pi^2)^k (1-2^(1-2n+2k)) zeta(2n-2k)/(2k)! / (2 (2^-2n - 1))",
              Custom("pos_even_int"), _recursion_setup("B"), kind="FiniteRecursion"),
    SeriesRep("EVEN_RECURSION_C",
              "zeta(2n) = 2^(1-2n)/(1-2^(1-2n)) sum_{k=1}^n (1-2^(2n-2k-1)) (2pi)^(2k) zeta(2n-2k) (-1)^k/(2k+1)!",
              Custom("pos_even_int"), _recursion_setup("C"), kind="FiniteRecursion"),
    SeriesRep("EVEN_RECURSION_AR",
              "zeta(2n) = -(-pi^2)^n/(2^(1-2n)+2n-2) sum_{k=0}^{n-1} (2k-1) zeta(2k)/((-pi^2)^k (2n-2k+1)!)",
              Custom("pos_even_int"), _recursion_setup("AR"), kind="FiniteRecursion"),
    SeriesRep("EVEN_RECURSION_BR",
              "zeta(2n) = (-pi^2)^n/(2^(1-2n)-2) sum_{k=0}^{n-1} (1-2^(1-2k)) zeta(2k)/((-pi^2)^k (2n-2k)!)",
              Custom("pos_even_int"), _recursion_setup("BR"), kind="FiniteRecursion"),
    SeriesRep("EVEN_RECURSION_CR",
              "zeta(2n) = 2(-pi^2)^n/(1-2^(1-2n)) sum_{k=0}^{n-1} (1-2^(2k-1)) zeta(2k) (-1)^k/((2pi)^(2k) (2n-2k+1)!)",
              Custom("pos_even_int"), _recursion_setup("CR"), kind="FiniteRecursion"),
    SeriesRep("NOVEL_2",
              "zeta(2) = -4w sum_m (atan(x)/x - 1) + Li2(e^-2w) - 2w log(e^2w - 1) + 3w^2 + 2w, x = w/(pi m)",
              Custom("s_eq_2"), _novel_setup(2), {"omega": 1.0}),
    SeriesRep("NOVEL_3",
              "zeta(3) = -2w^2 sum_m (log(1+x^2)/x^2 - 1) + 2w Li2 + Li3 - 2w^2 log(e^2w - 1) + (10w+3) w^2/3",
              Custom("s_eq_3"), _novel_setup(3), {"omega": 1.0}),
    SeriesRep("NOVEL_4",
              "zeta(4) = 8/3 w^3 sum_m (atan(x)/x^3 - 1/x^2 + 1/3) + 2w^2 Li2 + 2w Li3 + Li4"
              " - 4/3 w^3 log(e^2w - 1) + 7w^4/3 + 4w^3/9",
              Custom("s_eq_4"), _novel_setup(4), {"omega": 1.0}),
    SeriesRep("NOVEL_5",
              "zeta(5) = 2/3 w^4 sum_m (log(1+x^2)/x^4 - 1/x^2 + 1/2) + 4/3 w^3 Li2 + 2w^2 Li3 + 2w Li4 + Li5"
              " - 2/3 w^4 log(e^2w - 1) + 6w^5/5 + w^4/6",
              Custom("s_eq_5"), _novel_setup(5), {"omega": 1.0}),
)

_BY_ID = {rep.id: rep for rep in _CATALOG}


def catalog_series() -> list[SeriesRep]:
    return list(_CATALOG)


def lookup(rep_id: str) -> SeriesRep:
    try:
        return _BY_ID[rep_id]
    except KeyError:
        raise UnknownIdError(f"unknown series representation {rep_id!r}") from None


# ---------------------------------------------------------------- evaluation

_LIMIT_STEP = 1e-3


def _near_integer(s: complex) -> bool:
    return s.imag == 0 and abs(s.real - round(s.real)) < 1e-12


def _evaluate_plan(rep: SeriesRep, s: complex, params: Mapping[str, Any], opts: EvalOptions) -> EvalOutcome:
    plan = rep.setup(s, params)
    if rep.formal:
        cap = min(int(params.get("max_terms", 200)), opts.max_terms)
        opts = EvalOptions(opts.abs_tol, opts.rel_tol, opts.max_nodes, cap, False, opts.extended_precision)
    out = _execute(plan, opts)
    if not cmath.isfinite(out.value):
        raise DomainError(f"{rep.id}: non-finite value at s={s}")
    return out


def _symmetric_limit(rep: SeriesRep, s: complex, params, opts: EvalOptions) -> EvalOutcome:
    """Removable singularity at an integer: Richardson on symmetric averages."""
    h = _LIMIT_STEP

    def avg(step):
        a = _evaluate_plan(rep, s + step, params, opts)
        b = _evaluate_plan(rep, s - step, params, opts)
        return a, b, 0.5 * (a.value + b.value)

    a1, b1, v1 = avg(h)
    a2, b2, v2 = avg(2 * h)
    value = (4 * v1 - v2) / 3
    err = max(a1.err_estimate, b1.err_estimate) / h * 1e-3 + abs(v1 - v2) * 1e-3 + 1e-13 * abs(value)
    # the two sides cancel their 1/h parts, so rounding grows like eps/h
    lost = max(a1.digits_lost, b1.digits_lost) + math.log10(1 / h)
    n = a1.terms_used + b1.terms_used + a2.terms_used + b2.terms_used
    return EvalOutcome(value, err, 0, n, True, lost, rep.formal)


def evaluate_series(
    rep_id: str,
    s: complex,
    opts: EvalOptions = DEFAULT_OPTIONS,
    params_override: Mapping[str, Any] | None = None,
) -> EvalOutcome:
    """closed terms + outer factor * summed series for one catalog entry."""
    rep = lookup(rep_id)
    s = to_complex(s)
    params = dict(rep.params)
    if params_override:
        unknown = set(params_override) - set(params)
        if unknown:
            raise ConfigError(f"{rep_id} has no parameter(s) {sorted(unknown)}")
        params.update(params_override)
    inside = classify_region(s, rep.region)
    if not inside and opts.enforce_region:
        raise RegionError(f"{rep_id}: s={s} outside region {rep.region.describe()}")
    try:
        out = _evaluate_plan(rep, s, params, opts)
    except (PoleError, ZeroDivisionError, DomainError) as exc:
        if not _near_integer(s) or rep.kind == "FiniteRecursion":
            if isinstance(exc, ZeroDivisionError):
                raise DomainError(f"{rep_id}: cannot evaluate at s={s}") from None
            raise
        if isinstance(exc, DomainError) and not isinstance(exc, PoleError) and "non-finite" not in str(exc):
            raise
        out = _symmetric_limit(rep, complex(round(s.real)), params, opts)
    if not inside:
        out = EvalOutcome(out.value, out.err_estimate, out.nodes_used, out.terms_used, False, out.digits_lost, out.formal)
    return out


def zeta0_head(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> EvalOutcome:
    """zeta_0(s), the part of zeta carried by the contour near the origin."""
    return evaluate_series("ZETA0_SUM", s, opts)


def to_zeta(target: str, value: complex, s: complex, omega: float = 1.0, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Convert a series value with the given target into zeta(s) when possible."""
    s = to_complex(s)
    if target == "zeta":
        return value
    if target == "zeta_head":
        from .intreps import zeta_tail_c0

        return value + zeta_tail_c0(s, opts).value
    raise ConfigError(f"target {target!r} does not determine zeta on its own")


def split_zeta(
    s: complex,
    omega: float = 1.0,
    opts: EvalOptions = DEFAULT_OPTIONS,
    minus_id: str = "ZETA_MINUS_7",
) -> tuple[EvalOutcome, EvalOutcome, EvalOutcome]:
    """zeta(s) = 2^(s-1) (zeta_minus + zeta_plus) / Gamma(s+1)."""
    s = to_complex(s)
    if not omega > 0:
        raise ConfigError("omega must be positive")
    rep = lookup(minus_id)
    if rep.target != "zeta_minus":
        raise ConfigError(f"{minus_id} is not a zeta_minus representation")
    minus = evaluate_series(minus_id, s, opts, {"omega": omega})
    plus = evaluate_series("ZETA_PLUS_E", s, opts, {"omega": omega})
    factor = 2 ** (s - 1) * rgamma(s + 1)
    total = minus.value + plus.value
    value = factor * total
    lost = max(minus.digits_lost, plus.digits_lost, digits_lost(abs(minus.value) + abs(plus.value), total))
    combined = EvalOutcome(
        value,
        abs(factor) * (minus.err_estimate + plus.err_estimate) + 1e-16 * abs(factor) * (abs(minus.value) + abs(plus.value)),
        0,
        minus.terms_used + plus.terms_used,
        minus.in_region and plus.in_region,
        lost,
    )
    return minus, plus, combined
