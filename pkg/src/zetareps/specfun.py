"""Special functions used by the representation catalogs.

Everything here works on native Python floats/complex numbers.  Bernoulli
numbers are produced exactly (``fractions.Fraction``) and cached, so even
zeta values and the asymptotic series below do not lose digits to the
conversion formula.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import DomainError, PoleError, to_complex

PI = math.pi
EULER_GAMMA = 0.57721566490153286061
STIELTJES_GAMMA1 = -0.072815845483676724861
LOG_2PI = math.log(2 * math.pi)


@dataclass(frozen=True)
class Constants:
    euler_gamma: float = EULER_GAMMA
    stieltjes_gamma1: float = STIELTJES_GAMMA1
    log_2pi: float = LOG_2PI


CONSTANTS = Constants()


# ---------------------------------------------------------------- Bernoulli


@lru_cache(maxsize=None)
def _bernoulli_table(n_max: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa, B_1 = +1/2 convention (irrelevant: only even indices used)
    out = []
    a = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2)."""
    if n < 0:
        raise DomainError("bernoulli index must be >= 0")
    if n == 1:
        return Fraction(-1, 2)
    size = max(64, 1 << (n.bit_length()))
    return _bernoulli_table(size)[n]


@lru_cache(maxsize=None)
def _zeta_even_exact_float(k: int) -> float:
    b = bernoulli(2 * k)
    # zeta(2k) = (-1)^{k+1} (2 pi)^{2k} B_2k / (2 (2k)!)
    ratio = float(b / (2 * math.factorial(2 * k)))
    return (-1) ** (k + 1) * ratio * (2 * PI) ** (2 * k)


@lru_cache(maxsize=None)
def zeta_even(k: int) -> float:
    """zeta(2k) for integer k >= 0, with zeta(0) = -1/2."""
    if k < 0:
        raise DomainError("zeta_even requires k >= 0")
    if k == 0:
        return -0.5
    if k <= 30:
        return _zeta_even_exact_float(k)
    # 1 + 2^{-2k} + ... is already exact to double precision here
    total = 0.0
    for m in range(40, 0, -1):
        total += m ** (-2.0 * k)
    return total


class EvenZetaTable(Sequence):
    """Read-only table of zeta(2k), k = 0..K."""

    def __init__(self, K: int = 60):
        self._values = tuple(zeta_even(k) for k in range(K + 1))

    def __getitem__(self, k):
        return self._values[k]

    def __len__(self) -> int:
        return len(self._values)

    @property
    def values(self) -> tuple[float, ...]:
        return self._values


@lru_cache(maxsize=None)
def zeta_int(m: int) -> float:
    """zeta(m) for integer m != 1 (non-positive m via Bernoulli numbers)."""
    if m == 1:
        raise PoleError("zeta pole at 1")
    if m <= 0:
        n = -m
        if n == 0:
            return -0.5
        return float((-1) ** n * bernoulli(n + 1) / (n + 1))
    if m % 2 == 0:
        return zeta_even(m // 2)
    N = 12
    total = math.fsum(k ** (-m) for k in range(1, N))
    total += N ** (1 - m) / (m - 1) + 0.5 * N ** (-m)
    rising = float(m)
    for j in range(1, 12):
        term = float(bernoulli(2 * j)) / math.factorial(2 * j) * rising * N ** (-m - 2 * j + 1)
        total += term
        rising *= (m + 2 * j - 1) * (m + 2 * j)
    return total


# ---------------------------------------------------------------- Gamma family

_STIRLING_J = 12
_SHIFT_TO = 15.0


@lru_cache(maxsize=1)
def _stirling_coeffs() -> tuple[float, ...]:
    return tuple(
        float(bernoulli(2 * j) / (2 * j * (2 * j - 1))) for j in range(1, _STIRLING_J + 1)
    )


def _is_pole(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def loggamma(s: complex) -> complex:
    """A logarithm of Gamma(s) (branch not normalized; exp() is exact)."""
    z = to_complex(s)
    if _is_pole(z):
        raise PoleError(f"gamma pole at {z}")
    if z.real < 0.5:
        # reflection; log(pi / sin(pi z)) computed stably for large |Im z|
        return math.log(PI) - _log_sin_pi(z) - loggamma(1 - z)
    shift = 0j
    prod = 1 + 0j
    count = 0
    while abs(z) < _SHIFT_TO or z.real < 8:
        prod *= z
        z += 1
        count += 1
        if count % 16 == 0:
            shift += cmath.log(prod)
            prod = 1 + 0j
    shift += cmath.log(prod)
    inv = 1 / z
    inv2 = inv * inv
    series = 0j
    p = inv
    for c in _stirling_coeffs():
        series += c * p
        p *= inv2
    return (z - 0.5) * cmath.log(z) - z + 0.5 * LOG_2PI + series - shift


def _log_sin_pi(z: complex) -> complex:
    y = z.imag
    if abs(y) < 20:
        return cmath.log(cmath.sin(PI * z))
    # sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i; keep the dominant exponential
    sgn = 1 if y > 0 else -1
    w = -1j * PI * z if sgn > 0 else 1j * PI * z
    small = cmath.exp(-2 * w)
    return w + cmath.log(1 - small) - cmath.log(-2j * sgn)


def gamma(s: complex) -> complex:
    """Complex Gamma function, principal branch."""
    z = to_complex(s)
    if _is_pole(z):
        raise PoleError(f"gamma pole at {z}")
    if z.imag == 0 and 0 < z.real <= 171:
        return complex(math.gamma(z.real))
    return cmath.exp(loggamma(z))


def rgamma(s: complex) -> complex:
    """1/Gamma(s), zero at the poles."""
    z = to_complex(s)
    if _is_pole(z):
        return 0j
    return cmath.exp(-loggamma(z))


def gamma_ratio(a: complex, b: complex) -> complex:
    """Gamma(a)/Gamma(b) without intermediate overflow."""
    a = to_complex(a)
    b = to_complex(b)
    if _is_pole(b):
        return 0j
    if _is_pole(a):
        raise PoleError(f"gamma pole at {a}")
    return cmath.exp(loggamma(a) - loggamma(b))


def _shift_up(z: complex, lo: float = 12.0) -> tuple[complex, list[complex]]:
    steps = []
    while z.real < lo:
        steps.append(z)
        z += 1
    return z, steps


def digamma(s: complex) -> complex:
    z = to_complex(s)
    if _is_pole(z):
        raise PoleError(f"digamma pole at {z}")
    w, steps = _shift_up(z)
    corr = sum(1 / x for x in steps)
    inv2 = 1 / (w * w)
    series = 0j
    p = inv2
    for j in range(1, _STIRLING_J + 1):
        series += float(bernoulli(2 * j)) / (2 * j) * p
        p *= inv2
    return cmath.log(w) - 0.5 / w - series - corr


def trigamma(s: complex) -> complex:
    z = to_complex(s)
    if _is_pole(z):
        raise PoleError(f"trigamma pole at {z}")
    w, steps = _shift_up(z)
    corr = sum(1 / (x * x) for x in steps)
    inv = 1 / w
    inv2 = inv * inv
    series = 0j
    p = inv2 * inv
    for j in range(1, _STIRLING_J + 1):
        series += float(bernoulli(2 * j)) * p
        p *= inv2
    return inv + 0.5 * inv2 + series + corr


def digamma_pair(t: complex) -> tuple[complex, complex]:
    """Return (psi(1+t) - psi(1-t), psi'(1+t) + psi'(1-t))."""
    t = to_complex(t)
    return digamma(1 + t) - digamma(1 - t), trigamma(1 + t) + trigamma(1 - t)


def hurwitz_zeta(p: complex, a: float) -> complex:
    """sum_{k>=0} (a+k)^{-p} for Re p > 1 and a > 0, by Euler-Maclaurin."""
    p = to_complex(p)
    if not p.real > 1:
        raise DomainError("hurwitz_zeta needs Re p > 1")
    if not a > 0:
        raise DomainError("hurwitz_zeta needs a > 0")
    K = max(0, int(math.ceil(max(12.0, abs(p) / 2) - a)))
    head = sum(cmath.exp(-p * math.log(a + k)) for k in range(K))
    x = a + K
    lx = math.log(x)
    tail = cmath.exp((1 - p) * lx) / (p - 1) + 0.5 * cmath.exp(-p * lx)
    rising = p
    powx = cmath.exp(-(p + 1) * lx)
    for i in range(1, 20):
        term = float(bernoulli(2 * i)) / math.factorial(2 * i) * rising * powx
        tail += term
        if abs(term) < 1e-18 * abs(tail):
            break
        rising *= (p + 2 * i - 1) * (p + 2 * i)
        powx /= x * x
    return head + tail


# ---------------------------------------------------------------- polylog


@lru_cache(maxsize=None)
def _polylog_log_coeffs(n: int, K: int = 70) -> tuple[tuple[int, float], ...]:
    # coefficient of mu^k in Li_n(e^mu), k != n-1
    out = []
    for k in range(K):
        if k == n - 1:
            continue
        m = n - k
        if m <= 0 and (-m) % 2 == 0 and m != 0:
            continue
        out.append((k, zeta_int(m) / math.factorial(k)))
    return tuple(out)


def polylog(n: int, z: complex, abs_tol: float = 1e-16) -> complex:
    """Li_n(z) for n >= 2 and |z| <= 1."""
    if n < 2:
        raise DomainError("polylog requires n >= 2")
    z = to_complex(z)
    r = abs(z)
    if r > 1 + 1e-12:
        raise DomainError("polylog requires |z| <= 1")
    if z == 1:
        return complex(zeta_int(n))
    if z == 0:
        return 0j
    if r <= 0.5:
        total = 0j
        p = z
        k = 1
        while True:
            term = p / k**n
            total += term
            if r ** (k + 1) / ((k + 1) ** n * (1 - r)) < abs_tol * max(1.0, abs(total)):
                break
            k += 1
            p *= z
        return total
    mu = cmath.log(z)
    if r > 1:
        mu = complex(0.0, mu.imag)
    total = 0j
    for k, c in _polylog_log_coeffs(n):
        total += c * mu**k
    h = sum(1.0 / j for j in range(1, n))
    total += mu ** (n - 1) / math.factorial(n - 1) * (h - cmath.log(-mu))
    return total


# ---------------------------------------------------------------- incomplete gamma


def _gamma_lower_series(a: complex, z: float, tol: float = 1e-17) -> complex:
    # gamma(a, z) = z^a e^{-z} sum_k z^k / (a)_{k+1}
    term = 1 / a
    total = term
    k = 0
    while True:
        k += 1
        term *= z / (a + k)
        total += term
        if abs(term) < tol * abs(total) or k > 5000:
            break
    return total * cmath.exp(a * math.log(z) - z)


def _upper_cf(nu: complex, z: float) -> complex:
    # E_nu(z) = e^{-z} / (z + nu - 1*nu/(z + nu + 2 - 2(nu+1)/(z + nu + 4 - ...)))
    tiny = 1e-300
    b = z + nu
    c = 1 / tiny
    d = 1 / b
    h = d
    for i in range(1, 10000):
        an = -i * (nu - 1 + i)
        b += 2
        d = 1 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1) < 1e-16:
            break
    return h * math.exp(-z)


def _e1_series(z: float) -> complex:
    total = 0.0
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= -z / k
        inc = term / k
        total += inc
        if abs(inc) < 1e-17 * max(1.0, abs(total)):
            break
    return complex(-EULER_GAMMA - math.log(z) - total)


def expint_E(order: complex, z: float) -> complex:
    """Generalized exponential integral E_order(z) = z^{order-1} Gamma(1-order, z)."""
    z = float(z)
    if not z > 0:
        raise DomainError("expint_E requires z > 0")
    nu = to_complex(order)
    if z >= 1 + abs(nu) or (nu.real >= 1 and z >= 1):
        return _upper_cf(nu, z)
    ez = math.exp(-z)
    # half-up, so order 1/2 lands on m = 1 rather than 0
    m = math.floor(nu.real + 0.5)
    if nu.imag == 0 and nu.real == m:
        if m <= 0:
            # E_{-k}(z) = k! e^{-z} sum_{j<=k} z^j/j! / z^{k+1}
            k = -m
            s = math.fsum(z**j / math.factorial(j) for j in range(k + 1))
            return complex(math.factorial(k) * ez * s / z ** (k + 1))
        val = _e1_series(z)
        for k in range(1, m):
            val = (ez - z * val) / k
        return val
    if nu.real < 0.5:
        a = 1 - nu
        return cmath.exp((nu - 1) * math.log(z)) * (gamma(a) - _gamma_lower_series(a, z))
    eps = nu - m
    if abs(eps) <= 0.5:
        # near a positive integer order: start at order 1 + eps
        val = _e_one_plus(eps, z)
        cur = 1 + eps
        steps = m - 1
    else:
        a = 1 - eps
        val = cmath.exp((eps - 1) * math.log(z)) * (gamma(a) - _gamma_lower_series(a, z))
        cur = eps
        steps = m
    for _ in range(steps):
        val = (ez - z * val) / cur
        cur += 1
    return val


def _cexpm1(w: complex) -> complex:
    x, y = w.real, w.imag
    return complex(math.expm1(x) * math.cos(y) - 2 * math.sin(y / 2) ** 2, math.exp(x) * math.sin(y))


def _log_gamma_one_minus(eps: complex) -> complex:
    # log Gamma(1 - eps) = gamma eps + sum_{k>=2} zeta(k) eps^k / k, |eps| <= 1/2
    total = EULER_GAMMA * eps
    p = eps
    for k in range(2, 80):
        p *= eps
        term = zeta_int(k) * p / k
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
    return total


def _e_one_plus(eps: complex, z: float) -> complex:
    """E_{1+eps}(z) for |eps| <= 1/2 and small z, smooth through eps = 0.

    Gamma(-eps) z^eps and the k = 0 series term 1/eps are combined so their
    poles cancel analytically.
    """
    lz = math.log(z)
    if eps == 0:
        head = -EULER_GAMMA - lz
    else:
        head = -_cexpm1(_log_gamma_one_minus(eps) + eps * lz) / eps
    total = 0j
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= -z / k
        inc = term / (k - eps)
        total += inc
        if abs(inc) < 1e-17 * max(1.0, abs(total)):
            break
    return head - total


def gamma_upper(a: complex, z: float) -> complex:
    """Upper incomplete gamma Gamma(a, z), z > 0."""
    a = to_complex(a)
    return expint_E(1 - a, z) * cmath.exp(a * math.log(z))


# ---------------------------------------------------------------- hypergeometric


def hyp1f1_1(b: complex, z: complex, tol: float = 1e-17) -> complex:
    """1F1(1; b; z)."""
    b = to_complex(b)
    z = to_complex(z)
    if _is_pole(b):
        raise DomainError(f"1F1 lower parameter on a pole: {b}")
    if z.imag == 0 and z.real > 30 and z.real > 2 * abs(b):
        # Kummer: e^z 1F1(b-1; b; -z) = e^z (b-1) z^{1-b} gamma(b-1, z)
        x = z.real
        a = b - 1
        if a == 0:
            return complex(math.exp(x))
        lower = gamma(a) - gamma_upper(a, x)
        return math.exp(x) * a * cmath.exp(-a * math.log(x)) * lower
    term = 1 + 0j
    total = 1 + 0j
    k = 0
    while True:
        term *= z / (b + k)
        total += term
        k += 1
        if abs(term) < tol * abs(total) and abs(z / (b + k)) < 0.5:
            break
        if k > 100000:
            raise DomainError("1F1 series failed to converge")
    return total


def hyp2f1_series(a: complex, b: complex, c: complex, x: complex, tol: float = 1e-17) -> complex:
    """Gauss series, with the Pfaff transformation when x < -1/2."""
    x = to_complex(x)
    if _is_pole(to_complex(c)):
        raise DomainError("2F1 lower parameter on a pole")
    if x.imag == 0 and x.real < -0.5:
        y = x / (x - 1)
        return (1 - x) ** (-b) * hyp2f1_series(c - a, b, c, y, tol)
    if abs(x) >= 1:
        raise DomainError("2F1 series needs |x| < 1 after transformation")
    term = 1 + 0j
    total = 1 + 0j
    k = 0
    while True:
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        total += term
        k += 1
        if term == 0 or (abs(term) < tol * abs(total) and k > 2):
            break
        if k > 200000:
            raise DomainError("2F1 series failed to converge")
    return total


HYP2F1_FAMILIES = ("arctan-closed", "log-closed", "offset-finite-sum", "generic-series")


def hyp2f1_catalog(family: str, a: complex, x: float) -> complex:
    """2F1(1, a; a+1; x), the only shape the catalogs need.

    ``arctan-closed`` is a = 1/2, ``log-closed`` is a = 1, ``offset-finite-sum``
    handles a = n + 1/2 or a = n (n >= 1) by a closed form plus a finite
    correction, ``generic-series`` is the Gauss series.
    """
    x = float(x)
    if not -1 < x <= 1:
        raise DomainError("2F1 catalog argument must lie in (-1, 1]")
    a = to_complex(a)
    if family == "generic-series":
        if x == 1:
            raise DomainError("2F1(1, a; a+1; 1) diverges")
        return hyp2f1_series(1, a, a + 1, x)
    if x == 0:
        return 1 + 0j
    if family == "arctan-closed":
        if a != 0.5:
            raise DomainError("arctan-closed family has a = 1/2")
        return complex(_odd_atan(x, 0))
    if family == "log-closed":
        if a != 1:
            raise DomainError("log-closed family has a = 1")
        return complex(-math.log1p(-x) / x)
    if family == "offset-finite-sum":
        two_a = 2 * a.real
        if a.imag != 0 or two_a != round(two_a) or two_a < 1:
            raise DomainError("offset-finite-sum needs a = n/2, n >= 1")
        if abs(x) < 0.5:
            # the finite correction cancels against the head here
            return hyp2f1_series(1, a, a + 1, x)
        n2 = int(round(two_a))
        if n2 % 2 == 1:
            return complex(_odd_atan(x, (n2 - 1) // 2))
        return complex(_even_log(x, n2 // 2))
    raise DomainError(f"unknown 2F1 family {family!r}")


def _odd_atan(x: float, n: int) -> float:
    # 2F1(1, n+1/2; n+3/2; x) = (2n+1) sum_k x^k/(2k+2n+1)
    if x < 0:
        y = math.sqrt(-x)
        head = math.atan(y)
        sgn = -1.0
    else:
        y = math.sqrt(x)
        head = math.atanh(y)
        sgn = 1.0
    # sum_{j>=n} sgn^{j} y^{2j+1}/(2j+1) = head - finite part
    finite = sum(sgn**j * y ** (2 * j + 1) / (2 * j + 1) for j in range(n))
    return (2 * n + 1) * (head - finite) / (sgn**n * y ** (2 * n + 1))


def _even_log(x: float, n: int) -> float:
    # 2F1(1, n; n+1; x) = n sum_k x^k/(k+n) = n x^{-n} (-log(1-x) - sum_{j<n} x^j/j)
    finite = sum(x**j / j for j in range(1, n))
    return n * (-math.log1p(-x) - finite) / x**n


def hyp1f2(a: complex, b1: float, b2: complex, z: float, tol: float = 1e-17) -> tuple[complex, int]:
    """1F2(a; b1, b2; z) by its Taylor series; returns (value, terms)."""
    a = to_complex(a)
    b2 = to_complex(b2)
    if _is_pole(complex(b1)) or _is_pole(b2):
        raise DomainError("1F2 lower parameter on a pole")
    term = 1 + 0j
    total = 1 + 0j
    k = 0
    while True:
        term *= (a + k) / ((b1 + k) * (b2 + k) * (k + 1)) * z
        total += term
        k += 1
        if term == 0 or (abs(term) < tol * abs(total) and k * k > abs(z)):
            break
        if k > 100000:
            raise DomainError("1F2 series failed to converge")
    return total, k + 1


# ---------------------------------------------------------------- oracles


def euler_gamma_oracle(N: int = 30) -> float:
    """Euler's constant from H_{N-1} - ln N plus Euler-Maclaurin corrections."""
    h = math.fsum(1.0 / k for k in range(1, N))
    val = h - math.log(N) + 1 / (2 * N)
    for j in range(1, 10):
        val += float(bernoulli(2 * j)) / (2 * j) / N ** (2 * j)
    return val


def stieltjes_gamma1_oracle(N: int = 30) -> float:
    """First Stieltjes constant: lim sum_{k<=N} ln k/k - ln^2 N/2."""
    ln_n = math.log(N)
    val = math.fsum(math.log(k) / k for k in range(2, N))
    val += -0.5 * ln_n**2 + ln_n / (2 * N)
    harmonic = 0.0
    for m in range(1, 20):
        harmonic += 1.0 / m
        if m % 2 == 0:
            continue
        j = (m + 1) // 2
        # f^{(m)}(x) = (-1)^m m! (ln x - H_m) / x^{m+1} for f = ln x / x
        deriv = (-1) ** m * math.factorial(m) * (ln_n - harmonic) / N ** (m + 1)
        val -= float(bernoulli(2 * j)) / math.factorial(2 * j) * deriv
    return val
