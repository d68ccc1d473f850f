"""Catalog of integral representations of zeta and eta.

Each entry assembles one or more integrals (evaluated by :mod:`quad`) plus a
closed-form additive term.  Entries with an algebraically decaying integrand
integrate numerically up to a cut ``T`` beyond which the hyperbolic kernel
equals its limit to double precision, and add the remaining tail in closed
form.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

import numpy as np

from . import quad
from .core import (
    DEFAULT_OPTIONS,
    AllS,
    ConfigError,
    ConvergenceError,
    DomainError,
    Custom,
    EvalOptions,
    EvalOutcome,
    RegionError,
    SigmaBetween,
    SigmaGreaterThan,
    SigmaLessThan,
    UnknownIdError,
    ValidityRegion,
    classify_region,
    to_complex,
)
from .quad import ExpDamped, Finite, OscillatoryDamped, QuadratureSpec, SemiInfinite, Smooth
from .specfun import gamma, rgamma

PI = math.pi
TARGETS = (
    "zeta", "eta", "zeta(s+1)", "eta(s+1)",
    "zeta_rem", "eta_rem", "zeta(s+1)_rem", "eta(s+1)_rem",
)


@dataclass(frozen=True)
class Piece:
    integrand: Callable[[np.ndarray], np.ndarray]
    spec: QuadratureSpec
    prefactor: complex = 1.0


@dataclass(frozen=True)
class Assembly:
    pieces: tuple[Piece, ...]
    additive: complex = 0.0


@dataclass(frozen=True)
class IntegralRep:
    id: str
    formula: str
    region: ValidityRegion
    target: str
    build: Callable[[complex, Mapping[str, Any]], Assembly]
    params: Mapping[str, Any] = field(default_factory=dict)
    kind: str = "integral"

    def region_for(self, s: complex, params: Mapping[str, Any]) -> ValidityRegion:
        c = params.get("c")
        if isinstance(c, str) and c == "s" or (isinstance(c, complex) and c.imag != 0):
            return SigmaBetween(0.0, 1.0)
        return self.region


# ---------------------------------------------------------------- kernels


def _pw(base, e):
    """base**e on the principal branch, base an array."""
    return np.exp(e * np.log(base))


def _sech(x):
    return 2.0 * np.exp(-x) / (1.0 + np.exp(-2.0 * x))


def _sech2(x):
    e = np.exp(-2.0 * x)
    return 4.0 * e / (1.0 + e) ** 2


def _csch(x):
    return 2.0 * np.exp(-x) / (-np.expm1(-2.0 * x))


def _csch2(x):
    e = np.exp(-2.0 * x)
    return 4.0 * e / np.expm1(-2.0 * x) ** 2


def _coth(x):
    return (1.0 + np.exp(-2.0 * x)) / (-np.expm1(-2.0 * x))


def _trig_pi(z):
    """Return (cot(pi z), csc(pi z)) for a complex array without overflow."""
    z = np.asarray(z, dtype=complex)
    upper = z.imag >= 0
    w = np.where(upper, np.exp(1j * PI * z), np.exp(-1j * PI * z))
    w2 = w * w
    cot = np.where(upper, 1j * (w2 + 1) / (w2 - 1), 1j * (1 + w2) / (1 - w2))
    csc = np.where(upper, 2j * w / (w2 - 1), 2j * w / (1 - w2))
    return cot, csc


def _sin_atan(s, t):
    """(1+t^2)^{-s/2} sin(s atan t)."""
    return _pw(1.0 + t * t, -s / 2) * np.sin(s * np.arctan(t))


def _cos_atan(s, t):
    """(1+t^2)^{-s/2} cos(s atan t)."""
    return _pw(1.0 + t * t, -s / 2) * np.cos(s * np.arctan(t))


def _tail_J(m: complex, T: float, sign: int) -> complex:
    # int_T^inf (1 + sign*i t)^{-m} dt, Re m > 1
    base = 1 + sign * 1j * T
    return cmath.exp((1 - m) * cmath.log(base)) / (sign * 1j * (m - 1))


def _tail_sin_atan(s: complex, T: float) -> complex:
    """int_T^inf (1+t^2)^{-s/2} sin(s atan t) dt (sigma > 1)."""
    return (_tail_J(s, T, -1) - _tail_J(s, T, +1)) / 2j


def _semi(a: float, rate: float) -> QuadratureSpec:
    return QuadratureSpec(SemiInfinite(a), ExpDamped(rate))


def _fin(a: float, b: float) -> QuadratureSpec:
    return QuadratureSpec(Finite(a, b), Smooth())


def _mellin(f, s: complex, small_rate: float, decay: float, pre: complex = 1.0, split: float = 1.0):
    """Pieces for int_0^inf f when |f| ~ t^{small_rate - 1} near 0.

    [0, split] runs in log t so the oscillation and the power singularity are
    both resolved; the rest is an exponentially damped half-line.
    """
    head = QuadratureSpec(Finite(0.0, split), OscillatoryDamped(max(abs(s.imag), 1.0), small_rate))
    return (Piece(f, head, pre), Piece(f, _semi(split, decay), pre))


def _resolve_c(c, s: complex):
    if isinstance(c, str):
        if c == "s":
            return s
        if c == "1/rho":
            if not abs(s.imag) > 1:
                raise ConfigError("c = 1/rho needs |Im s| > 1")
            return 1.0 / abs(s.imag)
        raise ConfigError(f"unknown c specifier {c!r}")
    return c


def _real_c(c) -> float:
    c = complex(c)
    if c.imag != 0 or not 0 < c.real < 1:
        raise ConfigError("this entry needs a real c in (0, 1)")
    return c.real


def _positive_int(p: Mapping[str, Any], key: str = "N") -> int:
    n = p[key]
    if int(n) != n or n < 1:
        raise ConfigError(f"{key} must be a positive integer")
    return int(n)


# ---------------------------------------------------------------- builders

_T_HYP = 12.0  # e^{-2 pi T} is far below double precision here


def _b_cot_line(s, p):
    c = _real_c(_resolve_c(p["c"], s))

    def f(t):
        out = 0j
        for sg in (1.0, -1.0):
            z = c + 1j * sg * t
            cot, _ = _trig_pi(z)
            out = out + _pw(z, -s) * cot
        return -0.5 * out

    a = cmath.exp((1 - s) * cmath.log(c + 1j * _T_HYP))
    b = cmath.exp((1 - s) * cmath.log(c - 1j * _T_HYP))
    return Assembly((Piece(f, _fin(0.0, _T_HYP)),), (a + b) / (2 * (s - 1)))


def _b_csc_line(s, p):
    c = complex(_resolve_c(p["c"], s))
    t0 = -c.imag

    def f(t):
        out = 0j
        for sg in (1.0, -1.0):
            z = c + 1j * (t0 + sg * t)
            _, csc = _trig_pi(z)
            out = out + _pw(z, -s) * csc
        return 0.5 * out

    return Assembly((Piece(f, _semi(0.0, PI)),))


def _folded_parts(s, c, t):
    # modulus^{-s} and atan(t/c), consistent for complex c
    lp = np.log(c + 1j * t)
    lm = np.log(c - 1j * t)
    inv_mod = np.exp(-0.5 * s * (lp + lm))
    ang = 0.5j * (lm - lp)
    return inv_mod, ang


def _b_zeta_folded(s, p):
    c = _real_c(_resolve_c(p["c"], s))
    cc = math.cos(PI * c)
    sc = math.sin(PI * c)

    def f(t):
        inv_mod = _pw(c * c + t * t, -s / 2)
        ang = np.arctan(t / c)
        x = PI * t
        sech2 = _sech2(x)
        denom = 1.0 - cc * cc * sech2
        first = np.cos(s * ang) * cc * sc * sech2 / denom
        second = np.tanh(x) * np.sin(s * ang) / denom
        return -(first - second) * inv_mod

    tail = c ** (1 - s) * _tail_sin_atan(s, _T_HYP / c)
    return Assembly((Piece(f, _fin(0.0, _T_HYP)),), tail)


def _b_eta_folded(s, p):
    c = complex(_resolve_c(p["c"], s))
    if c.imag == 0 and c.real == 0:
        return _b_eta_c0(s, p)
    cc = cmath.cos(PI * c)
    sc = cmath.sin(PI * c)

    def f(t):
        inv_mod, ang = _folded_parts(s, c, t)
        x = PI * t
        sech = _sech(x)
        denom = 1.0 - cc * cc * _sech2(x)
        num = -np.sin(s * ang) * cc * np.tanh(x) * sech + np.cos(s * ang) * sc * sech
        return num * inv_mod / denom

    return Assembly((Piece(f, _semi(0.0, PI)),))


def _b_jensen_half(s, p):
    def f(t):
        return np.tanh(PI * t) * _sin_atan(s, 2 * t)

    T = _T_HYP / 2
    pre = 2**s
    return Assembly((Piece(f, _fin(0.0, T), pre),), pre * 0.5 * _tail_sin_atan(s, 2 * T))


def _b_hermite_half(s, p):
    def f(t):
        x = PI * t
        return 2.0 * np.exp(-2 * x) / (1 + np.exp(-2 * x)) * _sin_atan(s, 2 * t)

    return Assembly((Piece(f, _semi(0.0, 2 * PI), -(2**s)),), 2 ** (s - 1) / (s - 1))


def _b_eta_half(s, p):
    def f(t):
        return _cos_atan(s, t) * _sech(PI * t / 2)

    return Assembly((Piece(f, _semi(0.0, PI / 2), 2 ** (s - 1)),))


def _b_exp_plus(s, p):
    def f(t):
        return 2.0 / (1 + np.exp(-2 * PI * t)) * _sin_atan(s, 2 * t)

    T = _T_HYP / 2
    pre = 2**s
    return Assembly((Piece(f, _fin(0.0, T), pre),), 2 ** (s - 1) / (1 - s) + pre * _tail_sin_atan(s, 2 * T))


def _b_eta_c0(s, p):
    def f(t):
        return _pw(t, -s) * _csch(PI * t)

    return Assembly(_mellin(f, s, -s.real, PI, -cmath.sin(s * PI / 2)))


def _b_zeta_c0(s, p):
    def f(t):
        return _pw(t, -s) * _csch(PI * t)

    pre = cmath.sin(s * PI / 2) / (2 ** (1 - s) - 1)
    return Assembly(_mellin(f, s, -s.real, PI, pre))


def _b_third(s, p):
    r3 = math.sqrt(3.0)

    def f(t):
        q = np.exp(-2 * PI * t / 3)
        den = 1 + q + q * q
        ratio = (1 - q * q) / den
        inv = q / den
        return ratio * _sin_atan(s, t) - r3 * inv * _cos_atan(s, t)

    T = 20.0
    pre = 3 ** (s - 1)
    return Assembly((Piece(f, _fin(0.0, T), pre),), pre * _tail_sin_atan(s, T))


def _line_pair(c, s, kernel):
    def f(t):
        out = 0j
        for sg in (1.0, -1.0):
            z = c + 1j * sg * t
            out = out + _pw(z, -s) * kernel(z)
        return out

    return f


def _b_dcot(s, p):
    c = _real_c(_resolve_c(p["c"], s))

    def kern(z):
        cot, csc = _trig_pi(z)
        return cot * csc

    return Assembly((Piece(_line_pair(c, s, kern), _semi(0.0, PI), -PI / (2 * s)),))


def _b_dcsc(s, p):
    c = _real_c(_resolve_c(p["c"], s))

    def kern(z):
        _, csc = _trig_pi(z)
        return csc * csc

    return Assembly((Piece(_line_pair(c, s, kern), _semi(0.0, 2 * PI), PI / (2 * s)),))


def _b_eta_deriv_half(s, p):
    def f(t):
        x = PI * t / 2
        return np.tanh(x) * _sech(x) * _sin_atan(s, t)

    return Assembly((Piece(f, _semi(0.0, PI / 2), 2 ** (s - 1) * PI / s),))


def _b_zeta_deriv_half(s, p):
    def f(t):
        return _cos_atan(s, t) * _sech2(PI * t / 2)

    return Assembly((Piece(f, _semi(0.0, PI), PI * 2 ** (s - 1) / s),))


def _b_eta_c0_parts(s, p):
    def f(t):
        x = PI * t
        return _pw(t, 1 - s) * _coth(x) * _csch(x)

    return Assembly(_mellin(f, s, -s.real, PI, PI * cmath.sin(s * PI / 2) / (s - 1)))


def eta_c1_parts(s: complex, r: float, side: str, tol: float = 1e-12) -> tuple[complex, EvalOutcome, EvalOutcome]:
    """(constant, contour integral term, tail term) of the c = 1 forms.

    ``side`` is "L" (contour passes left of t = 1) or "R" (right, which
    picks up the residue constant 1).
    """
    if not 0 < r < 1:
        raise ConfigError("r must lie in (0, 1)")
    s = to_complex(s)
    sign = 1 if side == "L" else -1

    def g(th):
        e = np.exp(1j * th)
        z = PI * r * e
        w = np.exp(-2 * z)
        # cosh(z)/sinh(z)^2 = 2 e^{-z} (1 + w) / (1 - w)^2
        ker = 2.0 * np.exp(-z) * (1 + w) / (1 - w) ** 2
        return _pw(1 + sign * r * 1j * e, -s) * ker * e

    def h(t):
        x = PI * r * t
        return _pw(1 + (r * t) ** 2, -s / 2) * np.cos(s * np.arctan(r * t)) * _coth(x) * _csch(x)

    pre = 1j * PI * r / (2 * s)
    contour = quad.integrate_contour_theta(g, tol / max(1.0, abs(pre))).scaled(pre)
    tail_pre = -r * PI / s
    tail = quad.integrate(h, QuadratureSpec(SemiInfinite(1.0), ExpDamped(PI * r), tol / max(1.0, abs(tail_pre))))
    const = 1.0 if side == "R" else 0.0
    return const, contour, tail.scaled(tail_pre)


def _theta_builder(side):
    def build(s, p):
        r = float(p["r"])
        const, contour, tail = eta_c1_parts(s, r, side)
        # both integrals are already done; report them as the additive term
        return Assembly((), const + contour.value + tail.value), contour.err_estimate + tail.err_estimate, contour.nodes_used + tail.nodes_used

    return build


def _b_sinh2_neg(s, p):
    def f(t):
        return _pw(t, 1 - s) * _csch2(t)

    pre = -(PI ** (s - 1)) * cmath.sin(PI * s / 2) / (s - 1)
    return Assembly(_mellin(f, s, -s.real, 2.0, pre))


def _b_gr527(s, p):
    a = float(p["a"])
    if not a > 0:
        raise ConfigError("a must be positive")

    def f(t):
        return _pw(t, s) * _csch2(a * t)

    pre = 0.25 * (2 * a) ** (s + 1) * rgamma(s + 1)
    return Assembly(_mellin(f, s, s.real - 1, 2 * a, pre))


def _b_sinh_erd(s, p):
    def f(t):
        return _pw(t, s - 1) * _csch(t)

    pre = rgamma(s) / (2 * (1 - 2 ** (-s)))
    return Assembly(_mellin(f, s, s.real - 1, 1.0, pre))


def _b_exp_erd(s, p):
    def f(t):
        return _pw(t, s - 1) * np.exp(-t) / (-np.expm1(-t))

    return Assembly(_mellin(f, s, s.real - 1, 1.0, rgamma(s)))


def _b_cosh2(s, p):
    def f(t):
        out = _pw(0.5 + 1j * t, 1 - s) + _pw(0.5 - 1j * t, 1 - s)
        return out * _sech2(PI * t)

    return Assembly((Piece(f, _semi(0.0, 2 * PI), PI / (2 * (s - 1))),))


def _b_sub_a(s, p):
    pre = -(PI ** (s - 1)) * cmath.sin(PI * s / 2) / (s - 1)
    out = quad.mellin_inv_sinh2(1 - s).scaled(pre)
    return Assembly((), out.value), out.err_estimate, out.nodes_used


def _b_sub_b(s, p):
    pre = 2 ** (s - 1) * rgamma(1 + s)
    out = quad.mellin_inv_sinh2(s).scaled(pre)
    return Assembly((), out.value), out.err_estimate, out.nodes_used


def zeta_tail_c0(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> EvalOutcome:
    """The tail part left after splitting the c = 0 contour at |t| = 1."""
    s = to_complex(s)
    sn = cmath.sin(PI * s / 2)

    def f(t):
        x = PI * t
        return _pw(t, -s) * np.exp(-x) * _csch(x)

    spec = QuadratureSpec(SemiInfinite(1.0), ExpDamped(2 * PI), _piece_tol(opts, sn))
    out = quad.integrate(f, spec)
    return out.scaled(sn, sn / (s - 1))


def _b_split_tail(s, p):
    from .serreps import zeta0_head

    head = zeta0_head(s)
    sn = cmath.sin(PI * s / 2)

    def f(t):
        x = PI * t
        return _pw(t, -s) * np.exp(-x) * _csch(x)

    return Assembly((Piece(f, _semi(1.0, 2 * PI), sn),), sn / (s - 1) + head.value)


def _b_c1(s, p):
    def f(t):
        return _coth(PI * t) * _sin_atan(s, t)

    return Assembly((Piece(f, _fin(0.0, _T_HYP)),), 0.5 + _tail_sin_atan(s, _T_HYP))


def _b_c1a(s, p):
    def f(t):
        x = PI * t
        return np.exp(-x) * _csch(x) * _sin_atan(s, t)

    return Assembly((Piece(f, _semi(0.0, 2 * PI)),), (s + 1) / (2 * (s - 1)))


def _b_eta_c1(s, p):
    def f(t):
        return _csch(PI * t) * _sin_atan(s, t)

    return Assembly((Piece(f, _semi(0.0, PI)),), 0.5)


def _b_exp_sinh(s, p):
    def f(t):
        return 2.0 / (-np.expm1(-2 * PI * t)) * _sin_atan(s, t)

    return Assembly((Piece(f, _fin(0.0, _T_HYP)),), (s - 3) / (2 * (s - 1)) + 2 * _tail_sin_atan(s, _T_HYP))


def _b_rem_half_n(s, p):
    N = _positive_int(p)
    h = 0.5 + N

    def f(t):
        return 2.0 * np.tanh(PI * t * h) * _sin_atan(s, t)

    pre = 0.5 * h ** (1 - s)
    return Assembly((Piece(f, _fin(0.0, _T_HYP), pre),), pre * 2 * _tail_sin_atan(s, _T_HYP))


def _b_rem_half_n_exp(s, p):
    N = _positive_int(p)
    h = 0.5 + N
    k = PI * (1 + 2 * N)

    def f(t):
        e = np.exp(-k * t)
        return e / (1 + e) * _sin_atan(s, t)

    pre = h ** (1 - s)
    return Assembly((Piece(f, _semi(0.0, k), -2 * pre),), pre / (s - 1))


def _b_eta_rem_half_n(s, p):
    N = _positive_int(p)
    h = 0.5 + N

    def f(t):
        return _cos_atan(s, t) * _sech(PI * t * h)

    return Assembly((Piece(f, _semi(0.0, PI * h), (-1) ** N * h ** (1 - s)),))


def _b_next_rem(s, p):
    N = _positive_int(p)
    h = 0.5 + N

    def f(t):
        return _cos_atan(s, t) * _sech2(PI * t * h)

    return Assembly((Piece(f, _semi(0.0, 2 * PI * h), PI * h ** (1 - s) / s),))


def _b_eta_next_rem(s, p):
    N = _positive_int(p)
    h = 0.5 + N

    def f(t):
        x = PI * t * h
        return np.tanh(x) * _sech(x) * _sin_atan(s, t)

    return Assembly((Piece(f, _semi(0.0, PI * h), PI * (-1) ** N * h ** (1 - s) / s),))


def _b_rem_n(s, p):
    N = _positive_int(p)
    k = 2 * N * PI

    def f(t):
        return _sin_atan(s, t) / np.expm1(k * t)

    npow = N ** (1 - s)
    add = -0.5 * N ** (-s) + npow / (s - 1)
    return Assembly((Piece(f, _semi(0.0, k), 2 * npow),), add)


def _b_eta_rem_n(s, p):
    N = _positive_int(p)

    def f(t):
        return _sin_atan(s, t) * _csch(PI * N * t)

    add = (-1) ** N * 0.5 * N ** (-s)
    return Assembly((Piece(f, _semi(0.0, PI * N), (-1) ** (1 + N) * N ** (1 - s)),), add)


def _b_log_parts(s, p):
    def f(t):
        return _pw(t, s - 2) * np.log(-np.expm1(-t))

    return Assembly(_mellin(f, s, s.real - 1, 1.0, -rgamma(s - 1)))


def _b_log_sinh(s, p):
    T = 8.0
    ln2 = math.log(2.0)

    def f(t):
        x = PI * t
        lsh = x + np.log(-np.expm1(-2 * x)) - ln2
        return lsh * _cos_atan(s + 1, t)

    # beyond T: log sinh(pi t) = pi t - ln 2; cos((s+1) atan t)(1+t^2)^{-(s+1)/2}
    # = [(1+it)^{-s-1} + (1-it)^{-s-1}]/2
    tail = 0j
    for sg in (1, -1):
        j1 = _tail_J(s + 1, T, sg)
        jt = (_tail_J(s, T, sg) - j1) / (sg * 1j)
        tail += 0.5 * (PI * jt - ln2 * j1)
    pre = -s / PI
    return Assembly((Piece(f, _fin(0.0, T), pre),), 0.5 + pre * tail)


def hyp2f1_half(s: complex, t: np.ndarray) -> np.ndarray:
    """2F1(1/2, s/2; 3/2; -t^2) for t >= 0 (vectorized).

    Small t: Gauss series.  Moderate t: the Pfaff form in x = t^2/(1+t^2).
    Large t: t F = int_0^t (1+v^2)^{-s/2} dv expanded in 1/t.
    """
    t = np.asarray(t, dtype=float)
    out = np.empty(t.shape, dtype=complex)
    b = s / 2
    lo = t <= 0.7
    mid = (t > 0.7) & (t <= 2.0)
    hi = t > 2.0
    if lo.any():
        x = -t[lo] ** 2
        term = np.ones_like(x, dtype=complex)
        tot = term.copy()
        for k in range(200):
            term = term * (0.5 + k) * (b + k) / ((1.5 + k) * (k + 1)) * x
            tot += term
            if np.max(np.abs(term)) < 1e-17 * np.min(np.abs(tot)):
                break
        out[lo] = tot
    if mid.any():
        tm = t[mid]
        x = tm * tm / (1 + tm * tm)
        term = np.ones_like(x, dtype=complex)
        tot = term.copy()
        for k in range(400):
            term = term * (1 + k) * (b + k) / ((1.5 + k) * (k + 1)) * x
            tot += term
            if np.max(np.abs(term)) < 1e-17 * np.min(np.abs(tot)):
                break
        out[mid] = _pw(1 + tm * tm, -b) * tot
    if hi.any():
        th = t[hi]
        g_inf = math.sqrt(PI) * gamma((s - 1) / 2) * rgamma(b) / 2
        lt = np.log(th)
        coef = 1 + 0j
        tot = np.zeros_like(th, dtype=complex)
        for j in range(80):
            term = coef * np.exp((1 - s - 2 * j) * lt) / (s - 1 + 2 * j)
            tot += term
            if np.max(np.abs(term)) < 1e-17 * max(1.0, np.min(np.abs(tot))):
                break
            coef *= (-b - j) / (j + 1)
        out[hi] = (g_inf - tot) / th
    return out


def _b_no_exponent(s, p):
    def f1(t):
        x = PI * t
        return t * _csch2(x) * np.sin(s * np.arctan(t)) * hyp2f1_half(s, t)

    def f2(t):
        x = PI * t
        return t * _coth(x) * np.cos(s * np.arctan(t)) / (1 + t * t) * hyp2f1_half(s, t)

    T = _T_HYP
    rate = min(1.0, s.real)
    head = 0.5 + 0.5 * math.sqrt(PI) * cmath.sin(PI * s / 2) * gamma(s / 2 - 0.5) * rgamma(s / 2)

    def f2_far(t):
        # coth = 1 to double precision beyond T
        return t * np.cos(s * np.arctan(t)) / (1 + t * t) * hyp2f1_half(s, t)

    far = QuadratureSpec(SemiInfinite(T), OscillatoryDamped(max(abs(s.imag), 1.0), rate))
    return Assembly(
        (
            Piece(f1, _semi(0.0, 2 * PI), PI),
            Piece(f2, _fin(0.0, T), -s),
            Piece(f2_far, far, -s),
        ),
        head,
    )


def _hyp1f2_vec(a, b1, b2, z):
    term = np.ones_like(z, dtype=complex)
    tot = term.copy()
    k = 0
    while True:
        term = term * (a + k) / ((b1 + k) * (b2 + k) * (k + 1)) * z
        tot += term
        k += 1
        if k * k > np.max(z) and np.max(np.abs(term) / np.abs(tot)) < 1e-17:
            break
        if k > 5000:
            raise ConvergenceError("1F2 series did not converge")
    return tot


def _b_f12(s, p):
    a = 1 - s / 2

    def f(t):
        x = PI * t
        z = (x / 2) ** 2
        return _pw(t, 2 - s) * _hyp1f2_vec(a, 1.5, 2 - s / 2, z) * _coth(x) * _csch2(x)

    pre = cmath.sin(PI * s / 2) * PI**2 / ((2 ** (1 - s) - 1) * (1 - s / 2))
    return Assembly(_mellin(f, s, -s.real, PI, pre))


def _sinhc_minus_one(u):
    """sinh(u)/u - 1, accurate for small u."""
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    small = u < 0.1
    us = u[small] ** 2
    out[small] = us / 6 * (1 + us / 20 * (1 + us / 42 * (1 + us / 72)))
    ul = u[~small]
    out[~small] = np.sinh(ul) / ul - 1
    return out


def _b_mixed(s, p):
    def f(t):
        half = t / 2
        num = -s * _sinhc_minus_one(half) + 2 * np.sinh(half / 2) ** 2
        return _pw(t, -s) * num / np.expm1(t)

    den = 2 - 2 ** (1 + s) + s * 2**s
    pre = PI ** (s - 1) * 4**s * cmath.sin(PI * s / 2) / den
    return Assembly(_mellin(f, s, 2 - s.real, 0.5, pre))


def _b_mixed_a(s, p):
    def f(t):
        return _pw(t, -s) * 2 * np.sinh(t / 4) ** 2 / np.expm1(t)

    outer = PI**s * 2 ** (s - 2) / ((1 - 2**s) * cmath.cos(PI * s / 2))
    inner = cmath.sin(PI * s) * 2**s / PI
    return Assembly(_mellin(f, s, 2 - s.real, 0.5, outer * inner), outer * rgamma(s))


def _b_mixed_b(s, p):
    def f(v):
        # v/sinh v - 1 = -(sinh v / v - 1) / (sinh v / v)
        d = _sinhc_minus_one(v)
        return _pw(v, -s - 1) * (-d / (1 + d)) * np.exp(-v)

    outer = PI ** (s - 1) * cmath.sin(PI * s / 2)
    # pi / (sin(pi s) Gamma(1+s)) = -Gamma(-s) by reflection
    return Assembly(_mellin(f, s, 2 - s.real, 1.0, outer), outer * gamma(-s))


# ---------------------------------------------------------------- catalog

_S_NE_1 = Custom("s_ne_1")
_S_NE_0 = Custom("s_ne_0")


def _entries() -> list[IntegralRep]:
    half = {"c": 0.5}
    return [
        IntegralRep("ZETA_COT_LINE", "zeta(s) = -1/2 int_R (c+it)^{-s} cot(pi(c+it)) dt", SigmaGreaterThan(1), "zeta", _b_cot_line, half),
        IntegralRep("ETA_CSC_LINE", "eta(s) = 1/2 int_R (c+it)^{-s} / sin(pi(c+it)) dt", AllS(), "eta", _b_csc_line, half),
        IntegralRep("ZETA_FOLDED_C", "zeta(s) = -int_0^inf [cos(s atan(t/c)) cos(pi c) sin(pi c) - sinh(pi t) cosh(pi t) sin(s atan(t/c))] / ((c^2+t^2)^{s/2} (cosh^2(pi t) - cos^2(pi c))) dt", SigmaGreaterThan(1), "zeta", _b_zeta_folded, half),
        IntegralRep("ETA_FOLDED_C", "eta(s) = int_0^inf [-sin(s atan(t/c)) cos(pi c) sinh(pi t) + cos(s atan(t/c)) sin(pi c) cosh(pi t)] / ((c^2+t^2)^{s/2} (cosh^2(pi t) - cos^2(pi c))) dt", AllS(), "eta", _b_eta_folded, half),
        IntegralRep("ZETA_JENSEN_HALF", "zeta(s) = 2^s int_0^inf sinh(pi t) sin(s atan 2t) / ((1+4t^2)^{s/2} cosh(pi t)) dt", SigmaGreaterThan(1), "zeta", _b_jensen_half),
        IntegralRep("ZETA_HERMITE_HALF", "zeta(s) = 2^{s-1}/(s-1) - 2^s int_0^inf sin(s atan 2t) e^{-pi t} / ((1+4t^2)^{s/2} cosh(pi t)) dt", _S_NE_1, "zeta", _b_hermite_half),
        IntegralRep("ETA_HALF", "eta(s) = 2^{s-1} int_0^inf cos(s atan t) / ((1+t^2)^{s/2} cosh(pi t/2)) dt", AllS(), "eta", _b_eta_half),
        IntegralRep("ZETA_EXP_PLUS", "zeta(s) = 2^{s-1}/(1-s) + 2^s int_0^inf sin(s atan 2t) e^{pi t} / ((1+4t^2)^{s/2} cosh(pi t)) dt", SigmaGreaterThan(1), "zeta", _b_exp_plus),
        IntegralRep("ETA_C0", "eta(s) = -sin(pi s/2) int_0^inf t^{-s} / sinh(pi t) dt", SigmaLessThan(0), "eta", _b_eta_c0),
        IntegralRep("ZETA_C0", "zeta(s) = sin(pi s/2)/(2^{1-s}-1) int_0^inf t^{-s} / sinh(pi t) dt", SigmaLessThan(0), "zeta", _b_zeta_c0),
        IntegralRep("ZETA_THIRD", "zeta(s) = 3^{s-1} int_0^inf (2 sin(s atan t) sinh(2 pi t/3) - sqrt3 cos(s atan t)) / ((1+t^2)^{s/2} (2 cosh(2 pi t/3) + 1)) dt", SigmaGreaterThan(1), "zeta", _b_third),
        IntegralRep("ETA_DCOT", "eta(s+1) = -pi/(2s) int_R (c+it)^{-s} cos(pi(c+it)) / sin^2(pi(c+it)) dt", _S_NE_0, "eta(s+1)", _b_dcot, half),
        IntegralRep("ZETA_DCSC", "zeta(s+1) = pi/(2s) int_R (c+it)^{-s} / sin^2(pi(c+it)) dt", _S_NE_0, "zeta(s+1)", _b_dcsc, half),
        IntegralRep("ETA_DERIV_HALF", "eta(s+1) = 2^{s-1} pi/s int_0^inf (1+t^2)^{-s/2} sinh(pi t/2) sin(s atan t) / cosh^2(pi t/2) dt", _S_NE_0, "eta(s+1)", _b_eta_deriv_half),
        IntegralRep("ZETA_DERIV_HALF", "zeta(s+1) = pi 2^{s-1}/s int_0^inf cos(s atan t) / ((1+t^2)^{s/2} cosh^2(pi t/2)) dt", _S_NE_0, "zeta(s+1)", _b_zeta_deriv_half),
        IntegralRep("ETA_C0_PARTS", "eta(s) = pi sin(pi s/2)/(s-1) int_0^inf t^{1-s} cosh(pi t) / sinh^2(pi t) dt", SigmaLessThan(0), "eta", _b_eta_c0_parts),
        IntegralRep("ETA_C1_THETA_L", "eta(s+1) = (i pi r/(2s)) int_0^pi (1 + r i e^{i th})^{-s} cosh(pi r e^{i th}) e^{i th} / sinh^2(pi r e^{i th}) dth - (r pi/s) int_1^inf (1+r^2t^2)^{-s/2} cos(s atan(rt)) cosh(pi r t) / sinh^2(pi r t) dt", _S_NE_0, "eta(s+1)", _theta_builder("L"), {"r": 0.5}, "hybrid"),
        IntegralRep("ETA_C1_THETA_R", "eta(s+1) = 1 + (i pi r/(2s)) int_0^pi (1 - r i e^{i th})^{-s} cosh(pi r e^{i th}) e^{i th} / sinh^2(pi r e^{i th}) dth - (r pi/s) int_1^inf (1+r^2t^2)^{-s/2} cos(s atan(rt)) cosh(pi r t) / sinh^2(pi r t) dt", _S_NE_0, "eta(s+1)", _theta_builder("R"), {"r": 0.5}, "hybrid"),
        IntegralRep("ZETA_SINH2_NEG", "zeta(s) = -pi^{s-1} sin(pi s/2)/(s-1) int_0^inf t^{1-s} / sinh^2 t dt", SigmaLessThan(0), "zeta", _b_sinh2_neg),
        IntegralRep("ZETA_GR527", "zeta(s) = (2a)^{s+1}/(4 Gamma(s+1)) int_0^inf t^s / sinh^2(a t) dt", SigmaGreaterThan(1), "zeta", _b_gr527, {"a": 1.0}),
        IntegralRep("ZETA_SINH_ERD", "zeta(s) = 1/(2 Gamma(s) (1-2^{-s})) int_0^inf t^{s-1} / sinh t dt", SigmaGreaterThan(1), "zeta", _b_sinh_erd),
        IntegralRep("ZETA_EXP_ERD", "zeta(s) = 1/Gamma(s) int_0^inf t^{s-1} / (e^t - 1) dt", SigmaGreaterThan(1), "zeta", _b_exp_erd),
        IntegralRep("ZETA_COSH2", "zeta(s) = pi/(2(s-1)) int_R (1/2+it)^{1-s} / cosh^2(pi t) dt", SigmaGreaterThan(0), "zeta", _b_cosh2),
        IntegralRep("ZETA_SINH2_SUB_A", "zeta(s) = -pi^{s-1} sin(pi s/2)/(s-1) int_0^inf t^{1-s} (1/sinh^2 t - 1/t^2) dt", SigmaBetween(0, 2), "zeta", _b_sub_a),
        IntegralRep("ZETA_SINH2_SUB_B", "zeta(s) = 2^{s-1}/Gamma(1+s) int_0^inf t^s (1/sinh^2 t - 1/t^2) dt", SigmaBetween(-1, 1), "zeta", _b_sub_b),
        IntegralRep("ZETA_SPLIT_TAIL", "zeta(s) = zeta_head(s) + sin(pi s/2)/(s-1) + sin(pi s/2) int_1^inf t^{-s} e^{-pi t} / sinh(pi t) dt", _S_NE_1, "zeta", _b_split_tail, {}, "hybrid"),
        IntegralRep("ZETA_C1", "zeta(s) = 1/2 + int_0^inf cosh(pi t) sin(s atan t) / ((1+t^2)^{s/2} sinh(pi t)) dt", SigmaGreaterThan(1), "zeta", _b_c1),
        IntegralRep("ZETA_C1A", "zeta(s) = (s+1)/(2(s-1)) + int_0^inf e^{-pi t} sin(s atan t) / ((1+t^2)^{s/2} sinh(pi t)) dt", _S_NE_1, "zeta", _b_c1a),
        IntegralRep("ETA_C1", "eta(s) = 1/2 + int_0^inf sin(s atan t) / (sinh(pi t) (1+t^2)^{s/2}) dt", AllS(), "eta", _b_eta_c1),
        IntegralRep("ZETA_EXP_SINH", "zeta(s) = (s-3)/(2(s-1)) + int_0^inf sin(s atan t) e^{pi t} / ((1+t^2)^{s/2} sinh(pi t)) dt", SigmaGreaterThan(1), "zeta", _b_exp_sinh),
        IntegralRep("ZETA_REM_HALF_N", "zeta(s) - zeta_N(s) = (1/2+N)^{1-s}/2 int_0^inf sinh(pi t (1+2N)) (1+t^2)^{-s/2} sin(s atan t) / cosh^2(pi t (1/2+N)) dt", SigmaGreaterThan(1), "zeta_rem", _b_rem_half_n, {"N": 3}),
        IntegralRep("ZETA_REM_HALF_N_EXP", "zeta(s) - zeta_N(s) = (1/2+N)^{1-s}/(s-1) - 2 (1/2+N)^{1-s} int_0^inf (1+t^2)^{-s/2} sin(s atan t) / (1 + e^{pi t (1+2N)}) dt", _S_NE_1, "zeta_rem", _b_rem_half_n_exp, {"N": 3}),
        IntegralRep("ETA_REM_HALF_N", "eta(s) - eta_N(s) = (-1)^N (1/2+N)^{1-s} int_0^inf (1+t^2)^{-s/2} cos(s atan t) / cosh(pi t (1/2+N)) dt", AllS(), "eta_rem", _b_eta_rem_half_n, {"N": 3}),
        IntegralRep("ZETA_NEXT_REM", "zeta(s+1) - zeta_N(s+1) = pi (1/2+N)^{1-s}/s int_0^inf (1+t^2)^{-s/2} cos(s atan t) / cosh^2(pi t (1/2+N)) dt", _S_NE_0, "zeta(s+1)_rem", _b_next_rem, {"N": 3}),
        IntegralRep("ETA_NEXT_REM", "eta(s+1) - eta_N(s+1) = pi (-1)^N (1/2+N)^{1-s}/s int_0^inf sinh(pi t (1/2+N)) (1+t^2)^{-s/2} sin(s atan t) / cosh^2(pi t (1/2+N)) dt", _S_NE_0, "eta(s+1)_rem", _b_eta_next_rem, {"N": 3}),
        IntegralRep("ZETA_REM_N", "zeta(s) - zeta_N(s) = -1/(2N^s) + N^{1-s}/(s-1) + 2 N^{1-s} int_0^inf (1+t^2)^{-s/2} sin(s atan t) / (e^{2 N pi t} - 1) dt", _S_NE_1, "zeta_rem", _b_rem_n, {"N": 3}),
        IntegralRep("ETA_REM_N", "eta(s) - eta_N(s) = (-1)^N/(2N^s) + (-1)^{N+1} N^{1-s} int_0^inf (1+t^2)^{-s/2} sin(s atan t) / sinh(pi N t) dt", AllS(), "eta_rem", _b_eta_rem_n, {"N": 3}),
        IntegralRep("ZETA_LOG_PARTS", "zeta(s) = -1/Gamma(s-1) int_0^inf t^{s-2} log(1 - e^{-t}) dt", SigmaGreaterThan(1), "zeta", _b_log_parts),
        IntegralRep("ZETA_LOG_SINH", "zeta(s) = 1/2 - (s/pi) int_0^inf log(sinh(pi t)) cos((s+1) atan t) / (1+t^2)^{(1+s)/2} dt", SigmaGreaterThan(1), "zeta", _b_log_sinh),
        IntegralRep("ZETA_NO_EXPONENT", "zeta(s) = 1/2 + sqrt(pi) sin(pi s/2) Gamma(s/2-1/2)/(2 Gamma(s/2)) + pi int_0^inf t sin(s atan t) F(t) / sinh^2(pi t) dt - s int_0^inf t cosh(pi t) cos(s atan t) F(t) / (sinh(pi t)(1+t^2)) dt, F = 2F1(1/2, s/2; 3/2; -t^2)", Custom("sigma_gt_0_s_ne_1"), "zeta", _b_no_exponent),
        IntegralRep("ZETA_F12", "zeta(s) = sin(pi s/2) pi^2/((2^{1-s}-1)(1-s/2)) int_0^inf t^{2-s} 1F2(1-s/2; 3/2, 2-s/2; pi^2 t^2/4) cosh(pi t) / sinh^3(pi t) dt", SigmaLessThan(0), "zeta", _b_f12),
        IntegralRep("ZETA_MIXED", "zeta(s) = pi^{s-1} 4^s sin(pi s/2)/(2 - 2^{1+s} + s 2^s) int_0^inf t^{-s} (s - 2s sinh(t/2)/t - 1 + cosh(t/2)) / (e^t - 1) dt", SigmaLessThan(2), "zeta", _b_mixed),
        IntegralRep("ZETA_MIXED_A", "zeta(s) = pi^s 2^{s-2}/((1-2^s) cos(pi s/2)) (sin(pi s) 2^s/pi int_0^inf t^{-s} (cosh(t/2) - 1) / (e^t - 1) dt + 1/Gamma(s))", SigmaLessThan(2), "zeta", _b_mixed_a),
        IntegralRep("ZETA_MIXED_B", "zeta(s) = pi^{s-1} sin(pi s/2) (int_0^inf v^{-s-1} (v/sinh v - 1) e^{-v} dv - pi/(sin(pi s) Gamma(1+s)))", SigmaLessThan(2), "zeta", _b_mixed_b),
    ]


_CATALOG: tuple[IntegralRep, ...] = tuple(_entries())
_BY_ID = {r.id: r for r in _CATALOG}
assert len(_BY_ID) == len(_CATALOG)


def catalog() -> list[IntegralRep]:
    return list(_CATALOG)


def lookup(rep_id: str) -> IntegralRep:
    try:
        return _BY_ID[rep_id]
    except KeyError:
        raise UnknownIdError(f"unknown integral representation {rep_id!r}") from None


def _piece_tol(opts: EvalOptions, prefactor: complex) -> float:
    scale = max(abs(prefactor), 1e-300)
    return max(2e-14, min(opts.rel_tol, opts.abs_tol / scale))


def evaluate(
    rep_id: str,
    s: complex,
    opts: EvalOptions = DEFAULT_OPTIONS,
    params_override: Mapping[str, Any] | None = None,
) -> EvalOutcome:
    """additive term + sum of prefactor * integral over the entry's pieces."""
    rep = lookup(rep_id)
    s = to_complex(s)
    params = dict(rep.params)
    if params_override:
        unknown = set(params_override) - set(params)
        if unknown:
            raise ConfigError(f"{rep_id} has no parameter(s) {sorted(unknown)}")
        params.update(params_override)
    region = rep.region_for(s, params)
    inside = classify_region(s, region)
    if not inside and opts.enforce_region:
        raise RegionError(f"{rep_id}: s={s} outside region {region.describe()}")
    try:
        built = rep.build(s, params)
    except (ZeroDivisionError, OverflowError) as exc:
        # only reachable with the region check turned off
        raise DomainError(f"{rep_id}: cannot evaluate at s={s}: {exc}") from None
    if isinstance(built, tuple):
        asm, err, nodes = built
    else:
        asm, err, nodes = built, 0.0, 0
    total = complex(asm.additive)
    for piece in asm.pieces:
        spec = piece.spec
        tol = _piece_tol(opts, piece.prefactor)
        spec = QuadratureSpec(spec.domain, spec.mode, tol, spec.max_depth, opts.max_nodes, spec.breakpoints)
        try:
            out = quad.integrate(piece.integrand, spec)
        except ConvergenceError as exc:
            best = exc.best.scaled(piece.prefactor) if exc.best else None
            raise ConvergenceError(f"{rep_id}: {exc}", best) from None
        total += piece.prefactor * out.value
        err += abs(piece.prefactor) * out.err_estimate
        nodes += out.nodes_used
    return EvalOutcome(total, err, nodes, 0, inside, 0.0)


REMAINDER_IDS = (
    "ZETA_REM_HALF_N", "ZETA_REM_HALF_N_EXP", "ETA_REM_HALF_N",
    "ZETA_NEXT_REM", "ETA_NEXT_REM", "ZETA_REM_N", "ETA_REM_N",
)


def remainder(rep_id: str, s: complex, N: int, opts: EvalOptions = DEFAULT_OPTIONS) -> EvalOutcome:
    """Remainder of the partial sum after N terms, from a remainder entry."""
    if rep_id not in REMAINDER_IDS:
        raise ConfigError(f"{rep_id} is not a remainder representation")
    return evaluate(rep_id, s, opts, {"N": N})


def remainder_bounds(s: float, N: int) -> tuple[float, float]:
    """(lower, upper) bounds on zeta(s) - zeta_N(s) for real s > 1.

    Dropping the integral from the half-integer shift gives the upper bound,
    dropping it from the integer shift gives the lower bound.
    """
    s = float(s)
    upper = (0.5 + N) ** (1 - s) / (s - 1)
    lower = -0.5 * N ** (-s) + N ** (1 - s) / (s - 1)
    return lower, upper


def eta_next_via_eta(s: complex, eta_s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """eta(s+1) from eta(s) plus a single integral."""
    s = to_complex(s)

    def f(t):
        x = PI * t / 2
        return _cos_atan(s, t) * np.tanh(x) * _sech(x) * t

    pre = 2 ** (s - 1) * PI / s
    out = quad.integrate(f, QuadratureSpec(SemiInfinite(0.0), ExpDamped(PI / 2), _piece_tol(opts, pre)))
    return 2 * (s - 1) * eta_s / s + pre * out.value


def zeta_next_via_zeta(s: complex, zeta_s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """zeta(s+1) from zeta(s) plus the same integral."""
    s = to_complex(s)
    eta_s = (1 - 2 ** (1 - s)) * zeta_s
    eta_next = eta_next_via_eta(s, eta_s, opts)
    return eta_next / (1 - 2 ** (-s))
