"""Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands.

Integrands are called with a 1-d ``numpy`` array of abscissae and should
return an array of the same shape; scalar-only callables are detected and
evaluated node by node.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .core import ConfigError, ConvergenceError, DomainError, EvalOutcome

Integrand = Callable[[np.ndarray], np.ndarray]

_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full 15-point layout on [-1, 1]
_NODES = np.concatenate([-_XK[:-1], [0.0], _XK[:-1][::-1]])
_KW = np.concatenate([_WK[:-1], [_WK[-1]], _WK[:-1][::-1]])
_GW = np.zeros(15)
# Gauss nodes are the odd-indexed Kronrod abscissae (1, 3, 5, centre)
for _i, _w in zip((1, 3, 5), _WG[:3]):
    _GW[_i] = _w
    _GW[14 - _i] = _w
_GW[7] = _WG[3]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Finite:
    a: float
    b: float

    def __post_init__(self) -> None:
        if not self.a < self.b:
            raise ConfigError("Finite domain requires a < b")


@dataclass(frozen=True)
class SemiInfinite:
    a: float = 0.0


@dataclass(frozen=True)
class Smooth:
    pass


@dataclass(frozen=True)
class ExpDamped:
    decay_rate: float

    def __post_init__(self) -> None:
        if not self.decay_rate > 0:
            raise ConfigError("decay_rate must be positive")


@dataclass(frozen=True)
class OscillatoryDamped:
    """Integrand ~ g(t) cos(freq ln t): integrated in u = ln t.

    ``decay_rate`` is the exponential rate (in u) at which the transformed
    integrand dies off at both ends.
    """

    freq_hint: float
    decay_rate: float

    def __post_init__(self) -> None:
        if not self.decay_rate > 0:
            raise ConfigError("decay_rate must be positive")


Domain = Union[Finite, SemiInfinite]
Mode = Union[Smooth, ExpDamped, OscillatoryDamped]


@dataclass(frozen=True)
class QuadratureSpec:
    domain: Domain
    mode: Mode = field(default_factory=Smooth)
    tol: float = 1e-11
    max_depth: int = 100
    max_nodes: int = 2_000_000
    breakpoints: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ConfigError("tol must be positive")


def _evaluate(f: Integrand, x: np.ndarray) -> np.ndarray:
    try:
        y = np.asarray(f(x), dtype=complex)
        if y.shape == x.shape:
            out = y
        else:
            out = np.broadcast_to(y, x.shape).astype(complex)
    except (TypeError, ValueError):
        out = np.array([complex(f(float(xi))) for xi in x], dtype=complex)
    if not np.all(np.isfinite(out)):
        bad = x[~np.isfinite(out)][0]
        raise DomainError(f"integrand not finite at t={bad!r}")
    return out


def _rules(f: Integrand, a: np.ndarray, b: np.ndarray):
    """Kronrod value and error estimate for each panel [a_i, b_i]."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    x = (c[:, None] + h[:, None] * _NODES[None, :]).ravel()
    y = _evaluate(f, x).reshape(len(a), 15)
    k = (y @ _KW) * h
    g = (y @ _GW) * h
    mean = k / (2 * h)
    resasc = (np.abs(y - mean[:, None]) @ _KW) * np.abs(h)
    resabs = (np.abs(y) @ _KW) * np.abs(h)
    diff = np.abs(k - g)
    err = diff.copy()
    mask = (resasc != 0) & (diff != 0)
    err[mask] = resasc[mask] * np.minimum(1.0, (200 * diff[mask] / resasc[mask]) ** 1.5)
    floor = 50 * _EPS * resabs
    err = np.maximum(err, floor)
    return k, err, floor


def _adapt(f: Integrand, edges: np.ndarray, tol: float, max_depth: int, max_nodes: int) -> EvalOutcome:
    a = edges[:-1].astype(float)
    b = edges[1:].astype(float)
    depth = np.zeros(len(a), dtype=int)
    val, err, floor = _rules(f, a, b)
    nodes = 15 * len(a)
    while True:
        total = complex(val.sum())
        total_err = float(err.sum())
        target = tol * max(1.0, abs(total))
        # below twice the rounding floor further splitting cannot help
        if total_err <= max(target, 2.0 * float(floor.sum())):
            return EvalOutcome(total, total_err, nodes, 0, True, 0.0)
        splittable = depth < max_depth
        pick = splittable & (err > target / max(1, len(a)))
        if not pick.any():
            pick = splittable & (err == err[splittable].max()) if splittable.any() else pick
        if not pick.any() or nodes + 30 * int(pick.sum()) > max_nodes:
            best = EvalOutcome(total, total_err, nodes, 0, True, 0.0)
            raise ConvergenceError(
                f"quadrature tolerance {tol:g} not met (estimate {total_err:.3g})", best
            )
        pa, pb, pd = a[pick], b[pick], depth[pick]
        mid = 0.5 * (pa + pb)
        na = np.concatenate([pa, mid])
        nb = np.concatenate([mid, pb])
        nv, ne, nf = _rules(f, na, nb)
        nodes += 15 * len(na)
        keep = ~pick
        a = np.concatenate([a[keep], na])
        b = np.concatenate([b[keep], nb])
        depth = np.concatenate([depth[keep], pd + 1, pd + 1])
        val = np.concatenate([val[keep], nv])
        err = np.concatenate([err[keep], ne])
        floor = np.concatenate([floor[keep], nf])


def _with_breaks(lo: float, hi: float, breaks, n_init: int = 1) -> np.ndarray:
    pts = sorted({lo, hi, *[p for p in breaks if lo < p < hi]})
    if n_init > 1 and len(pts) == 2:
        return np.linspace(lo, hi, n_init + 1)
    return np.array(pts, dtype=float)


def integrate(f: Integrand, spec: QuadratureSpec) -> EvalOutcome:
    """Integrate ``f`` over ``spec.domain`` to tolerance ``spec.tol``.

    The tolerance is mixed: the summed panel error must fall below
    ``tol * max(1, |integral|)``.
    """
    dom = spec.domain
    mode = spec.mode
    tol = spec.tol
    if isinstance(mode, OscillatoryDamped):
        return _integrate_log_oscillatory(f, spec)
    if isinstance(dom, Finite):
        edges = _with_breaks(dom.a, dom.b, spec.breakpoints, 4)
        return _adapt(f, edges, tol, spec.max_depth, spec.max_nodes)
    a = dom.a
    if isinstance(mode, ExpDamped):
        rate = mode.decay_rate
        span = (-math.log(tol) + 15.0) / rate
        tail = _tail_size(f, a + span, rate)
        for _ in range(6):
            if tail <= 0.01 * tol:
                break
            span *= 1.5
            tail = _tail_size(f, a + span, rate)
        edges = _with_breaks(a, a + span, spec.breakpoints, max(4, int(span)))
        try:
            out = _adapt(f, edges, tol, spec.max_depth, spec.max_nodes)
            return EvalOutcome(out.value, out.err_estimate + tail, out.nodes_used + 3)
        except ConvergenceError:
            # a slower-than-advertised tail: fall back to the mapped interval
            pass

    def mapped(u: np.ndarray) -> np.ndarray:
        one_minus = 1.0 - u
        t = a + u / one_minus
        return np.asarray(f(t), dtype=complex) / (one_minus * one_minus)

    breaks_u = [(p - a) / (1 + p - a) for p in spec.breakpoints if p > a]
    edges = _with_breaks(0.0, 1.0, breaks_u, 8)
    return _adapt(mapped, edges, tol, spec.max_depth, spec.max_nodes)


def _tail_size(f: Integrand, T: float, rate: float) -> float:
    """Rough size of the integral beyond the cut T, from samples near T."""
    x = T + np.array([0.0, 0.5, 1.0]) / rate
    try:
        y = np.abs(_evaluate(f, x))
    except DomainError:
        return 0.0
    return float(2.0 * y.max() / rate)


def _integrate_log_oscillatory(f: Integrand, spec: QuadratureSpec) -> EvalOutcome:
    mode = spec.mode
    dom = spec.domain
    # exp(-700) is near the bottom of the double range
    reach = min(700.0, (-math.log(spec.tol) + 15.0) / mode.decay_rate)
    if isinstance(dom, Finite):
        if dom.a < 0:
            raise ConfigError("log substitution needs a non-negative domain")
        lo = math.log(dom.a) if dom.a > 0 else -reach
        hi = math.log(dom.b)
    else:
        lo = math.log(dom.a) if dom.a > 0 else -reach
        hi = reach
    half = math.pi / abs(mode.freq_hint) if mode.freq_hint else (hi - lo) / 16
    n = max(8, int(math.ceil((hi - lo) / half)))
    edges = np.linspace(lo, hi, n + 1)

    def in_u(u: np.ndarray) -> np.ndarray:
        t = np.exp(u)
        return np.asarray(f(t), dtype=complex) * t

    return _adapt(in_u, edges, spec.tol, spec.max_depth, spec.max_nodes)


def integrate_contour_theta(f: Integrand, tol: float = 1e-11, max_depth: int = 100) -> EvalOutcome:
    """Integrate a complex integrand of the contour angle over [0, pi]."""
    return integrate(f, QuadratureSpec(Finite(0.0, math.pi), Smooth(), tol, max_depth))


def _csch2_series_coeffs(n: int = 18) -> np.ndarray:
    # 1/sinh^2 t - 1/t^2 = -sum_{k>=1} 4^k B_{2k} (2k-1) t^{2k-2} / (2k)!
    from .specfun import bernoulli

    return np.array(
        [-float(4**k * bernoulli(2 * k) * (2 * k - 1) / math.factorial(2 * k)) for k in range(1, n + 1)]
    )


_CSCH2_COEFFS = _csch2_series_coeffs()


def inv_sinh2_minus_inv_t2(t: np.ndarray) -> np.ndarray:
    """1/sinh(t)^2 - 1/t^2 for Re t > 0, by power series for |t| < 1."""
    t = np.asarray(t)
    t = t.astype(complex if np.iscomplexobj(t) else float)
    out = np.empty_like(t)
    small = np.abs(t) < 1.0
    t2 = t[small] ** 2
    acc = np.zeros_like(t2)
    for c in _CSCH2_COEFFS[::-1]:
        acc = acc * t2 + c
    out[small] = acc
    tl = t[~small]
    # 1/sinh^2 = 4 e^{-2t} / (1 - e^{-2t})^2, overflow-free
    e = np.exp(-2.0 * tl)
    out[~small] = 4.0 * e / (1.0 - e) ** 2 - 1.0 / (tl * tl)
    return out


# past this many e-folds of 1/sinh^2 decay only the -1/t^2 part is left
_SINH2_CUT = 45.0
_RAY_GAP = 6.0


def mellin_inv_sinh2(p: complex, tol: float = 1e-13, max_nodes: int = 2_000_000) -> EvalOutcome:
    """int_0^inf t^p (1/sinh^2 t - 1/t^2) dt for -1 < Re p < 1.

    On the real axis the integrand is O(1) while the result is
    O(e^{-pi |Im p|/2}).  The path is turned onto the ray
    arg t = sign(Im p) (pi/2 - delta), delta = min(pi/2, 6/|Im p|), which
    leaves only e^{-6} of that cancellation and stays clear of the poles at
    t = i k pi.  Beyond the radius where 1/sinh^2 has died the -1/t^2 part
    is integrated in closed form.
    """
    p = complex(p)
    if not -1 < p.real < 1:
        raise DomainError("Mellin transform of 1/sinh^2 - 1/t^2 needs -1 < Re p < 1")
    b = p.imag
    delta = min(math.pi / 2, _RAY_GAP / abs(b)) if b else math.pi / 2
    theta = math.copysign(math.pi / 2 - delta, b)
    w = cmath.exp(1j * theta)
    r_cut = _SINH2_CUT / math.sin(delta)
    scale = math.exp(-abs(b) * abs(theta))
    # t^p = r^p e^{i p theta}; the real factor e^{-b theta} is pulled out
    phase = cmath.exp(1j * p.real * theta) * w

    def f(r):
        return np.exp(p * np.log(r)) * inv_sinh2_minus_inv_t2(r * w)

    spec = QuadratureSpec(Finite(0.0, r_cut), OscillatoryDamped(max(abs(b), 1.0), p.real + 1), tol, max_nodes=max_nodes)
    try:
        head = integrate(f, spec)
    except ConvergenceError as exc:
        # the rounding floor of many oscillation panels can sit just above tol
        if exc.best is None or exc.best.err_estimate > 100 * tol * max(1.0, abs(exc.best.value)):
            raise
        head = exc.best
    # -int_{R w}^{inf w} t^{p-2} dt
    e = p - 1
    tail = cmath.exp(e * (math.log(r_cut) + 1j * theta)) / e
    value = phase * scale * head.value + tail
    err = scale * head.err_estimate + 1e-16 * scale * abs(head.value)
    lost = math.log10(scale / abs(value)) if value != 0 and scale > abs(value) else 0.0
    return EvalOutcome(value, err, head.nodes_used, 0, True, lost)
