"""Shared value types, validity regions, eta/zeta conversion and reflection."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Union

ComplexValue = complex


class ZetaRepsError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ConfigError(ZetaRepsError):
    exit_code = 1


class UnknownIdError(ConfigError):
    exit_code = 1


class DomainError(ZetaRepsError):
    exit_code = 2


class PoleError(DomainError):
    exit_code = 2


class RegionError(ZetaRepsError):
    exit_code = 2


class ConvergenceError(ZetaRepsError):
    """Tolerance not reached; ``best`` holds the best estimate found."""

    exit_code = 3

    def __init__(self, message: str, best: "EvalOutcome | None" = None):
        super().__init__(message)
        self.best = best


def to_complex(x: Union[complex, float, int]) -> complex:
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite value {z!r}")
    return z


# ---------------------------------------------------------------- regions


@dataclass(frozen=True)
class SigmaGreaterThan:
    x: float

    def contains(self, s: complex) -> bool:
        return s.real > self.x

    def describe(self) -> str:
        return f"sigma > {self.x:g}"


@dataclass(frozen=True)
class SigmaLessThan:
    x: float

    def contains(self, s: complex) -> bool:
        return s.real < self.x

    def describe(self) -> str:
        return f"sigma < {self.x:g}"


@dataclass(frozen=True)
class SigmaBetween:
    lo: float
    hi: float
    closed: bool = False

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ConfigError("SigmaBetween requires lo < hi")

    def contains(self, s: complex) -> bool:
        if self.closed:
            return self.lo <= s.real <= self.hi
        return self.lo < s.real < self.hi

    def describe(self) -> str:
        op = "<=" if self.closed else "<"
        return f"{self.lo:g} {op} sigma {op} {self.hi:g}"


@dataclass(frozen=True)
class AllS:
    def contains(self, s: complex) -> bool:
        return True

    def describe(self) -> str:
        return "all s"


@dataclass(frozen=True)
class Custom:
    predicate_id: str

    def contains(self, s: complex) -> bool:
        try:
            pred = CUSTOM_PREDICATES[self.predicate_id]
        except KeyError:
            raise ConfigError(f"unknown region predicate {self.predicate_id!r}") from None
        return pred(s)

    def describe(self) -> str:
        return self.predicate_id


ValidityRegion = Union[SigmaGreaterThan, SigmaLessThan, SigmaBetween, AllS, Custom]


def _is_nonpos_int(s: complex) -> bool:
    return s.imag == 0 and s.real <= 0 and s.real == math.floor(s.real)


CUSTOM_PREDICATES: dict[str, Callable[[complex], bool]] = {
    "s_ne_1": lambda s: s != 1,
    "s_ne_0": lambda s: s != 0,
    "sigma_gt_1_or_formal": lambda s: s.real > 1,
    "not_nonpos_int": lambda s: not _is_nonpos_int(s),
    "sigma_gt_0_s_ne_1": lambda s: s.real > 0 and s != 1,
    # 2k - 1 + s = 0 for some k >= 0
    "s_ne_1_minus_2k": lambda s: not (s.imag == 0 and s.real <= 1 and (1 - s.real) / 2 == math.floor((1 - s.real) / 2)),
    "pos_even_int": lambda s: s.imag == 0 and s.real >= 2 and s.real == 2 * math.floor(s.real / 2),
    "s_eq_2": lambda s: s == 2,
    "s_eq_3": lambda s: s == 3,
    "s_eq_4": lambda s: s == 4,
    "s_eq_5": lambda s: s == 5,
}


def classify_region(s: complex, region: ValidityRegion) -> bool:
    """True iff ``s`` lies in ``region`` (open boundaries unless closed)."""
    return bool(region.contains(to_complex(s)))


# ---------------------------------------------------------------- options


@dataclass(frozen=True)
class EvalOptions:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_nodes: int = 2_000_000
    max_terms: int = 200_000
    enforce_region: bool = True
    extended_precision: bool = False

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ConfigError("tolerances must be positive")
        if self.max_nodes < 1 or self.max_terms < 1:
            raise ConfigError("max_nodes and max_terms must be >= 1")


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class EvalOutcome:
    value: complex
    err_estimate: float = 0.0
    nodes_used: int = 0
    terms_used: int = 0
    in_region: bool = True
    digits_lost: float = 0.0
    formal: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", complex(self.value))
        if self.err_estimate < 0:
            object.__setattr__(self, "err_estimate", abs(self.err_estimate))
        if self.digits_lost < 0:
            object.__setattr__(self, "digits_lost", 0.0)

    def scaled(self, factor: complex, offset: complex = 0.0) -> "EvalOutcome":
        """Outcome of ``factor * value + offset`` with the error scaled alike."""
        return EvalOutcome(
            value=factor * self.value + offset,
            err_estimate=abs(factor) * self.err_estimate,
            nodes_used=self.nodes_used,
            terms_used=self.terms_used,
            in_region=self.in_region,
            digits_lost=self.digits_lost,
            formal=self.formal,
        )


def digits_lost(abs_sum: float, total: complex) -> float:
    """log10 of (sum of magnitudes / magnitude of sum), floored at 0."""
    mag = abs(total)
    if abs_sum <= 0:
        return 0.0
    if mag == 0:
        return 17.0
    return max(0.0, math.log10(abs_sum / mag))


# ---------------------------------------------------------------- conversion


def eta_factor(s: complex) -> complex:
    return 1 - 2 ** (1 - complex(s))


def eta_from_zeta(zeta_val: complex, s: complex) -> complex:
    return eta_factor(s) * complex(zeta_val)


def zeta_from_eta(eta_val: complex, s: complex) -> complex:
    s = complex(s)
    fac = eta_factor(s)
    # 2^{1-s} = 1 exactly on s = 1 + 2 pi i k / ln 2
    k = s.imag * math.log(2) / (2 * math.pi)
    if abs(s.real - 1) < 1e-14 and abs(k - round(k)) < 1e-12 or fac == 0:
        raise PoleError(f"1 - 2^(1-s) vanishes at s={s}")
    return complex(eta_val) / fac


def reflect_functional(zeta_at_s: complex, s: complex) -> complex:
    """Return zeta(1-s) given zeta(s)."""
    from .specfun import gamma

    s = complex(s)
    if _is_nonpos_int(s):
        raise PoleError(f"gamma pole at s={s}")
    return (
        2
        * cmath.cos(math.pi * s / 2)
        * gamma(s)
        * (2 * math.pi) ** (-s)
        * complex(zeta_at_s)
    )
