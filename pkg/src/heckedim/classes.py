"""Report models shared by the library and the command line interface."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

__all__ = [
    "ComplexValue",
    "DimensionResult",
    "LadderReport",
    "TableRow",
    "ValidationReport",
    "AsymptoticReport",
    "IntervalBound",
    "FactorZeros",
    "CoverZeroReport",
    "ReferenceRow",
]


class ComplexValue(BaseModel):
    """A complex number as its two real components."""

    model_config = ConfigDict(frozen=True)

    re: float
    im: float

    @classmethod
    def of(cls, value: complex) -> "ComplexValue":
        return cls(re=value.real, im=value.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


class DimensionResult(BaseModel):
    """Class for capturing a real zero s_k(w) of a (possibly twisted) determinant."""

    model_config = ConfigDict(frozen=True)

    w: float
    k: int
    s_k: float
    bracket: Tuple[float, float]
    residual: float
    iterations: int
    theta: float = 0.0
    sign: int = 1
    multiple_roots: bool = False

    @model_validator(mode="after")
    def _zero_inside_bracket(self) -> "DimensionResult":
        lo, hi = self.bracket
        if not lo < self.s_k < hi:
            raise ValueError(f"s_k={self.s_k} outside its bracket {self.bracket}")
        if not 0.5 < self.s_k < 1.1:
            raise ValueError(f"s_k={self.s_k} outside (1/2, 1.1)")
        if not 0.0 <= self.residual <= 1e-12:
            raise ValueError(f"residual {self.residual} above 1e-12 at s_k={self.s_k}")
        return self


class LadderReport(BaseModel):
    """The delta(w) estimate at the top of a k-ladder."""

    w: float
    k: int
    delta: float
    error_estimate: Optional[float] = None
    base_eigenvalue: float
    rungs: List[DimensionResult]


class TableRow(BaseModel):
    w: float
    k: int
    s_k: float
    printed: str
    reference_center: float
    reference_width: float
    matches_printed: bool
    within_reference: bool


class ValidationReport(BaseModel):
    """Determinant, log-det reconstruction and Euler product at one (w, s, theta)."""

    w: float
    s: float
    theta: float
    k: int
    determinant: ComplexValue
    log_det: ComplexValue
    log_det_remainder: float
    euler_product: ComplexValue
    euler_classes: int
    det_vs_log_det: float
    det_vs_euler: float
    log_det_vs_euler: float


class AsymptoticReport(BaseModel):
    w: float
    expansion: float
    terms: List[float]
    polynomials: List[List[float]]


class IntervalBound(BaseModel):
    """Certified interval lower < delta(w) < upper."""

    model_config = ConfigDict(frozen=True)

    w: float
    lower: float
    upper: float
    epsilon_used: float
    delta_prior: float
    delta_estimate: Optional[float] = None
    reference: Optional[Tuple[float, float]] = None

    @model_validator(mode="after")
    def _ordered(self) -> "IntervalBound":
        if not 0.5 < self.lower < self.upper:
            raise ValueError(f"need 1/2 < lower < upper, got ({self.lower}, {self.upper})")
        if self.epsilon_used <= 0:
            raise ValueError(f"epsilon_used must be positive, got {self.epsilon_used}")
        return self

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def exceeds_three_quarters(self) -> bool:
        return self.lower > 0.75


class FactorZeros(BaseModel):
    """Zeros of det(1 - sign L^(a/n)) found on the real scan interval."""

    a: int
    sign: int
    theta: float
    zeros: List[float]


class CoverZeroReport(BaseModel):
    w: float
    n: int
    epsilon: float
    k: int
    delta: float
    factors: List[FactorZeros]
    count: int


class ReferenceRow(BaseModel):
    """One row of the published delta(w) table."""

    w: float
    center: float
    width: float
    printed: str

    @property
    def value(self) -> float:
        return float(self.printed)

    @property
    def decimals(self) -> int:
        return len(self.printed.partition(".")[2])

    @property
    def last_digit(self) -> float:
        """Size of one unit in the last printed digit."""
        return 10.0**-self.decimals
