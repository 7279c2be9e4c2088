"""Pydantic schemas for probability mass functions on the nonnegative integers."""

from __future__ import annotations

from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


# --- Distribution families ---

class UniformFamily(BaseModel):
    """Uniform on [0, n-1]."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["uniform"] = "uniform"
    n: int = Field(ge=1, description="Support size N")

    @property
    def label(self) -> str:
        return f"uniform:{self.n}"


class GeometricFamily(BaseModel):
    """p(i) = q(1-q)^i."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["geometric"] = "geometric"
    q: float = Field(gt=0.0, le=1.0, description="Success probability")

    @property
    def label(self) -> str:
        return f"geometric:{self.q!r}"


class PoissonFamily(BaseModel):
    """p(i) = lam^i exp(-lam) / i!."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    kind: Literal["poisson"] = "poisson"
    lam: float = Field(gt=0.0, description="Rate")

    @property
    def label(self) -> str:
        return f"poisson:{self.lam!r}"


class BernoulliFamily(BaseModel):
    """p = [1 - theta, theta]."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["bernoulli"] = "bernoulli"
    theta: float = Field(ge=0.0, le=1.0)

    @property
    def label(self) -> str:
        return f"bernoulli:{self.theta!r}"


class BinomialFamily(BaseModel):
    """Binomial(n, theta) on [0, n]."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["binomial"] = "binomial"
    n: int = Field(ge=1)
    theta: float = Field(ge=0.0, le=1.0)

    @property
    def label(self) -> str:
        return f"binomial:{self.n},{self.theta!r}"


class CustomFamily(BaseModel):
    """Explicit probabilities p(0), p(1), ..."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    kind: Literal["custom"] = "custom"
    values: tuple[Annotated[float, Field(ge=0.0)], ...] = Field(min_length=1)

    @property
    def label(self) -> str:
        return "custom:" + ",".join(repr(v) for v in self.values)


DistributionFamily = Annotated[
    Union[UniformFamily, GeometricFamily, PoissonFamily, BernoulliFamily, BinomialFamily, CustomFamily],
    Field(discriminator="kind"),
]


# --- Pmf ---

class Pmf(BaseModel):
    """Truncated pmf: p(0), ..., p(M-1) plus a certified bound on the mass beyond M-1."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    values: tuple[float, ...] = Field(min_length=1, description="p(0), p(1), ..., p(M-1)")
    tail_mass_bound: float = Field(default=0.0, ge=0.0, description="Upper bound on sum of p(i) for i >= M")
    origin: DistributionFamily | None = Field(default=None, description="Family the pmf was built from")
    eps_tail: float | None = Field(default=None, gt=0.0, description="Tail ceiling certified at construction")

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)

    @property
    def p0(self) -> float:
        return self.values[0]

    @property
    def support_length(self) -> int:
        return len(self.values)

    @property
    def is_exact(self) -> bool:
        """True when the whole mass is represented (no tail)."""
        return self.tail_mass_bound == 0.0


class SubPmf(BaseModel):
    """A sub-probability sequence, e.g. the shift q(i) = p(i+1)."""
    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...] = Field(default_factory=tuple)
    mass: float = Field(ge=0.0)


# --- Validation ---

class InvariantResult(BaseModel):
    """Outcome of one pmf invariant with its measured slack (negative = violated by that much)."""
    name: str
    passed: bool
    slack: float
    detail: str = ""


class ValidationReport(BaseModel):
    """All invariant outcomes for one pmf."""
    valid: bool
    invariants: list[InvariantResult] = Field(default_factory=list)

    @property
    def failures(self) -> list[InvariantResult]:
        return [inv for inv in self.invariants if not inv.passed]
