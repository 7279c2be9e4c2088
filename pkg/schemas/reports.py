"""Pydantic schemas for computed quantities, inequality checks and search results."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from schemas.pmf import Pmf


# --- Quantities ---

class QuantityReport(BaseModel):
    """Every scalar quantity of one pmf."""
    dfi: float = Field(ge=0.0, description="Discrete Fisher information I_d(p)")
    entropy: float = Field(description="Shannon entropy H(p) in nats")
    entropy_power: float = Field(gt=0.0, description="N_d(p) = exp(2H(p))")
    mean: float = Field(ge=0.0)
    variance: float = Field(ge=0.0)
    max_pmf: float = Field(gt=0.0)
    argmax: int = Field(ge=0)
    p0: float = Field(ge=0.0)
    autocorr_lag1: float = Field(ge=0.0, description="R(1) = sum phi(i) phi(i+1)")
    support_length: int = Field(ge=1)
    tail_mass_bound: float = Field(ge=0.0)
    error_bound_dfi: float = Field(ge=0.0, description="Certified truncation error on dfi")
    error_bound_entropy: float = Field(ge=0.0, description="Worst-case truncation error on entropy (not subtracted)")


class OracleValues(BaseModel):
    """Closed-form values for a family. None means no closed form."""
    family: str
    dfi: float | None = None
    mean: float | None = None
    variance: float | None = None
    max_pmf: float | None = None
    entropy: float | None = None
    entropy_power: float | None = None

    def available(self) -> dict[str, float]:
        """Fields that carry a closed-form value."""
        return {k: v for k, v in self.model_dump(exclude={"family"}).items() if v is not None}


class OracleComparison(BaseModel):
    """Numeric value against its closed form."""
    field: str
    numeric: float
    oracle: float
    difference: float


# --- Inequalities ---

CheckName = Literal[
    "cramer_rao",
    "cramer_rao_simplified",
    "max_pmf_bound",
    "stam",
    "stam_type",
    "cramer_rao_v_identity",
    "max_pmf_upper_part",
    "max_pmf_lower_part",
    "entropy_power_max_bound",
    "stam_type_intermediate",
]


class InequalityCheck(BaseModel):
    """Both sides of one bound, the gap lhs - rhs and its verdict."""
    name: CheckName
    lhs: float
    rhs: float
    gap: float
    strict: bool
    satisfied: bool
    equality_case: bool = False

    def record(self) -> dict:
        """JSON record for reports."""
        return self.model_dump(include={"name", "lhs", "rhs", "gap", "strict", "satisfied", "equality_case"})


class CheckSummary(BaseModel):
    """Aggregate of one check over a corpus."""
    name: CheckName
    checks: int = 0
    min_gap: float | None = None
    violations: int = 0
    equality_cases: int = 0


class CorpusViolation(BaseModel):
    """A corpus pmf for which a check failed."""
    index: int
    check: CheckName
    gap: float
    pmf: Pmf


class CorpusSummary(BaseModel):
    """Outcome of running check_all over a seeded random corpus."""
    seed: int
    size: int
    summaries: list[CheckSummary] = Field(default_factory=list)
    violations: list[CorpusViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


# --- Tightness ---

class SweepPoint(BaseModel):
    """Closed-form geometric values at one q."""
    q: float
    dfi: float
    ratio_max_pmf: float
    ratio_stam: float
    residual_max_pmf: float
    residual_stam: float
    dfi_smallq_residual: float | None = None


class SweepResult(BaseModel):
    """Geometric sweep toward q -> 0."""
    points: list[SweepPoint] = Field(default_factory=list)


class RestartRecord(BaseModel):
    """One optimizer restart."""
    index: int
    start: Literal["delta", "dirichlet", "warm", "grid"]
    objective: float
    passes: int
    converged: bool


class OptimizeResult(BaseModel):
    """Best witness of an extremal search over the simplex. Empirical evidence only."""
    label: Literal["conjecture data"] = "conjecture data"
    objective_name: Literal["stam_product", "max_pmf_ratio"]
    objective: float
    witness: Pmf
    support_size: int
    restarts_used: int
    converged: bool
    restarts: list[RestartRecord] = Field(default_factory=list)


# --- CLI payloads ---

class ComputeResult(BaseModel):
    """Output of the compute subcommand."""
    source: str
    report: QuantityReport
    oracle: OracleValues | None = None
    comparison: list[OracleComparison] = Field(default_factory=list)


class VerifyResult(BaseModel):
    """Output of the verify subcommand."""
    source: str
    all_satisfied: bool
    checks: list[InequalityCheck] = Field(default_factory=list)
