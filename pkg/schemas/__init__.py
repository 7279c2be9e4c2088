from schemas.pmf import (
    Pmf, SubPmf, DistributionFamily, UniformFamily, GeometricFamily, PoissonFamily,
    BernoulliFamily, BinomialFamily, CustomFamily, InvariantResult, ValidationReport,
)
from schemas.reports import (
    QuantityReport, OracleValues, OracleComparison, InequalityCheck, CheckSummary,
    CorpusViolation, CorpusSummary, SweepPoint, SweepResult, RestartRecord, OptimizeResult,
    ComputeResult, VerifyResult,
)
from schemas.run_config import RunConfig

__all__ = [
    "Pmf", "SubPmf", "DistributionFamily", "UniformFamily", "GeometricFamily", "PoissonFamily",
    "BernoulliFamily", "BinomialFamily", "CustomFamily", "InvariantResult", "ValidationReport",
    "QuantityReport", "OracleValues", "OracleComparison", "InequalityCheck", "CheckSummary",
    "CorpusViolation", "CorpusSummary", "SweepPoint", "SweepResult", "RestartRecord", "OptimizeResult",
    "ComputeResult", "VerifyResult", "RunConfig",
]
