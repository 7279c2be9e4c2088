"""Construction, validation and truncation of pmfs on the nonnegative integers."""

import logging
import math

import numpy as np
from pydantic import TypeAdapter, ValidationError

from config import settings
from errors import InvalidPmfError, ParameterError
from schemas.pmf import (
    BernoulliFamily, BinomialFamily, CustomFamily, DistributionFamily, GeometricFamily,
    InvariantResult, Pmf, PoissonFamily, SubPmf, UniformFamily, ValidationReport,
)

logger = logging.getLogger(__name__)

_family_adapter = TypeAdapter(DistributionFamily)


def validate(p: Pmf, tol: float | None = None, eps_tail: float | None = None) -> ValidationReport:
    """
    Check every pmf invariant and report the measured slack of each.

    Never raises: failures are carried by the report.
    """
    tol = settings.NORMALIZATION_TOL if tol is None else tol
    ceiling = eps_tail if eps_tail is not None else (p.eps_tail or settings.EPS_TAIL)

    smallest = min(p.values)
    total = math.fsum(p.values)
    lower = 1.0 - p.tail_mass_bound - tol
    upper = 1.0 + tol
    norm_slack = min(total - lower, upper - total)

    invariants = [
        InvariantResult(
            name="nonnegative",
            passed=smallest >= 0.0,
            slack=smallest,
            detail=f"min p(i) = {smallest!r}",
        ),
        InvariantResult(
            name="normalization",
            passed=norm_slack >= 0.0,
            slack=norm_slack,
            detail=f"sum = {total!r}, accepted [{lower!r}, {upper!r}]",
        ),
        InvariantResult(
            name="tail_bound",
            passed=p.tail_mass_bound <= ceiling,
            slack=ceiling - p.tail_mass_bound,
            detail=f"tail bound {p.tail_mass_bound!r} vs ceiling {ceiling!r}",
        ),
    ]
    return ValidationReport(valid=all(inv.passed for inv in invariants), invariants=invariants)


def require_valid(p: Pmf) -> Pmf:
    """Return p unchanged, or raise InvalidPmfError naming the failed invariants."""
    report = validate(p)
    if not report.valid:
        reasons = "; ".join(f"{inv.name}: {inv.detail}" for inv in report.failures)
        logger.error(f"Rejected pmf: {reasons}")
        raise InvalidPmfError(f"Invalid pmf ({reasons})")
    return p


def parse_family_spec(text: str) -> DistributionFamily:
    """
    Parse a `name:param[,param]` family spec.

    Examples:
        "uniform:4" → UniformFamily(n=4)
        "geometric:0.25" → GeometricFamily(q=0.25)
        "binomial:10,0.3" → BinomialFamily(n=10, theta=0.3)
        "custom:0.5,0.5" → CustomFamily(values=(0.5, 0.5))
    """
    name, sep, raw = text.strip().partition(":")
    name = name.strip().lower()
    if not sep or not raw.strip():
        raise ParameterError(f"Family spec '{text}' must look like name:param[,param]")
    params = [part.strip() for part in raw.split(",")]

    expected = {"uniform": 1, "geometric": 1, "poisson": 1, "bernoulli": 1, "binomial": 2}
    if name in expected and len(params) != expected[name]:
        raise ParameterError(f"Family '{name}' takes {expected[name]} parameter(s), got {len(params)}")

    try:
        if name == "uniform":
            data = {"kind": name, "n": int(params[0])}
        elif name == "geometric":
            data = {"kind": name, "q": float(params[0])}
        elif name == "poisson":
            data = {"kind": name, "lam": float(params[0])}
        elif name == "bernoulli":
            data = {"kind": name, "theta": float(params[0])}
        elif name == "binomial":
            data = {"kind": name, "n": int(params[0]), "theta": float(params[1])}
        elif name == "custom":
            data = {"kind": name, "values": [float(v) for v in params]}
        else:
            raise ParameterError(f"Unknown family '{name}'")
        return _family_adapter.validate_python(data)
    except ValueError as e:
        # pydantic's ValidationError is a ValueError too
        raise ParameterError(f"Bad family spec '{text}': {e}") from e


def _geometric_tail_moment(q: float, m: int) -> float:
    """Closed form of sum_{i>=m} i^2 q(1-q)^i, via memorylessness."""
    r = 1.0 - q
    mu = r / q
    var = r / (q * q)
    return r ** m * (m * m + 2.0 * m * mu + var + mu * mu)


def _geometric(f: GeometricFamily, eps: float) -> tuple[np.ndarray, float]:
    q = f.q
    if q == 1.0:
        return np.array([1.0]), 0.0
    r = 1.0 - q
    if r == 1.0:
        raise ParameterError(f"geometric:{q} is too close to 0 to truncate in double precision")
    log_r = math.log1p(-q)
    m = max(1, math.ceil(math.log(eps) / log_r))
    while r ** m > eps:
        m += 1
    # second moment of the tail, stepped by its own decay rate
    moment = _geometric_tail_moment(q, m)
    while moment > settings.SECOND_MOMENT_TAIL:
        m += max(1, math.ceil(math.log(moment / settings.SECOND_MOMENT_TAIL) / -log_r))
        if m > settings.MAX_SUPPORT:
            break
        moment = _geometric_tail_moment(q, m)
    if m > settings.MAX_SUPPORT:
        raise ParameterError(
            f"geometric:{q} needs more than {settings.MAX_SUPPORT} entries to reach eps_tail={eps}"
        )
    values = q * r ** np.arange(m, dtype=np.float64)
    return values, r ** m


def _poisson(f: PoissonFamily, eps: float) -> tuple[np.ndarray, float]:
    lam = f.lam
    log_lam = math.log(lam)
    log_fact = 0.0
    log_values: list[float] = []
    i = 0
    while True:
        if i > 0:
            log_fact += math.log(i)
        log_p = -lam + i * log_lam - log_fact
        # i is a candidate cut M once the ratio lam/(i+1) <= 1/2
        if i >= 2.0 * lam and i * i >= 2.0 * lam * (i + 1):
            p_i = math.exp(log_p)
            tail = p_i / (1.0 - lam / (i + 1))
            moment = i * i * p_i / (1.0 - lam * (i + 1) / (i * i))
            if tail <= eps and moment <= settings.SECOND_MOMENT_TAIL:
                return np.exp(np.asarray(log_values, dtype=np.float64)), tail
        log_values.append(log_p)
        i += 1
        if i > settings.MAX_SUPPORT:
            raise ParameterError(
                f"poisson:{lam} needs more than {settings.MAX_SUPPORT} entries to reach eps_tail={eps}"
            )


def _finite_support(f: DistributionFamily) -> int | None:
    if isinstance(f, UniformFamily):
        return f.n
    if isinstance(f, BinomialFamily):
        return f.n + 1
    if isinstance(f, CustomFamily):
        return len(f.values)
    return None


def _binomial(f: BinomialFamily) -> np.ndarray:
    n, theta = f.n, f.theta
    values = np.zeros(n + 1, dtype=np.float64)
    if theta == 0.0:
        values[0] = 1.0
        return values
    if theta == 1.0:
        values[n] = 1.0
        return values
    # log k! as accumulated sums of log k
    log_fact = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1, n + 1, dtype=np.float64)))))
    k = np.arange(n + 1, dtype=np.float64)
    log_p = log_fact[n] - log_fact - log_fact[::-1] + k * math.log(theta) + (n - k) * math.log1p(-theta)
    return np.exp(log_p)


def from_family(f: DistributionFamily, eps_tail: float | None = None) -> Pmf:
    """
    Materialize a family as a truncated pmf whose tail bound is at most eps_tail.

    Finite-support families are exact (tail 0). Geometric and Poisson supports are
    also padded until the second-moment tail is below SECOND_MOMENT_TAIL.
    """
    eps = settings.EPS_TAIL if eps_tail is None else eps_tail
    if not eps > 0.0:
        raise ParameterError(f"eps_tail must be positive, got {eps}")

    logger.info(f"Materializing {f.label} with eps_tail={eps}")

    length = _finite_support(f)
    if length is not None and length > settings.MAX_SUPPORT:
        raise ParameterError(f"{f.label} has support {length} > {settings.MAX_SUPPORT}")

    tail = 0.0
    if isinstance(f, UniformFamily):
        values = np.full(f.n, 1.0 / f.n)
    elif isinstance(f, GeometricFamily):
        values, tail = _geometric(f, eps)
    elif isinstance(f, PoissonFamily):
        values, tail = _poisson(f, eps)
    elif isinstance(f, BernoulliFamily):
        values = np.array([1.0 - f.theta, f.theta])
    elif isinstance(f, BinomialFamily):
        values = _binomial(f)
    elif isinstance(f, CustomFamily):
        values = np.asarray(f.values, dtype=np.float64)
    else:
        raise ParameterError(f"Unsupported family: {f!r}")

    try:
        p = Pmf(values=tuple(values.tolist()), tail_mass_bound=tail, origin=f, eps_tail=eps)
    except ValidationError as e:
        raise ParameterError(f"{f.label} produced an unusable pmf: {e}") from e

    logger.info(f"{f.label}: support {p.support_length}, tail bound {tail:.3e}")
    return require_valid(p)


def shifted(p: Pmf) -> SubPmf:
    """q(i) = p(i+1); total mass 1 - p(0), not renormalized."""
    require_valid(p)
    rest = p.values[1:]
    return SubPmf(values=rest, mass=math.fsum(rest))


def with_trailing_zeros(p: Pmf, count: int) -> Pmf:
    """Append exact zeros; the distribution is unchanged."""
    if count < 0:
        raise ParameterError(f"count must be nonnegative, got {count}")
    return p.model_copy(update={"values": p.values + (0.0,) * count})
