"""Closed-form oracle values for the uniform, geometric and Poisson families."""

import logging
import math

from config import settings
from errors import ParameterError
from schemas.pmf import DistributionFamily, GeometricFamily, PoissonFamily, UniformFamily
from schemas.reports import OracleComparison, OracleValues, QuantityReport

logger = logging.getLogger(__name__)


def uniform_oracle(n: int) -> OracleValues:
    """Uniform on [0, N-1]: I_d = 4/N, N_d = N^2."""
    if n < 1:
        raise ParameterError(f"uniform support must be >= 1, got {n}")
    return OracleValues(
        family=f"uniform:{n}",
        dfi=4.0 / n,
        mean=(n - 1) / 2.0,
        variance=(n * n - 1) / 12.0,
        max_pmf=1.0 / n,
        entropy=math.log(n),
        entropy_power=float(n * n),
    )


def geometric_log_entropy_power(q: float) -> float:
    """log N_d = -2 log q - 2(1-q)/q log(1-q); the second term is 0 at q = 1."""
    if q == 1.0:
        return 0.0
    return -2.0 * math.log(q) - 2.0 * (1.0 - q) / q * math.log1p(-q)


def geometric_oracle(q: float) -> OracleValues:
    """p(i) = q(1-q)^i: I_d = 4(1 - sqrt(1-q))^2."""
    if not 0.0 < q <= 1.0:
        raise ParameterError(f"geometric q must lie in (0, 1], got {q}")
    s = math.sqrt(1.0 - q)
    log_nd = geometric_log_entropy_power(q)
    return OracleValues(
        family=f"geometric:{q!r}",
        # 1 - sqrt(1-q) = q / (1 + sqrt(1-q)), free of cancellation at small q
        dfi=4.0 * q * q / (1.0 + s) ** 2,
        mean=(1.0 - q) / q,
        variance=(1.0 - q) / (q * q),
        max_pmf=q,
        entropy=log_nd / 2.0,
        entropy_power=math.exp(log_nd),
    )


def poisson_oracle(lam: float, eps: float | None = None) -> OracleValues:
    """
    Poisson(lam) from its series:
        I_d = 4 sum (sqrt(lam/(i+1)) - 1)^2 p(i)
        H = lam(1 - log lam) + sum p(i) log(i!)
    both truncated once the ratio-test tail bound drops below eps.
    """
    eps = settings.EPS_TAIL if eps is None else eps
    if not lam > 0.0 or not math.isfinite(lam):
        raise ParameterError(f"poisson rate must be positive, got {lam}")
    if not eps > 0.0:
        raise ParameterError(f"eps must be positive, got {eps}")

    log_lam = math.log(lam)
    floor_lam = math.floor(lam)
    log_fact = 0.0
    dfi_terms: list[float] = []
    entropy_terms: list[float] = []
    max_pmf = None
    i = 0
    while True:
        if i > 0:
            log_fact += math.log(i)
        p_i = math.exp(-lam + i * log_lam - log_fact)
        if i == floor_lam:
            max_pmf = p_i
        if i >= 2.0 * lam and max_pmf is not None and p_i / (1.0 - lam / (i + 1)) <= eps:
            break
        dfi_terms.append((math.sqrt(lam / (i + 1)) - 1.0) ** 2 * p_i)
        entropy_terms.append(p_i * log_fact)
        i += 1
        if i > settings.MAX_SUPPORT:
            raise ParameterError(f"poisson:{lam} series did not converge within {settings.MAX_SUPPORT} terms")

    h = lam * (1.0 - log_lam) + math.fsum(entropy_terms)
    logger.debug(f"poisson:{lam} oracle series used {i} terms")
    return OracleValues(
        family=f"poisson:{lam!r}",
        dfi=4.0 * math.fsum(dfi_terms),
        mean=lam,
        variance=lam,
        max_pmf=max_pmf,
        entropy=h,
        entropy_power=math.exp(2.0 * h),
    )


def oracle_for(family: DistributionFamily | None, eps: float | None = None) -> OracleValues | None:
    """Closed forms for the family, or None when there are none (bernoulli, binomial, custom)."""
    if isinstance(family, UniformFamily):
        return uniform_oracle(family.n)
    if isinstance(family, GeometricFamily):
        return geometric_oracle(family.q)
    if isinstance(family, PoissonFamily):
        return poisson_oracle(family.lam, eps)
    return None


def compare_with_oracle(report: QuantityReport, oracle: OracleValues) -> list[OracleComparison]:
    """Numeric value, closed form and their difference for every available oracle field."""
    rows = []
    for field, expected in oracle.available().items():
        numeric = getattr(report, field)
        rows.append(OracleComparison(
            field=field,
            numeric=numeric,
            oracle=expected,
            difference=numeric - expected,
        ))
    return rows
