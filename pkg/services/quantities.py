"""Scalar quantities of a pmf: DFI in three forms, autocorrelation, Hellinger, moments, entropy.

All sums go through math.fsum, so results are exactly rounded regardless of
support length.
"""

import logging
import math
from collections.abc import Sequence

import numpy as np

from errors import PreconditionError
from schemas.pmf import Pmf
from schemas.reports import QuantityReport
from services.pmf import require_valid, shifted

logger = logging.getLogger(__name__)


# --- Array kernels (shared with the optimizer) ---

def dfi_values(values: np.ndarray, exact: bool = True) -> float:
    """
    4 * sum (phi(i+1) - phi(i))^2 over the represented prefix.

    With exact=True the sequence genuinely ends, so the boundary term
    (0 - phi(M-1))^2 is included.
    """
    phi = np.sqrt(values)
    diffs = np.diff(phi)
    terms = (diffs * diffs).tolist()
    if exact:
        terms.append(float(phi[-1]) ** 2)
    return 4.0 * math.fsum(terms)


def entropy_values(values: np.ndarray) -> float:
    """-sum p log p in nats, with 0 log 0 = 0."""
    nz = values[values > 0.0]
    return -math.fsum((nz * np.log(nz)).tolist())


def stam_product_values(values: np.ndarray) -> float:
    """N_d(p) * I_d(p) for a zero-tail pmf."""
    return math.exp(2.0 * entropy_values(values)) * dfi_values(values, exact=True)


def max_pmf_ratio_values(values: np.ndarray) -> float:
    """(||p||^2 + (||p|| - p(0))^2) / I_d(p) for a zero-tail pmf."""
    top = float(values.max())
    return (top * top + (top - float(values[0])) ** 2) / dfi_values(values, exact=True)


def _dfi_error_bound(p: Pmf) -> float:
    t = p.tail_mass_bound
    if t == 0.0:
        return 0.0
    return 8.0 * t + 4.0 * (math.sqrt(p.values[-1]) + math.sqrt(t)) ** 2


def _entropy_error_bound(p: Pmf) -> float:
    t = p.tail_mass_bound
    if t == 0.0:
        return 0.0
    return t * abs(math.log(t)) + t * math.log(p.support_length + 1)


# --- Pmf-level operations ---

def sqrt_transform(p: Pmf) -> list[float]:
    """phi(i) = sqrt(p(i)); well-defined at p(i) = 0."""
    require_valid(p)
    return np.sqrt(p.array).tolist()


def dfi_direct(p: Pmf) -> tuple[float, float]:
    """Return (I_d(p), certified truncation error bound)."""
    require_valid(p)
    return dfi_values(p.array, exact=p.is_exact), _dfi_error_bound(p)


def autocorrelation(p: Pmf, t: int) -> float:
    """R(t) = sum_i phi(i) phi(i+t); R(0) = sum p(i)."""
    if t < 0:
        raise PreconditionError(f"lag must be nonnegative, got {t}")
    require_valid(p)
    return _autocorrelation(p.array, t)


def _autocorrelation(values: np.ndarray, t: int) -> float:
    if t >= len(values):
        return 0.0
    phi = np.sqrt(values)
    return math.fsum((phi[: len(phi) - t] * phi[t:]).tolist())


def dfi_autocorr(p: Pmf) -> float:
    """
    I_d(p) = 4(2 - p(0) - 2R(1)).

    The identity uses sum p(i) = 1, so it is refused for pmfs with a tail.
    """
    require_valid(p)
    if not p.is_exact:
        raise PreconditionError(
            f"autocorrelation form needs the full mass represented (tail bound {p.tail_mass_bound!r})"
        )
    return 4.0 * (2.0 - p.p0 - 2.0 * _autocorrelation(p.array, 1))


def hellinger_sq(p: Sequence[float], q: Sequence[float]) -> float:
    """1/2 sum (sqrt p(i) - sqrt q(i))^2, shorter argument padded with zeros."""
    a = np.asarray(p, dtype=np.float64)
    b = np.asarray(q, dtype=np.float64)
    if (a.size and a.min() < 0.0) or (b.size and b.min() < 0.0):
        raise PreconditionError("Hellinger distance needs nonnegative sequences")
    n = max(a.size, b.size)
    a = np.pad(a, (0, n - a.size))
    b = np.pad(b, (0, n - b.size))
    d = np.sqrt(a) - np.sqrt(b)
    return 0.5 * math.fsum((d * d).tolist())


def dfi_hellinger(p: Pmf) -> float:
    """I_d(p) = 8 H^2(p, shifted p), valid for zero-tail pmfs."""
    if not p.is_exact:
        raise PreconditionError("Hellinger form needs the full mass represented")
    return 8.0 * hellinger_sq(p.values, shifted(p).values)


def mean(p: Pmf) -> float:
    require_valid(p)
    return _mean(p.array)


def _mean(values: np.ndarray) -> float:
    i = np.arange(len(values), dtype=np.float64)
    return math.fsum((i * values).tolist())


def variance(p: Pmf) -> float:
    """E[Z^2] - E[Z]^2, clamped at 0."""
    require_valid(p)
    return _variance(p.array)


def _variance(values: np.ndarray) -> float:
    i = np.arange(len(values), dtype=np.float64)
    mu = math.fsum((i * values).tolist())
    second = math.fsum((i * i * values).tolist())
    return max(0.0, second - mu * mu)


def entropy(p: Pmf) -> float:
    require_valid(p)
    return entropy_values(p.array)


def entropy_power(p: Pmf) -> float:
    """N_d(p) = exp(2H(p))."""
    return math.exp(2.0 * entropy(p))


def max_pmf(p: Pmf) -> tuple[float, int]:
    """Largest p(i) and the lowest index attaining it."""
    require_valid(p)
    idx = int(np.argmax(p.array))
    return p.values[idx], idx


def quantity_report(p: Pmf) -> QuantityReport:
    """Every quantity of p in one pass."""
    require_valid(p)
    values = p.array
    h = entropy_values(values)
    idx = int(np.argmax(values))
    report = QuantityReport(
        dfi=dfi_values(values, exact=p.is_exact),
        entropy=h,
        entropy_power=math.exp(2.0 * h),
        mean=_mean(values),
        variance=_variance(values),
        max_pmf=p.values[idx],
        argmax=idx,
        p0=p.p0,
        autocorr_lag1=_autocorrelation(values, 1),
        support_length=p.support_length,
        tail_mass_bound=p.tail_mass_bound,
        error_bound_dfi=_dfi_error_bound(p),
        error_bound_entropy=_entropy_error_bound(p),
    )
    logger.debug(f"Quantities: dfi={report.dfi:.6g} H={report.entropy:.6g} mean={report.mean:.6g}")
    return report
