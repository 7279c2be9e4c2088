"""Multi-start derivative-free search over the probability simplex.

Used to probe how small N_d * I_d can get on a finite support (the best Stam
constant is only known to lie in [e^-2, 1]) and how close the max-pmf ratio
gets to 1. Results are empirical evidence, never proofs.
"""

import logging
import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from config import settings
from errors import InconsistencyError, PreconditionError
from schemas.pmf import Pmf
from schemas.reports import OptimizeResult, RestartRecord
from services.quantities import max_pmf_ratio_values, stam_product_values

logger = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], float]

INITIAL_STEP = 0.25
# a successful move is retried with a doubled step at most this many times
MAX_EXPANSIONS = 4


def _normalized(x: np.ndarray) -> np.ndarray | None:
    total = math.fsum(x.tolist())
    if total <= 0.0:
        return None
    return x / total


def _descend(
    start: np.ndarray,
    objective: Objective,
    step_tol: float,
    min_step: float,
    max_passes: int,
) -> tuple[np.ndarray, float, int, bool]:
    """
    Coordinate mutation with projection back onto the simplex.

    Each move adds +/- step to one coordinate, clips at 0 and renormalizes; only
    decreases are accepted. A pass gaining less than step^2 halves the step
    (floored at min_step); a pass gaining less than step_tol at the floor means
    convergence.
    """
    x = start
    f = objective(x)
    step = INITIAL_STEP
    passes = 0
    while passes < max_passes:
        passes += 1
        before = f
        for j in range(len(x)):
            for sign in (1.0, -1.0):
                move = step
                for _ in range(MAX_EXPANSIONS + 1):
                    cand = x.copy()
                    cand[j] = max(cand[j] + sign * move, 0.0)
                    cand = _normalized(cand)
                    if cand is None:
                        break
                    fc = objective(cand)
                    if not fc < f:
                        break
                    x, f = cand, fc
                    move *= 2.0
        gain = before - f
        if gain < step_tol and step <= min_step:
            return x, f, passes, True
        if gain < max(step_tol, step * step):
            step = max(step * 0.5, min_step)
    return x, f, passes, False


def _embed(p: Pmf, support: int) -> np.ndarray:
    values = p.array
    if len(values) > support:
        raise PreconditionError(f"warm start has support {len(values)} > {support}")
    return np.pad(values, (0, support - len(values)))


def _search(
    objective: Objective,
    objective_name: str,
    support: int,
    restarts: int,
    step_tol: float,
    seed: int,
    workers: int,
    warm_start: Pmf | None,
) -> tuple[np.ndarray, float, list[RestartRecord], bool]:
    if support < 1:
        raise PreconditionError(f"support must be >= 1, got {support}")
    if restarts < 1:
        raise PreconditionError(f"restarts must be >= 1, got {restarts}")

    delta = np.zeros(support)
    delta[0] = 1.0
    starts: list[tuple[str, np.ndarray | None]] = [("delta", delta)]
    if warm_start is not None:
        starts.insert(0, ("warm", _embed(warm_start, support)))
    while len(starts) < restarts:
        starts.append(("dirichlet", None))
    # the warm start counts against the restart budget
    starts = starts[:restarts]

    def run(index: int) -> tuple[np.ndarray, float, RestartRecord]:
        kind, start = starts[index]
        if start is None:
            rng = np.random.default_rng([seed, index])
            start = rng.dirichlet(np.ones(support))
        start = _normalized(start)
        x, f, passes, converged = _descend(
            start, objective, step_tol, settings.OPT_MIN_STEP, settings.OPT_MAX_PASSES,
        )
        logger.debug(f"{objective_name} restart {index} ({kind}): {f:.12g} after {passes} passes")
        return x, f, RestartRecord(index=index, start=kind, objective=f, passes=passes, converged=converged)

    indices = range(len(starts))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run, indices))
    else:
        outcomes = [run(i) for i in indices]

    # lowest objective wins; ties go to the lowest restart index
    best = min(range(len(outcomes)), key=lambda i: (outcomes[i][1], i))
    records = [rec for _, _, rec in outcomes]
    return outcomes[best][0], outcomes[best][1], records, records[best].converged


def minimize_stam_product(
    support: int,
    restarts: int = 8,
    step_tol: float = 1e-12,
    seed: int | None = None,
    workers: int | None = None,
    warm_start: Pmf | None = None,
) -> OptimizeResult:
    """
    Smallest N_d(p) I_d(p) found over pmfs on {0, ..., support-1}.

    Starts, restarts in total: an optional warm start (zero-padded), the point
    mass at 0, then Dirichlet(1) draws seeded by (seed, restart index).
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    workers = settings.WORKERS if workers is None else workers
    logger.info(f"Minimizing N_d*I_d on support {support} with {restarts} restarts (seed {seed})")

    x, f, records, converged = _search(
        stam_product_values, "stam_product", support, restarts, step_tol, seed, workers, warm_start,
    )
    if not f > 1.0:
        logger.error(f"N_d*I_d = {f!r} <= 1 at {x.tolist()}")
        raise InconsistencyError(f"optimizer reached N_d*I_d = {f!r} <= 1, contradicting the Stam bound")

    logger.info(f"Best N_d*I_d on support {support}: {f:.12g}")
    return OptimizeResult(
        objective_name="stam_product",
        objective=f,
        witness=Pmf(values=tuple(x.tolist())),
        support_size=support,
        restarts_used=len(records),
        converged=converged,
        restarts=records,
    )


def maximize_max_pmf_ratio(
    support: int,
    restarts: int = 8,
    step_tol: float = 1e-12,
    seed: int | None = None,
    workers: int | None = None,
    warm_start: Pmf | None = None,
) -> OptimizeResult:
    """Largest (||p||^2 + (||p|| - p(0))^2) / I_d found on the support; must stay below 1."""
    seed = settings.DEFAULT_SEED if seed is None else seed
    workers = settings.WORKERS if workers is None else workers
    logger.info(f"Maximizing max-pmf ratio on support {support} with {restarts} restarts (seed {seed})")

    x, f, records, converged = _search(
        lambda v: -max_pmf_ratio_values(v), "max_pmf_ratio", support, restarts, step_tol, seed, workers, warm_start,
    )
    ratio = -f
    if not ratio < 1.0:
        logger.error(f"max-pmf ratio = {ratio!r} >= 1 at {x.tolist()}")
        raise InconsistencyError(f"optimizer reached max-pmf ratio {ratio!r} >= 1, contradicting the strict bound")

    return OptimizeResult(
        objective_name="max_pmf_ratio",
        objective=ratio,
        witness=Pmf(values=tuple(x.tolist())),
        support_size=support,
        restarts_used=len(records),
        converged=converged,
        restarts=[rec.model_copy(update={"objective": -rec.objective}) for rec in records],
    )


def _stam_product_rows(rows: np.ndarray) -> np.ndarray:
    phi = np.sqrt(rows)
    diffs = np.diff(phi, axis=1)
    dfi = 4.0 * ((diffs * diffs).sum(axis=1) + phi[:, -1] ** 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        plogp = np.where(rows > 0.0, rows * np.log(rows), 0.0)
    return np.exp(-2.0 * plogp.sum(axis=1)) * dfi


def brute_force_grid(support: int, step: float) -> OptimizeResult:
    """
    Exhaustive scan of the simplex on the lattice k / n, n = round(1 / step).

    The reported objective is recomputed at the minimizing point with the same
    kernel the optimizer uses.
    """
    if support not in (2, 3):
        raise PreconditionError(f"grid scan supports 2 or 3 coordinates, got {support}")
    if not 0.0 < step <= 0.1:
        raise PreconditionError(f"step must lie in (0, 0.1], got {step}")
    n = round(1.0 / step)

    k = np.arange(n + 1)
    if support == 2:
        rows = np.column_stack([k / n, (n - k) / n])
    else:
        a, b = np.meshgrid(k, k, indexing="ij")
        mask = a + b <= n
        a, b = a[mask], b[mask]
        rows = np.column_stack([a / n, b / n, (n - a - b) / n])

    scores = _stam_product_rows(rows)
    best = int(np.argmin(scores))
    witness = rows[best]
    objective = stam_product_values(witness)
    logger.info(f"Grid scan ({support} coords, {len(rows)} points): min N_d*I_d = {objective:.12g}")
    if not objective > 1.0:
        raise InconsistencyError(f"grid point with N_d*I_d = {objective!r} <= 1")

    return OptimizeResult(
        objective_name="stam_product",
        objective=objective,
        witness=Pmf(values=tuple(witness.tolist())),
        support_size=support,
        restarts_used=1,
        converged=True,
        restarts=[RestartRecord(index=0, start="grid", objective=objective, passes=len(rows), converged=True)],
    )
