"""Monte Carlo engine: (m, s) sweeps under uniform-spreading or Haar dynamics.

A *realization* draws one pair of local unitaries, evolves the encoding
state once, and truncates it to every requested window size (the windows are
nested, so one evolution serves all s).  Ensembles aggregate the Schmidt
number over realizations into per-(m, s) means and population standard
deviations.

Reproducibility contract: realization j of encoding dimension m uses the
streams ``base.child(j, 0)`` and ``base.child(j, 1)`` for the two
subsystems, results are collected into arrays indexed by j, and statistics
are reduced in fixed index order — so the output is bit-identical for a
fixed master seed no matter how many worker threads execute the
realizations.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateTruncationError, DimensionError
from .pipeline import evolve, reduced_purity, schmidt_number, truncate
from .statespace import HilbertDims, make_initial_state
from .unitaries import RngStream, sample_cue, uniform_spreading_unitary

__all__ = [
    "UnitaryKind",
    "SweepConfig",
    "EnsembleStats",
    "LossPoint",
    "run_cell",
    "run_ensemble",
    "loss_sweep",
]

logger = logging.getLogger(__name__)


class UnitaryKind(enum.Enum):
    """Which local dynamics a sweep applies."""

    UNIFORM_SPREADING = "uniform"
    RANDOM_CUE = "random"


def _check_values(name: str, values: tuple[int, ...], low: int, n: int, odd: bool) -> None:
    if not values:
        raise DimensionError(f"{name} must not be empty")
    if list(values) != sorted(set(values)):
        raise DimensionError(f"{name} must be strictly ascending, got {values}")
    for v in values:
        if not low <= v <= n:
            raise DimensionError(f"{name} entries must lie in [{low}, {n}], got {v}")
        if odd and v % 2 == 0:
            raise DimensionError(f"{name} entries must be odd, got {v}")


@dataclass(frozen=True)
class SweepConfig:
    """Full description of one sweep.

    ``realizations`` and ``master_seed`` are ignored for the deterministic
    uniform-spreading kind.  ``independent_ab`` chooses whether the two
    subsystems get independent Haar draws (the default) or share one.
    """

    n: int
    m_values: tuple[int, ...]
    s_values: tuple[int, ...]
    unitary_kind: UnitaryKind = UnitaryKind.RANDOM_CUE
    realizations: int = 100
    master_seed: int = 0
    independent_ab: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "m_values", tuple(self.m_values))
        object.__setattr__(self, "s_values", tuple(self.s_values))
        if self.n < 3 or self.n % 2 == 0:
            raise DimensionError(f"n must be an odd integer >= 3, got {self.n}")
        _check_values("m_values", self.m_values, 2, self.n, odd=False)
        _check_values("s_values", self.s_values, 3, self.n, odd=True)
        if self.realizations < 1:
            raise DimensionError(f"realizations must be >= 1, got {self.realizations}")
        if self.master_seed < 0:
            raise DimensionError(f"master_seed must be nonnegative, got {self.master_seed}")


@dataclass(frozen=True, eq=False)
class EnsembleStats:
    """Per-(m, s) Schmidt-number statistics of one sweep.

    ``mean_K``, ``std_K`` (population standard deviation; all zeros for the
    deterministic kind) and ``mean_captured_weight`` are arrays of shape
    (len(m_values), len(s_values)).
    """

    n: int
    unitary_kind: UnitaryKind
    m_values: tuple[int, ...]
    s_values: tuple[int, ...]
    realizations: int
    master_seed: int
    independent_ab: bool
    mean_K: np.ndarray
    std_K: np.ndarray
    mean_captured_weight: np.ndarray

    def cell(self, m: int, s: int) -> tuple[float, float, float]:
        """(mean_K, std_K, mean_captured_weight) of the (m, s) cell."""
        i = self.m_values.index(m)
        j = self.s_values.index(s)
        return (
            float(self.mean_K[i, j]),
            float(self.std_K[i, j]),
            float(self.mean_captured_weight[i, j]),
        )


class LossPoint(NamedTuple):
    """Entanglement loss of one encoding dimension truncated onto itself (s = m)."""

    m: int
    mean_loss: float
    std_loss: float
    mean_K: float
    mean_captured_weight: float


def run_cell(
    n: int,
    m: int,
    s_values: tuple[int, ...],
    unitary_kind: UnitaryKind,
    stream: RngStream | None = None,
    independent_ab: bool = True,
) -> list[tuple[int, float, float]]:
    """One realization: evolve once, truncate to every s; returns (s, K, weight) triples."""
    dims = HilbertDims(n, m)
    state = make_initial_state(dims)
    if unitary_kind is UnitaryKind.UNIFORM_SPREADING:
        u_a = u_b = uniform_spreading_unitary(n)
    else:
        if stream is None:
            raise ValueError("a stream is required for random-unitary cells")
        u_a = sample_cue(n, stream.child(0))
        u_b = sample_cue(n, stream.child(1)) if independent_ab else u_a
    evolved = evolve(state, u_a, u_b)
    out = []
    for s in s_values:
        try:
            block = truncate(evolved, s)
        except DegenerateTruncationError as err:
            raise DegenerateTruncationError(f"cell (m={m}, s={s}): {err}") from err
        out.append((s, schmidt_number(reduced_purity(block)), block.captured_weight))
    return out


def _collect(
    config: SweepConfig, m: int, s_values: tuple[int, ...], workers: int
) -> tuple[np.ndarray, np.ndarray]:
    """K and captured-weight arrays of shape (realizations, len(s_values)) for one m."""
    base = RngStream(config.master_seed)
    count = config.realizations

    def one(j: int) -> list[tuple[int, float, float]]:
        try:
            return run_cell(
                config.n, m, s_values, config.unitary_kind, base.child(j), config.independent_ab
            )
        except DegenerateTruncationError as err:
            raise DegenerateTruncationError(f"realization {j}: {err}") from err

    k_values = np.empty((count, len(s_values)))
    weights = np.empty((count, len(s_values)))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one, range(count)))
    else:
        rows = [one(j) for j in range(count)]
    for j, row in enumerate(rows):
        for i, (_, k, w) in enumerate(row):
            k_values[j, i] = k
            weights[j, i] = w
    return k_values, weights


def run_ensemble(config: SweepConfig, workers: int = 1) -> EnsembleStats:
    """Sweep the full (m, s) grid of ``config`` and aggregate statistics.

    ``workers`` sets the number of worker threads per m; it changes wall
    time only, never the result.
    """
    deterministic = config.unitary_kind is UnitaryKind.UNIFORM_SPREADING
    realizations = 1 if deterministic else config.realizations
    shape = (len(config.m_values), len(config.s_values))
    mean_k = np.empty(shape)
    std_k = np.zeros(shape)
    mean_w = np.empty(shape)
    for i, m in enumerate(config.m_values):
        logger.debug("sweep n=%d m=%d: %d realization(s)", config.n, m, realizations)
        if deterministic:
            row = run_cell(config.n, m, config.s_values, config.unitary_kind)
            mean_k[i] = [k for _, k, _ in row]
            mean_w[i] = [w for _, _, w in row]
        else:
            k_values, weights = _collect(config, m, config.s_values, workers)
            mean_k[i] = k_values.mean(axis=0)
            std_k[i] = k_values.std(axis=0)
            mean_w[i] = weights.mean(axis=0)
    return EnsembleStats(
        n=config.n,
        unitary_kind=config.unitary_kind,
        m_values=config.m_values,
        s_values=config.s_values,
        realizations=realizations,
        master_seed=config.master_seed,
        independent_ab=config.independent_ab,
        mean_K=mean_k,
        std_K=std_k,
        mean_captured_weight=mean_w,
    )


def loss_sweep(config: SweepConfig, workers: int = 1) -> list[LossPoint]:
    """Entanglement loss Δ = m − mean K with the window matched to the encoding (s = m).

    Requires ``config.s_values == config.m_values`` (both odd, ascending);
    only the diagonal cells are computed.
    """
    if config.s_values != config.m_values:
        raise DimensionError(
            "loss sweeps require s_values == m_values (truncation onto the encoding subspace)"
        )
    points = []
    for m in config.m_values:
        logger.debug("loss n=%d m=s=%d: %d realization(s)", config.n, m, config.realizations)
        if config.unitary_kind is UnitaryKind.UNIFORM_SPREADING:
            row = run_cell(config.n, m, (m,), config.unitary_kind)
            k_values = np.array([row[0][1]])
            weights = np.array([row[0][2]])
        else:
            k_col, w_col = _collect(config, m, (m,), workers)
            k_values, weights = k_col[:, 0], w_col[:, 0]
        points.append(
            LossPoint(
                m=m,
                mean_loss=float(m - k_values.mean()),
                std_loss=float(k_values.std()),
                mean_K=float(k_values.mean()),
                mean_captured_weight=float(weights.mean()),
            )
        )
    return points
