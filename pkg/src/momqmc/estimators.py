"""Replicate / trial / cell pipeline.

One *replicate* is the equal-weight QMC estimate from one freshly
randomized point set. One *trial* aggregates R replicates two ways at once:
by median (outlier-robust) and by mean (classical), from the same replicate
list unless the unpaired mode is requested. One *cell* runs T independent
trials for a fixed (kind, dim, n), averages the per-trial aggregates, and
reports signed and absolute errors against the exact integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Protocol, Sequence

import numpy as np

from .pointsets import (
    COORD_HI,
    COORD_LO,
    KIND_CODES,
    KINDS,
    PointSet,
    draw_generator,
    generator_points,
)
from .rng import SeedPath, SplitMix64, derive_seed


class Integrand(Protocol):
    dim: int

    def values(self, coords: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class ExperimentConfig:
    """Experiment sweep settings; defaults match the full desk experiment."""

    pointset_kind: str = "lattice"
    dims: tuple[int, ...] = (2, 3, 5, 8)
    log2n_min: int = 8
    log2n_max: int = 19
    replicates: int = 11
    trials: int = 25
    master_seed: int = 0
    paired: bool = True

    def __post_init__(self):
        if self.pointset_kind not in KINDS:
            raise ValueError(f"pointset_kind must be one of {KINDS}, got {self.pointset_kind!r}")
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError(f"dims must be a nonempty list of dimensions >= 1, got {self.dims}")
        if not 1 <= self.log2n_min <= self.log2n_max <= 32:
            raise ValueError(
                f"log2n range [{self.log2n_min}, {self.log2n_max}] must be "
                "nonempty and within [1, 32]"
            )
        if self.replicates < 1 or self.trials < 1:
            raise ValueError("replicates and trials must both be >= 1")

    @property
    def log2n_values(self) -> range:
        return range(self.log2n_min, self.log2n_max + 1)


@dataclass(frozen=True)
class TrialResult:
    """R replicate estimates with their median and mean aggregates."""

    estimates: tuple[float, ...]
    median: float
    mean: float


@dataclass(frozen=True)
class CellResult:
    """Cross-trial results for one (kind, dim, n) cell."""

    pointset_kind: str
    dim: int
    n: int
    median_result: float
    mean_result: float
    exact_value: float
    err_median: float
    err_mean: float
    abs_err_median: float
    abs_err_mean: float


def median(values: Sequence[float]) -> float:
    """Middle order statistic; even-length input averages the two middle values."""
    if not values:
        raise ValueError("median of an empty list")
    ordered = sorted(values)
    half, odd = divmod(len(ordered), 2)
    if odd:
        return ordered[half]
    return 0.5 * (ordered[half - 1] + ordered[half])


def _index_order_mean(values: Sequence[float]) -> float:
    # Plain left-to-right accumulation keeps results independent of any
    # parallelism in how the values were produced.
    total = 0.0
    for v in values:
        total += v
    return total / len(values)


def replicate_estimate(points: PointSet, integrand: Integrand) -> float:
    """Equal-weight estimate over one point set, clamped off the cube boundary."""
    coords = np.clip(points.coords, COORD_LO, COORD_HI)
    return float(np.mean(integrand.values(coords)))


def run_trial(kind: str, dim: int, log2n: int, replicates: int,
              integrand: Integrand, rng: SplitMix64) -> TrialResult:
    """One trial: R freshly randomized point sets, aggregated both ways.

    All randomization is drawn from `rng` up front, in replicate order, so
    replicate evaluation could be distributed without changing results.
    """
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    generators = [draw_generator(kind, log2n, dim, rng) for _ in range(replicates)]
    estimates = tuple(
        replicate_estimate(generator_points(gen), integrand) for gen in generators
    )
    return TrialResult(estimates, median(estimates), _index_order_mean(estimates))


def _cell_path(kind: str, dim: int, log2n: int, master_seed: int) -> SeedPath:
    return SeedPath(
        master_seed,
        (("pointset", KIND_CODES[kind]), ("dim", dim), ("log2n", log2n)),
    )


def iter_cell_trials(kind: str, dim: int, log2n: int, replicates: int, trials: int,
                     integrand: Integrand, master_seed: int,
                     paired: bool = True) -> Iterator[tuple[TrialResult, TrialResult]]:
    """Yield (median-pipeline trial, mean-pipeline trial) pairs.

    Each trial's stream is derived from the cell labels plus the trial
    index alone, so results are independent of the total trial count. In
    paired mode both pipelines share one trial; in unpaired mode each draws
    its own replicates from a purpose-tagged stream.
    """
    base = _cell_path(kind, dim, log2n, master_seed)
    for t in range(trials):
        trial_path = base.child("trial", t)
        if paired:
            trial = run_trial(kind, dim, log2n, replicates, integrand,
                              SplitMix64(derive_seed(trial_path)))
            yield trial, trial
        else:
            median_trial = run_trial(kind, dim, log2n, replicates, integrand,
                                     SplitMix64(derive_seed(trial_path.child("purpose", 0))))
            mean_trial = run_trial(kind, dim, log2n, replicates, integrand,
                                   SplitMix64(derive_seed(trial_path.child("purpose", 1))))
            yield median_trial, mean_trial


def run_cell(kind: str, dim: int, log2n: int, replicates: int, trials: int,
             integrand: Integrand, exact_value: float, master_seed: int,
             paired: bool = True) -> CellResult:
    """T independent trials; cross-trial means of both aggregates and errors."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    median_aggregates = []
    mean_aggregates = []
    for median_trial, mean_trial in iter_cell_trials(
        kind, dim, log2n, replicates, trials, integrand, master_seed, paired
    ):
        median_aggregates.append(median_trial.median)
        mean_aggregates.append(mean_trial.mean)
    median_result = _index_order_mean(median_aggregates)
    mean_result = _index_order_mean(mean_aggregates)
    err_median = exact_value - median_result
    err_mean = exact_value - mean_result
    return CellResult(
        pointset_kind=kind,
        dim=dim,
        n=1 << log2n,
        median_result=median_result,
        mean_result=mean_result,
        exact_value=exact_value,
        err_median=err_median,
        err_mean=err_mean,
        abs_err_median=abs(err_median),
        abs_err_mean=abs(err_mean),
    )
