"""Experiment sweep execution and CSV persistence.

A sweep covers every (dim, log2n) cell of an ExperimentConfig for one
point-set kind. Cells are independent given their derived seeds, so they
may run on a thread pool of any size without changing a single output bit;
rows are always assembled in (dim, log2n) order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Callable

from .estimators import ExperimentConfig, Integrand, run_cell
from .integrands import KeisterIntegrand, keister_exact

CSV_HEADER = "pointset,dim,log2n,replicates,trials,seed,F,Fprime,S,absE,absEprime,diff"


@dataclass(frozen=True)
class ResultRow:
    """One persisted record per (pointset kind, dim, log2n)."""

    pointset_kind: str
    dim: int
    log2n: int
    replicates: int
    trials: int
    master_seed: int
    median_result: float
    mean_result: float
    exact_value: float
    abs_err_median: float
    abs_err_mean: float
    diff: float  # abs_err_mean - abs_err_median; positive means the median won


IntegrandFactory = Callable[[int], tuple[Integrand, float]]


def _default_integrand_factory(dim: int) -> tuple[Integrand, float]:
    return KeisterIntegrand(dim), keister_exact(dim).value


def run_experiment(
    config: ExperimentConfig,
    integrand_factory: IntegrandFactory | None = None,
    threads: int | None = None,
) -> list[ResultRow]:
    """Run every cell of the sweep and return rows sorted by (dim, log2n)."""
    factory = integrand_factory or _default_integrand_factory
    per_dim = {dim: factory(dim) for dim in sorted(set(config.dims))}
    cells = [(dim, m) for dim in sorted(set(config.dims)) for m in config.log2n_values]

    def work(cell: tuple[int, int]) -> ResultRow:
        dim, log2n = cell
        integrand, exact_value = per_dim[dim]
        try:
            result = run_cell(
                config.pointset_kind, dim, log2n, config.replicates, config.trials,
                integrand, exact_value, config.master_seed, config.paired,
            )
        except Exception as exc:
            raise RuntimeError(
                f"cell (pointset={config.pointset_kind}, dim={dim}, n=2^{log2n}) failed: {exc}"
            ) from exc
        return ResultRow(
            pointset_kind=config.pointset_kind,
            dim=dim,
            log2n=log2n,
            replicates=config.replicates,
            trials=config.trials,
            master_seed=config.master_seed,
            median_result=result.median_result,
            mean_result=result.mean_result,
            exact_value=result.exact_value,
            abs_err_median=result.abs_err_median,
            abs_err_mean=result.abs_err_mean,
            diff=result.abs_err_mean - result.abs_err_median,
        )

    workers = threads if threads is not None else (os.cpu_count() or 1)
    if workers <= 1:
        return [work(cell) for cell in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, cells))


def _format_real(x: float) -> str:
    return format(x, ".17g")


def write_csv(rows: list[ResultRow], destination: str | Path) -> Path:
    """Write rows in the documented schema: LF newlines, 17-digit reals."""
    if not rows:
        raise ValueError("refusing to write an empty result set")
    path = Path(destination)
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(",".join([
            row.pointset_kind,
            str(row.dim),
            str(row.log2n),
            str(row.replicates),
            str(row.trials),
            str(row.master_seed),
            _format_real(row.median_result),
            _format_real(row.mean_result),
            _format_real(row.exact_value),
            _format_real(row.abs_err_median),
            _format_real(row.abs_err_mean),
            _format_real(row.diff),
        ]))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return path


def read_csv(source: str | Path) -> list[ResultRow]:
    """Parse a results file written by write_csv (exact round trip)."""
    text = Path(source).read_text(encoding="utf-8")
    lines = [line for line in text.split("\n") if line]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"unrecognized results header in {source}")
    rows = []
    n_fields = len(fields(ResultRow))
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != n_fields:
            raise ValueError(f"malformed results row: {line!r}")
        rows.append(ResultRow(
            pointset_kind=parts[0],
            dim=int(parts[1]),
            log2n=int(parts[2]),
            replicates=int(parts[3]),
            trials=int(parts[4]),
            master_seed=int(parts[5]),
            median_result=float(parts[6]),
            mean_result=float(parts[7]),
            exact_value=float(parts[8]),
            abs_err_median=float(parts[9]),
            abs_err_mean=float(parts[10]),
            diff=float(parts[11]),
        ))
    return rows
