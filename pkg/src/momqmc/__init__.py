"""Randomized quasi-Monte Carlo integration with median-of-means aggregation.

Building blocks: randomized rank-1 lattices and scrambled base-2 digital
nets (`pointsets`), the Keister test integrand with an exact-value oracle
(`integrands`, `special`), the replicate/trial/cell estimator pipeline
(`estimators`), and a deterministic experiment harness with CSV and SVG
output (`harness`, `svgplot`, `cli`).
"""

from .estimators import (
    CellResult,
    ExperimentConfig,
    TrialResult,
    median,
    replicate_estimate,
    run_cell,
    run_trial,
)
from .harness import ResultRow, read_csv, run_experiment, write_csv
from .integrands import (
    ExactValue,
    KeisterIntegrand,
    ReferenceIntegrand,
    keister_eval,
    keister_exact,
    reference_integrand,
)
from .kernels import backend_name
from .pointsets import (
    DigitalNetB2,
    LatticeRule,
    PointSet,
    draw_pointset,
    draw_random_lattice,
    draw_random_net,
    korobov_vector,
    lattice_points,
    net_points,
)
from .rng import SeedPath, SplitMix64, derive_seed
from .special import (
    ConvergenceError,
    QuadratureResult,
    gamma_half_integer,
    inv_norm_cdf,
    quad_semi_infinite,
)
from .svgplot import emit_plots

__version__ = "0.1.0"

__all__ = [
    "CellResult",
    "ConvergenceError",
    "DigitalNetB2",
    "ExactValue",
    "ExperimentConfig",
    "KeisterIntegrand",
    "LatticeRule",
    "PointSet",
    "QuadratureResult",
    "ReferenceIntegrand",
    "ResultRow",
    "SeedPath",
    "SplitMix64",
    "TrialResult",
    "backend_name",
    "derive_seed",
    "draw_pointset",
    "draw_random_lattice",
    "draw_random_net",
    "emit_plots",
    "gamma_half_integer",
    "inv_norm_cdf",
    "keister_eval",
    "keister_exact",
    "korobov_vector",
    "lattice_points",
    "median",
    "net_points",
    "quad_semi_infinite",
    "read_csv",
    "reference_integrand",
    "replicate_estimate",
    "run_cell",
    "run_experiment",
    "run_trial",
    "write_csv",
]
