"""Backend selection for the hot kernels.

The compiled extension is preferred when importable; the NumPy fallback is
interface-identical. Set MOMQMC_BACKEND=python or MOMQMC_BACKEND=compiled
to force a choice (the latter raises if the extension is missing).
"""

from __future__ import annotations

import math
import os

import numpy as np

_requested = os.environ.get("MOMQMC_BACKEND", "").strip().lower()
if _requested == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
elif _requested == "compiled":
    from . import _kernels_cy as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
elif _requested == "":
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"
else:
    raise ImportError(f"unknown MOMQMC_BACKEND value {_requested!r}")


def backend_name() -> str:
    return BACKEND


def lattice_points(gen_vector: np.ndarray, log2n: int, shift: np.ndarray) -> np.ndarray:
    return _impl.lattice_points(gen_vector, log2n, shift)


def net_points(columns: np.ndarray, digital_shift: np.ndarray, log2n: int) -> np.ndarray:
    return _impl.net_points(columns, digital_shift, log2n)


def keister_values(points: np.ndarray) -> np.ndarray:
    """Keister integrand values for an (n, d) array of unit-cube points."""
    dim = points.shape[1]
    return _impl.keister_values(points, math.pi ** (0.5 * dim))
