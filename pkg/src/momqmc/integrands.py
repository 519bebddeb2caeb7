"""The Keister test integrand, its exact values, and reference integrands.

The Keister integral

    integral over R^d of cos(|x|) * exp(-|x|^2) dx

maps to the unit cube through the Gaussian change of variables
u_j = Phi(sqrt(2) x_j), giving the cube integrand

    f(u) = pi^{d/2} * cos(|t|),   t_j = inv_norm_cdf(u_j) / sqrt(2),

and its exact value comes from the equivalent 1-D radial integral

    S_d = (2 pi^{d/2} / Gamma(d/2)) * integral_0^inf cos(r) exp(-r^2) r^{d-1} dr.

See the README for the derivation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import kernels
from .special import gamma_half_integer, inv_norm_cdf, quad_semi_infinite

_SQRT2 = math.sqrt(2.0)

MAX_EXACT_DIM = 16

CLOSED_FORM_1D = math.sqrt(math.pi) * math.exp(-0.25)

METHOD_CLOSED_FORM = "closed-form"
METHOD_RADIAL_QUADRATURE = "radial-quadrature"


def keister_eval(u: Iterable[float]) -> float:
    """Scalar reference evaluation of the Keister cube integrand.

    Coordinates must lie strictly inside (0, 1); the estimator pipeline
    clamps before calling the vectorized kernel, and this scalar path
    mirrors that contract by raising on endpoint values.
    """
    s = 0.0
    d = 0
    for uj in u:
        t = inv_norm_cdf(uj) / _SQRT2
        s += t * t
        d += 1
    if d == 0:
        raise ValueError("point must have at least one coordinate")
    return math.pi ** (0.5 * d) * math.cos(math.sqrt(s))


@dataclass(frozen=True)
class KeisterIntegrand:
    """Vectorized Keister integrand of fixed dimension."""

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")

    def values(self, coords: np.ndarray) -> np.ndarray:
        if coords.shape[1] != self.dim:
            raise ValueError(f"expected {self.dim} columns, got {coords.shape[1]}")
        return kernels.keister_values(coords)


@dataclass(frozen=True)
class ExactValue:
    dim: int
    value: float
    method: str


@lru_cache(maxsize=None)
def keister_exact(dim: int, tol: float = 1e-12) -> ExactValue:
    """Exact Keister value via the radial quadrature oracle.

    For dim = 1 the closed form sqrt(pi) * exp(-1/4) is returned and the
    quadrature path is asserted against it to 1e-10, guarding both routes.
    """
    if not 1 <= dim <= MAX_EXACT_DIM:
        raise ValueError(f"dimension must be in [1, {MAX_EXACT_DIM}], got {dim}")

    def radial(r: float) -> float:
        return math.cos(r) * math.exp(-r * r) * r ** (dim - 1)

    quad = quad_semi_infinite(radial, tol)
    value = 2.0 * math.pi ** (0.5 * dim) / gamma_half_integer(0.5 * dim) * quad.value
    if dim == 1:
        if abs(value - CLOSED_FORM_1D) > 1e-10:
            raise ArithmeticError(
                f"radial quadrature {value!r} disagrees with the 1-D closed form "
                f"{CLOSED_FORM_1D!r}"
            )
        return ExactValue(1, CLOSED_FORM_1D, METHOD_CLOSED_FORM)
    return ExactValue(dim, value, METHOD_RADIAL_QUADRATURE)


REFERENCE_KINDS = ("constant", "sum", "product")


@dataclass(frozen=True)
class ReferenceIntegrand:
    """Simple integrand with a known unit-cube integral, for pipeline oracles."""

    kind: str
    dim: int
    constant: float = 1.0

    def __post_init__(self):
        if self.kind not in REFERENCE_KINDS:
            raise ValueError(f"kind must be one of {REFERENCE_KINDS}, got {self.kind!r}")
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")

    @property
    def exact(self) -> float:
        if self.kind == "constant":
            return self.constant
        if self.kind == "sum":
            return 0.5 * self.dim
        return 2.0**-self.dim

    def values(self, coords: np.ndarray) -> np.ndarray:
        if coords.shape[1] != self.dim:
            raise ValueError(f"expected {self.dim} columns, got {coords.shape[1]}")
        if self.kind == "constant":
            return np.full(coords.shape[0], self.constant)
        if self.kind == "sum":
            return np.sum(coords, axis=1)
        return np.prod(coords, axis=1)


def reference_integrand(kind: str, dim: int, constant: float = 1.0) -> ReferenceIntegrand:
    return ReferenceIntegrand(kind=kind, dim=dim, constant=constant)
