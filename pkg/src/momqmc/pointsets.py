"""Randomized low-discrepancy point sets.

Two families, both restricted to n = 2^m points:

* rank-1 lattices in Korobov form, randomized by a fresh uniform odd
  multiplier and a Cranley-Patterson rotation (uniform shift mod 1);
* Sobol' digital nets in base 2, randomized by linear matrix scrambling
  (random lower-triangular bits) and a 53-bit digital shift.

Bit conventions for the digital construction: generator matrices are stored
column-wise as 32-bit words whose most significant bit is the first output
digit (weight 1/2). Scramble matrices are stored row-wise in the same
orientation, so the F2 matrix-vector product of a row word with a column
word is just popcount(row & column) mod 2. Outputs are widened to 53 bits
(shifted left by 21) before the digital-shift XOR and scaled by 2^-53.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from . import kernels
from .rng import SplitMix64

KINDS = ("lattice", "dnb2")
KIND_CODES = {"lattice": 0, "dnb2": 1}

WORD_BITS = 32
SHIFT_BITS = 53
MAX_LOG2N = 32

# One-ulp clamp guard applied before the Gaussian transform, so a coordinate
# of exactly 0 never reaches the inverse normal CDF.
COORD_LO = 2.0**-53
COORD_HI = 1.0 - 2.0**-53

_DATA_FILE = "data/joe_kuo_16.txt"


def _check_log2n(log2n: int) -> int:
    if not 1 <= log2n <= MAX_LOG2N:
        raise ValueError(f"log2n must be in [1, {MAX_LOG2N}], got {log2n}")
    return log2n


def _log2_of_power_of_two(n: int) -> int:
    if n < 2 or n & (n - 1):
        raise ValueError(f"point count must be a power of two >= 2, got {n}")
    return n.bit_length() - 1


@dataclass(frozen=True)
class PointSet:
    """n x d array of coordinates in [0, 1)."""

    coords: np.ndarray

    def __post_init__(self):
        if self.coords.ndim != 2 or self.coords.dtype != np.float64:
            raise ValueError("coords must be a 2-D float64 array")

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def d(self) -> int:
        return self.coords.shape[1]


# ---------------------------------------------------------------------------
# Rank-1 lattices


@dataclass(frozen=True)
class LatticeRule:
    """Korobov lattice instance: point i has coordinates frac(i*z/n + shift)."""

    n: int
    d: int
    gen_vector: tuple[int, ...]
    shift: tuple[float, ...]

    def __post_init__(self):
        m = _log2_of_power_of_two(self.n)
        _check_log2n(m)
        if self.d < 1 or len(self.gen_vector) != self.d or len(self.shift) != self.d:
            raise ValueError("gen_vector and shift must both have length d >= 1")
        if self.gen_vector[0] != 1:
            raise ValueError("first generating-vector entry must be 1")
        for z in self.gen_vector:
            if not 0 <= z < self.n or z % 2 == 0:
                raise ValueError(f"generating-vector entries must be odd and in [0, n), got {z}")
        for s in self.shift:
            if not 0.0 <= s < 1.0:
                raise ValueError(f"shift coordinates must lie in [0, 1), got {s}")

    @property
    def log2n(self) -> int:
        return self.n.bit_length() - 1


def korobov_vector(a: int, n: int, d: int) -> tuple[int, ...]:
    """Generating vector (1, a, a^2, ..., a^{d-1}) mod n for odd a in [1, n)."""
    _log2_of_power_of_two(n)
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if a % 2 == 0 or not 1 <= a < n:
        raise ValueError(f"multiplier must be odd and in [1, n), got {a}")
    vec = []
    power = 1
    for _ in range(d):
        vec.append(power)
        power = (power * a) % n
    return tuple(vec)


def draw_random_lattice(n: int, d: int, rng: SplitMix64) -> LatticeRule:
    """Fresh random Korobov lattice: uniform odd multiplier, then uniform shift.

    Draw order (one 64-bit word each): the multiplier a = 2*(u mod (n/2)) + 1
    first, then the d shift coordinates. n/2 is a power of two, so the modulo
    keeps the low bits of u and the multiplier is exactly uniform over the
    odd residues.
    """
    m = _log2_of_power_of_two(n)
    _check_log2n(m)
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    a = 2 * (rng.next_uint64() & (n // 2 - 1)) + 1
    shift = tuple(rng.next_float64() for _ in range(d))
    return LatticeRule(n=n, d=d, gen_vector=korobov_vector(a, n, d), shift=shift)


def lattice_points(rule: LatticeRule) -> PointSet:
    """Expand a lattice rule into its full point set (natural index order)."""
    coords = kernels.lattice_points(
        np.asarray(rule.gen_vector, dtype=np.uint64),
        rule.log2n,
        np.asarray(rule.shift, dtype=np.float64),
    )
    return PointSet(coords)


# ---------------------------------------------------------------------------
# Digital nets in base 2


@lru_cache(maxsize=1)
def direction_table() -> tuple[tuple[int, int, int, tuple[int, ...]], ...]:
    """Embedded direction-number rows (dim, degree, poly, m-values), dims 2+."""
    text = resources.files(__package__).joinpath(_DATA_FILE).read_text(encoding="utf-8")
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = [int(tok) for tok in line.split()]
        dim, degree, poly, ms = fields[0], fields[1], fields[2], tuple(fields[3:])
        if len(ms) != degree:
            raise ValueError(f"direction row for dim {dim} lists {len(ms)} values, expected {degree}")
        rows.append((dim, degree, poly, ms))
    return tuple(rows)


def max_supported_dim() -> int:
    return direction_table()[-1][0]


@lru_cache(maxsize=None)
def raw_generator_columns(dim_index: int) -> tuple[int, ...]:
    """32 direction words for one coordinate (dim_index is 1-based).

    Dimension 1 is the van der Corput identity; higher dimensions extend
    their initial direction integers m_k with the usual Sobol' recurrence

        m_k = 2 a_1 m_{k-1} XOR ... XOR 2^{s-1} a_{s-1} m_{k-s+1}
              XOR 2^s m_{k-s} XOR m_{k-s},

    expressed below on the scaled words v_k = m_k << (32 - k).
    """
    if dim_index == 1:
        return tuple(1 << (WORD_BITS - k) for k in range(1, WORD_BITS + 1))
    table = direction_table()
    if dim_index < 1 or dim_index > table[-1][0]:
        raise ValueError(
            f"dimension {dim_index} exceeds the embedded direction-number table "
            f"(max {table[-1][0]})"
        )
    _, degree, poly, ms = table[dim_index - 2]
    v = [0] * (WORD_BITS + 1)
    for k in range(1, degree + 1):
        v[k] = ms[k - 1] << (WORD_BITS - k)
    for k in range(degree + 1, WORD_BITS + 1):
        word = v[k - degree] ^ (v[k - degree] >> degree)
        for i in range(1, degree):
            if (poly >> (degree - 1 - i)) & 1:
                word ^= v[k - i]
        v[k] = word
    return tuple(v[1:])


def identity_scramble() -> tuple[int, ...]:
    """Row words of the 32x32 identity matrix (no scrambling)."""
    return tuple(1 << (WORD_BITS - 1 - r) for r in range(WORD_BITS))


@dataclass(frozen=True)
class DigitalNetB2:
    """Scrambled, digitally shifted Sobol' net with 2^m points.

    `gen_columns` holds the raw (unscrambled) direction words per dimension;
    `scramble_rows` the lower-triangular unit-diagonal scramble matrices as
    row words; `digital_shift` one 53-bit word per dimension.
    """

    m: int
    d: int
    gen_columns: tuple[tuple[int, ...], ...]
    scramble_rows: tuple[tuple[int, ...], ...]
    digital_shift: tuple[int, ...]

    def __post_init__(self):
        _check_log2n(self.m)
        if self.d < 1:
            raise ValueError(f"dimension must be >= 1, got {self.d}")
        if not (len(self.gen_columns) == len(self.scramble_rows) == len(self.digital_shift) == self.d):
            raise ValueError("per-dimension field lengths must all equal d")
        for cols in self.gen_columns:
            if len(cols) != self.m:
                raise ValueError(f"expected {self.m} generator columns per dimension")
            for word in cols:
                if not 0 <= word < (1 << WORD_BITS):
                    raise ValueError("generator columns must be 32-bit words")
        for rows in self.scramble_rows:
            if len(rows) != WORD_BITS:
                raise ValueError("scramble matrices must have 32 rows")
            for r, word in enumerate(rows):
                diag = 1 << (WORD_BITS - 1 - r)
                if not word & diag:
                    raise ValueError("scramble matrices must have a unit diagonal")
                if word & (diag - 1):
                    raise ValueError("scramble matrices must be lower triangular")
        for word in self.digital_shift:
            if not 0 <= word < (1 << SHIFT_BITS):
                raise ValueError("digital shifts must be 53-bit words")

    @property
    def n(self) -> int:
        return 1 << self.m


def draw_random_net(m: int, d: int, rng: SplitMix64) -> DigitalNetB2:
    """Fresh randomized net: scramble matrices dim by dim, then shifts dim by dim.

    Draw order: for each dimension, rows r = 1..31 of the scramble matrix
    take one 64-bit word each, whose low r bits are the strictly-lower
    entries L[r][0..r-1] (bit c of the word is the entry in column c); after
    all scrambles, each dimension's digital shift takes the low 53 bits of
    one more word.
    """
    _check_log2n(m)
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    gen_columns = tuple(raw_generator_columns(j + 1)[:m] for j in range(d))

    scrambles = []
    for _ in range(d):
        rows = [1 << (WORD_BITS - 1)]
        for r in range(1, WORD_BITS):
            low = rng.next_uint64() & ((1 << r) - 1)
            word = 1 << (WORD_BITS - 1 - r)
            for c in range(r):
                if (low >> c) & 1:
                    word |= 1 << (WORD_BITS - 1 - c)
            rows.append(word)
        scrambles.append(tuple(rows))

    shifts = tuple(rng.next_uint64() & ((1 << SHIFT_BITS) - 1) for _ in range(d))
    return DigitalNetB2(
        m=m, d=d, gen_columns=gen_columns,
        scramble_rows=tuple(scrambles), digital_shift=shifts,
    )


def _f2_matvec(rows: tuple[int, ...], column: int) -> int:
    out = 0
    for r, row in enumerate(rows):
        if (row & column).bit_count() & 1:
            out |= 1 << (WORD_BITS - 1 - r)
    return out


def scrambled_columns(net: DigitalNetB2) -> np.ndarray:
    """Column words of scramble * generator per dimension, as a (d, m) array."""
    cols = np.empty((net.d, net.m), dtype=np.uint64)
    for j in range(net.d):
        rows = net.scramble_rows[j]
        for k in range(net.m):
            cols[j, k] = _f2_matvec(rows, net.gen_columns[j][k])
    return cols


def net_points(net: DigitalNetB2) -> PointSet:
    """Expand a net into its full point set (natural index order)."""
    coords = kernels.net_points(
        scrambled_columns(net),
        np.asarray(net.digital_shift, dtype=np.uint64),
        net.m,
    )
    return PointSet(coords)


# ---------------------------------------------------------------------------


Generator = LatticeRule | DigitalNetB2


def draw_generator(kind: str, log2n: int, d: int, rng: SplitMix64) -> Generator:
    """Draw one fresh randomized generator of the given kind (no expansion)."""
    if kind == "lattice":
        return draw_random_lattice(1 << log2n, d, rng)
    if kind == "dnb2":
        return draw_random_net(log2n, d, rng)
    raise ValueError(f"unknown point-set kind {kind!r}; expected one of {KINDS}")


def generator_points(gen: Generator) -> PointSet:
    if isinstance(gen, LatticeRule):
        return lattice_points(gen)
    return net_points(gen)


def draw_pointset(kind: str, log2n: int, d: int, rng: SplitMix64) -> PointSet:
    """Draw one fresh randomized point set of the given kind and expand it."""
    return generator_points(draw_generator(kind, log2n, d, rng))
