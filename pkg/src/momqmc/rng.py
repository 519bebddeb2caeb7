"""Deterministic randomness: SplitMix64 streams seeded through labeled paths.

Every random draw in this package comes from a SplitMix64 stream whose seed
is derived from a master seed plus an ordered list of (tag, index) labels.
Any replicate of any trial of any experiment cell can therefore be
regenerated in isolation, and results do not depend on scheduling or on how
many other cells ran first.

Both constructions are small enough to reimplement from this docstring:

SplitMix64 (Steele, Lea & Flood; Vigna's public-domain reference code):
    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- ((z XOR (z >> 30)) * 0xBF58476D1CE4B5B9) mod 2^64
    z <- ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output <- z XOR (z >> 31)
Doubles in [0, 1) take the top 53 bits: (output >> 11) * 2^-53.

Seed derivation hashes a byte string with SHA-256 and keeps the first 8
digest bytes (big-endian). The byte string is the master seed as 8
big-endian bytes, followed for each label by the UTF-8 tag, a 0x1F
separator, the index as 8 big-endian bytes, and a 0x1E terminator. The
framing makes the construction order-sensitive and prefix-free.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4B5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 2.0**-53


class SplitMix64:
    """64-bit counter/permutation generator; one instance per seeded stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_uint64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def next_float64(self) -> float:
        """Uniform double in [0, 1) from the top 53 output bits."""
        return (self.next_uint64() >> 11) * _INV_2_53


@dataclass(frozen=True)
class SeedPath:
    """Master seed plus an ordered list of (tag, index) labels.

    Tags used by the experiment harness: pointset, dim, log2n, trial,
    replicate, purpose. Derivation is collision-resistant, so distinct
    paths give independent streams.
    """

    master_seed: int
    labels: tuple[tuple[str, int], ...]

    def child(self, tag: str, index: int) -> "SeedPath":
        return SeedPath(self.master_seed, self.labels + ((tag, int(index)),))


def derive_seed(path: SeedPath) -> int:
    """Derive the 64-bit stream seed for a labeled path (see module docs)."""
    if not path.labels:
        raise ValueError("seed path needs at least one label")
    h = hashlib.sha256()
    h.update((path.master_seed & _MASK64).to_bytes(8, "big"))
    for tag, index in path.labels:
        if index < 0:
            raise ValueError(f"label index must be nonnegative, got {index}")
        h.update(tag.encode("utf-8"))
        h.update(b"\x1f")
        h.update(int(index).to_bytes(8, "big"))
        h.update(b"\x1e")
    return int.from_bytes(h.digest()[:8], "big")
