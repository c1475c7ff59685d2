"""Vector and matrix arithmetic over small prime fields.

Everything the rest of the package needs from linear algebra lives here:
GF(2) bit vectors with XOR accumulation, and dense matrices over GF(p) for
p in {2, 3, 5} with a Gaussian-elimination rank.  The three primes are a
finite spot-check of row independence claims that hold over every field;
no general-field machinery is provided.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5)


@dataclass(frozen=True)
class BitVector:
    """Immutable vector of GF(2) symbols, indexed 0..len-1."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bit vector entries must be 0 or 1")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        return cls(tuple(int(b) for b in bits))

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a bitstring such as "1010"; character i is symbol i."""
        if not set(text) <= {"0", "1"}:
            raise ValueError(f"bitstring may contain only 0/1, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls((0,) * n)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __iter__(self):
        return iter(self.bits)

    def __xor__(self, other: "BitVector") -> "BitVector":
        if len(other) != len(self):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        return BitVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def to_string(self) -> str:
        return "".join(str(b) for b in self.bits)

    def to_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)


def xor_accumulate(vectors: Sequence[BitVector]) -> BitVector:
    """Componentwise XOR of one or more equal-length bit vectors."""
    if not vectors:
        raise ValueError("xor_accumulate needs at least one vector")
    acc = vectors[0]
    for v in vectors[1:]:
        acc = acc ^ v
    return acc


class PrimeFieldMatrix:
    """Dense row-major matrix over GF(p), p in {2, 3, 5}."""

    def __init__(self, entries, p: int):
        if p not in SUPPORTED_PRIMES:
            raise ValueError(f"unsupported prime {p}; expected one of {SUPPORTED_PRIMES}")
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if a.size and (a.min() < 0 or a.max() >= p):
            raise ValueError(f"entries must lie in [0, {p - 1}]")
        a.setflags(write=False)
        self.p = p
        self.entries = a

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __repr__(self) -> str:
        return f"PrimeFieldMatrix({self.rows}x{self.cols} over GF({self.p}))"


def rank(m: PrimeFieldMatrix) -> int:
    """Rank of the matrix over its field."""
    return rank_mod_p(m.entries, m.p)


def rank_mod_p(entries, p: int) -> int:
    """Rank of an integer array over GF(p) by Gaussian elimination.

    Array-level worker shared with the batch verification suites; `entries`
    is reduced mod p before elimination.
    """
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"unsupported prime {p}; expected one of {SUPPORTED_PRIMES}")
    m = np.array(entries, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError("rank_mod_p expects a two-dimensional array")
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pivots = np.flatnonzero(m[r:, c])
        if pivots.size == 0:
            continue
        pr = r + int(pivots[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r, c:] = (m[r, c:] * inv) % p
        below = m[r + 1 :, c]
        nz = np.flatnonzero(below)
        if nz.size:
            m[r + 1 + nz, c:] = (m[r + 1 + nz, c:] - np.outer(below[nz], m[r, c:])) % p
        r += 1
    return r
