"""Broadcast-symbol encoding.

Two equivalent routes produce the length-N codeword from a length-K message
vector: a plain GF(2) matrix product against the stored grid, and a direct
per-symbol evaluation that never materializes a matrix.  The direct route
walks the interval-indicator expansion of symbol k: the leading term x_k,
tall-block runs gated by how deep k's column interval sits, and a single
wide-block term gated by membership in that interval.  Their agreement on
random vectors is one of the package's standing verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .airmatrix import AirMatrix, _mod0, support_positions
from .chain import ParamChain, build_intervals
from .ff import BitVector


@dataclass(frozen=True)
class CodeExpression:
    """The full code as per-symbol index lists: terms[k] are the message
    indices XORed into broadcast symbol k, ascending."""

    terms: tuple[tuple[int, ...], ...]

    def lines(self) -> list[str]:
        return [
            f"c{k} = " + " + ".join(f"x{i}" for i in idxs)
            for k, idxs in enumerate(self.terms)
        ]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def encode_matrix(m: AirMatrix, x: BitVector) -> BitVector:
    """Codeword as the GF(2) product of the message row vector and the grid."""
    if len(x) != m.K:
        raise ValueError(f"message length {len(x)} != K={m.K}")
    c = (x.to_array().astype(np.int64) @ m.grid.astype(np.int64)) % 2
    return BitVector.from_bits(c)


def boolean_support(chain: ParamChain, k: int) -> list[int]:
    """Message indices feeding broadcast symbol k, by indicator evaluation.

    Evaluates each term of the per-symbol expansion against k's column
    interval membership, with every subscript reduced mod K.  Kept separate
    from `support_positions`, which enumerates grid positions block by
    block; the two must agree and tests hold them to that.
    """
    if not 0 <= k < chain.N:
        raise ValueError(f"broadcast index {k} out of range [0, {chain.N - 1}]")
    K, N = chain.K, chain.N
    intervals = build_intervals(chain)
    depth = next(i for i, c in enumerate(intervals.cols) if k in c)
    indices = [k % K]
    offset = 0
    for z in range(1, (chain.l + 1) // 2 + 1):
        if depth >= z:  # k in C_z | C_{z+1} | ... gates the tall-block run z
            lam_z = chain.lam_at(2 * z - 1)
            for j in range(1, chain.beta_at(2 * z - 1) + 1):
                indices.append((k + offset + j * lam_z) % K)
        offset += chain.beta_at(2 * z - 1) * chain.lam_at(2 * z - 1)
    if 2 * depth <= chain.l:  # k's own interval contributes one wide-block term
        lam_2i = chain.lam_at(2 * depth)
        term = (K - lam_2i) + _mod0(k - K + chain.D + chain.lam_at(2 * depth - 1), lam_2i)
        indices.append(term % K)
    # mod-2 multiplicity: a repeated index would cancel (none arise in practice)
    odd = [i for i in set(indices) if indices.count(i) % 2 == 1]
    return sorted(odd)


def encode_boolean(chain: ParamChain, x: BitVector, k: int) -> int:
    """Broadcast symbol k evaluated directly from the message vector."""
    if len(x) != chain.K:
        raise ValueError(f"message length {len(x)} != K={chain.K}")
    bit = 0
    for i in boolean_support(chain, k):
        bit ^= x[i]
    return bit


def render_code(chain: ParamChain) -> CodeExpression:
    """Human-readable form of the whole code, one index list per symbol."""
    return CodeExpression(
        terms=tuple(tuple(support_positions(chain, k)) for k in range(chain.N))
    )
