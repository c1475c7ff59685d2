"""Construction and block geometry of the K x N encoding matrix (N = K - D).

The matrix is binary with two defining features: the top N rows are the
identity, and every window of N consecutive rows is invertible over every
field, which is what makes the code decodable by all K receivers.  It is
built by an alternating fill: stack copies of I_N down the rows, then lay
transposed identity strips across the columns of whatever rectangle is left,
and repeat on the shrinking bottom-right corner.  The fill is driven by the
same quotients beta_i that the parameter chain records, so the finished
matrix decomposes into one identity block on top plus l+1 rectangular
identity blocks, alternating "wide" (even ordinal) and "tall" (odd ordinal).

`support_positions` enumerates the 1-positions of any column directly from
the chain, without touching a stored grid; it is the closed-form twin of the
fill and everything downstream (code rendering, decoding plans) leans on it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chain import ParamChain, build_chain, locate_column


def _mod0(a: int, m: int) -> int:
    """a mod m with the convention that modulus 0 is the identity."""
    return a if m == 0 else a % m


class AirMatrix:
    """Encoding matrix for one (K, D) problem; grid is a read-only uint8 array."""

    def __init__(self, chain: ParamChain, grid: np.ndarray):
        grid = np.asarray(grid, dtype=np.uint8)
        if grid.shape != (chain.K, chain.N):
            raise ValueError(f"grid must be {chain.K}x{chain.N}, got {grid.shape}")
        if grid.size and grid.max() > 1:
            raise ValueError("grid entries must be 0 or 1")
        grid = grid.copy()
        grid.setflags(write=False)
        self.chain = chain
        self.grid = grid

    @property
    def K(self) -> int:
        return self.chain.K

    @property
    def N(self) -> int:
        return self.chain.N

    def __repr__(self) -> str:
        return f"AirMatrix(K={self.K}, D={self.chain.D})"


@dataclass(frozen=True)
class CellLocation:
    """Which identity block a cell lies in, plus its in-block coordinates.

    block is "top", "even" or "odd"; index is the block ordinal i for the
    even/odd families and None for the top identity.
    """

    block: str
    index: int | None
    j_r: int
    k_r: int


def build_air_matrix(chain: ParamChain) -> AirMatrix:
    """Run the alternating row/column fill for the chain's (K, D)."""
    K, N = chain.K, chain.N
    grid = np.zeros((K, N), dtype=np.uint8)
    row0, col0 = 0, 0
    rows_left, cols_left = K, N
    while True:
        q, r = divmod(rows_left, cols_left)
        for t in range(q * cols_left):
            grid[row0 + t, col0 + t % cols_left] = 1
        row0 += q * cols_left
        rows_left = r
        if r == 0:
            break
        qp, rp = divmod(cols_left, r)
        for t in range(qp * r):
            grid[row0 + t % r, col0 + t] = 1
        col0 += qp * r
        cols_left = rp
        if rp == 0:
            break
    return AirMatrix(chain, grid)


def locate_cell(m: AirMatrix, j: int, k: int) -> CellLocation:
    """Identify the block containing cell (j, k) and its local coordinates.

    Local coordinates follow the reduction rules of the block layout:
    top: (j, k); even block i: j mod (K - lam_{2i}), k mod (N - lam_{2i-1});
    odd block i: j mod (K - lam_{2i}), k mod (N - lam_{2i+1}); a modulus of
    zero reduces nothing.
    """
    chain = m.chain
    K, N = chain.K, chain.N
    if not 0 <= j < K:
        raise ValueError(f"row {j} out of range [0, {K - 1}]")
    if not 0 <= k < N:
        raise ValueError(f"column {k} out of range [0, {N - 1}]")
    if j < N:
        return CellLocation("top", None, j, k)
    i, _ = locate_column(chain, k)
    if 2 * i <= chain.l and j >= K - chain.lam_at(2 * i):
        return CellLocation(
            "even", i,
            j % (K - chain.lam_at(2 * i)),
            _mod0(k, N - chain.lam_at(2 * i - 1)),
        )
    w = 0
    while not (K - chain.lam_at(2 * w) <= j < K - chain.lam_at(2 * w + 2)):
        w += 1
    return CellLocation(
        "odd", w,
        _mod0(j, K - chain.lam_at(2 * w)),
        _mod0(k, N - chain.lam_at(2 * w + 1)),
    )


def support_positions(chain: ParamChain, k: int) -> list[int]:
    """Ascending row indices of the 1s in column k, from the chain alone.

    Column k of a column-interval ordinal i carries: its diagonal cell k;
    for each tall block w = 1..i a run of beta_{2w-1} cells spaced
    lam_{2w-1} apart; and, whenever the wide block of ordinal i exists
    (2i <= l), one final cell inside it.
    """
    i, _ = locate_column(chain, k)
    K, N = chain.K, chain.N
    positions = [k]
    offset = 0
    for w in range(1, i + 1):
        lam_w = chain.lam_at(2 * w - 1)
        beta_w = chain.beta_at(2 * w - 1)
        positions.extend(k + offset + j * lam_w for j in range(1, beta_w + 1))
        offset += beta_w * lam_w
    if 2 * i <= chain.l:
        lam_2i = chain.lam_at(2 * i)
        positions.append((K - lam_2i) + _mod0(k - (N - chain.lam_at(2 * i - 1)), lam_2i))
    return sorted(positions)


def column_support(m: AirMatrix, k: int) -> list[int]:
    """Closed-form 1-positions of column k (see `support_positions`)."""
    return support_positions(m.chain, k)


def to_text(m: AirMatrix) -> str:
    """Serialize: first line "K D", then K rows of N characters from {0,1}."""
    lines = [f"{m.K} {m.chain.D}"]
    lines.extend("".join(str(int(v)) for v in row) for row in m.grid)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> AirMatrix:
    """Parse the `to_text` format; the grid must be the canonical one for (K, D)."""
    lines = text.strip().split("\n")
    try:
        K, D = (int(tok) for tok in lines[0].split())
    except (ValueError, IndexError) as exc:
        raise ValueError(f"bad header line {lines[0]!r}; expected 'K D'") from exc
    chain = build_chain(K, D)
    if len(lines) != 1 + K:
        raise ValueError(f"expected {K} grid rows, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        if len(line) != chain.N or not set(line) <= {"0", "1"}:
            raise ValueError(f"bad grid row {line!r}")
        rows.append([int(ch) for ch in line])
    m = AirMatrix(chain, np.array(rows, dtype=np.uint8))
    if not np.array_equal(m.grid, build_air_matrix(chain).grid):
        raise ValueError(f"grid is not the canonical ({K}, {D}) construction")
    return m
