"""Distances between the 1-entries of the encoding matrix.

For a column k of the matrix, the decoder cares about a handful of gaps
between 1s:

* down-distance of k: from the diagonal cell (k, k) to the lowest 1 in
  column k;
* up-distance of a 1-cell below the identity block: gap to the nearest 1
  above it in the same column;
* right-distance of a 1-cell inside a wide block: gap to the nearest 1 to
  its right in the same row;
* the profile of k: mu (right-distance at the lowest 1 of column k), and
  the distances t_1 < ... < t_p from that anchor to every 1 below it in
  column k + mu.

Each quantity has a closed form in the chain parameters, evaluated here in
O(1)-ish time per query; the scan_* twins compute the same quantities by
literally walking the stored grid and serve as the independent oracle in
tests and the verification suites.  Distances are undefined off the 1-cells
and outside the stated domains; such calls raise ValueError.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .airmatrix import AirMatrix, _mod0, locate_cell, support_positions
from .chain import ParamChain, locate_column


@dataclass(frozen=True)
class DistanceProfile:
    """Per-column decoding geometry: down-distance, anchor right-distance mu
    (None for columns whose lowest 1 has nothing to its right), and the
    downward offsets t of the extra 1s under the anchor's partner cell."""

    k: int
    d_down: int
    mu: int | None
    p: int
    t: tuple[int, ...]


def down_distance(chain: ParamChain, k: int) -> int:
    """Distance from cell (k, k) down to the lowest 1 in column k."""
    i, _ = locate_column(chain, k)
    lam_2i = chain.lam_at(2 * i)
    if lam_2i == 0:
        return chain.D
    k_r = _mod0(k, chain.N - chain.lam_at(2 * i - 1))
    c = k_r // lam_2i
    return chain.D + chain.lam_at(2 * i + 1) + (chain.beta_at(2 * i) - 1 - c) * lam_2i


def up_distance(m: AirMatrix, j: int, k: int) -> int:
    """Distance from a 1-cell below the identity block up to the 1 above it."""
    loc = locate_cell(m, j, k)
    if loc.block == "top":
        raise ValueError(f"up-distance is defined only below the identity block, got row {j}")
    if not m.grid[j, k]:
        raise ValueError(f"up-distance requires a 1-cell, but ({j}, {k}) is 0")
    chain = m.chain
    if loc.block == "odd":
        return chain.lam_at(2 * loc.index + 1)
    lam_2i = chain.lam_at(2 * loc.index)
    c = loc.k_r // lam_2i
    return chain.lam_at(2 * loc.index - 1) - c * lam_2i


def right_distance(m: AirMatrix, j: int, k: int) -> int:
    """Distance from a 1-cell in a wide block to the next 1 on its right.

    Inside the first beta-1 identity copies of the block the answer is the
    copy width; in the last copy it depends on the row, and is undefined
    (ValueError) when the block is the matrix's right edge.
    """
    loc = locate_cell(m, j, k)
    if loc.block != "even":
        raise ValueError(f"right-distance is defined on wide-block cells only, got {loc.block}")
    if not m.grid[j, k]:
        raise ValueError(f"right-distance requires a 1-cell, but ({j}, {k}) is 0")
    chain = m.chain
    lam_2i = chain.lam_at(2 * loc.index)
    if loc.k_r < (chain.beta_at(2 * loc.index) - 1) * lam_2i:
        return lam_2i
    lam_odd = chain.lam_at(2 * loc.index + 1)
    if lam_odd == 0:
        raise ValueError(f"no 1 to the right of ({j}, {k})")
    c = loc.j_r // lam_odd
    return lam_2i - c * lam_odd


def distance_profile(m: AirMatrix, k: int) -> DistanceProfile:
    """Assemble (d_down, mu, p, t) for column k from the closed forms.

    mu exists only for k in [0, N - lam_l - 1]; there the lowest 1 of
    column k sits in a wide block and the t offsets enumerate the 1s below
    its right neighbour in column k + mu.
    """
    chain = m.chain
    if not 0 <= k < chain.N:
        raise ValueError(f"column {k} out of range [0, {chain.N - 1}]")
    d_down = down_distance(chain, k)
    if k >= chain.N - chain.lam[chain.l]:
        return DistanceProfile(k=k, d_down=d_down, mu=None, p=0, t=())
    mu = right_distance(m, k + d_down, k)
    anchor = k + d_down
    below = [r - anchor for r in support_positions(chain, k + mu) if r > anchor]
    return DistanceProfile(k=k, d_down=d_down, mu=mu, p=len(below), t=tuple(below))


# --- scan oracle: the same quantities by brute-force grid walks -------------

def scan_down_distance(m: AirMatrix, k: int) -> int:
    if not 0 <= k < m.N:
        raise ValueError(f"column {k} out of range [0, {m.N - 1}]")
    rows = np.flatnonzero(m.grid[:, k])
    return int(rows.max()) - k


def scan_up_distance(m: AirMatrix, j: int, k: int) -> int:
    if j < m.N:
        raise ValueError(f"up-distance is defined only below the identity block, got row {j}")
    if not m.grid[j, k]:
        raise ValueError(f"up-distance requires a 1-cell, but ({j}, {k}) is 0")
    rows = np.flatnonzero(m.grid[:, k])
    above = rows[rows < j]
    return j - int(above.max())


def scan_right_distance(m: AirMatrix, j: int, k: int) -> int:
    if not m.grid[j, k]:
        raise ValueError(f"right-distance requires a 1-cell, but ({j}, {k}) is 0")
    cols = np.flatnonzero(m.grid[j, :])
    right = cols[cols > k]
    if right.size == 0:
        raise ValueError(f"no 1 to the right of ({j}, {k})")
    return int(right.min()) - k


def scan_distance_profile(m: AirMatrix, k: int) -> DistanceProfile:
    d_down = scan_down_distance(m, k)
    if k >= m.N - m.chain.lam[m.chain.l]:
        return DistanceProfile(k=k, d_down=d_down, mu=None, p=0, t=())
    mu = scan_right_distance(m, k + d_down, k)
    anchor = k + d_down
    rows = np.flatnonzero(m.grid[:, k + mu])
    below = tuple(int(r) - anchor for r in rows[rows > anchor])
    return DistanceProfile(k=k, d_down=d_down, mu=mu, p=len(below), t=below)
