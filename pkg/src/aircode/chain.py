"""Parameter chain and index intervals of the cyclic side-information problem.

There are K messages x_0..x_{K-1}; receiver k wants x_k and already knows the
next D messages x_{k+1}..x_{k+D} (indices mod K).  The optimal code length is
N = K - D, and the entire construction is organized by the division chain

    N       = beta_0 * lam_0 + lam_1        (lam_0 = D)
    lam_0   = beta_1 * lam_1 + lam_2
    ...
    lam_{l-1} = beta_l * lam_l              (exact; lam_{l+1} = 0)

which is the Euclidean-algorithm quotient sequence of (N, D) after the first
step.  Two conventions are materialized on the type so that every interval
formula evaluates uniformly, including the degenerate l = 0 and beta_0 = 0
cases: lam_{-1} := N and lam_i := 0 for i > l.

The chain induces interval families over row indices [0:K-1] and column
indices [0:N-1] that locate the identity sub-blocks of the encoding matrix;
each column interval C_i additionally splits into a left part D_i and a right
part E_i, which is what separates two-broadcast receivers from multi-broadcast
receivers during decoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True)
class ParamChain:
    """(K, D) together with the derived division chain."""

    K: int
    D: int
    lam: tuple[int, ...]
    beta: tuple[int, ...]

    @property
    def N(self) -> int:
        """Code length: one broadcast symbol per column, N = K - D."""
        return self.K - self.D

    @property
    def l(self) -> int:
        """Chain depth (index of the last nonzero remainder)."""
        return len(self.lam) - 1

    @property
    def capacity(self) -> Fraction:
        """Symbols per message achievable for this (K, D)."""
        if self.D == self.K - 1:
            return Fraction(1)
        return Fraction(1, self.K - self.D)

    def lam_at(self, i: int) -> int:
        """lam_i with the conventions lam_{-1} = N and lam_{i>l} = 0."""
        if i == -1:
            return self.N
        if i < -1:
            raise ValueError(f"lam index {i} out of range")
        return self.lam[i] if i <= self.l else 0

    def beta_at(self, i: int) -> int:
        """beta_i, taken as 0 beyond the chain depth."""
        if i < 0:
            raise ValueError(f"beta index {i} out of range")
        return self.beta[i] if i <= self.l else 0


@dataclass(frozen=True)
class IntervalMap:
    """Row/column interval families derived from a chain.

    All members are half-open ``range`` objects.  ``rows`` partitions
    [0, K), ``cols`` partitions [0, N), and for every i the column interval
    cols[i] is the disjoint union of col_d[i] and col_e[i].
    """

    rows: tuple[range, ...]
    cols: tuple[range, ...]
    col_d: tuple[range, ...]
    col_e: tuple[range, ...]


@lru_cache(maxsize=4096)
def build_chain(K: int, D: int) -> ParamChain:
    """Compute the unique division chain for the given (K, D).

    Raises ValueError unless 1 <= D <= K - 1.
    """
    if int(K) != K or int(D) != D:
        raise ValueError("K and D must be integers")
    K, D = int(K), int(D)
    if not 1 <= D <= K - 1:
        raise ValueError(f"D must satisfy 1 <= D <= K-1, got K={K}, D={D}")
    lam = [D]
    beta = []
    a, b = K - D, D
    while True:
        q, r = divmod(a, b)
        beta.append(q)
        if r == 0:
            break
        lam.append(r)
        a, b = b, r
    return ParamChain(K=K, D=D, lam=tuple(lam), beta=tuple(beta))


@lru_cache(maxsize=4096)
def build_intervals(chain: ParamChain) -> IntervalMap:
    """Row intervals R_i, column intervals C_i, and the C_i = D_i | E_i split."""
    K, N, l = chain.K, chain.N, chain.l
    rows = [range(0, K - chain.lam_at(0))]
    for i in range(1, l // 2 + 2):
        rows.append(range(K - chain.lam_at(2 * (i - 1)), K - chain.lam_at(2 * i)))
    cols, col_d, col_e = [], [], []
    for i in range((l + 1) // 2 + 1):
        start = N - chain.lam_at(2 * i - 1)
        stop = N - chain.lam_at(2 * i + 1)
        d_width = max((chain.beta_at(2 * i) - 1) * chain.lam_at(2 * i), 0)
        cols.append(range(start, stop))
        col_d.append(range(start, start + d_width))
        col_e.append(range(start + d_width, stop))
    return IntervalMap(rows=tuple(rows), cols=tuple(cols),
                       col_d=tuple(col_d), col_e=tuple(col_e))


def locate_column(chain: ParamChain, k: int) -> tuple[int, str]:
    """Return (i, part) where column k lies in D_i or E_i; part is "D" or "E"."""
    if not 0 <= k < chain.N:
        raise ValueError(f"column {k} out of range [0, {chain.N - 1}]")
    intervals = build_intervals(chain)
    for i, c in enumerate(intervals.cols):
        if k in c:
            return (i, "D" if k in intervals.col_d[i] else "E")
    raise AssertionError(f"column intervals failed to cover k={k}")  # unreachable


def side_window(chain: ParamChain, k: int) -> tuple[int, ...]:
    """Message indices known to receiver k: the next D indices mod K."""
    if not 0 <= k < chain.K:
        raise ValueError(f"receiver {k} out of range [0, {chain.K - 1}]")
    return tuple((k + d) % chain.K for d in range(1, chain.D + 1))
