"""Per-receiver decoding plans and plain-XOR decoding.

Receiver k never solves equations: a precomputed plan names the broadcast
symbols to XOR together and the side-information messages (gamma, a subset
of its D-message window) to XOR on top, and the result is x_k.  Which
broadcasts go into the plan follows from where k falls among the column
intervals:

* case I  (k in a D_i): two broadcasts, c_k and c_{k+mu};
* case II (k in an E_i before the last interval): c_k, one broadcast per t
  offset, and c_{k+mu} -- p+2 in total;
* case III (last lam_l columns): c_k alone;
* case IV (k >= N): the single broadcast c_{k mod N}.

gamma and the per-broadcast side-information terms are derived by XOR-ing
the actual grid columns of the selected broadcasts: whatever survives is
{k} plus indices inside k's window.  Plans are immutable; build once, then
decode any number of codewords, concurrently if desired.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .airmatrix import AirMatrix
from .chain import locate_column
from .ff import BitVector
from .geometry import DistanceProfile, distance_profile

CASE_ORDER = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class DecodePlan:
    """Everything receiver k needs: case tag, geometry profile (None for
    case IV), broadcast indices, reduced side-information gamma, and the
    side-information indices contributed per broadcast (nu_terms)."""

    k: int
    case: str
    interval: int | None
    profile: DistanceProfile | None
    broadcasts: tuple[int, ...]
    gamma: tuple[int, ...]
    nu_terms: dict[int, tuple[int, ...]]


def build_plan(m: AirMatrix, k: int) -> DecodePlan:
    """Construct the decoding plan for receiver k."""
    chain = m.chain
    K, N = chain.K, chain.N
    if not 0 <= k < K:
        raise ValueError(f"receiver {k} out of range [0, {K - 1}]")
    if k >= N:
        case, interval, profile = "IV", None, None
        broadcasts = (k % N,)
    else:
        profile = distance_profile(m, k)
        interval, part = locate_column(chain, k)
        if profile.mu is None:
            case = "III"
            broadcasts = (k,)
        elif part == "D":
            case = "I"
            broadcasts = (k, k + profile.mu)
        else:
            case = "II"
            broadcasts = (k, *(k + t for t in profile.t), k + profile.mu)
    acc = np.zeros(K, dtype=np.uint8)
    for b in broadcasts:
        acc ^= m.grid[:, b]
    combined = set(np.flatnonzero(acc).tolist())
    gamma = tuple(sorted(combined - {k}))
    nu_terms: dict[int, tuple[int, ...]] = {}
    for b in broadcasts:
        sup = np.flatnonzero(m.grid[:, b]).tolist()
        nu_terms[b] = tuple(i for i in sup if i != k and i in combined)
    return DecodePlan(k=k, case=case, interval=interval, profile=profile,
                      broadcasts=broadcasts, gamma=gamma, nu_terms=nu_terms)


def all_plans(m: AirMatrix) -> list[DecodePlan]:
    return [build_plan(m, k) for k in range(m.K)]


def decode(plan: DecodePlan, c: BitVector, side: Mapping[int, int]) -> int:
    """Recover x_k as the XOR of the plan's broadcasts and gamma bits.

    `side` must provide a bit for every index in plan.gamma; a missing index
    raises ValueError naming it.
    """
    bit = 0
    for b in plan.broadcasts:
        bit ^= c[b]
    for g in plan.gamma:
        if g not in side:
            raise ValueError(f"receiver {plan.k}: missing side-information x{g}")
        bit ^= side[g] & 1
    return bit


def plan_records(plans: list[DecodePlan]) -> list[dict]:
    """Machine-readable rows: one dict per receiver, JSON-serializable."""
    records = []
    for p in plans:
        prof = p.profile
        records.append({
            "k": p.k,
            "case": p.case,
            "d_down": prof.d_down if prof else None,
            "mu": prof.mu if prof else None,
            "p": prof.p if prof else None,
            "t": list(prof.t) if prof else [],
            "broadcasts": list(p.broadcasts),
            "gamma": list(p.gamma),
        })
    return records


def render_plan_table(plans: list[DecodePlan]) -> str:
    """Aligned text table, one row per receiver."""
    header = ("k", "wanted", "case", "d_down", "mu", "p", "t", "broadcasts", "gamma")
    rows = []
    for rec in plan_records(plans):
        rows.append((
            str(rec["k"]),
            f"x{rec['k']}",
            rec["case"],
            "-" if rec["d_down"] is None else str(rec["d_down"]),
            "-" if rec["mu"] is None else str(rec["mu"]),
            "-" if rec["p"] is None else str(rec["p"]),
            ",".join(str(t) for t in rec["t"]) or "-",
            ",".join(f"c{b}" for b in rec["broadcasts"]),
            ",".join(f"x{g}" for g in rec["gamma"]),
        ))
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header).rstrip()]
    lines.extend(fmt.format(*row).rstrip() for row in rows)
    return "\n".join(lines)


@dataclass(frozen=True)
class SideInfoCheck:
    """Outcome of decoding with only the reduced side-information sets."""

    K: int
    D: int
    vectors: int
    failures: tuple[tuple[int, int, int], ...]  # (K, D, receiver)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_reduced_side_information(m: AirMatrix, vectors: int = 512,
                                    seed: int = 0, exhaustive: bool = False) -> SideInfoCheck:
    """Check that every receiver recovers x_k from gamma_k alone.

    Encodes message vectors (all 2^K of them when exhaustive, else `vectors`
    random ones), then decodes every receiver feeding only the gamma indices
    as side-information.
    """
    chain = m.chain
    K = chain.K
    if exhaustive:
        if K > 20:
            raise ValueError("exhaustive check is limited to K <= 20")
        x = ((np.arange(2 ** K, dtype=np.int64)[:, None] >> np.arange(K)) & 1).astype(np.uint8)
    else:
        rng = np.random.default_rng(seed)
        x = rng.integers(0, 2, size=(vectors, K), dtype=np.uint8)
    c = (x.astype(np.int64) @ m.grid.astype(np.int64)) % 2
    failures = []
    for plan in all_plans(m):
        est = np.zeros(len(x), dtype=np.int64)
        for b in plan.broadcasts:
            est ^= c[:, b]
        for g in plan.gamma:
            est ^= x[:, g]
        if not np.array_equal(est, x[:, plan.k]):
            failures.append((K, chain.D, plan.k))
    return SideInfoCheck(K=K, D=chain.D, vectors=len(x), failures=tuple(failures))
