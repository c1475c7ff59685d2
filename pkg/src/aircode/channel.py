"""Monte Carlo simulation of the code over a noisy broadcast channel.

The N broadcast symbols are BPSK-modulated (bit 0 -> +1, bit 1 -> -1) and
sent over one independent channel per receiver.  Each receiver hard-decides
every symbol from its own observations, then runs its decoding plan on the
estimates together with its (noiseless) side-information.  Channel models:

* "awgn":     y = s + w,        w ~ N(0, 1/(2*snr));
* "rayleigh": y = h*s + w,      h Rayleigh with E[h^2] = 1, drawn fresh per
              symbol, receiver knows h (coherent detection, decide on h*y);
* "bsc":      symbols flip independently with a fixed crossover probability
              (test hook; not a physical model).

snr_db is per-transmitted-bit Eb/N0.  Reproducibility contract: one master
seed per sweep point, per-batch substreams derived by key splitting, so a
report depends only on (specs, trials, batch_size) and never on execution
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .airmatrix import AirMatrix
from .decoder import DecodePlan
from .ff import BitVector

MODELS = ("awgn", "rayleigh", "bsc")
_MODEL_KEY = {name: i for i, name in enumerate(MODELS)}
DEFAULT_BATCH = 100_000


@dataclass(frozen=True)
class ChannelSpec:
    """One sweep point: channel model, per-bit SNR in dB, RNG seed."""

    model: str
    snr_db: float
    seed: int
    crossover: float | None = None  # "bsc" only

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"unknown channel model {self.model!r}")
        if not np.isfinite(self.snr_db):
            raise ValueError("snr_db must be finite")
        if self.model == "bsc":
            if self.crossover is None or not 0.0 <= self.crossover <= 1.0:
                raise ValueError("bsc model needs a crossover probability in [0, 1]")
        elif self.crossover is not None:
            raise ValueError("crossover is only meaningful for the bsc model")


def _noise_sigma(snr_db: float) -> float:
    return float(np.sqrt(0.5 * 10.0 ** (-snr_db / 10.0)))


def _estimate(bits: np.ndarray, spec: ChannelSpec, rng: np.random.Generator) -> np.ndarray:
    """Send bits through the channel and hard-decide; any array shape."""
    if spec.model == "bsc":
        flips = (rng.random(bits.shape) < spec.crossover).astype(np.uint8)
        return bits ^ flips
    s = 1.0 - 2.0 * bits.astype(np.float32)
    w = rng.standard_normal(bits.shape, dtype=np.float32) * _noise_sigma(spec.snr_db)
    if spec.model == "awgn":
        stat = s + w
    else:  # rayleigh, E[h^2] = 1, coherent matched filter
        u = rng.random(bits.shape, dtype=np.float32)
        h = np.sqrt(-np.log1p(-u))
        stat = h * (h * s + w)
    return (stat < 0).astype(np.uint8)


def transmit_estimate(c: BitVector, spec: ChannelSpec, rng: np.random.Generator) -> BitVector:
    """One codeword through one receiver's channel; returns the estimate."""
    return BitVector.from_bits(_estimate(c.to_array(), spec, rng))


def grouping_report(plans: Sequence[DecodePlan]) -> list[tuple[int, tuple[int, ...]]]:
    """Partition receivers by how many broadcast symbols their plan uses."""
    groups: dict[int, list[int]] = {}
    for p in plans:
        groups.setdefault(len(p.broadcasts), []).append(p.k)
    return [(count, tuple(sorted(ks))) for count, ks in sorted(groups.items())]


@dataclass
class BerReport:
    """Per-(snr, receiver) error accounting for one channel model."""

    model: str
    trials: int
    groups: list[tuple[int, tuple[int, ...]]]
    records: dict[tuple[float, int], tuple[int, int]] = field(default_factory=dict)

    def snrs(self) -> list[float]:
        return sorted({snr for snr, _ in self.records})

    def errors(self, snr_db: float, k: int) -> int:
        return self.records[(snr_db, k)][1]

    def ber(self, snr_db: float, k: int) -> float:
        trials, errors = self.records[(snr_db, k)]
        return errors / trials

    def group_ber(self, snr_db: float, receivers: Sequence[int]) -> float:
        """Pooled error rate of a set of receivers at one sweep point."""
        trials = sum(self.records[(snr_db, k)][0] for k in receivers)
        errors = sum(self.records[(snr_db, k)][1] for k in receivers)
        return errors / trials

    def to_csv(self) -> str:
        lines = ["snr_db,receiver,trials,errors,ber"]
        for (snr, k), (trials, errors) in sorted(self.records.items()):
            lines.append(f"{snr:.2f},{k},{trials},{errors},{errors / trials:.6e}")
        return "\n".join(lines) + "\n"


def _batch_rng(spec: ChannelSpec, batch_index: int) -> np.random.Generator:
    key = (_MODEL_KEY[spec.model],
           int(round(spec.snr_db * 1000)) % 2 ** 32,
           batch_index)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(spec.seed, spawn_key=key)))


def run_sweep(m: AirMatrix, plans: Sequence[DecodePlan], specs: Sequence[ChannelSpec],
              trials: int, batch_size: int = DEFAULT_BATCH) -> BerReport:
    """Simulate every sweep point and count per-receiver message errors.

    Per trial: draw a random message vector, encode, push the codeword
    through each receiver's own channel, decode from the estimated symbols
    plus true side-information, and compare with the wanted message.
    Deterministic for fixed (specs, trials, batch_size).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not specs:
        raise ValueError("at least one ChannelSpec is required")
    models = {s.model for s in specs}
    if len(models) > 1:
        raise ValueError(f"one model per sweep, got {sorted(models)}")
    K = m.K
    grid_f = m.grid.astype(np.float32)
    br_idx = [np.array(p.broadcasts, dtype=np.intp) for p in plans]
    gm_idx = [np.array(p.gamma, dtype=np.intp) for p in plans]
    report = BerReport(model=next(iter(models)), trials=trials, groups=grouping_report(plans))
    for spec in specs:
        errors = np.zeros(K, dtype=np.int64)
        done = 0
        batch_index = 0
        while done < trials:
            n = min(batch_size, trials - done)
            rng = _batch_rng(spec, batch_index)
            x = rng.integers(0, 2, size=(n, K), dtype=np.uint8)
            c = ((x.astype(np.float32) @ grid_f) % 2).astype(np.uint8)
            for plan in plans:
                k = plan.k
                c_hat = _estimate(c, spec, rng)  # this receiver's own channel
                est = c_hat[:, br_idx[k]].sum(axis=1, dtype=np.int64)
                if gm_idx[k].size:
                    est += x[:, gm_idx[k]].sum(axis=1, dtype=np.int64)
                errors[k] += int(np.count_nonzero((est & 1) != x[:, k]))
            done += n
            batch_index += 1
        for k in range(K):
            report.records[(float(spec.snr_db), k)] = (trials, int(errors[k]))
    return report
