"""Command-line front end.

Verbs: chain, matrix, code, plan, encode, decode, verify, simulate.
Exit codes: 0 success, 1 verification/decode failure, 2 usage error.
The default seed may come from the AIRCODE_SEED environment variable; an
explicit --seed always wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import airmatrix, channel, decoder, encoder, verify
from .chain import build_chain
from .ff import BitVector


def _default_seed() -> int:
    try:
        return int(os.environ.get("AIRCODE_SEED", "0"))
    except ValueError:
        return 0


def _parse_snr_sweep(text: str) -> list[float]:
    """Parse "a:b:step" into the inclusive grid a, a+step, ..., <= b."""
    try:
        a, b, step = (float(tok) for tok in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sweep {text!r}; expected a:b:step")
    if step <= 0 or b < a:
        raise argparse.ArgumentTypeError(f"bad sweep {text!r}; need step > 0 and b >= a")
    values = []
    v = a
    while v <= b + 1e-9:
        values.append(round(v, 6))
        v += step
    return values


def _parse_side(text: str) -> dict[int, int]:
    side = {}
    if not text:
        return side
    for item in text.split(","):
        idx, _, bit = item.partition("=")
        side[int(idx)] = int(bit)
    return side


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aircode",
        description="Scalar-linear index codes for cyclic consecutive side-information",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_kd(p):
        p.add_argument("K", type=int, help="number of messages")
        p.add_argument("D", type=int, help="side-information window size")

    add_kd(sub.add_parser("chain", help="print the division chain and capacity"))
    add_kd(sub.add_parser("matrix", help="print the serialized encoding matrix"))
    add_kd(sub.add_parser("code", help="print the code as per-symbol expressions"))

    p = sub.add_parser("plan", help="print per-receiver decoding plans")
    add_kd(p)
    p.add_argument("--receiver", type=int, default=None, help="restrict to one receiver")
    p.add_argument("--format", choices=("table", "records"), default="table")

    p = sub.add_parser("encode", help="encode a message bitstring")
    add_kd(p)
    p.add_argument("--messages", required=True, help="K-character bitstring; position i is x_i")

    p = sub.add_parser("decode", help="decode one receiver from a codeword")
    add_kd(p)
    p.add_argument("--receiver", type=int, required=True)
    p.add_argument("--codeword", required=True, help="(K-D)-character bitstring")
    p.add_argument("--side", default="", help="side-information as idx=bit,idx=bit,...")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--max-k", type=int, default=20)
    p.add_argument("--fields", default="2,3,5", help="comma-separated primes for rank checks")
    p.add_argument("--vectors", type=int, default=200)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("simulate", help="Monte Carlo BER sweep, CSV output")
    add_kd(p)
    p.add_argument("--channel", choices=("awgn", "rayleigh"), required=True)
    p.add_argument("--snr", type=_parse_snr_sweep, required=True, metavar="A:B:STEP")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True, help="CSV output path")
    return parser


def _cmd_chain(args) -> int:
    c = build_chain(args.K, args.D)
    print(f"K={c.K} D={c.D} N={c.N} l={c.l}")
    print("lambda: " + " ".join(str(v) for v in c.lam))
    print("beta: " + " ".join(str(v) for v in c.beta))
    print(f"capacity: {c.capacity}")
    return 0


def _cmd_matrix(args) -> int:
    m = airmatrix.build_air_matrix(build_chain(args.K, args.D))
    sys.stdout.write(airmatrix.to_text(m))
    return 0


def _cmd_code(args) -> int:
    print(encoder.render_code(build_chain(args.K, args.D)))
    return 0


def _cmd_plan(args) -> int:
    m = airmatrix.build_air_matrix(build_chain(args.K, args.D))
    plans = decoder.all_plans(m)
    if args.receiver is not None:
        if not 0 <= args.receiver < args.K:
            raise ValueError(f"receiver {args.receiver} out of range [0, {args.K - 1}]")
        plans = [plans[args.receiver]]
    if args.format == "records":
        for rec in decoder.plan_records(plans):
            print(json.dumps(rec, sort_keys=True))
    else:
        print(decoder.render_plan_table(plans))
    return 0


def _cmd_encode(args) -> int:
    m = airmatrix.build_air_matrix(build_chain(args.K, args.D))
    x = BitVector.from_string(args.messages)
    print(encoder.encode_matrix(m, x).to_string())
    return 0


def _cmd_decode(args) -> int:
    m = airmatrix.build_air_matrix(build_chain(args.K, args.D))
    plan = decoder.build_plan(m, args.receiver)
    c = BitVector.from_string(args.codeword)
    if len(c) != m.N:
        raise ValueError(f"codeword length {len(c)} != N={m.N}")
    try:
        bit = decoder.decode(plan, c, _parse_side(args.side))
    except ValueError as exc:
        print(f"decode failure: {exc}", file=sys.stderr)
        return 1
    print(bit)
    return 0


def _cmd_verify(args) -> int:
    fields = tuple(int(tok) for tok in args.fields.split(","))
    seed = args.seed if args.seed is not None else _default_seed()
    results = verify.run_all(max_k=args.max_k, fields=fields,
                             vectors=args.vectors, seed=seed)
    failed = False
    for res in results:
        print(res.summary())
        for line in res.failures[:20]:
            print(f"  {line}")
        failed = failed or not res.passed
    print("all suites passed" if not failed else "verification FAILED")
    return 1 if failed else 0


def _cmd_simulate(args) -> int:
    m = airmatrix.build_air_matrix(build_chain(args.K, args.D))
    plans = decoder.all_plans(m)
    seed = args.seed if args.seed is not None else _default_seed()
    specs = [channel.ChannelSpec(model=args.channel, snr_db=snr, seed=seed)
             for snr in args.snr]
    report = channel.run_sweep(m, plans, specs, trials=args.trials)
    with open(args.out, "w") as fh:
        fh.write(report.to_csv())
    groups = " | ".join(
        f"{count} symbol{'s' if count > 1 else ''}: " + " ".join(f"R{k}" for k in ks)
        for count, ks in report.groups)
    print(f"model={args.channel} fading=per-symbol-iid detection=coherent "
          f"csi=perfect seed={seed} trials={args.trials}")
    print(f"groups: {groups}")
    print(f"wrote {args.out} ({len(args.snr)} snr points x {args.K} receivers)")
    return 0


_COMMANDS = {
    "chain": _cmd_chain,
    "matrix": _cmd_matrix,
    "code": _cmd_code,
    "plan": _cmd_plan,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "verify": _cmd_verify,
    "simulate": _cmd_simulate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
