"""Command-line interface: every operation with JSON output, batch sweeps,
and reproducible run manifests.

Commands: eval, lambda, rank, bound, probe, lchi, verify, sweep, infer-a.
Exit codes: 0 success, 2 usage error, 3 computational error.  Identical
invocations produce byte-identical output when --no-timing is passed (the
manifest otherwise carries wall-clock timing).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from math import gcd

from . import __version__
from .cyclotomic import AbelianFieldDesc, dirichlet_characters, euler_phi
from .errors import ComputationError
from .hurwitz import hurwitz_zeta, l_one_chi
from .lambda_exact import infer_A, lambda_exact, verify_strong_identity
from .precision import PrecisionContext
from .relations import PROBE_SET_NAMES, probe_set
from .spaces import arithmetic_space_rank, certified_milnor_lower_bound

USAGE_EXIT = 2
COMPUTE_EXIT = 3


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(obj) -> str:
    return hashlib.sha256(_canonical(obj).encode()).hexdigest()


def _parse_field(text: str) -> AbelianFieldDesc:
    try:
        mod_part, gen_part = text.split(":", 1)
        modulus = int(mod_part)
        gens = [int(g) for g in gen_part.split(",") if g]
        return AbelianFieldDesc.from_generators(modulus, gens or [1])
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(
            f"field must look like 'm:h1,h2,...' (got {text!r}): {exc}"
        )


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like 'a..b' or 'n' (got {text!r})")


def _emit(args, command: str, params: dict, result, stream=sys.stdout) -> None:
    manifest = {
        "command": command,
        "params": params,
        "digits": getattr(args, "digits", None),
        "version": __version__,
        "digest": _digest(result),
    }
    if not args.no_timing:
        manifest["elapsed_ms"] = round((time.perf_counter() - args._t0) * 1000, 3)
    payload = {"manifest": manifest, "result": result}
    if args.pretty:
        stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        stream.write(_canonical(payload) + "\n")


def _structured_error(args, command: str, exc: Exception, stream=sys.stdout) -> int:
    payload = {
        "error": {"type": type(exc).__name__, "message": str(exc)},
        "command": command,
        "version": __version__,
    }
    if args.pretty:
        stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        stream.write(_canonical(payload) + "\n")
    return COMPUTE_EXIT


# ---------------------------------------------------------------------------
# per-command handlers: return the result object (JSON-ready)
# ---------------------------------------------------------------------------

def _cmd_eval(args, ctx):
    return hurwitz_zeta(args.k, args.a, args.q, ctx).to_json(args.digits)


def _cmd_lambda(args, _ctx):
    return lambda_exact(args.k, args.a, args.q).to_json()


def _rank_result(k: int, q: int, fld: AbelianFieldDesc) -> dict:
    return {
        "k": k,
        "q": q,
        "field": fld.to_json(),
        "rank": arithmetic_space_rank(k, q, fld),
        "half_totient": euler_phi(q) // 2,
    }


def _cmd_rank(args, _ctx):
    return _rank_result(args.k, args.q, args.field)


def _cmd_bound(args, _ctx):
    return certified_milnor_lower_bound(args.k, args.q, args.field).to_json()


def _cmd_probe(args, ctx):
    return probe_set(args.set, args.k, args.q, args.max_norm, ctx).to_json()


def _cmd_lchi(args, ctx):
    chars = dirichlet_characters(args.q)
    if args.index is not None:
        if not 0 <= args.index < len(chars):
            raise ValueError(f"character index out of range (0..{len(chars) - 1})")
        chosen = [chars[args.index]]
    else:
        chosen = [c for c in chars if not c.is_principal]
    records = []
    for chi in chosen:
        records.append(
            {"character": chi.to_json(), "l_value": l_one_chi(chi, ctx).to_json(args.digits)}
        )
    return records


def _cmd_verify(args, ctx):
    residual = verify_strong_identity(args.k, args.a, args.q, ctx)
    return {"k": args.k, "a": args.a, "q": args.q, "residual": residual.to_json(args.digits)}


def _cmd_infer_a(args, _ctx):
    scale = infer_A(args.k, args.q)
    return {
        "k": args.k,
        "q": args.q,
        "A": str(scale),
        "residues_verified": [a for a in range(1, args.q) if gcd(a, args.q) == 1],
    }


def _sweep_record(command: str, k: int, q: int, args, ctx):
    if command == "rank":
        return _rank_result(k, q, args.field)
    if command == "bound":
        return certified_milnor_lower_bound(k, q, args.field).to_json()
    if command == "infer-a":
        return {"A": str(infer_A(k, q))}
    if command == "verify":
        worst = None
        count = 0
        for a in range(1, q):
            if gcd(a, q) != 1:
                continue
            res = verify_strong_identity(k, a, q, ctx)
            bound = res.value + res.error_bound
            if worst is None or bound > worst:
                worst = bound
            count += 1
        import mpmath as mp

        return {"pairs_checked": count, "max_residual": mp.nstr(worst, 8) if count else "0"}
    raise ValueError(f"unknown sweep command {command!r}")


def _cmd_sweep(args, ctx) -> int:
    failed = False
    for k in args.k_range:
        for q in args.q_range:
            record: dict = {"k": k, "q": q}
            try:
                record["result"] = _sweep_record(args.command_name, k, q, args, ctx)
            except (ComputationError, ValueError, ZeroDivisionError) as exc:
                record["error"] = {"type": type(exc).__name__, "message": str(exc)}
                failed = True
            sys.stdout.write(_canonical(record) + "\n")
    return COMPUTE_EXIT if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzlab",
        description="exact and certified-precision computations with Hurwitz zeta values",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=50, help="decimal precision (default 50)")
    common.add_argument("--json", action="store_true", help="compact JSON output (default)")
    common.add_argument("--pretty", action="store_true", help="indented human-readable output")
    common.add_argument(
        "--no-timing", action="store_true", help="omit timing for byte-identical reruns"
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="Hurwitz zeta value zeta(k, a/q)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("lambda", parents=[common], help="exact normalized pair combination")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("rank", parents=[common], help="exact rank of the pair-sum span")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--field", type=_parse_field, default=AbelianFieldDesc.rationals())

    p = sub.add_parser("bound", parents=[common], help="certified dimension bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--field", type=_parse_field, default=AbelianFieldDesc.rationals())

    p = sub.add_parser("probe", parents=[common], help="integer-relation probe of a named set")
    p.add_argument("--set", required=True, choices=PROBE_SET_NAMES)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-norm", type=int, default=10 ** 6)

    p = sub.add_parser("lchi", parents=[common], help="L(1, chi) for characters mod q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--index", type=int, default=None, help="single character index")

    p = sub.add_parser("verify", parents=[common], help="numeric check of the pair identity")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("infer-a", parents=[common], help="rational scale of the Bernoulli sum")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("sweep", parents=[common], help="batch a command over (k, q) ranges")
    p.add_argument("--command", dest="command_name", required=True,
                   choices=("rank", "verify", "infer-a", "bound"))
    p.add_argument("--k-range", type=_parse_range, required=True)
    p.add_argument("--q-range", type=_parse_range, required=True)
    p.add_argument("--field", type=_parse_field, default=AbelianFieldDesc.rationals())

    return parser


_HANDLERS = {
    "eval": _cmd_eval,
    "lambda": _cmd_lambda,
    "rank": _cmd_rank,
    "bound": _cmd_bound,
    "probe": _cmd_probe,
    "lchi": _cmd_lchi,
    "verify": _cmd_verify,
    "infer-a": _cmd_infer_a,
}


def _usage_checks(parser: argparse.ArgumentParser, args) -> None:
    if args.command in ("eval", "verify"):
        if args.q < 1 or args.a < 1 or args.a > args.q:
            parser.error(f"need 1 <= a <= q (got a={args.a}, q={args.q})")
    if args.command == "lambda":
        if args.q < 3 or not (1 <= args.a <= args.q - 1):
            parser.error(f"need q >= 3 and 1 <= a <= q-1 (got a={args.a}, q={args.q})")
        if gcd(args.a, args.q) != 1:
            parser.error(f"a={args.a} must be coprime to q={args.q}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.perf_counter()
    _usage_checks(parser, args)
    try:
        ctx = PrecisionContext(digits=args.digits)
    except ValueError as exc:
        parser.error(str(exc))
    if args.command == "sweep":
        return _cmd_sweep(args, ctx)
    params = {
        key: (value.to_json() if isinstance(value, AbelianFieldDesc) else value)
        for key, value in vars(args).items()
        if key not in ("command", "pretty", "json", "no_timing", "_t0", "digits")
        and value is not None
    }
    try:
        result = _HANDLERS[args.command](args, ctx)
    except (ComputationError, ValueError, ZeroDivisionError) as exc:
        return _structured_error(args, args.command, exc)
    _emit(args, args.command, params, result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
