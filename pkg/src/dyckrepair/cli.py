"""Command-line entry point (``dyckrepair`` / ``python -m dyckrepair``).

Exit codes: 0 success, 2 bad input or usage, 3 size cap exceeded,
4 internal invariant violated.
"""
from __future__ import annotations

import argparse
import sys

from . import bench as benchmod
from . import memcheck, randomwalk
from .core import (apply_script, is_well_formed, parse_compact, parse_tokens,
                   render_compact, render_script, render_tokens)
from .errors import BadParams, ParseError, TooLarge, WindowOverlap
from .generate import gen_instance
from .oracle import DEFAULT_CAP, dyck_deletion_dp, dyck_edit_dp
from .phased import epsilon_mode, repair_phased
from .randomdel import repair_random
from .refined import repair_refined
from .rng import MASK64, substream

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_INVARIANT = 0, 2, 3, 4


class InvariantViolation(RuntimeError):
    pass


def u64(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v <= MASK64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _parse(text: str, fmt: str, alphabet_size):
    if fmt == "tokens":
        return parse_tokens(text, alphabet_size)
    return parse_compact(text, alphabet_size)


def _render(p, fmt: str) -> str:
    return render_tokens(p) if fmt == "tokens" else render_compact(p)


def cmd_repair(args, out):
    p = _parse(_read(args.file), args.format, args.alphabet_size)
    if args.epsilon is not None and args.algo != "phased":
        raise BadParams("--epsilon applies to --algo phased only")
    if args.algo == "random":
        res = repair_random(p, seed=args.seed, iterations=args.iters)
    elif args.algo == "refined":
        res = repair_refined(p, seed=args.seed, iterations=args.iters,
                             whole_run_repeats=args.whole_run_repeats)
    elif args.epsilon is not None:
        res = epsilon_mode(p, seed=args.seed, epsilon=args.epsilon)
    else:
        res = repair_phased(p, seed=args.seed, iterations=args.iters)
    if not is_well_formed(res.repaired) or apply_script(p, res.script) != res.repaired:
        raise InvariantViolation("repair produced an inconsistent result")
    out.write(f"cost {res.cost}\n")
    out.write(_render(res.repaired, args.format) + "\n")
    if args.emit_script:
        out.write(render_script(res.script, args.format, p.names))


def cmd_exact(args, out):
    p = _parse(_read(args.file), args.format, args.alphabet_size)
    if args.deletion_only:
        cost = dyck_deletion_dp(p, cap=args.cap)
    else:
        cost = dyck_edit_dp(p, cap=args.cap).cost
    out.write(f"cost {cost}\n")


def cmd_validate(args, out):
    p = _parse(_read(args.file), args.format, args.alphabet_size)
    out.write("well-formed\n" if is_well_formed(p) else "not well-formed\n")


def cmd_transcript(args, out):
    t = memcheck.parse_transcript(_read(args.file), args.lang)
    if args.action == "validate":
        out.write("valid\n" if memcheck.validate(t) else "invalid\n")
        return
    res = memcheck.repair(t, seed=args.seed, algo=args.algo, iterations=args.iters)
    if not memcheck.validate(res.transcript):
        raise InvariantViolation("repaired transcript does not validate")
    out.write(f"cost {res.cost}\n")
    out.write("deleted " + " ".join(str(i) for i in res.deleted) + "\n")
    out.write(memcheck.render_transcript(res.transcript))


def cmd_gen(args, out):
    p, _ = gen_instance(args.n, args.s, args.k, substream(args.seed))
    fmt = args.format or ("compact" if args.s <= 4 else "tokens")
    out.write(_render(p, fmt) + "\n")


def cmd_gen_transcript(args, out):
    t = memcheck.gen_transcript(args.lang, args.n, args.k, substream(args.seed),
                                keys=args.keys)
    out.write(memcheck.render_transcript(t))


def cmd_bench(args, out):
    cfg = benchmod.parse_config(_read(args.config))
    if args.workers is not None:
        cfg = benchmod.BenchConfig(**{**cfg.__dict__, "workers": args.workers})
    text = benchmod.to_csv(benchmod.bench(cfg))
    if args.out in (None, "-"):
        out.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_rw(args, out):
    if args.what == "pmf":
        if args.table:
            out.write("D,pmf\n")
            for D in range(1, args.steps + 1):
                out.write(f"{D},{randomwalk.hitting_pmf(args.d, D):.17g}\n")
        else:
            out.write(f"{randomwalk.hitting_pmf(args.d, args.steps):.17g}\n")
    elif args.what == "window":
        lo = args.d * args.d if args.lo is None else args.lo
        hi = 2 * args.d * args.d if args.hi is None else args.hi
        out.write(f"{randomwalk.window_prob(args.d, lo, hi):.17g}\n")
    else:
        counts, censored = randomwalk.simulate(args.d, args.cap, args.trials,
                                               substream(args.seed))
        out.write("D,count,empirical,pmf\n")
        for D in range(1, args.cap + 1):
            out.write(f"{D},{counts[D]},{counts[D] / args.trials:.6g},"
                      f"{randomwalk.hitting_pmf(args.d, D):.6g}\n")
        out.write(f"censored,{censored},{censored / args.trials:.6g},\n")


def _string_input(sp):
    sp.add_argument("--format", choices=("compact", "tokens"), default="compact")
    sp.add_argument("--alphabet-size", type=int, default=None,
                    help="declared number of types; larger types are a parse error")
    sp.add_argument("file", help="input file, or - for stdin")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dyckrepair",
                                 description="Edit distance to balanced parenthesis strings.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("repair", help="approximate repair")
    sp.add_argument("--algo", choices=("random", "refined", "phased"), required=True)
    sp.add_argument("--seed", type=u64, required=True)
    sp.add_argument("--iters", type=int, default=None)
    sp.add_argument("--epsilon", type=float, default=None)
    sp.add_argument("--whole-run-repeats", action="store_true")
    sp.add_argument("--emit-script", action="store_true")
    _string_input(sp)
    sp.set_defaults(func=cmd_repair)

    sp = sub.add_parser("exact", help="exact distance by dynamic programming")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--deletion-only", action="store_true")
    _string_input(sp)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("validate", help="check well-formedness")
    _string_input(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("transcript", help="validate or repair a transcript")
    sp.add_argument("action", choices=("validate", "repair"))
    sp.add_argument("--lang", choices=[l.value for l in memcheck.Language], required=True)
    sp.add_argument("--seed", type=u64, default=0)
    sp.add_argument("--algo", choices=("random", "refined", "phased"), default="random")
    sp.add_argument("--iters", type=int, default=None)
    sp.add_argument("file")
    sp.set_defaults(func=cmd_transcript)

    sp = sub.add_parser("gen", help="planted random instance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--seed", type=u64, required=True)
    sp.add_argument("--format", choices=("compact", "tokens"), default=None)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("gen-transcript", help="planted random transcript")
    sp.add_argument("--lang", choices=[l.value for l in memcheck.Language], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--seed", type=u64, required=True)
    sp.add_argument("--keys", type=int, default=3)
    sp.set_defaults(func=cmd_gen_transcript)

    sp = sub.add_parser("bench", help="benchmark grid to CSV")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out", default=None)
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("rw", help="random-walk hitting times")
    rw = sp.add_subparsers(dest="what", required=True)
    q = rw.add_parser("pmf")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--steps", type=int, required=True)
    q.add_argument("--table", action="store_true", help="CSV for every D up to --steps")
    q = rw.add_parser("window")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--lo", type=int, default=None)
    q.add_argument("--hi", type=int, default=None)
    q = rw.add_parser("simulate")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--trials", type=int, required=True)
    q.add_argument("--seed", type=u64, required=True)
    q.add_argument("--cap", type=int, default=50)
    sp.set_defaults(func=cmd_rw)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (ParseError, BadParams, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvariantViolation, WindowOverlap) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK
