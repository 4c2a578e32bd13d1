"""Command-line front end."""
from __future__ import annotations

import argparse
import csv
import multiprocessing as mp
import sys
import time

from .emit import UnsupportedOutput, emit
from .families import FAMILIES, family
from .formula import format_formula
from .parser import LtlSyntaxError
from .pipeline import InvariantViolation, PipelineConfig, translate
from .randgen import GenConfig, gen_many, load_weights


def _config(args) -> PipelineConfig:
    return PipelineConfig(
        reduce=not args.no_reduce,
        extended_rules=not args.base_rules,
        mode=args.mode,
        vwaa_simplify=args.vwaa_simplify,
        suspend=not args.no_suspend,
        temporal_progress=not args.any_progress,
        acceptance=args.acceptance,
        gf_fastpath=not args.no_gf_fastpath,
        ba_merge=args.ba_merge,
    )


def _read_formulae(args) -> list[str]:
    if args.formula is not None:
        return [args.formula]
    with open(args.file) as fh:
        lines = [ln.strip() for ln in fh]
    return [ln for ln in lines if ln and not ln.startswith("#")]


def cmd_translate(args) -> int:
    cfg = _config(args)
    fmt = args.format or {"vwaa": "dot", "tgba": "hoa", "ba": "never"}[args.stage]
    for text in _read_formulae(args):
        tr = translate(text, cfg, stage=args.stage)
        obj = {"vwaa": tr.vwaa, "tgba": tr.tgba, "ba": tr.ba}[args.stage]
        sys.stdout.write(emit(obj, fmt, text))
        if args.stats:
            if tr.stats is not None:
                st = tr.stats
                print(f"states: {st.states}, transitions: {st.transitions}, "
                      f"deterministic: {'yes' if st.deterministic else 'no'}",
                      file=sys.stderr)
            elif tr.tgba is not None:
                n = sum(len({t for _, t, _ in ts}) for ts in tr.tgba.trans.values())
                print(f"states: {len(tr.tgba.states)}, transitions: {n}, "
                      f"acceptance sets: {len(tr.tgba.acceptance)}", file=sys.stderr)
            else:
                print(f"states: {len(tr.vwaa.states)}", file=sys.stderr)
    return 0


def cmd_family(args) -> int:
    print(format_formula(family(args.name, args.n)))
    return 0


def _size_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None


def cmd_gen(args) -> int:
    weights = None
    if args.weights:
        with open(args.weights) as fh:
            weights = load_weights(fh.read())
    kw = {"weights": weights} if weights is not None else {}
    cfg = GenConfig(size=args.size, props=args.props, seed=args.seed, **kw)
    for f in gen_many(cfg, args.count):
        print(format_formula(f))
    return 0


def _bench_one(name: str, n: int, cfg: PipelineConfig, out) -> None:
    t0 = time.perf_counter()
    st = translate(family(name, n), cfg).stats
    out.put((st.states, st.transitions, st.deterministic,
             (time.perf_counter() - t0) * 1000.0))


def cmd_bench(args) -> int:
    cfg = _config(args)
    ctx = mp.get_context("fork" if "fork" in mp.get_all_start_methods() else "spawn")
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["name", "n", "states", "transitions", "deterministic", "millis"])
    for n in range(1, args.max_n + 1):
        q = ctx.Queue()
        p = ctx.Process(target=_bench_one, args=(args.family, n, cfg, q), daemon=True)
        p.start()
        p.join(args.timeout)
        if p.is_alive():
            p.terminate()
            p.join()
            w.writerow([args.family, n, "", "", "", "timeout"])
            sys.stdout.flush()
            break  # larger n will not be faster
        if q.empty():
            w.writerow([args.family, n, "", "", "", "error"])
            sys.stdout.flush()
            return 2
        states, trans, det, ms = q.get()
        w.writerow([args.family, n, states, trans, int(det), f"{ms:.1f}"])
        sys.stdout.flush()
    return 0


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("pipeline")
    g.add_argument("--mode", choices=("original", "improved"), default="improved")
    g.add_argument("--no-reduce", action="store_true", help="skip formula rewriting")
    g.add_argument("--base-rules", action="store_true",
                   help="rewrite with the classic rule set only")
    g.add_argument("--vwaa-simplify", choices=("off", "basic", "general"), default="general")
    g.add_argument("--no-suspend", action="store_true")
    g.add_argument("--any-progress", action="store_true",
                   help="let any non-M state license suspension, not just temporal ones")
    g.add_argument("--acceptance", choices=("corrected", "original"), default="corrected")
    g.add_argument("--no-gf-fastpath", action="store_true")
    g.add_argument("--ba-merge", choices=("basic", "selfloop"), default="selfloop")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ltlbuchi",
                                 description="Translate LTL formulae to Büchi automata.")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("translate", help="translate a formula")
    src = t.add_mutually_exclusive_group(required=True)
    src.add_argument("-f", dest="formula", metavar="FORMULA")
    src.add_argument("-F", dest="file", metavar="FILE", help="one formula per line")
    _add_pipeline_flags(t)
    t.add_argument("--format", choices=("never", "hoa", "dot"))
    t.add_argument("--stats", action="store_true", help="print sizes to stderr")
    t.add_argument("--stage", choices=("vwaa", "tgba", "ba"), default="ba")
    t.set_defaults(func=cmd_translate)

    f = sub.add_parser("family", help="print a benchmark formula")
    f.add_argument("name", choices=sorted(FAMILIES))
    f.add_argument("n", type=int)
    f.set_defaults(func=cmd_family)

    g = sub.add_parser("gen", help="generate random formulae")
    g.add_argument("--size", type=_size_range, default=(15, 20), metavar="LO..HI")
    g.add_argument("--props", type=int, default=8)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--weights", metavar="FILE", help="JSON or lbtt-style priorities")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time a benchmark family, CSV on stdout")
    b.add_argument("family", choices=sorted(FAMILIES))
    b.add_argument("--max-n", type=int, default=8)
    b.add_argument("--timeout", type=float, default=60.0)
    _add_pipeline_flags(b)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LtlSyntaxError as e:
        print(f"syntax error: {e}", file=sys.stderr)
        return 1
    except InvariantViolation as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 2
    except (UnsupportedOutput, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
