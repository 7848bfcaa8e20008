"""Command-line entry point: LTL formula in, HOA automaton out."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import List, Optional, TextIO

from .alphabet import AlphabetTooLarge
from .disambiguation import IterationCapExceeded
from .hoa import write_hoa
from .ltl import FormulaSyntaxError
from .pipeline import (
    EMIT_TARGETS,
    PipelineConfig,
    check_translation,
    nba_state_names,
    tgba_state_names,
    translate,
)
from .tgba import CapExceeded

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_LIMIT = 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ubaforge",
        description="Translate LTL formulas into unambiguous Buchi automata (HOA on stdout).",
    )
    p.add_argument("formula", nargs="?", help="formula text; read one per line from stdin if omitted")
    p.add_argument("--prefix", action="store_true", help="input uses prefix syntax")
    p.add_argument("--no-rewrites", action="store_true", help="skip the fairness rewrite rules")
    p.add_argument("--no-heuristic", action="store_true", help="always use the standard split")
    p.add_argument("--no-suspension", action="store_true", help="translate G mu literally")
    p.add_argument(
        "--eager-complements", action="store_true", help="add every complement state up front"
    )
    p.add_argument("--emit", choices=EMIT_TARGETS, default="uba")
    p.add_argument("--max-iterations", type=int, default=None, metavar="N")
    p.add_argument(
        "--check", action="store_true", help="compare the result with the lasso oracle"
    )
    p.add_argument("--stats", action="store_true", help="JSON lines on stderr")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled oracle lassos")
    return p


def config_from_args(args: argparse.Namespace) -> PipelineConfig:
    return PipelineConfig(
        prefix=args.prefix,
        rewrites=not args.no_rewrites,
        heuristic=not args.no_heuristic,
        suspension=not args.no_suspension,
        eager_complements=args.eager_complements,
        emit=args.emit,
        max_iterations=args.max_iterations,
        check=args.check,
        seed=args.seed,
    )


def run_one(text: str, cfg: PipelineConfig, out: TextIO, err: TextIO, stats: bool) -> int:
    try:
        t = translate(text, cfg)
    except FormulaSyntaxError as e:
        print(f"ubaforge: syntax error: {e}", file=err)
        return EXIT_BAD_INPUT
    except AlphabetTooLarge as e:
        print(f"ubaforge: {e}", file=err)
        return EXIT_BAD_INPUT
    except (CapExceeded, IterationCapExceeded) as e:
        print(f"ubaforge: {e}", file=err)
        return EXIT_LIMIT
    if cfg.emit == "vwaa":
        out.write(t.vwaa.dump())
    elif cfg.emit == "tgba":
        write_hoa(t.tgba, out, name=text, state_names=tgba_state_names(t), unambiguous=t.unambiguous)
    else:
        write_hoa(t.nba, out, name=text, state_names=nba_state_names(t), unambiguous=t.unambiguous)
    if stats:
        for s in t.stages:
            print(json.dumps({"formula": text, **asdict(s)}), file=err)
        for rec in t.stats.records:
            print(json.dumps({"formula": text, "stage": "iteration", **asdict(rec)}), file=err)
    if cfg.check:
        report = check_translation(t, seed=cfg.seed)
        if stats:
            print(json.dumps({"formula": text, "stage": "check", **asdict(report)}), file=err)
        if not report.equivalent:
            print(
                f"ubaforge: check failed for {text!r}: lasso {report.counterexample} "
                f"should be {'accepted' if report.expected else 'rejected'}",
                file=err,
            )
            return EXIT_CHECK_FAILED
        if not report.unambiguous:
            print(f"ubaforge: check failed for {text!r}: automaton is ambiguous", file=err)
            return EXIT_CHECK_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    if args.formula is not None:
        texts = [args.formula]
    else:
        texts = [ln.strip() for ln in sys.stdin if ln.strip()]
    status = EXIT_OK
    for text in texts:
        status = max(status, run_one(text, cfg, sys.stdout, sys.stderr, args.stats))
    return status


if __name__ == "__main__":
    sys.exit(main())
