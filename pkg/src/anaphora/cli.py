"""Command-line entry point.

Two subcommands: `resolve` writes one record per anaphor (plus the rule
trace on request); `eval` scores resolutions against gold annotations,
optionally for all five methods side by side.  All outputs are UTF-8 and
byte-deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .corpus import CorpusError, load_document
from .engine import format_points, resolve_document
from .evalharness import (EvalReport, evaluate, render_ablation,
                          render_report, render_report_tsv, run_ablation)
from .lexicon import LexiconError, load_lexicons
from .rules import load_rulepack

LEXICON_ENV_VAR = "ANAPHORA_LEXICON"


def _input_files(path: str) -> list[str]:
    if os.path.isdir(path):
        return [os.path.join(path, name)
                for name in sorted(os.listdir(path)) if name.endswith(".json")]
    return [path]


def _resolve_file(args: tuple[str, str, str | None, int, bool]) -> str:
    """Resolve one corpus file; standalone so worker processes can run it."""
    path, lexicon_dir, manifest, method, trace = args
    lex = load_lexicons(lexicon_dir)
    pack = load_rulepack(manifest)
    doc = load_document(path)
    lines = []
    for resolution in resolve_document(doc, lex, pack, method=method):
        if trace:
            lines.extend(resolution.trace)
        target = resolution.winner_target
        if target is None:
            lines.append(f"{resolution.anaphor_id}\tunresolved\t-")
        else:
            lines.append(f"{resolution.anaphor_id}\t{target.render()}"
                         f"\t{format_points(resolution.winner.total)}")
    return "\n".join(lines)


def _eval_file(args: tuple[str, str, str | None, int, bool]) -> list[EvalReport]:
    path, lexicon_dir, manifest, method, ablation = args
    lex = load_lexicons(lexicon_dir)
    pack = load_rulepack(manifest)
    doc = load_document(path)
    if ablation:
        return run_ablation([doc], lex, pack)
    resolutions = resolve_document(doc, lex, pack, method=method)
    return [evaluate(resolutions, doc, method=method)]


def _map_files(worker, jobs: int, tasks: list):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, tasks))
    return [worker(task) for task in tasks]


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True,
                        help="corpus file or directory of .json documents")
    parser.add_argument("--lexicon",
                        default=os.environ.get(LEXICON_ENV_VAR),
                        help=f"lexicon directory (default: ${LEXICON_ENV_VAR})")
    parser.add_argument("--method", type=int, choices=(1, 2, 3, 4, 5), default=1,
                        help="judging-rule gating method (default 1)")
    parser.add_argument("--rulepack", default=None,
                        help="alternative rule pack manifest file")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers across input files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anaphora",
        description="Resolve demonstratives, personal pronouns and zero pronouns "
                    "in case-structure-annotated documents.")
    sub = parser.add_subparsers(dest="command", required=True)

    resolve_p = sub.add_parser("resolve", help="write one record per anaphor")
    _add_common(resolve_p)
    resolve_p.add_argument("--trace", action="store_true",
                           help="also write per-rule trace lines")
    resolve_p.add_argument("--out", default=None, help="output file (default stdout)")

    eval_p = sub.add_parser("eval", help="score resolutions against gold annotations")
    _add_common(eval_p)
    eval_p.add_argument("--ablation", action="store_true",
                        help="report all five methods side by side")
    eval_p.add_argument("--tsv", default=None,
                        help="also write the machine-readable TSV report here")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.lexicon is None:
        parser.error(f"--lexicon is required (or set ${LEXICON_ENV_VAR})")

    try:
        files = _input_files(args.input)
        if args.command == "resolve":
            tasks = [(path, args.lexicon, args.rulepack, args.method, args.trace)
                     for path in files]
            chunks = [chunk for chunk in _map_files(_resolve_file, args.jobs, tasks) if chunk]
            text = "\n".join(chunks)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(text + ("\n" if text else ""))
            elif text:
                print(text)
            return 0

        tasks = [(path, args.lexicon, args.rulepack, args.method, args.ablation)
                 for path in files]
        per_file = _map_files(_eval_file, args.jobs, tasks)
        if args.ablation:
            methods = (1, 2, 3, 4, 5)
            merged = [EvalReport(method=m) for m in methods]
            for reports in per_file:
                merged = [have.merge(new) for have, new in zip(merged, reports)]
            print(render_ablation(merged))
            combined = merged[0]
        else:
            combined = EvalReport(method=args.method)
            for reports in per_file:
                combined = combined.merge(reports[0])
            if combined.overall[1] == 0:
                print("warning: no gold annotations found in the input",
                      file=sys.stderr)
            print(render_report(combined))
        if args.tsv:
            with open(args.tsv, "w", encoding="utf-8") as handle:
                handle.write(render_report_tsv(combined) + "\n")
        return 0
    except (CorpusError, LexiconError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
