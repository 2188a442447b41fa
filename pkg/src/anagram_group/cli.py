"""Command-line entry point.

Exit status: 0 on success, 1 on usage or input errors, 2 when the run
completed but some dictionary anagram relation is not implied by the
commutators found.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys

from . import report
from .ingest import DictionaryFormatError, load_dictionary
from .pipeline import IterationLimitError, RunConfig, run

EXIT_OK, EXIT_USAGE, EXIT_REFUTED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parallelism(value: str) -> int:
    if value == "auto":
        return os.cpu_count() or 1
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("parallelism must be >= 1 or 'auto'")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="anagram-group",
        description="Compute the commutator presentation of the anagram group of a word list.",
    )
    p.add_argument("--dict", dest="dict_path", required=True, help="word list, one word per line")
    p.add_argument("--sanitize", choices=("strict", "lenient"), default="strict")
    p.add_argument("--presentation", metavar="PATH", help="write the presentation ('-' for stdout)")
    p.add_argument("--presentation-format", choices=("text", "json"))
    p.add_argument("--witnesses", metavar="PATH", help="write the witness table")
    p.add_argument("--witness-format", choices=("csv", "text"))
    p.add_argument("--progress", metavar="PATH", help="write per-iteration statistics")
    p.add_argument("--progress-format", choices=("csv", "text"))
    p.add_argument("--verification", metavar="PATH", help="write the verification report")
    p.add_argument("--verification-format", choices=("text", "json"))
    p.add_argument("--dump-store", metavar="PATH", help="write the residual anagraph store as JSON")
    p.add_argument("--max-iterations", type=int, default=50)
    p.add_argument("--scan-rule", choices=("admissible", "general"), default="admissible")
    p.add_argument("--residual", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--parallelism", type=_parallelism, default=1, metavar="N|auto")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _format(path: str, explicit, by_ext: dict, default: str) -> str:
    if explicit:
        return explicit
    ext = os.path.splitext(path)[1].lower()
    return by_ext.get(ext, default)


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    outputs = [o for o in (args.presentation, args.witnesses, args.progress,
                           args.verification, args.dump_store) if o and o != "-"]
    if len(outputs) != len(set(outputs)):
        parser.error("output paths must be distinct")
    if args.max_iterations < 1:
        parser.error("--max-iterations must be positive")

    try:
        d = load_dictionary(args.dict_path, args.sanitize)
    except (OSError, DictionaryFormatError) as exc:
        print(f"anagram-group: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not d.words:
        print(f"anagram-group: {args.dict_path}: no words", file=sys.stderr)
        return EXIT_USAGE

    config = RunConfig(
        max_iterations=args.max_iterations,
        residual=args.residual,
        verify=args.verify,
        workers=args.parallelism,
        scan_rule=args.scan_rule,
    )
    try:
        result = run(d, config)
    except IterationLimitError as exc:
        print(f"anagram-group: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.presentation or not any((args.witnesses, args.progress, args.verification, args.dump_store)):
        path = args.presentation or "-"
        fmt = _format(path, args.presentation_format, {".json": "json"}, "text")
        _write(path, report.emit_presentation(result, fmt))
    if args.witnesses:
        fmt = _format(args.witnesses, args.witness_format, {".csv": "csv"}, "csv" if args.witnesses != "-" else "text")
        _write(args.witnesses, report.emit_witness_table(result, fmt))
    if args.progress:
        fmt = _format(args.progress, args.progress_format, {".csv": "csv"}, "csv" if args.progress != "-" else "text")
        _write(args.progress, report.emit_progress(result, fmt))
    if args.verification:
        fmt = _format(args.verification, args.verification_format, {".json": "json"}, "text")
        _write(args.verification, report.emit_verification(result, fmt))
    if args.dump_store:
        _write(args.dump_store, result.residual_buckets.to_json(indent=1) + "\n")

    v = result.verification
    if v is not None and not v.all_relations_implied:
        print(f"anagram-group: {len(v.failing_pairs)} anagram relations not implied by the "
              f"{len(result.commutators)} commutators found", file=sys.stderr)
        return EXIT_REFUTED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
