"""Command-line interface: classify a JSON file and print the taxonomy.

Output is plain UTF-8, one qualifier per line followed by the acronym
line, newline-terminated and pipe-friendly. Exit codes: 0 success,
1 invalid or unreadable input, 2 usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .model import DocumentSyntaxError
from .parsing import parse_bytes
from .report import build_report, serialize_report
from .taxonomy import NO_ACRONYM_STRUCTURAL, classify

# JSON_TAXONOMY_NO_COLOR is reserved for forward compatibility; output
# is currently never colored, so the variable is read by no code path.


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="json-taxonomy",
        description=(
            "Analyze a JSON document and print its taxonomy qualifiers "
            "(size tier, content type, redundancy, nesting)."
        ),
    )
    parser.add_argument("path", help="path to a JSON document, or - for stdin")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument(
        "--report",
        action="store_true",
        help="print the full analysis report as JSON instead of the qualifiers",
    )
    mode.add_argument(
        "--acronym",
        action="store_true",
        help="print only the four-letter acronym",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    return parser


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as handle:
        return handle.read()


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)

    try:
        data = _read_input(args.path)
    except OSError as exc:
        print(f"{args.path}: {exc.strerror or exc}", file=sys.stderr)
        return 1

    try:
        root = parse_bytes(data)
    except DocumentSyntaxError as exc:
        failure = exc.failure
        print(
            f"{args.path}:{failure.line}:{failure.column}: {failure.message}",
            file=sys.stderr,
        )
        return 1

    if args.report:
        print(serialize_report(build_report(root)))
        return 0

    label = classify(root)
    acronym_line = label.acronym if label.acronym is not None else NO_ACRONYM_STRUCTURAL
    if args.acronym:
        print(acronym_line)
        return 0

    for qualifier in label.qualifiers:
        print(qualifier)
    print(acronym_line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
