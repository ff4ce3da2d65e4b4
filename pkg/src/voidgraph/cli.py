"""``voidgraph`` command: VoID in, SVG out.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 nothing to draw,
4 input/output failure.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
import tempfile
from dataclasses import dataclass
from typing import IO, List, Optional, Sequence, Tuple

from . import __version__
from .layout import LayoutConfig, LayoutResult
from .pipeline import EmptyModelError, ParseFailure, render
from .svg import Style, format_coord
from .void import DiagramModel

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_EMPTY = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


@dataclass
class CliOptions:
    input: str = "-"
    output: Optional[str] = None
    format: str = "auto"
    base: Optional[str] = None
    seed: int = 42
    iterations: int = 500
    canvas: Tuple[int, int] = (1000, 1000)
    min_radius: float = 20.0
    max_radius: float = 80.0
    padding: float = 10.0
    no_labels: bool = False
    stats: bool = False
    verbose: bool = False
    help: bool = False
    version: bool = False

    def layout_config(self) -> LayoutConfig:
        width, height = self.canvas
        return LayoutConfig(
            canvas_width=float(width),
            canvas_height=float(height),
            seed=self.seed,
            iterations=self.iterations,
            padding=self.padding,
            r_min=self.min_radius,
            r_max=self.max_radius,
        )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _canvas(value: str) -> Tuple[int, int]:
    m = re.fullmatch(r"([0-9]+)x([0-9]+)", value)
    if not m or int(m.group(1)) == 0 or int(m.group(2)) == 0:
        raise argparse.ArgumentTypeError(f"expected WxH with positive integers, got {value!r}")
    return int(m.group(1)), int(m.group(2))


def _seed(value: str) -> int:
    try:
        seed = int(value, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {value!r}") from None
    if not 0 <= seed < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed {value!r} is not a 64-bit unsigned integer")
    return seed


def _positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        number = 0
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}")
    return number


def _length(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        number = float("nan")
    if not number >= 0 or number == float("inf"):
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {value!r}")
    return number


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="voidgraph",
        description="Draw a VoID description (Turtle or N-Triples) as an LOD-cloud-style SVG.",
        add_help=False,
        allow_abbrev=False,
    )
    p.add_argument("input", nargs="?", default="-", help="input file, or - for standard input (default)")
    p.add_argument("-o", "--output", help="output SVG file (default: standard output)")
    p.add_argument("-f", "--format", choices=("turtle", "ntriples", "auto"), default="auto")
    p.add_argument("--base", help="base IRI for resolving relative IRIs")
    p.add_argument("--seed", type=_seed, default=42, help="layout seed (default 42)")
    p.add_argument("--iterations", type=_positive_int, default=500, help="force-directed steps (default 500)")
    p.add_argument("--canvas", type=_canvas, default=(1000, 1000), metavar="WxH", help="layout area (default 1000x1000)")
    p.add_argument("--min-radius", type=_length, default=20.0, help="smallest circle radius (default 20)")
    p.add_argument("--max-radius", type=_length, default=80.0, help="largest circle radius (default 80)")
    p.add_argument("--padding", type=_length, default=10.0, help="gap between circle rims (default 10)")
    p.add_argument("--no-labels", action="store_true", help="omit dataset labels")
    p.add_argument("--stats", action="store_true", help="print a model summary to standard error")
    p.add_argument("-v", "--verbose", action="store_true", help="print warnings")
    p.add_argument("-h", "--help", action="store_true", help="show this help and exit")
    p.add_argument("--version", action="store_true", help="print the version and exit")
    return p


def parse_args(argv: Sequence[str]) -> CliOptions:
    """Turn ``argv`` into :class:`CliOptions`; raises :class:`UsageError` on bad input."""
    ns = build_parser().parse_args(list(argv))
    if ns.min_radius <= 0:
        raise UsageError(f"argument --min-radius: must be positive, got {ns.min_radius:g}")
    if ns.min_radius > ns.max_radius:
        raise UsageError(
            f"argument --min-radius: {ns.min_radius:g} is larger than --max-radius {ns.max_radius:g}"
        )
    return CliOptions(**vars(ns))


def print_stats(model: DiagramModel, layout: LayoutResult, err: IO[str]) -> None:
    print(f"datasets: {len(model.nodes)}", file=err)
    print(f"linksets: {len(model.edges)}", file=err)
    print(f"implicit: {model.implicit_count}", file=err)
    print(f"canvas: {format_coord(layout.bounds.width)}x{format_coord(layout.bounds.height)}", file=err)


def _read_input(path: str, stdin) -> str:
    if path == "-":
        source = getattr(stdin, "buffer", stdin)
        data = source.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".voidgraph-", suffix=".svg", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(options: CliOptions, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    show_warnings = options.verbose or options.stats

    def report(warnings: List[str]) -> None:
        if show_warnings:
            for w in warnings:
                print(f"warning: {w}", file=stderr)

    try:
        text = _read_input(options.input, stdin)
    except UnicodeDecodeError as exc:
        print(f"error: {options.input}: input is not valid UTF-8 ({exc.reason} at byte {exc.start})", file=stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: cannot read {options.input}: {exc.strerror or exc}", file=stderr)
        return EXIT_IO

    hint = None if options.input == "-" else options.input
    try:
        rendering = render(
            text,
            options.format,
            filename_hint=hint,
            base=options.base,
            config=options.layout_config(),
            style=Style(show_labels=not options.no_labels),
        )
    except ParseFailure as exc:
        report([str(w) for w in exc.warnings])
        print(f"error: {exc.diagnostic}", file=stderr)
        return EXIT_PARSE
    except EmptyModelError as exc:
        report(exc.warnings)
        print("error: no datasets found", file=stderr)
        return EXIT_EMPTY

    report(rendering.warnings)
    if options.stats:
        print_stats(rendering.model, rendering.layout, stderr)

    try:
        if options.output is None:
            stdout.write(rendering.text)
            stdout.flush()
        else:
            _write_atomic(options.output, rendering.text)
    except OSError as exc:
        print(f"error: cannot write {options.output or 'standard output'}: {exc.strerror or exc}", file=stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        options = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        parser.print_help(stderr)
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if options.help:
        parser.print_help(stdout)
        return EXIT_OK
    if options.version:
        print(f"voidgraph {__version__}", file=stdout)
        return EXIT_OK
    return run(options, stdin, stdout, stderr)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
