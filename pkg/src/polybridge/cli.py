"""Command-line front end: parse, rename, collect, simplify, emit.

Exit codes: 0 success; 2 lex/parse error; 3 the input is not a polynomial
in the main variable (or has a symbolic exponent / zero denominator);
4 rename collisions, bad options, or I/O failures. Diagnostics go to
stderr only; stdout (or the output file) receives either the complete
result or nothing.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Callable, Sequence, TextIO

from .algebra import (
    AlgebraError,
    MainVarPoly,
    RatFunc,
    collect_main_var,
    normalize,
    simplify,
)
from .emitter import (
    FORMAT_EXPR,
    FORMAT_SCRIPT,
    FORMATS,
    EmitConfig,
    emit_coeff_script,
    emit_coeff_vector,
    emit_expr,
)
from .parser import SourceError, parse, parse_identifier
from .rename import (
    RenameCollision,
    RenameError,
    RenameSpec,
    apply_renames,
    default_greek_map,
    inline_rename_spec,
    load_rename_file,
)

EXIT_OK = 0
EXIT_SYNTAX = 2
EXIT_NOT_POLYNOMIAL = 3
EXIT_USAGE = 4


@dataclass
class CliOptions:
    input: str = "-"
    output: str | None = None
    main_var: str = "x"
    format: str = FORMAT_SCRIPT
    array_name: str = "P"
    greek_defaults: bool = True
    rename_file: str | None = None
    inline_renames: tuple[str, ...] = ()
    simplify_level: int = 1
    show_time: bool = False


class _Timer:
    def __init__(self, enabled: bool, diag: TextIO):
        self.enabled = enabled
        self.diag = diag

    def stage(self, name: str, fn: Callable):
        start = time.perf_counter()
        result = fn()
        if self.enabled:
            elapsed = (time.perf_counter() - start) * 1000.0
            print(f"{name}: {elapsed:.2f} ms", file=self.diag)
        return result


def _line_column(text: str, byte_offset: int) -> tuple[int, int]:
    data = text.encode("utf-8")[:byte_offset]
    line = data.count(b"\n") + 1
    column = byte_offset - (data.rfind(b"\n") + 1) + 1
    return line, column


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _strip_statement_terminator(text: str) -> str:
    # Users paste notebook lines verbatim; one trailing ';' is accepted.
    stripped = text.rstrip()
    if stripped.endswith(";"):
        stripped = stripped[:-1].rstrip()
    return stripped


def _build_specs(options: CliOptions) -> list[RenameSpec]:
    specs: list[RenameSpec] = []
    if options.greek_defaults:
        specs.append(default_greek_map())
    if options.rename_file is not None:
        specs.append(load_rename_file(options.rename_file))
    for rule in options.inline_renames:
        specs.append(inline_rename_spec(rule))
    return specs


def _non_ascii_symbols(values: Sequence[RatFunc]) -> list[str]:
    used: set[str] = set()
    for r in values:
        used.update(r.numerator.symbols)
        used.update(r.denominator.symbols)
    return sorted(s for s in used if not s.isascii())


def run(options: CliOptions) -> int:
    """Execute the full pipeline; returns the process exit code."""
    diag = sys.stderr
    timer = _Timer(options.show_time, diag)
    try:
        cfg = EmitConfig(format=options.format, array_name=options.array_name)
        if options.simplify_level not in (0, 1):
            raise ValueError(f"simplify level must be 0 or 1, got {options.simplify_level!r}")
        if parse_identifier(options.main_var) != options.main_var:
            raise ValueError(f"main variable {options.main_var!r} is not an identifier")
    except ValueError as err:
        print(f"error: {err}", file=diag)
        return EXIT_USAGE

    try:
        text = _strip_statement_terminator(_read_input(options.input))
    except OSError as err:
        print(f"error: cannot read {options.input!r}: {err}", file=diag)
        return EXIT_USAGE

    try:
        tree = timer.stage("parse", lambda: parse(text))
    except SourceError as err:
        line, column = _line_column(text, err.span[0])
        print(f"{err.kind} error at {line}:{column}: {err.message}", file=diag)
        return EXIT_SYNTAX

    try:
        specs = _build_specs(options)
        renamed = timer.stage("rename", lambda: apply_renames(tree, *specs))
    except (RenameError, RenameCollision, OSError) as err:
        print(f"error: {err}", file=diag)
        return EXIT_USAGE

    try:
        if options.format == FORMAT_EXPR:
            value = timer.stage("normalize", lambda: normalize(renamed))
            value = timer.stage(
                "simplify", lambda: simplify(value, options.simplify_level)
            )
            output = timer.stage("emit", lambda: emit_expr(value) + "\n")
            residue = _non_ascii_symbols([value])
            if residue:
                print(
                    "warning: output contains non-ASCII symbols: "
                    + ", ".join(residue),
                    file=diag,
                )
        else:
            collected = timer.stage(
                "collect", lambda: collect_main_var(renamed, options.main_var)
            )
            collected = timer.stage(
                "simplify",
                lambda: MainVarPoly(
                    collected.main_var,
                    tuple(
                        simplify(c, options.simplify_level) for c in collected.coeffs
                    ),
                ),
            )
            residue = _non_ascii_symbols(collected.coeffs)
            if residue:
                print(
                    "error: non-ASCII symbols remain after renaming: "
                    + ", ".join(residue)
                    + " (add --rename rules or use --format expr)",
                    file=diag,
                )
                return EXIT_USAGE
            if options.format == FORMAT_SCRIPT:
                output = timer.stage("emit", lambda: emit_coeff_script(collected, cfg))
            else:
                output = timer.stage(
                    "emit", lambda: emit_coeff_vector(collected, cfg) + "\n"
                )
    except AlgebraError as err:
        location = ""
        if err.span is not None:
            line, column = _line_column(text, err.span[0])
            location = f" at {line}:{column}"
        print(f"error{location}: {err}", file=diag)
        return EXIT_NOT_POLYNOMIAL

    try:
        timer.stage("write", lambda: _write_output(options.output, output))
    except OSError as err:
        print(f"error: cannot write {options.output!r}: {err}", file=diag)
        return EXIT_USAGE
    return EXIT_OK


def _write_output(destination: str | None, output: str) -> None:
    if destination is None:
        sys.stdout.write(output)
        sys.stdout.flush()
    else:
        with open(destination, "w", encoding="utf-8") as fh:
            fh.write(output)


class _ArgumentParser(argparse.ArgumentParser):
    # Bad options are exit code 4 here, not argparse's default 2 (which is
    # reserved for syntax errors in the input expression).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="polybridge",
        description=(
            "Translate a symbolic polynomial expression into a "
            "coefficient-assignment script (leading coefficient first), a "
            "coefficient vector, or an explicit-operator expression."
        ),
    )
    parser.add_argument(
        "input",
        nargs="?",
        default="-",
        metavar="INPUT",
        help="input file, or '-' for stdin (default)",
    )
    parser.add_argument("-o", "--output", help="output file (default: stdout)")
    parser.add_argument(
        "--var", default="x", help="main variable (default: x)"
    )
    parser.add_argument(
        "--format",
        choices=list(FORMATS),
        default=FORMAT_SCRIPT,
        help="output format (default: script)",
    )
    parser.add_argument(
        "--name", default="P", help="target array name (default: P)"
    )
    parser.add_argument(
        "--no-greek-defaults",
        dest="greek_defaults",
        action="store_false",
        help="do not apply the built-in Greek-to-ASCII rename table",
    )
    parser.add_argument(
        "--rename-file", help="file of FROM=TO rename rules (one per line)"
    )
    parser.add_argument(
        "--rename",
        action="append",
        default=[],
        metavar="FROM=TO",
        help="extra rename rule; repeatable, later rules win",
    )
    parser.add_argument(
        "--simplify",
        type=int,
        choices=[0, 1],
        default=1,
        help="coefficient simplification level (default: 1)",
    )
    parser.add_argument(
        "--time",
        dest="show_time",
        action="store_true",
        help="report per-stage wall time on stderr",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_arg_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message (--help exits 0).
        return int(exc.code or 0)

    main_var = parse_identifier(ns.var)
    if main_var is None:
        parser.print_usage(sys.stderr)
        print(f"polybridge: error: --var {ns.var!r} is not an identifier", file=sys.stderr)
        return EXIT_USAGE
    try:
        EmitConfig(format=ns.format, array_name=ns.name)
    except ValueError as err:
        parser.print_usage(sys.stderr)
        print(f"polybridge: error: {err}", file=sys.stderr)
        return EXIT_USAGE

    options = CliOptions(
        input=ns.input,
        output=ns.output,
        main_var=main_var,
        format=ns.format,
        array_name=ns.name,
        greek_defaults=ns.greek_defaults,
        rename_file=ns.rename_file,
        inline_renames=tuple(ns.rename),
        simplify_level=ns.simplify,
        show_time=ns.show_time,
    )
    return run(options)


if __name__ == "__main__":
    raise SystemExit(main())
