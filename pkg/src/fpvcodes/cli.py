"""Command-line interface and the plain-text code-file format.

A code file is a header line followed by one line per generator row:

    # comments and blank lines are allowed anywhere
    ring fpv p 5 n 4
    1:4 0:2 3:2 0:1
    2:1 1:3 1:0 2:0

The header names the ring ("fp" for a prime field, "fpv" for F_p + vF_p),
the prime, and the length.  Field tokens are decimal residues.  Ring
tokens are canonically "a:b" for a + v*b; the input forms "a", "v",
"bv", "a+bv" and "a-bv" are also accepted.  Output always uses "a:b".

Exit codes: 0 success, 1 any error (parse, budget, validation, I/O),
2 usage, 3 internal inconsistency (the two self-duality routes disagree,
which would be a bug).
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass

from .construct import (
    build_self_dual_report,
    construct_from_pair,
    count_self_dual_r_report,
    exists_self_dual,
)
from .fpcodes import (
    CODEWORD_BUDGET,
    SUBSPACE_BUDGET,
    BudgetExceeded,
    FpLinearCode,
    census_self_dual_fp,
    seed_self_dual,
)
from .linalg import FpMatrix, RMatrix
from .primefield import ModulusMismatch, PrimeModulus
from .rcodes import RLinearCode
from .ring import parse_scalar_token

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONSISTENT = 3


class CodeFileError(ValueError):
    """A code file failed to parse; message carries source:line:col."""


@dataclass(frozen=True)
class ParsedCodeFile:
    kind: str  # "fp" or "fpv"
    modulus: PrimeModulus
    n: int
    fp_matrix: FpMatrix | None = None
    r_matrix: RMatrix | None = None


_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"^[+-]?\d+$")


def _scan_tokens(line: str) -> list[tuple[int, str]]:
    """(1-based column, token) pairs with comments stripped."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return [(m.start() + 1, m.group(0)) for m in _TOKEN.finditer(line)]


def parse_code_file(text: str, source: str = "<string>") -> ParsedCodeFile:
    """Parse a code file, raising CodeFileError with position diagnostics."""

    def fail(line: int, col: int, message: str):
        raise CodeFileError(f"{source}:{line}:{col}: {message}")

    header = None
    body: list[tuple[int, list[tuple[int, str]]]] = []
    nlines = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        nlines = lineno
        tokens = _scan_tokens(line)
        if not tokens:
            continue
        if header is None:
            header = (lineno, tokens)
        else:
            body.append((lineno, tokens))
    if header is None:
        fail(max(nlines, 1), 1, "missing header line 'ring <fp|fpv> p <prime> n <length>'")

    hline, htoks = header
    words = [t for _, t in htoks]
    if words[0] != "ring":
        fail(hline, htoks[0][0], f"expected 'ring', got {words[0]!r}")
    if len(words) != 6 or words[2] != "p" or words[4] != "n":
        fail(hline, htoks[0][0], "header must be 'ring <fp|fpv> p <prime> n <length>'")
    kind = words[1]
    if kind not in ("fp", "fpv"):
        fail(hline, htoks[1][0], f"unknown ring {kind!r} (expected 'fp' or 'fpv')")
    if not _INT.match(words[3]):
        fail(hline, htoks[3][0], f"prime must be a decimal integer, got {words[3]!r}")
    try:
        modulus = PrimeModulus(int(words[3]))
    except ValueError as exc:
        fail(hline, htoks[3][0], str(exc))
    if not _INT.match(words[5]) or int(words[5]) < 0:
        fail(hline, htoks[5][0], f"length must be a non-negative integer, got {words[5]!r}")
    n = int(words[5])

    rows = []
    for lineno, tokens in body:
        if len(tokens) != n:
            col = tokens[n][0] if len(tokens) > n else tokens[-1][0]
            fail(lineno, col, f"expected {n} entries per row, got {len(tokens)}")
        row = []
        for col, tok in tokens:
            if kind == "fp":
                if not _INT.match(tok):
                    fail(lineno, col, f"expected a decimal residue, got {tok!r}")
                row.append(int(tok))
            else:
                try:
                    row.append(parse_scalar_token(tok, modulus))
                except ValueError as exc:
                    fail(lineno, col, str(exc))
        rows.append(row)

    if kind == "fp":
        return ParsedCodeFile(kind, modulus, n, fp_matrix=FpMatrix.from_rows(rows, modulus, ncols=n))
    return ParsedCodeFile(kind, modulus, n, r_matrix=RMatrix.from_rows(rows, modulus, ncols=n))


def render_fp_code_file(matrix: FpMatrix, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"ring fp p {matrix.modulus.p} n {matrix.ncols}")
    for row in matrix.data:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def render_r_code_file(matrix: RMatrix, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"ring fpv p {matrix.modulus.p} n {matrix.ncols}")
    for row in matrix.data:
        lines.append(" ".join(f"{int(a)}:{int(b)}" for a, b in row))
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# output helpers


class Reporter:
    """Writes report lines as 'key value...' (machine) or 'key: ...' (text)."""

    def __init__(self, machine: bool):
        self.machine = machine

    def line(self, key: str, *values):
        rendered = " ".join(str(v) for v in values)
        if self.machine:
            print(f"{key} {rendered}" if rendered else key)
        else:
            print(f"{key}: {rendered}" if rendered else key)

    def block(self, text: str):
        sys.stdout.write(text)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _load(path: str) -> ParsedCodeFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CodeFileError(f"{path}: cannot read: {exc.strerror or exc}") from exc
    return parse_code_file(text, source=path)


def _require(parsed: ParsedCodeFile, kind: str, path: str):
    if parsed.kind != kind:
        raise CodeFileError(f"{path}: expected a '{kind}' code file, got '{parsed.kind}'")


def _rcode(parsed: ParsedCodeFile) -> RLinearCode:
    return RLinearCode.from_generator(parsed.r_matrix)


# ----------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    parsed = _load(args.file)
    rep = Reporter(args.format == "machine")
    rep.line("kind", parsed.kind)
    rep.line("p", parsed.modulus.p)
    rep.line("n", parsed.n)
    if parsed.kind == "fp":
        code = FpLinearCode(parsed.fp_matrix)
        rep.line("dim", code.dim)
        rep.line("size", code.size)
        rep.line("self-orthogonal", _yesno(code.is_self_orthogonal()))
        rep.line("self-dual", _yesno(code.is_self_dual()))
        return EXIT_OK
    code = _rcode(parsed)
    sf = code.standard_form()
    rep.line("dim1", code.c1.dim)
    rep.line("dim2", code.c2.dim)
    rep.line("size", code.size)
    rep.line("type", *sf.type_triple)
    rep.line("self-orthogonal", _yesno(code.is_self_orthogonal()))
    by_components = code.is_self_dual()
    by_type = code.is_self_dual_via_type()
    rep.line("self-dual", _yesno(by_components))
    rep.line("self-dual-via-type", _yesno(by_type))
    if by_components != by_type:
        print(
            "error: self-duality routes disagree "
            f"(components={_yesno(by_components)}, type={_yesno(by_type)}); this is a bug",
            file=sys.stderr,
        )
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_dual(args) -> int:
    parsed = _load(args.file)
    rep = Reporter(args.format == "machine")
    if parsed.kind == "fp":
        dual = FpLinearCode(parsed.fp_matrix).dual()
        rep.block(render_fp_code_file(dual.basis, comments=("dual code",)))
    else:
        dual = _rcode(parsed).dual()
        rep.block(render_r_code_file(dual.generator_matrix(), comments=("dual code",)))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    parsed = _load(args.file)
    _require(parsed, "fpv", args.file)
    code = _rcode(parsed)
    rep = Reporter(args.format == "machine")
    rep.block(render_fp_code_file(code.c1.basis, comments=("component at v = 0",)))
    rep.block(render_fp_code_file(code.c2.basis, comments=("component at v = 1",)))
    return EXIT_OK


def _cmd_standard_form(args) -> int:
    parsed = _load(args.file)
    _require(parsed, "fpv", args.file)
    sf = _rcode(parsed).standard_form()
    rep = Reporter(args.format == "machine")
    rep.line("type", *sf.type_triple)
    rep.line("perm", *sf.perm.images)
    rep.block(render_r_code_file(sf.matrix, comments=("standard form of the permuted code",)))
    return EXIT_OK


def _cmd_gray(args) -> int:
    parsed = _load(args.file)
    _require(parsed, "fpv", args.file)
    image = _rcode(parsed).gray_image()
    rep = Reporter(args.format == "machine")
    rep.block(render_fp_code_file(image.basis, comments=("image under v=0/v=1 evaluation",)))
    return EXIT_OK


def _cmd_construct(args) -> int:
    p1 = _load(args.g1)
    p2 = _load(args.g2)
    _require(p1, "fp", args.g1)
    _require(p2, "fp", args.g2)
    report = construct_from_pair(p1.fp_matrix, p2.fp_matrix)
    rep = Reporter(args.format == "machine")
    rep.line("case", report.case_taken)
    rep.line("dim1", report.code.c1.dim)
    rep.line("dim2", report.code.c2.dim)
    rep.block(render_r_code_file(report.generator_used, comments=("stacked generator",)))
    return EXIT_OK


def _cmd_build_selfdual(args) -> int:
    p1 = _load(args.g1)
    p2 = _load(args.g2)
    _require(p1, "fp", args.g1)
    _require(p2, "fp", args.g2)
    report = build_self_dual_report(p1.fp_matrix, p2.fp_matrix)
    rep = Reporter(args.format == "machine")
    rep.line("case", report.case_taken)
    rep.line("self-dual", _yesno(report.code.is_self_dual()))
    rep.block(render_r_code_file(report.generator_used, comments=("stacked generator",)))
    return EXIT_OK


def _cmd_seed(args) -> int:
    code = seed_self_dual(PrimeModulus(args.p), args.n)
    rep = Reporter(args.format == "machine")
    rep.block(render_fp_code_file(code.basis, comments=("seed self-dual code",)))
    return EXIT_OK


def _cmd_exists(args) -> int:
    rep = Reporter(args.format == "machine")
    rep.line("exists", _yesno(exists_self_dual(PrimeModulus(args.p), args.n)))
    return EXIT_OK


def _cmd_count(args) -> int:
    modulus = PrimeModulus(args.p)
    rep = Reporter(args.format == "machine")
    budget = args.budget if args.budget is not None else SUBSPACE_BUDGET
    if args.over == "fp":
        codes = census_self_dual_fp(modulus, args.n, budget=budget)
        rep.line("count", len(codes))
        return EXIT_OK
    pair_budget = args.budget if args.budget is not None else 10**6
    report = count_self_dual_r_report(modulus, args.n, budget=budget, pair_budget=pair_budget)
    rep.line("count", report.count)
    rep.line("field-count", report.field_count)
    rep.line("pairs-verified", _yesno(report.pairs_verified))
    rep.line(
        "exhaustive-count",
        "skipped" if report.exhaustive_count is None else report.exhaustive_count,
    )
    rep.line("paths", ",".join(report.paths))
    return EXIT_OK


# ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpvcodes",
        description="Exact computations with linear codes over F_p and F_p + vF_p (v*v = v).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument(
            "--format",
            choices=("text", "machine"),
            default="text",
            help="text (human labels) or machine (bare 'key value' lines)",
        )
        cmd.add_argument(
            "--budget",
            type=int,
            default=None,
            help="override the enumeration budget for census/counting work",
        )
        cmd.set_defaults(func=func)
        return cmd

    c = add("check", _cmd_check, "report dimensions, type, and self-duality of a code file")
    c.add_argument("file")
    c = add("dual", _cmd_dual, "emit the dual code as a code file")
    c.add_argument("file")
    c = add("decompose", _cmd_decompose, "emit the two component codes of an fpv code")
    c.add_argument("file")
    c = add("standard-form", _cmd_standard_form, "emit the standard form, type, and permutation")
    c.add_argument("file")
    c = add("gray", _cmd_gray, "emit the length-2n field image of an fpv code")
    c.add_argument("file")
    c = add("construct", _cmd_construct, "stack two field generators into an fpv code")
    c.add_argument("g1")
    c.add_argument("g2")
    c = add("build-selfdual", _cmd_build_selfdual, "construct and validate a self-dual fpv code")
    c.add_argument("g1")
    c.add_argument("g2")
    c = add("seed", _cmd_seed, "emit a known self-dual code over F_p of the given length")
    c.add_argument("p", type=int)
    c.add_argument("n", type=int)
    c = add("exists", _cmd_exists, "report whether a self-dual code of this length exists")
    c.add_argument("p", type=int)
    c.add_argument("n", type=int)
    c = add("count", _cmd_count, "count self-dual codes by census (with cross-checks over fpv)")
    c.add_argument("p", type=int)
    c.add_argument("n", type=int)
    c.add_argument("--over", choices=("fp", "fpv"), default="fpv")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CodeFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ModulusMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
