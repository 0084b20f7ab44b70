"""Command-line surface: construct series, verify identities, export.

Exit codes: 0 when the requested identity holds or output was produced,
1 when a mathematical defect was found, 2 for usage or parse errors.
Identical flags produce byte-identical output; the KVLIE_THREADS
environment variable caps the workers used for per-degree defect checks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import (
    XY,
    NCPoly,
    PolyParseError,
    default_alphabet,
    parse_poly,
    to_json_terms,
    to_latex,
    to_text,
)
from .lyndon import lyndon_words, witt_dimension
from .idempotents import psi
from .kv import (
    KvSolutionPair,
    bch_eulerian,
    bch_oracle,
    f0,
    general_solution,
    homogeneous_solution,
    multilinear_particular_solution,
    particular_solution,
    verify_homogeneous,
    verify_kv1,
    verify_multilinear,
    verify_split,
)
from .scalars import parse_rational
from .series import GradedSeries

MAX_UNFORCED_DEGREE = 11
EXIT_OK = 0
EXIT_DEFECT = 1
EXIT_USAGE = 2


@dataclass
class CliConfig:
    command: str
    degree: int
    variables: int
    format: str
    output: str | None
    parallelism: int


def _parallelism_hint() -> int:
    raw = os.environ.get("KVLIE_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"kvlie: invalid KVLIE_THREADS value {raw!r}")
    return max(1, value)


def _render_poly(p: NCPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json_terms(p), separators=(",", ":"))
    if fmt == "latex":
        return to_latex(p)
    return to_text(p)


def _render_series(s: GradedSeries, fmt: str) -> str:
    return _render_poly(s.to_poly(), fmt)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _check_degree(n: int, force: bool) -> None:
    if n < 1:
        raise SystemExit("kvlie: --degree must be >= 1")
    if n > MAX_UNFORCED_DEGREE and not force:
        raise SystemExit(
            f"kvlie: degree {n} exceeds {MAX_UNFORCED_DEGREE}; permutation sums grow "
            "factorially, pass --force to proceed"
        )


def _defect_lines(defect: GradedSeries, workers: int) -> list[str]:
    """Per-degree defect report; degrees are checked independently."""
    alphabet = defect.alphabet

    def one(d: int) -> list[str]:
        comp = defect.parts[d]
        return [
            f"defect at degree {d}: {alphabet.word_text(w)} coefficient {c}"
            for w, c in comp.sorted_terms()
        ]

    degrees = range(len(defect.parts))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(one, degrees))
    else:
        chunks = [one(d) for d in degrees]
    return [line for chunk in chunks for line in chunk]


def _parse_expr(text: str, alphabet=XY) -> NCPoly:
    try:
        return parse_poly(alphabet, text)
    except PolyParseError as exc:
        raise SystemExit(f"kvlie: cannot parse polynomial: {exc}")


def _cmd_bch(args, config: CliConfig) -> int:
    if args.method in ("eulerian", "both"):
        left = bch_eulerian(config.degree, config.variables)
    if args.method in ("oracle", "both"):
        right = bch_oracle(config.degree, config.variables)
    if args.method == "both":
        diff = left.series - right.series
        lines = _defect_lines(diff, config.parallelism)
        _emit("\n".join(lines), config.output)
        return EXIT_OK if diff.is_zero() else EXIT_DEFECT
    series = left if args.method == "eulerian" else right
    _emit(_render_poly(series.component(config.degree), config.format), config.output)
    return EXIT_OK


def _cmd_f0(args, config: CliConfig) -> int:
    _emit(_render_series(f0(config.degree), config.format), config.output)
    return EXIT_OK


def _cmd_verify(args, config: CliConfig) -> int:
    n = config.degree
    if args.equation == "kv1":
        if args.kernel_poly:
            p = _parse_expr(args.kernel_poly)
            pair = general_solution(p, order=n)
        else:
            pair = particular_solution(n)
        defect = verify_kv1(pair, n)
    elif args.equation == "split":
        defect = verify_split(f0(n), n)
    elif args.equation == "homogeneous":
        if not args.kernel_poly:
            raise SystemExit("kvlie: --equation homogeneous requires --kernel-poly")
        p = _parse_expr(args.kernel_poly)
        try:
            pair = homogeneous_solution(p, order=n)
        except ValueError as exc:
            raise SystemExit(f"kvlie: {exc}")
        defect = verify_homogeneous(pair, n)
    elif args.equation == "multilinear":
        k = config.variables if config.variables > 2 else 3
        solutions = multilinear_particular_solution(k, n)
        defect = verify_multilinear(solutions, n)
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(f"kvlie: unknown equation {args.equation!r}")
    if defect.is_zero():
        _emit(
            f"verified: {args.equation} defect vanishes through degree {n}",
            config.output,
        )
        return EXIT_OK
    lines = _defect_lines(defect, config.parallelism)
    _emit(lines[0], config.output)
    return EXIT_DEFECT


def _cmd_solution(args, config: CliConfig) -> int:
    p = _parse_expr(args.kernel_poly) if args.kernel_poly else NCPoly.zero(XY)
    lam1 = parse_rational(args.lambda1)
    lam2 = parse_rational(args.lambda2)
    pair = general_solution(p, lam1, lam2, config.degree)
    defect = verify_kv1(pair, config.degree)
    if config.format == "json":
        payload = {
            "F": to_json_terms(pair.F.to_poly()),
            "G": to_json_terms(pair.G.to_poly()),
        }
        body = json.dumps(payload, separators=(",", ":"))
    else:
        render = to_latex if config.format == "latex" else to_text
        body = f"F = {render(pair.F.to_poly())}\nG = {render(pair.G.to_poly())}"
    _emit(body, config.output)
    if not defect.is_zero():
        first = _defect_lines(defect, config.parallelism)[0]
        print(f"kvlie: self-verification failed: {first}", file=sys.stderr)
        return EXIT_DEFECT
    return EXIT_OK


def _cmd_witt(args, config: CliConfig) -> int:
    k = config.variables
    rows = []
    for n in range(1, config.degree + 1):
        dim = witt_dimension(k, n)
        count = len(lyndon_words(k, n))
        rows.append((n, dim, count))
    if config.format == "json":
        body = json.dumps(
            [
                {"degree": n, "dimension": dim, "lyndon_words": count}
                for n, dim, count in rows
            ],
            separators=(",", ":"),
        )
    else:
        body = "\n".join(
            f"degree {n}: dimension {dim}, lyndon words {count}" for n, dim, count in rows
        )
    _emit(body, config.output)
    return EXIT_OK


def _cmd_psi(args, config: CliConfig) -> int:
    p = _parse_expr(args.poly)
    if args.var not in XY.letters:
        raise SystemExit(f"kvlie: --var must be one of {'/'.join(XY.letters)}")
    _emit(_render_poly(psi(p, args.var), config.format), config.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kvlie",
        description="Free Lie algebra engine for the first Kashiwara-Vergne equation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, degree_default: int = 8) -> None:
        p.add_argument("--degree", type=int, default=degree_default,
                       help=f"working degree (default {degree_default})")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.add_argument("--output", default=None, help="write to this path instead of stdout")
        p.add_argument("--force", action="store_true",
                       help=f"allow degrees above {MAX_UNFORCED_DEGREE}")

    p_bch = sub.add_parser("bch", help="Baker-Campbell-Hausdorff component at a degree")
    common(p_bch)
    p_bch.add_argument("--method", choices=("eulerian", "oracle", "both"), default="eulerian")
    p_bch.add_argument("--vars", type=int, default=2, help="number of generators")

    p_f0 = sub.add_parser("f0", help="particular solution F0 through a degree")
    common(p_f0)

    p_verify = sub.add_parser("verify", help="check an identity; exit 1 on any defect")
    common(p_verify)
    p_verify.add_argument("--equation", choices=("kv1", "split", "homogeneous", "multilinear"),
                          required=True)
    p_verify.add_argument("--kernel-poly", default=None,
                          help="polynomial expression, e.g. '1/2*xy + 1/2*yx'")
    p_verify.add_argument("--vars", type=int, default=2)

    p_sol = sub.add_parser("solution", help="general solution attached to a polynomial")
    common(p_sol)
    p_sol.add_argument("--kernel-poly", default=None)
    p_sol.add_argument("--lambda1", default="0")
    p_sol.add_argument("--lambda2", default="0")

    p_witt = sub.add_parser("witt", help="free Lie algebra dimensions per degree")
    common(p_witt)
    p_witt.add_argument("--vars", type=int, default=2)

    p_psi = sub.add_parser("psi", help="apply the kernel projection map")
    common(p_psi)
    p_psi.add_argument("--var", required=True)
    p_psi.add_argument("--poly", required=True)

    return parser


_HANDLERS = {
    "bch": _cmd_bch,
    "f0": _cmd_f0,
    "verify": _cmd_verify,
    "solution": _cmd_solution,
    "witt": _cmd_witt,
    "psi": _cmd_psi,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = CliConfig(
            command=args.command,
            degree=args.degree,
            variables=getattr(args, "vars", 2),
            format=args.format,
            output=args.output,
            parallelism=_parallelism_hint(),
        )
        _check_degree(config.degree, args.force)
        if config.variables < 2:
            raise SystemExit("kvlie: --vars must be >= 2")
        return _HANDLERS[args.command](args, config)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        raise


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
