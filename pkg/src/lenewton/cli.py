"""Command-line front-end.

Exit codes: 0 success, 1 usage or input error, 2 computation error (including
a failed consistency check), 3 ``compare`` verdict FAIL.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

from .errors import InputError, LeNewtonError
from .geometry import compact_faces
from .lenumbers import compare, run
from .newton import DEFAULT_HORIZON, decomposition_table, newton_number
from .poly import Polynomial, augment, parse_polynomial
from .report import DiagramReport, ErrorReport, EulerReport, format_report
from .triangulate import decompose, random_order

EXIT_OK, EXIT_USAGE, EXIT_COMPUTATION, EXIT_VERDICT = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    polynomials: tuple
    n: int
    d: int | None = None
    alphas: tuple | None = None
    J: tuple | None = None
    decomposition: bool = False
    order_seed: int | None = None
    horizon: int = DEFAULT_HORIZON
    output: str = "text"
    permute: tuple | None = None

    def validate(self):
        if self.n < 1:
            raise InputError("--n must be positive")
        if self.d is not None and self.d < 1:
            raise InputError("--d must be positive")
        if self.horizon < 1:
            raise InputError("--horizon must be positive")
        if self.alphas is not None and any(a < 3 for a in self.alphas):
            raise InputError("--alphas entries must be at least 3")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lenewton",
                     description="Lê numbers and Newton numbers from Newton diagrams.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of variables")
    common.add_argument("--format", dest="output", choices=("text", "json"), default="text")
    common.add_argument("--horizon", type=int, default=DEFAULT_HORIZON,
                        help="doublings before a Newton number is declared infinite")
    common.add_argument("--permute", type=_int_list, default=None,
                        help="new z_k is old z_{p_k}, e.g. 2,1,3")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pipeline_options(p):
        p.add_argument("--d", type=int, help="dimension of the critical locus (estimated if omitted)")
        p.add_argument("--alphas", type=_int_list, help="exponents alpha_1,...,alpha_d")
        p.add_argument("--order-seed", type=int, help="shuffle the triangulation vertex order")

    for name, help_text in (("le", "Lê numbers"), ("euler", "Milnor fibre Euler characteristic")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        pipeline_options(p)
        p.add_argument("polynomial")
    p = sub.add_parser("newton", parents=[common], help="Newton number (finite or INFINITE)")
    p.add_argument("polynomial")
    p = sub.add_parser("diagram", parents=[common], help="dump the Newton diagram")
    p.add_argument("--alphas", type=_int_list, help="augment by z_1^a_1 + ... first")
    p.add_argument("--decomposition", action="store_true",
                   help="also print the simplices and volumes per coordinate subset")
    p.add_argument("--J", type=_int_list, help="axis set for the decomposition table")
    p.add_argument("--order-seed", type=int)
    p.add_argument("polynomial")
    p = sub.add_parser("compare", parents=[common], help="compare the Lê numbers of two germs")
    pipeline_options(p)
    p.add_argument("f")
    p.add_argument("g")
    return parser


def _read(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


def _germ(text: str, config: RunConfig) -> Polynomial:
    f = parse_polynomial(_read(text), config.n)
    return f.permute(config.permute) if config.permute else f


def execute(config: RunConfig) -> tuple[int, object]:
    """Run one command; returns the exit code and the report object."""
    config.validate()
    cmd = config.command
    if cmd in ("le", "euler"):
        f = _germ(config.polynomials[0], config)
        result = run(f, d=config.d, alphas=config.alphas,
                     order_seed=config.order_seed, horizon=config.horizon)
        if config.permute:
            result = replace(result, variables=tuple(f"z{p}" for p in config.permute))
        code = EXIT_OK if result.accepted else EXIT_COMPUTATION
        if cmd == "euler":
            return code, EulerReport(result.euler, result.nu0, result.lambdas, result.alphas)
        return code, result
    if cmd == "newton":
        return EXIT_OK, newton_number(_germ(config.polynomials[0], config), config.horizon)
    if cmd == "diagram":
        f = _germ(config.polynomials[0], config)
        if config.alphas:
            f = augment(f, config.alphas)
        diagram = compact_faces(f)
        table, J = None, ()
        if config.decomposition:
            J = config.J if config.J is not None else tuple(range(1, len(config.alphas or ()) + 1))
            order = None if config.order_seed is None else random_order(diagram, config.order_seed)
            table = tuple(decomposition_table(decompose(diagram, order), J))
        return EXIT_OK, DiagramReport(diagram, str(f), tuple(J), table)
    if cmd == "compare":
        f = _germ(config.polynomials[0], config)
        g = _germ(config.polynomials[1], config)
        report = compare(f, g, d=config.d, order_seed=config.order_seed,
                         horizon=config.horizon)
        return (EXIT_VERDICT if report.verdict == "FAIL" else EXIT_OK), report
    raise InputError(f"unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    polys = (args.f, args.g) if args.command == "compare" else (args.polynomial,)
    config = RunConfig(
        command=args.command,
        polynomials=polys,
        n=args.n,
        d=getattr(args, "d", None),
        alphas=getattr(args, "alphas", None),
        J=getattr(args, "J", None),
        decomposition=getattr(args, "decomposition", False),
        order_seed=getattr(args, "order_seed", None),
        horizon=args.horizon,
        output=args.output,
        permute=args.permute,
    )
    try:
        code, report = execute(config)
    except InputError as exc:
        code, report = EXIT_USAGE, ErrorReport(exc.reason, str(exc))
    except OSError as exc:
        code, report = EXIT_USAGE, ErrorReport("io_error", str(exc))
    except LeNewtonError as exc:
        code, report = EXIT_COMPUTATION, ErrorReport(exc.reason, str(exc))
    text = format_report(report, config.output)
    stream = sys.stderr if isinstance(report, ErrorReport) and config.output == "text" else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
