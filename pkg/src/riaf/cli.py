"""Command-line front end.

    riaf solve -p PCA-stb -f inst.riaf -a a [--engine enum|sat|auto] [--witness]
    riaf completions -f inst.riaf [--count]
    riaf extensions -f af.riaf -s pr
    riaf encode -f inst.riaf -s ad|stb|structure [-o out.cnf]
    riaf generate --args 6 --uncertain-args 2 --attack-prob 0.25 --seed 7 [-o out.riaf]

Exit status: 0 on a definite answer, 1 on usage or input errors, 2 on
internal failures.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .completions import enumerate_completions, iter_completions
from .core import ArgumentationFramework, RIAFError, lift_af
from .engine import Engine, solve
from .generate import generate_riaf
from .io import read_riaf, serialize_riaf
from .reasoning import ProblemKind
from .sat import emit_dimacs, encode_task
from .sat.external import ExternalBackend
from .sat.solver import SolverError
from .semantics import Semantics, enumerate_extensions


class UsageError(RIAFError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def parse_task(token: str) -> tuple[ProblemKind, Semantics]:
    problem, sep, sem = token.rpartition("-")
    if not sep:
        raise UsageError(f"task must look like PROBLEM-SEM, got {token!r}")
    return ProblemKind.parse(problem), Semantics.parse(sem)


def _format_set(names) -> str:
    return ",".join(sorted(names))


def _format_af(af: ArgumentationFramework) -> str:
    return serialize_riaf(lift_af(af))


def cmd_solve(args) -> int:
    problem, sem = parse_task(args.problem)
    riaf = read_riaf(args.file)
    if problem.is_verification:
        if args.set is None:
            raise UsageError(f"{problem.value} needs a query set (-S)")
        query = frozenset(n.strip() for n in args.set.split(",") if n.strip())
    else:
        if args.arg is None:
            raise UsageError(f"{problem.value} needs a query argument (-a)")
        query = args.arg
    backend = ExternalBackend(args.solver_cmd) if args.solver_cmd else None
    verdict = solve(
        problem,
        riaf,
        query,
        sem,
        engine=Engine(args.engine),
        backend=backend,
        allow_uncertain=args.allow_uncertain_query,
    )
    out = ["YES" if verdict.answer else "NO"]
    if args.witness:
        if verdict.witness is not None:
            out.append(_format_af(verdict.witness).rstrip("\n"))
        if verdict.extension_witness is not None:
            out.append(f"% extension: {_format_set(verdict.extension_witness)}")
    print("\n".join(out))
    return 0


def cmd_completions(args) -> int:
    riaf = read_riaf(args.file)
    if args.count:
        print(sum(1 for _ in iter_completions(riaf)))
        return 0
    print("\n".join(_format_af(af) for af in enumerate_completions(riaf)), end="")
    return 0


def cmd_extensions(args) -> int:
    sem = Semantics.parse(args.semantics)
    riaf = read_riaf(args.file)
    if riaf.has_uncertainty:
        raise UsageError("instance has uncertain elements; use 'completions' or 'solve' instead")
    for ext in enumerate_extensions(riaf.to_af(), sem):
        print(_format_set(ext))
    return 0


def cmd_encode(args) -> int:
    riaf = read_riaf(args.file)
    cnf = encode_task(riaf, args.semantics)
    if args.output:
        try:
            with open(args.output, "w") as fh:
                emit_dimacs(cnf, fh)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from exc
    else:
        emit_dimacs(cnf, sys.stdout)
    return 0


def cmd_generate(args) -> int:
    riaf = generate_riaf(
        args.args,
        args.uncertain_args,
        args.attack_prob,
        args.uncertain_attack_prob,
        args.sym_prob,
        args.seed,
    )
    text = serialize_riaf(riaf)
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from exc
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="riaf", description="Reasoning with rich incomplete argumentation frameworks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="decide a possible/necessary reasoning problem")
    p.add_argument("-p", "--problem", required=True, help="PROBLEM-SEM, e.g. PCA-stb or IncNVstar-pr")
    p.add_argument("-f", "--file", required=True)
    q = p.add_mutually_exclusive_group()
    q.add_argument("-a", "--arg", help="query argument (acceptance problems)")
    q.add_argument("-S", "--set", help="comma-separated query set (verification problems)")
    p.add_argument("--engine", choices=[e.value for e in Engine], default="auto")
    p.add_argument("--witness", action="store_true", help="print the certificate after the answer")
    p.add_argument(
        "--allow-uncertain-query",
        action="store_true",
        help="non-standard: accept an uncertain query argument, counting it as "
        "not accepted in completions where it is absent",
    )
    p.add_argument("--solver-cmd", help="external DIMACS solver command for the SAT engine")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("completions", help="list the completions of an instance")
    p.add_argument("-f", "--file", required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_completions)

    p = sub.add_parser("extensions", help="list the extensions of an uncertainty-free instance")
    p.add_argument("-f", "--file", required=True)
    p.add_argument("-s", "--semantics", required=True)
    p.set_defaults(func=cmd_extensions)

    p = sub.add_parser("encode", help="write the CNF encoding in DIMACS format")
    p.add_argument("-f", "--file", required=True)
    p.add_argument("-s", "--semantics", choices=["ad", "stb", "structure"], required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("generate", help="write a random instance")
    p.add_argument("--args", type=int, required=True)
    p.add_argument("--uncertain-args", type=int, default=0)
    p.add_argument("--attack-prob", type=float, default=0.0)
    p.add_argument("--uncertain-attack-prob", type=float, default=0.0)
    p.add_argument("--sym-prob", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SolverError as exc:
        print(f"riaf: solver failure: {exc}", file=sys.stderr)
        return 2
    except (RIAFError, OSError) as exc:
        print(f"riaf: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"riaf: internal error: {exc!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
