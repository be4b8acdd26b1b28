"""Command-line front end: graph export, witnesses, verification, audits, the oracle and benchmarks.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 oracle budget exceeded.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from bsnet.config import Settings
from bsnet.errors import BsnetError, OracleBudgetError, WitnessFormatError
from bsnet.graph.cayley import build
from bsnet.graph.permutation import MAX_DIMENSION, MIN_DIMENSION, format_label, parse
from bsnet.models import AuditMode, BenchRow, WitnessDocument
from bsnet.builders import assign_roles
from bsnet.services import (
    AuditService,
    OracleService,
    TPathService,
    WebService,
    assemble,
    pi3_formula,
    random_triples,
    upper_bound,
    verify_web,
    verify_witness,
)

logger = logging.getLogger("bsnet")

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """'5' or '3..8' (inclusive)."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N..M, got {text!r}") from None
    if low > high or low < MIN_DIMENSION or high > MAX_DIMENSION:
        raise argparse.ArgumentTypeError(f"range {text!r} must lie within {MIN_DIMENSION}..{MAX_DIMENSION}")
    return list(range(low, high + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bsnet", description="Internally disjoint T-paths in bubble-sort star graphs")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log case dispatch and searches")
    parser.add_argument("--quiet", "-q", action="store_true", help="Log errors only")
    parser.add_argument("--samples", type=int, default=None, help="Random triples for sampled sweeps")
    parser.add_argument("--budget", type=int, default=None, help="Node budget for the oracle")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="Export BS_n")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--format", choices=["dot", "edges", "json"], default="edges")
    gen.add_argument("--out", type=Path)

    for verb, text in (("witness", "Build and verify a T-path witness"), ("oracle", "Exact value by brute force (n <= 4)")):
        cmd = sub.add_parser(verb, help=text)
        cmd.add_argument("--n", type=int, required=True)
        cmd.add_argument("--terminals", nargs=3, metavar="LABEL")
        cmd.add_argument("--seed", type=int)
        cmd.add_argument("--format", choices=["json"], default="json")
        cmd.add_argument("--out", type=Path)

    ver = sub.add_parser("verify", help="Verify a witness file")
    ver.add_argument("--file", type=Path, required=True)
    ver.add_argument("--n", type=int)

    aud = sub.add_parser("audit", help="Structural audit of BS_n (n <= 5)")
    aud.add_argument("--n", type=int, required=True)
    aud.add_argument("--seed", type=int)
    aud.add_argument("--out", type=Path)

    for verb, text in (("pi3", "Formula and upper-bound table"), ("bench", "Timing table")):
        cmd = sub.add_parser(verb, help=text)
        cmd.add_argument("--n", type=parse_range, required=True, help="N or N..M")
        cmd.add_argument("--seed", type=int)
        cmd.add_argument("--out", type=Path)
    return parser


def configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def settings_from(args: argparse.Namespace) -> Settings:
    values = {}
    if getattr(args, "seed", None) is not None:
        values["seed"] = args.seed
    if args.samples is not None:
        values["sample_triples"] = args.samples
    if args.budget is not None:
        values["oracle_node_budget"] = args.budget
    try:
        return Settings(**values)
    except ValidationError as e:
        raise UsageError(str(e)) from e


def emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _terminals(args: argparse.Namespace, settings: Settings) -> list:
    if args.terminals:
        return [parse(label) for label in args.terminals]
    if args.seed is None:
        raise UsageError("give --terminals or --seed")
    return list(random_triples(args.n, 1, settings.seed)[0])


def cmd_generate(args: argparse.Namespace, settings: Settings) -> int:
    g = build(args.n)
    if args.format == "dot":
        emit(g.to_dot(), args.out)
    elif args.format == "edges":
        emit(g.to_edge_list(), args.out)
    else:
        document = {
            "n": g.n,
            "vertices": [format_label(v) for v in g.vertices()],
            "edges": [[format_label(u), format_label(w)] for u, w in g.edges()],
        }
        emit(json.dumps(document, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_witness(args: argparse.Namespace, settings: Settings) -> int:
    g = build(args.n)
    raw = _terminals(args, settings)
    witness, verified = TPathService(settings).witness(g, raw)
    document = WitnessDocument.from_witness(witness, pi3_formula(g.n), verified, raw)
    emit(document.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK if verified else EXIT_FAILED


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    try:
        text = args.file.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        print(f"FAIL cannot read {args.file}: {e}")
        return EXIT_FAILED
    try:
        document = WitnessDocument.model_validate_json(text)
        witness = document.to_witness()
        if args.n is not None and args.n != document.n:
            raise WitnessFormatError(f"file is for n = {document.n}, --n is {args.n}")
        g = build(document.n)
    except (ValidationError, BsnetError) as e:
        print(f"FAIL malformed witness: {e}")
        return EXIT_FAILED
    triple = witness.terminals
    reports = [("web", verify_web(g, triple, witness.web)), ("t_paths", verify_witness(g, triple, witness))]
    if document.formula != pi3_formula(g.n):
        print(f"FAIL formula field {document.formula} differs from {pi3_formula(g.n)}")
        return EXIT_FAILED
    if not document.verified:
        print("FAIL witness is marked unverified")
        return EXIT_FAILED
    for label, report in reports:
        if not report.passed:
            print(f"FAIL {label}: {report.failure}")
            return EXIT_FAILED
    print(f"PASS n={g.n} t_paths={len(witness.t_paths)}")
    return EXIT_OK


def cmd_audit(args: argparse.Namespace, settings: Settings) -> int:
    g = build(args.n)
    report = AuditService(settings).structural_audit(g)
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.description} [{c.detail}]" for c in report.clauses]
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_pi3(args: argparse.Namespace, settings: Settings) -> int:
    lines = ["n\tpi3\tcmax\tbound"]
    for n in args.n:
        g = build(n)
        mode = AuditMode.EXHAUSTIVE if n <= 4 else AuditMode.SAMPLED
        bound = upper_bound(g, mode, settings)
        lines.append(f"{n}\t{pi3_formula(n)}\t{bound.cmax}\t{bound.upper_bound}")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> int:
    if args.n > 4:
        raise UsageError("the oracle runs for n <= 4")
    g = build(args.n)
    triple = assign_roles(g, _terminals(args, settings))
    try:
        result = OracleService(settings).brute_force_pi3(g, triple)
    except OracleBudgetError as e:
        print(f"BUDGET {e} (best {e.best})")
        return EXIT_BUDGET
    emit(result.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, settings: Settings) -> int:
    webs = WebService(settings)
    rows = []
    for n in args.n:
        g = webs.graph(n)
        triple = assign_roles(g, random_triples(n, 1, settings.seed)[0])
        started = time.perf_counter()
        web = webs.build_web(g, triple)
        built = time.perf_counter()
        witness = assemble(web, g)
        assembled = time.perf_counter()
        verified = verify_witness(g, triple, witness).passed
        checked = time.perf_counter()
        rows.append(
            BenchRow(
                n=n,
                vertices=g.vertex_count,
                t_paths=len(witness.t_paths),
                build_seconds=round(built - started, 4),
                assemble_seconds=round(assembled - built, 4),
                verify_seconds=round(checked - assembled, 4),
                verified=verified,
            )
        )
    lines = ["n\tvertices\tt_paths\tbuild_s\tassemble_s\tverify_s\tverified"]
    lines += [
        f"{r.n}\t{r.vertices}\t{r.t_paths}\t{r.build_seconds}\t{r.assemble_seconds}\t{r.verify_seconds}\t{r.verified}"
        for r in rows
    ]
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.verified for r in rows) else EXIT_FAILED


COMMANDS = {
    "generate": cmd_generate,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "audit": cmd_audit,
    "pi3": cmd_pi3,
    "oracle": cmd_oracle,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        settings = settings_from(args)
        logger.debug("Running %s with %s", args.verb, settings)
        return COMMANDS[args.verb](args, settings)
    except (UsageError, ValueError) as e:
        print(f"bsnet: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BsnetError as e:
        logger.error("%s failed: %s", args.verb, e)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
