"""Command line front end.

Exit codes: 0 success, 2 input error, 3 resource cap exceeded, 4 a
semantic check failed.  The RECT_ATG_MAX_N environment variable changes
the default materialization cap; an explicit --max-n beats it.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import CapExceededError, RectAtgError, TooManyAtomsError
from .export import (
    AtomNumbering,
    export_dimacs,
    export_tptp,
    load_record,
    render_matrix,
    render_theorem,
    save_record,
)
from .parser import parse_generation_set
from .rectangle import construct_from_template
from .semantics import check_minimality
from .template import DEFAULT_MAX_LEVEL
from .theoremgen import generate_theorem_with_partition, verify_theorem

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_CHECK = 4

# The library default of 24 atoms is far beyond what the minimality
# sweep can chew through interactively, so the CLI caps lower.
DEFAULT_CLI_MAX_ATOMS = 20


@dataclass(frozen=True)
class RunConfig:
    command: str
    literals: str | None = None
    file: str | None = None
    record: str | None = None
    var_style: str = "upper"
    hypothesis: tuple[int, ...] | None = None
    output: str = "text"
    verify: bool = False
    max_level: int = DEFAULT_MAX_LEVEL
    max_atoms: int = DEFAULT_CLI_MAX_ATOMS

    def __post_init__(self):
        if self.max_level < 1:
            raise ValueError("--max-n must be at least 1")
        if self.max_atoms < 1:
            raise ValueError("--max-atoms must be at least 1")


def _indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated column indices, got {text!r}"
        ) from None


def _add_input_options(sub: argparse.ArgumentParser, with_record: bool = False) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("-l", "--literals", help="generation literals as inline text")
    group.add_argument("-f", "--file", help="file containing the generation literals")
    if with_record:
        group.add_argument("--record", help="JSON theorem record to load")
    sub.add_argument(
        "--var-style",
        choices=("upper", "lower"),
        default="upper",
        help="how bare identifiers inside terms are read: 'upper' treats a "
        "leading uppercase letter as a variable, 'lower' treats u..z as variables",
    )
    sub.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="materialization cap on the number of generation literals "
        f"(default {DEFAULT_MAX_LEVEL}, or the RECT_ATG_MAX_N environment variable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectatg",
        description="Construct rectangular standard contradictions and "
        "derive machine-checked theorems from them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="derive a theorem from a generation set")
    _add_input_options(gen)
    gen.add_argument(
        "-H",
        "--hypothesis",
        type=_indices,
        default=None,
        help="comma-separated clause column indices to move to the hypothesis "
        "side (default: 0, the generation clause)",
    )
    gen.add_argument(
        "-o",
        "--output",
        choices=("text", "tptp", "json"),
        default="text",
        help="output format (default text: premises, then the turnstile line)",
    )
    gen.add_argument(
        "--verify",
        action="store_true",
        help="run the truth-table entailment check before printing",
    )
    gen.add_argument(
        "--max-atoms",
        type=int,
        default=DEFAULT_CLI_MAX_ATOMS,
        help=f"enumeration bound used by --verify (default {DEFAULT_CLI_MAX_ATOMS})",
    )

    rect = sub.add_parser("rectangle", help="print the rectangle itself")
    _add_input_options(rect)
    rect.add_argument(
        "-o",
        "--output",
        choices=("matrix", "dimacs"),
        default="matrix",
        help="output format (default matrix)",
    )

    chk = sub.add_parser(
        "check", help="run the contradiction and minimality checks"
    )
    _add_input_options(chk, with_record=True)
    chk.add_argument(
        "--max-atoms",
        type=int,
        default=DEFAULT_CLI_MAX_ATOMS,
        help=f"truth-table enumeration bound (default {DEFAULT_CLI_MAX_ATOMS})",
    )

    return parser


def _resolved_max_level(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get("RECT_ATG_MAX_N")
    if raw is None:
        return DEFAULT_MAX_LEVEL
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"RECT_ATG_MAX_N must be an integer, got {raw!r}") from None


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        literals=args.literals,
        file=args.file,
        record=getattr(args, "record", None),
        var_style=args.var_style,
        hypothesis=getattr(args, "hypothesis", None),
        output=getattr(args, "output", "text"),
        verify=getattr(args, "verify", False),
        max_level=_resolved_max_level(args.max_n),
        max_atoms=getattr(args, "max_atoms", DEFAULT_CLI_MAX_ATOMS),
    )


def _load_generation_set(cfg: RunConfig):
    if cfg.literals is not None:
        text = cfg.literals
    else:
        text = Path(cfg.file).read_text(encoding="utf-8")
    return parse_generation_set(text, cfg.var_style)


def cmd_generate(cfg: RunConfig) -> int:
    generators = _load_generation_set(cfg)
    indices = cfg.hypothesis if cfg.hypothesis is not None else (0,)
    theorem = generate_theorem_with_partition(generators, indices, cfg.max_level)
    if cfg.verify and not verify_theorem(theorem, cfg.max_atoms):
        print("error: generated theorem failed verification", file=sys.stderr)
        return EXIT_CHECK
    if cfg.output == "tptp":
        sys.stdout.write(export_tptp(theorem))
    elif cfg.output == "json":
        sys.stdout.write(save_record(theorem))
    else:
        sys.stdout.write(render_theorem(theorem))
    return EXIT_OK


def cmd_rectangle(cfg: RunConfig) -> int:
    generators = _load_generation_set(cfg)
    rect = construct_from_template(generators, cfg.max_level)
    if cfg.output == "dimacs":
        sys.stdout.write(export_dimacs(rect.clause_set(), AtomNumbering.from_rectangle(rect)))
    else:
        sys.stdout.write(render_matrix(rect) + "\n")
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    if cfg.record is not None:
        theorem = load_record(
            Path(cfg.record).read_text(encoding="utf-8"), cfg.max_level
        )
        generators = theorem.provenance.generators
    else:
        theorem = None
        generators = _load_generation_set(cfg)
    # The rectangle has exactly one atom per generation literal, so the
    # enumeration bound can be enforced before anything is materialized.
    if generators.n > cfg.max_atoms:
        raise TooManyAtomsError(generators.n, cfg.max_atoms)
    rect = construct_from_template(generators, cfg.max_level)
    report = check_minimality(rect, cfg.max_atoms)
    print(report.summary())
    ok = report.ok
    if theorem is not None:
        verified = verify_theorem(theorem, cfg.max_atoms)
        print(f"theorem: {'verified' if verified else 'not verified'}")
        ok = ok and verified
    return EXIT_OK if ok else EXIT_CHECK


_COMMANDS = {
    "generate": cmd_generate,
    "rectangle": cmd_rectangle,
    "check": cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RectAtgError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
