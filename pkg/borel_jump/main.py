"""Command-line entry point for Borel Jump.

Reports go to stdout, logs to stderr. Exit codes: 0 success or consistent,
1 inconsistency or failed check, 2 usage, parse, guard or configuration error.
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from .automata import DetOmegaAutomaton, accepts, to_muller_normal_form
from .classifier import BorelClassLabel, BorelLabel, classify, clopen_basis, completeness_label
from .config import CONVENTIONS, OUTPUT_FORMATS, config
from .errors import BorelJumpError, ConfigError, InternalCheckError
from .expansion import embed, jump_report
from .formats.automaton_text import dump_automaton, read_automaton
from .formats.game_text import read_game
from .formats.hoa import read_hoa
from .formats.pgsolver import read_pgsolver
from .games.arena import GameGraph, MemoryStrategy, Objective, SolveResult
from .games.lift import LiftConvention, lift_objective
from .games.solver import solve
from .games.verify import verify_strategy
from .hierarchy import ClassRef, hierarchy_table, parse_level, parse_side, predict_jump, sort_refs
from .logging_config import get_logger, setup_logging
from .monitoring.metrics import metrics
from .schemas.reports import (
    ClassificationDocument,
    JumpDocument,
    MembershipDocument,
    PredictionDocument,
    SelftestDocument,
    SolveDocument,
    SuiteDocument,
    TableDocument,
    to_json,
)
from .selftest import run_selftest
from .words import Alphabet, format_up_word, parse_up_word

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

MAX_SEED = (1 << 64) - 1

Outcome = Tuple[str, int]


@dataclass(frozen=True)
class RunConfig:
    """Settings of one CLI invocation: environment defaults overridden by flags."""
    command: str
    paths: Tuple[str, ...] = ()
    output_format: str = "text"
    max_states: int = 20
    lar_max_vertices: int = 8
    seed: int = 0
    convention: str = "paper"
    jobs: int = 1
    hoa: bool = False

    def __post_init__(self):
        if self.max_states < 1:
            raise ConfigError(f"state guard must be at least 1, got {self.max_states}")
        if self.lar_max_vertices < 1:
            raise ConfigError(f"LAR guard must be at least 1, got {self.lar_max_vertices}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}; use one of {', '.join(OUTPUT_FORMATS)}")
        if self.convention not in CONVENTIONS:
            raise ConfigError(f"unknown convention {self.convention!r}; use one of {', '.join(CONVENTIONS)}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be at least 1, got {self.jobs}")

    @property
    def json(self) -> bool:
        return self.output_format == "json"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        paths = getattr(args, "paths", None) or [getattr(args, "path", None)]
        return cls(
            command=args.command,
            paths=tuple(p for p in paths if p),
            output_format=(args.format or config.OUTPUT_FORMAT).lower(),
            max_states=config.MAX_STATES if args.max_states is None else args.max_states,
            lar_max_vertices=config.LAR_MAX_VERTICES,
            seed=config.SEED if args.seed is None else args.seed,
            convention=(getattr(args, "convention", None) or config.CONVENTION).lower(),
            jobs=getattr(args, "jobs", 1) or 1,
            hoa=bool(getattr(args, "hoa", False)),
        )


# =========================
# Helpers
# =========================

def load_automaton(path: str, run: RunConfig) -> DetOmegaAutomaton:
    return read_hoa(path) if run.hoa else read_automaton(path)


def _fan_out(run: RunConfig, work: Callable[[str], str]) -> List[str]:
    """Run ``work`` over the input paths; results keep input order."""
    if run.jobs == 1 or len(run.paths) < 2:
        return [work(path) for path in run.paths]
    with ThreadPoolExecutor(max_workers=run.jobs) as pool:
        return list(pool.map(work, run.paths))


def _join_documents(rendered: List[str], run: RunConfig) -> str:
    if run.json and len(rendered) > 1:
        indented = ",\n".join("  " + r.replace("\n", "\n  ") for r in rendered)
        return f"[\n{indented}\n]"
    return "\n\n".join(rendered)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _render_classification(a: DetOmegaAutomaton, c: BorelClassLabel, run: RunConfig) -> str:
    basis = None
    if c.label == BorelLabel.CLOPEN:
        basis = [str(w) for w in clopen_basis(a, run.max_states)]
    document = ClassificationDocument.from_label(c, name=a.name, basis=basis)
    if run.json:
        return to_json(document)
    m = c.memberships
    lines = [
        f"{a.name or 'automaton'}: {c.label.value}",
        f"  memberships: open={_flag(m.open)} closed={_flag(m.closed)} sigma2={_flag(m.sigma2)} pi2={_flag(m.pi2)}",
        f"  completeness: {completeness_label(c).render()}",
    ]
    if basis is not None:
        lines.append(f"  clopen basis: {', '.join(basis)}")
    for key, value in c.evidence.to_dict().items():
        if value is not None and key != "completeness_criterion":
            lines.append(f"  {key.replace('_', ' ')}: {value}")
    return "\n".join(lines)


# =========================
# Commands
# =========================

def cmd_classify(run: RunConfig) -> Outcome:
    def work(path: str) -> str:
        a = load_automaton(path, run)
        return _render_classification(a, classify(a, run.max_states), run)

    return _join_documents(_fan_out(run, work), run), EXIT_OK


def cmd_jump(run: RunConfig, alphabet: Alphabet) -> Outcome:
    report = jump_report(load_automaton(run.paths[0], run), alphabet, run.max_states)
    status = EXIT_OK if report.consistent else EXIT_FAILED
    if run.json:
        return to_json(JumpDocument.from_report(report)), status
    lines = [
        f"{report.name or 'automaton'}: {{{', '.join(report.alphabet_before)}}} -> {{{', '.join(report.alphabet_after)}}}",
        f"  before: {report.before.label.value}",
        f"  after: {report.after.label.value}",
        f"  predicted: {', '.join(c.name for c in report.predicted)}",
        f"  consistent: {_flag(report.consistent)}",
    ]
    if report.claim_note:
        lines.append(f"  note: {report.claim_note}")
        lines.append(f"  disagrees with note: {_flag(report.claim_disagrees)}")
    return "\n".join(lines), status


def cmd_predict(run: RunConfig, side: str, level: str) -> Outcome:
    source = ClassRef(parse_side(side), parse_level(level))
    predicted = sort_refs(predict_jump(source))
    if run.json:
        return to_json(PredictionDocument.from_refs(source, predicted)), EXIT_OK
    return ", ".join(c.name for c in predicted), EXIT_OK


def cmd_table(run: RunConfig, max_level: int) -> Outcome:
    table = hierarchy_table(max_level)
    if run.json:
        return to_json(TableDocument.from_table(table)), EXIT_OK
    return table.render(), EXIT_OK


def _render_strategy(g: GameGraph, result: SolveResult, player: int) -> str:
    strategy = result.strategy(player)
    if isinstance(strategy, MemoryStrategy):
        return f"latest appearance record strategy with {strategy.memory_states} memory states"
    return " ".join(f"{g.names[v]}->{g.names[w]}" for v, w in sorted(strategy.moves.items())) or "-"


def _solve_report(g: GameGraph, o: Objective, run: RunConfig, convention: Optional[str] = None) -> Outcome:
    result = solve(g, o, run.lar_max_vertices)
    verified = verify_strategy(g, o, result)
    status = EXIT_OK if verified else EXIT_FAILED
    if run.json:
        return to_json(SolveDocument.from_result(g, o, result, verified, convention)), status
    lines = [f"objective: {o.describe(g)}"]
    if convention:
        lines.append(f"convention: {convention}")
    lines += [
        f"win0: {' '.join(g.render_set(result.win0))}".rstrip(),
        f"win1: {' '.join(g.render_set(result.win1))}".rstrip(),
        f"strategy0: {_render_strategy(g, result, 0)}",
        f"strategy1: {_render_strategy(g, result, 1)}",
        f"verified: {_flag(verified)}",
    ]
    return "\n".join(lines), status


def cmd_solve(run: RunConfig, pgsolver: bool = False) -> Outcome:
    g, o = read_pgsolver(run.paths[0]) if pgsolver else read_game(run.paths[0])
    return _solve_report(g, o, run)


def cmd_lift(run: RunConfig, base: str, expanded: str, reach: Sequence[str]) -> Outcome:
    g, _ = read_game(base)
    g_expanded, _ = read_game(expanded)
    convention = LiftConvention(run.convention)
    lifted = lift_objective(g, g_expanded, reach, convention)
    return _solve_report(g_expanded, lifted, run, convention.value)


def cmd_member(run: RunConfig, literal: str) -> Outcome:
    a = load_automaton(run.paths[0], run)
    word = parse_up_word(literal, a.alphabet)
    accepted = accepts(a, word)
    if run.json:
        return to_json(MembershipDocument(name=a.name, word=format_up_word(word), accepted=accepted)), EXIT_OK
    return f"{a.name or 'automaton'} {'accepts' if accepted else 'rejects'} {format_up_word(word)}", EXIT_OK


def cmd_dump(run: RunConfig, alphabet: Optional[Alphabet], normal_form: bool) -> Outcome:
    a = load_automaton(run.paths[0], run)
    if alphabet is not None:
        a = embed(a, alphabet, run.max_states)
    elif normal_form:
        a = to_muller_normal_form(a, run.max_states).automaton
    return dump_automaton(a).rstrip("\n"), EXIT_OK


def cmd_selftest(run: RunConfig) -> Outcome:
    suites = run_selftest(run.seed, max_states=run.max_states)
    passed = all(suite.passed for suite in suites)
    status = EXIT_OK if passed else EXIT_FAILED
    if run.json:
        document = SelftestDocument(
            seed=run.seed,
            passed=passed,
            suites=[
                SuiteDocument(suite=s.suite, instances=s.instances, failures=s.failures, first_failure=s.first_failure)
                for s in suites
            ],
        )
        return to_json(document), status
    lines = [f"seed {run.seed}"]
    for s in suites:
        lines.append(f"{s.suite}: {s.instances} instances, {s.failures} failures")
        if s.first_failure:
            lines.append("  first failure:")
            lines.extend("    " + line for line in s.first_failure.splitlines())
    lines.append("PASS" if passed else "FAIL")
    return "\n".join(lines), status


# =========================
# Argument parsing
# =========================

def _alphabet(text: str) -> Alphabet:
    try:
        return Alphabet.from_csv(text)
    except BorelJumpError as e:
        raise argparse.ArgumentTypeError(str(e))


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="report format (default: text)")
    common.add_argument("--max-states", type=int, default=None, help="loop-enumeration guard on the largest SCC")
    common.add_argument("--seed", type=_seed, default=None, help="generator seed (unsigned 64-bit)")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    common.add_argument("--metrics-file", default=None, help="write Prometheus metrics to this file")

    parser = argparse.ArgumentParser(
        prog="borel-jump",
        description="Borel classes of omega-regular languages, alphabet-expansion jumps and games.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classify_parser = commands.add_parser("classify", parents=[common], help="classify automata")
    classify_parser.add_argument("paths", nargs="+", help="automaton files")
    classify_parser.add_argument("--hoa", action="store_true", help="read the HOA subset")
    classify_parser.add_argument("--jobs", type=int, default=1, help="classify inputs on N threads")

    jump_parser = commands.add_parser("jump", parents=[common], help="classify before and after alphabet expansion")
    jump_parser.add_argument("path")
    jump_parser.add_argument("--alphabet", type=_alphabet, required=True, help="expanded alphabet, e.g. a,b,c")
    jump_parser.add_argument("--hoa", action="store_true", help="read the HOA subset")

    predict_parser = commands.add_parser("predict", parents=[common], help="predicted class after expansion")
    predict_parser.add_argument("side", help="Sigma, Pi or Delta")
    predict_parser.add_argument("level", help="n, omega, omega+k or omega1")

    table_parser = commands.add_parser("table", parents=[common], help="jump arrows level by level")
    table_parser.add_argument("max", type=int, help="last finite level")

    solve_parser = commands.add_parser("solve", parents=[common], help="solve a game")
    solve_parser.add_argument("path")
    solve_parser.add_argument("--pgsolver", action="store_true", help="read the PGSolver parity format")

    lift_parser = commands.add_parser("lift", parents=[common], help="lift a reach objective to an expanded arena")
    lift_parser.add_argument("base")
    lift_parser.add_argument("expanded")
    lift_parser.add_argument("--reach", default="", help="comma-separated base vertices")
    lift_parser.add_argument("--convention", choices=CONVENTIONS, default=None)

    member_parser = commands.add_parser("member", parents=[common], help="membership of a UP word u(v)^w")
    member_parser.add_argument("path")
    member_parser.add_argument("word")
    member_parser.add_argument("--hoa", action="store_true", help="read the HOA subset")

    dump_parser = commands.add_parser("dump", parents=[common], help="print an automaton in the text format")
    dump_parser.add_argument("path")
    dump_parser.add_argument("--hoa", action="store_true", help="read the HOA subset")
    dump_parser.add_argument("--normal-form", action="store_true", help="print the Muller normal form")
    dump_parser.add_argument("--alphabet", type=_alphabet, default=None, help="print the embedding into this alphabet")

    commands.add_parser("selftest", parents=[common], help="run the oracle self-test suites")
    return parser


def _dispatch(args: argparse.Namespace, run: RunConfig) -> Outcome:
    if args.command == "classify":
        return cmd_classify(run)
    if args.command == "jump":
        return cmd_jump(run, args.alphabet)
    if args.command == "predict":
        return cmd_predict(run, args.side, args.level)
    if args.command == "table":
        return cmd_table(run, args.max)
    if args.command == "solve":
        return cmd_solve(run, args.pgsolver)
    if args.command == "lift":
        reach = [token.strip() for token in args.reach.split(",") if token.strip()]
        return cmd_lift(run, args.base, args.expanded, reach)
    if args.command == "member":
        return cmd_member(run, args.word)
    if args.command == "dump":
        return cmd_dump(run, args.alphabet, args.normal_form)
    return cmd_selftest(run)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(level=args.log_level)
    for warning in config.validate():
        logger.warning(f"Configuration warning: {warning}")

    try:
        run = RunConfig.from_args(args)
        output, status = _dispatch(args, run)
    except InternalCheckError as e:
        logger.debug(f"{args.command} failed an internal check: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except BorelJumpError as e:
        logger.debug(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.metrics_file:
            metrics.write_textfile(str(Path(args.metrics_file)))

    print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
