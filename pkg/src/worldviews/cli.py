"""Command-line interface.

    worldviews solve --semantics g94 corpus:P1
    worldviews compare --semantics g94,k15 program.elp
    worldviews check foundedness --semantics c19,g94 corpus:P3
    worldviews check campaign --seeds 500 --parallel 4
    worldviews translate --to b --normalize corpus:P6
    worldviews ground --constants a,b program.elp
    worldviews corpus list | worldviews corpus emit P8

Exit codes: 0 success (also with zero world views), 10 parse error,
20 unsupported construct, 30 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import corpus
from .epistemic import world_view_key
from .errors import CapExceeded, ParseError, UnsupportedConstruct
from .properties import (
    PROPERTIES,
    brute_force_world_views,
    campaign,
    check_constraint_monotonicity,
    check_foundedness,
    check_reflexivity,
    check_supra_asp,
    check_supra_s5,
    is_epistemically_tight,
    matrix_mismatches,
)
from .semantics import (
    COMPARED_SEMANTICS,
    SEMANTICS,
    SolveConfig,
    normalize_to_program,
    translate_b,
    translate_k,
    world_views,
)
from .splitting import check_splitting_instance
from .syntax import (
    Atom,
    Program,
    format_theory,
    ground,
    ground_theory,
    parse_formula,
    parse_program,
    parse_theory,
    theory_atoms,
)

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_CAP = 0, 10, 20, 30

log = logging.getLogger("worldviews")


# ------------------------------------------------------------------ input


def read_source(spec: str) -> str:
    if spec.startswith("corpus:"):
        return corpus.emit(spec[len("corpus:"):])
    if spec == "-":
        return sys.stdin.read()
    with open(spec, encoding="utf-8") as fh:
        return fh.read()


def parse_input(text: str, as_theory: bool = False):
    """A Program when the text follows the rule grammar, otherwise a tuple of formulas."""
    if as_theory:
        return parse_theory(text)
    try:
        return parse_program(text)
    except ParseError as program_error:
        try:
            return parse_theory(text)
        except ParseError:
            raise program_error from None


def with_constants(x, constants):
    if not constants:
        return x
    if isinstance(x, Program):
        return ground(Program(x.rules, x.constants | set(constants)))
    return ground_theory(x, constants)


def _split_list(value: str) -> list:
    return [v.strip() for v in value.split(",") if v.strip()]


def _semantics_list(value: str) -> list:
    items = _split_list(value)
    for s in items:
        if s not in SEMANTICS:
            raise argparse.ArgumentTypeError(f"unknown semantics {s!r}; choose from {', '.join(SEMANTICS)}")
    return items


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


# ------------------------------------------------------------------ output


def views_json(views) -> list:
    return [{"belief_sets": [list(k) for k in world_view_key(wv)]} for wv in views]


def views_text(views) -> list:
    return ["[" + ", ".join("{" + ", ".join(k) + "}" for k in world_view_key(wv)) + "]" for wv in views]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _atom_count(x) -> int:
    if isinstance(x, Program):
        return len((x if x.is_ground() else ground(x)).atoms())
    return len(theory_atoms(ground_theory(x)))


def _solve(x, semantics, config, oracle):
    if oracle:
        if not isinstance(x, Program):
            raise UnsupportedConstruct("the brute-force oracle takes programs only")
        return brute_force_world_views(x, semantics)
    return world_views(x, semantics, config)


# ------------------------------------------------------------------ commands


def cmd_solve(args, config, out):
    x = with_constants(parse_input(read_source(args.input), args.theory), args.constants)
    semantics = args.semantics[0]
    views = _solve(x, semantics, config, args.oracle)
    if args.format == "json":
        doc = {
            "input": args.input,
            "semantics": semantics,
            "world_views": views_json(views),
            "stats": {"atoms": _atom_count(x), "world_views": len(views), "engine": "oracle" if args.oracle else "guess"},
        }
        out.write(_dump(doc) + "\n")
    else:
        out.write(f"% {semantics}: {len(views)} world view{'s' if len(views) != 1 else ''}\n")
        for line in views_text(views):
            out.write(line + "\n")
    return EXIT_OK


def cmd_compare(args, config, out):
    x = with_constants(parse_input(read_source(args.input), args.theory), args.constants)
    rows = {s: _solve(x, s, config, args.oracle) for s in args.semantics}
    if args.format == "json":
        doc = {
            "input": args.input,
            "semantics": list(args.semantics),
            "rows": {s: {"world_views": views_json(v)} for s, v in rows.items()},
            "stats": {"atoms": _atom_count(x)},
        }
        out.write(_dump(doc) + "\n")
    else:
        width = max(len(s) for s in rows)
        for s, v in rows.items():
            out.write(f"{s.ljust(width)}  {' '.join(views_text(v)) if v else '(none)'}\n")
    return EXIT_OK


def _run_check(prop, x, semantics, args, config):
    if prop == "supra-s5":
        return check_supra_s5(x, semantics, config)
    if prop == "supra-asp":
        return check_supra_asp(x, semantics, config)
    if prop == "foundedness":
        return check_foundedness(x, semantics, config)
    if prop == "reflexivity":
        return check_reflexivity(x, semantics, config)
    if prop == "constraint-monotonicity":
        if not args.constraint:
            raise UnsupportedConstruct("constraint-monotonicity needs at least one --constraint")
        return check_constraint_monotonicity(x, [parse_formula(c) for c in args.constraint], semantics, config)
    if prop == "splitting":
        if not args.split:
            raise UnsupportedConstruct("splitting needs --split with a comma-separated atom list")
        u = {parse_formula(a) for a in _split_list(args.split)}
        if not all(isinstance(a, Atom) for a in u):
            raise UnsupportedConstruct("--split takes atoms only")
        return check_splitting_instance(x, semantics, u, config)
    raise UnsupportedConstruct(f"unknown property {prop!r}")


def cmd_check(args, config, out):
    if args.property == "campaign":
        result = campaign(range(args.seed, args.seed + args.seeds), parallel=config.parallel)
        result["mismatches"] = [list(m) for m in matrix_mismatches(result)]
        if args.format == "json":
            out.write(_dump(result) + "\n")
        else:
            for p, row in result["cells"].items():
                cells = "  ".join(f"{s}:{c['violations']}/{c['checked']}{'' if c['expected'] else '*'}" for s, c in row.items())
                out.write(f"{p.ljust(24)} {cells}\n")
            out.write(f"skipped checks: {len(result['skipped'])}; mismatches with the expected matrix: {len(result['mismatches'])}\n")
        return EXIT_OK
    if args.input is None:
        raise UnsupportedConstruct(f"check {args.property} needs an input")
    x = with_constants(parse_input(read_source(args.input), args.theory), args.constants)
    if args.property == "tightness":
        if not isinstance(x, Program):
            raise UnsupportedConstruct("tightness is defined on programs")
        tight, level = is_epistemically_tight(x)
        doc = {"input": args.input, "property": "tightness", "tight": tight,
               "level": {str(a): v for a, v in sorted(level.items(), key=lambda kv: str(kv[0]))} if level else None}
        out.write(_dump(doc) + "\n" if args.format == "json" else f"tightness: {'tight' if tight else 'not tight'}\n")
        return EXIT_OK
    semantics = args.semantics if args.semantics_given else list(COMPARED_SEMANTICS)
    reports = [_run_check(args.property, x, s, args, config) for s in semantics]
    if args.format == "json":
        doc = {
            "input": args.input,
            "property": args.property,
            "reports": [{"semantics": r.semantics, "verdict": r.verdict, "witness": r.witness} for r in reports],
        }
        out.write(_dump(doc) + "\n")
    else:
        for r in reports:
            out.write(f"{r}\n")
            if not r.holds and r.witness:
                out.write(f"  witness: {json.dumps(r.witness, sort_keys=True)}\n")
    return EXIT_OK


def cmd_translate(args, config, out):
    x = with_constants(parse_input(read_source(args.input), args.theory), args.constants)
    fn = translate_b if args.to == "b" else translate_k
    result = fn(x, expand_m=args.expand_m)
    if args.normalize:
        out.write(str(normalize_to_program(result)))
    else:
        out.write(format_theory(result))
    return EXIT_OK


def cmd_ground(args, config, out):
    x = parse_input(read_source(args.input), args.theory)
    if isinstance(x, Program):
        out.write(str(ground(x, args.constants or ())))
    else:
        out.write(format_theory(ground_theory(x, args.constants or ())))
    return EXIT_OK


def cmd_corpus(args, config, out):
    if args.action == "list":
        for name in corpus.names():
            out.write(f"{name.ljust(5)} {corpus.ENTRIES[name].description}\n")
        return EXIT_OK
    if not args.name:
        raise KeyError("corpus emit needs a name")
    out.write(corpus.emit(args.name))
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-atoms", type=_positive, default=SolveConfig.max_atoms, help="stable-model engine cap")
    common.add_argument("--f15-max-atoms", type=_positive, default=SolveConfig.f15_max_atoms)
    common.add_argument("--max-guesses", type=_positive, default=SolveConfig.max_guesses)
    common.add_argument("--parallel", type=_positive, default=1, help="worker processes")
    common.add_argument("--constants", type=_split_list, default=None, help="extra constants, comma separated")
    common.add_argument("--theory", action="store_true", help="read the input as formulas, not rules")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="worldviews", description="World views of epistemic logic programs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="world views under one semantics")
    p.add_argument("--semantics", type=_semantics_list, default=["g94"])
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle (at most 3 atoms)")
    p.add_argument("input", help="file, '-' for stdin, or corpus:NAME")

    p = sub.add_parser("compare", parents=[common], help="world views under several semantics")
    p.add_argument("--semantics", type=_semantics_list, default=list(COMPARED_SEMANTICS))
    p.add_argument("--oracle", action="store_true")
    p.add_argument("input")

    p = sub.add_parser("check", parents=[common], help="property checks and the property campaign")
    p.add_argument("property", choices=PROPERTIES + ("reflexivity", "tightness", "campaign"))
    p.add_argument("input", nargs="?")
    p.add_argument("--semantics", type=_semantics_list, default=None)
    p.add_argument("--constraint", action="append", help="subjective constraint formula (repeatable)")
    p.add_argument("--split", help="splitting set, comma separated atoms")
    p.add_argument("--seeds", type=_positive, default=500, help="campaign size")
    p.add_argument("--seed", type=int, default=0, help="first campaign seed")

    p = sub.add_parser("translate", parents=[common], help="the B or K translation")
    p.add_argument("--to", choices=("b", "k"), required=True)
    p.add_argument("--normalize", action="store_true", help="rewrite the result into rule form")
    p.add_argument("--expand-m", action="store_true", help="replace M by not K not first")
    p.add_argument("input")

    p = sub.add_parser("ground", parents=[common], help="instantiate variables")
    p.add_argument("input")

    p = sub.add_parser("corpus", parents=[common], help="bundled example programs")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    return parser


COMMANDS = {
    "solve": cmd_solve,
    "compare": cmd_compare,
    "check": cmd_check,
    "translate": cmd_translate,
    "ground": cmd_ground,
    "corpus": cmd_corpus,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # `check PROP --flag x INPUT` leaves INPUT unparsed behind the options.
    if args.command == "check" and args.input is None and len(extra) == 1 and not extra[0].startswith("--"):
        args.input, extra = extra[0], []
    if extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command == "check":
        args.semantics_given = args.semantics is not None
    config = SolveConfig(
        max_atoms=args.max_atoms,
        max_guesses=args.max_guesses,
        f15_max_atoms=args.f15_max_atoms,
        parallel=args.parallel,
    )
    try:
        return COMMANDS[args.command](args, config, out)
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return EXIT_PARSE
    except UnsupportedConstruct as e:
        err.write(f"unsupported: {e}\n")
        return EXIT_UNSUPPORTED
    except CapExceeded as e:
        err.write(f"cap exceeded: {e}\n")
        return EXIT_CAP
    except KeyError as e:
        err.write(f"error: {e.args[0]}\n")
        return 2
    except OSError as e:
        err.write(f"error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())
