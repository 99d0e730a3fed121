"""World-view semantics for epistemic programs and theories.

Every reduct-based semantics is solved the same way: guess the truth value of
each modal atom (or maximal modal subformula), build the reduct that guess
induces, compute its stable models and keep the result when it is non-empty
and realises the guess.  Semantics defined on top of others (S16, C19, FK15,
S92) filter or translate.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import ht
from .epistemic import (
    ei_satisfies,
    program_modal_atoms,
    reduce_g11,
    reduce_g94,
    reduce_k15,
    replace_modal,
    sort_world_views,
    subjlit_holds,
    theory_modal_subformulas,
)
from .errors import CapExceeded, UnsupportedConstruct
from .founded import find_unfounded_set
from .pruning import GuessPruner
from .syntax import (
    TOP,
    And,
    Atom,
    Impl,
    K,
    M,
    Neg,
    ObjLit,
    Or,
    Program,
    Rule,
    SubjLit,
    Top,
    as_objlit,
    as_literal,
    children,
    expand_program,
    expand_theory,
    formula_rule,
    ground,
    ground_theory,
    is_naf,
    is_objective,
    is_subjective,
    literal_atom,
    naf,
    program_to_theory,
    rebuild,
    reduce_naf,
    theory_atoms,
)

SEMANTICS = ("g94", "g11", "k15", "s16", "c19", "f15", "fk15", "m85", "s92")
COMPARED_SEMANTICS = ("g94", "g11", "f15", "k15", "s16", "c19")


@dataclass(frozen=True)
class SolveConfig:
    max_atoms: int = ht.DEFAULT_MAX_ATOMS
    max_guesses: int = 1 << 16
    f15_max_atoms: int = 4
    parallel: int = 1

    def __post_init__(self):
        for name in ("max_atoms", "max_guesses", "f15_max_atoms", "parallel"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT = SolveConfig()


def _config(config) -> SolveConfig:
    return DEFAULT if config is None else config


def _prepare_program(program) -> Program:
    if not isinstance(program, Program):
        try:
            program = Program(tuple(formula_rule(f) for f in program))
        except UnsupportedConstruct:
            raise UnsupportedConstruct("this semantics is defined on programs; the input is not rule-shaped")
    if not program.is_ground():
        program = ground(program)
    return program


def _prepare_theory(theory) -> tuple:
    if isinstance(theory, Program):
        return program_to_theory(_prepare_program(theory))
    return ground_theory(tuple(theory))


def _guesses(items, config):
    if (1 << len(items)) > config.max_guesses:
        raise CapExceeded(f"{len(items)} modal atoms give more than {config.max_guesses} guesses")
    return itertools.product((True, False), repeat=len(items))


def _run(fn, jobs, parallel):
    if parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * parallel))))
    return [fn(j) for j in jobs]


# ------------------------------------------------------------ program engine


def _solve_program_guess(job):
    kind, program, cores, bits, max_atoms = job
    truth = dict(zip(cores, bits))
    lookup = truth.__getitem__
    if kind == "g94":
        reduct = reduce_g94(program, lookup)
    elif kind == "g11":
        reduct = reduce_g11(program, lookup)
    else:
        reduct = reduce_k15(program, lookup)
    models = ht.stable_models(reduct, universe=program.atoms(), max_atoms=max_atoms)
    if not models:
        return None
    wv = frozenset(models)
    if all(subjlit_holds(wv, c) == v for c, v in truth.items()):
        return wv
    return None


def _program_world_views(kind, program, config):
    cores = program_modal_atoms(program)
    jobs = []
    for bits in GuessPruner(program, cores, kind).guesses():
        jobs.append((kind, program, cores, bits, config.max_atoms))
        if len(jobs) > config.max_guesses:
            raise CapExceeded(f"more than {config.max_guesses} guesses survive pruning")
    return sort_world_views(wv for wv in _run(_solve_program_guess, jobs, config.parallel) if wv is not None)


def g94_world_views(theory, config=None) -> list:
    """W with W = SM[reduct of the input by W], modal subformulas fixed to their truth in W."""
    config = _config(config)
    if isinstance(theory, Program) or _rule_shaped(theory):
        return _program_world_views("g94", _prepare_program(theory), config)
    return _theory_world_views(_prepare_theory(theory), config)


def g11_world_views(program, config=None) -> list:
    config = _config(config)
    return _program_world_views("g11", expand_program(_prepare_program(program)), config)


def k15_world_views(program, config=None) -> list:
    config = _config(config)
    return _program_world_views("k15", expand_program(_prepare_program(program)), config)


def negative_knowledge(program, wv) -> frozenset:
    """``K l`` atoms of the (expanded) program that are false in ``wv``."""
    cores = [c for c in program_modal_atoms(expand_program(_prepare_program(program))) if c.modality == "K"]
    return frozenset(c for c in cores if not subjlit_holds(wv, c))


def s16_world_views(program, config=None) -> list:
    program = _prepare_program(program)
    views = k15_world_views(program, config)
    phi = {wv: negative_knowledge(program, wv) for wv in views}
    return [wv for wv in views if not any(phi[o] > phi[wv] for o in views)]


def _rule_shaped(theory) -> bool:
    try:
        for f in theory:
            formula_rule(f)
    except UnsupportedConstruct:
        return False
    return True


# ------------------------------------------------------------- theory engine


def _solve_theory_guess(job):
    theory, items, bits, universe, max_atoms, classical = job
    values = dict(zip(items, bits))
    reduct = tuple(replace_modal(f, values) for f in theory)
    if classical:
        models = ht.classical_models(reduct, universe=universe, max_atoms=max_atoms)
    else:
        models = ht.stable_models(reduct, universe=universe, max_atoms=max_atoms)
    if not models:
        return None
    wv = frozenset(models)
    if all(ei_satisfies(wv, g) == v for g, v in values.items()):
        return wv
    return None


def _theory_world_views(theory, config, classical=False, universe=None):
    items = theory_modal_subformulas(theory)
    universe = frozenset(universe if universe is not None else theory_atoms(theory))
    jobs = [(theory, items, bits, universe, config.max_atoms, classical) for bits in _guesses(items, config)]
    return sort_world_views(wv for wv in _run(_solve_theory_guess, jobs, config.parallel) if wv is not None)


def m85_world_views(theory, universe=None, config=None) -> list:
    """W = { I : <W, I> satisfies the theory }, I ranging over consistent interpretations of the universe."""
    config = _config(config)
    theory = _prepare_theory(theory)
    return _theory_world_views(theory, config, classical=True, universe=universe)


def s92_world_views(theory, universe=None, config=None) -> list:
    theory = _prepare_theory(theory)
    if universe is None:
        universe = theory_atoms(theory)
    return m85_world_views(translate_b(theory, expand_m=True), universe=universe, config=config)


# --------------------------------------------------------------- founded


def c19_world_views(theory, config=None) -> list:
    """Founded G94 world views.

    Theories may add formulas ``K psi`` with ``psi`` objective to a program;
    for the foundedness test their objective part contributes justifying rules.
    """
    config = _config(config)
    if isinstance(theory, Program) or _rule_shaped(theory):
        program = _prepare_program(theory)
        return [wv for wv in g94_world_views(program, config) if find_unfounded_set(program, wv) is None]
    theory = _prepare_theory(theory)
    rules = []
    for f in theory:
        try:
            rules.append(formula_rule(f))
        except UnsupportedConstruct:
            if isinstance(f, K) and is_objective(f.arg):
                rules.extend(ht.formula_to_rules(f.arg))
            else:
                raise UnsupportedConstruct(f"C19 on theories accepts rules and K-axioms over objective formulas: {f}")
    justification = Program(tuple(rules))
    return [wv for wv in _theory_world_views(theory, config) if find_unfounded_set(justification, wv) is None]


def fk15_world_views(program, config=None) -> list:
    program = _prepare_program(program)
    normalized = normalize_to_program(translate_k(program_to_theory(program)))
    views = c19_world_views(normalized, config)
    return restrict_world_views(views, program.atoms())


# ----------------------------------------------------------- translations


def _translate(f, modal):
    if isinstance(f, K):
        return modal(_translate(f.arg, modal))
    kids = children(f)
    if not kids:
        return f
    return rebuild(f, [_translate(c, modal) for c in kids])


def _theory_for_translation(theory, expand_m):
    if isinstance(theory, Program):
        theory = program_to_theory(_prepare_program(theory))
    else:
        theory = ground_theory(tuple(theory))
    return expand_theory(theory) if expand_m else theory


def translate_b(theory, expand_m: bool = False) -> tuple:
    """``K F`` becomes ``F & K F`` (recursively); ``expand_m`` first rewrites ``M`` via ``K``."""
    return tuple(_translate(f, lambda g: And((g, K(g)))) for f in _theory_for_translation(theory, expand_m))


def translate_k(theory, expand_m: bool = False) -> tuple:
    """``K F`` becomes ``M K F`` (recursively)."""
    return tuple(_translate(f, lambda g: M(K(g))) for f in _theory_for_translation(theory, expand_m))


def restrict_world_views(views, atoms) -> list:
    atoms = set(atoms)
    return sort_world_views(
        frozenset(frozenset(l for l in i if literal_atom(l) in atoms) for i in wv) for wv in views
    )


class _Namer:
    def __init__(self, taken):
        self.taken = {a.predicate for a in taken}
        self.names = {}
        self.rules = []
        self.counter = 0

    def atom_for(self, f, build):
        if f in self.names:
            return self.names[f]
        while True:
            self.counter += 1
            name = f"aux{self.counter}"
            if name not in self.taken:
                break
        atom = Atom(name)
        self.names[f] = atom
        build(atom, f)
        return atom


def normalize_to_program(theory) -> Program:
    """Rewrite rule-like formulas whose bodies contain compound subformulas into rules,
    naming each compound subformula with a fresh auxiliary atom."""
    if isinstance(theory, Program):
        return theory
    theory = tuple(theory)
    namer = _Namer(theory_atoms(theory))
    rules = []

    def define(atom, f):
        for body in _bodies(f):
            namer.rules.append(Rule((ObjLit(atom),), tuple(body)))

    def objlit(f):
        depth = 0
        while is_naf(f):
            depth += 1
            f = f.body
        lit = as_objlit(f)
        if lit is None:
            lit = ObjLit(namer.atom_for(f, define))
        return ObjLit(lit.core, reduce_naf(lit.naf + depth))

    def body_item(f):
        lit = as_literal(f)
        if lit is not None:
            return [lit]
        depth = 0
        g = f
        while is_naf(g):
            depth += 1
            g = g.body
        if isinstance(g, (K, M)):
            return [SubjLit("K" if isinstance(g, K) else "M", objlit(g.arg), reduce_naf(depth))]
        if depth == 0 and isinstance(g, And):
            out = []
            for a in g.args:
                out.extend(body_item(a))
            return out
        if depth == 0 and isinstance(g, Top):
            return []
        return [ObjLit(namer.atom_for(g, define), reduce_naf(depth))]

    def _bodies(f):
        if isinstance(f, Or):
            out = []
            for a in f.args:
                out.extend(_bodies(a))
            return out
        return [body_item(f)]

    for f in theory:
        head_f, body_f = (f.head, f.body) if isinstance(f, Impl) else (f, TOP)
        heads = head_f.args if isinstance(head_f, Or) else (head_f,)
        head = []
        for h in heads:
            lit = as_objlit(h)
            if lit is None:
                raise UnsupportedConstruct(f"cannot normalise head {h}")
            head.append(lit)
        for body in _bodies(body_f):
            rules.append(Rule(tuple(head), tuple(body)))
    return Program(tuple(rules + namer.rules))


# ---------------------------------------------------------- augmentations


def em_rules(atoms) -> list:
    out = []
    for a in sorted(atoms, key=str):
        for l in (a, Neg(a)):
            out.append(Rule((ObjLit(l), ObjLit(l, 1))))
    return out


def with_em(theory, universe=None):
    """Add ``l | not l`` for every explicit literal over the universe."""
    if isinstance(theory, Program):
        atoms = theory.atoms() if universe is None else universe
        return Program(theory.rules + tuple(em_rules(atoms)), theory.constants)
    theory = tuple(theory)
    atoms = theory_atoms(theory) if universe is None else universe
    return theory + tuple(Or((l, naf(l))) for a in sorted(atoms, key=str) for l in (a, Neg(a)))


def with_kem(theory, universe=None) -> tuple:
    """Add ``K(l | not l)`` for every explicit literal over the universe."""
    if isinstance(theory, Program):
        atoms = theory.atoms() if universe is None else universe
        theory = program_to_theory(theory)
    else:
        theory = tuple(theory)
        atoms = theory_atoms(theory) if universe is None else universe
    return theory + tuple(K(Or((l, naf(l)))) for a in sorted(atoms, key=str) for l in (a, Neg(a)))


# ----------------------------------------------------------- dispatch


def world_views(theory, semantics: str, config=None) -> list:
    semantics = semantics.lower()
    if semantics == "g94":
        return g94_world_views(theory, config)
    if semantics == "g11":
        return g11_world_views(theory, config)
    if semantics == "k15":
        return k15_world_views(theory, config)
    if semantics == "s16":
        return s16_world_views(theory, config)
    if semantics == "c19":
        return c19_world_views(theory, config)
    if semantics == "fk15":
        return fk15_world_views(theory, config)
    if semantics == "f15":
        from .f15 import f15_world_views

        return f15_world_views(theory, config)
    if semantics == "m85":
        return m85_world_views(theory, config=config)
    if semantics == "s92":
        return s92_world_views(theory, config=config)
    raise ValueError(f"unknown semantics {semantics!r}; choose from {', '.join(SEMANTICS)}")


def solve_specification(theory, constraints, semantics: str = "g94", config=None) -> list:
    """World views of ``theory`` that satisfy every subjective constraint."""
    constants = set()
    if isinstance(theory, Program):
        theory = _prepare_program(theory)
        constants = theory.term_constants() | set(theory.constants)
    else:
        from .syntax import formula_constants

        for f in theory:
            constants |= formula_constants(f)
    grounded = ground_theory(tuple(constraints), constants)
    for c in grounded:
        if not is_subjective(c):
            raise UnsupportedConstruct(f"integrity constraints must be subjective: {c}")
    return [wv for wv in world_views(theory, semantics, config) if all(ei_satisfies(wv, c) for c in grounded)]
