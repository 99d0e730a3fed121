"""Property laboratory: per-instance property checks, a random program generator,
an independent brute-force oracle and the campaign that fills the property matrix."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import networkx as nx

from . import ht
from .epistemic import (
    bi_satisfies,
    BeliefInterpretation,
    ei_satisfies_theory,
    format_world_view,
    g11_reduct,
    k15_reduct,
    program_modal_atoms,
    reduce_g11,
    reduce_g94,
    reduce_k15,
    sort_world_views,
    subjective_reduct_sig,
    subjlit_holds,
)
from .errors import CapExceeded, UnsupportedConstruct
from .founded import find_unfounded_set, find_unfounded_set_raw, positive_modal_literals
from .reports import COUNTEREXAMPLE, HOLDS, PropertyReport
from .semantics import (
    COMPARED_SEMANTICS,
    normalize_to_program,
    restrict_world_views,
    solve_specification,
    translate_b,
    translate_k,
    world_views,
)
from .splitting import check_splitting_instance
from .syntax import (
    BOT,
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
    consistent_interpretations,
    expand_program,
    formula_rule,
    ground,
    literal_atom,
    literal_formula,
    literals_of_atoms,
    naf,
    program_to_theory,
    theory_atoms,
)

ORACLE_MAX_ATOMS = 3
AUTOEPISTEMIC_ORACLE_MAX_WORLDS = 12

# Cells of the property matrix expected to hold.
EXPECTED = {
    "supra-s5": set(COMPARED_SEMANTICS),
    "supra-asp": set(COMPARED_SEMANTICS),
    "constraint-monotonicity": {"g94", "g11", "c19"},
    "splitting": {"g94", "c19"},
    "foundedness": {"c19"},
}
PROPERTIES = tuple(EXPECTED)


def _report(prop, semantics, ok, **witness) -> PropertyReport:
    return PropertyReport(prop, semantics, HOLDS if ok else COUNTEREXAMPLE, witness)


def _views(views):
    return [format_world_view(w) for w in views]


# ----------------------------------------------------------------- checks


def constraint_rule(phi):
    """``bot <- not phi`` as a rule when ``phi`` is a literal, otherwise as a formula."""
    return Impl(BOT, naf(phi))


def _extend(theory, formulas):
    if isinstance(theory, Program):
        try:
            return theory.union([formula_rule(f) for f in formulas])
        except UnsupportedConstruct:
            theory = program_to_theory(theory)
    return tuple(theory) + tuple(formulas)


def check_constraint_monotonicity(theory, constraints, semantics, config=None) -> PropertyReport:
    constraints = list(constraints)
    filtered = solve_specification(theory, constraints, semantics, config)
    merged = world_views(_extend(theory, [constraint_rule(c) for c in constraints]), semantics, config)
    return _report(
        "constraint-monotonicity",
        semantics,
        filtered == merged,
        constraints=[str(c) for c in constraints],
        specification=_views(filtered),
        merged=_views(merged),
    )


def check_foundedness(program, semantics, config=None) -> PropertyReport:
    program = program if program.is_ground() else ground(program)
    for wv in world_views(program, semantics, config):
        witness = find_unfounded_set(program, wv)
        if witness is not None:
            pairs = [[sorted(map(str, x)), sorted(map(str, i))] for x, i in witness]
            return _report("foundedness", semantics, False, world_view=format_world_view(wv), unfounded=pairs)
    return _report("foundedness", semantics, True)


def check_supra_asp(program, semantics, config=None) -> PropertyReport:
    if not program.is_objective():
        raise UnsupportedConstruct("supra-ASP is checked on objective programs only")
    models = ht.stable_models(program, universe=program.atoms())
    expected = [frozenset(models)] if models else []
    got = world_views(program, semantics, config)
    return _report("supra-asp", semantics, got == expected, expected=_views(expected), got=_views(got))


def check_supra_s5(program, semantics, config=None) -> PropertyReport:
    theory = program_to_theory(program) if isinstance(program, Program) else tuple(program)
    for wv in world_views(program, semantics, config):
        if not ei_satisfies_theory(wv, theory):
            return _report("supra-s5", semantics, False, world_view=format_world_view(wv))
    return _report("supra-s5", semantics, True)


def check_reflexivity(program, semantics, config=None) -> PropertyReport:
    """World views unchanged by adding ``p <- K p`` for every atom."""
    extra = [Rule((ObjLit(a),), (SubjLit("K", ObjLit(a)),)) for a in sorted(program.atoms(), key=str)]
    before = world_views(program, semantics, config)
    after = world_views(program.union(extra), semantics, config)
    return _report("reflexivity", semantics, before == after, before=_views(before), after=_views(after))


def is_epistemically_tight(program):
    """``(True, level)`` with a witnessing integer level per atom, or ``(False, None)``."""
    program = program if program.is_ground() else ground(program)
    classes = nx.utils.UnionFind(program.atoms())
    for r in program:
        plain = sorted(r.atoms() - r.body_modal_atoms(), key=str)
        for a, b in zip(plain, plain[1:]):
            classes.union(a, b)
    graph = nx.DiGraph()
    graph.add_nodes_from(classes[a] for a in program.atoms())
    for r in program:
        for a in r.head_atoms() | r.body_objective_atoms():
            for l in positive_modal_literals(r):
                graph.add_edge(classes[a], classes[literal_atom(l)])
    if any(u == v for u, v in graph.edges) or not nx.is_directed_acyclic_graph(graph):
        return False, None
    depth = {}
    for node in reversed(list(nx.topological_sort(graph))):
        depth[node] = 1 + max((depth[s] for s in graph.successors(node)), default=-1)
    return True, {a: depth[classes[a]] for a in program.atoms()}


# ---------------------------------------------------------------- oracle


def _raw_sm(cache, reduct, universe):
    key = reduct
    if key not in cache:
        cache[key] = frozenset(ht.stable_models_raw(reduct, universe=universe))
    return cache[key]


def _reduct_oracle(program, semantics):
    expanded = expand_program(program)
    base = program if semantics == "g94" else expanded
    reduce = {"g94": reduce_g94, "g11": reduce_g11, "k15": reduce_k15}[semantics]
    by_wv = {"g94": subjective_reduct_sig, "g11": g11_reduct, "k15": k15_reduct}[semantics]
    universe = program.atoms()
    cores = program_modal_atoms(base)
    cache: dict = {}
    pool = set()
    for bits in itertools.product((True, False), repeat=len(cores)):
        truth = dict(zip(cores, bits))
        pool |= _raw_sm(cache, reduce(base, truth.__getitem__), universe)
    pool = sorted(pool, key=lambda i: sorted(map(str, i)))
    out = []
    for k in range(1, len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            wv = frozenset(combo)
            if _raw_sm(cache, by_wv(program, wv), universe) == wv:
                out.append(wv)
    return sort_world_views(out)


def _autoepistemic_oracle(theory, universe):
    interps = consistent_interpretations(literals_of_atoms(universe))
    if len(interps) > AUTOEPISTEMIC_ORACLE_MAX_WORLDS:
        raise CapExceeded("autoepistemic oracle is limited to two atoms")
    out = []
    for k in range(1, len(interps) + 1):
        for combo in itertools.combinations(interps, k):
            wv = frozenset(combo)
            fix = {i for i in interps if all(bi_satisfies(BeliefInterpretation(wv, i), f) for f in theory)}
            if fix == wv:
                out.append(wv)
    return sort_world_views(out)


def brute_force_world_views(program, semantics: str) -> list:
    """World views straight from each definition, enumerating sets of candidate belief sets."""
    semantics = semantics.lower()
    if semantics in ("m85", "s92"):
        theory = program_to_theory(program) if isinstance(program, Program) else tuple(program)
        universe = theory_atoms(theory)
        if semantics == "s92":
            theory = translate_b(theory, expand_m=True)
        return _autoepistemic_oracle(theory, universe)
    program = program if program.is_ground() else ground(program)
    if len(program.atoms()) > ORACLE_MAX_ATOMS:
        raise CapExceeded(f"the oracle is limited to {ORACLE_MAX_ATOMS} atoms")
    if semantics in ("g94", "g11", "k15"):
        return _reduct_oracle(program, semantics)
    if semantics == "s16":
        views = _reduct_oracle(program, "k15")
        cores = [c for c in program_modal_atoms(expand_program(program)) if c.modality == "K"]
        phi = {wv: {c for c in cores if not subjlit_holds(wv, c)} for wv in views}
        return [wv for wv in views if not any(phi[o] > phi[wv] for o in views)]
    if semantics == "c19":
        return [wv for wv in _reduct_oracle(program, "g94") if find_unfounded_set_raw(program, wv) is None]
    if semantics == "f15":
        from .f15 import f15_world_views_raw

        return f15_world_views_raw(program)
    if semantics == "fk15":
        normalized = normalize_to_program(translate_k(program))
        views = brute_force_world_views(normalized, "c19")
        return restrict_world_views(views, program.atoms())
    raise ValueError(f"no oracle for {semantics!r}")


# -------------------------------------------------------------- generator


@dataclass(frozen=True)
class RandomConfig:
    atoms: int = 3
    max_rules: int = 4
    max_head: int = 2
    max_body: int = 3
    max_head_literals: int = 4
    explicit_negation: bool = True
    modal: bool = True
    p_modal: float = 0.5
    p_strong: float = 0.2


ATOM_NAMES = ("p", "q", "r", "s", "t", "u")


def _objlit(rng, atoms, cfg, max_naf=2):
    a = rng.choice(atoms)
    core = Neg(a) if cfg.explicit_negation and rng.random() < cfg.p_strong else a
    return ObjLit(core, rng.choice([0, 0, 1, 2][: 2 + max_naf]))


def _head_pool(rng, atoms, cfg):
    pool = []
    for a in atoms:
        pool.append(a)
        if cfg.explicit_negation and rng.random() < cfg.p_strong:
            pool.append(Neg(a))
    return pool[: cfg.max_head_literals]


def _random_rules(rng, cfg, head_pool, body_atoms, modal_atoms, count):
    rules = []
    for _ in range(count):
        k = rng.randint(0, min(cfg.max_head, len(head_pool)))
        head = [ObjLit(h) for h in rng.sample(head_pool, k)]
        body = []
        for _ in range(rng.randint(0 if head else 1, cfg.max_body)):
            if cfg.modal and rng.random() < cfg.p_modal:
                inner = _objlit(rng, modal_atoms, cfg, max_naf=1)
                body.append(SubjLit(rng.choice("KM"), inner, rng.choice([0, 0, 1, 2])))
            else:
                body.append(_objlit(rng, body_atoms, cfg))
        rules.append(Rule(tuple(head), tuple(body)))
    return rules


def random_program(seed: int, config: RandomConfig | None = None) -> Program:
    """Reproducible ground program over at most ``config.atoms`` atoms."""
    cfg = config or RandomConfig()
    rng = random.Random(seed)
    atoms = [Atom(n) for n in ATOM_NAMES[: cfg.atoms]]
    rules = _random_rules(rng, cfg, _head_pool(rng, atoms, cfg), atoms, atoms, rng.randint(1, cfg.max_rules))
    return Program(tuple(rules))


def random_layered_program(seed: int, config: RandomConfig | None = None):
    """A random program together with a proper splitting set ``U`` for it.

    Bottom rules only mention atoms of ``U``; top rules keep ``U`` out of heads
    and objective bodies but may consult it through subjective literals.
    """
    cfg = config or RandomConfig(atoms=4)
    rng = random.Random(seed)
    atoms = [Atom(n) for n in ATOM_NAMES[: cfg.atoms]]
    cut = rng.randint(1, len(atoms) - 1)
    lower, upper = atoms[:cut], atoms[cut:]
    half = max(1, cfg.max_rules // 2)
    bottom = _random_rules(rng, cfg, _head_pool(rng, lower, cfg), lower, lower, rng.randint(1, half))
    top = _random_rules(rng, cfg, _head_pool(rng, upper, cfg), upper, atoms, rng.randint(1, half + 1))
    return Program(tuple(bottom + top)), frozenset(lower)


def random_constraint(seed: int, program: Program):
    rng = random.Random(seed)
    atoms = sorted(program.atoms(), key=str) or [Atom("p")]
    inner = ObjLit(rng.choice(atoms), rng.choice([0, 0, 1]))
    return literal_formula(SubjLit(rng.choice("KM"), inner, rng.choice([0, 1])))


def random_theory(seed: int, atoms: int = 2, formulas: int = 2, depth: int = 3) -> tuple:
    """Small ground theory with nested connectives and modalities."""
    rng = random.Random(seed)
    pool = [Atom(n) for n in ATOM_NAMES[:atoms]]

    def build(d):
        if d == 0 or rng.random() < 0.3:
            a = rng.choice(pool)
            return Neg(a) if rng.random() < 0.15 else a
        kind = rng.choice(["and", "or", "impl", "not", "K", "M"])
        if kind == "and":
            return And((build(d - 1), build(d - 1)))
        if kind == "or":
            return Or((build(d - 1), build(d - 1)))
        if kind == "impl":
            return Impl(build(d - 1), build(d - 1))
        if kind == "not":
            return naf(build(d - 1))
        return (K if kind == "K" else M)(build(d - 1))

    return tuple(build(depth) for _ in range(rng.randint(1, formulas)))


# ---------------------------------------------------------------- campaign


def _known_counterexamples():
    from .corpus import load

    p2, p3, p3c, p4, p5 = (load(n) for n in ("P2", "P3", "P3c", "P4", "P5"))
    pq = Program(tuple(r for r in p5 if r.head))
    kp = K(Atom("p"))
    u = {Atom("p"), Atom("q")}
    out = []
    for s in ("k15", "s16", "f15"):
        out.append(("P5", check_constraint_monotonicity(pq, [kp], s)))
    for s in ("g11", "k15", "s16", "f15"):
        out.append(("P4", check_splitting_instance(p4, s, u)))
    for s in ("g94", "g11", "k15"):
        out.append(("P3", check_foundedness(p3, s)))
    out.append(("P2", check_foundedness(p2, "s16")))
    out.append(("P3c", check_foundedness(p3c, "f15")))
    return out


SMALL_CORPUS = ("P1", "P2", "P3", "P3c", "P4", "P4n", "P5", "P6", "P10")


def _corpus_reports():
    """Supra-S5 and foundedness on the small bundled programs, for every compared semantics."""
    from .corpus import load

    out = []
    for name in SMALL_CORPUS:
        program = load(name)
        for s in COMPARED_SEMANTICS:
            out.append((name, check_supra_s5(program, s)))
            out.append((name, check_foundedness(program, s)))
    return out


def run_instance(seed: int, semantics=COMPARED_SEMANTICS):
    """All property checks for one seed: a random program, a layered program and an objective one.

    Returns the reports and a list of checks skipped because a size cap was hit.
    """
    program = random_program(seed)
    layered, u = random_layered_program(seed)
    objective = random_program(seed, RandomConfig(modal=False))
    constraint = random_constraint(seed, program)
    checks = []
    for s in semantics:
        checks += [
            ("supra-s5", s, lambda s=s: check_supra_s5(program, s)),
            ("supra-asp", s, lambda s=s: check_supra_asp(objective, s)),
            ("constraint-monotonicity", s, lambda s=s: check_constraint_monotonicity(program, [constraint], s)),
            ("splitting", s, lambda s=s: check_splitting_instance(layered, s, u)),
            ("foundedness", s, lambda s=s: check_foundedness(program, s)),
        ]
    reports, skipped = [], []
    for prop, s, check in checks:
        try:
            reports.append(check())
        except CapExceeded as e:
            skipped.append({"seed": seed, "property": prop, "semantics": s, "reason": str(e)})
    return reports, skipped


def _instance(seed):
    return (seed, *run_instance(seed))


def campaign(seeds, parallel: int = 1, include_known: bool = True) -> dict:
    """Property matrix over random instances (and the bundled counterexamples)."""
    seeds = list(seeds)
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_instance, seeds, chunksize=max(1, len(seeds) // (8 * parallel))))
    else:
        results = [_instance(s) for s in seeds]
    cells = {p: {s: {"checked": 0, "violations": 0, "examples": []} for s in COMPARED_SEMANTICS} for p in PROPERTIES}
    skipped = []
    for seed, reports, skips in results:
        skipped.extend(skips)
        for r in reports:
            cell = cells[r.property][r.semantics]
            cell["checked"] += 1
            if not r.holds:
                cell["violations"] += 1
                if len(cell["examples"]) < 3:
                    cell["examples"].append({"source": f"seed:{seed}", **r.witness})
    if include_known:
        for name, r in _corpus_reports() + _known_counterexamples():
            cell = cells[r.property][r.semantics]
            cell["checked"] += 1
            if not r.holds:
                cell["violations"] += 1
                cell["examples"].insert(0, {"source": f"corpus:{name}", **r.witness})
    for p in PROPERTIES:
        for s in COMPARED_SEMANTICS:
            cells[p][s]["expected"] = s in EXPECTED[p]
    return {"seeds": [seeds[0], seeds[-1]] if seeds else [], "instances": len(seeds), "skipped": skipped, "cells": cells}


def matrix_mismatches(result: dict) -> list:
    """Cells whose outcome disagrees with the expected matrix."""
    bad = []
    for p, row in result["cells"].items():
        for s, cell in row.items():
            if cell["expected"] and cell["violations"]:
                bad.append((p, s, "violated"))
            if p in ("constraint-monotonicity", "splitting", "foundedness") and not cell["expected"] and not cell["violations"]:
                bad.append((p, s, "no counterexample"))
    return bad
