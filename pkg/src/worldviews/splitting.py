"""Epistemic splitting sets and layered (bottom, then top) evaluation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .epistemic import format_world_view, reduce_g94, sort_world_views, truth_in
from .errors import WorldViewError
from .reports import COUNTEREXAMPLE, HOLDS, PropertyReport
from .syntax import Program, Rule, ground

EXHAUSTIVE_ATOMS = 8


class NotASplittingSet(WorldViewError):
    pass


@dataclass(frozen=True)
class Splitting:
    U: frozenset
    bottom: Program
    top: Program


def _regular_atoms(rule: Rule) -> set:
    return rule.head_atoms() | rule.body_objective_atoms()


def _bottom_ok(rule: Rule, u) -> bool:
    return rule.atoms() <= u


def _top_ok(rule: Rule, u) -> bool:
    return not (_regular_atoms(rule) & u)


def _ground(program: Program) -> Program:
    return program if program.is_ground() else ground(program)


def is_splitting_set(u, program: Program) -> bool:
    u = set(u)
    return all(_bottom_ok(r, u) or _top_ok(r, u) for r in _ground(program))


def split(u, program: Program) -> Splitting:
    program = _ground(program)
    u = frozenset(u)
    bottom, top = [], []
    for r in program:
        if _bottom_ok(r, u):
            bottom.append(r)
        elif _top_ok(r, u):
            top.append(r)
        else:
            raise NotASplittingSet(f"rule {r} is neither inside nor above {sorted(map(str, u))}")
    return Splitting(u, Program(tuple(bottom), program.constants), Program(tuple(top), program.constants))


def top_reduct(top: Program, wv, u) -> Program:
    """``E_U``: subjective literals over ``U`` fixed by their truth in the bottom world view."""
    return reduce_g94(top, truth_in(wv), frozenset(u))


def combine(wv_b, wv_t) -> frozenset:
    return frozenset(ib | it for ib in wv_b for it in wv_t)


def solve_via_splitting(program: Program, semantics: str, u, config=None) -> list:
    from .semantics import world_views

    parts = split(u, program)
    out = []
    for wv_b in world_views(parts.bottom, semantics, config):
        for wv_t in world_views(top_reduct(parts.top, wv_b, parts.U), semantics, config):
            out.append(combine(wv_b, wv_t))
    return sort_world_views(out)


def check_splitting_instance(program: Program, semantics: str, u, config=None) -> PropertyReport:
    from .semantics import world_views

    direct = world_views(_ground(program), semantics, config)
    layered = solve_via_splitting(program, semantics, u, config)
    witness = {
        "program": str(program),
        "U": sorted(map(str, u)),
        "direct": [format_world_view(w) for w in direct],
        "layered": [format_world_view(w) for w in layered],
    }
    verdict = HOLDS if direct == layered else COUNTEREXAMPLE
    return PropertyReport("splitting", semantics, verdict, witness)


def splitting_closure(seed, program: Program) -> frozenset:
    """Least splitting set containing ``seed``."""
    program = _ground(program)
    u = set(seed)
    changed = True
    while changed:
        changed = False
        for r in program:
            if _regular_atoms(r) & u and not r.atoms() <= u:
                u |= r.atoms()
                changed = True
    return frozenset(u)


def find_splitting_sets(program: Program, proper: bool = True) -> list:
    """Splitting sets of the program; exhaustive up to a few atoms, per-atom closures beyond."""
    program = _ground(program)
    atoms = sorted(program.atoms(), key=str)
    if len(atoms) <= EXHAUSTIVE_ATOMS:
        seeds = (c for k in range(len(atoms) + 1) for c in itertools.combinations(atoms, k))
    else:
        seeds = [()] + [(a,) for a in atoms]
    found = {splitting_closure(s, program) for s in seeds}
    if proper:
        found = {u for u in found if u and u != frozenset(atoms)}
    return sorted(found, key=lambda u: (len(u), sorted(map(str, u))))
