"""F15: equilibrium models over pairs ``<W, h>`` and the world-view selection on top.

``M`` is primitive here.  A literal holds at world ``I`` under ``h`` when it
belongs to ``h(I)``; implications are checked both under ``h`` and under the
identity.  Everything is brute force, so inputs must stay small.
"""

from __future__ import annotations

import functools
import itertools

from .epistemic import replace_modal, sort_world_views, theory_modal_subformulas
from .errors import CapExceeded, UnsupportedConstruct
from .syntax import (
    BOT,
    TOP,
    And,
    Atom,
    Bot,
    Exists,
    Forall,
    Impl,
    K,
    M,
    Neg,
    Or,
    Program,
    Top,
    children,
    consistent_interpretations,
    ground,
    ground_theory,
    interpretation_key,
    is_objective,
    literal_atom,
    naf,
    program_to_theory,
    rebuild,
    theory_atoms,
)

MAX_H = 1 << 16
MAX_POOL = 16
ORACLE_MAX_WORLDS = 12


def push_negation(f):
    """Explicit negation down to atoms; ``K``/``M`` commute with it."""
    if isinstance(f, Neg):
        g = f.arg
        if isinstance(g, Atom):
            return f
        if isinstance(g, Neg):
            return push_negation(g.arg)
        if isinstance(g, Top):
            return BOT
        if isinstance(g, Bot):
            return TOP
        if isinstance(g, And):
            return Or(tuple(push_negation(Neg(a)) for a in g.args))
        if isinstance(g, Or):
            return And(tuple(push_negation(Neg(a)) for a in g.args))
        if isinstance(g, Impl):
            return And((push_negation(Neg(g.head)), naf(naf(push_negation(g.body)))))
        if isinstance(g, K):
            return K(push_negation(Neg(g.arg)))
        if isinstance(g, M):
            return M(push_negation(Neg(g.arg)))
        raise UnsupportedConstruct(f"quantifier must be grounded first: {f}")
    if isinstance(f, And):
        return And(tuple(push_negation(a) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(push_negation(a) for a in f.args))
    if isinstance(f, Impl):
        return Impl(push_negation(f.head), push_negation(f.body))
    if isinstance(f, K):
        return K(push_negation(f.arg))
    if isinstance(f, M):
        return M(push_negation(f.arg))
    if isinstance(f, (Exists, Forall)):
        raise UnsupportedConstruct(f"quantifier must be grounded first: {f}")
    return f


@functools.lru_cache(maxsize=None)
def compile_formula(f):
    """Turn a formula (negation pushed to atoms) into ``fn(worlds, h, idx) -> bool``.

    ``h`` is a tuple aligned with ``worlds``; ``worlds`` itself plays the identity.
    """
    if isinstance(f, (Atom, Neg)):
        return lambda w, h, i: f in h[i]
    if isinstance(f, Top):
        return lambda w, h, i: True
    if isinstance(f, Bot):
        return lambda w, h, i: False
    if isinstance(f, And):
        parts = [compile_formula(g) for g in f.args]
        return lambda w, h, i: all(p(w, h, i) for p in parts)
    if isinstance(f, Or):
        parts = [compile_formula(g) for g in f.args]
        return lambda w, h, i: any(p(w, h, i) for p in parts)
    if isinstance(f, Impl):
        head, body = compile_formula(f.head), compile_formula(f.body)

        def impl(w, h, i):
            if body(w, h, i) and not head(w, h, i):
                return False
            return h is w or not body(w, w, i) or head(w, w, i)

        return impl
    if isinstance(f, K):
        arg = compile_formula(f.arg)
        return lambda w, h, i: all(arg(w, h, j) for j in range(len(w)))
    if isinstance(f, M):
        arg = compile_formula(f.arg)
        return lambda w, h, i: any(arg(w, h, j) for j in range(len(w)))
    raise UnsupportedConstruct(f"unsupported formula in F15: {f}")


def satisfies(worlds, h, idx, f) -> bool:
    """``<W, h>, I |= f`` with ``I = worlds[idx]``."""
    return compile_formula(f)(worlds, h, idx)


def is_model_at(compiled, worlds, h, indices) -> bool:
    return all(fn(worlds, h, i) for i in indices for fn in compiled)


def _h_choices(worlds, free):
    """Every ``h`` with ``h(I) = I`` outside ``free`` and ``h(I)`` a subset of ``I`` inside."""
    options = []
    total = 1
    for i, w in enumerate(worlds):
        if i in free:
            lits = sorted(w, key=str)
            subs = [frozenset(c) for k in range(len(lits) + 1) for c in itertools.combinations(lits, k)]
            options.append(subs)
            total *= len(subs)
        else:
            options.append([w])
        if total > MAX_H:
            raise CapExceeded(f"more than {MAX_H} candidate functions h")
    worlds_t = tuple(worlds)
    for h in itertools.product(*options):
        if h != worlds_t:
            yield h


def _subsets(interp):
    lits = sorted(interp, key=str)
    return [frozenset(c) for k in range(len(lits) + 1) for c in itertools.combinations(lits, k)]


def _mark_modal(f, markers):
    """Maximal modal subformulas replaced by their marker atoms."""
    if isinstance(f, (K, M)):
        return markers[f]
    kids = children(f)
    if not kids:
        return f
    return rebuild(f, [_mark_modal(c, markers) for c in kids])


def _normalise(theory):
    if isinstance(theory, Program):
        program = theory if theory.is_ground() else ground(theory)
        return tuple(push_negation(f) for f in program_to_theory(program)), _head_literals(program)
    theory = ground_theory(tuple(theory))
    lits = set()
    for a in theory_atoms(theory):
        lits |= {a, Neg(a)}
    return tuple(push_negation(f) for f in theory), lits


def _head_literals(program: Program) -> set:
    return {h.core for r in program for h in r.head if h.naf == 0 and h.is_literal}


class F15Solver:
    """Holds the normalised theory and caches the pieces shared by the definitions."""

    def __init__(self, theory, max_atoms: int = 4):
        self.theory, self.literals = _normalise(theory)
        self.compiled = [compile_formula(f) for f in self.theory]
        self.modal = theory_modal_subformulas(self.theory)
        self.markers = {g: Atom(f"#m{k}") for k, g in enumerate(self.modal)}
        self.local = [compile_formula(_mark_modal(f, self.markers)) for f in self.theory]
        atoms = {literal_atom(l) for l in self.literals}
        if len(atoms) > max_atoms:
            raise CapExceeded(f"F15 is limited to {max_atoms} atoms; this input has {len(atoms)}")
        self.interpretations = sorted(consistent_interpretations(self.literals), key=interpretation_key)
        self._eq = None

    # -- definitions -----------------------------------------------------

    def is_id_model(self, wv) -> bool:
        worlds = tuple(sorted(wv, key=interpretation_key))
        return is_model_at(self.compiled, worlds, worlds, range(len(worlds)))

    def is_equilibrium(self, wv) -> bool:
        return self.star(wv, wv)

    def star(self, big, small) -> bool:
        """``big, small |=* theory`` for ``small`` a subset of ``big``."""
        worlds = tuple(sorted(big, key=interpretation_key))
        inside = [i for i, w in enumerate(worlds) if w in small]
        if not is_model_at(self.compiled, worlds, worlds, inside):
            return False
        return self._model_h(worlds, inside) is None

    def refuting_h(self, wv):
        """An ``h`` other than the identity making ``<wv, h>`` a model, if any."""
        worlds = tuple(sorted(wv, key=interpretation_key))
        h = self._model_h(worlds, range(len(worlds)))
        return None if h is None else dict(zip(worlds, h))

    def _model_h(self, worlds, inside):
        """Some ``h`` other than the identity, moving only ``inside``, with
        ``<worlds, h>`` a model at ``inside``; None if there is none.

        The value of each maximal modal subformula under ``h`` is guessed
        first.  With those fixed, a world only constrains its own ``h(I)``, so
        the admissible values are filtered per world before combining them.
        """
        inside = list(inside)
        there = {g: compile_formula(g)(worlds, worlds, 0) for g in self.modal}
        open_items = [g for g in self.modal if there[g]]
        for bits in itertools.product((True, False), repeat=len(open_items)):
            here = dict.fromkeys(self.modal, False)
            here.update(zip(open_items, bits))
            h_marks = frozenset(self.markers[g] for g in self.modal if here[g])
            t_marks = frozenset(self.markers[g] for g in self.modal if there[g])
            options = [[w] for w in worlds]
            total = 1
            for i in inside:
                wx = (worlds[i] | t_marks,)
                options[i] = [
                    sub
                    for sub in _subsets(worlds[i])
                    if all(fn(wx, (sub | h_marks,), 0) for fn in self.local)
                ]
                total *= len(options[i])
                if total > MAX_H:
                    raise CapExceeded(f"more than {MAX_H} candidate functions h")
            for h in itertools.product(*options):
                if h == worlds:
                    continue
                if all(compile_formula(g)(worlds, h, 0) == here[g] for g in self.modal):
                    if is_model_at(self.compiled, worlds, h, inside):
                        return h
        return None

    def _model_h_raw(self, worlds, inside):
        """Same as ``_model_h`` by enumerating every ``h`` (cross-check only)."""
        inside = list(inside)
        for h in _h_choices(worlds, set(inside)):
            if is_model_at(self.compiled, worlds, h, inside):
                return h
        return None

    # -- enumeration -----------------------------------------------------

    def _candidates(self):
        """Epistemic models, found by guessing the truth of maximal modal subformulas."""
        items = theory_modal_subformulas(self.theory)
        if (1 << len(items)) > (1 << 16):
            raise CapExceeded("too many modal subformulas for F15")
        found = set()
        for bits in itertools.product((True, False), repeat=len(items)):
            values = dict(zip(items, bits))
            reduct = tuple(replace_modal(f, values) for f in self.theory)
            pool = [i for i in self.interpretations if self._classical(reduct, i)]
            must_all = [g.arg for g, v in values.items() if isinstance(g, K) and v and is_objective(g.arg)]
            must_none = [g.arg for g, v in values.items() if isinstance(g, M) and not v and is_objective(g.arg)]
            pool = [
                i
                for i in pool
                if all(self._classical((f,), i) for f in must_all)
                and not any(self._classical((f,), i) for f in must_none)
            ]
            if len(pool) > MAX_POOL:
                raise CapExceeded(f"F15 candidate pool of {len(pool)} interpretations exceeds {MAX_POOL}")
            for k in range(1, len(pool) + 1):
                for combo in itertools.combinations(pool, k):
                    wv = frozenset(combo)
                    if wv in found:
                        continue
                    worlds = tuple(sorted(wv, key=interpretation_key))
                    if all(satisfies(worlds, worlds, 0, g) == v for g, v in values.items()):
                        if is_model_at(self.compiled, worlds, worlds, range(len(worlds))):
                            found.add(wv)
        return found

    @staticmethod
    def _classical(theory, interp) -> bool:
        worlds = (interp,)
        return all(compile_formula(f)(worlds, worlds, 0) for f in theory)

    def equilibrium_models(self) -> list:
        if self._eq is None:
            self._eq = sort_world_views(wv for wv in self._candidates() if self.is_equilibrium(wv))
        return list(self._eq)

    def support(self, wv, eq=None) -> frozenset:
        """``{I in E : W + {I}, W |=* theory}`` with ``E`` the members of equilibrium models."""
        eq = self.equilibrium_models() if eq is None else eq
        members = frozenset().union(*eq) if eq else frozenset()
        return frozenset(i for i in members if self.star(wv | {i}, wv))

    def world_views(self) -> list:
        return select_world_views(self.equilibrium_models(), self.support)


def select_world_views(eq, support) -> list:
    supports = {wv: support(wv) for wv in eq}
    out = []
    for wv in eq:
        beaten = any(o != wv and (wv < o or supports[wv] < supports[o]) for o in eq)
        if not beaten:
            out.append(wv)
    return sort_world_views(out)


def f15_world_views(theory, config=None) -> list:
    max_atoms = config.f15_max_atoms if config is not None else 4
    return F15Solver(theory, max_atoms).world_views()


def f15_equilibrium_models(theory, config=None) -> list:
    max_atoms = config.f15_max_atoms if config is not None else 4
    return F15Solver(theory, max_atoms).equilibrium_models()


def f15_world_views_raw(theory, max_worlds: int = ORACLE_MAX_WORLDS) -> list:
    """Oracle: every non-empty set of consistent interpretations is a candidate."""
    solver = F15Solver(theory, max_atoms=4)
    interps = solver.interpretations
    if len(interps) > max_worlds:
        raise CapExceeded(f"raw F15 oracle is limited to {max_worlds} interpretations")
    eq = []
    for k in range(1, len(interps) + 1):
        for combo in itertools.combinations(interps, k):
            wv = frozenset(combo)
            if solver.is_id_model(wv) and solver.is_equilibrium(wv):
                eq.append(wv)
    return select_world_views(eq, lambda wv: solver.support(wv, eq))
