"""Belief-interpretation semantics and the reducts that remove modal operators."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedConstruct
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
    ObjLit,
    Or,
    Program,
    Rule,
    SubjLit,
    Top,
    children,
    expand_program,
    interpretation_key,
    is_consistent,
    literal_atom,
    rebuild,
    reduce_naf,
)


def make_world_view(sets) -> frozenset:
    """Validate and freeze a collection of interpretations into an epistemic interpretation."""
    wv = frozenset(frozenset(s) for s in sets)
    if not wv:
        raise ValueError("an epistemic interpretation needs at least one belief set")
    for s in wv:
        if not is_consistent(s):
            raise ValueError(f"inconsistent belief set {sorted(map(str, s))}")
    return wv


def world_view_key(wv) -> tuple:
    return tuple(sorted(interpretation_key(i) for i in wv))


def sort_world_views(wvs) -> list:
    return sorted(set(wvs), key=world_view_key)


def format_interpretation(interp) -> str:
    return "{" + ", ".join(interpretation_key(interp)) + "}"


def format_world_view(wv) -> str:
    return "[" + ", ".join("{" + ", ".join(k) + "}" for k in world_view_key(wv)) + "]"


@dataclass(frozen=True)
class BeliefInterpretation:
    world_view: frozenset
    here: frozenset


def _bsat(w, i, f) -> bool:
    if isinstance(f, Atom):
        if not f.is_ground:
            raise UnsupportedConstruct(f"non-ground atom {f}")
        return f in i
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return all(_bsat(w, i, g) for g in f.args)
    if isinstance(f, Or):
        return any(_bsat(w, i, g) for g in f.args)
    if isinstance(f, Impl):
        return _bsat(w, i, f.head) or not _bsat(w, i, f.body)
    if isinstance(f, K):
        return all(_bsat(w, j, f.arg) for j in w)
    if isinstance(f, M):
        return any(_bsat(w, j, f.arg) for j in w)
    if isinstance(f, Neg):
        return _bfal(w, i, f.arg)
    if isinstance(f, (Exists, Forall)):
        raise UnsupportedConstruct(f"quantifier must be grounded first: {f}")
    raise TypeError(f"not a formula: {f!r}")


def _bfal(w, i, f) -> bool:
    if isinstance(f, Atom):
        if not f.is_ground:
            raise UnsupportedConstruct(f"non-ground atom {f}")
        return Neg(f) in i
    if isinstance(f, Top):
        return False
    if isinstance(f, Bot):
        return True
    if isinstance(f, And):
        return any(_bfal(w, i, g) for g in f.args)
    if isinstance(f, Or):
        return all(_bfal(w, i, g) for g in f.args)
    if isinstance(f, Impl):
        return _bfal(w, i, f.head) and _bsat(w, i, f.body)
    if isinstance(f, K):
        return all(_bfal(w, j, f.arg) for j in w)
    if isinstance(f, M):
        return any(_bfal(w, j, f.arg) for j in w)
    if isinstance(f, Neg):
        return _bsat(w, i, f.arg)
    if isinstance(f, (Exists, Forall)):
        raise UnsupportedConstruct(f"quantifier must be grounded first: {f}")
    raise TypeError(f"not a formula: {f!r}")


def bi_satisfies(bi: BeliefInterpretation, formula) -> bool:
    return _bsat(bi.world_view, bi.here, formula)


def bi_falsifies(bi: BeliefInterpretation, formula) -> bool:
    return _bfal(bi.world_view, bi.here, formula)


def ei_satisfies(wv, formula) -> bool:
    """``wv`` is an epistemic model of the formula: every member satisfies it."""
    return all(_bsat(wv, i, formula) for i in wv)


def ei_satisfies_theory(wv, theory) -> bool:
    return all(ei_satisfies(wv, f) for f in theory)


def satisfies_at(wv, interp, formula) -> bool:
    return _bsat(wv, interp, formula)


# ---------------------------------------------------------- literals


def objlit_holds(interp, lit: ObjLit) -> bool:
    if lit.core == TOP:
        value = True
    elif lit.core == BOT:
        value = False
    else:
        value = lit.core in interp
    return value if lit.naf % 2 == 0 else not value


def subjlit_holds(wv, lit: SubjLit) -> bool:
    inner = lit.inner
    if lit.modality == "K":
        value = all(objlit_holds(i, inner) for i in wv)
    else:
        value = any(objlit_holds(i, inner) for i in wv)
    return value if lit.naf % 2 == 0 else not value


def modal_core(lit: SubjLit) -> SubjLit:
    """The literal without its outer default negations."""
    return SubjLit(lit.modality, lit.inner, 0)


def program_modal_atoms(program: Program) -> list:
    return sorted({modal_core(l) for r in program for l in r.subjective_body}, key=str)


# ------------------------------------------------------- formula level


def maximal_modal_subformulas(f) -> list:
    """Outermost K/M subformulas, left to right, without duplicates."""
    out: list = []

    def walk(g):
        if isinstance(g, (K, M)):
            if g not in out:
                out.append(g)
            return
        for c in children(g):
            walk(c)

    walk(f)
    return out


def theory_modal_subformulas(theory) -> list:
    out: list = []
    for f in theory:
        for g in maximal_modal_subformulas(f):
            if g not in out:
                out.append(g)
    return out


def replace_modal(f, values: dict):
    """Substitute every maximal K/M subformula by ``TOP``/``BOT`` from ``values``."""
    if isinstance(f, (K, M)):
        return TOP if values[f] else BOT
    kids = children(f)
    if not kids:
        return f
    return rebuild(f, [replace_modal(c, values) for c in kids])


def g94_reduct(theory, wv):
    """Objective theory (or program) obtained by fixing every maximal modal subformula's truth in ``wv``."""
    if isinstance(theory, Program):
        return subjective_reduct_sig(theory, wv, None)
    values = {g: ei_satisfies(wv, g) for g in theory_modal_subformulas(theory)}
    return tuple(replace_modal(f, values) for f in theory)


# ---------------------------------------------------------- rule level


def _truth(value: bool) -> ObjLit:
    return ObjLit(TOP if value else BOT)


def truth_in(wv):
    """Truth function for modal cores (un-negated ``K l`` / ``M l``) in ``wv``."""
    return lambda core: subjlit_holds(wv, core)


def literal_value(truth, lit: SubjLit) -> bool:
    value = truth(modal_core(lit))
    return value if lit.naf % 2 == 0 else not value


def _map_rules(program: Program, fn) -> Program:
    rules = []
    for r in program:
        body = []
        for l in r.body:
            out = fn(l) if isinstance(l, SubjLit) else l
            if out is not None:
                body.append(out)
        rules.append(Rule(r.head, tuple(body)))
    return Program(tuple(rules), program.constants)


def reduce_g94(program: Program, truth, signature=None) -> Program:
    def fn(l):
        if signature is not None and l.inner.is_literal and literal_atom(l.inner.core) not in signature:
            return l
        return _truth(literal_value(truth, l))

    return _map_rules(program, fn)


def reduce_g11(program: Program, truth) -> Program:
    """Expects ``M`` already expanded."""

    def fn(l):
        if not literal_value(truth, l):
            return ObjLit(BOT)
        if l.naf > 0:
            return None
        return l.inner

    return _map_rules(program, fn)


def reduce_k15(program: Program, truth) -> Program:
    """Expects ``M`` already expanded."""

    def fn(l):
        if truth(modal_core(l)):
            return ObjLit(l.inner.core, reduce_naf(l.inner.naf + l.naf))
        return ObjLit(BOT, l.naf)

    return _map_rules(program, fn)


def subjective_reduct_sig(program: Program, wv, signature=None) -> Program:
    """Replace subjective literals whose atoms lie in ``signature`` (all when None) by their truth value."""
    return reduce_g94(program, truth_in(wv), signature)


def g11_reduct(program: Program, wv) -> Program:
    if not isinstance(program, Program):
        raise UnsupportedConstruct("the G11 reduct is defined on programs only")
    return reduce_g11(expand_program(program), truth_in(wv))


def k15_reduct(program: Program, wv) -> Program:
    if not isinstance(program, Program):
        raise UnsupportedConstruct("the K15 reduct is defined on programs only")
    return reduce_k15(expand_program(program), truth_in(wv))
