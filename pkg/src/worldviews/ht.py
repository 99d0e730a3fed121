"""Here-and-there semantics and stable models of objective theories.

Satisfaction and falsification follow the usual two-world reading with
strong negation.  Stable models are computed by translating the theory into
rules whose heads are explicit literals and whose bodies hold literals under
at most two default negations, then running a small backtracking search.  A
raw enumeration oracle is kept for cross-checking on small signatures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

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
    ObjLit,
    Or,
    Program,
    Rule,
    Top,
    complement,
    consistent_interpretations,
    interpretation_key,
    is_consistent,
    is_explicit_literal,
    is_naf,
    literal_atom,
    literals_of_atoms,
    naf,
    theory_atoms,
)

DEFAULT_MAX_ATOMS = 18
ORACLE_MAX_ATOMS = 6


@dataclass(frozen=True)
class HTPair:
    here: frozenset
    there: frozenset

    def __post_init__(self):
        object.__setattr__(self, "here", frozenset(self.here))
        object.__setattr__(self, "there", frozenset(self.there))
        if not self.here <= self.there:
            raise ValueError("here must be a subset of there")
        if not is_consistent(self.there):
            raise ValueError("interpretations must be consistent")


def _pair(pair):
    if isinstance(pair, HTPair):
        return pair.here, pair.there
    h, t = pair
    return frozenset(h), frozenset(t)


def _check_atom(a: Atom):
    if not a.is_ground:
        raise UnsupportedConstruct(f"non-ground atom {a}")


def _sat(h, t, f) -> bool:
    if isinstance(f, Atom):
        _check_atom(f)
        return f in h
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return all(_sat(h, t, g) for g in f.args)
    if isinstance(f, Or):
        return any(_sat(h, t, g) for g in f.args)
    if isinstance(f, Impl):
        if h is not t and not (_sat(h, t, f.head) or not _sat(h, t, f.body)):
            return False
        return _sat(t, t, f.head) or not _sat(t, t, f.body)
    if isinstance(f, Neg):
        return _fal(h, t, f.arg)
    if isinstance(f, (K, M)):
        raise UnsupportedConstruct(f"modal operator in objective formula: {f}")
    if isinstance(f, (Exists, Forall)):
        raise UnsupportedConstruct(f"quantifier must be expanded before evaluation: {f}")
    raise TypeError(f"not a formula: {f!r}")


def _fal(h, t, f) -> bool:
    if isinstance(f, Atom):
        _check_atom(f)
        return Neg(f) in h
    if isinstance(f, Top):
        return False
    if isinstance(f, Bot):
        return True
    if isinstance(f, And):
        return any(_fal(h, t, g) for g in f.args)
    if isinstance(f, Or):
        return all(_fal(h, t, g) for g in f.args)
    if isinstance(f, Impl):
        return _fal(h, t, f.head) and _sat(t, t, f.body)
    if isinstance(f, Neg):
        return _sat(h, t, f.arg)
    if isinstance(f, (K, M)):
        raise UnsupportedConstruct(f"modal operator in objective formula: {f}")
    if isinstance(f, (Exists, Forall)):
        raise UnsupportedConstruct(f"quantifier must be expanded before evaluation: {f}")
    raise TypeError(f"not a formula: {f!r}")


def ht_satisfies(pair, formula) -> bool:
    h, t = _pair(pair)
    return _sat(t if h == t else h, t, formula)


def ht_falsifies(pair, formula) -> bool:
    h, t = _pair(pair)
    return _fal(t if h == t else h, t, formula)


def classically_satisfies(interp, formula) -> bool:
    t = frozenset(interp)
    return _sat(t, t, formula)


def is_ht_model(pair, theory) -> bool:
    return all(ht_satisfies(pair, f) for f in theory)


# ------------------------------------------------------------ to rules


def push_strong_negation(f):
    """Move explicit negation down to atoms (equivalence holds for satisfaction)."""
    if isinstance(f, Neg):
        g = f.arg
        if isinstance(g, Atom):
            return f
        if isinstance(g, Neg):
            return push_strong_negation(g.arg)
        if isinstance(g, Top):
            return BOT
        if isinstance(g, Bot):
            return TOP
        if isinstance(g, And):
            return Or(tuple(push_strong_negation(Neg(a)) for a in g.args))
        if isinstance(g, Or):
            return And(tuple(push_strong_negation(Neg(a)) for a in g.args))
        if isinstance(g, Impl):
            return And((push_strong_negation(Neg(g.head)), naf(naf(push_strong_negation(g.body)))))
        raise UnsupportedConstruct(f"cannot normalise {f}")
    if isinstance(f, And):
        return And(tuple(push_strong_negation(a) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(push_strong_negation(a) for a in f.args))
    if isinstance(f, Impl):
        return Impl(push_strong_negation(f.head), push_strong_negation(f.body))
    if isinstance(f, (K, M, Exists, Forall)):
        raise UnsupportedConstruct(f"not a ground objective formula: {f}")
    return f


def _dnf(f):
    """Classical DNF as a list of terms.  Only meaningful at T, so implications are read classically."""
    if is_explicit_literal(f):
        return [frozenset([f])]
    if isinstance(f, Top):
        return [frozenset()]
    if isinstance(f, Bot):
        return []
    if isinstance(f, Or):
        out = []
        for a in f.args:
            out.extend(_dnf(a))
        return out
    if isinstance(f, And):
        out = [frozenset()]
        for a in f.args:
            out = [x | y for x in out for y in _dnf(a)]
        return out
    if isinstance(f, Impl):
        # head or classical negation of body
        return _dnf(f.head) + _dnf_neg(f.body)
    raise UnsupportedConstruct(f"cannot normalise {f}")


def _dnf_neg(f):
    """DNF of the classical (T-level) complement of f, over atoms ``x`` and ``not x`` markers."""
    if is_explicit_literal(f):
        return [frozenset([naf(f)])]
    if isinstance(f, Top):
        return []
    if isinstance(f, Bot):
        return [frozenset()]
    if isinstance(f, And):
        out = []
        for a in f.args:
            out.extend(_dnf_neg(a))
        return out
    if isinstance(f, Or):
        out = [frozenset()]
        for a in f.args:
            out = [x | y for x in out for y in _dnf_neg(a)]
        return out
    if isinstance(f, Impl):
        out = []
        for x in _dnf(f.body):
            for y in _dnf_neg(f.head):
                out.append(x | y)
        return out
    raise UnsupportedConstruct(f"cannot normalise {f}")


def _t_level(f, positive: bool):
    """``not not f`` (positive) or ``not f`` as a formula over ``not``/``not not`` literals."""
    terms = _dnf(f) if positive else _dnf_neg(f)
    # a term mixes explicit literals x (meaning x in T) and markers not x (x not in T)
    def item(x):
        return x if is_naf(x) else naf(naf(x))

    return Or(tuple(And(tuple(item(x) for x in sorted(t, key=str))) for t in terms))


def formula_to_rules(f) -> list:
    """Strongly equivalent list of objective rules (heads: explicit literals)."""
    f = push_strong_negation(f)
    out = []
    if isinstance(f, Impl) and not is_naf(f):
        _split([f.head], [f.body], out)
    else:
        _split([f], [], out)
    return out


def _item_objlit(x):
    if is_explicit_literal(x):
        return ObjLit(x, 0)
    if is_naf(x) and is_explicit_literal(x.body):
        return ObjLit(x.body, 1)
    if is_naf(x) and is_naf(x.body) and is_explicit_literal(x.body.body):
        return ObjLit(x.body.body, 2)
    return None


def _split(heads, body, out):
    # body
    for i, b in enumerate(body):
        rest = body[:i] + body[i + 1 :]
        if isinstance(b, Top):
            return _split(heads, rest, out)
        if isinstance(b, Bot):
            return
        if _item_objlit(b) is not None:
            continue
        if isinstance(b, And):
            return _split(heads, rest + list(b.args), out)
        if isinstance(b, Or):
            for a in b.args:
                _split(heads, rest + [a], out)
            return
        if is_naf(b):
            inner = b.body
            if is_naf(inner):
                return _split(heads, rest + [_t_level(inner.body, True)], out)
            return _split(heads, rest + [_t_level(inner, False)], out)
        if isinstance(b, Impl):
            phi, psi = b.body, b.head
            _split(heads, rest + [psi], out)
            _split(heads, rest + [naf(phi)], out)
            _split(heads + [phi, naf(psi)], rest, out)
            return
        raise UnsupportedConstruct(f"cannot normalise {b}")
    # head
    for i, h in enumerate(heads):
        rest = heads[:i] + heads[i + 1 :]
        if isinstance(h, Bot):
            return _split(rest, body, out)
        if isinstance(h, Top):
            return
        if is_explicit_literal(h):
            continue
        if isinstance(h, Or):
            return _split(rest + list(h.args), body, out)
        if isinstance(h, And):
            for a in h.args:
                _split(rest + [a], body, out)
            return
        if is_naf(h):
            return _split(rest, body + [naf(h)], out)
        if isinstance(h, Impl):
            phi, psi = h.body, h.head
            _split(rest + [psi], body + [phi], out)
            _split(rest + [naf(phi)], body + [naf(psi)], out)
            return
        raise UnsupportedConstruct(f"cannot normalise {h}")
    # simplify not not not
    items = []
    for b in body:
        lit = _item_objlit(b)
        if lit is None:
            raise UnsupportedConstruct(f"cannot normalise {b}")
        items.append(lit)
    out.append(Rule(tuple(ObjLit(h) for h in heads), tuple(items)))


def theory_to_rules(theory) -> list:
    if isinstance(theory, Program):
        rules = []
        for r in theory:
            if not r.is_objective:
                raise UnsupportedConstruct(f"subjective literal in objective program: {r}")
            rules.extend(rule_to_basic(r))
        return rules
    out = []
    for f in theory:
        out.extend(formula_to_rules(f))
    return out


def rule_to_basic(r: Rule) -> list:
    """Move default-negated head literals to the body; drop rules that are trivially true."""
    heads, body = [], list(r.body)
    for h in r.head:
        if h.core == TOP:
            return []
        if h.naf == 0:
            heads.append(h)
        else:
            body.append(ObjLit(h.core, 2 if h.naf == 1 else 1))
    if any(b.core == BOT for b in body):
        return []
    return [Rule(tuple(heads), tuple(body))]


# --------------------------------------------------------------- engine


class _Compiled:
    """Rules over integer literal ids restricted to a candidate universe."""

    def __init__(self, rules, candidates):
        self.lits = sorted(candidates, key=str)
        self.index = {l: i for i, l in enumerate(self.lits)}
        self.comp = [self.index.get(complement(l), -1) for l in self.lits]
        self.rules = []
        self.trivially_false = False
        for r in rules:
            heads, pos, neg, nn = [], [], [], []
            dead = False
            for b in r.body:
                if b.core == BOT:
                    dead = True
                    break
                if b.core == TOP:
                    continue
                idx = self.index.get(b.core)
                if b.naf == 1:
                    if idx is not None:
                        neg.append(idx)
                elif idx is None:
                    dead = True
                    break
                else:
                    (pos if b.naf == 0 else nn).append(idx)
            if dead:
                continue
            for h in r.head:
                idx = self.index.get(h.core)
                if idx is not None:
                    heads.append(idx)
            self.rules.append((tuple(sorted(set(heads))), tuple(pos), tuple(neg), tuple(nn)))
        self.by_head = [[] for _ in self.lits]
        for k, (heads, *_rest) in enumerate(self.rules):
            for h in heads:
                self.by_head[h].append(k)

    def body_state(self, rule, val):
        _, pos, neg, nn = rule
        state = 1
        for i in pos:
            if val[i] < 0:
                return -1
            if val[i] == 0:
                state = 0
        for i in nn:
            if val[i] < 0:
                return -1
            if val[i] == 0:
                state = 0
        for i in neg:
            if val[i] > 0:
                return -1
            if val[i] == 0:
                state = 0
        return state


def _propagate(c: _Compiled, val, support: bool) -> bool:
    changed = True
    while changed:
        changed = False
        for i, v in enumerate(val):
            if v > 0 and c.comp[i] >= 0:
                j = c.comp[i]
                if val[j] > 0:
                    return False
                if val[j] == 0:
                    val[j] = -1
                    changed = True
        for rule in c.rules:
            heads = rule[0]
            if any(val[h] > 0 for h in heads):
                continue
            open_heads = [h for h in heads if val[h] == 0]
            bs = c.body_state(rule, val)
            if bs == 1:
                if not open_heads:
                    return False
                if len(open_heads) == 1:
                    val[open_heads[0]] = 1
                    changed = True
            elif bs == 0 and not open_heads:
                _, pos, neg, nn = rule
                unknown = [("p", i) for i in pos + nn if val[i] == 0] + [("n", i) for i in neg if val[i] == 0]
                if len(unknown) == 1:
                    kind, i = unknown[0]
                    val[i] = -1 if kind == "p" else 1
                    changed = True
        if support:
            for i, v in enumerate(val):
                if v < 0:
                    continue
                supported = False
                for k in c.by_head[i]:
                    rule = c.rules[k]
                    if c.body_state(rule, val) < 0:
                        continue
                    if any(val[h] > 0 for h in rule[0] if h != i):
                        continue
                    supported = True
                    break
                if not supported:
                    if v > 0:
                        return False
                    val[i] = -1
                    changed = True
    return True


def _sat_search(clauses, n) -> bool:
    """Tiny DPLL: is there an assignment over n variables satisfying all clauses (lists of +-(i+1))?"""
    assign = {}

    def solve(clauses):
        clauses = [c for c in clauses]
        while True:
            unit = None
            simplified = []
            for c in clauses:
                if any(assign.get(abs(x)) == (x > 0) for x in c):
                    continue
                rest = [x for x in c if abs(x) not in assign]
                if not rest:
                    return False
                if len(rest) == 1:
                    unit = rest[0]
                simplified.append(rest)
            clauses = simplified
            if unit is None:
                break
            assign[abs(unit)] = unit > 0
        if not clauses:
            return True
        var = abs(clauses[0][0])
        for choice in (False, True):
            saved = dict(assign)
            assign[var] = choice
            if solve(clauses):
                return True
            assign.clear()
            assign.update(saved)
        return False

    return solve(clauses)


def _is_minimal(c: _Compiled, t: set) -> bool:
    """No proper subset of t models the reduct of the rules relative to t."""
    horn = []
    disjunctive = False
    clauses = []
    var = {l: k + 1 for k, l in enumerate(sorted(t))}
    for heads, pos, neg, nn in c.rules:
        if any(i in t for i in neg) or any(i not in t for i in nn) or any(i not in t for i in pos):
            continue
        hs = [h for h in heads if h in t]
        if len(hs) > 1:
            disjunctive = True
        horn.append((hs, pos))
        clauses.append([-var[i] for i in pos] + [var[h] for h in hs])
    if not disjunctive:
        least = set()
        changed = True
        while changed:
            changed = False
            for hs, pos in horn:
                if hs and hs[0] not in least and all(i in least for i in pos):
                    least.add(hs[0])
                    changed = True
        return least == t
    clauses.append([-v for v in var.values()])
    return not _sat_search(clauses, len(var))


def _search(c: _Compiled, stable: bool):
    n = len(c.lits)
    results = []

    def rec(val):
        if not _propagate(c, val, stable):
            return
        try:
            i = val.index(0)
        except ValueError:
            t = {k for k, v in enumerate(val) if v > 0}
            for rule in c.rules:
                if c.body_state(rule, val) == 1 and not any(val[h] > 0 for h in rule[0]):
                    return
            if not stable or _is_minimal(c, t):
                results.append(frozenset(c.lits[k] for k in t))
            return
        for choice in (1, -1):
            nv = list(val)
            nv[i] = choice
            rec(nv)

    rec([0] * n)
    return results


def _universe_atoms(theory, rules, universe):
    if universe is not None:
        return set(universe)
    if isinstance(theory, Program):
        return theory.atoms()
    return theory_atoms(theory)


def _as_rules(theory):
    if isinstance(theory, Program):
        return theory_to_rules(theory)
    if isinstance(theory, (list, tuple)) and theory and all(isinstance(r, Rule) for r in theory):
        return theory_to_rules(Program(tuple(theory)))
    return theory_to_rules(tuple(theory))


def _canonical(models):
    return sorted(set(models), key=interpretation_key)


@lru_cache(maxsize=65536)
def _stable_cached(rules: tuple, atoms: frozenset, max_atoms: int):
    if len(atoms) > max_atoms:
        raise CapExceeded(f"{len(atoms)} atoms exceed the stable-model cap of {max_atoms}")
    candidates = {h.core for r in rules for h in r.head if h.naf == 0 and h.core not in (TOP, BOT)}
    candidates = {l for l in candidates if literal_atom(l) in atoms}
    return tuple(_canonical(_search(_Compiled(rules, candidates), stable=True)))


def stable_models(theory, universe=None, max_atoms: int = DEFAULT_MAX_ATOMS) -> list:
    """SM[theory] for a ground objective theory (formulas, a Program, or a list of Rules)."""
    rules = _as_rules(theory)
    atoms = frozenset(_universe_atoms(theory, rules, universe))
    atoms |= {literal_atom(h.core) for r in rules for h in r.head if h.core not in (TOP, BOT)}
    return list(_stable_cached(tuple(sorted(set(rules), key=str)), atoms, max_atoms))


def classical_models(theory, universe=None, max_atoms: int = DEFAULT_MAX_ATOMS) -> list:
    """All consistent interpretations over the universe literals that classically satisfy the theory."""
    rules = _as_rules(theory)
    atoms = set(_universe_atoms(theory, rules, universe))
    for r in rules:
        for l in r.head + r.body:
            if l.core not in (TOP, BOT):
                atoms.add(literal_atom(l.core))
    if len(atoms) > max_atoms:
        raise CapExceeded(f"{len(atoms)} atoms exceed the classical-model cap of {max_atoms}")
    return _canonical(_search(_Compiled(rules, literals_of_atoms(atoms)), stable=False))


# --------------------------------------------------------------- oracle


def stable_models_raw(theory, universe=None, max_atoms: int = ORACLE_MAX_ATOMS) -> list:
    """Direct definition: enumerate every HT pair.  Exponential; for cross-checks only."""
    from .syntax import program_to_theory

    if isinstance(theory, Program):
        theory = program_to_theory(theory)
    theory = tuple(theory)
    atoms = set(universe) if universe is not None else theory_atoms(theory)
    if len(atoms) > max_atoms:
        raise CapExceeded(f"{len(atoms)} atoms exceed the oracle cap of {max_atoms}")
    out = []
    for t in consistent_interpretations(literals_of_atoms(atoms)):
        if not all(_sat(t, t, f) for f in theory):
            continue
        minimal = True
        for k in range(len(t)):
            for h in itertools.combinations(sorted(t, key=str), k):
                h = frozenset(h)
                if all(_sat(h, t, f) for f in theory):
                    minimal = False
                    break
            if not minimal:
                break
        if minimal:
            out.append(t)
    return _canonical(out)
