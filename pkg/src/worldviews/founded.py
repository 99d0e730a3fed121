"""Unfounded sets of pairs for epistemic programs.

A pair ``(X, I)`` is *justified* by a rule when the rule's head meets ``X``,
its body holds at ``I`` (within the world view), no positive body literal is
in ``X``, no other head literal is in ``I`` and none of the literals under a
positive ``K``/``M`` literal in the body lies in the union of the components
of the set under construction.

Components are taken inside their interpretation (``X`` a subset of ``I``).
With ``M`` counted as positive, a literal outside ``I`` could otherwise block
a rule through ``M`` merely because it is false in this belief set, which
breaks epistemic splitting and the tight-program coincidence.  A world view is unfounded when a non-empty set
of unjustified pairs with ``I`` in the world view and ``X`` meeting ``I`` exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .epistemic import objlit_holds, subjlit_holds
from .errors import CapExceeded
from .syntax import TOP, ObjLit, Rule, SubjLit, interpretation_key

MAX_PAIRS = 1 << 16


@dataclass(frozen=True)
class FoundRule:
    """A rule split into the pieces the justification test needs."""

    head: frozenset
    body: tuple
    positive: frozenset
    modal_positive: frozenset


def positive_modal_literals(rule: Rule) -> frozenset:
    """Explicit literals directly under an un-negated ``K`` or ``M`` in the body."""
    return frozenset(
        l.inner.core
        for l in rule.subjective_body
        if l.naf == 0 and l.inner.naf == 0 and l.inner.is_literal
    )


def prepare(program) -> list:
    rules = []
    for r in program:
        head, body = set(), list(r.body)
        trivial = False
        for h in r.head:
            if h.core == TOP:
                trivial = True
            elif h.naf == 0:
                head.add(h.core)
            else:
                body.append(ObjLit(h.core, 2 if h.naf == 1 else 1))
        if trivial or not head:
            continue
        positive = frozenset(b.core for b in r.objective_body if b.naf == 0 and b.is_literal)
        rules.append(FoundRule(frozenset(head), tuple(body), positive, positive_modal_literals(r)))
    return rules


def _body_holds(rule: FoundRule, wv, interp) -> bool:
    for l in rule.body:
        if isinstance(l, SubjLit):
            if not subjlit_holds(wv, l):
                return False
        elif not objlit_holds(interp, l):
            return False
    return True


def justified(rule: FoundRule, x, interp, wv, union) -> bool:
    return (
        bool(rule.head & x)
        and _body_holds(rule, wv, interp)
        and not (rule.positive & x)
        and not ((rule.head - x) & interp)
        and not (rule.modal_positive & union)
    )


def _pair_key(pair):
    x, i = pair
    return (interpretation_key(i), interpretation_key(x))


def find_unfounded_set(program, wv, max_pairs: int = MAX_PAIRS):
    """The greatest unfounded set over the pairs ``(X, I)`` with ``I`` in ``wv`` and
    ``X`` a non-empty subset of ``I``, or None when ``wv`` is founded.

    Pairs are pruned while some rule justifies them against the union of the
    surviving components; what remains is the largest unfounded family.
    """
    rules = prepare(program)
    pairs = []
    for interp in wv:
        lits = sorted(interp, key=str)
        if (1 << len(lits)) * len(wv) > max_pairs:
            raise CapExceeded(f"unfounded-set candidate universe exceeds {max_pairs} pairs")
        for k in range(1, len(lits) + 1):
            for x in itertools.combinations(lits, k):
                pairs.append((frozenset(x), interp))
    current = set(pairs)
    while True:
        union = frozenset().union(*(x for x, _ in current)) if current else frozenset()
        keep = {
            (x, i)
            for x, i in current
            if not any(justified(r, x, i, wv, union) for r in rules)
        }
        if keep == current:
            break
        current = keep
    if not current:
        return None
    return sorted(current, key=_pair_key)


def is_founded(program, wv) -> bool:
    return find_unfounded_set(program, wv) is None


def is_unfounded_set(program, wv, pairs) -> bool:
    """Check a witness against the definition directly."""
    pairs = list(pairs)
    if not pairs:
        return False
    rules = prepare(program)
    union = frozenset().union(*(x for x, _ in pairs))
    for x, i in pairs:
        if not x:
            return False
        if any(justified(r, x, i, wv, union) for r in rules):
            return False
    return True


def witnesses_world_view(wv, pairs) -> bool:
    return all(i in wv and (x & i) for x, i in pairs)


def find_unfounded_set_raw(program, wv):
    """Independent check by enumerating every candidate union ``U``.

    For a fixed union the largest family of unjustified pairs whose components
    lie inside ``U`` is computed; an unfounded set exists iff for some non-empty
    ``U`` that family is non-empty and its union is exactly ``U``.
    """
    rules = prepare(program)
    literals = sorted(frozenset().union(*wv), key=str)
    if len(literals) > 8:
        raise CapExceeded("raw unfounded-set oracle is limited to 8 literals")
    subsets = [frozenset(c) for k in range(1, len(literals) + 1) for c in itertools.combinations(literals, k)]
    for u in subsets:
        family = [
            (x, i)
            for x in subsets
            if x <= u
            for i in wv
            if x <= i and not any(justified(r, x, i, wv, u) for r in rules)
        ]
        if family and frozenset().union(*(x for x, _ in family)) == u:
            return sorted(family, key=_pair_key)
    return None
