import pytest
from hypothesis import given, settings, strategies as st

from worldviews import ht
from worldviews.errors import CapExceeded
from worldviews.properties import random_theory
from worldviews.syntax import (
    BOT,
    Atom,
    Neg,
    consistent_interpretations,
    expand_theory,
    is_objective,
    literals_of_atoms,
    parse_formula,
    parse_theory,
    theory_atoms,
)

p, q = Atom("p"), Atom("q")


def pair(h, t):
    return ht.HTPair(frozenset(h), frozenset(t))


def models(text):
    return sorted(sorted(map(str, m)) for m in ht.stable_models(parse_theory(text)))


def test_atom_satisfaction():
    assert ht.ht_satisfies(pair({p}, {p}), p)


def test_implication_checks_both_worlds():
    assert ht.ht_satisfies(pair(set(), {p}), parse_formula("p <- p"))
    assert not ht.ht_satisfies(pair(set(), {p}), parse_formula("p <- not not p"))
    assert ht.ht_satisfies(pair({p}, {p}), parse_formula("p <- not not p"))


def test_strong_negation_needs_negated_literal_here():
    assert not ht.ht_satisfies(pair(set(), {p}), Neg(p))
    assert ht.ht_falsifies(pair({Neg(p)}, {Neg(p)}), p)
    assert not ht.ht_falsifies(pair(set(), set()), p)


def test_bottom_always_falsified():
    for h, t in [(set(), set()), ({p}, {p}), (set(), {q})]:
        assert ht.ht_falsifies(pair(h, t), BOT)


def test_here_must_be_subset():
    with pytest.raises(ValueError):
        ht.HTPair(frozenset({p}), frozenset())


def test_stable_models_examples():
    assert models("p <- #false") == [[]]
    assert models("p | q") == [["p"], ["q"]]
    assert models("p <- not not p") == [[], ["p"]]
    assert models("p <- not p") == []
    assert models("p. -p <- q. q <- not r") == []


def test_consistency_kills_models():
    assert models("p. -p") == []


def test_atom_cap():
    big = " . ".join(f"a{i} | b{i}" for i in range(10))
    with pytest.raises(CapExceeded):
        ht.stable_models(parse_theory(big), max_atoms=5)


# ------------------------------------------------------------ properties


def _pairs(atoms):
    interps = consistent_interpretations(literals_of_atoms(atoms))
    for t in interps:
        for h in interps:
            if h <= t:
                yield ht.HTPair(h, t)


def _objective(seed):
    th = random_theory(seed, atoms=2, formulas=1, depth=3)
    return [f for f in expand_theory(th) if is_objective(f)]


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6))
def test_persistence_and_coherence(seed):
    for f in _objective(seed):
        for hp in _pairs(theory_atoms([f]) | {p}):
            there = ht.HTPair(hp.there, hp.there)
            if ht.ht_satisfies(hp, f):
                assert ht.ht_satisfies(there, f)
            assert not (ht.ht_satisfies(hp, f) and ht.ht_falsifies(hp, f))


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6))
def test_engine_agrees_with_raw_enumeration(seed):
    theory = _objective(seed)
    u = theory_atoms(theory) | {p, q}
    assert sorted(map(sorted_key, ht.stable_models(theory, u))) == sorted(map(sorted_key, ht.stable_models_raw(theory, u)))


def sorted_key(m):
    return tuple(sorted(map(str, m)))


def test_returned_models_are_consistent_total_models():
    theory = parse_theory("p | q. -p <- q. r <- not -p")
    for m in ht.stable_models(theory):
        assert ht.is_ht_model(ht.HTPair(m, m), theory)
        assert not any(Neg(a) in m and a in m for a in (p, q))
