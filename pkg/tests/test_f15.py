import pytest
from hypothesis import given, settings, strategies as st

from worldviews import corpus
from worldviews.errors import CapExceeded
from worldviews.f15 import (
    F15Solver,
    f15_equilibrium_models,
    f15_world_views,
    f15_world_views_raw,
    is_model_at,
    satisfies,
)
from worldviews.properties import random_program
from worldviews.semantics import SolveConfig
from worldviews.syntax import Atom, parse_formula, parse_program

from conftest import keys, view, wv

load = corpus.load


def test_known_results():
    assert keys(f15_world_views(load("P1"))) == (wv([]),)
    assert keys(f15_world_views(load("P2"))) == (wv([]),)
    assert keys(f15_world_views(load("P3c"))) == (wv(["p", "q"]),)
    assert keys(f15_world_views(load("P5"))) == (wv(["p"]),)


def test_p3c_equilibrium_model_is_unique():
    assert keys(f15_equilibrium_models(load("P3c"))) == (wv(["p", "q"]),)


def test_literal_holds_through_h():
    worlds = (frozenset({Atom("p")}),)
    assert satisfies(worlds, worlds, 0, Atom("p"))
    assert not satisfies(worlds, (frozenset(),), 0, Atom("p"))


def test_implication_checked_under_identity_too():
    worlds = (frozenset({Atom("p")}),)
    f = parse_formula("p <- not not p")
    assert satisfies(worlds, worlds, 0, f)
    assert not satisfies(worlds, (frozenset(),), 0, f)


def test_self_supported_knowledge_is_refuted():
    solver = F15Solver(load("P1"))
    assert solver.refuting_h(view(["p"])) is not None
    assert solver.refuting_h(view([])) is None


def test_atom_cap():
    prog = parse_program("a | b. c | d. e :- K a.")
    with pytest.raises(CapExceeded):
        f15_world_views(prog, SolveConfig(f15_max_atoms=3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_engine_matches_raw_enumeration(seed):
    prog = random_program(seed)
    try:
        fast = f15_world_views(prog)
    except CapExceeded:
        return
    assert fast == f15_world_views_raw(prog)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.randoms(use_true_random=False))
def test_filtered_h_search_matches_full_enumeration(seed, rng):
    solver = F15Solver(random_program(seed))
    pool = solver.interpretations
    worlds = tuple(sorted(rng.sample(pool, rng.randint(1, min(4, len(pool)))), key=str))
    inside = sorted(rng.sample(range(len(worlds)), rng.randint(1, len(worlds))))
    try:
        raw = solver._model_h_raw(worlds, inside)
    except CapExceeded:
        return
    fast = solver._model_h(worlds, inside)
    assert (fast is None) == (raw is None)
    if fast is not None:
        assert fast != worlds and all(a <= b for a, b in zip(fast, worlds))
        assert all(fast[i] == worlds[i] for i in range(len(worlds)) if i not in inside)
        assert is_model_at(solver.compiled, worlds, fast, inside)
