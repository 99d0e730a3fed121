import pytest
from hypothesis import given, settings, strategies as st

from worldviews import corpus
from worldviews.epistemic import ei_satisfies, k15_reduct, g11_reduct, g94_reduct, truth_in
from worldviews.errors import CapExceeded, UnsupportedConstruct
from worldviews.founded import find_unfounded_set
from worldviews import ht
from worldviews.properties import RandomConfig, random_program
from worldviews.semantics import (
    SolveConfig,
    c19_world_views,
    fk15_world_views,
    g11_world_views,
    g94_world_views,
    k15_world_views,
    m85_world_views,
    normalize_to_program,
    restrict_world_views,
    s16_world_views,
    s92_world_views,
    solve_specification,
    translate_b,
    translate_k,
    with_em,
    with_kem,
    world_views,
)
from worldviews.syntax import (
    Atom,
    Rule,
    ObjLit,
    SubjLit,
    expand_program,
    format_theory,
    ground,
    parse_formula,
    parse_program,
    parse_theory,
    program_to_theory,
)

from conftest import keys, wv

load = corpus.load
p = Atom("p")


def test_g94_examples():
    assert keys(g94_world_views(load("P1"))) == (wv([]), wv(["p"]))
    assert keys(g94_world_views(load("P4"))) == ()
    assert keys(g94_world_views(load("P3"))) == (wv(["p"], ["q"]), wv(["p", "q"]))


def test_g94_on_theories():
    th = parse_theory("p <- K p")
    assert keys(g94_world_views(th)) == (wv([]), wv(["p"]))
    assert keys(g94_world_views(parse_theory("p | q. r <- M (p & not q)"))) == (wv(["p", "r"], ["q", "r"]),)


def test_g11_examples():
    assert keys(g11_world_views(load("P1"))) == (wv([]),)
    assert keys(g11_world_views(load("P4"))) == (wv(["p", "s"]),)
    assert keys(g11_world_views(load("P2"))) == (wv([]), wv(["p"]))


def test_k15_and_s16_examples():
    assert keys(k15_world_views(load("P2"))) == (wv(["p"]),)
    assert keys(k15_world_views(load("P6"))) == (wv([]), wv(["p"], ["q"]))
    assert keys(k15_world_views(load("P5"))) == (wv(["p"]),)
    assert keys(s16_world_views(load("P6"))) == (wv(["p"], ["q"]),)
    assert keys(s16_world_views(load("P5"))) == (wv(["p"]),)
    objective = parse_program("p | q. r :- p.")
    assert keys(s16_world_views(objective)) == keys(k15_world_views(objective)) == (wv(["p", "r"], ["q"]),)


def test_c19_examples():
    assert keys(c19_world_views(load("P1"))) == (wv([]),)
    assert keys(c19_world_views(load("P3"))) == (wv(["p"], ["q"]),)


def test_fk15_examples():
    assert keys(fk15_world_views(load("P1"))) == (wv([]),)
    assert keys(fk15_world_views(load("P2"))) == (wv([]),)
    assert keys(fk15_world_views(parse_program("p | q."))) == (wv(["p"], ["q"]),)


def test_translate_b():
    (f,) = translate_b(load("P1"))
    assert str(f) == "p <- p & K p"
    assert format_theory(translate_b(load("P2"), expand_m=True)) == "p <- not (not p & K not p).\n"
    assert translate_b(parse_theory("p")) == parse_theory("p")


def test_translate_k():
    assert str(translate_k(parse_theory("K p"))[0]) == "M K p"
    assert str(translate_k(load("P1"))[0]) == "p <- M K p"
    assert translate_k(parse_theory("p | q")) == parse_theory("p | q")


def test_translations_match_on_p1():
    assert keys(g94_world_views(translate_b(load("P1")))) == (wv([]),) == keys(k15_world_views(load("P1")))
    via = k15_world_views(normalize_to_program(translate_k(load("P1"))))
    assert keys(restrict_world_views(via, {p})) == keys(g94_world_views(load("P1")))


def test_normalize():
    prog = normalize_to_program(translate_b(load("P2"), expand_m=True))
    assert str(prog) == "aux1 :- K not p, not p.\np :- not aux1.\n"
    assert normalize_to_program(load("P3")) == load("P3")
    assert str(normalize_to_program(translate_b(load("P1")))) == "p :- K p, p.\n"


def test_normalize_preserves_restricted_world_views():
    for name in ("P1", "P2", "P3", "P5", "P6"):
        prog = load(name)
        for tr in (translate_b, translate_k):
            th = tr(prog, expand_m=True)
            direct = g94_world_views(th)
            via = restrict_world_views(g94_world_views(normalize_to_program(th)), prog.atoms())
            assert direct == via, (name, tr.__name__)


def test_em_and_kem():
    assert format_theory(with_em((), {p})) == "p | not p.\n-p | not -p.\n"
    assert with_em((), set()) == ()
    assert format_theory(with_kem(parse_theory("q"), {p})).endswith("K (p | not p).\nK (-p | not -p).\n")


def test_m85():
    assert keys(m85_world_views(parse_theory("p"))) == (wv(["p"]),)
    assert keys(m85_world_views((), {p})) == (wv([], ["p"], ["-p"]),)
    th = program_to_theory(load("P1"))
    assert m85_world_views(th) == g94_world_views(with_em(th))


def test_s92():
    th = program_to_theory(load("P1"))
    assert s92_world_views(th) == m85_world_views(translate_b(th))
    objective = parse_theory("p | q")
    assert s92_world_views(objective) == m85_world_views(objective)
    assert s92_world_views(th) == k15_world_views(with_em(load("P1")))


def test_solve_specification():
    db, cs = load("DB"), corpus.constraints("DB")
    views = g94_world_views(db)
    assert [bool(solve_specification(db, [c])) for c in cs] == list(corpus.TEACH_VERDICTS)
    assert solve_specification(db, []) == views
    with pytest.raises(UnsupportedConstruct):
        solve_specification(db, [parse_formula("p")])


def test_dispatcher_rejects_unknown_semantics():
    with pytest.raises(ValueError):
        world_views(load("P1"), "x99")


def test_caps():
    with pytest.raises(CapExceeded):
        g94_world_views(load("P3"), SolveConfig(max_guesses=1))
    with pytest.raises(ValueError):
        SolveConfig(max_atoms=0)


def test_parallel_matches_sequential():
    prog = load("P9")
    assert g94_world_views(prog, SolveConfig(parallel=2)) == g94_world_views(prog)


def test_g94_needs_ground_or_groundable():
    with pytest.raises(UnsupportedConstruct):
        g94_world_views(parse_program("p(X) :- K p(X)."))


# ------------------------------------------------------------ invariants


def _fixpoint(program, view, semantics):
    expanded = expand_program(program)
    if semantics == "g94":
        reduct = g94_reduct(program_to_theory(program), view)
    elif semantics == "g11":
        reduct = program_to_theory(g11_reduct(expanded, view))
    else:
        reduct = program_to_theory(k15_reduct(expanded, view))
    return frozenset(ht.stable_models(reduct, universe=program.atoms())) == view


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_fixpoint_soundness(seed):
    prog = random_program(seed)
    for s in ("g94", "g11", "k15"):
        for view in world_views(prog, s):
            assert _fixpoint(prog, view, s), (s, str(prog))


def _only_negated(prog):
    return all(l.naf > 0 for r in prog for l in r.body if isinstance(l, SubjLit))


def _never_negated(prog):
    return all(l.naf == 0 for r in expand_program(prog) for l in r.body if isinstance(l, SubjLit))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_g11_coincidences(seed):
    prog = random_program(seed, RandomConfig(atoms=3))
    if _only_negated(expand_program(prog)):
        assert g11_world_views(prog) == g94_world_views(expand_program(prog))
    if _never_negated(prog):
        assert g11_world_views(prog) == k15_world_views(prog)


def test_g11_coincidences_on_fixed_programs():
    neg = parse_program("p :- not K q. q :- not K p.")
    assert g11_world_views(neg) == g94_world_views(neg)
    pos = parse_program("p | q. r :- K p. p :- K r.")
    assert g11_world_views(pos) == k15_world_views(pos)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_inclusions(seed):
    prog = random_program(seed)
    assert set(s16_world_views(prog)) <= set(k15_world_views(prog))
    c19 = c19_world_views(prog)
    assert set(c19) <= set(g94_world_views(prog))
    assert all(find_unfounded_set(ground(prog), v) is None for v in c19)


def _reflexive(prog):
    extra = [Rule((ObjLit(a),), (SubjLit("K", ObjLit(a)),)) for a in sorted(prog.atoms(), key=str)]
    return prog.union(extra)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_reflexivity_of_g11_k15_s16(seed):
    prog = random_program(seed)
    for fn in (g11_world_views, k15_world_views, s16_world_views):
        assert fn(prog) == fn(_reflexive(prog))


def test_g94_and_c19_not_reflexive_on_p4():
    prog = load("P4")
    for fn in (g94_world_views, c19_world_views):
        assert fn(prog) != fn(_reflexive(prog))


def test_all_semantics_agree_on_p10():
    for s in ("g94", "g11", "k15", "s16", "c19", "f15", "fk15"):
        assert keys(world_views(load("P10"), s)) == (wv(["p", "s"]),), s


def test_world_views_satisfy_constraints_of_their_program():
    for view in g94_world_views(load("P3c")):
        assert ei_satisfies(view, parse_formula("K p"))
    assert truth_in(next(iter(g94_world_views(load("P3c")))))
