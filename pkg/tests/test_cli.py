import io
import json

import pytest

from worldviews.cli import EXIT_CAP, EXIT_PARSE, EXIT_UNSUPPORTED, run


def call(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_solve_p1_text():
    code, out, _ = call("solve", "--semantics", "g94", "corpus:P1")
    assert code == 0
    assert out == "% g94: 2 world views\n[{}]\n[{p}]\n"


def test_solve_p6_k15_and_s16():
    assert call("solve", "--semantics", "k15", "corpus:P6")[1].count("\n[") + 1 == 3
    code, out, _ = call("solve", "--semantics", "s16", "corpus:P6", "--format", "json")
    doc = json.loads(out)
    assert doc["world_views"] == [{"belief_sets": [["p"], ["q"]]}]


def test_compare_p10():
    code, out, _ = call("compare", "--semantics", "g94,g11,k15,s16,c19", "corpus:P10")
    rows = [line.split(None, 1)[1] for line in out.splitlines()]
    assert code == 0 and len(rows) == 5 and set(rows) == {"[{p, s}]"}


def test_json_is_canonical_and_stable():
    a = call("solve", "--format", "json", "corpus:P3")[1]
    b = call("solve", "--format", "json", "corpus:P3")[1]
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"input", "semantics", "world_views", "stats"}
    assert doc["world_views"] == [{"belief_sets": [["p"], ["q"]]}, {"belief_sets": [["p", "q"]]}]


def test_zero_world_views_exit_zero():
    code, out, _ = call("solve", "corpus:P4")
    assert code == 0 and out.startswith("% g94: 0 world views")


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.elp"
    bad.write_text("p :- K .\n")
    assert call("solve", str(bad))[0] == EXIT_PARSE
    assert call("solve", "--theory", "corpus:P1")[0] == EXIT_PARSE
    theory = tmp_path / "t.elp"
    theory.write_text("p <- K p.\n")
    assert call("solve", "--semantics", "g11", "--theory", str(theory))[0] == 0
    theory.write_text("p | K q.\n")
    assert call("solve", "--semantics", "k15", str(theory))[0] == EXIT_UNSUPPORTED
    assert call("solve", "--max-atoms", "3", "corpus:P9")[0] == EXIT_CAP


def test_stdin(monkeypatch):
    code, out, _ = call("solve", "-", stdin="p :- M p.\n", monkeypatch=monkeypatch)
    assert out == "% g94: 2 world views\n[{}]\n[{p}]\n"


def test_oracle_flag():
    assert call("solve", "--oracle", "corpus:P1")[1] == call("solve", "corpus:P1")[1].replace("guess", "oracle")


def test_check_commands():
    code, out, _ = call("check", "foundedness", "--semantics", "g94,c19", "corpus:P3")
    assert "foundedness/g94: counterexample" in out and "foundedness/c19: holds-on-instance" in out
    code, out, _ = call("check", "splitting", "--split", "p,q", "--semantics", "g11", "corpus:P4")
    assert "counterexample" in out
    code, out, _ = call("check", "constraint-monotonicity", "--constraint", "K p", "--semantics", "g11", "corpus:P4n")
    assert "holds-on-instance" in out
    code, out, _ = call("check", "tightness", "--format", "json", "corpus:P7")
    assert json.loads(out)["tight"] is True


def test_check_campaign_json():
    code, out, _ = call("check", "campaign", "--seeds", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["mismatches"] == [] and doc["instances"] == 2


def test_translate_and_ground():
    assert call("translate", "--to", "b", "--expand-m", "--normalize", "corpus:P2")[1] == "aux1 :- K not p, not p.\np :- not aux1.\n"
    assert call("translate", "--to", "k", "corpus:P1")[1] == "p <- M K p.\n"
    out = call("ground", "--constants", "a,b", "corpus:P1")[1]
    assert out == "#const a.\n#const b.\np :- K p.\n" or out == "p :- K p.\n"


def test_corpus_commands():
    code, out, _ = call("corpus", "list")
    assert out.splitlines()[0].startswith("P0")
    assert call("corpus", "emit", "P1")[1] == "p :- K p.\n"
    assert call("corpus", "emit", "P99")[0] != 0


def test_unknown_semantics_is_usage_error():
    with pytest.raises(SystemExit):
        call("solve", "--semantics", "nope", "corpus:P1")
