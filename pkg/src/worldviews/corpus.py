"""Bundled example programs with the world views they are expected to have.

Expected world views are lists of belief sets, each a sorted list of literal
strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .syntax import Program, parse_formula, parse_program


@dataclass(frozen=True)
class Expected:
    world_views: tuple

    def __post_init__(self):
        object.__setattr__(self, "world_views", tuple(sorted(self.world_views)))


@dataclass(frozen=True)
class Entry:
    name: str
    description: str
    text: str
    expected: dict = field(default_factory=dict)
    constraints: tuple = ()


def _wv(*sets):
    return tuple(sorted(tuple(sorted(s)) for s in sets))


def yale_shooting(horizon: int = 3, plan=None) -> str:
    """Guess/define/test encoding; with ``plan`` the guess is replaced by those action facts."""
    lines = ["% define: action effects, inertia and the unknown initial state"]
    for i in range(horizon):
        j = i + 1
        lines += [
            f"-alive({j}) :- trigger({i}), loaded({i}).",
            f"-loaded({j}) :- trigger({i}).",
            f"loaded({j}) :- load({i}).",
            f"impossible :- load({i}), loaded({i}).",
            f"alive({j}) :- alive({i}), not -alive({j}).",
            f"-alive({j}) :- -alive({i}), not alive({j}).",
            f"loaded({j}) :- loaded({i}), not -loaded({j}).",
            f"-loaded({j}) :- -loaded({i}), not loaded({j}).",
        ]
    lines += ["alive(0) | -alive(0).", "loaded(0) | -loaded(0)."]
    if plan is None:
        lines.append("% guess: one plan shared by every belief set")
        for i in range(horizon):
            for a in ("trigger", "load"):
                lines += [f"{a}({i}) | not {a}({i}).", f"{a}({i}) :- M {a}({i})."]
    else:
        lines.append("% the plan under test")
        lines += [f"{a}." for a in plan]
    lines += ["% test", f":- not K -alive({horizon}).", ":- M impossible."]
    return "\n".join(lines) + "\n"


ATTACK_GRAPH = """\
% exploits and the conditions they need or cause
ftp_rhosts(0,2) :- ftp(0,2), user(0).
trust(2,0) :- ftp_rhosts(0,2).
rsh(0,2) :- trust(2,0).
sshd_bof(1,2) :- sshd(1,2), user(1).
user(2) :- rsh(0,2).
user(2) :- sshd_bof(1,2).
local_bof(2) :- user(2).
root(2) :- local_bof(2).
% unknown initial conditions
ftp(0,2) | -ftp(0,2).
user(0) | -user(0).
sshd(1,2) | -sshd(1,2).
user(1) | -user(1).
% root must be unreachable in every belief set
:- M root(2).
% hardening guesses and their effects
close_ftp :- not K -close_ftp.
-close_ftp :- not K close_ftp.
close_sshd :- not K -close_sshd.
-close_sshd :- not K close_sshd.
-ftp(0,2) :- close_ftp.
-sshd(1,2) :- close_sshd.
"""

SCHOLARSHIP = """\
eligible(X) :- high(X).
eligible(X) :- minority(X), fair(X).
-eligible(X) :- -fair(X), -high(X).
fair(mike) | high(mike).
interview(X) :- not K eligible(X), not K -eligible(X).
appointment(X) :- K interview(X).
"""

TEACH = """\
h(bob). h(mary).
teach(bob,java).
teach(staff,python).
teach(bob,ai) | teach(mary,ai).
"""

TEACH_CONSTRAINTS = (
    "forall C in {java,python,ai}: exists X: K (h(X) & teach(X,C))",
    "forall C in {java,python,ai}: exists X: K teach(X,C)",
    "forall C in {java,python,ai}: K exists X: teach(X,C)",
)

_A = ["h(bob)", "h(mary)", "teach(bob,java)", "teach(staff,python)"]
_P8_INITIAL = [
    ["alive(0)", "loaded(0)"],
    ["alive(0)", "-loaded(0)"],
    ["-alive(0)", "loaded(0)"],
    ["-alive(0)", "-loaded(0)"],
]


def _all(wvs, semantics=("g94", "g11", "k15", "s16", "c19")):
    return {s: Expected(wvs) for s in semantics}


ENTRIES = {
    "P0": Entry(
        "P0",
        "closed world assumption through M over a disjunction",
        "#const a. #const b. #const c.\np(a) | p(b).\n-p(X) :- not M p(X).\n",
        {
            "g94": Expected(
                (
                    _wv(["p(a)", "-p(c)"], ["p(b)", "-p(c)"]),
                    _wv(["p(a)", "-p(b)", "-p(c)"]),
                    _wv(["p(b)", "-p(a)", "-p(c)"]),
                ))
        },
    ),
    "P1": Entry(
        "P1",
        "self-supported knowledge",
        "p :- K p.\n",
        {
            "g94": Expected((_wv([]), _wv(["p"]))),
            "g11": Expected((_wv([]),)),
            "k15": Expected((_wv([]),)),
            "f15": Expected((_wv([]),)),
            "c19": Expected((_wv([]),)),
            "fk15": Expected((_wv([]),)),
        },
    ),
    "P2": Entry(
        "P2",
        "self-supported possibility",
        "p :- M p.\n",
        {
            "g94": Expected((_wv([]), _wv(["p"]))),
            "g11": Expected((_wv([]), _wv(["p"]))),
            "k15": Expected((_wv(["p"]),)),
            "s16": Expected((_wv(["p"]),)),
            "f15": Expected((_wv([]),)),
            "fk15": Expected((_wv([]),)),
        },
    ),
    "P3": Entry(
        "P3",
        "disjunction with mutual knowledge support",
        "p | q.\np :- K q.\nq :- K p.\n",
        {
            "g94": Expected((_wv(["p"], ["q"]), _wv(["p", "q"]))),
            "g11": Expected((_wv(["p"], ["q"]), _wv(["p", "q"]))),
            "c19": Expected((_wv(["p"], ["q"]),)),
        },
    ),
    "P3c": Entry(
        "P3c",
        "P3 with a subjective constraint demanding K p",
        "p | q.\np :- K q.\nq :- K p.\n:- not K p.\n",
        {
            "g94": Expected((_wv(["p", "q"]),)),
            "f15": Expected((_wv(["p", "q"]),)),
            # [{p},{q}] is quoted in the discussion but violates the constraint itself.
            "c19": Expected(()),
        },
    ),
    "P4": Entry(
        "P4",
        "splitting refuter for G11",
        "p | q.\ns :- K p.\n:- not s.\n",
        {
            "g94": Expected(()),
            "g11": Expected((_wv(["p", "s"]),)),
            "c19": Expected(()),
        },
    ),
    "P4n": Entry(
        "P4n",
        "P4 without its constraint",
        "p | q.\ns :- K p.\n",
        _all((_wv(["p"], ["q"]),), ("g94", "g11", "k15", "s16", "c19", "f15")),
    ),
    "P5": Entry(
        "P5",
        "constraint monotonicity refuter",
        "p | q.\n:- not K p.\n",
        {
            "g94": Expected(()),
            "g11": Expected(()),
            "k15": Expected((_wv(["p"]),)),
            "s16": Expected((_wv(["p"]),)),
            "f15": Expected((_wv(["p"]),)),
        },
    ),
    "P6": Entry(
        "P6",
        "mutual possibility",
        "p :- M q, not q.\nq :- M p, not p.\n",
        {
            "k15": Expected((_wv([]), _wv(["p"], ["q"]))),
            "s16": Expected((_wv(["p"], ["q"]),)),
        },
    ),
    "P7": Entry(
        "P7",
        "scholarship eligibility with interviews and appointments",
        "#const mike.\n" + SCHOLARSHIP,
        _all(
            (
                _wv(
                    ["fair(mike)", "interview(mike)", "appointment(mike)"],
                    ["high(mike)", "eligible(mike)", "interview(mike)", "appointment(mike)"],
                ),
            ),
            ("g94", "c19"),
        ),
    ),
    "P8": Entry(
        "P8",
        "conformant planning in the Yale shooting domain, horizon 3",
        yale_shooting(3),
        _all(
            (_wv(*[s + ["trigger(0)", "load(1)", "trigger(2)", "-loaded(1)", "loaded(2)", "-loaded(3)", "-alive(3)"]
                   + (["alive(1)", "alive(2)"] if "alive(0)" in s and "loaded(0)" not in s else [])
                   + (["-alive(1)", "-alive(2)"] if "-alive(0)" in s or "loaded(0)" in s else [])
                   for s in _P8_INITIAL]),),
            ("g94",)),
    ),
    "P8v": Entry(
        "P8v",
        "the load/trigger prefix plan, which is not conformant",
        yale_shooting(3, plan=["load(1)", "trigger(2)"]),
        _all((), ("g94",)),
    ),
    "P9": Entry(
        "P9",
        "attack graph with hardening measures",
        ATTACK_GRAPH,
        _all(
            (
                _wv(
                    *[
                        ["close_ftp", "close_sshd", "-ftp(0,2)", "-sshd(1,2)", u0, u1]
                        for u0 in ("user(0)", "-user(0)")
                        for u1 in ("user(1)", "-user(1)")
                    ]
                ),
            ),
            ("g94",),
        ),
    ),
    "P10": Entry(
        "P10",
        "a program every semantics agrees on",
        "p :- K p.\np | q.\ns :- K p.\n:- not s.\n",
        _all((_wv(["p", "s"]),), ("g94", "g11", "k15", "s16", "c19", "f15")),
    ),
    "DB": Entry(
        "DB",
        "teaching database with integrity constraints",
        TEACH,
        {"g94": Expected((_wv(_A + ["teach(bob,ai)"], _A + ["teach(mary,ai)"]),))},
        TEACH_CONSTRAINTS,
    ),
}

# Truth of each DB constraint in the database's world view.
TEACH_VERDICTS = (False, False, True)


def names() -> list:
    return list(ENTRIES)


def emit(name: str) -> str:
    try:
        return ENTRIES[name].text
    except KeyError:
        raise KeyError(f"unknown corpus entry {name!r}; available: {', '.join(ENTRIES)}") from None


def load(name: str) -> Program:
    return parse_program(emit(name))


def constraints(name: str) -> list:
    return [parse_formula(c) for c in ENTRIES[name].constraints]
