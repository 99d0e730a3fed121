"""Abstract syntax, parsing, printing and grounding of epistemic programs and theories.

Two layers live here:

* formulas (``Atom``, ``Neg``, ``And``, ``Or``, ``Impl``, ``K``, ``M``,
  ``Exists``, ``Forall`` and the constants ``TOP``/``BOT``) for arbitrary
  epistemic theories.  Default negation is not a node of its own: ``not F``
  is the implication ``BOT <- F`` (see :func:`naf`).
* rules (``ObjLit``, ``SubjLit``, ``Rule``, ``Program``) for the rule
  fragment used by most semantics.

Explicit literals are ``Atom`` or ``Neg(Atom)``; interpretations are
frozensets of explicit literals.

Surface syntax of programs::

    p | q.            s :- K p.          :- not s.
    -p(X) :- not M p(X).                 #const c.

Surface syntax of formulas (used for constraints and theories)::

    forall C in {java, python, ai}: K exists X: teach(X, C)
    p <- not (not p & K not p)
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import ParseError, UnsupportedConstruct


def is_variable(term: str) -> bool:
    return term[:1].isupper() or term[:1] == "_"


# ---------------------------------------------------------------- formulas


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return "#true"


@dataclass(frozen=True)
class Bot:
    def __str__(self):
        return "#false"


TOP = Top()
BOT = Bot()


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple = ()

    @property
    def is_ground(self) -> bool:
        return not any(is_variable(a) for a in self.args)

    def __str__(self):
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(self.args)})"


@dataclass(frozen=True)
class Neg:
    """Explicit (strong) negation."""

    arg: "Formula"

    def __str__(self):
        return "-" + _wrap(self.arg)


@dataclass(frozen=True)
class And:
    args: tuple

    def __str__(self):
        if not self.args:
            return "#true"
        return " & ".join(_wrap(a, _AND) for a in self.args)


@dataclass(frozen=True)
class Or:
    args: tuple

    def __str__(self):
        if not self.args:
            return "#false"
        return " | ".join(_wrap(a, _OR) for a in self.args)


@dataclass(frozen=True)
class Impl:
    """``head <- body``.  ``Impl(BOT, F)`` is read and printed as ``not F``."""

    head: "Formula"
    body: "Formula"

    def __str__(self):
        if self.head == BOT:
            return "not " + _wrap(self.body)
        return f"{_wrap(self.head, _OR)} <- {_wrap(self.body, _OR)}"


@dataclass(frozen=True)
class K:
    arg: "Formula"

    def __str__(self):
        return "K " + _wrap(self.arg)


@dataclass(frozen=True)
class M:
    arg: "Formula"

    def __str__(self):
        return "M " + _wrap(self.arg)


@dataclass(frozen=True)
class Exists:
    var: str
    arg: "Formula"

    def __str__(self):
        return f"exists {self.var}: {_wrap(self.arg)}"


@dataclass(frozen=True)
class Forall:
    var: str
    arg: "Formula"

    def __str__(self):
        return f"forall {self.var}: {_wrap(self.arg)}"


Formula = Union[Top, Bot, Atom, Neg, And, Or, Impl, K, M, Exists, Forall]
Theory = tuple

_UNARY, _AND, _OR = 3, 2, 1


def _level(f) -> int:
    if isinstance(f, And) and len(f.args) > 1:
        return _AND
    if isinstance(f, Or) and len(f.args) > 1:
        return _OR
    if isinstance(f, Impl) and f.head != BOT:
        return 0
    return _UNARY


def _wrap(f, level=_UNARY) -> str:
    text = str(f)
    return f"({text})" if _level(f) < level or (_level(f) == 0) else text


def naf(f) -> Impl:
    """Default negation ``not f``."""
    return Impl(BOT, f)


def is_naf(f) -> bool:
    return isinstance(f, Impl) and f.head == BOT


def conj(*args):
    args = tuple(args)
    if not args:
        return TOP
    return args[0] if len(args) == 1 else And(args)


def disj(*args):
    args = tuple(args)
    if not args:
        return BOT
    return args[0] if len(args) == 1 else Or(args)


def is_explicit_literal(f) -> bool:
    return isinstance(f, Atom) or (isinstance(f, Neg) and isinstance(f.arg, Atom))


def literal_atom(lit) -> Atom:
    return lit.arg if isinstance(lit, Neg) else lit


def complement(lit):
    return lit.arg if isinstance(lit, Neg) else Neg(lit)


def literal_key(lit) -> str:
    return str(lit)


def sorted_literals(lits: Iterable) -> list:
    return sorted(lits, key=str)


def interpretation_key(interp) -> tuple:
    return tuple(sorted(str(l) for l in interp))


def is_consistent(lits) -> bool:
    return not any(isinstance(l, Neg) and l.arg in lits for l in lits)


def literals_of_atoms(atoms) -> list:
    """Both explicit literals of every atom, in canonical order."""
    out = []
    for a in sorted(atoms, key=str):
        out.extend([a, Neg(a)])
    return out


def consistent_interpretations(literals) -> list:
    """All consistent subsets of ``literals`` (explicit literals)."""
    by_atom: dict = {}
    for l in literals:
        by_atom.setdefault(literal_atom(l), set()).add(l)
    choices = []
    for atom in sorted(by_atom, key=str):
        opts = [()] + [(l,) for l in sorted(by_atom[atom], key=str)]
        choices.append(opts)
    return [frozenset(itertools.chain.from_iterable(c)) for c in itertools.product(*choices)]


def subformulas(f):
    yield f
    for child in children(f):
        yield from subformulas(child)


def children(f) -> tuple:
    if isinstance(f, (And, Or)):
        return f.args
    if isinstance(f, Impl):
        return (f.head, f.body)
    if isinstance(f, (Neg, K, M, Exists, Forall)):
        return (f.arg,)
    return ()


def rebuild(f, kids):
    """Same connective as ``f`` over new children."""
    if isinstance(f, And):
        return And(tuple(kids))
    if isinstance(f, Or):
        return Or(tuple(kids))
    if isinstance(f, Impl):
        return Impl(kids[0], kids[1])
    if isinstance(f, (Neg, K, M)):
        return type(f)(kids[0])
    if isinstance(f, (Exists, Forall)):
        return type(f)(f.var, kids[0])
    return f


def formula_atoms(f) -> set:
    return {g for g in subformulas(f) if isinstance(g, Atom)}


def theory_atoms(theory) -> set:
    out = set()
    for f in theory:
        out |= formula_atoms(f)
    return out


def is_objective(f) -> bool:
    return not any(isinstance(g, (K, M)) for g in subformulas(f))


def is_subjective(f) -> bool:
    """Every atom occurrence lies in the scope of a modal operator."""
    if isinstance(f, (K, M)):
        return True
    if isinstance(f, Atom):
        return False
    return all(is_subjective(c) for c in children(f))


def substitute(f, binding: dict):
    if isinstance(f, Atom):
        if not binding:
            return f
        return Atom(f.predicate, tuple(binding.get(a, a) for a in f.args))
    if isinstance(f, (Exists, Forall)):
        inner = {k: v for k, v in binding.items() if k != f.var}
        return type(f)(f.var, substitute(f.arg, inner))
    kids = children(f)
    if not kids:
        return f
    return rebuild(f, [substitute(c, binding) for c in kids])


def free_variables(f, bound=frozenset()) -> set:
    if isinstance(f, Atom):
        return {a for a in f.args if is_variable(a) and a not in bound}
    if isinstance(f, (Exists, Forall)):
        return free_variables(f.arg, bound | {f.var})
    out = set()
    for c in children(f):
        out |= free_variables(c, bound)
    return out


def formula_constants(f) -> set:
    return {a for g in subformulas(f) if isinstance(g, Atom) for a in g.args if not is_variable(a)}


# ------------------------------------------------------------------ rules


@dataclass(frozen=True)
class ObjLit:
    """Objective literal: explicit literal or truth constant under 0..2 default negations."""

    core: object
    naf: int = 0

    def __post_init__(self):
        if not 0 <= self.naf <= 2:
            raise UnsupportedConstruct("more than two nested default negations")
        if self.core in (TOP, BOT) and self.naf:
            value = (self.core == TOP) == (self.naf % 2 == 0)
            object.__setattr__(self, "core", TOP if value else BOT)
            object.__setattr__(self, "naf", 0)

    @property
    def is_literal(self) -> bool:
        return self.core not in (TOP, BOT)

    def __str__(self):
        return "not " * self.naf + str(self.core)


@dataclass(frozen=True)
class SubjLit:
    """Subjective literal ``not^naf K inner`` or ``not^naf M inner``."""

    modality: str
    inner: ObjLit
    naf: int = 0

    def __post_init__(self):
        if self.modality not in ("K", "M"):
            raise UnsupportedConstruct(f"unknown modality {self.modality!r}")
        if not 0 <= self.naf <= 2:
            raise UnsupportedConstruct("more than two nested default negations")

    def __str__(self):
        return "not " * self.naf + f"{self.modality} {self.inner}"


def reduce_naf(depth: int) -> int:
    """``not not not F`` is ``not F``: fold any depth into 0..2."""
    while depth > 2:
        depth -= 2
    return depth


def _canon(items, drop):
    return tuple(sorted({i for i in items if i != drop}, key=str))


@dataclass(frozen=True)
class Rule:
    head: tuple = ()
    body: tuple = ()
    line: int | None = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "head", _canon(self.head, ObjLit(BOT)))
        object.__setattr__(self, "body", _canon(self.body, ObjLit(TOP)))

    def __str__(self):
        head = " | ".join(str(l) for l in self.head)
        if not self.body:
            return f"{head}." if head else ":- #true."
        body = ", ".join(str(l) for l in self.body)
        return f"{head} :- {body}." if head else f":- {body}."

    @property
    def objective_body(self):
        return [l for l in self.body if isinstance(l, ObjLit)]

    @property
    def subjective_body(self):
        return [l for l in self.body if isinstance(l, SubjLit)]

    @property
    def is_objective(self) -> bool:
        return not self.subjective_body

    def head_atoms(self) -> set:
        return {literal_atom(l.core) for l in self.head if l.is_literal}

    def body_objective_atoms(self) -> set:
        return {literal_atom(l.core) for l in self.objective_body if l.is_literal}

    def body_positive_literals(self) -> set:
        return {l.core for l in self.objective_body if l.is_literal and l.naf == 0}

    def body_modal_atoms(self) -> set:
        return {literal_atom(l.inner.core) for l in self.subjective_body if l.inner.is_literal}

    def body_modal_positive_literals(self) -> set:
        return {
            l.inner.core
            for l in self.subjective_body
            if l.naf == 0 and l.modality == "K" and l.inner.naf == 0 and l.inner.is_literal
        }

    def atoms(self) -> set:
        return self.head_atoms() | self.body_objective_atoms() | self.body_modal_atoms()

    def variables(self) -> set:
        out = set()
        for a in self._all_atom_objects():
            out |= {t for t in a.args if is_variable(t)}
        return out

    def _all_atom_objects(self):
        for l in self.head + self.body:
            core = l.inner.core if isinstance(l, SubjLit) else l.core
            if core not in (TOP, BOT):
                yield literal_atom(core)


@dataclass(frozen=True)
class Program:
    rules: tuple = ()
    constants: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(sorted(set(self.rules), key=str)))
        object.__setattr__(self, "constants", frozenset(self.constants))

    def __str__(self):
        lines = [f"#const {c}." for c in sorted(self.constants)]
        lines += [str(r) for r in self.rules]
        return "\n".join(lines) + ("\n" if lines else "")

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def atoms(self) -> set:
        out = set()
        for r in self.rules:
            out |= r.atoms()
        return out

    def is_ground(self) -> bool:
        return all(not r.variables() for r in self.rules)

    def is_objective(self) -> bool:
        return all(r.is_objective for r in self.rules)

    def term_constants(self) -> set:
        return {t for r in self.rules for a in r._all_atom_objects() for t in a.args if not is_variable(t)}

    def union(self, other) -> "Program":
        rules = other.rules if isinstance(other, Program) else tuple(other)
        extra = other.constants if isinstance(other, Program) else frozenset()
        return Program(self.rules + rules, self.constants | extra)


# ------------------------------------------------ rule <-> formula identification


def objlit_formula(l: ObjLit):
    f = l.core
    for _ in range(l.naf):
        f = naf(f)
    return f


def literal_formula(l):
    if isinstance(l, ObjLit):
        return objlit_formula(l)
    inner = objlit_formula(l.inner)
    f = K(inner) if l.modality == "K" else M(inner)
    for _ in range(l.naf):
        f = naf(f)
    return f


def rule_formula(r: Rule):
    head = disj(*(objlit_formula(l) for l in r.head))
    body = conj(*(literal_formula(l) for l in r.body))
    return Impl(head, body)


def program_to_theory(program) -> tuple:
    return tuple(rule_formula(r) for r in program)


def _strip_naf(f):
    depth = 0
    while is_naf(f):
        depth += 1
        f = f.body
    return f, depth


def as_objlit(f):
    """The objective literal a formula spells, or None."""
    core, depth = _strip_naf(f)
    if not (is_explicit_literal(core) or core in (TOP, BOT)):
        return None
    return ObjLit(core, reduce_naf(depth))


def as_literal(f):
    """The (objective or subjective) literal a formula spells, or None."""
    lit = as_objlit(f)
    if lit is not None:
        return lit
    core, depth = _strip_naf(f)
    if isinstance(core, (K, M)):
        inner = as_objlit(core.arg)
        if inner is not None:
            return SubjLit("K" if isinstance(core, K) else "M", inner, reduce_naf(depth))
    return None


def formula_rule(f) -> Rule:
    """Inverse of :func:`rule_formula` for rule-shaped formulas."""
    if isinstance(f, Impl):
        head_f, body_f = f.head, f.body
    else:
        head_f, body_f = f, TOP
    heads = head_f.args if isinstance(head_f, Or) else (head_f,)
    bodies = body_f.args if isinstance(body_f, And) else (body_f,)
    head = []
    for h in heads:
        lit = as_objlit(h)
        if lit is None:
            raise UnsupportedConstruct(f"not a rule head: {h}")
        head.append(lit)
    body = []
    for b in bodies:
        lit = as_literal(b)
        if lit is None:
            raise UnsupportedConstruct(f"not a rule body literal: {b}")
        body.append(lit)
    return Rule(tuple(head), tuple(body))


def theory_to_program(theory) -> Program:
    if isinstance(theory, Program):
        return theory
    return Program(tuple(formula_rule(f) for f in theory))


def as_theory(x) -> tuple:
    return program_to_theory(x) if isinstance(x, Program) else tuple(x)


# ------------------------------------------------------------ M rewrites


def simplify_triple_negation(f):
    """Rewrite ``not not not F`` to ``not F`` everywhere (bottom-up, to a fixpoint)."""
    kids = children(f)
    if kids:
        f = rebuild(f, [simplify_triple_negation(c) for c in kids])
    while is_naf(f) and is_naf(f.body) and is_naf(f.body.body):
        f = f.body.body
    return f


def expand_modal_abbreviations(f, keep_M: bool = False):
    """Modal rewriting: ``M G`` becomes ``not K not G`` unless ``keep_M``."""
    kids = children(f)
    if kids:
        f = rebuild(f, [expand_modal_abbreviations(c, keep_M) for c in kids])
    if isinstance(f, M) and not keep_M:
        f = naf(K(naf(f.arg)))
    return simplify_triple_negation(f)


def expand_subjective_literal(l):
    if isinstance(l, SubjLit) and l.modality == "M":
        inner = ObjLit(l.inner.core, reduce_naf(l.inner.naf + 1))
        return SubjLit("K", inner, reduce_naf(l.naf + 1))
    return l


def expand_program(program: Program) -> Program:
    """Rule-level rewriting of every ``M`` literal."""
    rules = tuple(Rule(r.head, tuple(expand_subjective_literal(l) for l in r.body)) for r in program)
    return Program(rules, program.constants)


def expand_theory(theory, keep_M=False) -> tuple:
    return tuple(expand_modal_abbreviations(f, keep_M) for f in theory)


# ------------------------------------------------------------------ grounding


def _subst_objlit(l: ObjLit, b):
    if not l.is_literal:
        return l
    return ObjLit(substitute(l.core, b), l.naf)


def _subst_lit(l, b):
    if isinstance(l, SubjLit):
        return SubjLit(l.modality, _subst_objlit(l.inner, b), l.naf)
    return _subst_objlit(l, b)


def ground(program: Program, constants: Iterable = ()) -> Program:
    """Instantiate every variable with every constant (program + declared + given)."""
    universe = sorted(set(constants) | set(program.constants) | program.term_constants())
    rules = []
    for r in program:
        vs = sorted(r.variables())
        if not vs:
            rules.append(r)
            continue
        if not universe:
            raise UnsupportedConstruct(f"no constants declared to ground rule: {r}")
        for values in itertools.product(universe, repeat=len(vs)):
            b = dict(zip(vs, values))
            rules.append(Rule(tuple(_subst_objlit(l, b) for l in r.head), tuple(_subst_lit(l, b) for l in r.body)))
    return Program(tuple(rules), program.constants)


def ground_formula(f, constants: Iterable):
    """Universal closure, then expansion of every quantifier over ``constants``."""
    universe = sorted(set(constants) | formula_constants(f))
    for v in sorted(free_variables(f)):
        f = Forall(v, f)
    return _expand_quantifiers(f, universe)


def _expand_quantifiers(f, universe):
    if isinstance(f, (Exists, Forall)):
        if not universe:
            raise UnsupportedConstruct(f"no constants to expand quantifier in {f}")
        parts = [_expand_quantifiers(substitute(f.arg, {f.var: c}), universe) for c in universe]
        return disj(*parts) if isinstance(f, Exists) else conj(*parts)
    kids = children(f)
    if not kids:
        return f
    return rebuild(f, [_expand_quantifiers(c, universe) for c in kids])


def ground_theory(theory, constants: Iterable = ()) -> tuple:
    consts = set(constants)
    for f in theory:
        consts |= formula_constants(f)
    return tuple(ground_formula(f, consts) for f in theory)


# ---------------------------------------------------------------- tokenizer

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+|%[^\n]*)
  | (?P<nl>\n)
  | (?P<sym>:-|<-|->|\#const|\#true|\#false|[|,.()&{}:\-])
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list:
    tokens, line, start, pos = [], 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, m.start() - start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - start + 1))
    return tokens


class _Parser:
    MODAL = ("K", "M", "E")

    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, message):
        raise ParseError(message, self.tok.line, self.tok.column)

    def accept(self, text):
        if self.tok.text == text and self.tok.kind != "eof":
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")

    # terms and atoms
    def term(self) -> str:
        if self.tok.kind in ("ident", "num"):
            t = self.tok.text
            self.i += 1
            return t
        self.error("expected a term")

    def atom(self) -> Atom:
        t = self.tok
        if t.kind != "ident" or not (t.text[0].islower()) or t.text == "not":
            self.error(f"expected an atom, found {t.text or 'end of input'!r}")
        self.i += 1
        args = []
        if self.accept("("):
            args.append(self.term())
            while self.accept(","):
                args.append(self.term())
            self.expect(")")
        return Atom(t.text, tuple(args))

    # rule fragment
    def nafs(self) -> int:
        n = 0
        while self.tok.text == "not" and self.tok.kind == "ident":
            n += 1
            self.i += 1
        if n > 2:
            raise ParseError("more than two stacked default negations", self.tok.line, self.tok.column)
        return n

    def objlit(self, depth=None) -> ObjLit:
        depth = self.nafs() if depth is None else depth
        if self.accept("#true"):
            return ObjLit(TOP, depth)
        if self.accept("#false"):
            return ObjLit(BOT, depth)
        if self.accept("-"):
            return ObjLit(Neg(self.atom()), depth)
        return ObjLit(self.atom(), depth)

    def lit(self):
        depth = self.nafs()
        if self.tok.kind == "ident" and self.tok.text in self.MODAL:
            op = self.tok.text
            self.i += 1
            inner = self.objlit()
            if op == "E":
                return SubjLit("K", inner, reduce_naf(depth + 1))
            return SubjLit(op, inner, depth)
        return self.objlit(depth)

    def program(self) -> Program:
        rules, consts = [], set()
        while self.tok.kind != "eof":
            if self.accept("#const"):
                consts.add(self.term())
                while self.accept(","):
                    consts.add(self.term())
                self.expect(".")
                continue
            line = self.tok.line
            head, body = [], []
            if self.tok.text != ":-":
                head.append(self.objlit())
                while self.accept("|"):
                    head.append(self.objlit())
            if self.accept(":-"):
                body.append(self.lit())
                while self.accept(","):
                    body.append(self.lit())
            self.expect(".")
            rules.append(Rule(tuple(head), tuple(body), line=line))
        return Program(tuple(rules), frozenset(consts))

    # formula fragment
    def formula(self):
        left = self.disjunction()
        if self.accept("<-"):
            return Impl(left, self.formula())
        if self.accept("->"):
            return Impl(self.formula(), left)
        return left

    def disjunction(self):
        parts = [self.conjunction()]
        while self.accept("|"):
            parts.append(self.conjunction())
        return disj(*parts)

    def conjunction(self):
        parts = [self.unary()]
        while self.accept("&"):
            parts.append(self.unary())
        return conj(*parts)

    def unary(self):
        t = self.tok
        if t.kind == "ident" and t.text == "not":
            self.i += 1
            return naf(self.unary())
        if self.accept("-"):
            return Neg(self.unary())
        if t.kind == "ident" and t.text in self.MODAL:
            self.i += 1
            arg = self.unary()
            if t.text == "K":
                return K(arg)
            if t.text == "M":
                return M(arg)
            return naf(K(arg))
        if t.kind == "ident" and t.text in ("forall", "exists"):
            self.i += 1
            var = self.tok.text
            if self.tok.kind != "ident" or not is_variable(var):
                self.error("expected a variable after quantifier")
            self.i += 1
            domain = None
            if self.tok.text == "in":
                self.i += 1
                self.expect("{")
                domain = [self.term()]
                while self.accept(","):
                    domain.append(self.term())
                self.expect("}")
            self.expect(":")
            body = self.unary()
            if domain is not None:
                parts = [substitute(body, {var: c}) for c in domain]
                return conj(*parts) if t.text == "forall" else disj(*parts)
            return Forall(var, body) if t.text == "forall" else Exists(var, body)
        if self.accept("#true"):
            return TOP
        if self.accept("#false"):
            return BOT
        if self.accept("("):
            f = self.formula()
            self.expect(")")
            return f
        return self.atom()


def parse_program(text: str) -> Program:
    return _Parser(text).program()


def parse_formula(text: str):
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}")
    return f


def parse_theory(text: str) -> tuple:
    """Formulas separated by ``.`` (a trailing ``.`` is optional)."""
    p = _Parser(text)
    out = []
    while p.tok.kind != "eof":
        out.append(p.formula())
        if not p.accept("."):
            if p.tok.kind != "eof":
                p.error(f"expected '.', found {p.tok.text!r}")
    return tuple(out)


def format_theory(theory) -> str:
    return "".join(f"{f}.\n" for f in theory)
