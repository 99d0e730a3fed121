"""Backtracking over modal-core guesses with bound propagation.

For a partial guess every stable model ``T`` of any completion's reduct
satisfies ``L <= T <= U``, where ``U`` over-approximates what rules can
derive and ``L`` under-approximates what they force.  A guess that asks
``K l`` to be true when ``l`` is outside ``U`` (and similar) is cut early.
Only guesses that survive are handed to the stable-model engine.
"""

from __future__ import annotations

from .syntax import BOT, TOP, Neg, ObjLit, SubjLit, complement, reduce_naf

T, F = "T", "F"


def _const(lit: ObjLit):
    if lit.core == TOP:
        return T if lit.naf % 2 == 0 else F
    if lit.core == BOT:
        return F if lit.naf % 2 == 0 else T
    return None


class GuessPruner:
    def __init__(self, program, cores, kind: str):
        self.kind = kind
        self.cores = list(cores)
        index = {c: i for i, c in enumerate(self.cores)}
        ids: dict = {}

        def lit_id(core):
            if core not in ids:
                ids[core] = len(ids)
            return ids[core]

        def obj(lit: ObjLit):
            c = _const(lit)
            return ("c", c) if c else ("o", lit_id(lit.core), lit.naf)

        self.rules = []
        for r in program:
            heads, body, subj = [], [], []
            for h in r.head:
                c = _const(h)
                if c == T:
                    heads = None
                    break
                if c == F:
                    continue
                if h.naf == 0:
                    heads.append(lit_id(h.core))
                else:
                    body.append(("o", lit_id(h.core), 3 - h.naf))
            if heads is None:
                continue
            for l in r.body:
                if isinstance(l, SubjLit):
                    inner = obj(l.inner)
                    subj.append((index[SubjLit(l.modality, l.inner, 0)], l, inner))
                else:
                    body.append(obj(l))
            self.rules.append((tuple(heads), tuple(body), tuple(subj)))
        self.ids = ids
        self.pairs = [(ids[l], ids[complement(l)]) for l in ids if isinstance(l, Neg) and complement(l) in ids]
        self.core_inner = [obj(c.inner) for c in self.cores]

    # -- element evaluation ------------------------------------------------

    def _options(self, lit: SubjLit, inner, value: bool):
        """The objective element a subjective literal turns into under ``value``."""
        odd = lit.naf % 2 == 1
        if self.kind == "g94":
            return ("c", T if value != odd else F)
        if self.kind == "g11":
            if value == odd:
                return ("c", F)
            if lit.naf > 0:
                return ("c", T)
            return inner
        # k15
        if value:
            if inner[0] == "c":
                return ("c", inner[1] if lit.naf % 2 == 0 else (F if inner[1] == T else T))
            return ("o", inner[1], reduce_naf(inner[2] + lit.naf))
        return ("c", T if odd else F)

    @staticmethod
    def _status(el, lower, upper, upper_prev):
        """(possibly true, surely true) of an objective element."""
        if el[0] == "c":
            return (el[1] == T, el[1] == T)
        _, i, naf = el
        if naf == 1:
            return (i not in lower, i not in upper)
        if naf == 2:
            return (i in upper_prev, i in lower)
        return (i in upper, i in lower)

    def _elements(self, rule, assign):
        heads, body, subj = rule
        out = list(body)
        for idx, lit, inner in subj:
            v = assign[idx]
            if v is None:
                out.append(("u", self._options(lit, inner, True), self._options(lit, inner, False)))
            else:
                out.append(self._options(lit, inner, v))
        return out

    def _status_any(self, el, lower, upper, upper_prev):
        if el[0] == "u":
            p1, s1 = self._status(el[1], lower, upper, upper_prev)
            p2, s2 = self._status(el[2], lower, upper, upper_prev)
            return (p1 or p2, s1 and s2)
        return self._status(el, lower, upper, upper_prev)

    # -- bounds ------------------------------------------------------------

    def bounds(self, assign):
        """``(lower, upper)`` or None when no completion can have a stable model."""
        rules = [(r[0], self._elements(r, assign)) for r in self.rules]
        everything = set(range(len(self.ids)))
        upper_prev = everything
        lower: set = set()
        for _ in range(4 * len(everything) + 2):
            upper: set = set()
            changed = True
            while changed:
                changed = False
                for heads, els in rules:
                    if heads and not set(heads) <= upper:
                        if all(self._status_any(e, lower, upper, upper_prev)[0] for e in els):
                            upper |= set(heads)
                            changed = True
            new_lower: set = set()
            changed = True
            while changed:
                changed = False
                for heads, els in rules:
                    if len(heads) == 1 and heads[0] not in new_lower:
                        if all(self._status_any(e, new_lower, upper, upper)[1] for e in els):
                            new_lower.add(heads[0])
                            changed = True
            for heads, els in rules:
                if not heads and all(self._status_any(e, new_lower, upper, upper)[1] for e in els):
                    return None
            if any(a in new_lower and b in new_lower for a, b in self.pairs):
                return None
            if upper == upper_prev and new_lower == lower:
                return new_lower, upper
            upper_prev, lower = upper, new_lower
        return lower, upper_prev

    def consistent(self, assign) -> bool:
        b = self.bounds(assign)
        if b is None:
            return False
        lower, upper = b
        for c, v, inner in zip(self.cores, assign, self.core_inner):
            if v is None:
                continue
            possible, sure = self._status(inner, lower, upper, upper)
            # K o true / M o true need o possibly true somewhere; false needs it possibly false.
            if v and not possible:
                return False
            if not v and sure:
                return False
        return True

    def guesses(self):
        n = len(self.cores)
        assign = [None] * n

        def rec(i):
            if not self.consistent(assign):
                return
            if i == n:
                yield tuple(assign)
                return
            for v in (True, False):
                assign[i] = v
                yield from rec(i + 1)
            assign[i] = None

        yield from rec(0)
