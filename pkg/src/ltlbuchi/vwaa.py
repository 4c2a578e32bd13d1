"""Very weak alternating co-Büchi automata built from PNF formulae.

States are formulae.  A transition is a pair (label, target set); a set of
such pairs is the value of the transition function on one state.  The
original construction keeps only temporal subformulae as states, the
improved one may add a state for a non-temporal operand of ``X`` and for a
non-temporal input formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ._graph import reachable
from .formula import Formula, Op, is_pnf
from .label import Label, LabelSpace

Targets = frozenset  # frozenset[Formula]
Trans = tuple  # (Label, Targets)

MODES = ("original", "improved")
SIMPLIFY_MODES = ("off", "basic", "general")


def targets_key(o: Iterable[Formula]) -> tuple:
    """Canonical ordering key of a target set, larger formulae first."""
    return tuple(sorted((f.key for f in o), reverse=True))


def _sort(ts: Iterable[Trans]) -> list[Trans]:
    return sorted(ts, key=lambda t: (len(t[1]), targets_key(t[1]), t[0].bits))


def _dedup(ts: Iterable[Trans]) -> list[Trans]:
    seen = {}
    for lab, o in ts:
        if lab:
            seen.setdefault((lab.bits, o), (lab, o))
    return list(seen.values())


def otimes(j1: Iterable[Trans], j2: Iterable[Trans]) -> list[Trans]:
    """Pairwise products; unsatisfiable ones are dropped."""
    j2 = list(j2)
    return _dedup((a1 & a2, o1 | o2) for a1, o1 in j1 for a2, o2 in j2)


def overline(psi: Formula) -> set[frozenset[Formula]]:
    if psi.op is Op.AND:
        return {o1 | o2 for o1 in overline(psi.left) for o2 in overline(psi.right)}
    if psi.op is Op.OR:
        return overline(psi.left) | overline(psi.right)
    return {frozenset([psi])}


@dataclass
class Vwaa:
    space: LabelSpace
    formula: Formula
    mode: str
    initial: list[Targets]
    states: list[Formula] = field(default_factory=list)
    trans: dict[Formula, list[Trans]] = field(default_factory=dict)
    accepting: frozenset[Formula] = frozenset()

    def state_ids(self) -> dict[Formula, int]:
        """1-based display numbers in exploration order."""
        return {q: k + 1 for k, q in enumerate(self.states)}

    def transitions(self) -> Iterable[tuple[Formula, Label, Targets]]:
        for q in self.states:
            for lab, o in self.trans[q]:
                yield q, lab, o

    def check(self) -> None:
        """Raise AssertionError if a structural invariant is broken."""
        from .formula import is_subformula
        for q, lab, o in self.transitions():
            assert lab.is_sat(), f"unsatisfiable label on {q}"
            for r in o:
                assert r in self.trans, f"dangling target {r}"
                assert is_subformula(r, q) or r is q, f"not very weak: {q} -> {r}"
        for q in self.states:
            assert (q in self.accepting) == (q.op in (Op.U, Op.F)), q


class _Builder:
    def __init__(self, phi: Formula, space: LabelSpace, mode: str):
        if mode not in MODES:
            raise ValueError(f"unknown VWAA mode {mode!r}")
        self.space = space
        self.improved = mode == "improved"
        self._delta: dict[Formula, list[Trans]] = {}
        self._Delta: dict[Formula, list[Trans]] = {}

    def top(self, *qs: Formula) -> list[Trans]:
        return [(self.space.top, frozenset(qs))]

    def delta(self, f: Formula) -> list[Trans]:
        hit = self._delta.get(f)
        if hit is None:
            hit = self._delta[f] = _dedup(self._compute(f))
        return hit

    def _compute(self, f: Formula) -> list[Trans]:
        sp = self.space
        op = f.op
        if op is Op.TT:
            return [(sp.top, frozenset())]
        if op is Op.FF:
            return []
        if op in (Op.AP, Op.NAP):
            return [(sp.literal(f.name, op is Op.AP), frozenset())]
        if op is Op.X:
            if self.improved:
                return self.top(f.children[0])
            return [(sp.top, o) for o in overline(f.children[0])]
        if op is Op.OR:
            return self.Delta(f.left) + self.Delta(f.right)
        if op is Op.AND:
            return otimes(self.Delta(f.left), self.Delta(f.right))
        if op in (Op.U, Op.F):
            left = f.left if op is Op.U else None
            rhs = self.Delta(f.right)
            if left is None:
                step = self.top(f)
            elif self.improved and left.is_alternating:
                step = self.top(left, f)
            else:
                step = otimes(self.Delta(left), self.top(f))
            return rhs + step
        if op in (Op.R, Op.G):
            left = f.left if op is Op.R else None
            rhs = self.Delta(f.right)
            if left is None:
                alt = self.top(f)
            elif self.improved and left.is_alternating:
                alt = self.top(left) + self.top(f)
            else:
                alt = self.Delta(left) + self.top(f)
            return otimes(rhs, alt)
        raise ValueError(f"not in positive normal form: {f}")

    def Delta(self, f: Formula) -> list[Trans]:
        hit = self._Delta.get(f)
        if hit is not None:
            return hit
        if f.op is Op.OR:
            res = _dedup(self.Delta(f.left) + self.Delta(f.right))
        elif f.op is Op.AND:
            res = otimes(self.Delta(f.left), self.Delta(f.right))
        elif self.improved and f.is_alternating:
            res = self.top(f)
        else:
            res = self.delta(f)
        self._Delta[f] = res
        return res


def build_vwaa(phi: Formula, mode: str = "improved",
               space: LabelSpace | None = None) -> Vwaa:
    """Translate a PNF formula into a VWAA."""
    if not is_pnf(phi):
        raise ValueError("build_vwaa expects a formula in positive normal form")
    space = space or LabelSpace(phi.aps)
    b = _Builder(phi, space, mode)
    if mode == "improved":
        init = overline(phi)
        if len(init) != 1:
            init = {frozenset([phi])}
    else:
        init = overline(phi)
    initial = sorted(init, key=lambda o: (len(o), targets_key(o)))

    roots = sorted({q for o in initial for q in o}, key=lambda f: f.key, reverse=True)
    trans: dict[Formula, list[Trans]] = {}

    def succ(q):
        ts = trans.get(q)
        if ts is None:
            ts = trans[q] = _sort(b.delta(q))
        out = []
        for _, o in ts:
            out.extend(sorted(o, key=lambda f: f.key, reverse=True))
        return out

    states = reachable(roots, succ)
    acc = frozenset(q for q in states if q.op in (Op.U, Op.F))
    return Vwaa(space, phi, mode, initial, states, {q: trans[q] for q in states}, acc)


# -- simplification ------------------------------------------------------------------

def _simplify_state(ts: list[Trans], mode: str) -> list[Trans]:
    if mode == "basic":
        ts = _sort(_dedup(ts))
        keep = []
        for i, (a2, o2) in enumerate(ts):
            implied = any(
                j != i and o1 <= o2 and a2.implies(a1)
                and (o1 != o2 or a1 != a2 or j < i)
                for j, (a1, o1) in enumerate(ts))
            if not implied:
                keep.append((a2, o2))
        return keep
    merged: dict[Targets, Label] = {}
    for lab, o in ts:
        merged[o] = merged[o] | lab if o in merged else lab
    order = _sort((lab, o) for o, lab in merged.items())
    out: list[Trans] = []
    for lab, o in order:
        for prev, po in out:
            if po < o:
                lab = lab - prev
        if lab:
            out.append((lab, o))
    return out


def simplify_vwaa(a: Vwaa, mode: str = "general") -> Vwaa:
    """Apply the transition simplification to every state and prune.

    ``basic`` drops transitions implied by one with a weaker label and a
    smaller target set; ``general`` additionally subtracts labels of
    transitions with strictly smaller targets and merges equal targets.
    """
    if mode not in SIMPLIFY_MODES:
        raise ValueError(f"unknown VWAA simplification {mode!r}")
    if mode == "off":
        return a
    new = {q: _simplify_state(ts, mode) for q, ts in a.trans.items()}
    roots = sorted({q for o in a.initial for q in o}, key=lambda f: f.key, reverse=True)

    def succ(q):
        out = []
        for _, o in new[q]:
            out.extend(sorted(o, key=lambda f: f.key, reverse=True))
        return out

    states = reachable(roots, succ)
    return Vwaa(a.space, a.formula, a.mode, list(a.initial), states,
                {q: new[q] for q in states}, a.accepting & frozenset(states))
