"""Büchi automata: degeneralization, state merging and statistics."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ._graph import reachable, sccs
from .label import Label, LabelSpace
from .tgba import Tgba

MERGE_MODES = ("basic", "selfloop")


@dataclass
class Ba:
    """States are integers; ``names`` keeps a readable origin for each."""
    space: LabelSpace
    initial: list[int]
    accepting: frozenset[int]
    states: list[int] = field(default_factory=list)
    trans: dict[int, list[tuple[Label, int]]] = field(default_factory=dict)
    names: dict[int, str] = field(default_factory=dict)

    def edges(self) -> Iterable[tuple[int, Label, int]]:
        for q in self.states:
            for lab, t in self.trans[q]:
                yield q, lab, t

    def check(self) -> None:
        for q, lab, t in self.edges():
            assert lab.is_sat(), "unsatisfiable BA label"
            assert t in self.trans, "dangling BA target"
        assert self.accepting <= set(self.states), "accepting state not declared"


@dataclass(frozen=True)
class BaStats:
    states: int
    transitions: int
    deterministic: bool


def _disjoint_by_marks(edges):
    """Within one target, let a transition with more marks take over the
    letters it shares with one carrying fewer marks."""
    out = []
    for i, (lab, t, m) in enumerate(edges):
        for j, (lab2, t2, m2) in enumerate(edges):
            if i != j and t2 == t and m < m2:
                lab = lab - lab2
        if lab:
            out.append((lab, t, m))
    return out


def degeneralize(g: Tgba) -> Ba:
    """Level-counter construction, jumping over every satisfied set."""
    acc = list(g.acceptance)
    m = len(acc)
    ids: dict[tuple, int] = {}
    names: dict[int, str] = {}
    trans: dict[int, list[tuple[Label, int]]] = {}
    edges_of = {s: _disjoint_by_marks(g.trans[s]) for s in g.states}
    key_of: dict[int, tuple | None] = {}

    def node(s, level) -> int:
        k = (s, level)
        if k not in ids:
            ids[k] = len(ids)
            key_of[ids[k]] = k
            names[ids[k]] = f"{g.state_name(s)}/{level}"
        return ids[k]

    # The level on entering an SCC is irrelevant for acceptance; a fixed
    # choice avoids copies of a state that differ only in that level.
    scc_of: dict = {}
    entry: dict = {}
    need = frozenset(acc)
    for k, comp in enumerate(sccs(g.initial, lambda s: [t for _, t, _ in g.trans[s]])):
        members = set(comp)
        seen: set = set()
        cyclic = False
        for s in comp:
            scc_of[s] = k
            for _, t, marks in g.trans[s]:
                if t in members:
                    cyclic = True
                    seen |= marks
        entry[k] = m if cyclic and seen >= need else 0

    def advance(level: int, marks) -> int:
        j = 0 if level == m else level
        while j < m and acc[j] in marks:
            j += 1
        return j

    def succ(n: int):
        s, level = key_of[n]
        out = []
        for lab, t, marks in edges_of[s]:
            if scc_of[t] == scc_of[s]:
                nl = advance(level, marks)
            else:
                nl = entry[scc_of[t]]
            out.append((lab, node(t, nl)))
        trans[n] = out
        return [t for _, t in out]

    roots = [node(s, entry[scc_of[s]]) for s in g.initial]
    states = reachable(roots, succ)
    if len(roots) > 1:
        # fresh initial state copying the moves of all initial states
        fresh = len(ids)
        ids[("init",)] = fresh
        key_of[fresh] = None
        names[fresh] = "init"
        trans[fresh] = [e for r in roots for e in trans[r]]
        states = [fresh] + states
        roots = [fresh]
    accepting = frozenset(n for n in states
                          if key_of[n] is not None and key_of[n][1] == m)
    return Ba(g.space, roots, accepting, states, {n: trans[n] for n in states}, names)


# -- simplification -----------------------------------------------------------------

_SELF = -1


def _normalize(ts: Iterable[tuple[Label, int]]) -> list[tuple[Label, int]]:
    by_target: dict[int, Label] = {}
    for lab, t in ts:
        by_target[t] = by_target[t] | lab if t in by_target else lab
    return sorted(((lab, t) for t, lab in by_target.items() if lab), key=lambda e: e[1])


def _signature(b: Ba, q: int, mode: str) -> tuple:
    ts = b.trans[q]
    if mode == "selfloop":
        pairs = sorted((_SELF if t == q else t, lab.bits) for lab, t in ts)
    else:
        pairs = sorted((t, lab.bits) for lab, t in ts)
    return (q in b.accepting, tuple(pairs))


def _live(b: Ba) -> set[int]:
    """States from which some accepting cycle is reachable."""
    succ = lambda q: [t for _, t in b.trans[q]]
    good: set[int] = set()
    for comp in sccs(b.initial, succ):
        members = set(comp)
        cyclic = len(comp) > 1 or any(t == comp[0] for t in succ(comp[0]))
        if cyclic and members & b.accepting:
            good |= members
    # backward closure
    pred: dict[int, list[int]] = {q: [] for q in b.states}
    for q, _, t in b.edges():
        pred.setdefault(t, []).append(q)
    stack = list(good)
    while stack:
        q = stack.pop()
        for p in pred.get(q, ()):
            if p not in good:
                good.add(p)
                stack.append(p)
    return good


def _restrict(b: Ba, keep: set[int]) -> Ba:
    init = [q for q in b.initial if q in keep] or list(b.initial)
    trans = {q: [(lab, t) for lab, t in b.trans[q] if t in keep]
             for q in b.states if q in keep or q in init}
    order = reachable(init, lambda q: [t for _, t in trans[q]])
    return Ba(b.space, init, b.accepting & frozenset(order) & frozenset(keep), order,
              {q: trans[q] for q in order}, {q: b.names.get(q, str(q)) for q in order})


def _merge_classes(b: Ba, rule: str) -> dict[int, int]:
    """Map each mergeable state to its representative (initial states win)."""
    init = set(b.initial)
    order = sorted(range(len(b.states)), key=lambda k: (b.states[k] not in init, k))
    groups: dict[tuple, int] = {}
    rep: dict[int, int] = {}
    for k in order:
        q = b.states[k]
        first = groups.setdefault(_signature(b, q, rule), q)
        if first != q:
            rep[q] = first
    return rep


def simplify_ba(b: Ba, mode: str = "selfloop") -> Ba:
    """Merge equivalent states and drop useless ones, to a fixpoint."""
    if mode not in MERGE_MODES:
        raise ValueError(f"unknown BA merge mode {mode!r}")
    cur = Ba(b.space, list(b.initial), b.accepting, list(b.states),
             {q: _normalize(ts) for q, ts in b.trans.items()}, dict(b.names))
    rules = ("basic", "selfloop") if mode == "selfloop" else ("basic",)
    while True:
        cur = _restrict(cur, _live(cur))
        for rule in rules:
            rep = _merge_classes(cur, rule)
            if rep:
                break
        else:
            break
        trans = {}
        for q in cur.states:
            if q not in rep:
                trans[q] = _normalize((lab, rep.get(t, t)) for lab, t in cur.trans[q])
        states = [q for q in cur.states if q not in rep]
        initial = list(dict.fromkeys(rep.get(q, q) for q in cur.initial))
        cur = Ba(cur.space, initial, cur.accepting & frozenset(states), states,
                 trans, cur.names)
    return renumber(cur)


def renumber(b: Ba) -> Ba:
    """Number states 0.. in breadth-first order from the initial states."""
    order = reachable(b.initial, lambda q: [t for _, t in b.trans[q]])
    new = {q: k for k, q in enumerate(order)}
    trans = {new[q]: sorted(((lab, new[t]) for lab, t in b.trans[q]),
                            key=lambda e: (e[1], e[0].bits)) for q in order}
    return Ba(b.space, [new[q] for q in b.initial],
              frozenset(new[q] for q in b.accepting if q in new),
              list(range(len(order))), trans,
              {new[q]: b.names.get(q, str(q)) for q in order})


def stats(b: Ba) -> BaStats:
    pairs = {(q, t) for q, _, t in b.edges()}
    det = len(b.initial) == 1
    if det:
        for q in b.states:
            ts = b.trans[q]
            for i, (l1, t1) in enumerate(ts):
                for l2, t2 in ts[i + 1:]:
                    if t1 != t2 and (l1 & l2).is_sat():
                        det = False
                        break
                if not det:
                    break
            if not det:
                break
    return BaStats(len(b.states), len(pairs), det)
