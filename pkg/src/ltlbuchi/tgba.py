"""Transition-based generalized Büchi automata from VWAA.

A TGBA state is a frozen set of VWAA states read as their conjunction.
There is one acceptance set per accepting VWAA state ``f``; a transition
carries the mark ``f`` when it witnesses progress on ``f``.  Marks are
decided while a transition is assembled from VWAA steps, which is what the
corrected acceptance condition needs: a step of ``f`` itself that does not
loop back to ``f`` counts, a suspended or looping one does not.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ._graph import reachable, sccs
from .formula import Formula, Op, subformulae
from .label import Label, LabelSpace
from .vwaa import Vwaa, targets_key

State = frozenset  # frozenset[Formula]
Marks = frozenset  # frozenset[Formula]
Edge = tuple  # (Label, State, Marks)

ACCEPTANCE_MODES = ("corrected", "original")


@dataclass
class Tgba:
    space: LabelSpace
    vwaa: Vwaa
    initial: list[State]
    acceptance: tuple[Formula, ...]
    states: list[State] = field(default_factory=list)
    trans: dict[State, list[Edge]] = field(default_factory=dict)

    def vwaa_ids(self) -> dict[Formula, int]:
        return self.vwaa.state_ids()

    def state_name(self, s: State) -> str:
        ids = self.vwaa_ids()
        return "{" + ",".join(str(i) for i in sorted(ids[q] for q in s)) + "}"

    def marks_name(self, marks: Iterable[Formula]) -> str:
        ids = self.vwaa_ids()
        return "{" + ",".join(str(i) for i in sorted(ids[f] for f in marks)) + "}"

    def edges(self) -> Iterable[tuple[State, Label, State, Marks]]:
        for s in self.states:
            for lab, t, marks in self.trans[s]:
                yield s, lab, t, marks

    def check(self) -> None:
        acc = set(self.acceptance)
        seen = set()
        for s in self.states:
            assert s not in seen, "duplicate TGBA state"
            seen.add(s)
        for s, lab, t, marks in self.edges():
            assert lab.is_sat(), "unsatisfiable TGBA label"
            assert t in self.trans, "dangling TGBA target"
            assert marks <= acc, "undeclared acceptance mark"


# -- suspension ------------------------------------------------------------------

@dataclass(frozen=True)
class SuspensionInfo:
    M: frozenset[Formula]
    progress: frozenset[Formula]
    alternating: frozenset[Formula]

    def is_progress(self, q: Formula) -> bool:
        return q in self.progress


def compute_suspension(a: Vwaa, temporal_only: bool = True) -> SuspensionInfo:
    """Find the set M and the progress formulae among the VWAA states."""
    m: set[Formula] = set()
    for q in a.states:
        if q.op in (Op.R, Op.G):
            m.add(q)
            m.update(subformulae(q.right))
    progress = frozenset(
        q for q in a.states
        if q not in m and (q.is_temporal or not temporal_only))
    alternating = frozenset(q for q in a.states if q.is_alternating)
    return SuspensionInfo(frozenset(m), progress, alternating)


def _suspended(o: State, info: SuspensionInfo) -> frozenset[Formula]:
    prog = [q for q in o if q in info.progress]
    if not prog:
        return frozenset()
    nonalt_progress = any(q not in info.alternating for q in prog)
    return frozenset(
        q for q in o if q in info.alternating
        and (nonalt_progress or q not in info.progress))


# -- product --------------------------------------------------------------------------

def _product(o: State, a: Vwaa, suspended: frozenset[Formula],
             acc: frozenset[Formula]) -> dict[tuple[int, State], frozenset[Formula]]:
    """All combinations of VWAA steps from ``o``.

    Returns a map (label bits, target) -> set of accepting states f in o
    for which some assembly used a real, non-looping step of f.
    """
    space = a.space
    partial: dict[tuple[int, State, frozenset], None] = {(space.full, frozenset(), frozenset()): None}
    for q in sorted(o, key=lambda f: f.key):
        if q in suspended:
            steps = [(space.full, frozenset([q]), False)]
        else:
            steps = [(lab.bits, t, q in acc and q not in t) for lab, t in a.trans[q]]
        nxt: dict[tuple[int, State, frozenset], None] = {}
        for bits, tgt, good in partial:
            for sbits, stgt, progressed in steps:
                b = bits & sbits
                if b:
                    g = good | {q} if progressed else good
                    nxt[(b, tgt | stgt, g)] = None
        partial = nxt
        if not partial:
            break
    out: dict[tuple[int, State], frozenset[Formula]] = {}
    for bits, tgt, good in partial:
        key = (bits, tgt)
        out[key] = out.get(key, frozenset()) | good
    return out


def _original_marks(a: Vwaa, acc: Iterable[Formula], bits: int, tgt: State) -> frozenset:
    out = []
    for f in acc:
        if f not in tgt:
            out.append(f)
            continue
        for lab, t in a.trans[f]:
            if f not in t and t <= tgt and bits & ~lab.bits == 0:
                out.append(f)
                break
    return frozenset(out)


def minimize_edges(edges: Iterable[Edge], subset_targets: bool = True) -> list[Edge]:
    """Keep the minimal transitions.

    t1 dominates t2 when its label is weaker, its target a subset (equal,
    if ``subset_targets`` is off) and it carries every mark of t2.  Labels
    of transitions sharing target and marks are merged first.
    """
    merged: dict[tuple[State, Marks], int] = {}
    space = None
    for lab, t, marks in edges:
        space = lab.space
        k = (t, marks)
        merged[k] = merged.get(k, 0) | lab.bits
    items = [(bits, t, m) for (t, m), bits in merged.items()]
    keep = []
    for i, (b2, t2, m2) in enumerate(items):
        dominated = False
        for j, (b1, t1, m1) in enumerate(items):
            if i == j:
                continue
            if b2 & ~b1 == 0 and m2 <= m1 and (t1 <= t2 if subset_targets else t1 == t2):
                dominated = True
                break
        if not dominated:
            keep.append((Label(space, b2), t2, m2))
    return _sort_edges(keep)


def _sort_edges(edges: Iterable[Edge]) -> list[Edge]:
    return sorted(edges, key=lambda e: (len(e[1]), targets_key(e[1]),
                                        sorted(f.key for f in e[2]), e[0].bits))


# -- GF fast path ----------------------------------------------------------------------

def _gf_shape(o: State) -> tuple[Formula | None, list[Formula]] | None:
    g0 = None
    gfs = []
    for q in o:
        if q.op is not Op.G:
            return None
        body = q.children[0]
        if body.op is Op.F and body.children[0].is_state:
            gfs.append(q)
        elif body.is_state and g0 is None:
            g0 = q
        else:
            return None
    if g0 is None and not gfs:
        return None
    return g0, sorted(gfs, key=lambda f: f.key)


def gf_fastpath(o: State, space: LabelSpace,
                acceptance: Iterable[Formula]) -> list[Edge] | None:
    """Transitions of a state equivalent to G a0 & GF a1 & ... & GF an.

    Every subset I of the GF conjuncts yields a self-loop labelled by a0
    and the ai with i in I, marked by the F ai with i in I and by every
    acceptance set not tied to one of the conjuncts.  Returns None when the
    state does not have this shape.
    """
    shape = _gf_shape(o)
    if shape is None:
        return None
    g0, gfs = shape
    acc = tuple(acceptance)
    base = space.of_formula(g0.children[0]) if g0 is not None else space.top
    fs = [q.children[0] for q in gfs]
    own = {f for f in fs if f in acc}
    others = frozenset(f for f in acc if f not in own)
    parts = [(space.of_formula(f.children[0]), f) for f in fs if f in own]
    edges = []
    for mask in range(1 << len(parts)):
        lab = base
        marks = set(others)
        for k, (alpha, f) in enumerate(parts):
            if mask >> k & 1:
                lab = lab & alpha
                marks.add(f)
        if lab:
            edges.append((lab, o, frozenset(marks)))
    return minimize_edges(edges)


# -- construction -------------------------------------------------------------------------

def build_tgba(a: Vwaa, suspend: bool = True, temporal_progress: bool = True,
               acceptance: str = "corrected", gf_fast: bool = True,
               minimize: bool = True, max_states: int | None = None) -> Tgba:
    """Explore the TGBA breadth-first from the VWAA initial sets.

    ``minimize=False`` keeps dominated transitions; it exists to exhibit
    the unsound combination of suspension with the original acceptance
    sets, which minimization happens to mask on small examples.
    """
    if acceptance not in ACCEPTANCE_MODES:
        raise ValueError(f"unknown acceptance mode {acceptance!r}")
    acc = tuple(sorted(a.accepting, key=lambda f: a.state_ids()[f]))
    accset = frozenset(acc)
    info = compute_suspension(a, temporal_progress) if suspend else None
    initial = list(a.initial)
    trans: dict[State, list[Edge]] = {}

    def succ(o: State):
        if max_states is not None and len(trans) > max_states:
            raise RuntimeError(f"TGBA exceeds {max_states} states")
        edges = gf_fastpath(o, a.space, acc) if gf_fast else None
        if edges is None:
            susp = _suspended(o, info) if info is not None else frozenset()
            prod = _product(o, a, susp, accset)
            edges = []
            for (bits, tgt), good in prod.items():
                if acceptance == "corrected":
                    marks = frozenset(f for f in acc if f not in tgt) | good
                else:
                    marks = _original_marks(a, acc, bits, tgt)
                edges.append((Label(a.space, bits), tgt, marks))
            edges = minimize_edges(edges) if minimize else _sort_edges(edges)
        trans[o] = edges
        return [t for _, t, _ in edges]

    states = reachable(initial, succ)
    return Tgba(a.space, a, initial, acc, states, {s: trans[s] for s in states})


# -- simplification -------------------------------------------------------------------------

def _redirect(g: Tgba, rep: dict[State, State]) -> None:
    for s in list(g.trans):
        if rep.get(s, s) is not s:
            del g.trans[s]
    for s, edges in g.trans.items():
        g.trans[s] = minimize_edges(
            ((lab, rep.get(t, t), m) for lab, t, m in edges), subset_targets=False)
    g.initial = list(dict.fromkeys(rep.get(s, s) for s in g.initial))


def _prune(g: Tgba) -> None:
    keep = reachable(g.initial, lambda s: [t for _, t, _ in g.trans[s]])
    g.states = keep
    g.trans = {s: g.trans[s] for s in keep}


def _merge_equal(g: Tgba) -> bool:
    groups: dict[tuple, State] = {}
    rep: dict[State, State] = {}
    for s in g.states:
        sig = tuple((lab.bits, t, m) for lab, t, m in g.trans[s])
        first = groups.setdefault(sig, s)
        if first is not s:
            rep[s] = first
    if not rep:
        return False
    _redirect(g, rep)
    return True


def _clear_marks(g: Tgba) -> bool:
    """Drop marks inside SCCs that cannot satisfy every acceptance set."""
    need = frozenset(g.acceptance)
    changed = False
    for comp in sccs(g.initial, lambda s: [t for _, t, _ in g.trans[s]]):
        members = set(comp)
        seen: set = set()
        for s in comp:
            for _, t, m in g.trans[s]:
                if t in members:
                    seen |= m
        if seen >= need:
            continue
        for s in comp:
            new = [(lab, t, m if t not in members else frozenset())
                   for lab, t, m in g.trans[s]]
            if any(e[2] != n[2] for e, n in zip(g.trans[s], new)):
                changed = True
                g.trans[s] = minimize_edges(new, subset_targets=False)
    return changed


def _drop_trivial_sets(g: Tgba) -> bool:
    """Forget acceptance sets that every cycle of an accepting SCC carries.

    A set is dropped only if no rejecting SCC becomes accepting by it.
    """
    need = frozenset(g.acceptance)
    comps = []
    for comp in sccs(g.initial, lambda s: [t for _, t, _ in g.trans[s]]):
        members = set(comp)
        inner = [m for s in comp for _, t, m in g.trans[s] if t in members]
        if inner:
            seen = frozenset().union(*inner)
            comps.append((seen >= need, seen, inner))
    dropped: set = set()
    for f in g.acceptance:
        if not all(f in m for ok, _, inner in comps if ok for m in inner):
            continue
        rest = need - dropped - {f}
        if all(ok or not (seen >= rest) for ok, seen, _ in comps):
            dropped.add(f)
    if not dropped:
        return False
    drop = frozenset(dropped)
    g.acceptance = tuple(f for f in g.acceptance if f not in drop)
    for s, edges in g.trans.items():
        g.trans[s] = minimize_edges(((lab, t, m - drop) for lab, t, m in edges),
                                    subset_targets=False)
    return True


def simplify_tgba(g: Tgba, drop_sets: bool = False) -> Tgba:
    """Prune, merge states with identical transitions and drop useless
    marks, repeated until nothing changes.

    ``drop_sets`` also forgets acceptance sets that are trivially met.
    """
    out = Tgba(g.space, g.vwaa, list(g.initial), g.acceptance, list(g.states),
               {s: list(e) for s, e in g.trans.items()})
    _prune(out)
    while True:
        changed = _merge_equal(out)
        if changed:
            _prune(out)
        changed |= _clear_marks(out)
        if drop_sets:
            changed |= _drop_trivial_sets(out)
        if not changed:
            break
    return out
