"""Ground truth on ultimately periodic words.

Nothing here depends on the translation pipeline: formulae are evaluated
directly by dynamic programming over lasso positions, and automata are
checked by explicit product with the lasso.  Automata are accessed only
through their public fields (``space``, ``initial``, ``trans`` and, for
Büchi automata, ``accepting``; for generalized ones, ``acceptance``).
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._graph import sccs
from .formula import Formula, Op, subformulae
from .label import Label, LabelSpace

Letter = frozenset


@dataclass(frozen=True)
class LassoWord:
    """The word u·v^ω."""
    u: tuple[frozenset[str], ...]
    v: tuple[frozenset[str], ...]

    def __post_init__(self):
        if not self.v:
            raise ValueError("the loop of a lasso must be non-empty")
        object.__setattr__(self, "u", tuple(frozenset(x) for x in self.u))
        object.__setattr__(self, "v", tuple(frozenset(x) for x in self.v))

    @classmethod
    def of(cls, u: Iterable[Iterable[str]], v: Iterable[Iterable[str]]) -> "LassoWord":
        return cls(tuple(frozenset(x) for x in u), tuple(frozenset(x) for x in v))

    def __len__(self) -> int:
        return len(self.u) + len(self.v)

    def letter(self, i: int) -> frozenset[str]:
        n = len(self.u)
        return self.u[i] if i < n else self.v[i - n]

    def succ(self, i: int) -> int:
        return i + 1 if i + 1 < len(self) else len(self.u)

    def __str__(self):
        def show(seq):
            return "".join("{" + " ".join(sorted(x)) + "}" for x in seq)
        return f"{show(self.u)}|{show(self.v)}"


_LETTER = re.compile(r"\{([^{}]*)\}")


def parse_lasso(text: str) -> LassoWord:
    """Read ``{a b}{}|{a}``: prefix letters, a bar, loop letters."""
    if text.count("|") != 1:
        raise ValueError(f"lasso needs exactly one '|': {text!r}")
    parts = []
    for half in text.split("|"):
        half = half.strip()
        letters = []
        pos = 0
        for m in _LETTER.finditer(half):
            if half[pos:m.start()].strip():
                raise ValueError(f"junk in lasso literal: {text!r}")
            letters.append(frozenset(m.group(1).split()))
            pos = m.end()
        if half[pos:].strip():
            raise ValueError(f"junk in lasso literal: {text!r}")
        parts.append(tuple(letters))
    return LassoWord(parts[0], parts[1])


# -- formula evaluation -----------------------------------------------------------

def evaluate(f: Formula, w: LassoWord) -> bool:
    """Exact satisfaction of ``w`` at position 0."""
    n = len(w)
    nu = len(w.u)
    succ = [w.succ(i) for i in range(n)]
    letters = [w.letter(i) for i in range(n)]
    val: dict[Formula, list[bool]] = {}

    def fix(step, init: bool) -> list[bool]:
        out = [init] * n
        for _ in range(2):
            for i in range(n - 1, nu - 1, -1):
                out[i] = step(i, out[succ[i]])
        for i in range(nu - 1, -1, -1):
            out[i] = step(i, out[succ[i]])
        return out

    for g in subformulae(f):
        op = g.op
        c = [val[k] for k in g.children]
        if op is Op.TT:
            r = [True] * n
        elif op is Op.FF:
            r = [False] * n
        elif op is Op.AP:
            r = [g.name in letters[i] for i in range(n)]
        elif op is Op.NAP:
            r = [g.name not in letters[i] for i in range(n)]
        elif op is Op.NOT:
            r = [not x for x in c[0]]
        elif op is Op.AND:
            r = [x and y for x, y in zip(c[0], c[1])]
        elif op is Op.OR:
            r = [x or y for x, y in zip(c[0], c[1])]
        elif op is Op.X:
            r = [c[0][succ[i]] for i in range(n)]
        elif op is Op.U:
            a, b = c
            r = fix(lambda i, nxt: b[i] or (a[i] and nxt), False)
        elif op is Op.R:
            a, b = c
            r = fix(lambda i, nxt: b[i] and (a[i] or nxt), True)
        elif op is Op.F:
            a = c[0]
            r = fix(lambda i, nxt: a[i] or nxt, False)
        elif op is Op.G:
            a = c[0]
            r = fix(lambda i, nxt: a[i] and nxt, True)
        else:  # pragma: no cover
            raise AssertionError(op)
        val[g] = r
    return val[f][0]


# public alias; ``evaluate`` avoids shadowing the builtin internally
eval = evaluate  # noqa: A001


# -- automaton acceptance -------------------------------------------------------------

def _letter_index(space: LabelSpace, letter: frozenset[str]) -> int:
    return space.letter_index(p for p in letter if p in space.index)


def _nontrivial(comp: list, succ) -> bool:
    if len(comp) > 1:
        return True
    node = comp[0]
    return node in succ(node)


def ba_accepts(b, w: LassoWord) -> bool:
    """Does the Büchi automaton ``b`` accept ``w``?"""
    idx = [_letter_index(b.space, w.letter(i)) for i in range(len(w))]

    def succ(node):
        q, i = node
        j = w.succ(i)
        return [(t, j) for lab, t in b.trans.get(q, ()) if lab.contains(idx[i])]

    roots = [(q, 0) for q in b.initial]
    for comp in sccs(roots, succ):
        if any(q in b.accepting for q, _ in comp) and _nontrivial(comp, succ):
            return True
    return False


def tgba_accepts(g, w: LassoWord) -> bool:
    """Does the generalized automaton ``g`` accept ``w``?"""
    idx = [_letter_index(g.space, w.letter(i)) for i in range(len(w))]
    need = frozenset(g.acceptance)

    def edges(node):
        q, i = node
        j = w.succ(i)
        return [((t, j), marks) for lab, t, marks in g.trans.get(q, ())
                if lab.contains(idx[i])]

    def succ(node):
        return [n for n, _ in edges(node)]

    roots = [(q, 0) for q in g.initial]
    for comp in sccs(roots, succ):
        members = set(comp)
        seen: set = set()
        cyclic = False
        for node in comp:
            for nxt, marks in edges(node):
                if nxt in members:
                    cyclic = True
                    seen |= marks
        if cyclic and need <= seen:
            return True
    return False


def product_empty(b1, b2) -> bool:
    """Is the intersection of the two Büchi languages empty?"""
    if b1.space.aps == b2.space.aps:
        space = b1.space
    else:
        space = LabelSpace(set(b1.space.aps) | set(b2.space.aps))

    def lifted(b):
        return {q: [(lab.lift(space), t) for lab, t in ts] for q, ts in b.trans.items()}

    t1, t2 = lifted(b1), lifted(b2)

    # phase 0 waits for an accepting b1 state, phase 1 for an accepting b2 state
    def succ(node):
        q1, q2, ph = node
        if ph == 0 and q1 in b1.accepting:
            nph = 1
        elif ph == 1 and q2 in b2.accepting:
            nph = 0
        else:
            nph = ph
        out = []
        for l1, s1 in t1.get(q1, ()):
            for l2, s2 in t2.get(q2, ()):
                if (l1 & l2).is_sat():
                    out.append((s1, s2, nph))
        return out

    roots = [(p, q, 0) for p in b1.initial for q in b2.initial]
    for comp in sccs(roots, succ):
        if not _nontrivial(comp, succ):
            continue
        # a cycle through both phases must pass a b1-accepting node in phase 0
        if any(ph == 0 and q1 in b1.accepting for q1, _, ph in comp) and \
                any(ph == 1 for _, _, ph in comp):
            return False
    return True


# -- lasso supplies ---------------------------------------------------------------------

def _letters(aps: Sequence[str]) -> list[frozenset[str]]:
    aps = sorted(aps)
    return [frozenset(p for k, p in enumerate(aps) if i >> k & 1)
            for i in range(1 << len(aps))]


def enumerate_lassos(aps: Sequence[str], max_u: int = 2, max_v: int = 2) -> Iterator[LassoWord]:
    letters = _letters(aps)
    for lu in range(max_u + 1):
        for u in itertools.product(letters, repeat=lu):
            for lv in range(1, max_v + 1):
                for v in itertools.product(letters, repeat=lv):
                    yield LassoWord(u, v)


def random_lassos(aps: Sequence[str], count: int, rng: random.Random,
                  max_u: int = 4, max_v: int = 4) -> list[LassoWord]:
    letters = _letters(aps)
    out = []
    for _ in range(count):
        u = tuple(rng.choice(letters) for _ in range(rng.randint(0, max_u)))
        v = tuple(rng.choice(letters) for _ in range(rng.randint(1, max_v)))
        out.append(LassoWord(u, v))
    return out


def sample_lassos(aps: Sequence[str], rng: random.Random | None = None,
                  count: int = 200) -> list[LassoWord]:
    """Default budget: exhaustive up to length 2 for at most two
    propositions, otherwise ``count`` random lassos up to length 4."""
    if len(aps) <= 2:
        return list(enumerate_lassos(aps, 2, 2))
    return random_lassos(aps, count, rng or random.Random(0))
