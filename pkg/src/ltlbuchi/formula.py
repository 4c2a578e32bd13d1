"""LTL syntax trees.

Formulae are hash-consed: every constructor goes through an interning
table, so structurally equal trees are the same Python object and can be
compared with ``is``.  ``F`` and ``G`` stay first-class nodes; the automaton
constructions read them as ``tt U x`` and ``ff R x``.
"""
from __future__ import annotations

import enum
import itertools
import threading
import weakref
from dataclasses import dataclass


class Op(enum.Enum):
    TT = "tt"
    FF = "ff"
    AP = "ap"
    NAP = "nap"      # negated atom, the only negation allowed in PNF
    NOT = "not"      # general negation, present only before to_pnf
    AND = "and"
    OR = "or"
    X = "X"
    U = "U"
    R = "R"
    F = "F"
    G = "G"


UNARY = frozenset({Op.NOT, Op.X, Op.F, Op.G})
BINARY = frozenset({Op.AND, Op.OR, Op.U, Op.R})
TEMPORAL_OPS = frozenset({Op.X, Op.U, Op.R, Op.F, Op.G})


@dataclass(frozen=True)
class ClassFlags:
    pure_eventuality: bool
    pure_universality: bool
    alternating: bool
    is_temporal: bool
    is_state: bool


_table: "weakref.WeakValueDictionary[tuple, Formula]" = weakref.WeakValueDictionary()
_table_lock = threading.Lock()
_uids = itertools.count()


class Formula:
    """An interned LTL node.  Build instances with the module constructors."""

    __slots__ = ("op", "children", "name", "uid", "_flags", "_key", "_aps",
                 "_size", "_str", "__weakref__")

    op: Op
    children: tuple["Formula", ...]
    name: str | None

    def __hash__(self):
        return self.uid

    def __eq__(self, other):
        return self is other

    def __lt__(self, other: "Formula") -> bool:
        return self.key < other.key

    def __repr__(self):
        return f"Formula({str(self)!r})"

    @property
    def left(self) -> "Formula":
        return self.children[0]

    @property
    def right(self) -> "Formula":
        return self.children[-1]

    @property
    def key(self) -> tuple[int, str]:
        """Canonical, run-independent ordering key."""
        if self._key is None:
            self._key = (self.size, str(self))
        return self._key

    @property
    def size(self) -> int:
        """Number of nodes in the (unshared) syntax tree."""
        if self._size is None:
            self._size = 1 + sum(c.size for c in self.children)
        return self._size

    @property
    def aps(self) -> frozenset[str]:
        if self._aps is None:
            if self.name is not None:
                self._aps = frozenset([self.name])
            else:
                self._aps = frozenset().union(*(c.aps for c in self.children))
        return self._aps

    @property
    def flags(self) -> ClassFlags:
        if self._flags is None:
            self._flags = _compute_flags(self)
        return self._flags

    @property
    def is_temporal(self) -> bool:
        return self.op not in (Op.AND, Op.OR)

    @property
    def is_state(self) -> bool:
        return self.flags.is_state

    @property
    def is_alternating(self) -> bool:
        return self.flags.alternating

    def __str__(self):
        if self._str is None:
            self._str = format_formula(self)
        return self._str

    def unicode(self) -> str:
        return format_formula(self, unicode=True)


def _make(op: Op, children: tuple = (), name: str | None = None) -> Formula:
    key = (op, tuple(c.uid for c in children), name)
    with _table_lock:
        node = _table.get(key)
        if node is None:
            node = object.__new__(Formula)
            node.op = op
            node.children = children
            node.name = name
            node.uid = next(_uids)
            node._flags = node._key = node._aps = node._size = node._str = None
            _table[key] = node
    return node


def tt() -> Formula:
    return _make(Op.TT)


def ff() -> Formula:
    return _make(Op.FF)


def atom(name: str) -> Formula:
    return _make(Op.AP, name=name)


def neg_atom(name: str) -> Formula:
    return _make(Op.NAP, name=name)


def Not(f: Formula) -> Formula:
    return _make(Op.NOT, (f,))


def And(a: Formula, b: Formula) -> Formula:
    return _make(Op.AND, (a, b))


def Or(a: Formula, b: Formula) -> Formula:
    return _make(Op.OR, (a, b))


def Next(f: Formula) -> Formula:
    return _make(Op.X, (f,))


def Until(a: Formula, b: Formula) -> Formula:
    return _make(Op.U, (a, b))


def Release(a: Formula, b: Formula) -> Formula:
    return _make(Op.R, (a, b))


def Eventually(f: Formula) -> Formula:
    return _make(Op.F, (f,))


def Always(f: Formula) -> Formula:
    return _make(Op.G, (f,))


def conj(parts) -> Formula:
    """Right-nested conjunction of ``parts`` (``tt`` when empty)."""
    parts = list(parts)
    if not parts:
        return tt()
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def disj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return ff()
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def make(op: Op, children=(), name=None) -> Formula:
    """Generic constructor, used by rewriters that rebuild nodes."""
    return _make(op, tuple(children), name)


# -- classification ---------------------------------------------------------

def _compute_flags(f: Formula) -> ClassFlags:
    op = f.op
    is_state = op not in TEMPORAL_OPS and all(c.is_state for c in f.children)
    if op in (Op.TT, Op.FF, Op.AP, Op.NAP, Op.NOT):
        return ClassFlags(False, False, False, op is not Op.NOT, is_state)

    cf = [c.flags for c in f.children]
    if op is Op.F:
        mu = True
        nu = cf[0].pure_universality
        xi = cf[0].pure_universality or cf[0].alternating
    elif op is Op.G:
        mu = cf[0].pure_eventuality
        nu = True
        xi = cf[0].pure_eventuality or cf[0].alternating
    elif op in (Op.AND, Op.OR):
        mu = cf[0].pure_eventuality and cf[1].pure_eventuality
        nu = cf[0].pure_universality and cf[1].pure_universality
        xi = cf[0].alternating and cf[1].alternating
    elif op is Op.X:
        mu, nu, xi = (cf[0].pure_eventuality, cf[0].pure_universality,
                      cf[0].alternating)
    elif op is Op.U:
        mu = cf[1].pure_eventuality
        nu = cf[0].pure_universality and cf[1].pure_universality
        xi = cf[1].alternating
    else:  # Op.R
        mu = cf[0].pure_eventuality and cf[1].pure_eventuality
        nu = cf[1].pure_universality
        xi = cf[1].alternating
    return ClassFlags(mu, nu, xi, f.is_temporal, is_state)


def classify(f: Formula) -> ClassFlags:
    return f.flags


# -- traversal ----------------------------------------------------------------

def subformulae(f: Formula) -> list[Formula]:
    """All distinct subformulae, children before parents."""
    out: list[Formula] = []
    seen: set[Formula] = set()
    stack = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if node in seen:
            continue
        if expanded:
            seen.add(node)
            out.append(node)
        else:
            stack.append((node, True))
            for c in reversed(node.children):
                if c not in seen:
                    stack.append((c, False))
    return out


def temporal_subformulae(f: Formula) -> list[Formula]:
    """Subformulae rooted in X, U, R, F or G; subformulae come first."""
    return [g for g in subformulae(f) if g.op in TEMPORAL_OPS]


def is_subformula(g: Formula, f: Formula) -> bool:
    if g is f:
        return True
    return any(is_subformula(g, c) for c in f.children)


def is_pnf(f: Formula) -> bool:
    return all(g.op is not Op.NOT for g in subformulae(f))


# -- positive normal form -------------------------------------------------------

def to_pnf(f: Formula) -> Formula:
    return _pnf(f, False, {})


def negate(f: Formula) -> Formula:
    """PNF of the negation of ``f``."""
    return _pnf(f, True, {})


_DUAL = {Op.AND: Op.OR, Op.OR: Op.AND, Op.U: Op.R, Op.R: Op.U,
         Op.F: Op.G, Op.G: Op.F, Op.X: Op.X}


def _pnf(f: Formula, neg: bool, memo: dict) -> Formula:
    k = (f, neg)
    hit = memo.get(k)
    if hit is not None:
        return hit
    op = f.op
    if op is Op.NOT:
        res = _pnf(f.children[0], not neg, memo)
    elif op is Op.TT:
        res = ff() if neg else f
    elif op is Op.FF:
        res = tt() if neg else f
    elif op is Op.AP:
        res = neg_atom(f.name) if neg else f
    elif op is Op.NAP:
        res = atom(f.name) if neg else f
    else:
        kids = tuple(_pnf(c, neg, memo) for c in f.children)
        res = _make(_DUAL[op] if neg else op, kids)
    memo[k] = res
    return res


# -- printing ---------------------------------------------------------------------

_ASCII = {Op.AND: "&&", Op.OR: "||", Op.U: "U", Op.R: "V",
          Op.X: "X", Op.F: "<>", Op.G: "[]", Op.NOT: "!"}
_UNI = {Op.AND: "∧", Op.OR: "∨", Op.U: "U", Op.R: "R",
        Op.X: "X", Op.F: "F", Op.G: "G", Op.NOT: "¬"}


def format_formula(f: Formula, unicode: bool = False) -> str:
    """Print ``f``; the ASCII form re-parses to the same formula.

    Binary operands are parenthesised unless they continue a right-nested
    chain of the same operator.
    """
    sym = _UNI if unicode else _ASCII

    def go(g: Formula, parens: bool) -> str:
        op = g.op
        if op is Op.TT:
            return "tt" if unicode else "true"
        if op is Op.FF:
            return "ff" if unicode else "false"
        if op is Op.AP:
            return g.name
        if op is Op.NAP:
            return sym[Op.NOT] + g.name
        if op in UNARY:
            arg = g.children[0]
            s = go(arg, True)
            if unicode:
                sep = " " if op is not Op.NOT and arg.op in (Op.AP, Op.TT, Op.FF) else ""
            else:
                sep = " " if op is Op.X else ""
            return f"{sym[op]}{sep}{s}"
        left = go(g.left, g.left.op in BINARY)
        right = go(g.right, g.right.op in BINARY and g.right.op is not op)
        s = f"{left} {sym[op]} {right}"
        return f"({s})" if parens else s

    return go(f, False)
