"""Source-level LTL reduction.

Every rule strictly decreases the node count, so rewriting terminates; the
pass bound is only a safety net.  Rules are grouped so the pipeline can
toggle the classical base set and the alternating-formula rules separately.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .formula import (And, Always, Eventually, Formula, Next, Op, Or, Release,
                      Until, ff, is_pnf, make, tt)

logger = logging.getLogger(__name__)

BASE_RULES = frozenset({"const", "idem", "pure", "absorb", "xfactor-base", "fdisj"})
EXTENDED_RULES = frozenset({"alt", "xfactor", "cond", "implx"})
ALL_RULES = BASE_RULES | EXTENDED_RULES

IMPLICATION_DEPTH = 8


@dataclass(frozen=True)
class RuleSet:
    enabled: frozenset[str] = field(default_factory=lambda: ALL_RULES)
    max_passes: int = 64

    def __post_init__(self):
        unknown = set(self.enabled) - ALL_RULES
        if unknown:
            raise ValueError(f"unknown reduction rules: {sorted(unknown)}")

    @classmethod
    def base_only(cls) -> "RuleSet":
        return cls(BASE_RULES)

    @classmethod
    def none(cls) -> "RuleSet":
        return cls(frozenset())

    def __contains__(self, rule: str) -> bool:
        return rule in self.enabled


class Implications:
    """Sound, incomplete syntactic implication ``phi => psi`` (memoised)."""

    def __init__(self, derive_next: bool = True, depth: int = IMPLICATION_DEPTH):
        self.derive_next = derive_next
        self.depth = depth
        self._memo: dict[tuple[Formula, Formula, int], bool] = {}

    def __call__(self, phi: Formula, psi: Formula) -> bool:
        return self._imp(phi, psi, self.depth)

    def _imp(self, a: Formula, b: Formula, d: int) -> bool:
        if a is b or a.op is Op.FF or b.op is Op.TT:
            return True
        if d <= 0:
            return False
        key = (a, b, d)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self._derive(a, b, d - 1)
        return hit

    def _derive(self, a: Formula, b: Formula, d: int) -> bool:
        imp = self._imp
        # case splits that are exact for the connectives
        if b.op is Op.AND:
            return imp(a, b.left, d) and imp(a, b.right, d)
        if a.op is Op.OR:
            return imp(a.left, b, d) and imp(a.right, b, d)
        if a.op is Op.AND and (imp(a.left, b, d) or imp(a.right, b, d)):
            return True
        if b.op is Op.OR and (imp(a, b.left, d) or imp(a, b.right, d)):
            return True

        # unfolding: G x => x, x => F x, x R y => y, y => x U y
        if a.op is Op.G and imp(a.children[0], b, d):
            return True
        if a.op is Op.R and imp(a.right, b, d):
            return True
        if b.op is Op.F and imp(a, b.children[0], d):
            return True
        if b.op is Op.U and imp(a, b.right, d):
            return True
        if b.op is Op.R and imp(a, b.left, d) and imp(a, b.right, d):
            return True
        if a.op is Op.U and imp(a.left, b, d) and imp(a.right, b, d):
            return True

        # monotonicity of the temporal operators
        if a.op is b.op and a.op in (Op.F, Op.G, Op.X):
            if a.op is not Op.X or self.derive_next:
                if imp(a.children[0], b.children[0], d):
                    return True
        if a.op is b.op and a.op in (Op.U, Op.R):
            if imp(a.left, b.left, d) and imp(a.right, b.right, d):
                return True
        if a.op is Op.U and b.op is Op.F and imp(a.right, b.children[0], d):
            return True
        if a.op is Op.G and b.op is Op.R and imp(a.children[0], b.right, d):
            return True
        if a.op is Op.F and b.op is Op.U and b.left.op is Op.TT \
                and imp(a.children[0], b.right, d):
            return True

        if self.derive_next:
            # G x => y  gives  G x => X y
            if a.op is Op.G and b.op is Op.X and imp(a, b.children[0], d):
                return True
            # x => F y  gives  X x => F y
            if a.op is Op.X and b.op is Op.F and imp(a.children[0], b, d):
                return True
        return False


def implies_syntactic(phi: Formula, psi: Formula) -> bool:
    return Implications()(phi, psi)


class Reducer:
    def __init__(self, rules: RuleSet | None = None):
        self.rules = rules if rules is not None else RuleSet()
        self.implies = Implications(derive_next="implx" in self.rules)
        self._memo: dict[Formula, Formula] = {}

    def __call__(self, f: Formula) -> Formula:
        if not is_pnf(f):
            raise ValueError("reduce expects a formula in positive normal form")
        for n in range(self.rules.max_passes):
            g = self._rw(f)
            if g is f:
                return g
            f = g
        logger.warning("reduction stopped after %d passes", self.rules.max_passes)
        return f

    def _rw(self, f: Formula) -> Formula:
        hit = self._memo.get(f)
        if hit is not None:
            return hit
        kids = tuple(self._rw(c) for c in f.children)
        g = make(f.op, kids, f.name) if kids != f.children else f
        r = self._step(g)
        if r is not None and r is not g:
            g = self._rw(r)
        self._memo[f] = g
        self._memo[g] = g
        return g

    def _step(self, g: Formula) -> Formula | None:
        rules = self.rules
        for group, fn in _RULES:
            if group in rules:
                r = fn(self, g)
                if r is not None and r is not g:
                    return r
        return None


# -- individual rule groups --------------------------------------------------
# Each returns the rewritten node or None.

def _complementary(a: Formula, b: Formula) -> bool:
    return a.name is not None and a.name == b.name and {a.op, b.op} == {Op.AP, Op.NAP}


def _const(red: Reducer, g: Formula) -> Formula | None:
    op = g.op
    if op is Op.AND:
        a, b = g.children
        if a.op is Op.TT:
            return b
        if b.op is Op.TT:
            return a
        if a.op is Op.FF or b.op is Op.FF or _complementary(a, b):
            return ff()
    elif op is Op.OR:
        a, b = g.children
        if a.op is Op.FF:
            return b
        if b.op is Op.FF:
            return a
        if a.op is Op.TT or b.op is Op.TT or _complementary(a, b):
            return tt()
    elif op in (Op.X, Op.F, Op.G):
        a = g.children[0]
        if a.op in (Op.TT, Op.FF):
            return a
    elif op is Op.U:
        a, b = g.children
        if b.op in (Op.TT, Op.FF):
            return b
        if a.op is Op.FF:
            return b
        if a.op is Op.TT:
            return Eventually(b)
    elif op is Op.R:
        a, b = g.children
        if b.op in (Op.TT, Op.FF):
            return b
        if a.op is Op.TT:
            return b
        if a.op is Op.FF:
            return Always(b)
    return None


def _idem(red: Reducer, g: Formula) -> Formula | None:
    if g.op in (Op.AND, Op.OR, Op.U, Op.R) and g.left is g.right:
        return g.left
    if g.op in (Op.F, Op.G) and g.children[0].op is g.op:
        return g.children[0]
    if g.op is Op.F and g.children[0].op is Op.G:
        inner = g.children[0].children[0]
        if inner.op is Op.F:
            return g.children[0]
    return None


def _alt(red: Reducer, g: Formula) -> Formula | None:
    op = g.op
    if op in (Op.U, Op.R) and g.right.is_alternating:
        return g.right
    if op in (Op.F, Op.G, Op.X) and g.children[0].is_alternating:
        return g.children[0]
    return None


def _pure(red: Reducer, g: Formula) -> Formula | None:
    op = g.op
    if op is Op.F and g.children[0].flags.pure_eventuality:
        return g.children[0]
    if op is Op.G and g.children[0].flags.pure_universality:
        return g.children[0]
    if op is Op.U and g.right.flags.pure_eventuality:
        return g.right
    if op is Op.R and g.right.flags.pure_universality:
        return g.right
    return None


def _absorb(red: Reducer, g: Formula) -> Formula | None:
    op = g.op
    if op in (Op.U, Op.R):
        a, b = g.children
        if b.op is op and b.left is a:
            return b
        if a.op is op and a.right is b:
            return a
    return None


def _xfactor(red: Reducer, g: Formula) -> Formula | None:
    if g.op in (Op.R, Op.OR) and g.left.op is Op.X and g.right.op is Op.X:
        return Next(make(g.op, (g.left.children[0], g.right.children[0])))
    return None


def _xfactor_base(red: Reducer, g: Formula) -> Formula | None:
    if g.op in (Op.U, Op.AND) and g.left.op is Op.X and g.right.op is Op.X:
        return Next(make(g.op, (g.left.children[0], g.right.children[0])))
    return None


def _fdisj(red: Reducer, g: Formula) -> Formula | None:
    if g.op is Op.OR and g.left.op is Op.F and g.right.op is Op.F:
        return Eventually(Or(g.left.children[0], g.right.children[0]))
    return None


def _cond(red: Reducer, g: Formula) -> Formula | None:
    imp = red.implies
    op = g.op
    if op is Op.U:
        psi, inner = g.children
        # psi U (phi U gamma) == psi U gamma   if phi => psi
        if inner.op is Op.U and inner.right.is_alternating and imp(inner.left, psi):
            return Until(psi, inner.right)
        # phi U (gamma R (psi U rho)) == gamma R (psi U rho)   if phi => psi
        if inner.op is Op.R and inner.left.is_alternating and inner.right.op is Op.U \
                and imp(psi, inner.right.left):
            return inner
    if op is Op.R:
        left, phi = g.children
        # (psi R gamma) R phi == gamma R phi   if phi => psi
        if left.op is Op.R and left.right.is_alternating and imp(phi, left.left):
            return Release(left.right, phi)
    if op in (Op.AND, Op.OR):
        # phi & (psi & gamma) == phi & gamma   if phi => psi
        # psi | (phi | gamma) == psi | gamma   if phi => psi
        for outer, nested in ((g.left, g.right), (g.right, g.left)):
            if nested.op is not op:
                continue
            for kept, dropped in ((nested.left, nested.right), (nested.right, nested.left)):
                if not kept.is_alternating:
                    continue
                if op is Op.AND and imp(outer, dropped):
                    return And(outer, kept)
                if op is Op.OR and imp(dropped, outer):
                    return Or(outer, kept)
    return None


_RULES = (
    ("const", _const),
    ("idem", _idem),
    ("alt", _alt),
    ("xfactor", _xfactor),
    ("cond", _cond),
    ("pure", _pure),
    ("absorb", _absorb),
    ("xfactor-base", _xfactor_base),
    ("fdisj", _fdisj),
)


def reduce(f: Formula, rules: RuleSet | None = None) -> Formula:
    """Rewrite a PNF formula to a fixpoint of the enabled rules."""
    return Reducer(rules)(f)
