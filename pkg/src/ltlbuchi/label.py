"""Transition labels as canonical sets of letters.

A label over the atomic propositions ``aps`` denotes a subset of
``2^aps``.  It is stored as an integer truth table: bit ``i`` is set when
the letter whose membership vector is the binary expansion of ``i`` (bit
``k`` for ``aps[k]``) belongs to the label.  Equal denotations therefore
have equal representations and every Boolean operation is one bitwise
instruction on Python integers.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .formula import Formula, Op

DEFAULT_MAX_APS = 20
ORACLE_MAX_APS = 16


class LabelSpace:
    """The fixed, ordered proposition universe of one translation."""

    def __init__(self, aps: Iterable[str], max_aps: int = DEFAULT_MAX_APS):
        self.aps: tuple[str, ...] = tuple(sorted(set(aps)))
        if len(self.aps) > max_aps:
            raise ValueError(
                f"{len(self.aps)} atomic propositions exceed the limit of {max_aps}")
        self.index = {p: k for k, p in enumerate(self.aps)}
        self.nletters = 1 << len(self.aps)
        self.full = (1 << self.nletters) - 1
        self._var_masks = [_var_mask(k, len(self.aps)) for k in range(len(self.aps))]
        self.top = Label(self, self.full)
        self.bottom = Label(self, 0)

    def __eq__(self, other):
        return isinstance(other, LabelSpace) and self.aps == other.aps

    def __hash__(self):
        return hash(self.aps)

    def __repr__(self):
        return f"LabelSpace({list(self.aps)})"

    def var(self, name: str) -> "Label":
        return Label(self, self._var_masks[self.index[name]])

    def literal(self, name: str, positive: bool = True) -> "Label":
        m = self._var_masks[self.index[name]]
        return Label(self, m if positive else self.full & ~m)

    def from_bits(self, bits: int) -> "Label":
        return Label(self, bits & self.full)

    def of_formula(self, f: Formula) -> "Label":
        """Label of a state formula (no temporal operators)."""
        op = f.op
        if op is Op.TT:
            return self.top
        if op is Op.FF:
            return self.bottom
        if op is Op.AP:
            return self.var(f.name)
        if op is Op.NAP:
            return ~self.var(f.name)
        if op is Op.NOT:
            return ~self.of_formula(f.children[0])
        if op is Op.AND:
            return self.of_formula(f.left) & self.of_formula(f.right)
        if op is Op.OR:
            return self.of_formula(f.left) | self.of_formula(f.right)
        raise ValueError(f"not a state formula: {f}")

    def letter_index(self, letter: Iterable[str]) -> int:
        i = 0
        for p in letter:
            i |= 1 << self.index[p]
        return i

    def letter_of_index(self, i: int) -> frozenset[str]:
        return frozenset(p for k, p in enumerate(self.aps) if i >> k & 1)

    def all_letters(self) -> list[frozenset[str]]:
        return self.top.letters()


def _var_mask(k: int, n: int) -> int:
    """Truth table of the k-th variable over n variables."""
    nletters = 1 << n
    full = (1 << nletters) - 1
    half = 1 << k
    block = ((1 << half) - 1) << half
    period = half << 1
    return block * (full // ((1 << period) - 1))


class Label:
    __slots__ = ("space", "bits")

    def __init__(self, space: LabelSpace, bits: int):
        self.space = space
        self.bits = bits

    def _check(self, other: "Label"):
        if self.space is not other.space and self.space.aps != other.space.aps:
            raise ValueError("labels over different proposition universes")

    def __and__(self, other: "Label") -> "Label":
        self._check(other)
        return Label(self.space, self.bits & other.bits)

    def __or__(self, other: "Label") -> "Label":
        self._check(other)
        return Label(self.space, self.bits | other.bits)

    def __invert__(self) -> "Label":
        return Label(self.space, self.space.full & ~self.bits)

    def __sub__(self, other: "Label") -> "Label":
        self._check(other)
        return Label(self.space, self.bits & ~other.bits)

    def __eq__(self, other):
        return isinstance(other, Label) and self.bits == other.bits \
            and self.space.aps == other.space.aps

    def __hash__(self):
        return hash(self.bits)

    def __bool__(self):
        return self.bits != 0

    def __repr__(self):
        return f"Label({self.guard()})"

    def __str__(self):
        return self.guard()

    @property
    def is_top(self) -> bool:
        return self.bits == self.space.full

    def is_sat(self) -> bool:
        return self.bits != 0

    def implies(self, other: "Label") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def equiv(self, other: "Label") -> bool:
        self._check(other)
        return self.bits == other.bits

    def contains(self, letter_index: int) -> bool:
        return self.bits >> letter_index & 1 == 1

    def lift(self, space: LabelSpace) -> "Label":
        """The same predicate read over a larger proposition universe."""
        if space.aps == self.space.aps:
            return Label(space, self.bits)
        own = self.space
        missing = set(own.aps) - set(space.aps)
        if missing:
            raise ValueError(f"cannot lift: {sorted(missing)} not in target universe")
        remap = [space.index[p] for p in own.aps]
        bits = 0
        for i in range(space.nletters):
            j = 0
            for k, t in enumerate(remap):
                if i >> t & 1:
                    j |= 1 << k
            if self.bits >> j & 1:
                bits |= 1 << i
        return Label(space, bits)

    def letters(self, max_aps: int = ORACLE_MAX_APS) -> list[frozenset[str]]:
        """Letters satisfying the label, in lexicographic order."""
        sp = self.space
        if len(sp.aps) > max_aps:
            raise ValueError(f"refusing to enumerate letters over {len(sp.aps)} propositions")
        out = [sp.letter_of_index(i) for i in range(sp.nletters) if self.bits >> i & 1]
        return sorted(out, key=lambda s: tuple(sorted(s)))

    def cubes(self) -> list[dict[str, bool]]:
        """An irredundant sum-of-products cover, each cube a literal map."""
        n = len(self.space.aps)
        raw = _isop(self.bits, self.bits, n)[1]
        out = [{self.space.aps[k]: v for k, v in cube} for cube in raw]
        out.sort(key=lambda c: (len(c), sorted(c.items())))
        return out

    def guard(self, style: str = "spin") -> str:
        """Render as ``(a && !b) || c`` (spin) or ``0&!1 | 2`` (hoa)."""
        hoa = style == "hoa"
        if self.bits == 0:
            return "f" if hoa else "0"
        if self.bits == self.space.full:
            return "t" if hoa else "1"
        conj, disj, neg = ("&", " | ", "!") if hoa else (" && ", " || ", "!")
        terms = []
        cubes = self.cubes()
        for cube in cubes:
            lits = [(neg if not v else "") + (str(self.space.index[p]) if hoa else p)
                    for p, v in sorted(cube.items(), key=lambda kv: self.space.index[kv[0]])]
            t = conj.join(lits)
            if len(lits) > 1 and len(cubes) > 1:
                t = f"({t})"
            terms.append(t)
        return disj.join(terms)


@lru_cache(maxsize=None)
def _cofactor_masks(k: int, n: int) -> tuple[int, int, int]:
    m = _var_mask(k, n)
    full = (1 << (1 << n)) - 1
    return m, full & ~m, 1 << k


def _cofactors(f: int, k: int, n: int) -> tuple[int, int]:
    """Negative and positive cofactors of ``f`` w.r.t. var ``k``, as
    truth tables over all n variables that no longer depend on var k."""
    pos, negm, shift = _cofactor_masks(k, n)
    f0 = f & negm
    f1 = f & pos
    return f0 | (f0 << shift), f1 | (f1 >> shift)


def _isop(lower: int, upper: int, n: int):
    """Minato-Morreale irredundant SOP for any f with lower <= f <= upper.

    Returns (truth table of the cover, list of cubes), a cube being a tuple
    of (var index, polarity) pairs.
    """
    memo: dict = {}
    full = (1 << (1 << n)) - 1

    def go(lo: int, up: int, k: int):
        if lo == 0:
            return 0, []
        if up == full:
            return full, [()]
        key = (lo, up, k)
        hit = memo.get(key)
        if hit is not None:
            return hit
        # find the highest variable that either bound depends on
        while k >= 0:
            l0, l1 = _cofactors(lo, k, n)
            u0, u1 = _cofactors(up, k, n)
            if l0 != l1 or u0 != u1:
                break
            k -= 1
        pos, negm, _ = _cofactor_masks(k, n)
        c0, cubes0 = go(l0 & ~u1 & full, u0, k - 1)
        c1, cubes1 = go(l1 & ~u0 & full, u1, k - 1)
        lstar = (l0 & ~c0 | l1 & ~c1) & full
        cs, cubess = go(lstar, u0 & u1, k - 1)
        cover = (c0 & negm) | (c1 & pos) | cs
        cubes = ([((k, False),) + c for c in cubes0]
                 + [((k, True),) + c for c in cubes1] + cubess)
        memo[key] = (cover, cubes)
        return cover, cubes

    return go(lower, upper, n - 1)
