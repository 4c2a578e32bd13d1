"""Random formulae in the style of lbtt's generator.

The size is drawn uniformly from the configured range and a tree of
exactly that many nodes is grown top-down: each node kind is picked with
probability proportional to its weight among the kinds that can still
complete the remaining budget, and a binary node splits its budget
uniformly.  The result is put in negation normal form; pushing negations
inward can shrink a formula, so trees whose normal form leaves the size
range are drawn again.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .formula import (Always, And, Eventually, Formula, Next, Not, Or, Release,
                      Until, atom, ff, to_pnf, tt)

LEAVES = ("prop", "true", "false")
UNARY = ("not", "next", "eventually", "always")
BINARY = ("and", "or", "until", "release", "implies", "xor", "equiv",
          "before", "weak_until", "strong_release")

DEFAULT_WEIGHTS = {
    "prop": 50, "true": 1, "false": 1,
    "and": 10, "or": 10, "until": 30,
    "not": 15, "next": 15, "eventually": 15, "always": 15,
    "implies": 15, "release": 15,
    "xor": 0, "equiv": 0, "before": 0, "weak_until": 0, "strong_release": 0,
}

# lbtt parameter names
_LBTT_KEYS = {
    "PropositionPriority": "prop", "TruePriority": "true", "FalsePriority": "false",
    "AndPriority": "and", "OrPriority": "or", "UntilPriority": "until",
    "NotPriority": "not", "NextPriority": "next", "FinallyPriority": "eventually",
    "GloballyPriority": "always", "ImplicationPriority": "implies",
    "ReleasePriority": "release", "XorPriority": "xor",
    "EquivalencePriority": "equiv", "BeforePriority": "before",
    "WeakUntilPriority": "weak_until", "StrongReleasePriority": "strong_release",
}
_MAX_TRIES = 1000
_DEFAULT_OPERATORS = ("not", "next", "eventually", "always", "implies", "release")


@dataclass(frozen=True)
class GenConfig:
    size: tuple[int, int] = (15, 20)
    props: int = 8
    seed: int = 0
    weights: dict = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))

    def __post_init__(self):
        lo, hi = self.size
        if lo < 1 or lo > hi:
            raise ValueError(f"bad size range {lo}..{hi}")
        if self.props < 1:
            raise ValueError("need at least one proposition")
        for k, v in self.weights.items():
            if k not in DEFAULT_WEIGHTS:
                raise ValueError(f"unknown operator weight {k!r}")
            if v < 0:
                raise ValueError(f"negative weight for {k!r}")
        unsupported = [k for k in ("xor", "equiv", "before", "weak_until", "strong_release")
                       if self.weights.get(k, 0) > 0]
        if unsupported:
            raise ValueError(f"operators not supported by the input language: {unsupported}")


def load_weights(text: str) -> dict:
    """Weights from JSON or from lbtt-style ``Name = value`` lines."""
    text = text.strip()
    weights = dict(DEFAULT_WEIGHTS)
    if text.startswith("{"):
        raw = json.loads(text)
    else:
        raw = {}
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line or "=" not in line:
                continue
            k, v = (x.strip() for x in line.split("=", 1))
            raw[k] = v
    for k, v in raw.items():
        if k == "DefaultOperatorPriority":
            for op in _DEFAULT_OPERATORS:
                weights[op] = int(v)
            continue
        key = _LBTT_KEYS.get(k, k)
        if key not in DEFAULT_WEIGHTS:
            continue  # other lbtt settings (Size, OutputMode, ...) are not weights
        weights[key] = int(v)
    return weights


class _Generator:
    def __init__(self, cfg: GenConfig):
        self.cfg = cfg
        self.w = {k: cfg.weights.get(k, 0) for k in DEFAULT_WEIGHTS}
        self.rng = random.Random(cfg.seed)

    @lru_cache(maxsize=None)
    def feasible(self, n: int) -> bool:
        if n == 1:
            return any(self.w[k] > 0 for k in LEAVES)
        if any(self.w[k] > 0 for k in UNARY) and self.feasible(n - 1):
            return True
        if n >= 3 and any(self.w[k] > 0 for k in BINARY):
            return any(self.feasible(l) and self.feasible(n - 1 - l) for l in range(1, n - 1))
        return False

    def pick(self, kinds) -> str:
        opts = [(k, self.w[k]) for k in kinds if self.w[k] > 0]
        total = sum(w for _, w in opts)
        x = self.rng.uniform(0, total)
        for k, w in opts:
            x -= w
            if x <= 0:
                return k
        return opts[-1][0]

    def grow(self, n: int) -> Formula:
        if n == 1:
            kind = self.pick(LEAVES)
            if kind == "true":
                return tt()
            if kind == "false":
                return ff()
            return atom(f"p{self.rng.randrange(self.cfg.props)}")
        kinds = []
        if self.feasible(n - 1):
            kinds += UNARY
        splits = [l for l in range(1, n - 1) if self.feasible(l) and self.feasible(n - 1 - l)]
        if splits:
            kinds += BINARY
        kind = self.pick(kinds)
        if kind in UNARY:
            sub = self.grow(n - 1)
            return {"not": Not, "next": Next, "eventually": Eventually,
                    "always": Always}[kind](sub)
        left = self.rng.choice(splits)
        a = self.grow(left)
        b = self.grow(n - 1 - left)
        if kind == "and":
            return And(a, b)
        if kind == "or":
            return Or(a, b)
        if kind == "until":
            return Until(a, b)
        if kind == "release":
            return Release(a, b)
        return Or(Not(a), b)  # implies


def gen_random(cfg: GenConfig) -> Formula:
    """One formula in negation normal form, deterministic in ``cfg.seed``."""
    return gen_many(cfg, 1)[0]


def gen_many(cfg: GenConfig, count: int) -> list[Formula]:
    g = _Generator(cfg)
    lo, hi = cfg.size
    sizes = [n for n in range(lo, hi + 1) if g.feasible(n)]
    if not sizes:
        raise ValueError(f"no formula of size {lo}..{hi} can be built with these weights")
    out = []
    while len(out) < count:
        for _ in range(_MAX_TRIES):
            f = to_pnf(g.grow(g.rng.choice(sizes)))
            if lo <= f.size <= hi:
                out.append(f)
                break
        else:
            raise ValueError(f"could not hit size {lo}..{hi} after negation normal form")
    return out
