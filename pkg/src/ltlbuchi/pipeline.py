"""The end-to-end translation with its configuration switches."""
from __future__ import annotations

from dataclasses import dataclass, replace

from .ba import Ba, BaStats, degeneralize, simplify_ba, stats
from .formula import Formula, to_pnf
from .label import LabelSpace
from .parser import parse
from .reduce import BASE_RULES, RuleSet, reduce
from .tgba import Tgba, build_tgba, simplify_tgba
from .vwaa import Vwaa, build_vwaa, simplify_vwaa


class InvariantViolation(RuntimeError):
    """An automaton failed its structural self-check."""


@dataclass(frozen=True)
class PipelineConfig:
    reduce: bool = True
    extended_rules: bool = True
    mode: str = "improved"
    vwaa_simplify: str = "general"
    suspend: bool = True
    temporal_progress: bool = True
    acceptance: str = "corrected"
    gf_fastpath: bool = True
    ba_merge: str = "selfloop"
    check: bool = True

    @classmethod
    def groups(cls, g1: bool = True, g2: bool = True, g3: bool = True,
               g4: bool = True) -> "PipelineConfig":
        """Configuration with the four modification groups toggled.

        1: the new reduction rules; 2: improved VWAA with generalized
        simplification; 3: suspension, corrected acceptance sets and the GF
        fast path; 4: the self-loop-aware BA merge rule.
        """
        return cls(
            extended_rules=g1,
            mode="improved" if g2 else "original",
            vwaa_simplify="general" if g2 else "basic",
            suspend=g3,
            acceptance="corrected" if g3 else "original",
            gf_fastpath=g3,
            ba_merge="selfloop" if g4 else "basic",
        )

    def with_(self, **kw) -> "PipelineConfig":
        return replace(self, **kw)

    @property
    def rules(self) -> RuleSet:
        return RuleSet() if self.extended_rules else RuleSet(BASE_RULES)


@dataclass
class Translation:
    source: Formula
    pnf: Formula
    reduced: Formula
    vwaa: Vwaa
    tgba: Tgba | None = None
    ba: Ba | None = None
    stats: BaStats | None = None


def _checked(obj, cfg: PipelineConfig):
    if cfg.check:
        try:
            obj.check()
        except AssertionError as e:
            raise InvariantViolation(f"{type(obj).__name__}: {e}") from e
    return obj


STAGES = ("vwaa", "tgba", "ba")


def translate(phi: Formula | str, cfg: PipelineConfig | None = None,
              stage: str = "ba") -> Translation:
    """Run parse, normalisation, reduction and the automaton stages up to ``stage``."""
    if stage not in STAGES:
        raise ValueError(f"unknown stage {stage!r}")
    cfg = cfg or PipelineConfig()
    src = parse(phi) if isinstance(phi, str) else phi
    pnf = to_pnf(src)
    space = LabelSpace(pnf.aps)
    red = reduce(pnf, cfg.rules) if cfg.reduce else pnf
    a = _checked(simplify_vwaa(build_vwaa(red, cfg.mode, space), cfg.vwaa_simplify), cfg)
    if stage == "vwaa":
        return Translation(src, pnf, red, a)
    g = build_tgba(a, suspend=cfg.suspend, temporal_progress=cfg.temporal_progress,
                   acceptance=cfg.acceptance, gf_fast=cfg.gf_fastpath)
    g = _checked(simplify_tgba(_checked(g, cfg)), cfg)
    if stage == "tgba":
        return Translation(src, pnf, red, a, g)
    b = _checked(simplify_ba(degeneralize(g), cfg.ba_merge), cfg)
    return Translation(src, pnf, red, a, g, b, stats(b))
