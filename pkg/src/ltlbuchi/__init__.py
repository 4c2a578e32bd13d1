"""LTL to Büchi automata through very weak alternating automata."""
from .ba import Ba, BaStats, degeneralize, simplify_ba, stats
from .emit import emit
from .families import family
from .formula import Formula, classify, format_formula, negate, to_pnf
from .oracle import LassoWord, ba_accepts, evaluate, parse_lasso, product_empty, tgba_accepts
from .parser import LtlSyntaxError, parse
from .pipeline import InvariantViolation, PipelineConfig, Translation, translate
from .randgen import GenConfig, gen_random
from .reduce import RuleSet, reduce
from .tgba import Tgba, build_tgba, simplify_tgba
from .vwaa import Vwaa, build_vwaa, simplify_vwaa

__all__ = [
    "Ba", "BaStats", "Formula", "GenConfig", "InvariantViolation", "LassoWord",
    "LtlSyntaxError", "PipelineConfig", "RuleSet", "Tgba", "Translation", "Vwaa",
    "ba_accepts", "build_tgba", "build_vwaa", "classify", "degeneralize", "emit",
    "evaluate", "family", "format_formula", "gen_random", "negate", "parse",
    "parse_lasso", "product_empty", "reduce", "simplify_ba", "simplify_tgba",
    "simplify_vwaa", "stats", "tgba_accepts", "to_pnf", "translate",
]
