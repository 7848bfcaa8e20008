"""LTL to unambiguous Buchi automata through very weak alternating automata."""
from .alphabet import Alphabet, AlphabetTooLarge
from .degeneralize import Nba, degeneralize
from .disambiguation import (
    DisambiguationStats,
    IterationCapExceeded,
    disambiguate_step,
    disambiguation_loop,
    try_heuristic,
)
from .hoa import read_hoa, write_hoa
from .ltl import parse_formula, simplify, to_pnf
from .pipeline import PipelineConfig, Translation, check_translation, translate
from .tgba import CapExceeded, Tgba, Witness, find_ambiguity_witness, self_product, trim, vwaa_to_tgba
from .vwaa import Vwaa, add_complement_states, check_very_weak, ltl_to_vwaa, successor_sets

__all__ = [
    "Alphabet",
    "AlphabetTooLarge",
    "Nba",
    "degeneralize",
    "DisambiguationStats",
    "IterationCapExceeded",
    "disambiguate_step",
    "disambiguation_loop",
    "try_heuristic",
    "read_hoa",
    "write_hoa",
    "parse_formula",
    "simplify",
    "to_pnf",
    "PipelineConfig",
    "Translation",
    "check_translation",
    "translate",
    "CapExceeded",
    "Tgba",
    "Witness",
    "find_ambiguity_witness",
    "self_product",
    "trim",
    "vwaa_to_tgba",
    "Vwaa",
    "add_complement_states",
    "check_very_weak",
    "ltl_to_vwaa",
    "successor_sets",
]
