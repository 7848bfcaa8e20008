"""Brute-force ground truth, independent of the translation pipeline."""
from .automata import (
    NbaLassoChecker,
    accepting_runs,
    make_nba,
    nba_accepts,
    nba_accepts_all,
    nba_accepts_naive,
    nba_nonempty_states,
    nba_unambiguous,
    nba_union,
    vwaa_accepts,
)
from .corpus import count_formulas, enumerate_formulas, random_disjunction_free, random_formula
from .lasso import LassoWord, check_universe, lasso_universe, letters_over, sample_lassos
from .semantics import LassoBatch, ltl_holds

__all__ = [
    "NbaLassoChecker",
    "accepting_runs",
    "make_nba",
    "nba_accepts",
    "nba_accepts_all",
    "nba_accepts_naive",
    "nba_nonempty_states",
    "nba_unambiguous",
    "nba_union",
    "vwaa_accepts",
    "count_formulas",
    "enumerate_formulas",
    "random_disjunction_free",
    "random_formula",
    "LassoWord",
    "check_universe",
    "lasso_universe",
    "letters_over",
    "sample_lassos",
    "LassoBatch",
    "ltl_holds",
]
