"""Formula text to unambiguous Buchi automaton, stage by stage."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import List, Optional, Union

from .alphabet import Alphabet
from .degeneralize import Nba, degeneralize
from .disambiguation import DisambiguationStats, disambiguation_loop
from .ltl import parse_formula, simplify, to_pnf
from .ltl.formula import Formula
from .tgba import DEFAULT_STATE_CAP, Tgba
from .vwaa import Vwaa, ltl_to_vwaa

EMIT_TARGETS = ("vwaa", "tgba", "uba")


@dataclass
class PipelineConfig:
    prefix: bool = False
    rewrites: bool = True
    heuristic: bool = True
    suspension: bool = True
    eager_complements: bool = False
    emit: str = "uba"
    max_iterations: Optional[int] = None
    check: bool = False
    seed: int = 0
    state_cap: int = DEFAULT_STATE_CAP

    def __post_init__(self):
        if self.emit not in EMIT_TARGETS:
            raise ValueError(f"emit target must be one of {EMIT_TARGETS}, not {self.emit!r}")


@dataclass
class StageRecord:
    stage: str
    seconds: float
    size: int


@dataclass
class Translation:
    source: Formula
    pnf: Formula
    simplified: Formula
    alphabet: Alphabet
    initial_vwaa: Vwaa
    vwaa: Vwaa
    tgba: Tgba
    nba: Nba
    stats: DisambiguationStats
    stages: List[StageRecord] = field(default_factory=list)

    @property
    def unambiguous(self) -> bool:
        # the loop only returns once no ambiguity witness is left
        return self.stats.records[-1].action is None


def translate(
    formula: Union[str, Formula],
    config: Optional[PipelineConfig] = None,
    alphabet: Optional[Alphabet] = None,
) -> Translation:
    """parse, PNF, simplify, VWAA, disambiguate, degeneralize.

    The alphabet defaults to the atoms of the input formula, taken before
    simplification so that rewriting never shrinks it.
    """
    cfg = config or PipelineConfig()
    stages: List[StageRecord] = []

    def timed(stage, fn, size):
        t0 = time.perf_counter()
        out = fn()
        stages.append(StageRecord(stage, time.perf_counter() - t0, size(out)))
        return out

    if isinstance(formula, str):
        source = timed("parse", lambda: parse_formula(formula, prefix=cfg.prefix), lambda f: f.size)
    else:
        source = formula
    pnf = timed("pnf", lambda: to_pnf(source), lambda f: f.size)
    if alphabet is None:
        alphabet = Alphabet(pnf.atoms())
    simplified = timed("simplify", lambda: simplify(pnf, rewrite_rules=cfg.rewrites), lambda f: f.size)
    A0 = timed(
        "vwaa",
        lambda: ltl_to_vwaa(simplified, alphabet, suspension=cfg.suspension),
        lambda a: len(a.reachable()),
    )
    A, G, stats = timed(
        "disambiguate",
        lambda: disambiguation_loop(
            A0,
            heuristic=cfg.heuristic,
            eager_complements=cfg.eager_complements,
            max_iterations=cfg.max_iterations,
            state_cap=cfg.state_cap,
        ),
        lambda r: len(r[1].states),
    )
    N = timed("degeneralize", lambda: degeneralize(G), len)
    return Translation(source, pnf, simplified, alphabet, A0, A, G, N, stats, stages)


def state_name(A: Vwaa, config) -> str:
    """Readable name of a t-GBA configuration."""
    if not config:
        return "{}"
    return "{" + ", ".join(A.states[q].label for q in sorted(config)) + "}"


def nba_state_names(t: Translation) -> List[str]:
    return [f"{state_name(t.vwaa, c)}#{i}" for c, i in t.nba.states]


def tgba_state_names(t: Translation) -> List[str]:
    return [state_name(t.vwaa, c) for c in t.tgba.states]


@dataclass
class CheckReport:
    equivalent: bool
    unambiguous: bool
    lassos: int
    counterexample: Optional[str] = None
    expected: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return self.equivalent and self.unambiguous


def check_translation(t: Translation, seed: int = 0) -> CheckReport:
    """Compare the automaton with the formula on the oracle's lasso universe."""
    from .oracle import LassoBatch, check_universe, nba_accepts_all, nba_unambiguous

    words = check_universe(t.alphabet.ap, seed=seed)
    truth = LassoBatch(words).holds(t.pnf)
    got = nba_accepts_all(t.nba, words)
    bad = [i for i in range(len(words)) if truth[i] != got[i]]
    unamb = nba_unambiguous(t.nba)
    if bad:
        i = bad[0]
        return CheckReport(False, unamb, len(words), str(words[i]), bool(truth[i]))
    return CheckReport(True, unamb, len(words))
