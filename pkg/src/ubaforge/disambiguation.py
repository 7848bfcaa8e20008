"""The disambiguation loop: find a source state, split its transitions, repeat."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field, replace
from typing import FrozenSet, List, Optional, Tuple

from .ltl import formula as fm
from .ltl.fragments import FragmentError, classify, decompose_disjunction_free, goal
from .ltl.normal import negate_pnf
from .ltl.simplify import mk_and, mk_next, mk_or, mk_until, operands
from .tgba import DEFAULT_STATE_CAP, Tgba, Witness, find_ambiguity_witness, trim, vwaa_to_tgba
from .vwaa import (
    Vwaa,
    _Builder,
    add_complement_states,
    check_very_weak,
    normalize,
    with_transitions,
)


class StaleWitness(ValueError):
    pass


class MissingComplement(ValueError):
    pass


class IterationCapExceeded(RuntimeError):
    pass


def oriented(w: Witness) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """(S1, S2) with S1 the set omitting the source state, if exactly one does."""
    s1, s2 = w.first, w.second
    if w.state in s1 and w.state not in s2:
        return s2, s1
    return s1, s2


def disambiguate_step(A: Vwaa, w: Witness) -> Vwaa:
    """Split S2 on the letters it shares with S1 into S2 + {~s1} for s1 in S1."""
    s = w.state
    s1, s2 = oriented(w)
    missing = [q for q in s1 if q not in A.partner]
    if missing:
        raise MissingComplement(f"no complement state for {sorted(missing)}")
    beta1 = beta2 = 0
    for letters, succ in A.delta[s]:
        if succ == s1:
            beta1 = letters
        elif succ == s2:
            beta2 = letters
    if not (beta1 >> w.letter & 1 and beta2 >> w.letter & 1):
        raise StaleWitness("witness transitions are no longer present")
    shared = beta1 & beta2
    both = s in s1 and s in s2
    trans = []
    for letters, succ in A.delta[s]:
        if succ == s2:
            letters &= ~shared
        trans.append((letters, succ))
    for q in sorted(s1):
        if both and q == s:
            continue
        trans.append((shared, s2 | {A.partner[q]}))
    return with_transitions(A, {s: normalize(trans)})


def heuristic_formula(f: fm.Formula) -> Optional[Tuple[fm.Formula, fm.Formula]]:
    """Split ``phi U (nu | psi)`` into the disjoint branches ``(nu, gamma)``.

    ``nu`` is the first disjunction-free part of the first purely-universal
    disjunct; everything else goes into ``psi``.
    """
    if f.kind != fm.UNTIL:
        return None
    phi = f.left
    disjuncts = operands(f.right, fm.OR)
    for i, d in enumerate(disjuncts):
        if classify(d).purely_universal:
            break
    else:
        return None
    try:
        parts = decompose_disjunction_free(d)
        nu = parts[0]
        g = goal(nu)
    except FragmentError:
        return None
    psi = fm.false()
    for other in parts[1:] + [x for j, x in enumerate(disjuncts) if j != i]:
        psi = mk_or(psi, other)
    step = mk_and(phi, mk_and(negate_pnf(g), mk_next(nu)))
    gamma = mk_until(phi, mk_or(step, mk_and(psi, negate_pnf(nu))))
    return nu, gamma


def try_heuristic(A: Vwaa, w: Witness) -> Optional[Vwaa]:
    """Replace the source state by the structure of nu | gamma, or None if inapplicable."""
    s = w.state
    st = A.states[s]
    if st.complement or st.rewritten:
        return None
    split = heuristic_formula(st.formula)
    if split is None:
        return None
    nu, gamma = split
    if gamma == st.formula:
        return None
    b = _Builder.from_vwaa(A)
    trans = b.transitions(mk_or(nu, gamma))
    b.states[s] = replace(st, final=False, rewritten=True)
    b.delta[s] = trans
    B = b.freeze(A.initial)
    if not check_very_weak(B):
        return None
    return B


@dataclass
class IterationRecord:
    iteration: int
    vwaa_states: int
    tgba_states: int
    action: Optional[str] = None  # "heuristic" or "standard"; None once unambiguous
    source: Optional[str] = None
    letter: Optional[List[str]] = None
    first: Optional[List[str]] = None
    second: Optional[List[str]] = None
    seconds: float = 0.0


@dataclass
class DisambiguationStats:
    iterations: int = 0
    records: List[IterationRecord] = field(default_factory=list)

    def as_dicts(self) -> List[dict]:
        return [asdict(r) for r in self.records]


def default_iteration_cap(A: Vwaa) -> int:
    n = len(set(A.states[A.initial].formula.subformulas()))
    return 10 * n * n


def disambiguation_loop(
    A: Vwaa,
    heuristic: bool = True,
    eager_complements: bool = False,
    max_iterations: Optional[int] = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> Tuple[Vwaa, Tgba, DisambiguationStats]:
    """Iterate witness search and local transformations until none is found."""
    cap = default_iteration_cap(A) if max_iterations is None else max_iterations
    stats = DisambiguationStats()
    if eager_complements:
        A = add_complement_states(A)
    while True:
        started = time.perf_counter()
        G = trim(vwaa_to_tgba(A, state_cap))
        w = find_ambiguity_witness(A, G)
        rec = IterationRecord(stats.iterations, len(A.reachable()), len(G.states))
        stats.records.append(rec)
        if w is None:
            rec.seconds = time.perf_counter() - started
            return A, G, stats
        if stats.iterations >= cap:
            raise IterationCapExceeded(f"no unambiguous automaton after {cap} iterations")
        label = lambda qs: [A.states[q].label for q in sorted(qs)]
        rec.source = A.states[w.state].label
        rec.letter = sorted(A.alphabet.names(w.letter))
        rec.first, rec.second = label(w.first), label(w.second)
        B = try_heuristic(A, w) if heuristic else None
        if B is not None:
            rec.action = "heuristic"
        else:
            rec.action = "standard"
            A = add_complement_states(A, oriented(w)[0])
            B = disambiguate_step(A, w)
        A = B
        stats.iterations += 1
        rec.seconds = time.perf_counter() - started
