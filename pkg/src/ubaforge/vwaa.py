"""Very weak alternating co-Buchi automata.

Transitions are kept in minimal-model form: ``delta[q]`` is a tuple of
``(letters, successors)`` pairs where ``letters`` is a letter-set bitmask
and ``successors`` a frozenset of state ids.  For every single letter the
successor sets enabled on it form an antichain.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .alphabet import Alphabet
from .graph import strongly_connected_components
from .labels import expression
from .ltl import formula as fm
from .ltl.formula import Formula
from .ltl.fragments import classify

Transition = Tuple[int, FrozenSet[int]]


@dataclass(frozen=True)
class State:
    formula: Formula
    complement: bool = False
    final: bool = False
    rewritten: bool = False  # replaced by the purely-universal heuristic

    @property
    def label(self) -> str:
        text = self.formula.text
        return f"~({text})" if self.complement else text


@dataclass(frozen=True)
class Vwaa:
    alphabet: Alphabet
    states: Tuple[State, ...]
    delta: Tuple[Tuple[Transition, ...], ...]
    initial: int
    partner: Mapping[int, int] = field(default_factory=dict, compare=False)
    # formula -> state id of the non-complement state representing it
    index: Mapping[Formula, int] = field(default_factory=dict, compare=False, repr=False)
    suspension: bool = field(default=True, compare=False)

    @property
    def finals(self) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.states) if s.final)

    def __len__(self) -> int:
        return len(self.states)

    def reachable(self) -> List[int]:
        seen = {self.initial}
        order = [self.initial]
        for q in order:
            for _, succ in self.delta[q]:
                for r in sorted(succ):
                    if r not in seen:
                        seen.add(r)
                        order.append(r)
        return order

    def edges(self) -> Dict[int, set]:
        """Underlying graph."""
        return {q: {r for _, succ in self.delta[q] for r in succ} for q in range(len(self.states))}

    def dump(self) -> str:
        """Text adjacency listing of the reachable part."""
        names = self.alphabet.ap
        lines = [f"AP: {' '.join(names)}", f"initial: {self.initial}"]
        for q in sorted(self.reachable()):
            s = self.states[q]
            flag = " final" if s.final else ""
            lines.append(f"state {q} [{s.label}]{flag}")
            for letters, succ in self.delta[q]:
                target = "{" + ", ".join(str(r) for r in sorted(succ)) + "}"
                lines.append(f"  [{expression(letters, names)}] -> {target}")
        return "\n".join(lines) + "\n"


def successor_sets(A: Vwaa, q: int, letter: int) -> List[FrozenSet[int]]:
    """The antichain of successor sets of ``q`` on one letter."""
    return [succ for letters, succ in A.delta[q] if letters >> letter & 1]


def check_very_weak(A: Vwaa) -> bool:
    graph = A.edges()
    for comp in strongly_connected_components(range(len(A.states)), lambda q: graph[q]):
        if len(comp) > 1:
            return False
    return True


def check_antichain(A: Vwaa) -> bool:
    for trans in A.delta:
        for l1, s1 in trans:
            for l2, s2 in trans:
                if s1 < s2 and l1 & l2:
                    return False
    return True


def normalize(trans: Iterable[Transition]) -> Tuple[Transition, ...]:
    """Merge equal successor sets and drop, letter by letter, non-minimal ones."""
    merged: Dict[FrozenSet[int], int] = {}
    for letters, succ in trans:
        if letters:
            merged[succ] = merged.get(succ, 0) | letters
    out = []
    for succ, letters in merged.items():
        for other, other_letters in merged.items():
            if other < succ:
                letters &= ~other_letters
        if letters:
            out.append((letters, succ))
    out.sort(key=lambda t: (len(t[1]), sorted(t[1]), t[0]))
    return tuple(out)


def otimes(m1: Sequence[Transition], m2: Sequence[Transition]) -> Tuple[Transition, ...]:
    return normalize(
        (l1 & l2, s1 | s2) for l1, s1 in m1 for l2, s2 in m2 if l1 & l2
    )


class _Builder:
    """Mutable staging area shared by translation, heuristic and dualization."""

    def __init__(self, alphabet: Alphabet, suspension: bool = True):
        self.alphabet = alphabet
        self.suspension = suspension
        self.states: List[State] = []
        self.delta: List[Optional[Tuple[Transition, ...]]] = []
        self.partner: Dict[int, int] = {}
        self.index: Dict[Formula, int] = {}
        self._cache: Dict[Formula, Tuple[Transition, ...]] = {}

    @classmethod
    def from_vwaa(cls, A: Vwaa) -> "_Builder":
        b = cls(A.alphabet, A.suspension)
        b.states = list(A.states)
        b.delta = list(A.delta)
        b.partner = dict(A.partner)
        b.index = dict(A.index)
        return b

    def freeze(self, initial: int) -> Vwaa:
        assert all(d is not None for d in self.delta)
        return Vwaa(
            self.alphabet,
            tuple(self.states),
            tuple(self.delta),
            initial,
            dict(self.partner),
            dict(self.index),
            self.suspension,
        )

    def suspended(self, f: Formula) -> Formula:
        """G mu with mu purely-eventual is translated as G X mu."""
        if (
            self.suspension
            and f.is_globally
            and f.right.kind != fm.NEXT
            and classify(f.right).purely_eventual
        ):
            return fm.Globally(fm.Next(f.right))
        return f

    def state_of(self, f: Formula) -> int:
        q = self.index.get(f)
        if q is not None:
            return q
        sf = self.suspended(f)
        q = self.index.get(sf)
        if q is None:
            q = len(self.states)
            self.states.append(State(sf, final=sf.kind == fm.UNTIL))
            self.delta.append(None)
            self.index[sf] = q
            self.index[f] = q
            self.delta[q] = self.transitions(sf)
        else:
            self.index[f] = q
        return q

    def transitions(self, f: Formula) -> Tuple[Transition, ...]:
        cached = self._cache.get(f)
        if cached is not None:
            return cached
        sigma = self.alphabet
        full = sigma.full
        k = f.kind
        none: FrozenSet[int] = frozenset()
        if k == fm.TRUE:
            out: Tuple[Transition, ...] = ((full, none),)
        elif k == fm.FALSE:
            out = ()
        elif k == fm.AP:
            out = normalize([(sigma.with_atom(f.name), none)])
        elif k == fm.NAP:
            out = normalize([(sigma.without_atom(f.name), none)])
        elif k == fm.AND:
            out = otimes(self.transitions(f.left), self.transitions(f.right))
        elif k == fm.OR:
            out = normalize(self.transitions(f.left) + self.transitions(f.right))
        elif k == fm.NEXT:
            out = ((full, frozenset([self.state_of(f.left)])),)
        elif k == fm.UNTIL:
            loop = ((full, frozenset([self.state_of(f)])),)
            out = normalize(self.transitions(f.right) + otimes(self.transitions(f.left), loop))
        elif k == fm.RELEASE:
            sf = self.suspended(f)
            if sf is not f:
                out = self.transitions(sf)
            else:
                loop = ((full, frozenset([self.state_of(f)])),)
                out = otimes(self.transitions(f.right), normalize(self.transitions(f.left) + loop))
        else:
            raise ValueError(f"formula not in positive normal form: {f}")
        self._cache[f] = out
        return out

    # --- complements -------------------------------------------------

    def complement_of(self, q: int) -> int:
        if q in self.partner:
            return self.partner[q]
        s = self.states[q]
        for _, succ in self.delta[q]:
            for r in succ:
                if r != q:
                    self.complement_of(r)
        c = len(self.states)
        self.states.append(State(s.formula, complement=not s.complement, final=not s.final))
        self.delta.append(None)
        self.partner[q] = c
        self.partner[c] = q
        self.delta[c] = dual_transitions(self.delta[q], self.alphabet.full, self.partner)
        return c


def _letter_blocks(trans: Sequence[Transition], full: int) -> List[Tuple[int, List[FrozenSet[int]]]]:
    """Partition the alphabet by the set of enabled transitions."""
    blocks = [(full, [])]
    for letters, succ in trans:
        nxt = []
        for block, enabled in blocks:
            inside, outside = block & letters, block & ~letters
            if inside:
                nxt.append((inside, enabled + [succ]))
            if outside:
                nxt.append((outside, enabled))
        blocks = nxt
    return blocks


def minimal_hitting_sets(family: Sequence[FrozenSet[int]]) -> List[FrozenSet[int]]:
    hits = [frozenset()]
    for s in family:
        grown = set()
        for h in hits:
            if h & s:
                grown.add(h)
            else:
                for x in s:
                    grown.add(h | {x})
        hits = [h for h in grown if not any(o < h for o in grown)]
    return hits


def dual_transitions(
    trans: Sequence[Transition], full: int, partner: Mapping[int, int]
) -> Tuple[Transition, ...]:
    """Minimal models of the dual formula with every state replaced by its complement."""
    out = []
    for block, enabled in _letter_blocks(trans, full):
        for h in minimal_hitting_sets(enabled):
            out.append((block, frozenset(partner[x] for x in h)))
    return normalize(out)


def ltl_to_vwaa(f: Formula, alphabet: Optional[Alphabet] = None, suspension: bool = True) -> Vwaa:
    """Translate a PNF formula; states are (suspended) subformulas, finals are the untils."""
    if alphabet is None:
        alphabet = Alphabet(f.atoms())
    b = _Builder(alphabet, suspension)
    init = b.state_of(f)
    return b.freeze(init)


def add_complement_states(A: Vwaa, states: Optional[Iterable[int]] = None) -> Vwaa:
    """Add a complement for each given state (default: every state) that lacks one.

    Complements of successors are added as needed, so the result is closed
    under the states' cones.
    """
    b = _Builder.from_vwaa(A)
    targets = range(len(A.states)) if states is None else states
    for q in list(targets):
        b.complement_of(q)
    if len(b.states) == len(A.states):
        return A
    return b.freeze(A.initial)


def check_complement_invariant(A: Vwaa) -> bool:
    """No state is reachable from its own complement."""
    graph = A.edges()
    for q, c in A.partner.items():
        seen = {c}
        stack = [c]
        while stack:
            x = stack.pop()
            if x == q:
                return False
            for y in graph[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return True


def with_transitions(A: Vwaa, updates: Mapping[int, Tuple[Transition, ...]]) -> Vwaa:
    delta = list(A.delta)
    for q, trans in updates.items():
        delta[q] = trans
    return replace(A, delta=tuple(delta))


def make_vwaa(
    alphabet: Alphabet,
    formulas: Sequence[Formula],
    delta: Sequence[Sequence[Transition]],
    finals: Iterable[int],
    initial: int = 0,
) -> Vwaa:
    """Build an automaton by hand (tests and examples)."""
    fin = set(finals)
    states = tuple(State(f, final=i in fin) for i, f in enumerate(formulas))
    index = {f: i for i, f in enumerate(formulas)}
    return Vwaa(alphabet, states, tuple(normalize(t) for t in delta), initial, {}, index)
