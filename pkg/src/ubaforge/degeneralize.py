"""Generalized Buchi to state-based Buchi by counting copies."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Tuple

from .alphabet import Alphabet
from .tgba import Tgba


@dataclass(frozen=True)
class Nba:
    alphabet: Alphabet
    states: Tuple[Hashable, ...]
    edges: Tuple[Tuple[Tuple[int, int], ...], ...]  # per state: (letters, target)
    initial: Tuple[int, ...]
    finals: FrozenSet[int]

    def __len__(self) -> int:
        return len(self.states)

    def transition_count(self) -> int:
        return sum(len(es) for es in self.edges)


def next_copy(i: int, acc: int, n: int) -> int:
    """Copy reached from copy ``i`` over an edge with acceptance bits ``acc``.

    Copy n restarts the count from zero.
    """
    j = 0 if i == n else i
    while j < n and acc >> j & 1:
        j += 1
    return j


def degeneralize(G: Tgba) -> Nba:
    """Copies 0..n of G; final states are those of copy n.

    With an empty acceptance family there is a single copy and every state
    is final.  Only the part reachable from the copy-0 initial states is built.
    """
    n = G.num_acc
    ids: Dict[Tuple[int, int], int] = {}
    states: List[Tuple[Hashable, int]] = []
    keys: List[Tuple[int, int]] = []

    def visit(key):
        if key not in ids:
            ids[key] = len(keys)
            keys.append(key)
            states.append((G.states[key[0]], key[1]))
        return ids[key]

    initial = tuple(visit((q, 0)) for q in G.initial)
    edges: List[Tuple[Tuple[int, int], ...]] = []
    i = 0
    while i < len(keys):
        q, c = keys[i]
        merged: Dict[int, int] = {}
        for e in G.edges[q]:
            t = visit((e.target, next_copy(c, e.acc, n)))
            merged[t] = merged.get(t, 0) | e.letters
        edges.append(tuple((ls, t) for t, ls in sorted(merged.items())))
        i += 1
    finals = frozenset(k for k, (_, c) in enumerate(keys) if c == n)
    return Nba(G.alphabet, tuple(states), tuple(edges), initial, finals)
