"""Transition-based generalized Buchi automata over VWAA configurations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, NamedTuple, Optional, Sequence, Tuple

from .alphabet import Alphabet
from .graph import strongly_connected_components
from .labels import expression
from .vwaa import Vwaa, successor_sets

DEFAULT_STATE_CAP = 2_000_000

Config = FrozenSet[int]


class CapExceeded(RuntimeError):
    pass


class Edge(NamedTuple):
    letters: int
    target: int
    acc: int  # bit i set iff the edge belongs to acceptance set i


@dataclass(frozen=True)
class Tgba:
    alphabet: Alphabet
    states: Tuple[Hashable, ...]
    edges: Tuple[Tuple[Edge, ...], ...]
    initial: Tuple[int, ...]
    num_acc: int
    acc_names: Tuple[str, ...] = ()
    dead: FrozenSet[int] = frozenset()

    def __len__(self) -> int:
        return len(self.states)

    @property
    def all_acc(self) -> int:
        return (1 << self.num_acc) - 1

    def state_id(self, label: Hashable) -> Optional[int]:
        for i, s in enumerate(self.states):
            if s == label:
                return i
        return None

    def successors(self, q: int, letter: int) -> List[Edge]:
        return [e for e in self.edges[q] if e.letters >> letter & 1]

    def transition_count(self) -> int:
        return sum(len(es) for es in self.edges)


def acceptance_order(A: Vwaa) -> List[int]:
    """Reachable final states, ordered by formula then complement flag."""
    finals = [q for q in A.reachable() if A.states[q].final]
    return sorted(finals, key=lambda q: (A.states[q].formula.key, A.states[q].complement, q))


def _config_product(A: Vwaa, config: Sequence[int]) -> List[Tuple[int, Config]]:
    """Product of the members' transitions (no antichain pruning), equal targets merged."""
    current: Dict[Config, int] = {frozenset(): A.alphabet.full}
    for q in config:
        nxt: Dict[Config, int] = {}
        for target, letters in current.items():
            for l2, succ in A.delta[q]:
                both = letters & l2
                if both:
                    key = target | succ
                    nxt[key] = nxt.get(key, 0) | both
        current = nxt
        if not current:
            break
    return [(ls, t) for t, ls in sorted(current.items(), key=lambda t: (len(t[0]), sorted(t[0])))]


def _good_letters(A: Vwaa, f: int, target: Config) -> int:
    """Letters a with some Y in delta(f,a), f not in Y, Y a subset of target."""
    mask = 0
    for letters, succ in A.delta[f]:
        if f not in succ and succ <= target:
            mask |= letters
    return mask


def vwaa_to_tgba(A: Vwaa, cap: int = DEFAULT_STATE_CAP) -> Tgba:
    """Reachable part of G_A from the configuration {initial}.

    Configurations holding a state together with its complement have empty
    language; they are kept as states but not expanded.
    """
    order = acceptance_order(A)
    full = A.alphabet.full
    start = frozenset([A.initial])
    ids: Dict[Config, int] = {start: 0}
    states: List[Config] = [start]
    edges: List[Tuple[Edge, ...]] = []
    dead = set()
    partner = A.partner
    i = 0
    while i < len(states):
        config = states[i]
        if any(partner.get(q) in config for q in config):
            dead.add(i)
            edges.append(())
            i += 1
            continue
        out: List[Edge] = []
        for letters, target in _config_product(A, sorted(config)):
            if target not in ids:
                if len(states) >= cap:
                    raise CapExceeded(f"t-GBA exceeds {cap} states")
                ids[target] = len(states)
                states.append(target)
            t = ids[target]
            # split the letter set by acceptance signature
            parts: Dict[int, int] = {0: letters}
            for bit, f in enumerate(order):
                good = full if f not in target else _good_letters(A, f, target)
                nxt: Dict[int, int] = {}
                for acc, ls in parts.items():
                    inside, outside = ls & good, ls & ~good
                    if inside:
                        nxt[acc | 1 << bit] = nxt.get(acc | 1 << bit, 0) | inside
                    if outside:
                        nxt[acc] = nxt.get(acc, 0) | outside
                parts = nxt
            for acc in sorted(parts):
                out.append(Edge(parts[acc], t, acc))
        edges.append(tuple(out))
        i += 1
    names = tuple(A.states[f].label for f in order)
    return Tgba(A.alphabet, tuple(states), tuple(edges), (0,), len(order), names, frozenset(dead))


def nonempty_states(G: Tgba) -> List[bool]:
    """States from which an SCC covering every acceptance set is reachable."""
    n = len(G.states)
    want = G.all_acc
    good = [False] * n
    comps = strongly_connected_components(range(n), lambda q: (e.target for e in G.edges[q]))
    comp_of = {}
    for ci, comp in enumerate(comps):
        for q in comp:
            comp_of[q] = ci
    # sinks come first, so successors' components are decided before ours
    for ci, comp in enumerate(comps):
        members = set(comp)
        acc = 0
        internal = False
        reaches = False
        for q in comp:
            for e in G.edges[q]:
                if e.target in members:
                    internal = True
                    acc |= e.acc
                elif good[e.target]:
                    reaches = True
        if (internal and acc & want == want) or reaches:
            for q in comp:
                good[q] = True
    return good


def restrict(G: Tgba, keep: Sequence[bool]) -> Tgba:
    remap = {}
    for q, k in enumerate(keep):
        if k:
            remap[q] = len(remap)
    states = tuple(G.states[q] for q in remap)
    edges = tuple(
        tuple(Edge(e.letters, remap[e.target], e.acc) for e in G.edges[q] if e.target in remap)
        for q in remap
    )
    initial = tuple(remap[q] for q in G.initial if q in remap)
    dead = frozenset(remap[q] for q in G.dead if q in remap)
    return Tgba(G.alphabet, states, edges, initial, G.num_acc, G.acc_names, dead)


def trim(G: Tgba) -> Tgba:
    """Remove every state with empty language (and anything unreachable)."""
    good = nonempty_states(G)
    reach = [False] * len(G.states)
    stack = [q for q in G.initial if good[q]]
    for q in stack:
        reach[q] = True
    while stack:
        q = stack.pop()
        for e in G.edges[q]:
            if good[e.target] and not reach[e.target]:
                reach[e.target] = True
                stack.append(e.target)
    return restrict(G, reach)


def self_product(G: Tgba, cap: int = DEFAULT_STATE_CAP) -> Tgba:
    """G x G with the lifted acceptance family, trimmed.

    States are pairs of state ids of G.  Acceptance set i of the left copy
    becomes bit i, the right copy's becomes bit n + i.
    """
    n = G.num_acc
    seeds = [(p, q) for p in G.initial for q in G.initial]
    seeds.sort(key=lambda pq: (pq[0] != pq[1], pq))
    ids: Dict[Tuple[int, int], int] = {}
    states: List[Tuple[int, int]] = []
    for s in seeds:
        ids[s] = len(states)
        states.append(s)
    edges: List[Tuple[Edge, ...]] = []
    i = 0
    while i < len(states):
        p, q = states[i]
        merged: Dict[Tuple[int, int], int] = {}
        for e1 in G.edges[p]:
            for e2 in G.edges[q]:
                both = e1.letters & e2.letters
                if not both:
                    continue
                tgt = (e1.target, e2.target)
                if tgt not in ids:
                    if len(states) >= cap:
                        raise CapExceeded(f"self-product exceeds {cap} states")
                    ids[tgt] = len(states)
                    states.append(tgt)
                key = (ids[tgt], e1.acc | e2.acc << n)
                merged[key] = merged.get(key, 0) | both
        edges.append(tuple(Edge(ls, t, acc) for (t, acc), ls in sorted(merged.items())))
        i += 1
    P = Tgba(G.alphabet, tuple(states), tuple(edges), tuple(range(len(seeds))), 2 * n)
    return trim(P)


def is_unambiguous(G: Tgba) -> bool:
    P = self_product(trim(G))
    return all(p == q for p, q in P.states)


@dataclass(frozen=True)
class Witness:
    config: Config
    letter: int
    state: int
    first: FrozenSet[int]
    second: FrozenSet[int]
    targets: Tuple[Config, Config]


class InconsistentWitness(RuntimeError):
    pass


def find_ambiguity_witness(A: Vwaa, G: Tgba, product: Optional[Tgba] = None) -> Optional[Witness]:
    """Least source configuration/state of the trimmed self-product, or None.

    ``G`` must be the trimmed t-GBA of ``A``.  The search is breadth-first
    over diagonal states; among the candidates of the first layer that
    leaves the diagonal, the least (C, a, s, S1, S2) wins, with states
    compared by id.
    """
    P = self_product(G) if product is None else product
    if all(p == q for p, q in P.states):
        return None
    seen = set()
    layer = [i for i in P.initial if P.states[i][0] == P.states[i][1]]
    seen.update(layer)
    while layer:
        candidates = []
        nxt = []
        for i in layer:
            p, _ = P.states[i]
            config = G.states[p]
            for e in P.edges[i]:
                t1, t2 = P.states[e.target]
                if t1 == t2:
                    if e.target not in seen:
                        seen.add(e.target)
                        nxt.append(e.target)
                    continue
                a = A.alphabet.lowest(e.letters)
                c1, c2 = G.states[t1], G.states[t2]
                common = c1 & c2
                for s in config:
                    sets = successor_sets(A, s, a)
                    for s1 in sets:
                        if not s1 <= c1:
                            continue
                        for s2 in sets:
                            if s1 != s2 and s2 <= c2 and (s1 | s2) - common:
                                key = (sorted(config), a, s, sorted(s1), sorted(s2))
                                candidates.append((key, Witness(config, a, s, s1, s2, (c1, c2))))
        if candidates:
            return min(candidates, key=lambda kw: kw[0])[1]
        nxt.sort()
        layer = nxt
    raise InconsistentWitness("off-diagonal product state without a source configuration")


def dump(G: Tgba, labels=None) -> str:
    """Plain text listing (the HOA writer gives the interchange form)."""
    names = G.alphabet.ap
    lines = []
    for q, es in enumerate(G.edges):
        head = f"state {q}"
        if labels is not None:
            head += f" [{labels(G.states[q])}]"
        if q in G.dead:
            head += " dead"
        lines.append(head)
        for e in es:
            marks = [str(i) for i in range(G.num_acc) if e.acc >> i & 1]
            lines.append(f"  [{expression(e.letters, names)}] -> {e.target} {{{' '.join(marks)}}}")
    return "\n".join(lines) + "\n"
