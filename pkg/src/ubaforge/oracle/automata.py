"""Automaton acceptance and unambiguity by brute force.

Everything here works on explicit state/letter tables and is written
independently of the translation code it is used to check.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..alphabet import Alphabet
from ..degeneralize import Nba
from ..vwaa import Vwaa
from .lasso import LassoWord


def _letter_index(alphabet: Alphabet, letter: Iterable[str]) -> int:
    """Project a lasso letter onto the automaton's propositions."""
    ap = alphabet.ap
    return sum(1 << i for i, a in enumerate(ap) if a in letter)


def successor_table(N: Nba) -> List[List[int]]:
    """table[q][letter] = bitmask of successor states."""
    size = N.alphabet.size
    table = [[0] * size for _ in N.states]
    for q, es in enumerate(N.edges):
        for letters, t in es:
            for a in range(size):
                if letters >> a & 1:
                    table[q][a] |= 1 << t
    return table


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lasso_graph(N: Nba, word: Sequence[int], loop_to: int):
    """Successor function of the product of N with a lasso of letter ids."""
    n = len(word)
    table = successor_table(N)

    def succ(node):
        q, i = node
        j = i + 1 if i + 1 < n else loop_to
        return [(t, j) for t in _bits(table[q][word[i]])]

    return succ


def _reaches(succ, start, goal) -> bool:
    seen = set()
    stack = list(succ(start))
    while stack:
        x = stack.pop()
        if x == goal:
            return True
        if x not in seen:
            seen.add(x)
            stack.extend(succ(x))
    return False


def nba_accepts(N: Nba, w: LassoWord) -> bool:
    """Some reachable product node is final and lies on a cycle."""
    word = [_letter_index(N.alphabet, x) for x in w.letters()]
    succ = _lasso_graph(N, word, len(w.prefix))
    start = [(q, 0) for q in N.initial]
    seen = set(start)
    stack = list(start)
    while stack:
        x = stack.pop()
        for y in succ(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return any(q in N.finals and _reaches(succ, (q, i), (q, i)) for q, i in seen)


def nba_accepts_naive(N: Nba, w: LassoWord) -> bool:
    """Reference version by bounded set iteration.

    Every accepting run can be taken to be a lasso in the product graph, so
    it suffices to look for a final node x reachable within K steps with a
    cycle x ->+ x of length at most K, K = |states| * |word|.
    """
    word = [_letter_index(N.alphabet, x) for x in w.letters()]
    n, lu = len(word), len(w.prefix)
    bound = max(1, len(N.states) * n)
    table = successor_table(N)

    def step(nodes):
        out = set()
        for q, i in nodes:
            j = i + 1 if i + 1 < n else lu
            out.update((t, j) for t in _bits(table[q][word[i]]))
        return out

    frontier = {(q, 0) for q in N.initial}
    reach = set(frontier)
    for _ in range(bound):
        frontier = step(frontier)
        reach |= frontier
    for x in reach:
        if x[0] not in N.finals:
            continue
        frontier = {x}
        for _ in range(bound):
            frontier = step(frontier)
            if x in frontier:
                return True
    return False


class NbaLassoChecker:
    """Acceptance of one automaton over a whole list of lassos at once.

    For each period v the set of states accepting v^omega is computed once;
    a lasso u v^omega is accepted iff the states reached by u intersect it.
    """

    def __init__(self, N: Nba):
        self.N = N
        self.table = successor_table(N)
        self._period_cache: Dict[Tuple[int, ...], int] = {}
        self._prefix_cache: Dict[Tuple[int, ...], int] = {(): sum(1 << q for q in set(N.initial))}
        self._finals = sum(1 << q for q in N.finals)

    def _post(self, u: Tuple[int, ...]) -> int:
        got = self._prefix_cache.get(u)
        if got is None:
            prev = self._post(u[:-1])
            a = u[-1]
            got = 0
            for q in _bits(prev):
                got |= self.table[q][a]
            self._prefix_cache[u] = got
        return got

    def _accepting_from(self, v: Tuple[int, ...]) -> int:
        got = self._period_cache.get(v)
        if got is not None:
            return got
        n = len(v)
        nodes = [(q, i) for i in range(n) for q in range(len(self.N.states))]
        succ = {
            (q, i): [(t, (i + 1) % n) for t in _bits(self.table[q][v[i]])] for q, i in nodes
        }
        # nodes that are final and on a cycle
        good = {x for x in nodes if self._finals >> x[0] & 1 and self._cycle(succ, x)}
        # backward closure
        pred = {x: [] for x in nodes}
        for x, ys in succ.items():
            for y in ys:
                pred[y].append(x)
        stack = list(good)
        while stack:
            y = stack.pop()
            for x in pred[y]:
                if x not in good:
                    good.add(x)
                    stack.append(x)
        got = sum(1 << q for q, i in good if i == 0)
        self._period_cache[v] = got
        return got

    @staticmethod
    def _cycle(succ, x) -> bool:
        seen = set()
        stack = list(succ[x])
        while stack:
            y = stack.pop()
            if y == x:
                return True
            if y not in seen:
                seen.add(y)
                stack.extend(succ[y])
        return False

    def accepts(self, w: LassoWord) -> bool:
        ap = self.N.alphabet
        u = tuple(_letter_index(ap, x) for x in w.prefix)
        v = tuple(_letter_index(ap, x) for x in w.period)
        return bool(self._post(u) & self._accepting_from(v))

    def accepts_all(self, words: Sequence[LassoWord]) -> np.ndarray:
        ap = self.N.alphabet
        post: Dict = {}
        good: Dict = {}
        out = np.zeros(len(words), dtype=bool)
        for k, w in enumerate(words):
            p = post.get(w.prefix)
            if p is None:
                p = post[w.prefix] = self._post(tuple(_letter_index(ap, x) for x in w.prefix))
            g = good.get(w.period)
            if g is None:
                g = good[w.period] = self._accepting_from(
                    tuple(_letter_index(ap, x) for x in w.period)
                )
            out[k] = bool(p & g)
        return out


def nba_accepts_all(N: Nba, words: Sequence[LassoWord]) -> np.ndarray:
    return NbaLassoChecker(N).accepts_all(words)


# --- unambiguity -----------------------------------------------------------


def _generalized_nonempty(nodes: Set, succ, accepting: List[Set]) -> Set:
    """Emerson-Lei fixpoint: nodes with a path visiting every set infinitely often."""
    pred: Dict = {x: [] for x in nodes}
    for x in nodes:
        for y in succ(x):
            if y in pred:
                pred[y].append(x)
    z = set(nodes)
    while True:
        new = set(z)
        for acc in accepting:
            # nodes of z that can reach (within z) an acc-node of z with a successor in z
            targets = {x for x in z if x in acc and any(y in z for y in succ(x))}
            reach = set(targets)
            stack = list(targets)
            while stack:
                y = stack.pop()
                for x in pred[y]:
                    if x in z and x not in reach:
                        reach.add(x)
                        stack.append(x)
            new &= reach
        if new == z:
            return z
        z = new


def nba_nonempty_states(N: Nba) -> Set[int]:
    table = successor_table(N)
    succ = lambda q: list(_bits(_union(table[q])))
    return _generalized_nonempty(set(range(len(N.states))), succ, [set(N.finals)])


def _union(row: Sequence[int]) -> int:
    out = 0
    for x in row:
        out |= x
    return out


def nba_unambiguous(N: Nba) -> bool:
    """No reachable off-diagonal pair in the trimmed self-product."""
    alive = nba_nonempty_states(N)
    table = successor_table(N)
    size = N.alphabet.size

    def succ(pq):
        p, q = pq
        out = []
        for a in range(size):
            for s in _bits(table[p][a]):
                if s not in alive:
                    continue
                for t in _bits(table[q][a]):
                    if t in alive:
                        out.append((s, t))
        return out

    init = [q for q in N.initial if q in alive]
    seeds = [(p, q) for p in init for q in init]
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        x = stack.pop()
        for y in succ(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    finals = set(N.finals)
    left = {x for x in seen if x[0] in finals}
    right = {x for x in seen if x[1] in finals}
    good = _generalized_nonempty(seen, succ, [left, right])
    return all(p == q for p, q in good)


def accepting_runs(N: Nba, w: LassoWord) -> int:
    """Number of accepting runs on ``w``, capped at 2 (2 means "two or more")."""
    word = [_letter_index(N.alphabet, x) for x in w.letters()]
    succ = _lasso_graph(N, word, len(w.prefix))
    start = [(q, 0) for q in N.initial]
    seen = set(start)
    stack = list(start)
    while stack:
        x = stack.pop()
        for y in succ(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    finals = set(N.finals)
    good = _generalized_nonempty(seen, succ, [{x for x in seen if x[0] in finals}])
    starts = [x for x in start if x in good]
    if len(starts) >= 2:
        return 2
    if not starts:
        return 0
    # runs are paths in the product; they split where a node has two live successors
    frontier = [starts[0]]
    visited = set(frontier)
    while frontier:
        x = frontier.pop()
        live = [y for y in set(succ(x)) if y in good]
        if len(live) >= 2:
            return 2
        for y in live:
            if y not in visited:
                visited.add(y)
                frontier.append(y)
    return 1


# --- alternating automata --------------------------------------------------


def vwaa_accepts(A: Vwaa, w: LassoWord) -> bool:
    """Direct evaluation of the very weak acceptance game on the lasso.

    States are solved successors-first; a self-loop is a least fixpoint on a
    final state (it may not be taken forever) and a greatest one otherwise.
    """
    n, lu = len(w), len(w.prefix)
    letters = [_letter_index(A.alphabet, x) for x in w.letters()]
    nxt = [i + 1 if i + 1 < n else lu for i in range(n)]
    order: List[int] = []
    seen = set()

    def visit(q):
        seen.add(q)
        for _, succ in A.delta[q]:
            for r in sorted(succ):
                if r != q and r not in seen:
                    visit(r)
        order.append(q)

    visit(A.initial)
    value: Dict[int, List[bool]] = {}
    for q in order:
        final = A.states[q].final
        val = [not final] * n
        changed = True
        while changed:
            changed = False
            for i in reversed(range(n)):
                j = nxt[i]
                new = any(
                    letters_ok >> letters[i] & 1
                    and all((val[j] if r == q else value[r][j]) for r in succ)
                    for letters_ok, succ in A.delta[q]
                )
                if new != val[i]:
                    val[i] = new
                    changed = True
        value[q] = val
    return value[A.initial][0]


# --- constructions used as test cases --------------------------------------


def nba_union(N1: Nba, N2: Nba) -> Nba:
    """Disjoint union; both automata must share an alphabet."""
    if N1.alphabet != N2.alphabet:
        raise ValueError("union needs a common alphabet")
    k = len(N1.states)
    states = tuple(("L", s) for s in N1.states) + tuple(("R", s) for s in N2.states)
    edges = N1.edges + tuple(tuple((ls, t + k) for ls, t in es) for es in N2.edges)
    initial = N1.initial + tuple(q + k for q in N2.initial)
    finals = frozenset(N1.finals) | frozenset(q + k for q in N2.finals)
    return Nba(N1.alphabet, states, edges, initial, finals)


def make_nba(
    ap: Sequence[str],
    transitions: Iterable[Tuple[int, int, int]],
    initial: Sequence[int],
    finals: Iterable[int],
    num_states: Optional[int] = None,
) -> Nba:
    """Build an NBA from (source, letter-set mask, target) triples."""
    transitions = list(transitions)
    if num_states is None:
        num_states = 1 + max([q for t in transitions for q in (t[0], t[2])] + list(initial))
    merged: Dict[Tuple[int, int], int] = {}
    for q, ls, t in transitions:
        merged[(q, t)] = merged.get((q, t), 0) | ls
    edges = tuple(
        tuple((ls, t) for (p, t), ls in sorted(merged.items()) if p == q and ls)
        for q in range(num_states)
    )
    return Nba(Alphabet(ap), tuple(range(num_states)), edges, tuple(initial), frozenset(finals))
