"""Formula corpora for the property suites."""
from __future__ import annotations

import random
from typing import Dict, Iterator, List, Sequence

from ..ltl import formula as fm
from ..ltl.formula import Formula

_UNARY = (fm.Next, fm.Finally, fm.Globally)
_BINARY = (fm.And, fm.Or, fm.Until, fm.Release)


def enumerate_formulas(max_nodes: int, atoms: Sequence[str]) -> Iterator[Formula]:
    """Every PNF formula of at most ``max_nodes`` nodes, each once.

    F and G count as single nodes.  Formulas are produced by size, then in
    a fixed construction order; a formula reachable in several ways (F x
    is also true U x) is reported at its smallest size only.
    """
    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    seen = set()
    by_size: Dict[int, List[Formula]] = {}
    leaves = [fm.true(), fm.false()]
    for a in atoms:
        leaves += [fm.atom(a), fm.neg_atom(a)]
    for size in range(1, max_nodes + 1):
        level: List[Formula] = []

        def emit(f):
            if f not in seen:
                seen.add(f)
                level.append(f)

        if size == 1:
            for f in leaves:
                emit(f)
        else:
            for op in _UNARY:
                for x in by_size[size - 1]:
                    emit(op(x))
            for op in _BINARY:
                for k in range(1, size - 1):
                    for x in by_size[k]:
                        for y in by_size[size - 1 - k]:
                            emit(op(x, y))
        by_size[size] = level
        yield from level


def count_formulas(max_nodes: int, atoms: Sequence[str]) -> int:
    return sum(1 for _ in enumerate_formulas(max_nodes, atoms))


def random_formula(rng: random.Random, depth: int, atoms: Sequence[str]) -> Formula:
    if depth <= 0 or rng.random() < 0.2:
        choice = rng.randrange(len(atoms) * 2 + 2)
        if choice == 0:
            return fm.true()
        if choice == 1:
            return fm.false()
        a = atoms[(choice - 2) // 2]
        return fm.atom(a) if choice % 2 == 0 else fm.neg_atom(a)
    if rng.random() < 0.4:
        return rng.choice(_UNARY)(random_formula(rng, depth - 1, atoms))
    op = rng.choice(_BINARY)
    return op(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms))


def random_disjunction_free(rng: random.Random, depth: int, atoms: Sequence[str]) -> Formula:
    """Random disjunction-free purely-universal formula.

    Built from G (over an arbitrary body), conjunction, X and F.
    """
    if depth <= 0 or rng.random() < 0.3:
        return fm.Globally(random_formula(rng, max(0, depth - 1), atoms))
    pick = rng.randrange(3)
    if pick == 0:
        return fm.And(
            random_disjunction_free(rng, depth - 1, atoms),
            random_disjunction_free(rng, depth - 1, atoms),
        )
    if pick == 1:
        return fm.Next(random_disjunction_free(rng, depth - 1, atoms))
    return fm.Finally(random_disjunction_free(rng, depth - 1, atoms))
