"""LTL truth on lasso words, evaluated position by position.

U and R are solved as least and greatest fixpoints over the finite position
set of the lasso, so no automaton is involved.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Sequence

import numpy as np

from ..ltl import formula as fm
from ..ltl.formula import Formula
from .lasso import LassoWord


def _positions(f: Formula, w: LassoWord, memo: Dict[Formula, List[bool]]) -> List[bool]:
    got = memo.get(f)
    if got is not None:
        return got
    n = len(w)
    k = f.kind
    if k == fm.TRUE:
        val = [True] * n
    elif k == fm.FALSE:
        val = [False] * n
    elif k == fm.AP:
        val = [f.name in w.letter(i) for i in range(n)]
    elif k == fm.NAP:
        val = [f.name not in w.letter(i) for i in range(n)]
    elif k == fm.NOT:
        val = [not x for x in _positions(f.left, w, memo)]
    elif k == fm.AND:
        l, r = _positions(f.left, w, memo), _positions(f.right, w, memo)
        val = [x and y for x, y in zip(l, r)]
    elif k == fm.OR:
        l, r = _positions(f.left, w, memo), _positions(f.right, w, memo)
        val = [x or y for x, y in zip(l, r)]
    elif k == fm.NEXT:
        sub = _positions(f.left, w, memo)
        val = [sub[w.succ(i)] for i in range(n)]
    elif k in (fm.UNTIL, fm.RELEASE):
        l, r = _positions(f.left, w, memo), _positions(f.right, w, memo)
        least = k == fm.UNTIL
        val = [not least] * n
        changed = True
        while changed:
            changed = False
            for i in reversed(range(n)):
                nxt = val[w.succ(i)]
                new = (r[i] or (l[i] and nxt)) if least else (r[i] and (l[i] or nxt))
                if new != val[i]:
                    val[i] = new
                    changed = True
    else:
        raise ValueError(f"unknown formula kind {k}")
    memo[f] = val
    return val


def ltl_holds(f: Formula, w: LassoWord, at: int = 0) -> bool:
    """Truth of ``f`` at position ``at`` of u v^omega."""
    if not 0 <= at < len(w):
        raise ValueError(f"position {at} outside the lasso's {len(w)} positions")
    return _positions(f, w, {})[at]


class LassoBatch:
    """Vectorized evaluation of many formulas over a fixed list of lassos.

    Lassos are grouped by shape (|u|, |v|); per group each subformula is a
    boolean matrix (lasso x position).  Results are memoized per formula, so
    formulas sharing subterms share the work.
    """

    def __init__(self, words: Sequence[LassoWord]):
        self.words = list(words)
        groups = defaultdict(list)
        for idx, w in enumerate(self.words):
            groups[(len(w.prefix), len(w.period))].append(idx)
        self._groups = []
        for (lu, lv), idxs in sorted(groups.items()):
            n = lu + lv
            succ = np.array([i + 1 if i + 1 < n else lu for i in range(n)])
            letters = [self.words[i].letters() for i in idxs]
            self._groups.append((np.array(idxs), succ, letters))
        self._memo: List[Dict[Formula, np.ndarray]] = [dict() for _ in self._groups]
        self._atoms: List[Dict[str, np.ndarray]] = [dict() for _ in self._groups]

    def __len__(self) -> int:
        return len(self.words)

    def _atom(self, g: int, name: str) -> np.ndarray:
        got = self._atoms[g].get(name)
        if got is None:
            letters = self._groups[g][2]
            got = np.array([[name in x for x in row] for row in letters], dtype=bool)
            self._atoms[g][name] = got
        return got

    def _eval(self, g: int, f: Formula) -> np.ndarray:
        memo = self._memo[g]
        got = memo.get(f)
        if got is not None:
            return got
        idxs, succ, _ = self._groups[g]
        shape = (len(idxs), len(succ))
        k = f.kind
        if k == fm.TRUE:
            val = np.ones(shape, dtype=bool)
        elif k == fm.FALSE:
            val = np.zeros(shape, dtype=bool)
        elif k == fm.AP:
            val = self._atom(g, f.name)
        elif k == fm.NAP:
            val = ~self._atom(g, f.name)
        elif k == fm.NOT:
            val = ~self._eval(g, f.left)
        elif k == fm.AND:
            val = self._eval(g, f.left) & self._eval(g, f.right)
        elif k == fm.OR:
            val = self._eval(g, f.left) | self._eval(g, f.right)
        elif k == fm.NEXT:
            val = self._eval(g, f.left)[:, succ]
        elif k == fm.UNTIL:
            l, r = self._eval(g, f.left), self._eval(g, f.right)
            val = np.zeros(shape, dtype=bool)
            for _ in range(shape[1] + 1):
                val = r | (l & val[:, succ])
        elif k == fm.RELEASE:
            l, r = self._eval(g, f.left), self._eval(g, f.right)
            val = np.ones(shape, dtype=bool)
            for _ in range(shape[1] + 1):
                val = r & (l | val[:, succ])
        else:
            raise ValueError(f"unknown formula kind {k}")
        memo[f] = val
        return val

    def holds(self, f: Formula) -> np.ndarray:
        """Truth of ``f`` at position 0 of every lasso, in input order."""
        out = np.zeros(len(self.words), dtype=bool)
        for g, (idxs, _, _) in enumerate(self._groups):
            out[idxs] = self._eval(g, f)[:, 0]
        return out

    def clear(self) -> None:
        for m in self._memo:
            m.clear()
