"""Positive normal form and negation."""
from __future__ import annotations

from functools import lru_cache

from . import formula as fm
from .formula import Formula


@lru_cache(maxsize=None)
def to_pnf(f: Formula) -> Formula:
    """Push negations down to the atoms."""
    k = f.kind
    if k in (fm.TRUE, fm.FALSE, fm.AP, fm.NAP):
        return f
    if k == fm.NOT:
        return negate_pnf(to_pnf(f.left))
    if k == fm.NEXT:
        return fm.Next(to_pnf(f.left))
    ctor = {fm.AND: fm.And, fm.OR: fm.Or, fm.UNTIL: fm.Until, fm.RELEASE: fm.Release}[k]
    return ctor(to_pnf(f.left), to_pnf(f.right))


@lru_cache(maxsize=None)
def negate_pnf(f: Formula) -> Formula:
    """PNF of the negation of a PNF formula (dualizes every operator)."""
    k = f.kind
    if k == fm.TRUE:
        return fm.false()
    if k == fm.FALSE:
        return fm.true()
    if k == fm.AP:
        return fm.neg_atom(f.name)
    if k == fm.NAP:
        return fm.atom(f.name)
    if k == fm.NOT:
        return to_pnf(f.left)
    if k == fm.NEXT:
        return fm.Next(negate_pnf(f.left))
    dual = {fm.AND: fm.Or, fm.OR: fm.And, fm.UNTIL: fm.Release, fm.RELEASE: fm.Until}[k]
    return dual(negate_pnf(f.left), negate_pnf(f.right))


def is_pnf(f: Formula) -> bool:
    return all(g.kind != fm.NOT for g in f.subformulas())
