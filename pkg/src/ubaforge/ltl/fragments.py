"""Purely-universal / purely-eventual / alternating fragments and goals."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List

from . import formula as fm
from .formula import Formula
from .simplify import mk_and


@dataclass(frozen=True)
class FormulaClass:
    purely_universal: bool
    purely_eventual: bool
    alternating: bool


@lru_cache(maxsize=None)
def classify(f: Formula) -> FormulaClass:
    """Grammar membership, computed bottom-up.

    nu ::= G p | nu | nu | nu & nu | X nu | nu U nu | p R nu | F nu
    mu ::= F p | mu | mu | mu & mu | X mu | p U mu | mu R mu | G mu
    xi ::= G mu | F nu | xi | xi | xi & xi | X xi | p U xi | p R xi | F xi | G xi
    """
    k = f.kind
    if k in (fm.AND, fm.OR):
        l, r = classify(f.left), classify(f.right)
        return FormulaClass(
            l.purely_universal and r.purely_universal,
            l.purely_eventual and r.purely_eventual,
            l.alternating and r.alternating,
        )
    if k == fm.NEXT:
        return classify(f.left)
    if k == fm.UNTIL:
        l, r = classify(f.left), classify(f.right)
        pu = (l.purely_universal and r.purely_universal) or (f.is_finally and r.purely_universal)
        pe = f.is_finally or r.purely_eventual
        alt = r.alternating or (f.is_finally and r.purely_universal)
        return FormulaClass(pu, pe, alt)
    if k == fm.RELEASE:
        l, r = classify(f.left), classify(f.right)
        pu = f.is_globally or r.purely_universal
        pe = (l.purely_eventual and r.purely_eventual) or (f.is_globally and r.purely_eventual)
        alt = r.alternating or (f.is_globally and r.purely_eventual)
        return FormulaClass(pu, pe, alt)
    return FormulaClass(False, False, False)


def is_purely_universal(f: Formula) -> bool:
    return classify(f).purely_universal


@lru_cache(maxsize=None)
def is_disjunction_free(f: Formula) -> bool:
    """Purely-universal with every |, U and R (other than F/G sugar) under some G."""
    if f.is_globally:
        return True
    if f.kind == fm.AND:
        return is_disjunction_free(f.left) and is_disjunction_free(f.right)
    if f.kind == fm.NEXT or f.is_finally:
        inner = f.left if f.kind == fm.NEXT else f.right
        return is_disjunction_free(inner)
    return False


class FragmentError(ValueError):
    pass


def decompose_disjunction_free(nu: Formula) -> List[Formula]:
    """Split a purely-universal formula into disjunction-free disjuncts.

    Untils and releases outside any G are eliminated first
    (``a U b -> b | (a & F b)``, ``p R b -> b``), then disjunctions are lifted
    over &, X and F.
    """
    if not is_purely_universal(nu):
        raise FragmentError(f"not purely-universal: {nu}")
    out: List[Formula] = []
    for part in _decompose(nu):
        if part not in out:
            out.append(part)
    return out


@lru_cache(maxsize=None)
def _decompose(nu: Formula) -> tuple:
    if nu.is_globally:
        return (nu,)
    k = nu.kind
    if k == fm.OR:
        return _decompose(nu.left) + _decompose(nu.right)
    if k == fm.AND:
        return tuple(fm.And(x, y) for x in _decompose(nu.left) for y in _decompose(nu.right))
    if k == fm.NEXT:
        return tuple(fm.Next(x) for x in _decompose(nu.left))
    if nu.is_finally:
        return tuple(fm.Finally(x) for x in _decompose(nu.right))
    if k == fm.UNTIL:
        return _decompose(fm.Or(nu.right, fm.And(nu.left, fm.Finally(nu.right))))
    if k == fm.RELEASE:
        return _decompose(nu.right)
    raise FragmentError(f"not purely-universal: {nu}")


@lru_cache(maxsize=None)
def goal(nu: Formula) -> Formula:
    """The one-step obligation g with g(nu) & X nu equivalent to nu."""
    if nu.is_globally:
        return nu.right
    if nu.is_finally:
        if not is_disjunction_free(nu.right):
            raise FragmentError(f"not disjunction-free: {nu}")
        return fm.true()
    if nu.kind == fm.AND:
        return mk_and(goal(nu.left), goal(nu.right))
    if nu.kind == fm.NEXT:
        return fm.Next(goal(nu.left))
    raise FragmentError(f"not disjunction-free purely-universal: {nu}")
