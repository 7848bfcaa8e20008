"""Rule-based simplification of PNF formulas.

Baseline rules (each covered by an oracle test):

* constant folding, including ``x & !x -> false`` / ``x | !x -> true`` on literals
* idempotence of ``&``, ``|``, ``U``, ``R``
* ``F F x -> F x``, ``G G x -> G x``, ``F G F x -> G F x``, ``G F G x -> F G x``
* ``X`` factoring: ``X x & X y -> X (x & y)``, ``X x | X y -> X (x | y)``
* absorption: ``x | (x & y) -> x``, ``x & (x | y) -> x``
* merging: ``G x & G y -> G (x & y)``, ``F G x & F G y -> F G (x & y)``,
  ``F x | F y -> F (x | y)``, ``G F x | G F y -> G F (x | y)``

Conjunctions and disjunctions are normalized as flattened, deduplicated,
sorted operand lists, which makes all rules work modulo associativity and
commutativity.  The two fairness rules

* ``G F x & F G y -> G F (x & G y)``
* ``F G x | G F y -> F G (x | F y)``

run after the baseline rules and the two stages alternate until nothing
changes.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, List

from . import formula as fm
from .formula import Formula


def _flatten(f: Formula, kind: str, out: List[Formula]) -> None:
    if f.kind == kind:
        _flatten(f.left, kind, out)
        _flatten(f.right, kind, out)
    else:
        out.append(f)


def operands(f: Formula, kind: str) -> List[Formula]:
    """Flattened n-ary view of a conjunction or disjunction."""
    out: List[Formula] = []
    _flatten(f, kind, out)
    return out


def _neg_literal(f: Formula) -> Formula:
    return fm.neg_atom(f.name) if f.kind == fm.AP else fm.atom(f.name)


def _is_fg(f: Formula) -> bool:
    return f.is_finally and f.right.is_globally


def _is_gf(f: Formula) -> bool:
    return f.is_globally and f.right.is_finally


def _build(kind: str, items: Iterable[Formula]) -> Formula:
    ordered = sorted(items, key=lambda g: g.key)
    ctor = fm.And if kind == fm.AND else fm.Or
    result = ordered[-1]
    for g in reversed(ordered[:-1]):
        result = ctor(g, result)
    return result


def conj(ops: Iterable[Formula]) -> Formula:
    """Normalized conjunction of already simplified operands."""
    return _junction(fm.AND, ops)


def disj(ops: Iterable[Formula]) -> Formula:
    """Normalized disjunction of already simplified operands."""
    return _junction(fm.OR, ops)


def _junction(kind: str, ops: Iterable[Formula]) -> Formula:
    is_and = kind == fm.AND
    unit, zero = (fm.TRUE, fm.FALSE) if is_and else (fm.FALSE, fm.TRUE)
    dual = fm.OR if is_and else fm.AND
    flat: List[Formula] = []
    for o in ops:
        _flatten(o, kind, flat)
    items = set()
    for o in flat:
        if o.kind == zero:
            return fm.false() if is_and else fm.true()
        if o.kind != unit:
            items.add(o)
    for o in items:
        if o.is_literal and _neg_literal(o) in items:
            return fm.false() if is_and else fm.true()
    items = {
        o for o in items if not (o.kind == dual and any(d in items for d in operands(o, dual)))
    }

    merged = False
    if is_and:
        groups = (
            (lambda g: g.is_globally, lambda g: g.right, lambda body: _globally(conj(body))),
            (_is_fg, lambda g: g.right.right, lambda body: _finally(_globally(conj(body)))),
            (lambda g: g.kind == fm.NEXT, lambda g: g.left, lambda body: _next(conj(body))),
        )
    else:
        groups = (
            (lambda g: g.is_finally, lambda g: g.right, lambda body: _finally(disj(body))),
            (_is_gf, lambda g: g.right.right, lambda body: _globally(_finally(disj(body)))),
            (lambda g: g.kind == fm.NEXT, lambda g: g.left, lambda body: _next(disj(body))),
        )
    for match, body_of, rebuild in groups:
        hits = sorted((o for o in items if match(o)), key=lambda g: g.key)
        if len(hits) > 1:
            items -= set(hits)
            items.add(rebuild([body_of(h) for h in hits]))
            merged = True
            break
    if merged:
        return _junction(kind, items)
    if not items:
        return fm.true() if is_and else fm.false()
    return _build(kind, items)


def _next(x: Formula) -> Formula:
    if x.kind in (fm.TRUE, fm.FALSE):
        return x
    return fm.Next(x)


def _until(l: Formula, r: Formula) -> Formula:
    if r.kind in (fm.TRUE, fm.FALSE):
        return r
    if l.kind == fm.FALSE or l is r:
        return r
    if l.kind == fm.TRUE:
        if r.is_finally or _is_gf(r):
            return r  # F F x -> F x, F G F x -> G F x
    return fm.Until(l, r)


def _release(l: Formula, r: Formula) -> Formula:
    if r.kind in (fm.TRUE, fm.FALSE):
        return r
    if l.kind == fm.TRUE or l is r:
        return r
    if l.kind == fm.FALSE:
        if r.is_globally or _is_fg(r):
            return r  # G G x -> G x, G F G x -> F G x
    return fm.Release(l, r)


def _finally(x: Formula) -> Formula:
    return _until(fm.true(), x)


def _globally(x: Formula) -> Formula:
    return _release(fm.false(), x)


@lru_cache(maxsize=None)
def _baseline(f: Formula) -> Formula:
    k = f.kind
    if k in (fm.TRUE, fm.FALSE, fm.AP, fm.NAP):
        return f
    if k == fm.NOT:
        raise ValueError("simplify expects a formula in positive normal form")
    if k == fm.NEXT:
        return _next(_baseline(f.left))
    if k in (fm.AND, fm.OR):
        return _junction(k, [_baseline(o) for o in operands(f, k)])
    l, r = _baseline(f.left), _baseline(f.right)
    return _until(l, r) if k == fm.UNTIL else _release(l, r)


@lru_cache(maxsize=None)
def _fairness(f: Formula) -> Formula:
    """One bottom-up pass merging fairness pairs: GF a & FG b -> GF(a & G b), FG a | GF b -> FG(a | F b)."""
    k = f.kind
    if k in (fm.TRUE, fm.FALSE, fm.AP, fm.NAP):
        return f
    if k == fm.NEXT:
        return _next(_fairness(f.left))
    if k in (fm.AND, fm.OR):
        ops = sorted({_fairness(o) for o in operands(f, k)}, key=lambda g: g.key)
        if k == fm.AND:
            gf = next((o for o in ops if _is_gf(o)), None)
            fg = next((o for o in ops if _is_fg(o)), None)
            if gf is not None and fg is not None:
                rest = [o for o in ops if o is not gf and o is not fg]
                body = conj([gf.right.right, fg.right])
                return conj(rest + [_globally(_finally(body))])
            return conj(ops)
        fg = next((o for o in ops if _is_fg(o)), None)
        gf = next((o for o in ops if _is_gf(o)), None)
        if gf is not None and fg is not None:
            rest = [o for o in ops if o is not gf and o is not fg]
            body = disj([fg.right.right, gf.right])
            return disj(rest + [_finally(_globally(body))])
        return disj(ops)
    l, r = _fairness(f.left), _fairness(f.right)
    return _until(l, r) if k == fm.UNTIL else _release(l, r)


def simplify(f: Formula, rewrite_rules: bool = True, max_rounds: int = 100) -> Formula:
    """Equivalent, usually smaller formula; output is a deterministic function of input."""
    current = f
    for _ in range(max_rounds):
        nxt = _baseline(current)
        while True:
            again = _baseline(nxt)
            if again is nxt:
                break
            nxt = again
        if rewrite_rules:
            nxt = _fairness(nxt)
        if nxt is current:
            return current
        current = nxt
    return current


# light constructors: constant folding only, operand order kept


def mk_and(a: Formula, b: Formula) -> Formula:
    if a.kind == fm.FALSE or b.kind == fm.FALSE:
        return fm.false()
    if a.kind == fm.TRUE:
        return b
    if b.kind == fm.TRUE or a is b:
        return a
    return fm.And(a, b)


def mk_or(a: Formula, b: Formula) -> Formula:
    if a.kind == fm.TRUE or b.kind == fm.TRUE:
        return fm.true()
    if a.kind == fm.FALSE:
        return b
    if b.kind == fm.FALSE or a is b:
        return a
    return fm.Or(a, b)


def mk_next(a: Formula) -> Formula:
    return _next(a)


def mk_until(a: Formula, b: Formula) -> Formula:
    if b.kind in (fm.TRUE, fm.FALSE) or a.kind == fm.FALSE:
        return b
    return fm.Until(a, b)
