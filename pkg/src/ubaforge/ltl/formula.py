"""Hash-consed LTL abstract syntax.

Every structurally distinct formula exists exactly once, so identity
comparison (``is``) is structural equality and formulas can be used as
dictionary keys at pointer cost.  Finally and Globally are not separate
node kinds: ``F x`` is stored as ``true U x`` and ``G x`` as ``false R x``.
"""
from __future__ import annotations

import threading
from typing import Iterator, Optional

TRUE = "true"
FALSE = "false"
AP = "ap"
NAP = "nap"  # negated atomic proposition
NOT = "not"  # general negation, only before to_pnf
AND = "and"
OR = "or"
NEXT = "X"
UNTIL = "U"
RELEASE = "R"

BINARY = (AND, OR, UNTIL, RELEASE)


class Formula:
    __slots__ = ("kind", "name", "left", "right", "_size", "_text", "__weakref__")

    kind: str
    name: Optional[str]
    left: Optional["Formula"]
    right: Optional["Formula"]

    def __init__(self, *args, **kwargs):
        raise TypeError("formulas are built through the module constructors")

    def __setattr__(self, key, value):
        raise AttributeError("formulas are immutable")

    def __repr__(self) -> str:
        return f"Formula({self.text!r})"

    def __str__(self) -> str:
        return self.text

    def __reduce__(self):
        # re-intern on unpickling (worker processes have their own table)
        return (_rebuild, (self.kind, self.name, self.left, self.right))

    # --- derived views ------------------------------------------------

    @property
    def size(self) -> int:
        """Node count, with F and G counted as single nodes."""
        return self._size

    @property
    def text(self) -> str:
        if self._text is None:
            from .parser import unparse

            object.__setattr__(self, "_text", unparse(self))
        return self._text

    @property
    def key(self) -> tuple:
        """Deterministic total order used wherever a canonical choice is made."""
        return (self._size, self.text)

    def __lt__(self, other: "Formula") -> bool:
        return self.key < other.key

    @property
    def is_finally(self) -> bool:
        return self.kind == UNTIL and self.left.kind == TRUE

    @property
    def is_globally(self) -> bool:
        return self.kind == RELEASE and self.left.kind == FALSE

    @property
    def is_literal(self) -> bool:
        return self.kind in (AP, NAP)

    @property
    def children(self) -> tuple:
        if self.left is None:
            return ()
        if self.right is None:
            return (self.left,)
        return (self.left, self.right)

    def subformulas(self) -> Iterator["Formula"]:
        """Each distinct subformula once, children before parents."""
        seen = set()
        stack = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if node in seen:
                continue
            if expanded:
                seen.add(node)
                yield node
                continue
            stack.append((node, True))
            for child in reversed(node.children):
                if child not in seen:
                    stack.append((child, False))

    def atoms(self) -> tuple:
        """Atomic proposition names, sorted."""
        return tuple(sorted({g.name for g in self.subformulas() if g.kind in (AP, NAP)}))


_table: dict = {}
_lock = threading.Lock()


def _make(kind: str, name=None, left=None, right=None) -> Formula:
    key = (kind, name, left, right)
    node = _table.get(key)
    if node is not None:
        return node
    with _lock:
        node = _table.get(key)
        if node is None:
            node = object.__new__(Formula)
            size = 1
            if left is not None:
                # F/G sugar: the constant operand is not counted
                if kind in (UNTIL, RELEASE) and left.kind in (TRUE, FALSE) and (
                    (kind == UNTIL) == (left.kind == TRUE)
                ):
                    size += right._size
                else:
                    size += left._size + (right._size if right is not None else 0)
            for slot, value in (
                ("kind", kind),
                ("name", name),
                ("left", left),
                ("right", right),
                ("_size", size),
                ("_text", None),
            ):
                object.__setattr__(node, slot, value)
            _table[key] = node
    return node


def _rebuild(kind, name, left, right):
    return _make(kind, name, left, right)


def true() -> Formula:
    return _make(TRUE)


def false() -> Formula:
    return _make(FALSE)


def atom(name: str) -> Formula:
    return _make(AP, name)


def neg_atom(name: str) -> Formula:
    return _make(NAP, name)


def Not(f: Formula) -> Formula:
    return _make(NOT, None, f)


def And(left: Formula, right: Formula) -> Formula:
    return _make(AND, None, left, right)


def Or(left: Formula, right: Formula) -> Formula:
    return _make(OR, None, left, right)


def Next(f: Formula) -> Formula:
    return _make(NEXT, None, f)


def Until(left: Formula, right: Formula) -> Formula:
    return _make(UNTIL, None, left, right)


def Release(left: Formula, right: Formula) -> Formula:
    return _make(RELEASE, None, left, right)


def Finally(f: Formula) -> Formula:
    return Until(true(), f)


def Globally(f: Formula) -> Formula:
    return Release(false(), f)


def Implies(left: Formula, right: Formula) -> Formula:
    return Or(Not(left), right)


def table_size() -> int:
    return len(_table)
