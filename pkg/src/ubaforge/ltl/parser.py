"""Infix and prefix LTL syntax.

Infix grammar, loosest binding first::

    formula := disj ("->" formula)?
    disj    := conj ("|" conj)*
    conj    := temp ("&" temp)*
    temp    := unary (("U" | "R") temp)?
    unary   := ("!" | "X" | "F" | "G") unary | "(" formula ")" | atom | true | false

Atoms match ``[a-z][a-zA-Z0-9_]*``.  The prefix syntax writes every
operator before its operands (``U a & b X a``).
"""
from __future__ import annotations

import re
from typing import List, NamedTuple

from . import formula as fm
from .formula import Formula


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at offset {position}")
        self.position = position
        self.text = text


class Token(NamedTuple):
    kind: str  # "atom", "op", "lparen", "rparen", "const", "end"
    value: str
    pos: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<atom>[a-z][a-zA-Z0-9_]*)|(?P<op>->|[!&|XFGUR])|(?P<lparen>\()|(?P<rparen>\)))"
)
_UNARY = {"!", "X", "F", "G"}
_BINARY = {"&", "|", "U", "R", "->"}


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            tokens.append(Token("end", "", pos))
            return tokens
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise FormulaSyntaxError(f"unknown operator {text[pos]!r}", pos, text)
        start = m.start(m.lastgroup)
        value = m.group(m.lastgroup)
        kind = m.lastgroup
        if kind == "atom" and value in ("true", "false"):
            kind = "const"
        tokens.append(Token(kind, value, start))
        pos = m.end()


class _InfixParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Token):
        raise FormulaSyntaxError(message, tok.pos, self.text)

    def parse(self) -> Formula:
        f = self.implication()
        tok = self.peek()
        if tok.kind != "end":
            self.error(f"unexpected {tok.value!r}", tok)
        return f

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek().value == "->":
            self.advance()
            return fm.Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek().value == "|":
            self.advance()
            f = fm.Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.temporal()
        while self.peek().value == "&":
            self.advance()
            f = fm.And(f, self.temporal())
        return f

    def temporal(self) -> Formula:
        left = self.unary()
        op = self.peek().value
        if op in ("U", "R"):
            self.advance()
            right = self.temporal()
            return fm.Until(left, right) if op == "U" else fm.Release(left, right)
        return left

    def unary(self) -> Formula:
        tok = self.advance()
        if tok.kind == "op" and tok.value in _UNARY:
            sub = self.unary()
            return _apply_unary(tok.value, sub)
        if tok.kind == "lparen":
            f = self.implication()
            close = self.advance()
            if close.kind != "rparen":
                self.error("expected ')'", close)
            return f
        if tok.kind == "atom":
            return fm.atom(tok.value)
        if tok.kind == "const":
            return fm.true() if tok.value == "true" else fm.false()
        if tok.kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {tok.value!r}", tok)


def _apply_unary(op: str, sub: Formula) -> Formula:
    if op == "!":
        # a negated atom is already a PNF literal
        return fm.neg_atom(sub.name) if sub.kind == fm.AP else fm.Not(sub)
    if op == "X":
        return fm.Next(sub)
    if op == "F":
        return fm.Finally(sub)
    return fm.Globally(sub)


def _apply_binary(op: str, left: Formula, right: Formula) -> Formula:
    return {
        "&": fm.And,
        "|": fm.Or,
        "U": fm.Until,
        "R": fm.Release,
        "->": fm.Implies,
    }[op](left, right)


def _parse_prefix(text: str) -> Formula:
    tokens = tokenize(text)
    i = 0

    def rec() -> Formula:
        nonlocal i
        tok = tokens[i]
        i += 1
        if tok.kind == "op" and tok.value in _UNARY:
            return _apply_unary(tok.value, rec())
        if tok.kind == "op":
            left = rec()
            return _apply_binary(tok.value, left, rec())
        if tok.kind == "atom":
            return fm.atom(tok.value)
        if tok.kind == "const":
            return fm.true() if tok.value == "true" else fm.false()
        if tok.kind == "end":
            raise FormulaSyntaxError("unexpected end of input", tok.pos, text)
        raise FormulaSyntaxError(f"unexpected {tok.value!r}", tok.pos, text)

    f = rec()
    if tokens[i].kind != "end":
        raise FormulaSyntaxError(f"unexpected {tokens[i].value!r}", tokens[i].pos, text)
    return f


def parse_formula(text: str, prefix: bool = False) -> Formula:
    """Parse ``text`` into a (not necessarily PNF) formula.

    Raises FormulaSyntaxError carrying the offending character offset.
    """
    if prefix:
        return _parse_prefix(text)
    return _InfixParser(text).parse()


def _needs_parens(f: Formula) -> bool:
    if f.is_finally or f.is_globally:
        return False
    return f.kind in fm.BINARY


def unparse(f: Formula) -> str:
    """Infix text for ``f``; F and G are printed sugared."""
    k = f.kind
    if k == fm.TRUE:
        return "true"
    if k == fm.FALSE:
        return "false"
    if k == fm.AP:
        return f.name
    if k == fm.NAP:
        return "!" + f.name
    if f.is_finally:
        return "F " + _wrap(f.right)
    if f.is_globally:
        return "G " + _wrap(f.right)
    if k == fm.NOT:
        return "!" + _wrap(f.left)
    if k == fm.NEXT:
        return "X " + _wrap(f.left)
    op = {fm.AND: "&", fm.OR: "|", fm.UNTIL: "U", fm.RELEASE: "R"}[k]
    return f"{_wrap(f.left)} {op} {_wrap(f.right)}"


def _wrap(f: Formula) -> str:
    text = f.text
    return f"({text})" if _needs_parens(f) else text


def unparse_prefix(f: Formula) -> str:
    k = f.kind
    if k == fm.TRUE:
        return "true"
    if k == fm.FALSE:
        return "false"
    if k == fm.AP:
        return f.name
    if k == fm.NAP:
        return "! " + f.name
    if f.is_finally:
        return "F " + unparse_prefix(f.right)
    if f.is_globally:
        return "G " + unparse_prefix(f.right)
    if k == fm.NOT:
        return "! " + unparse_prefix(f.left)
    if k == fm.NEXT:
        return "X " + unparse_prefix(f.left)
    op = {fm.AND: "&", fm.OR: "|", fm.UNTIL: "U", fm.RELEASE: "R"}[k]
    return f"{op} {unparse_prefix(f.left)} {unparse_prefix(f.right)}"
