"""HOA v1 output, and a small reader for the subset we write."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, TextIO, Tuple, Union

from .alphabet import Alphabet
from .degeneralize import Nba
from .labels import expression
from .tgba import Edge, Tgba


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _label(mask: int, nvars: int) -> str:
    return expression(mask, [str(i) for i in range(nvars)])


def hoa_text(
    aut: Union[Nba, Tgba],
    name: Optional[str] = None,
    state_names: Optional[Sequence[str]] = None,
    unambiguous: bool = False,
) -> str:
    ap = aut.alphabet.ap
    k = len(ap)
    lines = ["HOA: v1"]
    if name is not None:
        lines.append(f"name: {_quote(name)}")
    lines.append(f"States: {len(aut.states)}")
    for q in aut.initial:
        lines.append(f"Start: {q}")
    lines.append(f"AP: {k}" + "".join(" " + _quote(a) for a in ap))
    props = ["trans-labels", "explicit-labels"]
    if isinstance(aut, Nba):
        lines.append("acc-name: Buchi")
        lines.append("Acceptance: 1 Inf(0)")
        props.append("state-acc")
    else:
        n = aut.num_acc
        if n == 0:
            lines.append("acc-name: all")
            lines.append("Acceptance: 0 t")
        else:
            lines.append(f"acc-name: generalized-Buchi {n}")
            lines.append(f"Acceptance: {n} " + "&".join(f"Inf({i})" for i in range(n)))
        props.append("trans-acc")
    if unambiguous:
        props.append("unambiguous")
    lines.append("properties: " + " ".join(props))
    lines.append("--BODY--")
    for q in range(len(aut.states)):
        head = f"State: {q}"
        if state_names is not None:
            head += " " + _quote(state_names[q])
        if isinstance(aut, Nba):
            if q in aut.finals:
                head += " {0}"
            lines.append(head)
            for letters, t in aut.edges[q]:
                lines.append(f"[{_label(letters, k)}] {t}")
        else:
            lines.append(head)
            for e in aut.edges[q]:
                marks = [str(i) for i in range(aut.num_acc) if e.acc >> i & 1]
                acc = " {" + " ".join(marks) + "}" if marks else ""
                lines.append(f"[{_label(e.letters, k)}] {e.target}{acc}")
    lines.append("--END--")
    return "\n".join(lines) + "\n"


def write_hoa(aut: Union[Nba, Tgba], sink: TextIO, **kwargs) -> None:
    sink.write(hoa_text(aut, **kwargs))


# --- reading -----------------------------------------------------------------


class HoaSyntaxError(ValueError):
    pass


@dataclass
class HoaAutomaton:
    ap: Tuple[str, ...]
    num_states: int
    start: List[int]
    num_acc: int
    acceptance: str
    properties: List[str] = field(default_factory=list)
    state_acc: Dict[int, int] = field(default_factory=dict)
    edges: List[Tuple[int, int, int, int]] = field(default_factory=list)  # (src, letters, dst, marks)
    names: Dict[int, str] = field(default_factory=dict)

    def to_nba(self) -> Nba:
        if self.num_acc != 1:
            raise ValueError("not a Buchi automaton")
        alphabet = Alphabet(self.ap)
        finals = frozenset(q for q, m in self.state_acc.items() if m & 1)
        merged: Dict[Tuple[int, int], int] = {}
        for src, letters, dst, marks in self.edges:
            if marks & 1:
                raise ValueError("transition-based marks cannot be read as an NBA")
            merged[(src, dst)] = merged.get((src, dst), 0) | letters
        edges = tuple(
            tuple((ls, t) for (s, t), ls in sorted(merged.items()) if s == q)
            for q in range(self.num_states)
        )
        states = tuple(self.names.get(q, q) for q in range(self.num_states))
        return Nba(alphabet, states, edges, tuple(self.start), finals)

    def to_tgba(self) -> Tgba:
        alphabet = Alphabet(self.ap)
        per_state: List[List[Edge]] = [[] for _ in range(self.num_states)]
        for src, letters, dst, marks in self.edges:
            per_state[src].append(Edge(letters, dst, marks))
        states = tuple(self.names.get(q, q) for q in range(self.num_states))
        return Tgba(alphabet, states, tuple(tuple(es) for es in per_state), tuple(self.start), self.num_acc)


_TOKEN = re.compile(r"\s*(?:(\d+)|(t|f)\b|([!&|()]))")


def parse_label(text: str, nvars: int) -> int:
    """Letter-set mask of a HOA label expression over AP indices."""
    size = 1 << nvars
    full = (1 << size) - 1
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise HoaSyntaxError(f"bad label {text!r} at offset {pos}")
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    tokens.append(None)
    i = 0

    def atom_mask(v):
        if v >= nvars:
            raise HoaSyntaxError(f"AP index {v} out of range")
        return sum(1 << m for m in range(size) if m >> v & 1)

    def disj():
        nonlocal i
        val = conj()
        while tokens[i] == "|":
            i += 1
            val |= conj()
        return val

    def conj():
        nonlocal i
        val = unary()
        while tokens[i] == "&":
            i += 1
            val &= unary()
        return val

    def unary():
        nonlocal i
        tok = tokens[i]
        i += 1
        if tok == "!":
            return full & ~unary()
        if tok == "(":
            val = disj()
            if tokens[i] != ")":
                raise HoaSyntaxError(f"missing ')' in label {text!r}")
            i += 1
            return val
        if tok == "t":
            return full
        if tok == "f":
            return 0
        if tok is not None and tok.isdigit():
            return atom_mask(int(tok))
        raise HoaSyntaxError(f"unexpected {tok!r} in label {text!r}")

    val = disj()
    if tokens[i] is not None:
        raise HoaSyntaxError(f"trailing input in label {text!r}")
    return val


def _marks(text: Optional[str]) -> int:
    if not text:
        return 0
    return sum(1 << int(x) for x in text.split())


_STATE = re.compile(r'State:\s*(\d+)\s*("(?:[^"\\]|\\.)*")?\s*(?:\{([\d\s]*)\})?\s*$')
_EDGE = re.compile(r"\[([^\]]*)\]\s*(\d+)\s*(?:\{([\d\s]*)\})?\s*$")


def read_hoa(text: str) -> HoaAutomaton:
    """Parse one automaton with explicit labels (the form ``hoa_text`` writes)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "HOA: v1":
        raise HoaSyntaxError("missing 'HOA: v1' header")
    try:
        body = lines.index("--BODY--")
    except ValueError:
        raise HoaSyntaxError("missing --BODY--") from None
    ap: Tuple[str, ...] = ()
    num_states = 0
    start: List[int] = []
    num_acc = 0
    acceptance = "t"
    props: List[str] = []
    for ln in lines[1:body]:
        key, _, rest = ln.partition(":")
        rest = rest.strip()
        if key == "States":
            num_states = int(rest)
        elif key == "Start":
            start.append(int(rest))
        elif key == "AP":
            count, *names = re.findall(r'\d+|"(?:[^"\\]|\\.)*"', rest)
            ap = tuple(n[1:-1] for n in names)
            if len(ap) != int(count):
                raise HoaSyntaxError("AP count does not match the names given")
        elif key == "Acceptance":
            n, _, acceptance = rest.partition(" ")
            num_acc = int(n)
        elif key == "properties":
            props.extend(rest.split())
    aut = HoaAutomaton(ap, num_states, start, num_acc, acceptance.strip(), props)
    current = None
    for ln in lines[body + 1:]:
        if ln == "--END--":
            return aut
        m = _STATE.match(ln)
        if m:
            current = int(m.group(1))
            if m.group(2):
                aut.names[current] = m.group(2)[1:-1].replace('\\"', '"').replace("\\\\", "\\")
            if m.group(3) is not None:
                aut.state_acc[current] = _marks(m.group(3))
            continue
        m = _EDGE.match(ln)
        if m and current is not None:
            aut.edges.append((current, parse_label(m.group(1), len(ap)), int(m.group(2)), _marks(m.group(3))))
            continue
        raise HoaSyntaxError(f"cannot read body line {ln!r}")
    raise HoaSyntaxError("missing --END--")
