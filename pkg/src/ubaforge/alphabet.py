"""Explicit alphabet 2^AP.

A letter is an integer whose bit ``i`` says whether ``ap[i]`` holds.  A set
of letters is an integer bitmask over letter indices, so letter-set
intersection and union are ``&`` and ``|``.
"""
from __future__ import annotations

from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple

DEFAULT_AP_CAP = 16


class AlphabetTooLarge(ValueError):
    pass


class Alphabet:
    def __init__(self, ap: Sequence[str], cap: int = DEFAULT_AP_CAP):
        ap = tuple(ap)
        if len(set(ap)) != len(ap):
            raise ValueError(f"duplicate atomic propositions in {ap}")
        if len(ap) > cap:
            raise AlphabetTooLarge(f"{len(ap)} atomic propositions exceed the cap of {cap}")
        self.ap: Tuple[str, ...] = ap
        self.size = 1 << len(ap)
        self.full = (1 << self.size) - 1
        self._index = {name: i for i, name in enumerate(ap)}

    def __repr__(self) -> str:
        return f"Alphabet({list(self.ap)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and other.ap == self.ap

    def __hash__(self) -> int:
        return hash(self.ap)

    @cached_property
    def _with(self) -> Tuple[int, ...]:
        masks = []
        for i in range(len(self.ap)):
            mask = 0
            for m in range(self.size):
                if m >> i & 1:
                    mask |= 1 << m
            masks.append(mask)
        return tuple(masks)

    def with_atom(self, name: str) -> int:
        """Letters containing ``name``."""
        return self._with[self._index[name]]

    def without_atom(self, name: str) -> int:
        return self.full & ~self.with_atom(name)

    def letter(self, names: Iterable[str]) -> int:
        """Letter index of a set of atom names; names outside AP are ignored."""
        m = 0
        for n in names:
            i = self._index.get(n)
            if i is not None:
                m |= 1 << i
        return m

    def names(self, letter: int) -> FrozenSet[str]:
        return frozenset(a for i, a in enumerate(self.ap) if letter >> i & 1)

    def letters(self, mask: int) -> Iterator[int]:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    @staticmethod
    def lowest(mask: int) -> int:
        return (mask & -mask).bit_length() - 1

    def contains(self, mask: int, letter: int) -> bool:
        return bool(mask >> letter & 1)
