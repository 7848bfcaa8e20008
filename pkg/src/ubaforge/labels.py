"""Letter sets as Boolean expressions over atomic propositions.

A prime-implicant sweep (Quine-McCluskey merging followed by a greedy
cover); the result is irredundant but not necessarily minimum.
"""
from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Tuple

Cube = Tuple[int, int]  # (care mask, value bits)


@lru_cache(maxsize=4096)
def cover(mask: int, nvars: int) -> Tuple[Cube, ...]:
    """Cubes whose union is exactly the letter set ``mask``."""
    size = 1 << nvars
    full_care = size - 1
    minterms = [m for m in range(size) if mask >> m & 1]
    if not minterms:
        return ()
    if len(minterms) == size:
        return ((0, 0),)
    level = {(full_care, m) for m in minterms}
    primes = set()
    while level:
        merged = set()
        used = set()
        items = sorted(level)
        present = set(items)
        for care, val in items:
            for i in range(nvars):
                bit = 1 << i
                if care & bit and not val & bit:
                    other = (care, val | bit)
                    if other in present:
                        merged.add((care & ~bit, val))
                        used.add((care, val))
                        used.add(other)
        primes |= level - used
        level = merged
    # greedy cover, largest cubes first, deterministic ties
    remaining = set(minterms)
    chosen: List[Cube] = []
    ordered = sorted(primes, key=lambda c: (bin(c[0]).count("1"), c))
    covers = {c: {m for m in remaining if m & c[0] == c[1]} for c in ordered}
    # essential primes first
    for m in sorted(remaining):
        hits = [c for c in ordered if m in covers[c]]
        if len(hits) == 1 and hits[0] not in chosen:
            chosen.append(hits[0])
    for c in chosen:
        remaining -= covers[c]
    while remaining:
        best = max(ordered, key=lambda c: (len(covers[c] & remaining), -bin(c[0]).count("1")))
        chosen.append(best)
        remaining -= covers[best]
    # drop cubes made redundant by later picks
    for c in list(chosen):
        rest = set()
        for d in chosen:
            if d != c:
                rest |= covers[d]
        if covers[c] <= rest:
            chosen.remove(c)
    return tuple(sorted(chosen, key=lambda c: (c[0], c[1])))


def _cube_text(cube: Cube, names: Sequence[str]) -> str:
    care, val = cube
    if care == 0:
        return "t"
    parts = []
    for i, n in enumerate(names):
        if care >> i & 1:
            parts.append(n if val >> i & 1 else "!" + n)
    return "&".join(parts)


def expression(mask: int, names: Sequence[str]) -> str:
    """Sum-of-products text; ``names`` may be atom names or HOA indices."""
    cubes = cover(mask, len(names))
    if not cubes:
        return "f"
    if len(cubes) == 1:
        return _cube_text(cubes[0], names)
    return " | ".join(
        f"({t})" if "&" in t else t for t in (_cube_text(c, names) for c in cubes)
    )
