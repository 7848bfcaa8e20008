"""Ultimately periodic words u v^omega."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

Letter = FrozenSet[str]


@dataclass(frozen=True)
class LassoWord:
    prefix: Tuple[Letter, ...]
    period: Tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(frozenset(x) for x in self.prefix))
        object.__setattr__(self, "period", tuple(frozenset(x) for x in self.period))
        if not self.period:
            raise ValueError("the period of a lasso word must be nonempty")

    def __len__(self) -> int:
        return len(self.prefix) + len(self.period)

    def letter(self, i: int) -> Letter:
        u = len(self.prefix)
        return self.prefix[i] if i < u else self.period[i - u]

    def succ(self, i: int) -> int:
        return i + 1 if i + 1 < len(self) else len(self.prefix)

    def letters(self) -> Tuple[Letter, ...]:
        return self.prefix + self.period

    def __str__(self) -> str:
        show = lambda xs: " ".join("{" + ",".join(sorted(x)) + "}" for x in xs)
        return f"{show(self.prefix)} ({show(self.period)})^w".strip()


def letters_over(ap: Sequence[str]) -> List[Letter]:
    """All subsets of ``ap``, ordered by their bit encoding."""
    ap = list(ap)
    return [frozenset(a for i, a in enumerate(ap) if m >> i & 1) for m in range(1 << len(ap))]


def lasso_universe(ap: Sequence[str], max_prefix: int = 3, max_period: int = 3) -> List[LassoWord]:
    """Every lasso with |u| <= max_prefix and 1 <= |v| <= max_period."""
    sigma = letters_over(ap)
    out = []
    for lu in range(max_prefix + 1):
        for u in itertools.product(sigma, repeat=lu):
            for lv in range(1, max_period + 1):
                for v in itertools.product(sigma, repeat=lv):
                    out.append(LassoWord(u, v))
    return out


def sample_lassos(
    ap: Sequence[str], count: int, seed: int = 0, max_prefix: int = 3, max_period: int = 3
) -> List[LassoWord]:
    """Seeded random lassos, for alphabets too large to enumerate."""
    rng = random.Random(seed)
    sigma = letters_over(ap)
    out = []
    for _ in range(count):
        u = [rng.choice(sigma) for _ in range(rng.randint(0, max_prefix))]
        v = [rng.choice(sigma) for _ in range(rng.randint(1, max_period))]
        out.append(LassoWord(u, v))
    return out


def check_universe(ap: Sequence[str], seed: int = 0, limit: int = 2, samples: int = 4000) -> List[LassoWord]:
    """Exhaustive universe for small alphabets, seeded sample otherwise."""
    if len(ap) <= limit:
        return lasso_universe(ap)
    return sample_lassos(ap, samples, seed)


def shift(words: Iterable[LassoWord], prefix: Sequence[Letter]) -> List[LassoWord]:
    return [LassoWord(tuple(prefix) + w.prefix, w.period) for w in words]
