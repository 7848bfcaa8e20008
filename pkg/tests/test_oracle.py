import random

import pytest

from ubaforge.ltl import parse_formula, to_pnf
from ubaforge.ltl import formula as fm
from ubaforge.oracle import (
    LassoBatch,
    LassoWord,
    accepting_runs,
    count_formulas,
    enumerate_formulas,
    lasso_universe,
    ltl_holds,
    make_nba,
    nba_accepts,
    nba_accepts_all,
    nba_accepts_naive,
    nba_unambiguous,
    nba_union,
)
from ubaforge.pipeline import translate

P = parse_formula
E, A = frozenset(), frozenset(["a"])


def random_nba(rng, max_states=5):
    n = rng.randint(1, max_states)
    trans = [(q, rng.randint(1, 3), t) for q in range(n) for t in range(n) if rng.random() < 0.35]
    init = sorted({0, n - 1}) if rng.random() < 0.3 else [0]
    finals = [q for q in range(n) if rng.random() < 0.4]
    return make_nba(["a"], trans, init, finals, n)


def test_lasso_requires_period():
    with pytest.raises(ValueError):
        LassoWord([A], [])


def test_universe_size():
    assert len(lasso_universe(["a", "b"])) == 85 * 84
    assert len(lasso_universe(["a"])) == 15 * 14


@pytest.mark.parametrize(
    "text, prefix, period, expected",
    [
        ("G a", [], [A], True),
        ("F G a", [E], [A], True),
        ("a U b", [A], [E], False),
        ("G F a", [A, A], [E, A], True),
        ("X X !a", [A], [A, E], True),
    ],
)
def test_ltl_holds_examples(text, prefix, period, expected):
    assert ltl_holds(to_pnf(P(text)), LassoWord(prefix, period)) == expected


def test_ltl_holds_position_range():
    with pytest.raises(ValueError):
        ltl_holds(P("a"), LassoWord([], [A]), at=1)


def test_ltl_holds_positions():
    w = LassoWord([E], [A, E])
    assert [ltl_holds(P("a"), w, i) for i in range(3)] == [False, True, False]
    assert [ltl_holds(P("X a"), w, i) for i in range(3)] == [True, False, True]


def test_expansion_laws():
    words = lasso_universe(["a", "b"], 2, 2)[::13]
    small = list(enumerate_formulas(2, ["a", "b"]))
    for phi in small:
        for psi in small:
            u, r = fm.Until(phi, psi), fm.Release(phi, psi)
            u_exp = fm.Or(psi, fm.And(phi, fm.And(fm.Not(psi), fm.Next(u))))
            r_exp = fm.Or(fm.And(phi, psi), fm.And(fm.Not(phi), fm.And(psi, fm.Next(r))))
            for w in words:
                for i in range(len(w)):
                    assert ltl_holds(u, w, i) == ltl_holds(u_exp, w, i)
                    assert ltl_holds(r, w, i) == ltl_holds(r_exp, w, i)


def test_batch_matches_scalar():
    words = lasso_universe(["a", "b"], 2, 2)
    batch = LassoBatch(words)
    for f in list(enumerate_formulas(3, ["a", "b"]))[::7]:
        assert list(batch.holds(f)) == [ltl_holds(f, w) for w in words]


def test_nba_accepts_examples():
    true_loop = make_nba(["a"], [(0, 0b11, 0)], [0], [0])
    no_final = make_nba(["a"], [(0, 0b11, 0)], [0], [])
    for w in lasso_universe(["a"], 2, 2):
        assert nba_accepts(true_loop, w)
        assert not nba_accepts(no_final, w)
    fga = translate("F G a").nba
    assert nba_accepts(fga, LassoWord([E, A], [A]))


def test_acceptance_implementations_agree():
    rng = random.Random(3)
    words = lasso_universe(["a"])
    for _ in range(150):
        N = random_nba(rng)
        fast = nba_accepts_all(N, words)
        for k, w in enumerate(words[::3]):
            assert nba_accepts(N, w) == nba_accepts_naive(N, w) == fast[3 * k]


def test_letters_outside_the_alphabet_are_ignored():
    N = translate("F G a").nba
    assert nba_accepts(N, LassoWord([{"b"}], [{"a", "b"}]))


def test_unambiguous_examples():
    det = translate("a U b").nba
    assert nba_unambiguous(det)
    fga = translate("F G a").nba
    assert not nba_unambiguous(nba_union(fga, fga))
    empty = make_nba(["a"], [(0, 0b11, 0)], [0], [])
    assert nba_unambiguous(nba_union(empty, empty))


def test_unambiguity_matches_run_counting():
    rng = random.Random(1)
    words = lasso_universe(["a"])
    ambiguous = 0
    for _ in range(300):
        N = random_nba(rng)
        expected = all(accepting_runs(N, w) <= 1 for w in words)
        assert nba_unambiguous(N) == expected
        ambiguous += not expected
    assert ambiguous > 20


def test_run_counting_small_cases():
    two_ways = make_nba(["a"], [(0, 0b11, 1), (0, 0b11, 2), (1, 0b11, 1), (2, 0b11, 2)], [0], [1, 2])
    w = LassoWord([], [A])
    assert accepting_runs(two_ways, w) == 2
    one = make_nba(["a"], [(0, 0b11, 0)], [0], [0])
    assert accepting_runs(one, w) == 1
    assert accepting_runs(make_nba(["a"], [(0, 0b11, 0)], [0], []), w) == 0


def test_enumeration_examples():
    assert set(enumerate_formulas(1, ["a"])) == {fm.true(), fm.false(), fm.atom("a"), fm.neg_atom("a")}
    two = set(enumerate_formulas(2, ["a"]))
    for text in ["X a", "X !a", "F a", "G a"]:
        assert P(text) in two


def test_enumeration_counts():
    # regression constants from the first run
    assert count_formulas(3, ["a", "b"]) == 210
    assert count_formulas(4, ["a", "b"]) == 1596
    assert count_formulas(5, ["a", "b"]) == 15606


def test_enumeration_is_deterministic_and_bounded():
    first = list(enumerate_formulas(4, ["a", "b"]))
    assert first == list(enumerate_formulas(4, ["a", "b"]))
    assert len(set(first)) == len(first)
    assert all(f.size <= 4 for f in first)
