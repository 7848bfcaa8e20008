import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ubaforge.ltl import (
    FormulaSyntaxError,
    FragmentError,
    classify,
    decompose_disjunction_free,
    goal,
    is_disjunction_free,
    is_pnf,
    negate_pnf,
    parse_formula,
    simplify,
    to_pnf,
    unparse,
    unparse_prefix,
)
from ubaforge.ltl import formula as fm
from ubaforge.oracle import enumerate_formulas, ltl_holds, random_disjunction_free, random_formula
from ubaforge.oracle.lasso import LassoWord

a, b = fm.atom("a"), fm.atom("b")
P = parse_formula


def formulas(depth=3):
    return st.integers(0, 2**32 - 1).map(lambda s: random_formula(random.Random(s), depth, ["a", "b"]))


def same_language(f, g, batch):
    return bool((batch.holds(f) == batch.holds(g)).all())


# --- parsing ---------------------------------------------------------------


def test_parse_until_with_next():
    assert P("a U (b & X a)") == fm.Until(a, fm.And(b, fm.Next(a)))


def test_parse_desugars_f_and_g():
    f = P("F G a")
    assert f == fm.Until(fm.true(), fm.Release(fm.false(), a))
    assert f.is_finally and f.right.is_globally


def test_parse_reports_offset():
    with pytest.raises(FormulaSyntaxError) as e:
        P("a U")
    assert e.value.position == 3
    assert "offset 3" in str(e.value)


def test_parse_unknown_operator():
    with pytest.raises(FormulaSyntaxError, match="unknown operator"):
        P("a % b")


def test_precedence_and_associativity():
    assert P("a | b & c") == fm.Or(a, fm.And(b, fm.atom("c")))
    assert P("a U b U c") == fm.Until(a, fm.Until(b, fm.atom("c")))
    assert P("a & b U c") == fm.And(a, fm.Until(b, fm.atom("c")))
    assert P("a -> b -> c") == P("a -> (b -> c)")


def test_prefix_syntax():
    assert P("U a & b X a", prefix=True) == P("a U (b & X a)")
    assert P("F G a", prefix=True) == P("F G a")


@given(formulas())
@settings(max_examples=200, deadline=None)
def test_unparse_round_trips(f):
    assert P(unparse(f)) == f
    assert P(unparse_prefix(f), prefix=True) == f


def test_hash_consing_shares_nodes():
    assert P("(a & b) U (a & b)").left is P("a & b")


# --- PNF ---------------------------------------------------------------------


def test_pnf_examples():
    assert to_pnf(P("!(a U b)")) == fm.Release(fm.neg_atom("a"), fm.neg_atom("b"))
    assert to_pnf(P("!F a")) == fm.Globally(fm.neg_atom("a"))
    assert to_pnf(P("!!a")) == a


def test_negate_pnf_examples():
    assert negate_pnf(a) == fm.neg_atom("a")
    assert negate_pnf(P("G a")) == P("F !a")
    assert negate_pnf(P("a U b")) == P("!a R !b")


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=150, deadline=None)
def test_pnf_preserves_truth_and_size(seed):
    rng = random.Random(seed)
    f = random_formula(rng, 3, ["a", "b"])
    if rng.random() < 0.5:
        f = fm.Not(f)
    g = to_pnf(f)
    assert is_pnf(g)
    assert g.size <= f.size
    w = LassoWord([frozenset(rng.sample("ab", rng.randint(0, 2))) for _ in range(2)], [{"a"}, set()])
    assert ltl_holds(g, w) == ltl_holds(f, w)


def test_pnf_and_negation_on_corpus(batch_ab):
    for f in enumerate_formulas(3, ["a", "b"]):
        assert same_language(to_pnf(fm.Not(f)), negate_pnf(f), batch_ab)
        assert bool((batch_ab.holds(negate_pnf(f)) != batch_ab.holds(f)).all())


# --- simplification --------------------------------------------------------------


def test_fairness_rule_one():
    assert simplify(P("G F a & F G b")) == P("G F (a & G b)")


def test_fairness_rule_two():
    assert simplify(P("F G a | G F b")) == P("F G (a | F b)")


def test_fairness_rules_need_the_flag():
    f = P("G F a & F G b")
    assert simplify(f, rewrite_rules=False) != P("G F (a & G b)")


def test_phi_zero():
    assert simplify(P("F G p0 | G F p1")) == P("F G (p0 | F p1)")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a & true", "a"),
        ("a | false", "a"),
        ("a & a", "a"),
        ("F F a", "F a"),
        ("G G a", "G a"),
        ("F G F a", "G F a"),
        ("G F G a", "F G a"),
        ("a | (a & b)", "a"),
        ("X a & X b", "X (a & b)"),
        ("a & !a", "false"),
    ],
)
def test_baseline_rules(text, expected, batch_ab):
    f, g = P(text), P(expected)
    assert simplify(f, rewrite_rules=False) == g
    assert same_language(f, g, batch_ab)


def test_simplify_is_deterministic():
    f = P("(F G b | G F a) & (G F a | F G b) & X a & X b")
    assert simplify(f) is simplify(f)
    assert unparse(simplify(f)) == unparse(simplify(P(unparse(f))))


def test_simplify_preserves_language_on_corpus(batch_ab):
    for f in enumerate_formulas(4, ["a", "b"]):
        for rules in (True, False):
            assert same_language(simplify(f, rewrite_rules=rules), f, batch_ab), f


# --- fragments ---------------------------------------------------------------------


def test_classify_examples():
    assert classify(P("G a")).purely_universal
    assert classify(P("F a")).purely_eventual
    gf = classify(P("G F a"))
    assert gf.alternating and gf.purely_universal and gf.purely_eventual


def test_classify_literals_are_nothing():
    c = classify(a)
    assert not (c.purely_universal or c.purely_eventual or c.alternating)


def test_purely_universal_is_suffix_closed(words_ab, batch_ab):
    prefixes = [[frozenset()], [frozenset("a")], [frozenset("ab"), frozenset("b")]]
    for f in enumerate_formulas(4, ["a", "b"]):
        c = classify(f)
        if not (c.purely_universal or c.purely_eventual):
            continue
        base = batch_ab.holds(f)
        for u in prefixes:
            shifted = [ltl_holds(f, LassoWord(tuple(u) + w.prefix, w.period)) for w in words_ab[::37]]
            for k, w in enumerate(words_ab[::37]):
                if c.purely_universal and shifted[k]:
                    assert base[k * 37], (f, w)
                if c.purely_eventual and base[k * 37]:
                    assert shifted[k], (f, w)


def test_decompose_examples():
    assert decompose_disjunction_free(P("G a | G b")) == [P("G a"), P("G b")]
    assert decompose_disjunction_free(P("F (G a | G b)")) == [P("F G a"), P("F G b")]
    assert decompose_disjunction_free(P("(G a) U (G b)")) == [P("G b"), P("G a & F G b")]


def test_decompose_rejects_non_universal():
    with pytest.raises(FragmentError):
        decompose_disjunction_free(P("F a"))


def test_decompose_on_corpus(batch_ab):
    for f in enumerate_formulas(5, ["a", "b"]):
        if not classify(f).purely_universal:
            continue
        parts = decompose_disjunction_free(f)
        union = batch_ab.holds(fm.false())
        for p in parts:
            assert is_disjunction_free(p) and classify(p).purely_universal
            union = union | batch_ab.holds(p)
        assert bool((union == batch_ab.holds(f)).all()), f


def test_goal_examples():
    assert goal(P("G a")) == a
    assert goal(P("F G a")) == fm.true()
    assert goal(P("G a & X G b")) == P("a & X b")


def test_goal_rejects_disjunctions():
    with pytest.raises(FragmentError):
        goal(P("G a | G b"))


def test_goal_lemma_on_random_formulas(batch_ab):
    rng = random.Random(7)
    for _ in range(100):
        nu = random_disjunction_free(rng, 3, ["a", "b"])
        lhs = fm.And(goal(nu), fm.Next(nu))
        assert same_language(lhs, nu, batch_ab), nu


def test_store_is_thread_safe():
    from concurrent.futures import ThreadPoolExecutor

    texts = ["a U (b & X a)", "G F a & F G b", "(a R b) | X !a"] * 20
    with ThreadPoolExecutor(4) as pool:
        results = list(pool.map(P, texts))
    for t, r in zip(texts, results):
        assert r is P(t)
