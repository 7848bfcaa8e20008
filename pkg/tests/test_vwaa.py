from dataclasses import replace

import pytest

from ubaforge.alphabet import Alphabet, AlphabetTooLarge
from ubaforge.ltl import classify, parse_formula, to_pnf
from ubaforge.ltl import formula as fm
from ubaforge.oracle import enumerate_formulas, vwaa_accepts
from ubaforge.vwaa import (
    add_complement_states,
    check_antichain,
    check_complement_invariant,
    check_very_weak,
    ltl_to_vwaa,
    make_vwaa,
    minimal_hitting_sets,
    normalize,
    successor_sets,
)

SIG_A = Alphabet(["a"])
EMPTY, A_ = 0, 1  # letters over {a}
ALL, ONLY_A, NO_A = 0b11, 0b10, 0b01  # letter sets over {a}


def vwaa(text, **kw):
    return ltl_to_vwaa(to_pnf(parse_formula(text)), **kw)


def state(A, text):
    return A.index[parse_formula(text)]


def test_atom_transitions():
    A = vwaa("a")
    assert len(A) == 1
    assert A.delta[A.initial] == ((ONLY_A, frozenset()),)
    assert not A.states[A.initial].final


def test_true_and_false():
    # no atoms: the alphabet has the single letter {} and full mask 1
    assert vwaa("true").delta[0] == ((1, frozenset()),)
    assert vwaa("false").delta[0] == ()


def test_fg_structure():
    A = vwaa("F G a")
    fga, ga = A.initial, state(A, "G a")
    assert sorted(A.reachable()) == sorted([fga, ga])
    assert set(A.delta[fga]) == {(ALL, frozenset([fga])), (ONLY_A, frozenset([ga]))}
    assert A.delta[ga] == ((ONLY_A, frozenset([ga])),)
    assert A.finals == (fga,)


def test_successor_sets_examples():
    A = vwaa("F G a")
    fga, ga = A.initial, state(A, "G a")
    assert successor_sets(A, ga, A_) == [frozenset([ga])]
    assert successor_sets(A, ga, EMPTY) == []
    assert set(successor_sets(A, fga, A_)) == {frozenset([fga]), frozenset([ga])}


def test_until_finals_are_the_until_states():
    A = vwaa("(a U b) R (F a | X (b U a))")
    for q in A.reachable():
        assert A.states[q].final == (A.states[q].formula.kind == fm.UNTIL)


def test_box_suspension():
    A = vwaa("G F a")
    assert A.states[A.initial].formula == parse_formula("G X F a")
    assert A.index[parse_formula("G F a")] == A.initial
    assert A.delta[A.initial] == ((ALL, frozenset([A.initial, state(A, "F a")])),)
    B = vwaa("G F a", suspension=False)
    assert B.states[B.initial].formula == parse_formula("G F a")


def test_alphabet_cap():
    text = " & ".join(f"p{i}" for i in range(17))
    with pytest.raises(AlphabetTooLarge):
        vwaa(text)


def test_normalize_keeps_antichain():
    t = normalize([(ALL, frozenset([1])), (ONLY_A, frozenset([1, 2])), (NO_A, frozenset([3]))])
    assert t == ((ALL, frozenset([1])), (NO_A, frozenset([3])))


def test_minimal_hitting_sets():
    hits = minimal_hitting_sets([frozenset([1, 2]), frozenset([2, 3])])
    assert sorted(map(sorted, hits)) == [[1, 3], [2]]
    assert minimal_hitting_sets([]) == [frozenset()]
    assert minimal_hitting_sets([frozenset()]) == []


def test_complement_of_globally():
    A = vwaa("G a")
    B = add_complement_states(A)
    ga = A.initial
    c = B.partner[ga]
    assert B.partner[c] == ga
    assert B.states[c].final and B.states[c].complement
    assert set(B.delta[c]) == {(ONLY_A, frozenset([c])), (NO_A, frozenset())}
    notga = replace(B, initial=c)
    fna = to_pnf(parse_formula("F !a"))
    from ubaforge.oracle import lasso_universe, ltl_holds

    for w in lasso_universe(["a"]):
        assert vwaa_accepts(notga, w) == ltl_holds(fna, w)


def test_complement_of_true_is_empty():
    A = vwaa("true")
    B = add_complement_states(A)
    assert B.delta[B.partner[A.initial]] == ()


def test_complement_is_idempotent_and_at_most_doubles():
    A = vwaa("(a U b) R F G a")
    B = add_complement_states(A)
    assert len(B) <= 2 * len(A)
    assert add_complement_states(B) is B


def test_very_weak_examples():
    assert check_very_weak(vwaa("F G a"))
    f = [fm.atom("a"), fm.atom("b")]
    cyc = make_vwaa(SIG_A, f, [[(ALL, frozenset([1]))], [(ALL, frozenset([0]))]], [])
    assert not check_very_weak(cyc)
    loop = make_vwaa(SIG_A, f[:1], [[(ALL, frozenset([0]))]], [])
    assert check_very_weak(loop)


def test_dump_lists_states():
    text = vwaa("a U b").dump()
    assert "state 0 [a U b] final" in text
    assert "[b] -> {}" in text


def test_translation_matches_semantics_on_corpus(words_ab, batch_ab):
    words = words_ab[::29]
    for f in enumerate_formulas(4, ["a", "b"]):
        A = ltl_to_vwaa(f, Alphabet(["a", "b"]))
        assert check_very_weak(A) and check_antichain(A)
        subs = {g for g in f.subformulas()}
        variants = {g for g in subs if g.is_globally and classify(g.right).purely_eventual}
        assert len(A.reachable()) <= len(subs) + len(variants)
        if len(A) > 8:
            continue
        truth = batch_ab.holds(f)[::29]
        got = [vwaa_accepts(A, w) for w in words]
        assert list(truth) == got, f


def test_complements_on_corpus(words_ab):
    words = words_ab[::41]
    for f in enumerate_formulas(3, ["a", "b"]):
        A = ltl_to_vwaa(f, Alphabet(["a", "b"]))
        B = add_complement_states(A)
        assert check_very_weak(B) and check_antichain(B)
        assert check_complement_invariant(B)
        for q in A.reachable():
            c = B.partner[q]
            for w in words:
                assert vwaa_accepts(replace(B, initial=q), w) != vwaa_accepts(replace(B, initial=c), w)
