import io
import json
import subprocess
import sys
from dataclasses import replace

import pytest

from ubaforge.alphabet import Alphabet
from ubaforge.cli import main
from ubaforge.degeneralize import degeneralize
from ubaforge.hoa import HoaSyntaxError, hoa_text, parse_label, read_hoa
from ubaforge.oracle import enumerate_formulas, make_nba, nba_accepts_all
from ubaforge.pipeline import PipelineConfig, check_translation, translate
from ubaforge.tgba import Edge, Tgba


def test_one_state_all_accepting():
    N = make_nba(["a"], [(0, 0b11, 0)], [0], [0])
    text = hoa_text(N)
    assert "Acceptance: 1 Inf(0)" in text
    assert "acc-name: Buchi" in text
    assert "State: 0 {0}\n[t] 0\n" in text


def test_generalized_header():
    G = Tgba(Alphabet(["a"]), ("p",), ((Edge(3, 0, 0b11),),), (0,), 2)
    text = hoa_text(G)
    assert "Acceptance: 2 Inf(0)&Inf(1)" in text
    assert "[t] 0 {0 1}" in text
    G0 = Tgba(Alphabet(["a"]), ("p",), ((Edge(3, 0, 0),),), (0,), 0)
    assert "Acceptance: 0 t" in hoa_text(G0)


def test_unambiguous_property_only_when_claimed():
    N = translate("F G a").nba
    assert "unambiguous" not in hoa_text(N)
    assert "properties: trans-labels explicit-labels state-acc unambiguous" in hoa_text(N, unambiguous=True)


@pytest.mark.parametrize(
    "label, nvars, mask",
    [("t", 1, 0b11), ("f", 2, 0), ("0", 1, 0b10), ("!0", 1, 0b01), ("0&!1", 2, 0b0010), ("(0 | 1) & !0", 2, 0b0100)],
)
def test_parse_label(label, nvars, mask):
    assert parse_label(label, nvars) == mask


def test_parse_label_errors():
    with pytest.raises(HoaSyntaxError):
        parse_label("0 &", 1)
    with pytest.raises(HoaSyntaxError):
        parse_label("3", 2)


def test_round_trip_on_corpus(words_ab):
    words = words_ab[::7]
    for f in enumerate_formulas(3, ["a", "b"]):
        t = translate(f, alphabet=Alphabet(["a", "b"]))
        back = read_hoa(hoa_text(t.nba, name=str(f), unambiguous=True))
        assert "unambiguous" in back.properties
        assert (nba_accepts_all(back.to_nba(), words) == nba_accepts_all(t.nba, words)).all()
        g = read_hoa(hoa_text(t.tgba)).to_tgba()
        assert (nba_accepts_all(degeneralize(g), words) == nba_accepts_all(t.nba, words)).all()


def test_reader_rejects_garbage():
    with pytest.raises(HoaSyntaxError):
        read_hoa("States: 1\n")
    with pytest.raises(HoaSyntaxError):
        read_hoa("HOA: v1\nStates: 1\n--BODY--\nState: 0\nnonsense\n--END--\n")


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin, sys.stdout, sys.stderr
    sys.stdin, sys.stdout, sys.stderr = io.StringIO(stdin), out, err
    try:
        code = main(argv)
    finally:
        sys.stdin, sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_cli_default_output():
    code, out, _ = run(["F G a"])
    assert code == 0
    assert out.startswith("HOA: v1\n")
    assert "properties: trans-labels explicit-labels state-acc unambiguous" in out
    N = read_hoa(out).to_nba()
    assert len(N) == 3


def test_cli_output_is_deterministic():
    assert run(["G F a & F G b | X (a U b)"]) == run(["G F a & F G b | X (a U b)"])


def test_cli_ablation_still_unambiguous():
    code, out, err = run(["--no-heuristic", "--no-rewrites", "--check", "F G a"])
    assert code == 0, err
    assert len(read_hoa(out).to_nba()) == 5


def test_cli_vwaa_dump():
    code, out, _ = run(["--emit=vwaa", "a U b"])
    assert code == 0
    # delta(a U b) only ever returns to a U b itself
    assert out.count("\nstate ") == 1
    assert "[a&!b] -> {0}" in out


def test_cli_tgba_emission():
    code, out, _ = run(["--emit=tgba", "G F a & F G b"])
    assert code == 0
    assert "acc-name: generalized-Buchi 2" in out


def test_cli_batch_stdin_and_stats():
    code, out, err = run(["--stats", "--check"], stdin="F G a\n\nG (a -> F b)\n")
    assert code == 0
    assert out.count("HOA: v1") == 2
    records = [json.loads(line) for line in err.splitlines()]
    stages = {r["stage"] for r in records}
    assert {"parse", "pnf", "simplify", "vwaa", "disambiguate", "degeneralize", "iteration", "check"} <= stages
    checks = [r for r in records if r["stage"] == "check"]
    assert all(r["equivalent"] and r["unambiguous"] for r in checks)


def test_cli_prefix_input():
    assert run(["--prefix", "U a b"])[1] == run(["a U b"])[1].replace('"a U b"', '"U a b"')


def test_cli_syntax_error():
    code, out, err = run(["a U"])
    assert code == 2 and out == ""
    assert "offset 3" in err


def test_cli_iteration_cap():
    code, _, err = run(["--max-iterations=0", "F G a"])
    assert code == 3
    assert "iterations" in err


def test_cli_flags_reach_the_pipeline():
    code, out, _ = run(["--no-suspension", "--eager-complements", "--seed=5", "--check", "G F a"])
    assert code == 0


def test_check_reports_counterexample():
    t = translate("F G a")
    broken = replace(t, nba=make_nba(["a"], [(0, 0b11, 0)], [0], [0]))
    report = check_translation(broken)
    assert not report.equivalent and report.counterexample is not None
    assert report.expected is False


def test_config_rejects_unknown_target():
    with pytest.raises(ValueError):
        PipelineConfig(emit="dot")


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "ubaforge.cli", "F G a"], capture_output=True, text=True, check=True
    )
    assert proc.stdout.startswith("HOA: v1")
