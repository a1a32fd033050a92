import io
import json
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None

from hassewitt import cli
from hassewitt.cohomology import BaseField, cohclass_to_json, h1, hilbert_symbol
from hassewitt.forms import DiagonalForm, form_to_json
from hassewitt.localsolve import InconclusivePrecisionError
from hassewitt.rationals import Place
from hassewitt.solvability import search_point, solvable_over_Q

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def validate(name, doc):
    if jsonschema is None:
        pytest.skip("jsonschema not installed")
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    jsonschema.validate(doc, schema)


def test_documented_hilbert_example(capsys):
    code, out, _ = run(capsys, "hilbert", "-a", "-1", "-b", "-1", "--place", "inf")
    assert code == 0
    assert json.loads(out) == {"symbol": -1}


def test_documented_obstruct_example(capsys):
    doc = run_json(capsys, "obstruct", "--form", "[-1,-1,-1]", "--field", "Q")
    assert doc == {
        "field": "Q",
        "degree": 3,
        "zero": False,
        "payload": 1,
        "form": ["-1", "-1", "-1"],
    }
    validate("obstruct", doc)


def test_documented_search_example(capsys):
    doc = run_json(capsys, "search", "--form", "[5,5]", "--height", "5")
    assert doc == {"point": ["1/5", "2/5"]}
    validate("search", doc)


def test_negative_fraction_option_values(capsys):
    # -a -1/2 must parse as an option value, not as a flag
    doc = run_json(capsys, "hilbert", "-a", "-1/2", "-b", "-3", "--place", "7")
    assert doc == {"symbol": hilbert_symbol(Fraction(-1, 2), -3, Place.finite(7))}


def test_exit_code_1_on_usage(capsys):
    for argv in (
        [],
        ["no-such-command"],
        ["hilbert", "-a", "-1", "--place", "inf"],  # missing -b
        ["hilbert", "-a", "x", "-b", "1", "--place", "inf"],  # malformed rational
        ["search", "--form", "[5,5]", "--height", "x"],
        ["obstruct", "--form", "not json", "--field", "Q"],
        ["h1", "-a", "2", "--field", "Zp:3"],  # malformed field syntax
        ["hilbert", "-a", "1", "-b", "1", "--place", "oo"],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 1, argv
        assert out == ""


def test_exit_code_2_on_domain_errors(capsys):
    for argv in (
        ["hilbert", "-a", "0", "-b", "1", "--place", "inf"],  # zero argument
        ["hilbert", "-a", "1", "-b", "1", "--place", "4"],  # 4 is not a prime
        ["h1", "-a", "2", "--field", "Qp:9"],  # 9 is not a prime
        ["obstruct", "--form", "[1,0]", "--field", "Q"],  # degenerate form
        ["obstruct", "--form", "[]", "--field", "Q"],
        ["diag", "--matrix", "[[1,2],[3,4]]"],  # not symmetric
        ["diag", "--matrix", "[[1,1],[1,1]]"],  # singular
        ["search", "--form", "[1,1]", "--height", "0"],
        ["hw", "--form", "[1]", "--field", "Qp:-3"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 2, argv
        assert out == ""
        assert err.startswith("error:")


def test_exit_code_3_on_inconclusive(capsys, monkeypatch):
    # no default invocation is inconclusive, so force the failure mode;
    # the parser is built inside main, so the handler binds to the patch
    def raiser(args):
        raise InconclusivePrecisionError("forced for the exit-code contract")

    monkeypatch.setattr(cli, "_cmd_search", raiser)
    code, out, err = run(capsys, "search", "--form", "[1,1]", "--height", "3")
    assert code == 3
    assert out == ""
    assert err.startswith("inconclusive:")


def test_human_flag_changes_layout_not_content(capsys):
    compact = run_json(capsys, "solvable", "--form", "[-1,3]")
    code, out, _ = run(capsys, "solvable", "--form", "[-1,3]", "--human")
    assert code == 0
    assert "\n" in out.strip()
    assert json.loads(out) == compact


def test_solvable_outputs(capsys):
    doc = run_json(capsys, "solvable", "--form", "[-1,3]")
    assert doc == {
        "solvable": False,
        "witness": None,
        "failing_place": "2",
        "checked_places": ["inf", "2"],
    }
    validate("solvable", doc)
    doc = run_json(capsys, "solvable", "--form", "[-1,3]", "--place", "3")
    assert doc == {"place": "3", "solvable": False}
    validate("solvable", doc)
    doc = run_json(capsys, "solvable", "--form", "[5,5]")
    assert doc["solvable"] is True and doc["witness"] == ["1/5", "2/5"]
    validate("solvable", doc)


def test_gerbe_commands(capsys):
    doc = run_json(capsys, "gerbe-verify")
    assert doc["verified"] is True
    assert doc["census"] == 8
    assert doc["cocycle_table"][1][2] == 1  # (sigma_a, sigma_b)
    assert doc["cocycle_table"][2][1] == 0
    validate("gerbe-verify", doc)
    doc = run_json(capsys, "h2-census")
    assert doc == {"classes": 8}
    validate("h2-census", doc)


def test_diag_output(capsys):
    doc = run_json(capsys, "diag", "--matrix", "[[0,1],[1,0]]")
    assert doc == {
        "transform": [["1", "1"], ["-1/2", "1/2"]],
        "diagonal": ["2", "-1/2"],
    }
    validate("diag", doc)


def test_h1_and_hw_match_library(capsys):
    doc = run_json(capsys, "h1", "-a", "18", "--field", "Q")
    assert doc == cohclass_to_json(h1(18, BaseField.parse("Q")))
    validate("cohclass", doc)
    doc = run_json(capsys, "hw", "--form", '[2,"1/3"]', "--field", "Qp:3")
    assert doc["hw"][0]["payload"] == 6
    assert doc["top_obstruction"]["degree"] == 2
    validate("hw", doc)


coeff = st.fractions(min_value=-8, max_value=8, max_denominator=5).filter(
    lambda q: q != 0
)


def run_captured(*argv):
    # hypothesis dislikes function-scoped capsys, so capture by hand
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(list(argv))
    return code, buf.getvalue()


@given(st.lists(coeff, min_size=1, max_size=3), st.integers(min_value=1, max_value=6))
@settings(max_examples=40, deadline=None)
def test_cli_search_matches_library(form_entries, height):
    form = DiagonalForm(tuple(form_entries))
    code, out = run_captured(
        "search", "--form", json.dumps(form_to_json(form)), "--height", str(height)
    )
    assert code == 0
    pt = search_point(form, height)
    expected = None if pt is None else [str(x) for x in pt]
    assert json.loads(out) == {"point": expected}


@given(st.lists(coeff, min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_cli_solvable_matches_library(form_entries):
    form = DiagonalForm(tuple(form_entries))
    code, out = run_captured("solvable", "--form", json.dumps(form_to_json(form)))
    assert code == 0
    assert json.loads(out) == solvable_over_Q(form).to_json()


@given(coeff, coeff)
@settings(max_examples=40, deadline=None)
def test_rationals_survive_the_argv_round_trip(a, b):
    # fractions formatted the way the CLI prints them feed back in bit for bit
    code, out = run_captured("hilbert", "-a", str(a), "-b", str(b), "--place", "2")
    assert code == 0
    assert json.loads(out) == {"symbol": hilbert_symbol(a, b, Place.finite(2))}
