import dataclasses
import json
import pathlib

import pytest
from hypothesis import given, settings, strategies as st

from hopfcyc.bundle import emit_bundle, fixture_bundle, parse_bundle
from hopfcyc.cli import emit_report, main, run
from hopfcyc.errors import ParseError, UnsupportedCommand, ValidationError

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "hopfcyc" / "data"
FILES = sorted(DATA.glob("*.json"))


def test_data_directory_ships_every_fixture():
    assert len(FILES) == 16


@pytest.mark.parametrize("path", FILES, ids=lambda p: p.stem)
def test_shipped_bundles_round_trip(path):
    text = path.read_text()
    assert emit_bundle(parse_bundle(text)) == text


def test_fixture_and_file_agree():
    b = parse_bundle((DATA / "kC2-coext.json").read_text())
    assert b.digest() == fixture_bundle("kC2-coext").digest()


def _doc(name="kC2-coext"):
    return json.loads((DATA / f"{name}.json").read_text())


def test_zero_denominator_is_a_parse_error():
    doc = _doc()
    doc["hopf"]["counit"][0] = "1/0"
    with pytest.raises(ParseError) as e:
        parse_bundle(json.dumps(doc))
    assert e.value.position == "$.hopf.counit[0]"


def test_malformed_json_reports_position():
    with pytest.raises(ParseError) as e:
        parse_bundle('{"format_version": 1,')
    assert "line 1" in e.value.position


def test_both_modes_is_rejected():
    doc = _doc()
    doc["extension"] = _doc("kC2-ext")["extension"]
    with pytest.raises(ParseError):
        parse_bundle(json.dumps(doc))


def test_broken_coassociativity_names_the_axiom():
    doc = _doc()
    # Delta(g) = g (x) 1: counital on one side only and not coassociative with S
    doc["hopf"]["comult"] = [[0, 0, 0, 1], [1, 1, 0, 1]]
    with pytest.raises(ValidationError) as e:
        parse_bundle(json.dumps(doc))
    assert "Hopf algebra" in str(e.value)
    assert not e.value.check.passed


def test_index_out_of_range():
    doc = _doc()
    doc["hopf"]["mult"].append([0, 0, 5, 1])
    with pytest.raises(ParseError):
        parse_bundle(json.dumps(doc))


def test_unknown_command():
    with pytest.raises(UnsupportedCommand):
        run("integrate", fixture_bundle("kC2"))


def test_cli_exit_codes(capsys):
    assert main(["verify-thm312", "--fixture", "kC2", "--max-degree", "3"]) == 0
    assert main(["coext-verify", "--fixture", "kC2-trivial-coext"]) == 1
    out = capsys.readouterr().out
    assert "FAIL  canonical map is bijective" in out and '"rank": 2' in out
    assert main(["ext-verify", "--fixture", "kC2"]) == 2
    assert main(["check", str(DATA / "H4-ext.json")]) == 0


def test_cohomology_on_trivial_bundle(capsys):
    assert main(["cohomology", str(DATA / "k-coext.json"), "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    hc = [doc["ranks"]["hopf"][str(n)]["cyclic"] for n in range(3)]
    assert hc == [1, 0, 1]


def test_human_report_lists_each_identity_as_a_row():
    text = emit_report(run("coext-verify", fixture_bundle("H4")), "human")
    for item in ["(i) ", "(ii) ", "(iii) ", "(iv) ", "(v) ", "(vi) ", "(vii) "]:
        assert f"PASS  {item}" in text


def test_machine_report_is_deterministic_and_sparse():
    a = emit_report(run("coext-verify", fixture_bundle("H4/kC2-coext")), "machine")
    b = emit_report(run("coext-verify", fixture_bundle("H4/kC2-coext")), "machine")
    assert a == b
    doc = json.loads(a)
    assert doc["format_version"] == 1 and list(doc) == sorted(doc)
    failing = [c for c in doc["checks"] if not c["passed"]]
    assert failing and all(isinstance(x, list) and len(x) == 2 for x in failing[0]["witness"]["vector"])


def test_dualize_roundtrip_both_modes():
    assert run("dualize-roundtrip", fixture_bundle("kC2-ext"), 4).passed
    assert run("dualize-roundtrip", fixture_bundle("kC2-coext"), 4).passed


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(p.stem for p in FILES)), st.integers(1, 6))
def test_emit_parse_is_identity(stem, degree):
    b = parse_bundle((DATA / f"{stem}.json").read_text())
    b = dataclasses.replace(b, max_degree=degree)
    text = emit_bundle(b)
    assert emit_bundle(parse_bundle(text)) == text
