import json
import re
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import CORPUS
from qgt import io
from qgt.cli import main
from qgt.errors import ParseError
from qgt.hopf import cyclic_group_algebra
from qgt.series import XY, NCSeries

CORPUS_FILES = sorted(CORPUS.glob("*.json"))


@pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: p.stem)
def test_corpus_round_trip(path):
    text = path.read_text(encoding="utf-8")
    doc = io.loads(text)
    assert io.dumps(doc) == text
    assert io.loads(io.dumps(doc)) == doc


def test_scalars():
    assert io.parse_scalar("-3/4") == Fraction(-3, 4)
    assert io.parse_scalar("0") == 0
    assert io.format_scalar(Fraction(6, 3)) == "2"
    with pytest.raises(ParseError, match="not in lowest terms"):
        io.parse_scalar("2/4")
    with pytest.raises(ParseError, match="lowest terms"):
        io.parse_scalar("3/1")
    for bad in ("1/-2", "-0", "01", "1.5", " 1", "1/0", 1, None):
        with pytest.raises(ParseError):
            io.parse_scalar(bad)


@given(st.fractions(max_denominator=1000))
def test_scalar_round_trip(x):
    assert io.parse_scalar(io.format_scalar(x)) == x


def _z2_text():
    return (CORPUS / "z2_group_algebra.json").read_text()


def test_non_reduced_scalar_in_document_has_path():
    text = _z2_text().replace('"counit": ["1", "1"]', '"counit": ["1", "2/4"]')
    with pytest.raises(ParseError) as err:
        io.loads(text)
    assert err.value.path == "$.counit[1]" and "lowest terms" in str(err.value)


def test_wrong_arity_names_path():
    obj = json.loads(_z2_text())
    obj["mult"][1][0] = ["0", "1", "0"]
    with pytest.raises(ParseError) as err:
        io.loads(json.dumps(obj))
    assert err.value.path == "$.mult[1][0]"
    assert "arity" in str(err.value)


def test_syntax_error_has_line_and_column():
    text = _z2_text().replace('"kind": "hopf",', '"kind": "hopf"')
    with pytest.raises(ParseError) as err:
        io.loads(text)
    # the missing comma is detected at the next token
    assert (err.value.line, err.value.column) == (4, 3)


@pytest.mark.parametrize(
    "mutate, message",
    [
        (lambda o: o.update(format=2), "format"),
        (lambda o: o.pop("format"), "format"),
        (lambda o: o.update(kind="ring"), "unknown kind"),
        (lambda o: o.update(extra=1), "unknown field"),
        (lambda o: o.pop("comult"), "missing field"),
        (lambda o: o.update(labels=["e", "e"]), "distinct"),
        (lambda o: o["unit"].__setitem__(0, 1), "must be a string"),
    ],
)
def test_semantic_errors(mutate, message):
    obj = json.loads(_z2_text())
    mutate(obj)
    with pytest.raises(ParseError, match=message):
        io.loads(json.dumps(obj))


def test_float_literals_rejected():
    text = _z2_text().replace('"unit": ["1", "0"]', '"unit": [1.0, "0"]')
    with pytest.raises(ParseError, match="floating point"):
        io.loads(text)


def test_duplicate_keys_rejected():
    text = _z2_text().replace('"kind": "hopf",', '"kind": "hopf",\n  "kind": "hopf",')
    with pytest.raises(ParseError, match="duplicate"):
        io.loads(text)


def test_series_document_checks():
    base = {"format": 1, "kind": "series", "alphabet": ["X", "Y"], "truncation": 2}
    ok = dict(base, terms=[["1", "1"], ["1/2", "X.Y"]])
    assert io.loads(json.dumps(ok)).payload == NCSeries.from_text(XY, 2, {"1": 1, "X.Y": Fraction(1, 2)})
    for terms, message in (
        ([["0", "X"]], "zero"),
        ([["1", "X.Y.X"]], "exceeds truncation"),
        ([["1", "X"], ["2", "X"]], "duplicate"),
        ([["1", "Z"]], "unknown"),
    ):
        with pytest.raises(ParseError, match=message):
            io.loads(json.dumps(dict(base, terms=terms)))


def test_printer_sorts_series_terms():
    obj = {"format": 1, "kind": "series", "alphabet": ["X", "Y"], "truncation": 2, "terms": [["1", "Y.X"], ["1", "X"]]}
    text = io.dumps(io.loads(json.dumps(obj)))
    assert text.index('"X"]') < text.index('"Y.X"]')


def test_gt_element_must_be_grouplike():
    obj = {"format": 1, "kind": "gt-element", "lambda": "1",
           "f": {"alphabet": ["X", "Y"], "truncation": 2, "terms": [["1", "1"], ["1", "X.Y"]]}}
    with pytest.raises(ParseError):
        io.loads(json.dumps(obj))


def test_invalid_utf8(tmp_path):
    p = tmp_path / "bad.json"
    p.write_bytes(b'{"format": 1, "kind": "\xff"}')
    with pytest.raises(ParseError, match="UTF-8"):
        io.load(p)


def test_dump_load(tmp_path):
    doc = io.AlgebraDocument("hopf", cyclic_group_algebra(4))
    io.dump(doc, tmp_path / "z4.json")
    assert io.load(tmp_path / "z4.json") == doc


# command line


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def corpus(name):
    return str(CORPUS / f"{name}.json")


def test_cli_check_hopf_passes(capsys):
    code, out, _ = run(capsys, "check", "hopf", corpus("z2_group_algebra"))
    assert code == 0 and "fails" not in out


def test_cli_s3_diagonal_fails_with_witness(capsys):
    code, out, _ = run(capsys, "check", "trialgebra", corpus("s3_diagonal"))
    assert code == 1
    assert re.search(r"interchange: fails \(witness \w+, \w+, \w+, \w+\)", out)


def test_cli_solve_b4(capsys):
    code, out, _ = run(capsys, "hgt", "solve-b4", corpus("f_expX"), "--degree", "4")
    assert code == 0 and "unique solution; equals f" in out


def test_cli_json_contains_text_verdicts(capsys):
    code_t, text, _ = run(capsys, "check", "quadraalgebra", corpus("s3_quadraalgebra"))
    code_j, js, _ = run(capsys, "--report", "json", "check", "quadraalgebra", corpus("s3_quadraalgebra"))
    assert code_t == code_j == 1
    data = json.loads(js)
    assert data["exit_status"] == 1
    for report in data["reports"]:
        for check in report["checks"]:
            assert f"{check['name']}: {check['status']}" in text


def test_cli_deterministic(capsys):
    strip = lambda s: re.sub(r"time: .*", "", s)  # noqa: E731
    a = run(capsys, "--seed", "7", "gt", "solve", "--lambda", "1", "--degree", "3")
    b = run(capsys, "--seed", "7", "gt", "solve", "--lambda", "1", "--degree", "3")
    assert a[0] == b[0] == 0 and strip(a[1]) == strip(b[1])


def test_cli_gt(capsys):
    assert run(capsys, "gt", "check", corpus("gt_solved"), "--degree", "5")[0] == 0
    assert run(capsys, "gt", "check", corpus("gt_not_duality"), "--degree", "3")[0] == 1
    assert run(capsys, "gt", "solve", "--lambda", "3", "--degree", "4")[0] == 1
    assert run(capsys, "gt", "solve", "--lambda", "2/4", "--degree", "2")[0] == 2
    assert run(capsys, "--max-degree", "3", "gt", "solve", "--lambda", "1", "--degree", "4")[0] == 2
    assert run(capsys, "gt", "check", corpus("gt_solved"), "--degree", "9")[0] == 2


def test_cli_hgt_ihara_braid(capsys):
    assert run(capsys, "hgt", "check-b4", corpus("hgt_diagonal"))[0] == 0
    assert run(capsys, "hgt", "check-b4", corpus("hgt_mismatch"))[0] == 1
    code, out, _ = run(capsys, "ihara", "bracket", corpus("lie_xy"), corpus("lie_xxy"), "--degree", "5")
    assert code == 0 and "X.Y.X.X.Y" in out
    assert run(capsys, "ihara", "b5", corpus("lie_x"), corpus("lie_y"))[0] == 0
    assert run(capsys, "ihara", "b5", corpus("lie_x"), corpus("lie_y"), "--plain-bracket")[0] == 1
    assert run(capsys, "braid", "eq", "s1 s2 s1", "s2 s1 s2")[0] == 0
    assert run(capsys, "braid", "eq", "s1 s2", "s2 s1")[0] == 1
    assert run(capsys, "braid", "eq", "s1 s3", "s1")[0] == 2


def test_cli_double(capsys, tmp_path):
    out = tmp_path / "d.json"
    code, _, _ = run(capsys, "double", corpus("z3_group_algebra"), "-o", str(out))
    assert code == 0
    doc = io.load(out)
    assert doc.payload.dim == 9 and "r_matrix" in doc.extras
    assert run(capsys, "check", "hopf", str(out))[0] == 0


def test_cli_input_errors(capsys, tmp_path):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", "hopf")[0] == 2
    assert run(capsys, "--report", "xml", "check", "hopf", corpus("z2_group_algebra"))[0] == 2
    assert run(capsys, "check", "hopf", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "check", "trialgebra", corpus("z2_group_algebra"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "check", "hopf", str(bad))
    assert code == 2 and "line 1" in err


def test_format_doc_examples_parse():
    text = (CORPUS.parent / "docs" / "format.md").read_text()
    blocks = re.findall(r"```json\n(.*?)```", text, re.S)
    kinds = {io.loads(b).kind for b in blocks if '"labels"' in b or '"word"' in b or '"terms"' in b}
    assert kinds == set(io.KINDS) - {"quadraalgebra"}
