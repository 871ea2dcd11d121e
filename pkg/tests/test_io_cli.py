import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from cocover import GF, QQ, io
from cocover.algebra import matrix_algebra, path_algebra, triangular_example_algebra
from cocover.cli import RunConfig, family_coalgebra, main
from cocover.coalgebra import coalgebra_equal_entrywise, dual_algebra
from cocover.errors import ParseError, UsageError

from corpus import AB, corpus_coalgebras

HERE = Path(__file__).parent
DATA, GOLDEN = HERE / "data", HERE / "golden"

GOLDEN_RUNS = {
    "build_ab.json": ["build", "--quiver", str(DATA / "ab.qv")],
    "build_matrix2.json": ["build", "--family", "matrix:2"],
    "build_dp3_f2.json": ["build", "--family", "dividedpower:3", "--field", "fp:2"],
    "cover_ab.json": ["cover", "--quiver", str(DATA / "ab.qv")],
    "cover_double.json": ["cover", "--quiver", str(DATA / "double.qv")],
    "cover_matrix2.json": ["cover", "--family", "matrix:2"],
    "cover_dp4.json": ["cover", "--family", "dividedpower:4"],
    "report_ab.json": ["report", "--quiver", str(DATA / "ab.qv")],
    "report_matrix2.json": ["report", "--family", "matrix:2"],
    "report_dp3.json": ["report", "--family", "dividedpower:3"],
    "report_triangular.json": ["report", "--family", "triangular"],
    "verify_triangular.json": ["verify", "--family", "triangular"],
    "verify_grouplike3.json": ["verify", "--family", "grouplike:3"],
}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("golden", list(GOLDEN_RUNS))
def test_golden_files(golden, tmp_path, capsys):
    target = tmp_path / golden
    code, _, _ = run(GOLDEN_RUNS[golden] + ["-o", str(target)], capsys)
    assert code == (3 if golden == "verify_triangular.json" else 0)
    assert target.read_bytes() == (GOLDEN / golden).read_bytes()


def test_json_output_is_byte_deterministic(capsys):
    argv = ["cover", "--quiver", str(DATA / "double.qv"), "--json"]
    first = run(argv, capsys)[1]
    assert first == run(argv, capsys)[1]
    assert first == (GOLDEN / "cover_double.json").read_text()


def test_build_examples(capsys):
    code, out, err = run(["build", "--quiver", str(DATA / "ab.qv"), "--field", "q"], capsys)
    assert code == 0 and "dim 3 over QQ" in err and "validation ok" in err
    assert json.loads(out)["labels"] == ["v_a", "v_b", "x"]
    assert "dim 4" in run(["build", "--family", "matrix:2"], capsys)[2]
    code, _, err = run(["build", "--family", "dividedpower:3", "--field", "fp:2"], capsys)
    assert code == 0 and "dim 3 over GF(2)" in err


def test_report_examples(capsys):
    code, out, _ = run(["report", "--quiver", str(DATA / "ab.qv"), "--no-cover"], capsys)
    assert code == 0
    assert "non_singular: true" in out and "hereditary: true" in out and "cosemisimple: false" in out
    out = run(["report", "--family", "matrix:2", "--json"], capsys)[1]
    values = json.loads(out)["values"]
    assert all(values[k] for k in ("non_singular", "cosemisimple", "hereditary", "coprime_simple"))
    out = run(["report", "--family", "dividedpower:3", "--no-cover"], capsys)[1]
    assert "non_singular: false" in out


def test_cover_examples(capsys):
    payload = json.loads(run(["cover", "--quiver", str(DATA / "ab.qv"), "--json"], capsys)[1])
    assert len(payload["D"]["labels"]) == 4 and len(payload["kernel_basis"]) == 1
    assert payload["flags"]["kernel_small"] and payload["flags"]["codense"]
    for fam in ("matrix:3", "dividedpower:4"):
        payload = json.loads(run(["cover", "--family", fam, "--json"], capsys)[1])
        assert payload["kernel_basis"] == []


def test_build_output_feeds_report_and_cover(tmp_path, capsys):
    built = tmp_path / "ab.json"
    assert run(["build", "--quiver", str(DATA / "ab.qv"), "-o", str(built)], capsys)[0] == 0
    cover = json.loads(run(["cover", str(built), "--json"], capsys)[1])
    assert cover == json.loads((GOLDEN / "cover_ab.json").read_text())
    assert run(["report", str(built), "--no-cover"], capsys)[0] == 0


def test_verify_oracle(capsys):
    code, out, _ = run(["verify", "--family", "dividedpower:3", "--field", "fp:2", "--oracle"], capsys)
    assert code == 0 and "oracle: ok" in out


@pytest.mark.parametrize("argv, expected", [
    (["build"], 1),
    (["build", "--family", "nosuch:2"], 1),
    (["build", "--family", "matrix:x"], 1),
    (["build", "--family", "matrix:2", "--field", "fp:4"], 1),
    (["verify", "--family", "matrix:2", "--oracle"], 1),
    (["frobnicate"], 1),
    (["build", "no/such/file.json"], 1),
    (["report", "--family", "triangular", "--no-cover"], 0),
    (["verify", "--family", "triangular"], 3),
])
def test_exit_codes(argv, expected, capsys):
    assert run(argv, capsys)[0] == expected


def test_precondition_exit_code(tmp_path, capsys):
    from cocover.algebra import algebra_from_matrices, dual_coalgebra_of_algebra
    from cocover.linalg import Mat
    f2 = GF(2)
    f4 = algebra_from_matrices(f2, [Mat.identity(f2, 2), Mat(f2, [[0, 1], [1, 1]])])
    path = tmp_path / "f4.json"
    path.write_text(io.dumps(io.coalgebra_to_json(dual_coalgebra_of_algebra(f4))))
    code, _, err = run(["cover", str(path)], capsys)
    assert code == 2 and "NonSplit" in err


def test_parse_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": "q",\n "labels": [}')
    code, _, err = run(["report", str(bad)], capsys)
    assert code == 1 and "ParseError" in err
    with pytest.raises(ParseError) as info:
        io.loads('{"field": "q",\n "labels": [}')
    assert info.value.line == 2
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({"field": "q", "labels": ["g"], "delta": [[0, 0, 0, "1"]],
                                  "eps": ["2"]}))
    assert run(["report", str(broken)], capsys)[0] == 1


def test_run_config_invariants():
    with pytest.raises(UsageError):
        RunConfig("verify", family="matrix:1", field=QQ, oracle=True)
    assert RunConfig("verify", family="matrix:1", field=GF(3), oracle=True).oracle


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cocover", "build", "--family", "matrix:1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and '"labels": ["E11"]' in proc.stdout


@pytest.mark.parametrize("name", list(corpus_coalgebras()))
def test_coalgebra_json_round_trip(name):
    c = corpus_coalgebras()[name]
    back = io.coalgebra_from_json(io.loads(io.dumps(io.coalgebra_to_json(c))))
    assert coalgebra_equal_entrywise(back, c) and back.labels == c.labels


@pytest.mark.parametrize("a", [path_algebra(AB), matrix_algebra(GF(3), 2), triangular_example_algebra()],
                         ids=["ab", "M2 mod 3", "triangular"])
def test_algebra_json_round_trip(a):
    back = io.algebra_from_json(io.loads(io.dumps(io.algebra_to_json(a))))
    assert back == a


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["matrix:1", "matrix:2", "dividedpower:2", "dividedpower:5", "grouplike:2",
                        "triangular"]),
       st.sampled_from([QQ, GF(2), GF(3)]))
def test_family_round_trip_property(spec, field):
    c = family_coalgebra(spec, field)
    text = io.dumps(io.coalgebra_to_json(c))
    again = io.coalgebra_from_json(io.loads(text))
    assert io.dumps(io.coalgebra_to_json(again)) == text
    assert dual_algebra(again).dim == c.dim
