import json

import pytest

from qqschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_example(capsys):
    code, out, _ = run(capsys, "dims", "--r", "2", "--shape", "((1),(1))")
    assert code == 0
    rec = json.loads(out)["records"][0]
    assert (rec["dim_M"], rec["dim_S"], rec["dim_W"], rec["dim_F"]) == (4, 2, 6, 6)
    assert rec["params"] == {"kind": "generic"}


def test_hom_example(capsys):
    code, out, _ = run(capsys, "hom", "--r", "2", "--lambda", "((1),(1))", "--mu", "((1),(1))")
    assert code == 0
    rec = json.loads(out)["records"][0]
    assert rec["basis_size"] == 3 and rec["oracle_dim"] == 3 and rec["agree"]


def test_verify_example(capsys):
    code, out, _ = run(capsys, "verify", "hecke-relations", "--r", "3", "--format", "text")
    assert code == 0
    assert out.startswith("hecke-relations: PASS")


def test_verify_via_suite_flag(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gram-identity", "--r", "2")
    assert code == 0 and json.loads(out)["passed"]


def test_output_is_deterministic(capsys):
    outs = [run(capsys, "dims", "--r", "2", "--q", "-1", "--Q", "-1", "--format", "csv")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert outs[0].splitlines()[0] == "shape,dim_M,dim_S,dim_W,dim_F"


def test_jobs_do_not_change_output(capsys):
    a = run(capsys, "hom", "--r", "1", "--format", "json")[1]
    b = run(capsys, "hom", "--r", "1", "--format", "json", "--jobs", "2")[1]
    assert a == b


def test_shapes_and_tableaux(capsys):
    code, out, _ = run(capsys, "shapes", "--r", "2", "--bipartitions", "--format", "text")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "tableaux", "--lambda", "((1),(1))", "--mu", "((1),(1))", "--format", "text")
    assert out.strip() == "([[1]];[[3]])"


def test_gram_csv(capsys):
    code, out, _ = run(capsys, "gram", "--shape", "((1),(1))", "--format", "csv")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 7


@pytest.mark.parametrize("argv", [
    ["dims", "--r", "7"],
    ["dims", "--r", "2", "--q", "0"],
    ["dims", "--r", "2", "--char", "4"],
    ["hom", "--lambda", "((1),(1))"],
    ["gram", "--shape", "((1,2),())"],
    ["verify", "no-such-suite"],
    ["tableaux", "--lambda", "((1),(1))", "--mu", "((1),())"],
])
def test_invalid_config_exits_nonzero(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_large_r_needs_override(capsys):
    code, _, err = run(capsys, "shapes", "--r", "6", "--allow-large", "--format", "text")
    assert code == 0
    assert "note:" in err
