import json

import pytest

from bsnet.main import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_parse_range():
    assert parse_range("5") == [5]
    assert parse_range("3..6") == [3, 4, 5, 6]


def test_pi3_table(capsys):
    code, out = run(capsys, "pi3", "--n", "3..8")
    assert code == EXIT_OK
    header, *rows = out.out.strip().splitlines()
    assert header.split("\t") == ["n", "pi3", "cmax", "bound"]
    table = [row.split("\t") for row in rows]
    assert [int(r[1]) for r in table] == [1, 3, 4, 6, 7, 9]
    assert all(r[2] == "3" and r[1] == r[3] for r in table)


def test_generate_edges(capsys):
    code, out = run(capsys, "generate", "--n", "3", "--format", "edges")
    assert code == EXIT_OK
    assert len(out.out.splitlines()) == 9
    assert out.out.splitlines()[0] == "123 132"


def test_generate_json(tmp_path):
    target = tmp_path / "bs4.json"
    assert main(["generate", "--n", "4", "--format", "json", "--out", str(target)]) == EXIT_OK
    document = json.loads(target.read_text())
    assert document["n"] == 4
    assert len(document["vertices"]) == 24
    assert len(document["edges"]) == 60


def test_witness_then_verify(tmp_path, capsys):
    target = tmp_path / "w5.json"
    code, _ = run(capsys, "witness", "--n", "5", "--terminals", "12345", "21345", "13245", "--out", str(target))
    assert code == EXIT_OK
    document = json.loads(target.read_text())
    assert document["verified"] is True
    assert document["formula"] == 4
    assert len(document["t_paths"]) == 4
    assert document["terminals"] == ["12345", "21345", "13245"]
    assert len(document["web"]["spares"]) == 2

    code, out = run(capsys, "verify", "--file", str(target))
    assert code == EXIT_OK
    assert out.out.startswith("PASS n=5")


def test_witness_is_byte_identical(tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for target in (first, second):
        code, _ = run(capsys, "witness", "--n", "4", "--terminals", "1234", "2143", "3412", "--out", str(target))
        assert code == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_witness_from_seed(capsys):
    code, out = run(capsys, "witness", "--n", "4", "--seed", "3")
    assert code == EXIT_OK
    assert json.loads(out.out)["verified"] is True


def test_tampered_witness_fails(tmp_path, capsys):
    target = tmp_path / "w4.json"
    run(capsys, "witness", "--n", "4", "--terminals", "1234", "2143", "3412", "--out", str(target))
    document = json.loads(target.read_text())
    document["t_paths"][0][1] = "4321"
    target.write_text(json.dumps(document))
    code, out = run(capsys, "verify", "--file", str(target))
    assert code == EXIT_FAILED
    assert out.out.startswith("FAIL")


def test_malformed_witness_fails(tmp_path, capsys):
    target = tmp_path / "bad.json"
    target.write_text("{}")
    code, out = run(capsys, "verify", "--file", str(target))
    assert code == EXIT_FAILED
    assert "malformed" in out.out


def test_verify_rejects_terminals_that_disagree_with_roles(tmp_path, capsys):
    target = tmp_path / "w4.json"
    run(capsys, "witness", "--n", "4", "--terminals", "1234", "2143", "3412", "--out", str(target))
    document = json.loads(target.read_text())
    document["terminals"] = ["4321", "4312", "3421"]
    target.write_text(json.dumps(document))
    code, out = run(capsys, "verify", "--file", str(target))
    assert code == EXIT_FAILED
    assert "do not match roles" in out.out


def test_verify_rejects_unverified_witness(tmp_path, capsys):
    target = tmp_path / "w4.json"
    run(capsys, "witness", "--n", "4", "--terminals", "1234", "2143", "3412", "--out", str(target))
    document = json.loads(target.read_text())
    document["verified"] = False
    target.write_text(json.dumps(document))
    code, out = run(capsys, "verify", "--file", str(target))
    assert code == EXIT_FAILED
    assert "unverified" in out.out


def test_verify_missing_file(tmp_path, capsys):
    code, out = run(capsys, "verify", "--file", str(tmp_path / "absent.json"))
    assert code == EXIT_FAILED
    assert out.out.startswith("FAIL cannot read")


def test_verify_dimension_mismatch(tmp_path, capsys):
    target = tmp_path / "w4.json"
    run(capsys, "witness", "--n", "4", "--terminals", "1234", "2143", "3412", "--out", str(target))
    code, _ = run(capsys, "verify", "--file", str(target), "--n", "5")
    assert code == EXIT_FAILED


def test_oracle(capsys):
    code, out = run(capsys, "oracle", "--n", "3", "--terminals", "123", "231", "312")
    assert code == EXIT_OK
    result = json.loads(out.out)
    assert result["value"] == 1 and result["exact"] is True


def test_oracle_budget(capsys):
    code, out = run(capsys, "--budget", "1", "oracle", "--n", "4", "--terminals", "1234", "2143", "3412")
    assert code == EXIT_BUDGET
    assert out.out.startswith("BUDGET")


def test_audit(capsys):
    code, out = run(capsys, "audit", "--n", "3")
    assert code == EXIT_OK
    assert all(line.startswith("PASS") for line in out.out.splitlines())


def test_bench(capsys):
    code, out = run(capsys, "bench", "--n", "3..4")
    assert code == EXIT_OK
    rows = out.out.strip().splitlines()[1:]
    assert [row.split("\t")[0] for row in rows] == ["3", "4"]
    assert all(row.endswith("True") for row in rows)


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "--n", "2"],
        ["generate", "--n", "10"],
        ["witness", "--n", "4"],
        ["witness", "--n", "4", "--terminals", "1234", "1234", "2134"],
        ["witness", "--n", "4", "--terminals", "1234", "2134", "12"],
        ["oracle", "--n", "5", "--terminals", "12345", "21345", "12354"],
        ["--samples", "0", "pi3", "--n", "5"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


@pytest.mark.parametrize("argv", [["witness"], ["pi3", "--n", "2..9"], ["nonsense"]])
def test_argument_errors_exit_with_usage_code(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == EXIT_USAGE
