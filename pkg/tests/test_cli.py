import json

import pytest

from qimm.cli import main, parse_q_grid, parse_tree_spec
from qimm.trees import path_tree, star_tree


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tree_spec_parsing(tmp_path):
    assert parse_tree_spec("path:4") == path_tree(4)
    assert parse_tree_spec("star:5") == star_tree(5)
    assert parse_tree_spec("pruefer:1,1") == star_tree(4)
    f = tmp_path / "t.txt"
    f.write_text("3\n1 2\n2 3\n")
    assert parse_tree_spec(f"file:{f}") == path_tree(3)
    with pytest.raises(ValueError):
        parse_tree_spec("ring:4")


def test_q_grid_parsing():
    grid = parse_q_grid("-1:1:1/2")
    assert [str(q) for q in grid] == ["-1", "-1/2", "0", "1/2", "1"]
    with pytest.raises(ValueError):
        parse_q_grid("1:0:1")


def test_alpha_table_csv(capsys):
    code, out, _ = run_cli(capsys, "alpha-table", "6", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert rows[0] == ["i\\k", "0", "1", "2", "3"]
    assert rows[1][1:] == ["1", "5", "9", "5"]
    assert rows[4][1:] == ["1", "2", "3", "1"]


def test_alpha_table_json(capsys):
    code, out, _ = run_cli(capsys, "alpha-table", "8", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["entries"][4] == ["1", "3", "6", "6", "3"]


def test_last_table_text(capsys):
    code, out, _ = run_cli(capsys, "last-table", "9")
    assert code == 0
    assert "603" in out and "232" in out


def test_char_command(capsys):
    code, out, _ = run_cli(capsys, "char", "2,2", "2,2")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run_cli(capsys, "char", "1,1,1", "3", "--format", "json")
    assert json.loads(out)["value"] == "1"


def test_immanant_command_matches_published_form(capsys):
    code, out, _ = run_cli(
        capsys, "immanant", "--tree", "path:4", "--shape", "3,1",
        "--normalized",
    )
    assert code == 0
    assert out.strip() == "1 + 3q^2 + 4/3 q^4"


def test_immanant_bruteforce_agrees(capsys):
    _, matching, _ = run_cli(
        capsys, "immanant", "--tree", "star:5", "--shape", "3,2",
        "--normalized", "--format", "json",
    )
    _, brute, _ = run_cli(
        capsys, "immanant", "--tree", "star:5", "--shape", "3,2",
        "--normalized", "--algorithm", "bruteforce", "--format", "json",
    )
    assert json.loads(matching)["coeffs"] == json.loads(brute)["coeffs"]


def test_a_coeffs_command(capsys):
    code, out, _ = run_cli(capsys, "a-coeffs", "--tree", "path:2")
    assert code == 0
    assert out.splitlines() == ["a_0 = 1 - q^2", "a_1 = q^2"]


def test_verify_single_tree_exit_codes(capsys):
    # P_4 fails outside the asserted range: reported, exit 0
    code, out, _ = run_cli(capsys, "verify", "two-row", "--tree", "path:4")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    summary = lines[-1]["summary"]
    assert summary["violations_reported_unasserted"] == 1
    k2 = [
        v for v in lines[:-1] if v["claim"] == "thm2" and v["params"]["k"] == 2
    ]
    assert k2[0]["holds"] is False

    code, out, _ = run_cli(capsys, "verify", "two-row", "--tree", "star:4")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert all(v["holds"] for v in lines[:-1])


def test_verify_hook_single_tree(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "hook", "--tree", "path:5", "--q-grid=-2:2:1/2",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    claims = {v["claim"] for v in lines[:-1]}
    assert claims == {"thm1-weak", "thm1-strong"}


def test_verify_tree_flag_rejected_elsewhere(capsys):
    code, _, err = run_cli(capsys, "verify", "paths", "--tree", "path:4")
    assert code == 2
    assert "tree" in err


def test_verify_identities_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "identities")
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])["summary"]
    assert summary["all_ok"] and summary["failed_asserted"] == 0


def test_verify_alpha_ratios_reports_degenerate(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "alpha-ratios", "--alpha-n-max", "8",
        "--l-max", "8",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    lem9_l2 = [
        v for v in lines[:-1]
        if v["claim"] == "lem9" and v["params"] == {"l": 2, "k": 1}
    ]
    assert lem9_l2[0]["degenerate"] is True


def test_verify_output_deterministic(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QIMM_OUT_DIR", str(tmp_path))
    code1 = main(["verify", "identities", "--out", "a.jsonl"])
    code2 = main(["verify", "identities", "--out", "b.jsonl"])
    assert code1 == code2 == 0
    assert (tmp_path / "a.jsonl").read_bytes() == (
        tmp_path / "b.jsonl"
    ).read_bytes()


def test_verify_all_covers_every_claim(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "all", "--n-max", "5", "--hook-n-max", "5",
        "--oracle-n-max", "4", "--alpha-n-max", "10", "--l-max", "10",
        "--sr-max", "2", "--sr-l-max", "4",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    claims = {v["claim"] for v in lines[:-1]}
    assert claims == {
        "thm1-weak", "thm1-strong", "thm2", "lem6", "lem9", "cor10",
        "lem11", "lem13", "rem12", "lem15-bij", "lem16-bij", "lem17-conv",
        "lem18", "lem19", "lem20", "lem21", "lem22", "rem20",
        "a0-identity", "oracle-equivalence",
    }
    assert lines[-1]["summary"]["all_ok"]


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "alpha-table", "0")
    assert code == 2 and "error" in err
    code, _, err = run_cli(
        capsys, "immanant", "--tree", "path:12", "--shape", "12",
        "--algorithm", "bruteforce",
    )
    assert code == 2 and "capped" in err


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "general-sr", "--sr-max", "2", "--sr-l-max", "4",
        "--format", "csv",
    )
    assert code == 0
    header = out.splitlines()[0].split(",")
    assert header == [
        "claim", "params", "holds", "degenerate", "asserted", "witness",
        "detail",
    ]
