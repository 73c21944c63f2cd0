"""End-to-end checks of the command-line front end."""

import json
import re
import shutil
import subprocess

import pytest

from rimhook.cli import main
from rimhook.involution import RootedTableau, inner_involution, trace_to_json
from rimhook.symfunc import inverse_kostka_matrix, kostka_matrix, PartitionMatrix

from conftest import FIXTURES, load_fixture

EXAMPLE_POSET = str(FIXTURES / "example.poset")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ------------------------------------------------------------- matrices


def test_kostka_matrix_text(capsys):
    code, out, err = run_cli(capsys, "kostka", "--n", "2")
    assert code == 0 and err == ""
    assert out.rstrip("\n") == kostka_matrix(2).to_csv().rstrip("\n")


def test_kostka_matrix_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "kostka", "--n", "3", "--format", "json")
    assert code == 0
    assert PartitionMatrix.from_json(json.loads(out)) == kostka_matrix(3)


def test_kostka_single_entry(capsys):
    code, out, _ = run_cli(capsys, "kostka", "--shape", "[2,1]", "--content", "[1,1,1]")
    assert code == 0
    assert out.strip() == "2"


def test_inv_kostka_matrix_json(capsys):
    code, out, _ = run_cli(capsys, "inv-kostka", "--n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == inverse_kostka_matrix(4).to_json()


def test_inv_kostka_single_entry(capsys):
    code, out, _ = run_cli(
        capsys, "inv-kostka", "--shape", "[3,2,2,1,1]", "--type", "[4,4,1]"
    )
    assert code == 0
    assert out.strip() == "-2"


def test_matrix_commands_need_n_or_entry_flags(capsys):
    code, _, err = run_cli(capsys, "kostka")
    assert code == 1
    assert err.startswith("error:")


def test_verify_reports_identities(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "3", "--format", "text")
    assert code == 0
    assert "K . K^-1 = I: True" in out
    assert "K^-1 . K = I: True" in out
    code, out, _ = run_cli(capsys, "verify", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["left_identity"] and data["right_identity"]
    assert data["involution_consistent"]


# ------------------------------------------------------ pair involution


def test_involve_round_trip_through_files(capsys, tmp_path):
    fx = load_fixture("opening_pair.json")
    pair_file = tmp_path / "pair.json"
    pair_file.write_text(json.dumps(fx["input"]))
    code, out, _ = run_cli(capsys, "involve", "--pair", str(pair_file), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["output"]["tableau"] == fx["expected"]["tableau"]
    assert data["output"]["filling"] == fx["expected"]["filling"]
    assert data["output"]["sign"] == -data["input"]["sign"]


def test_involve_text_shows_signs(capsys, tmp_path):
    fx = load_fixture("opening_pair.json")
    pair_file = tmp_path / "pair.json"
    pair_file.write_text(json.dumps(fx["input"]))
    code, out, _ = run_cli(capsys, "involve", "--pair", str(pair_file))
    assert code == 0
    assert "input  (sign +1):" in out
    assert "output (sign -1):" in out


def test_involve_rejects_the_all_singleton_pair(capsys, tmp_path):
    pair_file = tmp_path / "pair.json"
    pair_file.write_text(
        json.dumps(
            {
                "tableau": {"shape": [1, 1], "hooks": [[[1, 1]], [[2, 1]]]},
                "filling": {"shape": [1, 1], "rows": [[1], [2]]},
            }
        )
    )
    code, _, err = run_cli(capsys, "involve", "--pair", str(pair_file))
    assert code == 1
    assert err.startswith("error:")


# --------------------------------------------------------------- traces


def test_trace_from_input_file(capsys, tmp_path):
    fx = load_fixture("six_step_state.json")
    state_file = tmp_path / "state.json"
    state_file.write_text(json.dumps(fx["initial"]))
    code, out, _ = run_cli(capsys, "trace", "--input", str(state_file), "--format", "json")
    assert code == 0
    start = RootedTableau.from_json(fx["initial"])
    _, trace = inner_involution(start)
    assert json.loads(out) == trace_to_json(trace)


def test_trace_text_labels_and_sign_line(capsys, tmp_path):
    fx = load_fixture("six_step_state.json")
    state_file = tmp_path / "state.json"
    state_file.write_text(json.dumps(fx["initial"]))
    code, out, _ = run_cli(capsys, "trace", "--input", str(state_file))
    assert code == 0
    labels = re.findall(r"step \d+  \[(.+)\]", out)
    assert labels == [
        "HE (HH)",
        "SI (SI)",
        "CO (CI)",
        "HE (HV)",
        "TH (TH)",
        "TV (TV)",
        "terminal",
    ]
    assert out.rstrip("\n").endswith("sign -1 -> +1")


def test_trace_from_shape_type_root(capsys):
    code, out, _ = run_cli(
        capsys,
        "trace",
        "--shape", "[2,1,1]",
        "--type", "[2,2]",
        "--root", "3,1",
        "--format", "json",
    )
    assert code == 0
    steps = json.loads(out)
    assert [s["class"] for s in steps[:-1]] == ["TV"]
    assert steps[-1]["tableau"]["shape"] == [2, 2]


def test_trace_index_out_of_range(capsys):
    code, _, err = run_cli(
        capsys,
        "trace",
        "--shape", "[2,1,1]",
        "--type", "[2,2]",
        "--root", "3,1",
        "--index", "5",
    )
    assert code == 1
    assert "out of range" in err


def test_trace_needs_a_source(capsys):
    code, _, err = run_cli(capsys, "trace")
    assert code == 1
    assert err.startswith("error:")


# --------------------------------------------------------------- posets


def test_csf_text_is_the_expansion(capsys):
    code, out, _ = run_cli(capsys, "csf", "--poset", EXAMPLE_POSET)
    assert code == 0
    assert out.strip() == "4 e[4] + 2 e[3,1] + 2 e[2,2]"


def test_csf_json_carries_both_bases(capsys):
    code, out, _ = run_cli(capsys, "csf", "--poset", EXAMPLE_POSET, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["e"]["coeffs"] == {"[4]": 4, "[3,1]": 2, "[2,2]": 2}
    assert data["s"]["coeffs"] == {"[1,1,1,1]": 8, "[2,1,1]": 4, "[2,2]": 2}
    assert data["census"]["total_pairs"] == 20


def test_csf_rejects_forbidden_order(capsys, tmp_path):
    bad = tmp_path / "bad.poset"
    bad.write_text("a < b < c\nd\n")
    code, _, err = run_cli(capsys, "csf", "--poset", str(bad))
    assert code == 1
    assert err.startswith("error:")


def test_ss_involution_text(capsys):
    code, out, _ = run_cli(capsys, "ss-involution", "--poset", EXAMPLE_POSET)
    assert code == 0
    assert out.splitlines() == [
        "pairs: 20",
        "matched 2-cycles: 6",
        "fixed points: 8",
        "  shape [2,2]: 2",
        "  shape [3,1]: 2",
        "  shape [4]: 4",
        "coefficients: 4 e[4] + 2 e[3,1] + 2 e[2,2]",
    ]


def test_ab_free_defaults_and_flags(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "ab-free", "--poset", EXAMPLE_POSET)
    assert code == 0 and out.strip() == "true"
    bad = tmp_path / "bad.poset"
    bad.write_text("a < b < c\nd\n")
    code, out, _ = run_cli(capsys, "ab-free", "--poset", str(bad))
    assert code == 0 and out.strip() == "false"
    pairs = tmp_path / "pairs.poset"
    pairs.write_text("a < b\nc < d\n")
    code, out, _ = run_cli(capsys, "ab-free", "--poset", str(pairs))
    assert code == 0 and out.strip() == "true"
    code, out, _ = run_cli(capsys, "ab-free", "--poset", str(pairs), "--a", "2", "--b", "2")
    assert code == 0 and out.strip() == "false"


# --------------------------------------------------------------- corpus


def test_corpus_sweep_passes_and_is_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "corpus", "--max-elements", "3")
    code2, out2, _ = run_cli(capsys, "corpus", "--max-elements", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "total (3+1)-free posets: 8" in out1
    assert out1.rstrip("\n").endswith("all checks passed")


def test_corpus_seed_changes_order_not_results(capsys):
    code, plain, _ = run_cli(capsys, "corpus", "--max-elements", "3")
    code1, seeded1, _ = run_cli(capsys, "corpus", "--max-elements", "3", "--seed", "7")
    code2, seeded2, _ = run_cli(capsys, "corpus", "--max-elements", "3", "--seed", "7")
    assert code == code1 == code2 == 0
    assert seeded1 == seeded2 == plain


def test_corpus_json_rows(capsys):
    code, out, _ = run_cli(capsys, "corpus", "--max-elements", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [1, 2, 3]
    assert [r["posets"] for r in rows] == [1, 2, 5]
    assert all(r["failures"] == 0 for r in rows)


# ----------------------------------------------------------- exit codes


def test_parse_errors_exit_2(capsys):
    assert run_cli(capsys)[0] == 2
    assert run_cli(capsys, "kostka", "--bogus")[0] == 2
    assert run_cli(capsys, "verify")[0] == 2
    assert run_cli(capsys, "no-such-command")[0] == 2


def test_missing_file_exits_1(capsys):
    code, _, err = run_cli(capsys, "csf", "--poset", "/no/such/file.poset")
    assert code == 1
    assert err.startswith("error:")


def test_bad_partition_exits_1(capsys):
    code, _, err = run_cli(capsys, "kostka", "--shape", "[1,2]", "--content", "[1,1,1]")
    assert code == 1
    assert err.startswith("error:")


# ------------------------------------------------------ installed binary


def test_console_script_smoke():
    exe = shutil.which("rimhook")
    assert exe, "console script not installed"
    proc = subprocess.run(
        [exe, "csf", "--poset", EXAMPLE_POSET],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "4 e[4] + 2 e[3,1] + 2 e[2,2]"
