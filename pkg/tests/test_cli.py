"""Command-line interface: flags, formats, exit codes."""

from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from rootdec.cli import RunConfig, load_config_file, main

GOLDEN = Path(__file__).parent / "golden" / "rays_reference.csv"

TRIPLE = "5 3 4 8 1 2 6 7; 4 5 6 1 7 8 3 2; 1 3 2 4 6 5 7 8"


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# configuration


def test_run_config_defaults_and_validation():
    config = RunConfig(command="count")
    assert config.brute_force_bound == 8
    assert config.series_order == 40
    assert config.threads == 1
    with pytest.raises(ValueError, match="output format"):
        RunConfig(command="count", output_format="xml")
    with pytest.raises(ValueError, match="positive"):
        RunConfig(command="count", brute_force_bound=0)
    with pytest.raises(ValueError, match="positive"):
        RunConfig(command="count", threads=0)
    with pytest.raises(ValueError, match="nonempty"):
        RunConfig(command="")


def test_load_config_file(tmp_path):
    path = tmp_path / "rootdec.conf"
    path.write_text("# comment\nbrute_force_bound = 6\n\nseries_order=12 # inline\n")
    assert load_config_file(str(path)) == {
        "brute_force_bound": 6,
        "series_order": 12,
    }


def test_load_config_file_rejects_bad_input(tmp_path):
    path = tmp_path / "bad.conf"
    path.write_text("unknown_key = 3\n")
    with pytest.raises(ValueError, match="unknown setting"):
        load_config_file(str(path))
    path.write_text("brute_force_bound\n")
    with pytest.raises(ValueError, match="key = value"):
        load_config_file(str(path))
    path.write_text("series_order = -2\n")
    with pytest.raises(ValueError, match="positive integer"):
        load_config_file(str(path))
    with pytest.raises(ValueError, match="cannot read"):
        load_config_file(str(tmp_path / "missing.conf"))


def test_config_file_lowers_the_enumeration_bound(capsys, tmp_path):
    path = tmp_path / "rootdec.conf"
    path.write_text("brute_force_bound = 6\n")
    code, _, err = run(
        capsys, "--config", str(path), "enumerate", "--n", "7"
    )
    assert code == 1
    assert "exceeds the brute-force bound 6" in err


def test_config_file_sets_default_series_order(capsys, tmp_path):
    path = tmp_path / "rootdec.conf"
    path.write_text("series_order = 12\n")
    code, out, _ = run(capsys, "--config", str(path), "series", "--which", "B")
    assert code == 0
    assert out.splitlines()[-1] == "B n=12: 552096640341"


def test_threads_env_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("ROOTDEC_THREADS", "chaos")
    code, _, err = run(capsys, "count", "--family", "A_MAXIMAL", "--max-n", "3")
    assert code == 2
    assert "ROOTDEC_THREADS" in err
    monkeypatch.setenv("ROOTDEC_THREADS", "4")
    code, out, _ = run(capsys, "count", "--family", "A_MAXIMAL", "--max-n", "3")
    assert code == 0
    assert out.splitlines() == [
        "A_MAXIMAL n=1: 1",
        "A_MAXIMAL n=2: 1",
        "A_MAXIMAL n=3: 2",
    ]


def test_no_command_is_a_usage_error(capsys):
    code, _, err = run(capsys)
    assert code == 2
    assert "command is required" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_valid_triple(capsys):
    code, out, _ = run(capsys, "verify", "--perms", TRIPLE)
    assert code == 0
    assert "valid decomposition of the degree-8 positive system" in out
    assert "simple form (2,4,1,3)[(3,1,2),(1),(1,2),(1,2)]" in out
    assert out.count("part ") == 3


def test_verify_overlap_names_the_root(capsys):
    code, out, _ = run(capsys, "verify", "--perms", "2 1 3; 2 1 3")
    assert code == 1
    assert "root (1, 2) covered by parts 1 and 2" in out


def test_verify_rejects_malformed_and_mixed_input(capsys):
    code, _, err = run(capsys, "verify", "--perms", "2 1; banana")
    assert code == 2
    assert "cannot parse" in err
    code, _, err = run(capsys, "verify", "--perms", "2 1; 1 3 2")
    assert code == 2
    assert "share one degree" in err
    code, _, err = run(capsys, "verify", "--perms", " ; ")
    assert code == 2


def test_verify_strict_no_identity(capsys):
    code, out, _ = run(capsys, "verify", "--perms", "1 2; 2 1")
    assert code == 0
    code, out, _ = run(
        capsys, "verify", "--strict-no-identity", "--perms", "1 2; 2 1"
    )
    assert code == 1
    assert "part 1 is the identity" in out


def test_verify_type_b_single_part(capsys):
    code, out, _ = run(capsys, "verify", "--type", "B", "--perms", "-1")
    assert code == 0
    assert "valid decomposition of the rank-1 type-B positive system" in out


def test_verify_type_b_overlap_diagnostic(capsys):
    code, out, _ = run(capsys, "verify", "--type", "B", "--perms", "-1; -1")
    assert code == 1
    assert "root e1 covered by parts 1 and 2" in out


def test_verify_type_c_identity_padding(capsys):
    code, out, _ = run(capsys, "verify", "--type", "C", "--perms", "-1 -2; 1 2")
    assert code == 0
    code, out, _ = run(
        capsys, "verify", "--type", "C", "--strict-no-identity",
        "--perms", "-1 -2; 1 2",
    )
    assert code == 1
    assert "part 2 is the identity" in out


def test_verify_csv_report_round_trips(capsys):
    code, out, _ = run(capsys, "verify", "--format", "csv", "--perms", TRIPLE)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["part", "permutation", "inversions", "irreducible", "simple_form"]
    assert rows[1][1] == "5 3 4 8 1 2 6 7"
    assert rows[1][4] == "(2,4,1,3)[(3,1,2),(1),(1,2),(1,2)]"
    assert rows[-1][:2] == ["status", "valid"]


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json", "--perms", TRIPLE)
    assert code == 0
    payload = json.loads(out)
    assert payload["valid"] is True
    assert payload["type"] == "A"
    assert len(payload["parts"]) == 3
    assert payload["parts"][2]["inversions"] == 2


# ---------------------------------------------------------------------------
# count


def test_count_triples_tables(capsys):
    code, out, _ = run(
        capsys, "count", "--family", "A_TRIPLES", "--max-n", "20", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[0] == "family,n,count"
    assert out.splitlines()[-1] == "A_TRIPLES,20,5327985147037232973"
    code, out, _ = run(capsys, "count", "--family", "BC_TRIPLES", "--max-n", "20")
    assert code == 0
    assert out.splitlines()[-1] == "BC_TRIPLES n=20: 2322044948865982864468235"


def test_count_simple_pairs(capsys):
    code, out, _ = run(
        capsys, "count", "--family", "SIMPLE_PAIRS_A", "--max-n", "5",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "SIMPLE_PAIRS_A"
    assert payload["counts"] == [[1, 0], [2, 1], [3, 0], [4, 1], [5, 3]]


def test_count_bound_exceeded(capsys):
    code, _, err = run(capsys, "count", "--family", "A_TRIPLES", "--max-n", "65")
    assert code == 1
    assert "1..64" in err


def test_count_rejects_unknown_family(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["count", "--family", "NO_SUCH", "--max-n", "3"])
    assert excinfo.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_documented_streams(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--maximal")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[-1] == "count: 5"

    code, out, _ = run(capsys, "enumerate", "--n", "3", "--irreducible")
    assert out.splitlines() == [
        "1 3 2 | 3 1 2",
        "2 1 3 | 2 3 1",
        "count: 2",
    ]

    code, out, _ = run(
        capsys, "enumerate", "--n", "2", "--parts", "3", "--allow-identity"
    )
    assert out.splitlines() == ["1 2 | 1 2 | 2 1", "count: 1"]


def test_enumerate_bound_and_usage_errors(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "9")
    assert code == 1
    assert "brute-force bound 8" in err
    code, _, err = run(capsys, "enumerate", "--n", "4", "--maximal", "--parts", "2")
    assert code == 2
    code, _, err = run(capsys, "enumerate", "--n", "4", "--allow-identity")
    assert code == 2
    code, _, err = run(capsys, "enumerate", "--n", "4", "--parts", "-1")
    assert code == 2
    code, _, err = run(capsys, "enumerate", "--n", "0")
    assert code == 2


def test_enumerate_machine_formats(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--n", "4", "--maximal", "--format", "csv"
    )
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "decomposition"]
    assert rows[-1] == ["count", "5"]
    assert len(rows) == 7

    code, out, _ = run(
        capsys, "enumerate", "--n", "4", "--maximal", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["count"] == 5
    assert len(payload["decompositions"]) == 5


# ---------------------------------------------------------------------------
# rays


def test_rays_csv_matches_golden_file(capsys):
    code, out, _ = run(capsys, "rays", "--perms", TRIPLE)
    assert code == 0
    assert out == GOLDEN.read_text()


def test_rays_json(capsys):
    code, out, _ = run(capsys, "rays", "--perms", TRIPLE, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 8
    assert len(payload["rays"]) == 14
    assert len(payload["equations"]) == 7


def test_rays_small_triple(capsys):
    code, out, _ = run(capsys, "rays", "--perms", "2 1; 1 2; 1 2")
    assert code == 0
    assert out.splitlines() == ["a1,b1,c1", "1,1,0", "1,0,1"]


def test_rays_error_paths(capsys):
    code, _, err = run(capsys, "rays", "--perms", "2 1; 1 2")
    assert code == 2
    assert "exactly 3" in err
    code, _, err = run(capsys, "rays", "--perms", "x; 1 2; 2 1")
    assert code == 2
    code, _, err = run(capsys, "rays", "--perms", "2 1 3; 2 1 3; 1 2 3")
    assert code == 1
    assert "do not partition" in err


# ---------------------------------------------------------------------------
# simple-form


def test_simple_form_output(capsys):
    code, out, _ = run(capsys, "simple-form", "--perm", "5 3 4 8 1 2 6 7")
    assert code == 0
    assert out.strip() == "(2,4,1,3)[(3,1,2),(1),(1,2),(1,2)]"


def test_simple_form_json(capsys):
    code, out, _ = run(
        capsys, "simple-form", "--perm", "2 1", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["skeleton_kind"] == "REVERSAL"
    assert payload["expression"] == "(2,1)[(1),(1)]"


def test_simple_form_errors(capsys):
    code, _, err = run(capsys, "simple-form", "--perm", "nope")
    assert code == 2
    code, _, err = run(capsys, "simple-form", "--perm", "1")
    assert code == 1


# ---------------------------------------------------------------------------
# series


def test_series_frozen_values(capsys):
    code, out, _ = run(capsys, "series", "--which", "A", "--order", "10")
    assert code == 0
    assert out.splitlines()[-1] == "A n=10: 504706"

    code, out, _ = run(
        capsys, "series", "--which", "CATB", "--order", "3", "--format", "csv"
    )
    assert out.splitlines() == [
        "series,n,coefficient",
        "CATB,0,1",
        "CATB,1,1",
        "CATB,2,3",
        "CATB,3,9",
    ]

    code, out, _ = run(capsys, "series", "--which", "CATALAN", "--order", "5")
    assert [line.split()[-1] for line in out.splitlines()] == [
        "1", "1", "2", "5", "14", "42",
    ]


def test_series_json_and_errors(capsys):
    code, out, _ = run(
        capsys, "series", "--which", "SB", "--order", "9", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["coefficients"][-1] == [9, 55995486]
    code, _, err = run(capsys, "series", "--which", "A", "--order", "-1")
    assert code == 2


# ---------------------------------------------------------------------------
# determinism and the installed entry point


def test_identical_invocations_are_byte_identical(capsys):
    first = run(capsys, "rays", "--perms", TRIPLE, "--format", "json")
    second = run(capsys, "rays", "--perms", TRIPLE, "--format", "json")
    assert first == second
    third = run(capsys, "count", "--family", "BC_IRREDUCIBLE", "--max-n", "9",
                "--format", "csv")
    fourth = run(capsys, "count", "--family", "BC_IRREDUCIBLE", "--max-n", "9",
                 "--format", "csv")
    assert third == fourth


def test_module_execution_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "rootdec.cli", "series", "--which", "F", "--order", "4"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[-1] == "F n=4: 24"
