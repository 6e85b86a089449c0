"""End-to-end CLI behavior: rendering, JSON output, and the exit-code contract."""
import json

import pytest

from nakanoseq import cli
from nakanoseq.errors import InternalInconsistency


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- happy paths ------------------------------------------------------------------


def test_norm_command(capsys):
    code, out, _ = run(capsys, "norm", "2", "[[1,1],[2,1]]")
    assert code == 0
    assert "1.414213562373" in out


def test_norm_golden_prefix(capsys):
    code, out, _ = run(capsys, "norm", "prefix(1=1; 2)", "[[1,1],[2,1]]")
    assert code == 0
    assert "1.618033988750" in out


def test_norm_zero_vector(capsys):
    code, out, _ = run(capsys, "norm", "2", "[]")
    assert code == 0
    assert "0.000000000000" in out


def test_norm_json(capsys):
    code, out, _ = run(capsys, "norm", "2", "[[1,1],[2,1]]", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["converged"] and abs(obj["value"] - 2**0.5) < 1e-10
    assert out.endswith("\n") and out.count("\n") == 1


def test_norm_vector_file(capsys, tmp_path):
    path = tmp_path / "vec.json"
    path.write_text('{"entries": [[1, 3.0], [2, 4.0]]}')
    code, out, _ = run(capsys, "norm", "2", f"@{path}")
    assert code == 0
    assert "5.000000000000" in out


def test_space_command(capsys):
    code, out, _ = run(capsys, "space", "blocks")
    assert code == 0
    assert "separable: No" in out
    assert "contains_linf_copy: Yes" in out
    assert "Prop 1.4" in out


def test_compare_example_one(capsys):
    code, out, _ = run(capsys, "compare", "1 + 1/n", "n")
    assert code == 0
    assert "strictly_singular: Yes" in out
    assert "Thm 2.2" in out


def test_compare_example_two(capsys):
    code, out, _ = run(capsys, "compare", "blocks", "inf")
    assert code == 0
    assert "spaces_equal: No" in out
    assert "strictly_singular: No" in out
    assert "Thm 2.3" in out


def test_compare_json_schema(capsys):
    code, out, _ = run(capsys, "compare", "2", "2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["spaces_equal"]["answer"] == "yes"
    assert obj["spaces_equal"]["citation"] == "Prop 1.2 (Nakano's Lemma)"
    for key in ("inclusion_holds", "strictly_singular", "weakly_compact", "compact"):
        assert key in obj


def test_compare_unknown_rendered(capsys):
    code, out, _ = run(capsys, "compare", "3", "2")
    assert code == 0  # Unknown verdicts do not change the exit code
    assert "inclusion not established" in out


def test_witness_equality(capsys):
    code, out, _ = run(capsys, "witness", "2", "2 + recip(blocks)", "--count", "3")
    assert code == 0
    assert "n=6" in out


def test_witness_linf(capsys):
    code, out, _ = run(capsys, "witness", "blocks", "--linf", "--count", "4")
    assert code == 0
    assert "n=33" in out


def test_probe_command(capsys):
    code, out, _ = run(capsys, "probe", "2", "4", "--lengths", "16")
    assert code == 0
    assert "0.500000" in out


def test_probe_json(capsys):
    code, out, _ = run(capsys, "probe", "2", "2", "--lengths", "4,16", "--json")
    assert code == 0
    obj = json.loads(out)
    assert [row["ratio"] for row in obj["rows"]] == pytest.approx([1.0, 1.0], rel=1e-9)


# -- exit-code contract ---------------------------------------------------------------


def test_exit_2_on_dsl_parse_error(capsys):
    code, _, err = run(capsys, "norm", "2(((", "[[1,1]]")
    assert code == 2
    assert "column" in err


def test_exit_2_on_bad_vector(capsys):
    code, _, err = run(capsys, "norm", "2", "not json")
    assert code == 2


def test_exit_2_on_semantic_error(capsys):
    code, _, err = run(capsys, "compare", "0.5", "2")
    assert code == 2


def test_exit_3_on_iteration_cap(capsys):
    code, _, err = run(capsys, "norm", "2", "[[1,1],[2,1]]", "--tol", "1e-300")
    assert code == 3
    assert "iteration cap" in err


def test_exit_4_on_internal_inconsistency(capsys, monkeypatch):
    def boom(p, q):
        raise InternalInconsistency("synthetic fault for the exit-code contract")

    monkeypatch.setattr(cli.criteria, "full_report", boom)
    code, _, err = run(capsys, "compare", "2", "2")
    assert code == 4
    assert "internal inconsistency" in err


def test_exit_5_on_precondition(capsys):
    code, _, err = run(capsys, "witness", "2", "--linf")
    assert code == 5
    assert "precondition" in err


def test_exit_5_on_probe_without_inclusion(capsys):
    code, _, err = run(capsys, "probe", "3", "2", "--lengths", "4")
    assert code == 5


def test_exit_6_on_horizon_exhausted(capsys):
    code, _, err = run(capsys, "witness", "1 + 1/n^0.001", "1", "--count", "2")
    assert code == 6
    assert "horizon" in err


def test_argparse_errors_map_to_2(capsys):
    code, _, _ = run(capsys, "bogus-command")
    assert code == 2
