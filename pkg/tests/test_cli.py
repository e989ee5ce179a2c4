import hashlib
import json

import jsonschema
import pytest

from domfractal import __version__
from domfractal.cli import load_schema, main
from domfractal.verify import PUBLISHED_COUNTS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv)
    data = json.loads(out)
    jsonschema.validate(data, load_schema(schema))
    return code, data


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_generate_edgelist(capsys):
    code, out, _ = run(capsys, "generate", "--family", "sierpinski", "--n", "3", "--method", "iterative",
                       "--format", "edgelist")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# vertices=15 ")
    assert len(lines) == 1 + 27


def test_generate_web_triangle(capsys):
    code, out, _ = run(capsys, "generate", "--family", "web", "--n", "1")
    assert out.splitlines() == ["# vertices=3 boundary=0,1,2 family=PseudofractalWeb generation=1",
                                "0 1", "0 2", "1 2"]


def test_generate_json_and_dot(capsys):
    code, data = run_json(capsys, "graph", "generate", "--family", "web", "--n", "2", "--format", "json")
    assert code == 0 and data["n_vertices"] == 6 and len(data["edges"]) == 9
    code, out, _ = run(capsys, "generate", "--family", "web", "--n", "2", "--format", "dot")
    assert out.startswith("graph G {")


def test_generate_methods_same_checksum(tmp_path, capsys):
    sums = []
    for method in ("iterative", "merge"):
        out = tmp_path / f"{method}.txt"
        assert run(capsys, "generate", "--family", "web", "--n", "4", "--method", method, "--out", str(out))[0] == 0
        manifest = json.loads((tmp_path / f"{method}.txt.manifest.json").read_text())
        jsonschema.validate(manifest, load_schema("manifest"))
        assert manifest["checksums"][str(out)] == hashlib.sha256(out.read_bytes()).hexdigest()
        sums.append(manifest["checksums"][str(out)])
    assert sums[0] == sums[1]


def test_rerun_reproduces_manifest(tmp_path, capsys):
    out = tmp_path / "count.json"
    argv = ["count", "--family", "sierpinski", "--n-max", "6", "--out", str(out)]
    run(capsys, *argv)
    first = (tmp_path / "count.json.manifest.json").read_bytes()
    run(capsys, *argv)
    assert (tmp_path / "count.json.manifest.json").read_bytes() == first


def test_generate_out_of_range(capsys):
    code, _, err = run(capsys, "generate", "--family", "sierpinski", "--n", "17")
    assert code == 2 and "exceeds" in err


def test_generate_bad_format(capsys):
    assert run(capsys, "generate", "--family", "web", "--n", "2", "--format", "csv")[0] == 2


def test_solve_s3_count(capsys):
    code, data = run_json(capsys, "solve", "solve", "--family", "sierpinski", "--n", "3", "--mode", "count")
    assert code == 0
    assert data["result"]["min_size"] == 3 and data["result"]["num_minima"] == "2"


def test_solve_forced_hubs(capsys):
    code, data = run_json(capsys, "solve", "solve", "--family", "web", "--n", "3", "--forced-hubs", "3")
    assert data["result"]["min_size"] == 3


def test_solve_g4_enumerate(capsys):
    code, data = run_json(capsys, "solve", "solve", "--family", "web", "--n", "4", "--mode", "enumerate")
    assert data["result"]["minima"] == [[0, 1, 2, 3, 4, 5]]


def test_solve_from_files(tmp_path, capsys):
    for fmt in ("edgelist", "json"):
        path = tmp_path / f"s3.{fmt}"
        run(capsys, "generate", "--family", "sierpinski", "--n", "3", "--format", fmt, "--out", str(path))
        code, data = run_json(capsys, "solve", "solve", "--graph", str(path))
        assert code == 0 and data["result"]["num_minima"] == "2"


def test_solve_infeasible_exits_zero(capsys):
    code, data = run_json(capsys, "solve", "solve", "--family", "web", "--n", "1", "--forbidden", "0,1,2")
    assert code == 0 and data["result"]["feasible"] is False and data["result"]["min_size"] is None


def test_solve_budget_exit_code(capsys):
    assert run(capsys, "solve", "--family", "sierpinski", "--n", "4", "--budget", "5")[0] == 3


def test_solve_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("# vertices=3\n0 0\n")
    assert run(capsys, "solve", "--graph", str(bad))[0] == 2
    assert run(capsys, "solve", "--graph", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "solve", "--family", "web", "--n", "2", "--forced", "0,x")[0] == 2
    assert run(capsys, "solve", "--family", "web", "--n", "2", "--forced", "0", "--forbidden", "0")[0] == 2
    assert run(capsys, "solve")[0] == 2


def test_solve_text(capsys):
    code, out, _ = run(capsys, "solve", "--family", "web", "--n", "4", "--mode", "enumerate", "--format", "text")
    assert out.splitlines() == ["min_size 6", "num_minima 1", "0 1 2 3 4 5"]


def test_recurse_web(capsys):
    code, data = run_json(capsys, "recurse", "recurse", "--family", "web", "--n-max", "10")
    assert code == 0 and not data["mismatches"]
    for row in data["rows"]:
        assert row["domination_number"] == str((3 ** (row["n"] - 2) + 3) // 2)
    assert data["rows"][0]["values"] == ["6", "5", "4", "3"]


def test_recurse_sierpinski_theorem_check(capsys):
    code, data = run_json(capsys, "recurse", "recurse", "--family", "sierpinski", "--n-max", "10",
                          "--check", "theorem")
    assert code == 0
    assert [r["domination_number"] for r in data["rows"]] == [str(3 ** (n - 2)) for n in range(3, 11)]


def test_recurse_sierpinski_full_check_flags_offsets(capsys):
    # The per-component offsets differ from their closed form from n = 4 on.
    code, data = run_json(capsys, "recurse", "recurse", "--family", "sierpinski", "--n-max", "5")
    assert code == 4
    assert data["rows"][0]["matches_closed_form"] and not data["rows"][1]["matches_closed_form"]


def test_recurse_needs_seed_range(capsys):
    assert run(capsys, "recurse", "--family", "web", "--n-max", "2")[0] == 2


def test_count_sierpinski_table(capsys):
    code, data = run_json(capsys, "count", "count", "--family", "sierpinski", "--n-max", "6")
    assert code == 0
    for row in data["rows"]:
        assert tuple(int(row["counts"][k]) for k in "abcde") == PUBLISHED_COUNTS[row["n"]]


def test_count_small(capsys):
    code, data = run_json(capsys, "count", "count", "--family", "sierpinski", "--n-max", "2")
    assert [r["counts"]["a"] for r in data["rows"]] == ["3", "6"]


def test_count_web(capsys):
    code, data = run_json(capsys, "count", "count", "--family", "web", "--n-max", "5")
    assert [r["counts"]["a"] for r in data["rows"][2:]] == ["1", "1", "1"]


def test_count_transfer_method(capsys):
    code, data = run_json(capsys, "count", "count", "--family", "sierpinski", "--n-max", "4", "--method", "transfer")
    assert data["rows"][3]["counts"]["a"] == "392"


def test_verify_fast(capsys):
    code, data = run_json(capsys, "verify", "verify", "--level", "fast")
    assert data["n_checks"] == 12 and [c["id"] for c in data["checks"]] == list(range(1, 13))
    assert code == (0 if data["passed"] else 1)
    assert "seconds" not in data["checks"][0]
