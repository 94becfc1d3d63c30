import io
import contextlib
import json
import re
import subprocess
import sys

import pytest

from demazure.cli import CACHE_ENV_VAR, JobSpec, jobspec_from_argv, run


def cap(argv):
    """Run the CLI in-process; return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


ADJOINT_JSON = (
    '{"root_system":"A2","terms":['
    '{"weight":[-2,1],"coeff":"1"},{"weight":[-1,-1],"coeff":"1"},'
    '{"weight":[-1,2],"coeff":"1"},{"weight":[0,0],"coeff":"2"},'
    '{"weight":[1,-2],"coeff":"1"},{"weight":[1,1],"coeff":"1"},'
    '{"weight":[2,-1],"coeff":"1"}]}'
)


def test_dim_adjoint():
    code, out, err = cap(["dim", "--type", "A2", "--word", "1,2,1", "--weight", "1,1"])
    assert (code, out, err) == (0, "8\n", "")


def test_dim_partial_word():
    assert cap(["dim", "--type", "A2", "--word", "1,2", "--weight", "1,1"])[:2] == (0, "5\n")


def test_char_empty_word():
    code, out, _ = cap(["char", "--type", "A1", "--word", "", "--weight", "3"])
    assert code == 0
    assert out == '{"root_system":"A1","terms":[{"weight":[3],"coeff":"1"}]}\n'


def test_char_adjoint():
    code, out, _ = cap(["char", "--type", "A2", "--word", "1,2,1", "--weight", "1,1"])
    assert code == 0
    assert out == ADJOINT_JSON + "\n"


def test_weight_mult():
    code, out, _ = cap(["weight-mult", "--type", "A2", "--weight", "1,1", "--mu", "0,0"])
    assert (code, out) == (0, "2\n")


def test_dual():
    code, out, _ = cap(["dual", "--type", "A2", "--weight", "2,1"])
    assert (code, out) == (0, "[1,2]\n")


def test_hecke_fold():
    code, out, _ = cap(["hecke", "--type", "A2", "--left", "1,2,1,2", "--right", ""])
    assert code == 0
    assert json.loads(out) == {"word": [1, 2, 1], "length": 3}
    code, out, _ = cap(["hecke", "--type", "A2", "--left", "1", "--right", "1"])
    assert json.loads(out) == {"word": [1], "length": 1}


def test_branch_output():
    code, out, _ = cap(["branch", "--type", "A2", "--weight", "1,1", "--subset", "1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["weyl_dim"] == "8"
    assert doc["bound"] == "5"
    assert doc["length"] == "4"
    assert doc["length_holds"] is True
    assert doc["dimension_conserved"] is True
    assert len(doc["constituents"]) == 4
    assert all(c["holds"] for c in doc["constituents"])
    assert sorted(int(c["levi_dim"]) for c in doc["constituents"]) == [1, 2, 2, 3]


def test_unirad_output():
    code, out, _ = cap(["unirad", "--type", "A3", "--weight", "1,1,0", "--subset", "1,2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["demazure_side"] == doc["levi_side"] == "8"
    assert doc["equal"] is True


def test_growth_json():
    code, out, _ = cap(["growth", "--type", "A2", "--word", "1,2", "--weight", "1,1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["values"][:5] == ["1", "5", "12", "22", "35"]
    assert doc["degree"] == 2
    assert doc["length_w"] == 2
    assert doc["match"] is True
    assert doc["bound_holds"] is True


def test_growth_tsv():
    code, out, _ = cap(
        ["growth", "--type", "A2", "--word", "1,2", "--weight", "1,1", "--format", "tsv"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\tdim\tdiff1\tdiff2\tdiff3"
    assert lines[1].startswith("0\t1\t")
    first = [row.split("\t")[1] for row in lines[1:]]
    assert first == ["1", "5", "12", "22", "35", "51", "70"]
    # third differences vanish (later rows leave the column blank)
    third = [row.split("\t")[4] for row in lines[1:]]
    filled = [x for x in third if x]
    assert filled and set(filled) == {"0"}


def test_growth_exit_one_when_degree_exceeds_length(monkeypatch):
    import demazure.cli as cli

    monkeypatch.setattr(cli, "growth_degree", lambda seq: 99)
    code, _, _ = cap(["growth", "--type", "A2", "--word", "1,2", "--weight", "1,1"])
    assert code == 1


def test_sl3t_single():
    code, out, _ = cap(["sl3t", "--k1", "1", "--k2", "1", "--l", "0,0,0"])
    assert code == 0
    doc = json.loads(out)
    assert doc["member"] is True
    assert doc["closed_mult"] == doc["weight_mult"] == doc["theorem2_mult"] == "2"
    assert doc["agree"] is True
    assert doc["n"] == "1"


def test_sl3t_grid_forms():
    code1, out1, _ = cap(["sl3t", "--grid", "1,1"])
    code2, out2, _ = cap(["sl3t", "--grid", "1", "1"])
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.splitlines()
    assert lines[0].split("\t")[:3] == ["k1", "k2", "l1"]
    assert len(lines) == 1 + 4 * 27


def test_sl3t_needs_arguments():
    code, _, err = cap(["sl3t"])
    assert code == 2
    assert "need either --grid" in err


def test_usage_errors_exit_two():
    assert cap(["définitivement-pas-une-commande"])[0] == 2
    assert cap(["dim", "--type", "A2", "--word", "1"])[0] == 2  # missing --weight
    code, _, err = cap(["dim", "--type", "Z9", "--word", "1", "--weight", "1,1"])
    assert code == 2
    assert "unknown family" in err
    code, _, err = cap(["dim", "--type", "A2", "--word", "1,2", "--weight=-1,1"])
    assert code == 2
    assert "not dominant" in err
    code, _, err = cap(["char", "--type", "A2", "--word", "1,1", "--weight", "1,1"])
    assert code == 2
    assert "not reduced" in err
    code, _, err = cap(["dim", "--type", "A2", "--word", "x", "--weight", "1,1"])
    assert code == 2
    assert "comma-separated integers" in err


def test_cache_cold_then_warm(tmp_path):
    argv = ["char", "--type", "A2", "--word", "1,2,1", "--weight", "1,1",
            "--cache", str(tmp_path)]
    code1, out1, err1 = cap(argv)
    assert code1 == 0 and err1 == ""
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    code2, out2, err2 = cap(argv)
    assert code2 == 0
    assert out2 == out1
    assert "cache hit" in err2


def test_cache_tamper_recovers(tmp_path):
    argv = ["dim", "--type", "A2", "--word", "1,2,1", "--weight", "1,1",
            "--cache", str(tmp_path)]
    _, out1, _ = cap(argv)
    entry = next(tmp_path.glob("*.json"))
    doc = json.loads(entry.read_text())
    doc["character"] = doc["character"].replace('"coeff":"2"', '"coeff":"7"')
    entry.write_text(json.dumps(doc))
    code, out2, err = cap(argv)
    assert code == 0
    assert out2 == out1 == "8\n"
    assert "corrupt; recomputing" in err
    # the overwritten entry is healthy again
    code, out3, err3 = cap(argv)
    assert out3 == out1
    assert "cache hit" in err3


def test_cache_unparseable_file_recovers(tmp_path):
    argv = ["dim", "--type", "A2", "--word", "1,2", "--weight", "2,2",
            "--cache", str(tmp_path)]
    _, out1, _ = cap(argv)
    entry = next(tmp_path.glob("*.json"))
    entry.write_text("{ not json")
    code, out2, err = cap(argv)
    assert (code, out2) == (0, out1)
    assert "corrupt; recomputing" in err


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    argv = ["char", "--type", "B2", "--word", "2,1", "--weight", "1,0"]
    _, out1, err1 = cap(argv)
    assert list(tmp_path.glob("*.json"))
    _, out2, err2 = cap(argv)
    assert out2 == out1
    assert "cache hit" in err2


def test_jobspec_round_trip():
    jobs = [
        JobSpec("dim", (("type", "A2"), ("word", "1,2,1"), ("weight", "1,1"))),
        JobSpec("weight-mult", (("type", "B2"), ("weight", "1,1"), ("mu", "-1,-1"))),
        JobSpec("sl3t", (("k1", "1"), ("k2", "1"), ("l", "0,0,0"))),
    ]
    for job in jobs:
        argv = job.to_argv()
        assert jobspec_from_argv(argv) == job
        code, out, _ = cap(argv)
        assert code == 0 and out
    with pytest.raises(ValueError):
        jobspec_from_argv(["--type=A2"])
    with pytest.raises(ValueError):
        jobspec_from_argv(["dim", "--type", "A2"])


def test_no_floating_point_in_output():
    corpus = [
        ["char", "--type", "G2", "--word", "1,2,1,2,1,2", "--weight", "1,0"],
        ["dim", "--type", "B3", "--word", "1,2,3,2,1", "--weight", "2,2,2"],
        ["branch", "--type", "B3", "--weight", "1,1,1", "--subset", "1,3"],
        ["growth", "--type", "B2", "--word", "2,1,2", "--weight", "1,1"],
        ["sl3t", "--grid", "2,2"],
    ]
    for argv in corpus:
        code, out, _ = cap(argv)
        assert code == 0
        assert not re.search(r"\d\.\d", out), argv


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "demazure.cli",
         "dim", "--type", "A2", "--word", "1,2,1", "--weight", "1,1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "8\n"
