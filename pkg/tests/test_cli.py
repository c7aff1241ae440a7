import io
import json
import subprocess
import sys

import pytest

from dunkl_sym.cli import main
from dunkl_sym.config import ConfigError, SessionConfig


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def lines(out):
    return [json.loads(l) for l in out.splitlines() if l.strip()]


def test_verify_all_suites():
    code, out = run("verify", "--m", "3", "--kappa0", "1/2", "--kappa1", "1/3", "--max-degree", "3", "--suite", "all")
    recs = lines(out)
    assert code == 0
    assert recs[-1]["summary"]["status"] == "pass"
    assert {"osp12", "thm25", "supercommutation", "actions", "central"} <= {r.get("suite") for r in recs[:-1]}


def test_verify_odd_mismatch_is_usage_error():
    code, out = run("verify", "--m", "5", "--kappa1", "1/3", "--kappam", "1/4")
    assert code == 2
    assert lines(out)[0]["error"]["type"] == "usage"


def test_verify_degree_zero():
    code, out = run("verify", "--m", "4", "--max-degree", "0", "--suite", "symmetries")
    assert code == 0
    assert {r["degree"] for r in lines(out)[:-1]} == {0}


def test_verify_random_kappa_both_deltas():
    code, out = run("verify", "--m", "2", "--max-degree", "1", "--suite", "osp12", "--random-kappa", "2",
                    "--both-deltas", "--seed", "3")
    recs = lines(out)[:-1]
    assert code == 0
    assert len({(tuple(r["kappa"]), r["delta"]) for r in recs}) == 4


@pytest.mark.parametrize("bad", ["0.5", "1e-1", "abc", "1/0"])
def test_float_kappa_rejected(bad):
    code, out = run("verify", "--m", "2", "--kappa0", bad)
    assert code == 2 and "error" in lines(out)[0]


def test_rep_build_dim_two(tmp_path):
    path = tmp_path / "rep.json"
    code, out = run("rep", "build", "--m", "2", "--N", "0", "--case", "I.i", "--out", str(path))
    assert code == 0
    rec = lines(out)[0]
    assert rec["dim"] == 2 and rec["certificate"]["irreducible"]
    assert json.loads(path.read_text())["dim"] == 2


@pytest.mark.parametrize("m", ["2", "3"])
def test_rep_build_case_three_odd(m):
    code, out = run("rep", "build", "--m", m, "--N", "3", "--case", "III")
    err = lines(out)[0]["error"]
    assert code == 2 and err["message"] == "no representations in this case"


def test_rep_build_incompatible_case():
    code, out = run("rep", "build", "--m", "3", "--N", "0", "--ell", "0", "--case", "I")
    assert code == 2 and lines(out)[0]["error"]["type"] == "incompatible_case"


def test_rep_build_formats():
    code, out = run("rep", "build", "--m", "3", "--N", "1", "--ell", "0", "--case", "I", "--format", "latex")
    assert code == 0 and out.startswith("O0 = \\begin{pmatrix}")
    code, out = run("rep", "build", "--m", "3", "--N", "1", "--ell", "0", "--case", "I", "--format", "text")
    assert code == 0 and out.startswith("dim 4")


def test_rep_classify_grid():
    code, out = run("rep", "classify", "--m", "2", "--N-max", "1", "--grid", "1/3,1/4,1/5;2/3,1/2,1/7;3/2,1/9,2;5,1,1",
                    "--summary-only")
    summary = lines(out)[-1]["summary"]
    assert code == 0 and summary["disagree"] == 0 and summary["excluded_points"] > 0


def test_monogenics_json():
    code, out = run("monogenics", "--m", "3", "--n", "1")
    recs = lines(out)
    assert code == 0
    assert len(recs) == 5 and recs[-1]["summary"]["count"] == 4


def test_monogenics_latex():
    code, out = run("monogenics", "--m", "2", "--n", "1", "--format", "latex")
    assert code == 0
    assert out.count(r"\psi_{1,") == 4


def test_monogenics_negative_kappa():
    code, _ = run("monogenics", "--m", "2", "--n", "1", "--kappa0", "-1/2")
    assert code == 2


@pytest.mark.parametrize("m,cover,count,total", [("3", "plus", 9, 24), ("2", "minus", 10, 16)])
def test_group_tables(m, cover, count, total):
    code, out = run("group", "tables", "--m", m, "--cover", cover)
    recs = lines(out)
    assert code == 0
    assert sum("irrep" in r for r in recs) == count
    assert recs[-1]["summary"]["sum_dim_sq"] == total


def test_deterministic_output():
    a = run("monogenics", "--m", "4", "--n", "2", "--kappa1", "1/5", "--kappam", "2/7")
    b = run("monogenics", "--m", "4", "--n", "2", "--kappa1", "1/5", "--kappam", "2/7")
    assert a == b


def test_missing_arguments():
    code, out = run("rep", "build", "--m", "2")
    assert code == 2 and lines(out)[0]["error"]["type"] == "usage"


def test_session_config():
    cfg = SessionConfig.from_strings(3, "1/2", "1/3")
    assert cfg.kappa[2] == cfg.kappa[1]
    with pytest.raises(ConfigError):
        SessionConfig(1, (1, 1, 1))
    with pytest.raises(ConfigError):
        SessionConfig(3, (1, 1, 2))


def test_threads_env(monkeypatch):
    from dunkl_sym.reps import thread_count
    monkeypatch.setenv("DUNKL_SYM_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("DUNKL_SYM_THREADS", "0")
    assert thread_count() >= 1


def test_console_script_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "dunkl_sym.cli", "group", "tables", "--m", "2"], capture_output=True)
    bad = subprocess.run([sys.executable, "-m", "dunkl_sym.cli", "verify", "--m", "5", "--kappa1", "1/3",
                          "--kappam", "1/4"], capture_output=True)
    assert ok.returncode == 0 and bad.returncode == 2
    assert json.loads(bad.stdout)["exit_code"] == 2
