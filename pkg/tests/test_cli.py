import json

from fqhyper.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_gn_vanishing_value(capsys):
    rc, out, _ = run_cli(capsys, "gn", "--p", "7", "--r", "1",
                         "--top", "1/4,3/4", "--bottom", "0,1/2", "--t", "6")
    assert rc == 0
    assert "value: 0" in out


def test_gn_root_count_value(capsys):
    # root count of y^3 - 3y + 1 over F_5 is 0, so the G-value is -1
    rc, out, _ = run_cli(capsys, "gn", "--p", "5", "--r", "1",
                         "--top", "1/3,2/3", "--bottom", "0,1/2", "--t", "4")
    assert rc == 0
    assert "value: -1" in out


def test_gn_bad_denominator(capsys):
    rc, _, err = run_cli(capsys, "gn", "--p", "3", "--r", "1",
                         "--top", "1/6,5/6", "--bottom", "0,1/2", "--t", "1")
    assert rc == 2
    assert "denominator divisible by p" in err


def test_gn_low_precision_warns(capsys):
    rc, out, err = run_cli(capsys, "gn", "--p", "5", "--r", "1",
                           "--top", "1/3,2/3", "--bottom", "0,1/2",
                           "--t", "4", "--precision", "2")
    assert rc == 0
    assert "below the integer-recovery threshold" in err


def test_count_dsurface(capsys):
    rc, out, _ = run_cli(capsys, "count", "dsurface", "--p", "5", "--r", "1",
                         "--d", "2", "--k", "1", "--lambda", "1")
    assert rc == 0
    assert "projective = 1" in out
    assert "affine = 5" in out


def test_count_dsurface_lambda_zero(capsys):
    rc, _, err = run_cli(capsys, "count", "dsurface", "--p", "5", "--r", "1",
                         "--d", "2", "--k", "1", "--lambda", "0")
    assert rc == 2
    assert "lam = 0" in err


def test_count_ec(capsys):
    rc, out, _ = run_cli(capsys, "count", "ec", "--p", "5", "--r", "1",
                         "--a4", "1", "--a6", "0")
    assert rc == 0
    assert "points = 4" in out
    assert "a_q = 2" in out


def test_count_hessian(capsys):
    rc, out, _ = run_cli(capsys, "count", "hessian", "--p", "5", "--r", "1",
                         "--a", "2")
    assert rc == 0
    assert "affine points = 8" in out


def test_count_not_prime(capsys):
    rc, _, err = run_cli(capsys, "count", "hessian", "--p", "4", "--r", "1",
                         "--a", "2")
    assert rc == 2
    assert "not prime" in err


def test_verify_suite_to_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    rc, _, err = run_cli(capsys, "verify", "--suite", "thm-1.9",
                         "--pmax", "11", "--out", str(out_path))
    assert rc == 0
    payload = json.loads(out_path.read_text())
    statuses = {r["params"]["p"]: r["status"] for r in payload["records"]}
    assert statuses[5] == "pass" and statuses[11] == "pass"
    assert statuses[7] == "skip"
    assert payload["summary"]["fail"] == 0


def test_verify_plain_and_csv(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--suite", "sum-phi",
                         "--pmax", "7", "--format", "plain")
    assert rc == 0
    assert "PASS sum-phi" in out
    rc, out, _ = run_cli(capsys, "verify", "--suite", "sum-phi",
                         "--pmax", "7", "--format", "csv")
    assert rc == 0
    assert out.splitlines()[0].startswith("check,params,status")


def test_verify_unknown_suite(capsys):
    rc, _, err = run_cli(capsys, "verify", "--suite", "bogus")
    assert rc == 2
    assert "unknown suite" in err


def test_verify_threads_env_override(capsys, monkeypatch):
    monkeypatch.setenv("FQHYPER_THREADS", "3")
    rc, out, _ = run_cli(capsys, "verify", "--suite", "sum-phi",
                         "--pmax", "5", "--format", "plain")
    assert rc == 0
    monkeypatch.setenv("FQHYPER_THREADS", "zebra")
    rc, _, err = run_cli(capsys, "verify", "--suite", "sum-phi",
                         "--pmax", "5")
    assert rc == 2
    assert "FQHYPER_THREADS" in err
