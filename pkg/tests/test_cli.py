import csv
import io
import json
import math
import subprocess
import sys

import pytest

from xieq.cli import VERIFY_COLUMNS, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_theta_row():
    code, out, _ = call("theta", "--t", "20")
    assert code == 0
    r = rows(out)[0]
    assert float(r["theta"]) == pytest.approx(1.1868948084444906, abs=1e-12)
    assert r["mode"] == "exact"


def test_z_methods_agree_at_1000():
    _, em, _ = call("z", "--t", "1000", "--method", "em")
    _, rs, _ = call("z", "--t", "1000", "--method", "rs")
    assert float(rows(em)[0]["z"]) == pytest.approx(float(rows(rs)[0]["z"]), abs=1e-3)


def test_z_between():
    code, out, _ = call("z", "--between", "300", "310")
    assert code == 0 and len(rows(out)) >= 1


def test_gram_by_index_and_window():
    _, out, _ = call("gram", "--nu", "0", "1")
    assert [float(r["t"]) for r in rows(out)] == pytest.approx([17.845599540410895, 23.170282701246343], abs=1e-9)
    code, out, _ = call("gram", "--T", "1000", "--H", "10")
    assert code == 0 and all(1000 <= float(r["t"]) <= 1010 for r in rows(out))


def test_psi_both():
    code, out, _ = call("psi", "--t", "1000", "--method", "both", "--tol", "1e-9")
    r = rows(out)[0]
    assert code == 0
    assert float(r["difference"]) == pytest.approx(float(r["explicit"]) - float(r["quad"]), abs=1e-14)
    assert float(r["err_est"]) + float(r["tail_bound"]) <= 1e-9


def test_omega_json():
    code, out, _ = call("omega", "--start", "200", "--count", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [d["n"] for d in data] == [1, 2, 3]
    assert all(d["psi_residual"] < 1e-8 for d in data)


def test_omega_no_validate_null_residual():
    _, out, _ = call("--format", "json", "omega", "--count", "2", "--no-validate")
    assert all(d["psi_residual"] is None for d in json.loads(out))


def test_verify_columns_and_threads():
    _, one, _ = call("verify", "--start", "200", "--count", "6")
    _, eight, _ = call("verify", "--start", "200", "--count", "6", "--threads", "8")
    assert one.splitlines()[0].split(",") == VERIFY_COLUMNS
    assert one == eight
    assert len(rows(one)) == 5


def test_sums_and_coefs():
    code, out, _ = call("sums", "--T", "10000", "--H", "10")
    r = rows(out)[0]
    assert code == 0
    for k in range(1, 5):
        assert float(r[f"w{k}"]) == pytest.approx(float(r[f"w{k}_abel"]), abs=1e-10)
    _, out, _ = call("sums", "--T", "10000", "--H", "10", "--coefs")
    assert rows(out)[0]["n"] == "2"


def test_asym():
    code, out, _ = call("asym", "--T", "10000", "--epsilon", "0.3")
    assert code == 0 and [r["parity"] for r in rows(out)] == ["0", "1"]


@pytest.mark.parametrize("argv", [
    ["theta"],
    ["psi", "--t", "1000", "--tol", "1"],
    ["verify", "--epsilon", "0.9"],
    ["z", "--t", "5"],
    ["sums", "--T", "1e6", "--H", "500"],
    ["nope"],
])
def test_usage_and_domain_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err.startswith("xieq:")


def test_scan_exhausted_exit_3(monkeypatch):
    from xieq import equilibrium
    monkeypatch.setattr(equilibrium, "psi_explicit", lambda t: abs(equilibrium.np.asarray(t)) + 1.0)
    code, _, err = call("omega", "--count", "1", "--no-validate")
    assert code == 3 and "sign changes" in err


def test_byte_identical_output():
    argv = ["psi", "--t", "500", "777", "--method", "both"]
    assert call(*argv)[1] == call(*argv)[1]


def test_nan_formatting():
    from xieq.cli import fmt_num
    assert fmt_num(math.nan) == "nan"
    assert fmt_num(0.1) == "0.1"


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "xieq", "theta", "--t", "100"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.startswith("t,mode,theta")
