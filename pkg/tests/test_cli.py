import io
import json
import subprocess
import sys

import pytest

from linrec.cli import run
from linrec.recurrence import ClosedForm, Recurrence, solve

MILLS = ["-A", "6", "-B", "-1", "--a0", "1", "--a1", "5"]
FIB = ["-A", "1", "-B", "1", "--a0", "1", "--a1", "1"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("method", ["iter", "matrix", "closed"])
def test_eval(method):
    assert call("eval", *MILLS, "-n", "3", "--method", method) == (0, "169\n", "")


def test_eval_json():
    code, out, _ = call("eval", *FIB, "-n", "10", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 10, "method": "matrix", "value": "89"}


def test_negative_rationals():
    code, out, _ = call("eval", "-A", "1/2", "-B", "-1/3", "--a0", "-1/2", "--a1", "1", "-n", "3")
    assert code == 0
    r = Recurrence("1/2", "-1/3", "-1/2", 1)
    from linrec.recurrence import eval_iterative

    assert out.strip() == str(eval_iterative(r, 3))
    assert call("eval", "-A=2", "--a1=-3", "-B", "1", "--a0", "0", "-n", "1")[1] == "-3\n"


def test_solve_fibonacci():
    code, out, _ = call("solve", *FIB)
    assert code == 0
    assert out.strip() == solve(Recurrence(1, 1, 1, 1)).formula()
    assert "((1 + 1*sqrt(5))/2)^n" in out and "(5 + 1*sqrt(5))/10" in out


def test_solve_json_roundtrip():
    code, out, _ = call("solve", *MILLS, "--format", "json")
    cf = ClosedForm.from_dict(json.loads(out))
    assert cf == solve(Recurrence(6, -1, 1, 5))


def test_triples_json():
    code, out, _ = call("triples", "--from", "1", "--to", "3", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [(r["m"], r["m1"], r["hyp"]) for r in rows] == [(3, 4, 5), (20, 21, 29), (119, 120, 169)]
    assert rows[0] == {"k": 1, "m": 3, "m1": 4, "hyp": 5, "d": 7}


def test_triples_text_and_degenerate():
    assert call("triples", "--from", "1", "--to", "2")[1] == "3 4 5\n20 21 29\n"
    code, out, err = call("triples", "--from", "0", "--to", "1")
    assert code == 1 and "DegenerateIndex" in err
    assert call("triples", "--from", "0", "--to", "0", "--permissive")[1] == "0 1 1\n"


def test_pell():
    code, out, _ = call("pell", "-k", "1", "--format", "json")
    assert json.loads(out) == {"k": 1, "p": 1, "q": 1, "r": 2, "s": 1, "sign": -1}
    assert call("pell", "-k", "3")[1] == "p=7 q=5 r=12 s=5 sign=-1\n"


def test_tilings():
    assert call("tilings", "-n", "3") == (0, "36\n", "")
    assert json.loads(call("tilings", "-n", "2", "--format", "json")[1]) == {"n": 2, "count": 10}
    code, out, _ = call("tilings", "-n", "1", "--format", "json")
    assert code == 1 and json.loads(out)["error"] == "IndexOutOfRange"


def test_check():
    code, out, _ = call("check", "natural", *MILLS, "--prefix", "50", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["property"] == "NaturalValued" and d["condition_holds"] is True
    code, out, _ = call("check", "increasing", *FIB)
    assert "counterexample: 0" in out


def test_check_domain_error():
    argv = ["check", "increasing", "-A", "1", "-B", "-1", "--a0", "1", "--a1", "1"]
    code, out, err = call(*argv, "--format", "json")
    assert code == 1
    assert json.loads(out)["error"] == "NonPositiveDiscriminant"
    code, out, err = call(*argv)
    assert code == 1 and out == "" and "NonPositiveDiscriminant" in err


def test_ratio():
    code, out, _ = call("ratio", *FIB, "-n", "50", "--format", "json")
    d = json.loads(out)
    assert d["ratio"] == "32951280099/20365011074"  # f51/f50 with f0 = f1 = 1
    assert float(d["error_bound"]) < 1e-20


def test_verify():
    code, out, _ = call("verify", "--kmax", "10", "--bound", "1000000", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["ok"]
    assert d["found"] == [5, 29, 169, 985, 5741, 33461, 195025]
    code, out, _ = call("verify", "--kmax", "4", "--bound", "1000", "--backend", "python",
                        "--workers", "2")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["eval", *MILLS],
        ["eval", "-A", "1.5", "-B", "1", "--a0", "1", "--a1", "1", "-n", "2"],
        ["eval", "-A", "1/0", "-B", "1", "--a0", "1", "--a1", "1", "-n", "2"],
        ["eval", *MILLS, "-n", "-3"],
        ["eval", *MILLS, "-n", "2", "--method", "magic"],
        ["pell", "-k", "x"],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == "" and "usage" in err


class FakeTTY(io.StringIO):
    def isatty(self):
        return True


def test_color_and_no_color(monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)
    out = FakeTTY()
    run(["verify", "--kmax", "3", "--bound", "100"], stdout=out)
    assert "\033[32mPASS" in out.getvalue()
    monkeypatch.setenv("NO_COLOR", "1")
    out = FakeTTY()
    run(["verify", "--kmax", "3", "--bound", "100"], stdout=out)
    assert "\033[" not in out.getvalue()


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "linrec", "triples", "--from", "1", "--to", "30", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and len(a.splitlines()) == 30
    rows = [json.loads(line) for line in a.splitlines()]
    assert isinstance(rows[-1]["hyp"], str)  # beyond 64 bits
