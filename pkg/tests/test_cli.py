import csv
import io
import json
import math
import subprocess
import sys
from fractions import Fraction

import pytest

from boolesum.cli import CSV_HEADER, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    return code, json.loads(out)


class TestBooleSum:
    def test_text(self):
        code, out, _ = call("boole-sum", "--poly", "2x^2+3x+1", "--a", "1", "--b", "2", "--n", "2")
        assert code == 0
        assert out == "computed: 16\npredicted: 16\nresidual: 0\nholds: true\n"

    def test_json_schema(self):
        code, data = call_json("boole-sum", "--poly", "x^3 - 1/2x", "--a", "-1/3",
                               "--b", "3/2", "--n", "3")
        assert code == 0
        assert {"computed", "predicted", "residual", "holds"} <= data.keys()
        assert data["holds"] is True and data["residual"] == "0"
        assert Fraction(data["computed"]) == Fraction(3, 2) ** 3 * 6

    def test_degree_overflow_is_usage_error(self):
        code, out, err = call("boole-sum", "--poly", "x^3", "--n", "2")
        assert code == 2 and out == "" and "degree" in err

    def test_parse_error(self):
        code, _, err = call("boole-sum", "--poly", "2x^^2", "--n", "2")
        assert code == 2 and "column 4" in err

    def test_zero_step(self):
        code, _, err = call("boole-sum", "--poly", "x", "--b", "0", "--n", "2")
        assert code == 2 and "nonzero" in err

    def test_bad_rational(self):
        code, _, err = call("boole-sum", "--poly", "x", "--a", "0.5", "--n", "2")
        assert code == 2 and "usage" in err


class TestClassicVanishing:
    def test_classic(self):
        assert call("classic", "--n", "3") == (0, "6\n", "")

    def test_classic_json(self):
        code, data = call_json("classic", "--n", "20")
        assert code == 0 and data["value"] == str(math.factorial(20)) and data["holds"]

    def test_classic_rejects_zero(self):
        assert call("classic", "--n", "0")[0] == 2

    def test_vanishing(self):
        assert call("vanishing", "--n", "3", "--m", "2")[:2] == (0, "0\n")
        assert call("vanishing", "--n", "4", "--m", "4")[:2] == (0, "24\n")
        assert call("vanishing", "--n", "1", "--m", "0")[:2] == (0, "0\n")

    def test_vanishing_from_one_at_m0_is_flagged(self):
        code, data = call_json("vanishing", "--n", "1", "--m", "0", "--from-one")
        assert code == 1
        assert data["value"] == "1" and data["expected"] == "0" and data["holds"] is False

    def test_vanishing_out_of_range(self):
        assert call("vanishing", "--n", "2", "--m", "3")[0] == 2


class TestOperators:
    def test_diff(self):
        assert call("diff", "--poly", "x^3", "--n", "3")[:2] == (0, "6\n")
        code, data = call_json("diff", "--poly", "x^3", "--h", "2")
        assert data["coefficients"] == ["6", "12", "8"]

    def test_diff_table(self):
        code, out, _ = call("diff-table", "--values", "0,1,8,27")
        assert out == "0 1 8 27\n1 7 19\n6 12\n6\n"
        code, data = call_json("diff-table", "--values", "0,1,4,9", "--depth", "2")
        assert data["rows"][-1] == ["2", "2"]

    def test_diff_table_too_deep(self):
        assert call("diff-table", "--values", "1,2", "--depth", "2")[0] == 2

    def test_interp(self):
        code, data = call_json("interp", "--point", "0", "0", "--point", "1", "1",
                               "--point", "2", "4")
        assert code == 0 and data["coefficients"] == ["1", "0", "0"]
        assert call("interp", "--point", "0", "1", "--point", "1", "2")[1] == "x + 1\n"

    def test_interp_duplicates(self):
        assert call("interp", "--point", "1", "1", "--point", "1", "2")[0] == 2

    def test_lead_coeff(self):
        assert call("lead-coeff", "--values", "6,28,66", "--a", "1", "--b", "2")[:2] == (0, "2\n")


class TestVerify:
    def test_verify(self):
        code, out, _ = call("verify", "--max-degree", "8", "--trials", "100", "--seed", "42")
        assert code == 0
        assert "failures: 0" in out

    def test_verify_json(self):
        code, data = call_json("verify", "--max-degree", "3", "--trials", "5", "--seed", "7")
        assert data == {"trials": 5, "failures": 0, "seed": 7, "max_degree": 3,
                        "coeff_bound": 100, "witnesses": []}

    def test_seed_range(self):
        assert call("verify", "--max-degree", "3", "--trials", "5", "--seed", str(1 << 64))[0] == 2


class TestFloatSweep:
    def test_csv(self, tmp_path):
        path = tmp_path / "sweep.csv"
        code, out, _ = call("float-sweep", "--n-min", "1", "--n-max", "25", "--csv",
                            "--out", str(path))
        assert code == 0 and out == ""
        rows = list(csv.reader(path.open()))
        assert rows[0] == CSV_HEADER
        assert len(rows) == 1 + 25 * 4
        for row in rows[1:]:
            # floats survive a text round trip bit for bit
            assert repr(float(row[2])) == row[2]
            Fraction(row[3])

    def test_json(self):
        code, data = call_json("float-sweep", "--n-min", "20", "--n-max", "20",
                               "--strategy", "naive", "--strategy", "compensated")
        recs = data["records"]
        assert [r["strategy"] for r in recs] == ["naive", "compensated"]
        assert {"n", "strategy", "computed", "exact", "relative_error"} <= recs[0].keys()
        assert recs[0]["exact"] == recs[1]["exact"] == str(math.factorial(20))

    def test_overflow_serialized(self):
        code, out, _ = call("float-sweep", "--n-min", "170", "--n-max", "170", "--json")
        data = json.loads(out)
        assert all(r["overflow"] for r in data["records"])

    def test_range(self):
        assert call("float-sweep", "--n-min", "1", "--n-max", "171")[0] == 2

    def test_bad_strategy(self):
        assert call("float-sweep", "--n-min", "1", "--n-max", "2", "--strategy", "x")[0] == 2


class TestUsage:
    @pytest.mark.parametrize("argv", [["nope"], [], ["classic", "--bogus"], ["classic"]])
    def test_usage_errors(self, argv):
        code, out, err = call(*argv)
        assert code == 2 and "usage" in err

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "boolesum", "classic", "--n", "3"],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and proc.stdout == "6\n"

    def test_module_entry_point_usage(self):
        proc = subprocess.run([sys.executable, "-m", "boolesum", "frobnicate"],
                              capture_output=True, text=True)
        assert proc.returncode == 2 and "usage" in proc.stderr
