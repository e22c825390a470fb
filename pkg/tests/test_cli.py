import json
import subprocess
import sys

import pytest

from partgenus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genus_text(capsys):
    code, out, _ = run(capsys, "genus", "1,3,4,6,7|2,5,9|8|10")
    assert code == 0
    assert "genus      2" in out and "g_max      3" in out
    assert "(1,8,9,6,5,3,2,10)(4)(7)" in out


def test_genus_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "genus", "1,3|2,4")
    data = json.loads(out)
    assert data["genus"] == 1 and data["f"] == 1


def test_genus_parse_error(capsys):
    code, _, err = run(capsys, "genus", "1,,2")
    assert code == 2 and "part 0" in err


def test_enumerate_counts(capsys):
    assert run(capsys, "enumerate", "--n", "8", "--type", "2^4", "--genus", "2",
               "--class", "primitive", "--count")[1].strip() == "21"
    assert run(capsys, "enumerate", "--n", "4", "--genus", "1", "--count")[1].strip() == "1"


def test_enumerate_orbits(capsys):
    code, out, _ = run(capsys, "--format", "json", "enumerate", "--n", "6", "--type", "3^2",
                       "--genus", "2", "--orbits")
    data = json.loads(out)
    assert len(data["orbits"]) == 1 and data["weight"] == 1
    assert data["orbits"][0]["stabilizer_order"] == 6


def test_enumerate_list(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--type", "2^2", "--genus", "1", "--list")
    assert out.split() == ["1,3|2,4"]


def test_enumerate_budget(capsys):
    code, _, err = run(capsys, "--budget", "100", "enumerate", "--n", "9", "--count")
    assert code == 3 and "budget" in err


def test_reduce_trace(capsys):
    code, out, _ = run(capsys, "--format", "json", "reduce", "1,3,4,6,7|2,5|8,9,10", "--trace")
    data = json.loads(out)
    assert [s["after_n"] for s in data["steps"]] == [7, 4]
    assert data["classification"] == "primitive"


def test_reduce_genus0(capsys):
    code, out, _ = run(capsys, "reduce", "1,2|3,6|4,5", "--trace")
    assert "empty" in out and "remove_centipede" in out


def test_gf(capsys):
    code, out, _ = run(capsys, "gf", "--genus", "2", "--kappa", "triplets", "--order", "12")
    assert "x^9: 144" in out and "x^12: 6046" in out
    code, out, _ = run(capsys, "--format", "json", "gf", "--genus", "1", "--kappa", "doublets",
                       "--order", "8")
    series = json.loads(out)["series"]
    assert [(t["power"], t["coefficient"][0]["coeff"]) for t in series] == [
        (4, "1"), (6, "10"), (8, "70")]


@pytest.mark.parametrize("g,nmax", [(0, 8), (1, 10), (2, 10)])
def test_verify_pass(capsys, g, nmax):
    code, out, _ = run(capsys, "verify", "--n-max", str(nmax), "--genus", str(g))
    assert code == 0 and "verify: pass" in out


def test_verify_numeric_kappa(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "9", "--kappa", "custom=2,-1,1/3")
    assert code == 0


def test_verify_spot_types(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--genus", "1",
                       "--type", "2^3 3", "--type", "1 4^2")
    data = json.loads(out)
    assert code == 0 and all(c["ok"] for c in data["checks"])


def test_verify_reports_mismatch(capsys, monkeypatch):
    import partgenus.cli as cli
    real = cli.genus_series

    def broken(g, spec, order=None):
        z = real(g, spec, order)
        if g == 1:
            z.coeffs[5] = z.coeffs[5] + 1
        return z
    monkeypatch.setattr(cli, "genus_series", broken)
    code, out, _ = run(capsys, "verify", "--n-max", "6", "--genus", "1", "--kappa", "ones")
    assert code == 1 and "first mismatch: n=5" in out


def test_census_rejects_other_genus(capsys):
    code, _, err = run(capsys, "census", "--genus", "1")
    assert code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "partgenus", "genus", "1"],
                         capture_output=True, text=True, check=True).stdout
    assert "genus      0" in out
