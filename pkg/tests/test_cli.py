import json

import pytest

from hypmesh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mesh(capsys):
    code, out, _ = run(capsys, "mesh", "coeffs:1,-3,1", "--json")
    d = json.loads(out)
    assert code == 0 and abs(d["approx"] - 5**0.5) < 1e-9 and not d["exact"]
    code, out, _ = run(capsys, "mesh", "roots:0,1,3")
    assert code == 0 and out.strip() == "mesh = 1 (exact)"


def test_lmesh(capsys):
    code, out, _ = run(capsys, "lmesh", "roots:-1,-2,-4")
    assert code == 0 and "lmesh = 2 (exact)" in out
    code, _, err = run(capsys, "lmesh", "roots:-1,2")
    assert code == 3 and "MixedSigns" in err
    assert run(capsys, "lmesh", "roots:0,1")[0] == 3


def test_interlace(capsys):
    assert run(capsys, "interlace", "roots:1,3", "roots:2,4")[0] == 0
    code, out, _ = run(capsys, "interlace", "roots:1,2", "roots:3,4", "--json")
    assert code == 1 and json.loads(out) == {"kind": "NotInterlacing", "common_root_count": 0}
    code, out, _ = run(capsys, "interlace", "roots:1,2", "roots:2,3")
    assert code == 0 and out.startswith("NonStrictInterlacing")


def test_schur_szego(capsys):
    code, out, _ = run(capsys, "schur-szego", "roots:-1,-4", "roots:-1,-4", "--k", "2", "--json")
    assert code == 0 and json.loads(out)["poly"] == "coeffs:16,25/2,1"
    assert run(capsys, "schur-szego", "coeffs:1,1", "coeffs:1,1,1", "--k", "1")[0] == 3


def test_check_ms(capsys):
    code, out, _ = run(capsys, "check-ms", "seq:1,1/2,1/6", "--json")
    assert code == 0 and json.loads(out) == {"multiplier_sequence": True, "symbol": "coeffs:1,1,1/6"}
    assert run(capsys, "check-ms", "seq:1,1/4,1")[0] == 1
    assert run(capsys, "check-ms", "seq:1,0,1")[0] == 3


def test_hpo_symbol_and_diffop(capsys):
    assert run(capsys, "check-hpo-symbol", "roots:1,2")[0] == 0
    assert run(capsys, "check-hpo-symbol", "coeffs:1,0,1")[0] == 1
    code, out, _ = run(capsys, "apply-diffop", "coeffs:1,-1", "roots:0,1", "--json")
    assert code == 0 and json.loads(out)["poly"] == "coeffs:1,-3,1"


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "--lambda", "1", "--a=-1/2", "coeffs:1,1,1", "--json")
    assert code == 0 and json.loads(out)["poly"] == "coeffs:1,1/2,0"


def test_polya_and_seq_lmesh(capsys):
    assert run(capsys, "polya-schur-iv", "seq:1,1,1,1,1,1,1", "--K", "6")[0] == 0
    code, out, _ = run(capsys, "polya-schur-iv", "seq:1,1,3", "--K", "2", "--json")
    assert code == 1 and json.loads(out) == {"holds": False, "first_failure": 2}
    assert run(capsys, "polya-schur-iv", "seq:1,1", "--K", "2")[0] == 3
    code, out, _ = run(capsys, "seq-lmesh", "seq:1,1,1/4", "--K", "2", "--json")
    assert code == 0 and abs(json.loads(out)["approx"] - (7 + 4 * 3**0.5)) < 1e-8
    assert run(capsys, "seq-lmesh", "seq:1,1,1,5", "--K", "3")[0] == 3


def test_verify(capsys):
    code, out, err = run(
        capsys, "verify", "--theorem", "identity_leibniz", "--trials", "20",
        "--deg-min", "0", "--deg-max", "6", "--seed", "3",
    )
    d = json.loads(out)
    assert code == 0 and d["passed"] == 20 and d["failed"] == 0
    assert "passed 20/20" in err
    code, out, _ = run(
        capsys, "verify", "--theorem", "riesz", "--trials", "5",
        "--deg-min", "1", "--deg-max", "3", "--seed", "3",
    )
    assert code == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["mesh", "coeffs:1,x"],
        ["mesh"],
        ["nosuch"],
        ["mesh", "coeffs:1,-3,1", "--tol", "abc"],
        ["verify", "--theorem", "bogus", "--trials", "1", "--deg-min", "2", "--deg-max", "2", "--seed", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
