import csv
import io
import subprocess
import sys
import time

import numpy as np
import pytest

from qudit_eraser.cli import main, parse_angle


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, list(csv.DictReader(io.StringIO(out))), err


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    return exc.value.code, capsys.readouterr().err


@pytest.mark.parametrize("text, value", [
    ("0.75pi", 0.75 * np.pi), ("pi/2", np.pi / 2), ("3pi/4", 0.75 * np.pi),
    ("-pi", -np.pi), ("pi", np.pi), ("2.5", 2.5), ("1e-3", 1e-3), ("0.5*pi", 0.5 * np.pi),
])
def test_parse_angle(text, value):
    assert parse_angle(text) == pytest.approx(value, rel=1e-15)


def test_parse_angle_rejects_garbage():
    import argparse
    with pytest.raises(argparse.ArgumentTypeError):
        parse_angle("halfpi")


def test_duality_three_points(capsys):
    code, rows, err = run(capsys, "duality", "--points", "3")
    assert code == 0
    assert list(rows[0]) == ["alpha", "V", "D", "D2_plus_V2", "H_path_given_Ms", "I_path_Ms"]
    got = [(float(r["V"]), float(r["D"])) for r in rows]
    c = np.cos(np.pi / 4)
    np.testing.assert_allclose(got, [(1, 0), (c, c), (0, 1)], atol=1e-12)
    assert all(abs(float(r["D2_plus_V2"]) - 1) < 1e-11 for r in rows)
    assert "max |D^2+V^2-1|" in err


def test_duality_default_sweep_is_fast(capsys):
    t0 = time.perf_counter()
    code, rows, _ = run(capsys, "duality")
    assert time.perf_counter() - t0 < 5
    assert code == 0 and len(rows) == 33


@pytest.mark.parametrize("argv", [
    ("duality", "--start", "1", "--stop", "1"),
    ("duality", "--points", "1"),
    ("duality", "--stop", "4"),
    ("figure3", "--start", "pi", "--stop", "0"),
    ("average-e", "--panels", "63"),
    ("erase",),
    ("michelson",),
    ("michelson", "--eta", "pi", "--f0", "1e14"),
    ("michelson", "--f0", "1e14"),
    ("michelson", "--eta", "4"),
    ("qudit-demo", "--dim", "1"),
    ("nonsense",),
])
def test_usage_errors_exit_2(capsys, argv):
    code, err = usage_error(capsys, *argv)
    assert code == 2
    assert err


def test_figure3_short_sweep(capsys):
    code, rows, _ = run(capsys, "figure3", "--points", "5")
    assert code == 0
    assert list(rows[0])[-1] == "identity_residual"
    for r in rows:
        assert float(r["identity_residual"]) < 1e-6
        assert abs(float(r["H_phase_given_D"]) - 1) < 1e-9
    assert float(rows[0]["identity_residual"]) < 1e-12
    assert float(rows[-1]["identity_residual"]) < 1e-12


def test_figure3_random_beta_gamma(capsys):
    code, rows, _ = run(capsys, "figure3", "--points", "4", "--beta", "0.3", "--gamma", "5.1")
    assert code == 0
    assert max(float(r["identity_residual"]) for r in rows) < 1e-6


def test_average_e(capsys):
    code, rows, err = run(capsys, "average-e", "--points", "3", "--panels", "512")
    assert code == 0 and len(rows) == 3
    vals = [float(r["E_bar"]) for r in rows]
    assert max(vals) - min(vals) < 1e-6
    assert vals[0] == pytest.approx(0.389, abs=1e-3)
    assert "E_bar" in err


def test_erase_reports_identity(capsys):
    code, rows, err = run(capsys, "erase", "--alpha", "0.75pi")
    assert code == 0 and len(rows) == 1
    r = rows[0]
    assert abs(float(r["phase_gain"]) - float(r["I_path_Ms"])) < 1e-6
    assert float(r["E"]) == pytest.approx(float(r["phase_gain"]), abs=1e-9)
    assert "PASS" in err


def test_erase_fixed_phi0_chi(capsys):
    code, rows, _ = run(capsys, "erase", "--alpha", "0.75pi", "--phi0", "0.2", "--chi", "1.0")
    assert code == 0
    assert float(rows[0]["phi0"]) == pytest.approx(0.2)
    assert float(rows[0]["E"]) >= 0


def test_erase_failure_exit_1(capsys):
    # an impossible tolerance turns the check into a failure
    code, _, err = run(capsys, "erase", "--alpha", "1.0", "--tolerance", "-1")
    assert code == 1
    assert "FAIL" in err


def test_michelson_extreme_case(capsys):
    code, rows, err = run(capsys, "michelson", "--eta", "pi")
    assert code == 0
    r = rows[0]
    assert float(r["V"]) == pytest.approx(0.0, abs=1e-12)
    assert float(r["residual"]) < 1e-6
    assert float(r["energy_basis_angle"]) < 1e-3
    assert float(r["V_plus"]) == pytest.approx(1.0, abs=1e-9)
    assert "(alpha, beta, gamma)" in err


def test_michelson_cavity_mode(capsys):
    kappa = 2 * np.pi * 5e6
    f0 = 3.8e14
    f_c = f0 + 20 * kappa / (2 * np.pi)
    code, rows, err = run(capsys, "michelson", "--f0", repr(f0), "--f-uncoupled", repr(f0),
                          "--f-coupled", repr(f_c), "--kappa", repr(kappa))
    assert code == 0
    assert abs(float(rows[0]["eta"]) - np.pi) < 0.1
    assert "strong detuning = True" in err


def test_michelson_small_eta(capsys):
    code, rows, _ = run(capsys, "michelson", "--eta", "0.01")
    assert code == 0
    assert float(rows[0]["I_path_Ms"]) < 1e-3


def test_qudit_demo(capsys):
    code, rows, _ = run(capsys, "qudit-demo", "--dim", "4", "--points", "2", "--seed", "3")
    assert code == 0 and len(rows) == 2
    for r in rows:
        assert float(r["in_plane_probability"]) == pytest.approx(1.0, abs=1e-10)
        assert float(r["H_bruteforce"]) >= float(r["H_symmetric"]) - 1e-9
        assert float(r["residual"]) < 1e-6


def test_output_is_deterministic(capsys, tmp_path):
    argv = ["figure3", "--points", "4"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    path = tmp_path / "f3.csv"
    main(argv + ["--out", str(path)])
    assert path.read_text() == first
    assert capsys.readouterr().out == ""


def test_twelve_significant_digits(capsys):
    _, rows, _ = run(capsys, "duality", "--points", "3")
    assert rows[1]["V"] == f"{np.cos(np.pi / 4):.12g}"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qudit_eraser", "duality", "--points", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0].startswith("alpha,V,D")
