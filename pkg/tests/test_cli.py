import subprocess
import sys

import pytest

from hookparts.cli import CliConfig, UsageError, main, run
from hookparts.export import golden_csv


def test_table_is_golden(capsys):
    assert main(["table", "--n-max", "15"]) == 0
    assert capsys.readouterr().out == golden_csv("table1.csv")


def test_delta_table_is_golden(tmp_path):
    out = tmp_path / "t2.csv"
    assert main(["delta-table", "--n-max", "15", "--out", str(out)]) == 0
    assert out.read_bytes() == golden_csv("table2.csv").encode()


def test_table_row_six(capsys):
    main(["table", "--n-max", "6"])
    assert capsys.readouterr().out.splitlines()[-1] == "6,8,10,7,5,1,1"


def test_roots_linear(capsys):
    assert main(["roots", "--n", "2"]) == 0
    assert capsys.readouterr().out == "2,-1.0,0.0,0.0\n"


def test_roots_thirty(capsys):
    assert main(["roots", "--n", "30"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 29
    assert all(float(r.split(",")[3]) <= 1e-10 for r in rows)


def test_roots_lift_coefficients(capsys):
    assert main(["roots", "--n", "2", "--family", "W", "--format", "coeffs"]) == 0
    assert capsys.readouterr().out == "2,3,8,3\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["roots", "--n", "0"],
        ["table", "--n-max", "0"],
        ["verify", "--suite", "unimodality", "--n-max", "5"],
        ["verify", "--suite", "ratios", "--m-max", "3"],
        ["roots", "--n", "5", "--tol", "-1"],
    ],
)
def test_invalid_input_exits_2(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_unknown_suite_is_argparse_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_config_validation():
    with pytest.raises(UsageError):
        CliConfig("roots").validate()
    with pytest.raises(UsageError):
        CliConfig("dance").validate()


def test_verify_unimodality_small(capsys):
    assert main(["verify", "--suite", "unimodality", "--n-max", "6"]) == 0
    out = capsys.readouterr().out
    assert out and all(line.startswith("PASS") for line in out.splitlines())


@pytest.mark.parametrize("suite", ["tables", "certificates", "ratios", "limits"])
def test_verify_suites_pass(suite):
    status, text = run(CliConfig("verify", suite=suite, n_max=40, m_max=10))
    assert status == 0, text
    assert "FAIL" not in text


def test_verify_roots_suite():
    status, text = run(CliConfig("verify", suite="roots", n_max=12))
    assert status == 0 and text.count("PASS") == 4


def test_fail_line_gives_exit_1(monkeypatch, capsys):
    import hookparts.cli as cli

    monkeypatch.setitem(cli._SUITES, "ratios", lambda cfg: ["FAIL injected"])
    assert main(["verify", "--suite", "ratios"]) == 1
    assert "FAIL injected" in capsys.readouterr().err


def test_plot_svg(tmp_path):
    out = tmp_path / "zeros.svg"
    assert main(["plot", "--n-max", "20", "--out", str(out)]) == 0
    svg = out.read_text()
    assert svg.startswith("<svg") and 'width="800"' in svg
    assert "1+2i" in svg and "1-2i" in svg
    assert 'stroke-dasharray' in svg
    # one dot per zero of F_2..F_20
    assert svg.count('fill="#c03030"') == sum(n - 1 for n in range(2, 21))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hookparts", "table", "--n-max", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "n\\m,0,1,2\n1,1\n2,1,1\n3,2,1,1\n"
