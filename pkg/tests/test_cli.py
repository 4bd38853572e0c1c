import csv
import io
import json
import math

import pytest

from magnetomech.cli import PRESETS, main, preset_text
from magnetomech.config import parse_config
from magnetomech.runner import SweepResult, column_names, emit_csv, evaluate_point, points, run

SCHEME2_SWEEP = """\
scheme = scheme2
magnet.radius = 12e-6
magnet.Br = 1.2
ring.r = 5e-6
ring.rho = 2700
ring.I = 1e-6
sweep.variable = ring.R
sweep.start = 180e-6
sweep.stop = 184e-6
sweep.count = 41
"""


def _rows(data: bytes):
    return list(csv.DictReader(io.StringIO(data.decode("utf-8"))))


def _run_cli(capsysbinary, argv):
    code = main(argv)
    out = capsysbinary.readouterr()
    return code, out.out, out.err


def test_scheme2_sweep_marks_unstable_rows():
    result = run(parse_config(SCHEME2_SWEEP))
    rows = _rows(emit_csv(result))
    assert len(rows) == 41
    for row in rows:
        R = float(row["ring.R_m"])
        if R < 183.3e-6:
            assert row["error"] == "" and float(row["h_m"]) > 0
        elif R > 183.4e-6:
            assert row["error"].startswith("unstable: equilibrium_height:")
            assert row["h_m"] == ""
    # alpha is computed before the failing step, so it is still reported
    assert all(row["alpha_1"] for row in rows)


def test_meissner_single_point():
    result = run(parse_config(preset_text("meissner")))
    (row,) = _rows(emit_csv(result))
    assert float(row["k_full_N_per_m"]) == pytest.approx(0.343, abs=1e-3)
    assert float(row["ratio_1"]) == 1.625
    assert float(row["delta_eq_m"]) == pytest.approx(-1.03e-6, rel=0.01)


def test_csv_format_details():
    result = run(parse_config(preset_text("qfig")))
    text = emit_csv(result).decode("utf-8")
    assert "\r" not in text
    lines = text.split("\n")
    assert lines[0] == "osc.nu_Hz,osc.r_m,Q_1,error"
    assert lines[-1] == ""
    assert len(lines) == 1 + 3 * 46 + 1
    first = lines[1].split(",")
    assert first[0] == "1.00000000000e+01" and first[1] == "5.00000000000e-06"


def test_empty_result_is_header_only():
    cfg = parse_config(preset_text("qfig"))
    empty = SweepResult(cfg, [("osc.r", "m")], [("Q", "1")], [])
    assert emit_csv(empty) == b"osc.r_m,Q_1,error\n"


def test_three_rows_four_lines():
    text = preset_text("qfig").replace("osc.nu = 10, 20, 50", "osc.nu = 10").replace(
        "sweep.count = 46", "sweep.count = 3"
    )
    data = emit_csv(run(parse_config(text)))
    assert data.count(b"\n") == 4


def test_error_text_is_quoted_when_needed():
    cfg = parse_config(SCHEME2_SWEEP)
    result = run(cfg)
    result.rows[0].error = 'domain: op: has, comma and "quote"'
    row = _rows(emit_csv(result))[0]
    assert row["error"] == 'domain: op: has, comma and "quote"'


def test_point_order_lists_outer_sweep_inner():
    cfg = parse_config(preset_text("fig2"))
    pts = points(cfg)
    assert len(pts) == 4 * 36
    assert [p["trap.nu"] for p in pts[:2]] == [10.0, 10.0]
    assert pts[36]["trap.nu"] == 20.0
    assert pts[0]["ring.R"] == 25e-6 and pts[35]["ring.R"] == 200e-6


def test_evaluate_point_records_operation():
    cfg = parse_config(SCHEME2_SWEEP)
    p = points(cfg)[-1]
    row = evaluate_point("scheme2", p)
    assert row.error.startswith("unstable: equilibrium_height: requires alpha < 1.329")


def test_json_output():
    result = run(parse_config(preset_text("meissner")))
    from magnetomech.runner import emit_json

    doc = json.loads(emit_json(result))
    assert doc["schema_version"] == 1
    assert doc["inputs"]["scheme"] == "meissner"
    assert doc["columns"] == column_names(result)
    assert doc["rows"][0]["error"] is None
    assert math.isclose(doc["rows"][0]["k_full_N_per_m"], 0.3435, rel_tol=1e-3)


@pytest.mark.parametrize("name", ["fig2", "fig4"])
def test_threads_do_not_change_output(name):
    cfg = parse_config(preset_text(name))
    assert emit_csv(run(cfg, threads=1)) == emit_csv(run(cfg, threads=8))


def test_cli_preset_print(capsysbinary):
    for name in PRESETS:
        code, out, _ = _run_cli(capsysbinary, ["preset", name])
        assert code == 0
        assert out.decode("utf-8") == preset_text(name)
        parse_config(out.decode("utf-8"))


def test_cli_preset_run(capsysbinary):
    code, out, _ = _run_cli(capsysbinary, ["preset", "ring_params", "--run"])
    assert code == 2
    rows = _rows(out)
    assert len(rows) == 18
    assert all(r["error"] == "" for r in rows[:-1])
    assert rows[-1]["error"].startswith("unstable:")
    assert float(rows[-1]["m_sc_A_m2"]) == pytest.approx(1.057e-13, rel=1e-3)


def test_ring_params_preset_values():
    cfg = parse_config(preset_text("ring_params"))
    assert cfg.params["magnet.radius"] == (12e-6,)
    assert cfg.params["magnet.Br"] == (1.2,)
    assert cfg.params["ring.r"] == (5e-6,)
    assert cfg.params["ring.rho"] == (2700.0,)
    assert cfg.params["ring.I"] == (1e-6,)
    assert (cfg.sweep.start, cfg.sweep.stop) == (180e-6, 183.4e-6)


def test_cli_row_errors_exit_2(tmp_path, capsysbinary):
    path = tmp_path / "s2.cfg"
    path.write_text(SCHEME2_SWEEP)
    out_path = tmp_path / "out.csv"
    code, _, _ = _run_cli(capsysbinary, ["scheme2", "--config", str(path), "--out", str(out_path)])
    assert code == 2
    assert len(_rows(out_path.read_bytes())) == 41


def test_cli_usage_errors_exit_1(tmp_path, capsysbinary):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    code, _, err = _run_cli(capsysbinary, ["scheme2", "--config", str(tmp_path / "missing.cfg")])
    assert code == 1 and b"magnetomech:" in err
    bad = tmp_path / "bad.cfg"
    bad.write_text(SCHEME2_SWEEP.replace("ring.r = 5e-6", "ring.r = -1"))
    code, _, err = _run_cli(capsysbinary, ["scheme2", "--config", str(bad)])
    assert code == 1 and b"line 4" in err
    code, _, _ = _run_cli(capsysbinary, ["qfactor", "--set", "osc.rho"])
    assert code == 1


def test_cli_set_and_echo_round_trip(capsysbinary):
    args = ["qfactor", "--set", "osc.rho=2700", "--set", "osc.r=5e-6", "--set", "osc.nu=15"]
    code, echo, _ = _run_cli(capsysbinary, args + ["--echo-config"])
    assert code == 0
    cfg = parse_config(echo.decode("utf-8"))
    assert cfg == parse_config("", "qfactor", {"osc.rho": "2700", "osc.r": "5e-6", "osc.nu": "15"})
    code, out, _ = _run_cli(capsysbinary, args)
    assert code == 0
    assert float(_rows(out)[0]["Q_1"]) == pytest.approx(2.88e7, rel=2e-3)


def test_cli_json_format(capsysbinary):
    code, out, _ = _run_cli(capsysbinary, ["preset", "meissner", "--run", "--format", "json"])
    assert code == 0
    assert json.loads(out)["schema_version"] == 1
