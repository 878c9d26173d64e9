import json
import subprocess
import sys

import pytest

from segrecusp.cli import main
from segrecusp.errors import ConfigError
from segrecusp.report import SurfaceConfig, canonical_dumps


def write_config(tmp_path, payload, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_config_symbol_instantiates_expected_quadrics(tmp_path):
    path = write_config(tmp_path, {"symbol": "[221]",
                                   "params": {"a": "1", "b": "2", "c": "3"}})
    surface = SurfaceConfig.load(path).build()
    P = surface.pencil.P
    assert P[0][1] == 1 and P[1][1] == 1 and P[2][3] == 2 and P[3][3] == 1 \
        and P[4][4] == 3


def test_config_rejects_asymmetric_matrix(tmp_path):
    bad = [[0] * 5 for _ in range(5)]
    bad[0][1] = 1  # not mirrored
    path = write_config(tmp_path, {"quadrics": [bad, [[0] * 5 for _ in range(5)]]})
    with pytest.raises(ConfigError):
        SurfaceConfig.load(path).build()


def test_config_raw_quadrics_recompute_symbol(tmp_path):
    from segrecusp.appendix import appendix_cases
    from segrecusp.pencil import SegreSymbol
    case = [c for c in appendix_cases()
            if SegreSymbol.parse(c.symbol) == SegreSymbol.parse("[32]")][0]
    path = write_config(tmp_path, {
        "quadrics": [[[str(c) for c in row] for row in case.P],
                     [[str(c) for c in row] for row in case.Q]]})
    surface = SurfaceConfig.load(path).build()
    assert surface.pencil.segre_symbol() == SegreSymbol.parse("[32]")


def test_config_parse_error_reports_location(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"symbol": [221]')
    with pytest.raises(ConfigError) as info:
        SurfaceConfig.load(str(path))
    assert ":" in str(info.value)


def test_verify_appendix_exit_zero(capsys):
    assert main(["verify-appendix"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["all_pass"] is True
    assert [(r["m"], r["branch_mult"]) for r in out["records"]] == \
        [(2, 0), (2, 0), (2, 0), (3, 0), (3, 0), (4, 0), (4, 0)]


def test_table1_subset(capsys):
    assert main(["table1", "--symbols", "[122],[1(13)]"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["all_pass"] is True
    cells = {r["symbol"]: r["cells"] for r in out["rows"]}
    assert cells["[122]"]["x"]["got"] == 2
    assert cells["[1(13)]"]["DS"]["got"] == "reducible"


def test_surface_report_deterministic(tmp_path, capsys):
    path = write_config(tmp_path, {"symbol": "[23]",
                                   "params": ["1", "2"], "seed": 6})
    assert main(["surface-report", "--config", path]) == 0
    first = capsys.readouterr().out
    assert main(["surface-report", "--config", path]) == 0
    second = capsys.readouterr().out
    assert first == second
    # round-trip: re-serializing the parsed report is byte-identical
    assert canonical_dumps(json.loads(first)) == first


def test_point_case_fixed_point(tmp_path, capsys):
    path = write_config(tmp_path, {"symbol": "[1(11)(11)]",
                                   "params": ["1", "2", "5"], "seed": 1})
    code = main(["point-case", "--config", path, "--random", "--count", "2"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert [c["case"] for c in out["cases"]] == ["CaseI", "CaseI"]


def test_line_report_command(tmp_path, capsys):
    path = write_config(tmp_path, {"symbol": "[12(11)]",
                                   "params": ["1", "2", "5"], "seed": 2})
    assert main(["line-report", "--config", path, "--line", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert "branch_mult" in out and "m" in out


def test_cli_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "segrecusp.cli",
                           "table1", "--symbols", "[11111]"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["all_pass"] is True


def test_report_byte_identical_across_processes(tmp_path):
    path = write_config(tmp_path, {"symbol": "[1(13)]",
                                   "params": ["1", "2"], "seed": 3})
    outs = []
    for _ in range(2):
        proc = subprocess.run([sys.executable, "-m", "segrecusp.cli",
                               "surface-report", "--config", path],
                              capture_output=True, text=True, timeout=300)
        assert proc.returncode == 0
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
