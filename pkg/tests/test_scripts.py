import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def run(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *map(str, args)],
                          capture_output=True, text=True, timeout=300)


def test_run_suite_script(tmp_path):
    out = tmp_path / "suite.json"
    proc = run("run_suite.py", "--n", 2, "--out", out)
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(out.read_text())
    assert doc["passed"] and doc["config"]["grid"][0] == "-inf"


def test_lift_sweep_script():
    proc = run("lift_sweep.py", "--max-n", 3, "--per-n", 8)
    assert proc.returncode == 0 and "0 mismatches" in proc.stdout


def test_duality_sweep_script():
    proc = run("duality_sweep.py", "--per-size", 1, "--q-samples", 20, "--pairs", 20)
    assert proc.returncode == 0 and "0 failing instances" in proc.stdout
