from __future__ import annotations

import io
import json
import os
from pathlib import Path

import pytest

from fvslab.cli import run
from fvslab.formats import read_cf, read_pdg, read_psk

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "solve_fvs_o2": ["solve", "fvs", "o2.pdg", "--oracle"],
    "verify_digirth_c4g5": ["verify", "digirth", "c4g5.pdg", "--expect", "5"],
    "verify_fvs_c4g5": ["verify", "fvs", "c4g5.pdg", "--expect", "4"],
    "verify_normal_o2": ["verify", "normal", "o2.pdg", "--expect", "4"],
    "verify_coating_cube": ["verify", "coating", "cube.psk", "cube12.cf"],
    "verify_arboricity_cube": ["verify", "arboricity", "cube.psk"],
    "verify_recursive_g6": ["verify", "recursive", "builtin6.json", "--g", "6"],
    "report_tau": ["report", "tau", "--g", "6", "--to", "20"],
}


def invoke(argv: list) -> tuple:
    buf = io.StringIO()
    code = run(argv, out=buf)
    text = buf.getvalue()
    data = json.loads(text) if text.strip() else None
    if data is not None:
        data.pop("elapsed_s", None)
    return code, data


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name: str, monkeypatch) -> None:
    monkeypatch.chdir(DATA)
    code, data = invoke(CASES[name])
    path = GOLDEN / f"{name}.json"
    if os.environ.get("FVSLAB_UPDATE_GOLDEN"):
        path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    assert code == 0
    assert data == json.loads(path.read_text())


def test_gen_writes_claim_sidecar(tmp_path) -> None:
    out = tmp_path / "f.pdg"
    code, _ = invoke(["gen", "frieze", "--k", "3", "--g", "5", "-o", str(out)])
    assert code == 0
    G = read_pdg(out)
    claim = json.loads((tmp_path / "f.pdg.claim.json").read_text())
    assert claim["expected"]["n"] == G.n == 13
    code, data = invoke(["verify", "fvs", str(out), "--expect", "3"])
    assert code == 0 and data["checks"]


def test_gen_to_stdout_round_trips(tmp_path) -> None:
    buf = io.StringIO()
    assert run(["gen", "okg", "--k", "2", "--g", "4"], out=buf) == 0
    G = read_pdg(buf.getvalue())
    assert G.n == 3 * 2 + 1 * 4


def test_coat_and_search(tmp_path, monkeypatch) -> None:
    monkeypatch.chdir(DATA)
    out = tmp_path / "h.pdg"
    code, data = invoke(["coat", "cube.psk", "cube12.cf", "-o", str(out)])
    assert code == 0
    assert read_pdg(out).n == 84
    S = read_psk("cube.psk")
    assert len(read_cf("cube12.cf", S)) == len(S.corner_keys())


def test_failed_expectation_exits_nonzero(monkeypatch) -> None:
    monkeypatch.chdir(DATA)
    code, data = invoke(["verify", "fvs", "o2.pdg", "--expect", "3"])
    assert code == 2
    assert any(c["status"] == "fail" for c in data["checks"])


def test_parse_error_exit_code(tmp_path) -> None:
    bad = tmp_path / "bad.pdg"
    bad.write_text("pdg 1\nq what\n")
    code, data = invoke(["verify", "digirth", str(bad)])
    assert code == 4
    assert data["error"]["kind"] == "parse"


def test_budget_exhaustion_exit_code(monkeypatch) -> None:
    monkeypatch.chdir(DATA)
    monkeypatch.setenv("FVSLAB_BUDGET", "1")
    code, data = invoke(["solve", "fvs", "c4g5.pdg"])
    assert code == 3
    assert data["error"]["kind"] == "resource"


def test_svg_dump(tmp_path, monkeypatch) -> None:
    monkeypatch.chdir(DATA)
    out = tmp_path / "o2.svg"
    code, _ = invoke(["dump", "svg", "o2.pdg", "-o", str(out)])
    text = out.read_text()
    assert code == 0 and text.startswith("<svg") and text.count('class="arc"') == 12
    invoke(["dump", "svg", "o2.pdg", "-o", str(tmp_path / "again.svg")])
    assert (tmp_path / "again.svg").read_text() == text
