import json
from fractions import Fraction

import pytest

from crkit.algebra import heisenberg, validate
from crkit.catalog import get_entry, quadric_orbit
from crkit.cli import main
from crkit.cr import CRPair
from crkit.errors import InputError
from crkit.fileio import (
    algebra_payload,
    cr_pair_payload,
    detect_kind,
    load_algebra,
    load_cr_pair,
    load_orbit_model,
    orbit_payload,
)
from crkit.scalars import QI

F = Fraction


def heisenberg_payload():
    return {
        "dimension": 3,
        "field": "Q",
        "basis": ["x", "y", "z"],
        "brackets": [[0, 1, [[2, "1"]]]],
    }


def heisenberg_pair_payload():
    payload = heisenberg_payload()
    payload["h_basis"] = []
    payload["R_basis"] = [["1", "0", "0"], ["0", "1", "0"]]
    payload["J"] = [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]]
    return payload


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def test_algebra_roundtrip():
    L = load_algebra(heisenberg_payload())
    assert L == heisenberg()
    again = load_algebra(algebra_payload(L))
    assert again == L


def test_algebra_loader_rejects_wrong_order():
    payload = heisenberg_payload()
    payload["brackets"] = [[1, 0, [[2, "1"]]]]
    with pytest.raises(InputError):
        load_algebra(payload)


def test_algebra_loader_rejects_bad_scalar_and_duplicates():
    payload = heisenberg_payload()
    payload["brackets"] = [[0, 1, [[2, "x"]]]]
    with pytest.raises(InputError):
        load_algebra(payload)
    payload = heisenberg_payload()
    payload["brackets"] = [[0, 1, [[2, "1"]]], [0, 1, [[2, "2"]]]]
    with pytest.raises(InputError):
        load_algebra(payload)


def test_gaussian_algebra_payload():
    payload = {
        "dimension": 2,
        "field": "Q_i",
        "basis": ["a", "b"],
        "brackets": [[0, 1, [[0, ["0", "1"]], [1, "1/2"]]]],
    }
    L = load_algebra(payload)
    assert L.field == QI
    out = algebra_payload(L)
    assert out["brackets"] == [[0, 1, [[0, ["0", "1"]], [1, "1/2"]]]]


def test_cr_pair_roundtrip():
    g, pair = load_cr_pair(heisenberg_pair_payload())
    assert g == heisenberg()
    payload = cr_pair_payload(pair)
    g2, pair2 = load_cr_pair(payload)
    assert pair2 == pair


def test_orbit_roundtrip():
    model = quadric_orbit(2, 1).model
    payload = orbit_payload(model)
    loaded = load_orbit_model(payload)
    assert loaded.codim == model.codim
    assert loaded.m.dim == model.m.dim
    assert loaded.h.dim == model.h.dim


def test_detect_kind():
    assert detect_kind(heisenberg_payload()) == "algebra"
    assert detect_kind(heisenberg_pair_payload()) == "cr-pair"
    assert detect_kind({"ambient": {}, "real_basis": []}) == "orbit"
    with pytest.raises(InputError):
        detect_kind({"what": 1})


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_analyze_algebra_file(tmp_path, capsys):
    path = write(tmp_path, "heis.lie", heisenberg_payload())
    code = main(["analyze", path, "--set", "validate,structure"])
    out = capsys.readouterr().out
    assert code == 0
    assert "antisymmetry: pass" in out
    assert "jacobi: pass" in out
    assert "algebra.nilpotent: True" in out


def test_analyze_jacobi_failure_is_data_not_error(tmp_path, capsys):
    payload = {
        "dimension": 3,
        "field": "Q",
        "basis": ["a", "b", "c"],
        "brackets": [
            [0, 1, [[2, "1"]]],
            [0, 2, [[2, "1"]]],
            [1, 2, [[0, "1"]]],
        ],
    }
    path = write(tmp_path, "broken.lie", payload)
    code = main(["analyze", path, "--set", "validate"])
    out = capsys.readouterr().out
    assert code == 0
    assert "jacobi: fail" in out
    assert "(0, 1, 2)" in out


def test_analyze_missing_file_exits_2(capsys):
    assert main(["analyze", "/nonexistent/missing.lie"]) == 2


def test_analyze_unknown_analysis_exits_2(tmp_path, capsys):
    path = write(tmp_path, "heis.lie", heisenberg_payload())
    assert main(["analyze", path, "--set", "frobnicate"]) == 2


def test_analyze_levi_on_pair(tmp_path, capsys):
    path = write(tmp_path, "heis.orbitpair", heisenberg_pair_payload())
    code = main(["analyze", path, "--set", "levi"])
    out = capsys.readouterr().out
    assert code == 0
    assert "levi-kernel: 0" in out
    assert "nondegenerate" in out
    assert "levi-signature: (1, 0, 0)" in out


def test_analyze_orbit_file_full_pipeline(tmp_path, capsys):
    payload = orbit_payload(get_entry("heis_solv").model)
    payload["kahler"] = True
    payload["pi1"] = {"real": [0, []], "complex": [0, []], "surjective": True}
    path = write(tmp_path, "heis_solv.orbit", payload)
    code = main(["analyze", path, "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    by_check = {(r.get("analysis"), r.get("check")): r for r in records}
    assert by_check[("fibration", "degenerate")]["status"] == "True"
    assert by_check[("globalize", "overall")]["status"].startswith("globalizable")
    assert by_check[("fine-class", "kahler-g-solvable")]["status"] == "pass"


def test_analyze_structured_output_deterministic(tmp_path, capsys):
    path = write(tmp_path, "heis.lie", heisenberg_payload())
    main(["analyze", path, "--format", "json"])
    first = capsys.readouterr().out
    main(["analyze", path, "--format", "json"])
    second = capsys.readouterr().out
    assert first == second


def test_catalog_verify_single(capsys):
    code = main(["catalog", "verify", "quadric(2,1)"])
    out = capsys.readouterr().out
    assert code == 0
    assert "all-match" in out


def test_catalog_verify_unknown_exits_2(capsys):
    assert main(["catalog", "verify", "nope(1,2)"]) == 2


def test_catalog_show_p2r(capsys):
    code = main(["catalog", "show", "p2r"])
    out = capsys.readouterr().out
    assert code == 0
    assert "codim: match" in out
    assert "not-decidable-at-algebra-level" in out
    assert "SO3" in out


def test_catalog_show_json_export(capsys):
    code = main(["catalog", "show", "c2_torus", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "orbit"
    assert payload["verdict"].startswith("globalizable")
    # the export loads back
    model = load_orbit_model(payload)
    assert model.codim == 0


def test_catalog_show_needs_name(capsys):
    assert main(["catalog", "show"]) == 2


def test_explain_flag_appends_rationale(capsys):
    code = main(["catalog", "show", "p2r", "--explain"])
    out = capsys.readouterr().out
    assert code == 0
    assert "note:" in out


def test_malformed_pair_exits_2(tmp_path, capsys):
    payload = heisenberg_pair_payload()
    payload["h_basis"] = [["0", "0", "1"]]  # h not inside R
    path = write(tmp_path, "bad.pair", payload)
    assert main(["analyze", path]) == 2
