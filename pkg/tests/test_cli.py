import json

import pytest

from rankfun.cli import run


def call(*argv):
    code, text = run(list(argv))
    return code, (json.loads(text) if text else None)


@pytest.fixture()
def emitted(tmp_path):
    def emit(name):
        code, doc = call("examples", "emit", name)
        assert code == 0
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(doc))
        return str(path)

    return emit


def test_examples_list():
    code, out = call("examples", "list")
    assert code == 0 and "d3-custom" in out["examples"]


def test_emit_then_validate_roundtrip(emitted):
    for name in ["And2-d3", "d3-custom", "OA-d2", "nakayama-n3-l2-d3"]:
        code, out = call("validate", emitted(name))
        assert code == 0 and out["ok"]


def test_check_ro_d3_custom(emitted):
    code, out = call("check-ro", emitted("d3-custom"))
    assert code == 0 and out["passed"]


def test_check_ro_failure_exit_1(emitted, tmp_path):
    rank = tmp_path / "rank.json"
    code, doc = call("examples", "emit", "OA-d3")
    values = {x: "1" for x in doc["skeleton"]["indecs"]}
    values["21"] = "3/1"
    rank.write_text(json.dumps({"values": values}))
    code, out = call("check-ro", emitted("OA-d3"), str(rank))
    assert code == 1 and not out["passed"]


def test_check_rm(emitted):
    code, out = call("check-rm", emitted("And2-d3"))
    assert code == 0 and out["passed"]


def test_cone_rays_oa(emitted):
    code, out = call("cone", "rays", emitted("OA-d3"))
    assert code == 0
    assert out["rays"] == [["1/1"] * 8]


def test_cone_hilbert_and_decompose(emitted):
    code, out = call("cone", "hilbert", emitted("nakayama-n3-l2-d3"), "--lattice", "morphisms")
    assert code == 0 and out["hilbert_basis"] == [["2/1"] * 3]
    code, out = call("cone", "decompose", emitted("d3-custom"))
    assert code == 0 and out["unique"]


def test_psi_values_and_parity(emitted):
    path = emitted("And2-d3")
    assert call("psi", path, "--angle", "0")[1]["value"] == "1/1"
    assert call("psi", path, "--angle", "0", "--rotate", "4")[1]["value"] == "0/1"
    code, out = call("psi", emitted("OA-d2"), "--angle", "0")
    assert code == 2 and "odd" in out["message"]
    code, out = call("check-rm", emitted("OA-d2"))
    assert code == 2 and out["error"] == "parity"


def test_phi_even_d(emitted):
    code, out = call("phi", emitted("OA-d2"), "--object", "1,21")
    assert code == 0 and out["value"] == "2/1"


def test_varphi_and_psi_mod():
    alg = '{"n": 3, "ell": 2}'
    morph = '{"rows": ["P2"], "cols": ["P1"], "entries": [[[{"path_len": 1, "coeff": "1/1"}]]]}'
    code, out = call("varphi", alg, '{"simple_values": {"1": 1, "2": 1, "3": 1}}', morph)
    assert code == 0 and out == {"image": [[1, 1]], "value": "1/1"}
    code, out = call("psi-mod", alg, '{"kind": "objects", "values": {"P1": 2, "P2": 2, "P3": 2}}', "[[2, 1]]", "--d", "3")
    assert code == 0 and out["value"] == "1/1"
    code, out = call("psi-mod", alg, '{"kind": "additive", "simple_values": {"1": 1, "2": 1, "3": 1}}', "[[2, 1]]", "--d", "1")
    assert code == 0 and out["value"] == "1/1"
    code, out = call("psi-mod", alg, '{"kind": "additive", "simple_values": {"1": 1, "2": 1, "3": 1}}', "[[2, 1]]", "--d", "2")
    assert code == 2 and out["error"] == "parity"


def test_decompose_and_schanuel():
    alg = '{"n": 3, "ell": 2}'
    code, out = call("decompose", alg, '{"simple_values": {"1": 2, "2": 2, "3": 2}}', "--d", "3")
    assert code == 0 and out["decomposition"] == [{"orbit": [1, 2, 3], "multiplicity": 2}]
    code, out = call("decompose", alg, '{"simple_values": {"1": 2, "2": 0, "3": 2}}', "--d", "3")
    assert code == 2
    code, out = call("schanuel", alg, "[[1, 1]]", "[[1, 1]]", "--d", "3", "--padded")
    assert code == 0 and out["balanced"]
    code, out = call("schanuel", alg, "[[1, 1]]", "[[2, 1]]", "--d", "3")
    assert code == 0 and out["result"] == "not homotopy equivalent"


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"d": 1, "indecs": [')
    code, out = call("validate", str(bad))
    assert code == 2 and "line 1" in out["message"]
    code, out = call("validate", str(tmp_path / "missing.json"))
    assert code == 2
    code, out = call("validate", '{"d": 1, "indecs": ["X"], "suspension": {"X": "Y"}}')
    assert code == 1 and not out["ok"]
    code, out = call("varphi", '{"n": 3, "ell": 2}', '{"simple_values": {"1": 1}}', '{"rows": [], "cols": []}')
    assert code == 2
    code, _ = call("nonsense-verb")
    assert code == 2


def test_output_is_deterministic(emitted):
    path = emitted("OA-d3")
    assert run(["cone", "hilbert", path]) == run(["cone", "hilbert", path])
