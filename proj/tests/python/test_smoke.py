import json

import spinorqc


def test_eval_canonical_text():
    assert spinorqc.eval_expression("P*P - P") == "0"
    assert spinorqc.eval_expression("B1^8") == "1"
    assert spinorqc.eval_expression("g1*g1") == "-1"
    assert spinorqc.eval_expression("1/2 + 1/2*rt2", mode="float").startswith("1.2071")


def test_check_braid_report():
    report = json.loads(spinorqc.check("braid"))
    assert report["relation"] is True
    assert report["group_order"] == 48
    assert report["failures"] == []


def test_check_all_deterministic():
    first = spinorqc.check("all", samples=20, seed=7)
    second = spinorqc.check("all", samples=20, seed=7)
    assert first == second
    assert json.loads(first)["passed"] is True


def test_encode_decode_roundtrip():
    state = {"a1": "1/2", "a2": "0", "a3": "1/3", "a4": "-2/7"}
    text = spinorqc.encode(json.dumps(state))
    assert json.loads(spinorqc.decode(text)) == state


def test_bell_and_teleport():
    assert spinorqc.braid_group_order() == 48
    assert spinorqc.teleport_exact("3/5", "-1/2")
    assert "tensor" in spinorqc.bell("Phi+")
