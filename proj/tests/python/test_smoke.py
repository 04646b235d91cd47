import json
from pathlib import Path

import pytest

import sabotage

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_identity_and_edge_gate():
    loop = load("loop.json")
    assert sabotage.check("s", loop, loop)["answer"] == "yes"
    verdict = sabotage.check("s", loop, load("cycle2.json"))
    assert verdict["answer"] == "no"
    assert verdict["witness"]["condition"] == "edge-count"


def test_golden_pair():
    a, b = load("ma.json"), load("mb.json")
    assert sabotage.check("modal", a, b)["answer"] == "yes"
    for kind in ("s", "d", "g", "r"):
        assert sabotage.check(kind, a, b)["answer"] == "no"
        assert sabotage.oracle(kind, a, b)["answer"] == "no"


def test_checker_matches_oracle_on_random_pairs():
    for seed in range(40):
        a = sabotage.random_model(2 * seed, 3, 4)
        b = sabotage.random_model(2 * seed + 1, 3, 4)
        for kind in sabotage.KINDS:
            checked = sabotage.check(kind, a, b, cache=True)["answer"]
            assert checked == sabotage.oracle(kind, a, b)["answer"]


def test_formulas():
    loop = load("loop.json")
    assert sabotage.parse_formula("sab  box false") == "sab box false"
    assert sabotage.evaluate(loop, "dia p")
    assert not sabotage.evaluate(loop, "sab sab true")
    assert sabotage.evaluate(load("cycle2.json"), "rem dia true", all_worlds=True) == {"u": False, "v": False}
    with pytest.raises(sabotage.SabotageError):
        sabotage.evaluate(loop, "(p &")


def test_characteristic_formula():
    loop = load("loop.json")
    assert sabotage.characteristic_formula("d", loop) == "((@w -> (p & (dia @w & box @w))) & ~rem true)"
    assert sabotage.char_check("s", loop, loop)
    assert not sabotage.char_check("s", load("ma.json"), load("mb.json"))
    dense = {
        "worlds": ["a", "b"],
        "edges": [["a", "a"], ["a", "b"], ["b", "a"], ["b", "b"]],
        "propositions": ["p"],
        "valuation": {"p": []},
        "point": "a",
    }
    with pytest.raises(sabotage.SizeGuardExceeded):
        sabotage.characteristic_formula("s", dense)


def test_translations():
    loop = load("loop.json")
    f = sabotage.translate_f(loop)
    assert f["valuation"]["i"] == ["w·w·i"]
    assert sabotage.translate_g(loop)["edges"] == [["w", "w"]]
    assert sabotage.translate_g(loop, "intent")["edges"] == [["w", "w"], ["w", "w_j"]]


def test_invalid_model_is_rejected():
    with pytest.raises(sabotage.SabotageError):
        sabotage.check("s", {"worlds": [], "edges": []}, load("loop.json"))
