import json
from fractions import Fraction

import pytest

import chargen


def test_characters():
    assert chargen.character_z([0, 0, 0]) == "1"
    assert chargen.character_z([1, 0, 1]) == "-1 + z1*z3"
    assert chargen.character_z([2, 0, 0]) == "-z2 + z1^2"
    assert chargen.character_x([1, 0, 0]).count("x") >= 4


def test_numbers():
    assert chargen.dim([1, 0, 1]) == 15
    assert chargen.dim([0, 0, 1], algebra="b3") == 8
    assert chargen.eigenvalue([1, 0, 0]) == Fraction(15, 2)
    assert chargen.kostant(1, 1, 1) == 4


@pytest.mark.parametrize("method", ["closed", "kostant", "genfun", "direct"])
def test_multiplicity_methods(method):
    assert chargen.multiplicity([2, 0, 2], [1, 0, 1], method) == 3


def test_expand_and_verify():
    g = chargen.expand("G", [1, 0, 1])
    assert g[(1, 0, 1)] == "-1 + z1*z3"
    e = chargen.expand("E", [2, 2, 2])
    assert all(int(v) == chargen.dim(k) for k, v in e.items())
    assert chargen.verify_pde("G", [2, 2, 2])
    assert chargen.verify_pde("G_R", [3, 3])


def test_errors():
    with pytest.raises(chargen.ChargenError):
        chargen.dim([1, -1, 0])
    with pytest.raises(ValueError):
        chargen.dim([1, 0])


def test_cli_and_criterion():
    code, out, _ = chargen.run_cli("dim", "-m", "1,0,1")
    assert code == 0
    assert json.loads(out)["result"]["value"] == "15"
    passed, line = chargen.criterion(9)
    assert passed and line.startswith("criterion 9 PASS")
