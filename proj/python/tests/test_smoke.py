import hilbert_hodge as hh
import pytest


def test_table_n2_m11():
    doc = hh.table(2, [1, 1], cusps=1, genus=1)
    h2 = doc["tables"]["H"][2]
    assert h2["dim"] == 33
    assert {(e["p"], e["q"]): e["dim"] for e in h2["hodge"]} == {
        (0, 4): 8,
        (2, 2): 16,
        (4, 0): 8,
        (4, 4): 1,
    }
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_sheaf_matrix_cells():
    doc = hh.sheaf_matrix(2, [1, 0])
    cells = {(c["p"], c["l"]): c["monomials"][0]["exponents"] for c in doc["tables"]["C"]["cells"]}
    assert cells == {(0, 0): [-1, 0], (1, 1): [-1, 2], (2, 1): [3, 0], (3, 2): [3, 2]}


def test_oracle_cap_skips():
    doc = hh.sheaf_matrix(3, [2, 2, 2], oracle_cap=3)
    assert {c["status"] for c in doc["checks"]} == {"skipped"}


def test_eisenstein():
    doc = hh.eisenstein(3, [2, 2, 2], cusps=1)
    k4 = doc["tables"]["Eis"][1]
    assert k4["k"] == 4 and k4["dim"] == 2
    assert k4["basis"][0] == {"subset": [1], "alpha": [3, 4, 4], "beta": [1, 0, 0]}


def test_big_integers():
    assert hh.rank(40, [3] * 40) == 4**40
    assert hh.count_N([1] * 60, 60) == 118264581564861424


def test_errors():
    with pytest.raises(hh.Error, match="TrivialSystem"):
        hh.table(2, [0, 0], cusps=1, genus=1)
    with pytest.raises(hh.Error, match="InconsistentInvariants"):
        hh.table(3, [1, 1, 1], cusps=1, genus=0)


def test_verify_and_cli():
    doc = hh.verify(max_n=2, max_m=1)
    assert doc["checks"] and all(c["status"] != "fail" for c in doc["checks"])
    code, out, err = hh.run_cli(["table", "--n", "2", "--m", "0,0", "--cusps", "1", "--genus", "1"])
    assert code == 1 and out == "" and "TrivialSystem" in err
