import math

import pytest

from matsplit import BinaryMatroid, Gf2Matrix, catalog_matroid
from matsplit.errors import CorankTooLarge, UnknownLabel

from conftest import cols_of, random_matroid
from oracles import brute_circuits, brute_cocircuits

SMALL = ("F7", "F7*", "MK4", "W3", "W4")

FANO_LINES = [{"1", "2", "5"}, {"2", "3", "6"}, {"1", "3", "7"},
              {"1", "4", "6"}, {"2", "4", "7"}, {"3", "4", "5"},
              {"5", "6", "7"}]


def test_fano_circuits_golden(fano):
    circuits = [set(c) for c in fano.circuits()]
    assert len(circuits) == 14
    three = [c for c in circuits if len(c) == 3]
    four = [c for c in circuits if len(c) == 4]
    assert len(three) == 7 and len(four) == 7
    for line in FANO_LINES:
        assert line in three
        assert (set("1234567") - line) in four


def test_fano_cocircuits_are_line_complements(fano):
    cocircs = {frozenset(c) for c in fano.cocircuits()}
    assert cocircs == {frozenset(set("1234567") - line) for line in FANO_LINES}
    assert all(len(q) == 4 for q in cocircs)


@pytest.mark.parametrize("name", SMALL)
def test_circuits_match_brute_force(name):
    M = catalog_matroid(name)
    assert {frozenset(c) for c in M.circuits()} == brute_circuits(cols_of(M))


@pytest.mark.parametrize("name", SMALL)
def test_cocircuits_match_brute_force(name):
    M = catalog_matroid(name)
    assert {frozenset(c) for c in M.cocircuits()} == brute_cocircuits(cols_of(M))


@pytest.mark.parametrize("seed", range(25))
def test_random_matroids_against_oracle(seed):
    M = random_matroid(seed)
    cols = cols_of(M)
    assert {frozenset(c) for c in M.circuits()} == brute_circuits(cols)
    assert {frozenset(c) for c in M.cocircuits()} == brute_cocircuits(cols)


@pytest.mark.parametrize("seed", range(15))
def test_circuit_elimination_axiom(seed):
    M = random_matroid(seed, max_rows=4, max_cols=8)
    circuits = [frozenset(c) for c in M.circuits()]
    cset = set(circuits)
    for c1 in circuits:
        for c2 in circuits:
            if c1 == c2:
                continue
            for e in c1 & c2:
                rest = (c1 | c2) - {e}
                assert any(c <= rest for c in cset), (c1, c2, e)


def test_dual_involution_and_rank_sum():
    for name in SMALL + ("K33", "Q3"):
        M = catalog_matroid(name)
        D = M.dual()
        assert M.rank + D.rank == M.size
        assert D.ground == M.ground
        assert D.dual().equals(M)
        assert {frozenset(c) for c in D.circuits()} == \
            {frozenset(c) for c in M.cocircuits()}


def test_fano_dual_catalog_entry(fano):
    assert catalog_matroid("F7*").equals(fano.dual())


def test_minor_circuit_characterizations(mk4):
    # deletion keeps exactly the circuits avoiding the element
    e = mk4.ground[0]
    dele = mk4.delete(e)
    want = {frozenset(c) for c in mk4.circuits() if e not in c}
    assert {frozenset(c) for c in dele.circuits()} == want
    # contraction: minimal nonempty traces of circuits
    cont = mk4.contract(e)
    traces = {frozenset(c) - {e} for c in mk4.circuits()}
    traces.discard(frozenset())
    minimal = {t for t in traces if not any(u < t for u in traces)}
    assert {frozenset(c) for c in cont.circuits()} == minimal
    assert (mk4.contract(e)).equals(mk4.dual().delete(e).dual())


def test_minor_unknown_label(mk4):
    with pytest.raises(UnknownLabel):
        mk4.delete("nope")
    with pytest.raises(UnknownLabel):
        mk4.contract("nope")


def test_loops_and_coloops():
    M = BinaryMatroid.from_rows([[0, 1, 1, 0], [0, 0, 0, 1]],
                                ["z", "p", "q", "c"], name="LC")
    assert M.loops() == frozenset(["z"])
    assert M.coloops() == frozenset(["c"])
    assert M.is_loop("z") and not M.is_loop("p")
    assert M.is_coloop("c") and not M.is_coloop("q")


@pytest.mark.parametrize("name,girth,cogirth", [
    ("F7", 3, 4),
    ("F7*", 4, 3),
    ("MK4", 3, 3),
    ("K33", 4, 3),
    ("PETERSEN", 5, 3),
    ("Q3", 4, 3),
    ("W5", 3, 3),
])
def test_girth_cogirth_golden(name, girth, cogirth):
    M = catalog_matroid(name)
    assert M.girth() == girth
    assert M.cogirth() == cogirth


def test_girth_of_free_matroid_is_infinite():
    M = BinaryMatroid.from_rows([[1, 0], [0, 1]], ["x", "y"], name="free")
    assert M.girth() == math.inf
    assert M.cogirth() == 1


def test_equals_with_relabel(fano):
    perm = {old: new for old, new in zip("1234567", "abcdefg")}
    relabeled = BinaryMatroid.from_matrix(
        Gf2Matrix.from_masks(fano.matrix.row_masks(),
                             [perm[x] for x in fano.ground]),
        name="F7-relabeled")
    assert fano.equals(relabeled, relabel=perm)
    assert not fano.equals(relabeled.delete("a"), relabel=perm)


def test_canonical_form_is_representation_independent(fano):
    # same row space written with extra redundant rows
    masks = fano.matrix.row_masks()
    messy = Gf2Matrix.from_masks(masks + [masks[0] ^ masks[1], 0], fano.ground)
    assert BinaryMatroid.from_matrix(messy, name="messy").equals(fano)


def test_corank_cap_guard():
    M = BinaryMatroid.from_rows([[1] * 26], [f"e{j}" for j in range(26)],
                                name="wide")
    with pytest.raises(CorankTooLarge):
        M.circuits()
