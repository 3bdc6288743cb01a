import pytest
from hypothesis import given, strategies as st

from matsplit import Gf2Matrix, Gf2Vector
from matsplit.errors import (CorankTooLarge, DuplicateLabel, InvalidArguments,
                             UnknownLabel, WidthTooLarge)
from matsplit.gf2 import column_rank_of_subset, null_space_enumeration, rank, rref

from oracles import span_rank


def tuples_of(m: Gf2Matrix):
    return [r.entries() for r in m.rows]


# random small matrices as (entry rows, width)
matrices = st.integers(1, 6).flatmap(
    lambda w: st.lists(
        st.lists(st.integers(0, 1), min_size=w, max_size=w),
        min_size=0, max_size=6,
    ).map(lambda rows: Gf2Matrix.from_rows(rows, [f"c{j}" for j in range(w)]))
)


def test_vector_basics():
    v = Gf2Vector(0b1011, 4)
    assert v.support() == (0, 1, 3)
    assert v.weight() == 3
    assert str(v) == "1101"
    assert (v ^ Gf2Vector(0b0011, 4)).bits == 0b1000
    with pytest.raises(ValueError):
        v ^ Gf2Vector(1, 3)
    with pytest.raises(IndexError):
        v[4]
    with pytest.raises(WidthTooLarge):
        Gf2Vector(0, 65)


def test_matrix_label_validation():
    with pytest.raises(DuplicateLabel):
        Gf2Matrix.from_rows([[1, 1]], ["x", "x"])
    with pytest.raises(InvalidArguments):
        Gf2Matrix.from_rows([[1]], [""])
    with pytest.raises(InvalidArguments):
        Gf2Matrix.from_rows([[1]], ["a b"])
    with pytest.raises(ValueError):
        Gf2Matrix.from_rows([[1, 0], [1]], ["x", "y"])
    with pytest.raises(ValueError):
        Gf2Matrix.from_rows([[2, 0]], ["x", "y"])
    m = Gf2Matrix.from_rows([], ["x", "y"])
    assert m.nrows == 0 and rank(m) == 0


def test_column_accessors():
    m = Gf2Matrix.from_rows([[1, 0, 1], [0, 1, 1]], ["x", "y", "z"])
    assert m.column_index("y") == 1
    assert m.column_bits("z") == 0b11
    assert m.mask_of(["x", "z"]) == 0b101
    assert m.labels_of(0b110) == frozenset(["y", "z"])
    with pytest.raises(UnknownLabel):
        m.column_index("w")


@given(matrices)
def test_rref_is_idempotent_and_preserves_row_space(m):
    red, piv = rref(m)
    again, piv2 = rref(red)
    assert tuples_of(again) == tuples_of(red)
    assert piv2 == piv
    assert span_rank(tuples_of(m)) == len(red.rows)
    # same span: every original row lies in the reduced span and rank agrees
    both = Gf2Matrix.from_masks(m.row_masks() + red.row_masks(), m.col_labels)
    assert rank(both) == rank(m) == len(red.rows)
    assert list(piv) == sorted(piv)


@given(matrices)
def test_rank_matches_span_oracle(m):
    assert rank(m) == span_rank(tuples_of(m))


@given(matrices)
def test_rank_equals_transpose_rank(m):
    cols = [m.column_bits(lab) for lab in m.col_labels]
    t = Gf2Matrix.from_masks(cols, [f"r{i}" for i in range(max(m.nrows, 1))]) \
        if m.nrows else None
    if t is not None:
        assert rank(m) == rank(t)


@given(matrices)
def test_nullspace_structure(m):
    vs = list(null_space_enumeration(m))
    corank = m.width - rank(m)
    assert len(vs) == 1 << corank
    assert vs[0].bits == 0
    for v in vs:
        for row in m.row_masks():
            assert (row & v.bits).bit_count() % 2 == 0
    # doubling order: index xor corresponds to vector xor
    bits = [v.bits for v in vs]
    for i in (1, 2, 3):
        if i < len(bits):
            assert bits[i] ^ bits[1] == bits[i ^ 1]
    assert len(set(bits)) == len(bits)


def test_nullspace_cap():
    m = Gf2Matrix.from_rows([], [f"c{j}" for j in range(30)])
    with pytest.raises(CorankTooLarge):
        list(null_space_enumeration(m, corank_cap=20))


def test_column_rank_of_subset():
    m = Gf2Matrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 0]], list("wxyz"))
    assert column_rank_of_subset(m, []) == 0
    assert column_rank_of_subset(m, ["w"]) == 1
    assert column_rank_of_subset(m, ["w", "x", "y"]) == 2
    assert column_rank_of_subset(m, ["y", "z"]) == 2


def test_width_cap():
    with pytest.raises(WidthTooLarge):
        Gf2Matrix.from_rows([], [f"c{j}" for j in range(65)])
