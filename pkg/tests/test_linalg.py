import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monomod.config import set_dimension_cap
from monomod.errors import DimensionCapExceeded, DimensionMismatch, InconsistentSystem
from monomod.linalg import (
    GF,
    QQ,
    Eliminator,
    Field,
    Matrix,
    SpanAccumulator,
    linear_toolkit,
)


def test_identity_full_rank():
    tk = linear_toolkit(Matrix.identity(QQ, 3))
    assert tk.rank == 3
    assert tk.kernel_basis == []


def test_zero_matrix_kernel():
    tk = linear_toolkit(Matrix.zero(QQ, 2, 3))
    assert tk.rank == 0
    assert len(tk.kernel_basis) == 3


def test_hand_elimination_example():
    # oracle: second row is twice the first, so rank 1 and kernel (-2, 1)
    tk = linear_toolkit(Matrix.from_rows(QQ, [[1, 2], [2, 4]]))
    assert tk.rank == 1
    assert tk.kernel_basis == [(Fraction(-2), Fraction(1))]


def _random_matrix(field, rng, nrows, ncols):
    if field.kind == "Q":
        return Matrix.from_rows(
            field, [[rng.randint(-4, 4) for _ in range(ncols)] for _ in range(nrows)]
        , ncols)
    return Matrix.from_rows(
        field, [[rng.randrange(field.p) for _ in range(ncols)] for _ in range(nrows)]
    , ncols)


@pytest.mark.parametrize("field", [QQ, GF(7)])
def test_rref_idempotent_and_rank_transpose(field):
    rng = random.Random(7)
    for _ in range(25):
        m = _random_matrix(field, rng, rng.randint(1, 12), rng.randint(1, 12))
        R = m.rref()
        assert R.rref() == R
        assert m.rank() == m.transpose().rank()


def test_particular_solution_exact():
    rng = random.Random(3)
    for _ in range(20):
        m = _random_matrix(QQ, rng, rng.randint(1, 6), rng.randint(1, 6))
        x = [QQ.of(rng.randint(-3, 3)) for _ in range(m.ncols)]
        rhs = Matrix.from_columns(QQ, [m.apply(x)], m.nrows)
        tk = linear_toolkit(m, rhs)
        assert m.apply(list(tk.particular_solution)) == list(rhs.column(0))


def test_inconsistent_vs_mismatch_are_distinct():
    m = Matrix.from_rows(QQ, [[1, 0], [1, 0]])
    bad_shape = Matrix.from_rows(QQ, [[1]])
    with pytest.raises(DimensionMismatch):
        linear_toolkit(m, bad_shape)
    no_solution = Matrix.from_columns(QQ, [[QQ.of(1), QQ.of(2)]], 2)
    with pytest.raises(InconsistentSystem):
        linear_toolkit(m, no_solution)
    with pytest.raises(DimensionMismatch):
        linear_toolkit(m, Matrix.from_rows(GF(5), [[1], [2]]))


def test_scalar_canonical_forms():
    assert QQ.of("6/4") == Fraction(3, 2)
    assert QQ.render(Fraction(-3, 2)) == "-3/2"
    assert QQ.render(Fraction(4, 2)) == "2"
    F = GF(7)
    assert F.of(-1) == 6
    assert F.of("3/2") == 3 * 4 % 7  # 2^{-1} = 4 mod 7
    assert F.render(F.of(10)) == "3"


def test_field_spec_parsing():
    assert Field.parse_spec("Q") is QQ
    assert Field.parse_spec("F11").p == 11
    with pytest.raises(ValueError):
        Field.parse_spec("F4")  # not prime
    with pytest.raises(ValueError):
        Field.parse_spec("R")


def test_dimension_cap_refusal():
    set_dimension_cap(8)
    try:
        with pytest.raises(DimensionCapExceeded):
            Matrix.zero(QQ, 9, 2)
        Matrix.zero(QQ, 8, 8)
    finally:
        set_dimension_cap(512)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 31 - 1))
def test_span_accumulator_matches_batch_rref(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    vecs = [[QQ.of(rng.randint(-2, 2)) for _ in range(n)] for _ in range(rng.randint(1, 10))]
    acc = SpanAccumulator(QQ, n)
    for v in vecs:
        acc.add(v)
    batch = Matrix.from_rows(QQ, vecs, n).rref()
    expected = [batch.rows[i] for i in range(batch.rank())]
    assert [tuple(r) for r in acc.rows] == expected
    for v in vecs:
        assert acc.contains(v)


def test_eliminator_reusable_solver():
    rng = random.Random(11)
    m = _random_matrix(QQ, rng, 5, 4)
    el = Eliminator(m)
    for _ in range(8):
        x = [QQ.of(rng.randint(-3, 3)) for _ in range(4)]
        b = m.apply(x)
        sol = el.solve(b)
        assert sol is not None and m.apply(sol) == b
    assert el.rank == m.rank()


def test_inverse_and_kron():
    a = Matrix.from_rows(QQ, [[1, 2], [3, 5]])
    assert (a.inverse() * a).is_identity()
    b = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    k = a.kronecker(b)
    assert k.nrows == 4 and k.rank() == 4
    with pytest.raises(InconsistentSystem):
        Matrix.from_rows(QQ, [[1, 2], [2, 4]]).inverse()
