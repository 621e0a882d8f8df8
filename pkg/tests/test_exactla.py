# -*- coding: utf-8 -*-


from fractions import Fraction
from random import Random

import pytest
import sympy

from gale_goppa.algebra import DimensionMismatch
from gale_goppa.algebra import DivisionByZero
from gale_goppa.algebra import FieldMismatch
from gale_goppa.algebra import FieldSpec
from gale_goppa.algebra import Matrix
from gale_goppa.algebra import PrimeField
from gale_goppa.algebra import augment
from gale_goppa.algebra import complement
from gale_goppa.algebra import from_domain_matrix
from gale_goppa.algebra import identity
from gale_goppa.algebra import image
from gale_goppa.algebra import inverse
from gale_goppa.algebra import kernel
from gale_goppa.algebra import make_rng
from gale_goppa.algebra import random_complement
from gale_goppa.algebra import random_invertible
from gale_goppa.algebra import rank
from gale_goppa.algebra import rref
from gale_goppa.algebra import solve
from gale_goppa.algebra import span
from gale_goppa.algebra import stack
from gale_goppa.algebra import to_domain_matrix

from .conftest import F101
from .conftest import QQ


def random_matrix(field: FieldSpec, rng: Random, rows: int, cols: int, bound: int = 3) -> Matrix:
    # 小范围的元素使有理数上也经常出现秩亏
    return Matrix.from_rows(
        field, [[field.canonical(rng.randint(-bound, bound)) for _ in range(cols)] for _ in range(rows)], cols
    )


def random_shapes(seed: int, count: int) -> list[tuple[int, int]]:
    rng = make_rng(seed)
    return [(rng.randint(1, 6), rng.randint(1, 6)) for _ in range(count)]


def test_rref_example() -> None:
    m = Matrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6]])
    result = rref(m)
    assert result.pivots == (0,)
    assert result.rank == 1
    assert result.R.row(0) == (1, 2, 3)
    assert result.R.row(1) == (0, 0, 0)
    assert kernel(m).dim == 2


def test_rref_pivot_columns() -> None:
    f7 = PrimeField(7)
    m = Matrix.from_rows(f7, [[0, 2, 4, 1], [0, 1, 2, 6], [0, 3, 6, 0]])
    result = rref(m)
    assert result.pivots == (1, 3)
    assert result.R == Matrix.from_rows(f7, [[0, 1, 2, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    assert kernel(m).vectors == ((1, 0, 0, 0), (0, 5, 1, 0))


def test_rref_matches_sympy_matrix() -> None:
    rng = make_rng(30)
    for rows, cols in random_shapes(31, 30):
        m = random_matrix(QQ, rng, rows, cols)
        expected, pivots = sympy.Matrix(rows, cols, [QQ.to_sympy(x) for row in m.data for x in row]).rref()
        result = rref(m)
        assert result.pivots == tuple(pivots)
        assert [[QQ.to_sympy(x) for x in row] for row in result.R.data] == expected.tolist()


def test_domain_matrix(field: FieldSpec) -> None:
    m = Matrix.from_rows(field, [[1, 2], [3, Fraction(1, 2)]])
    dm = to_domain_matrix(m)
    assert dm.domain == field.matrix_domain()
    assert dm.shape == (2, 2)
    assert from_domain_matrix(field, dm) == m


def test_empty_shapes(field: FieldSpec) -> None:
    wide = Matrix.zeros(field, 0, 3)
    assert rank(wide) == 0
    assert rref(wide).pivots == ()
    assert kernel(wide).dim == 3
    tall = Matrix.zeros(field, 3, 0)
    assert rank(tall) == 0
    assert kernel(tall).dim == 0
    assert solve(tall, [0, 0, 0]) == ()
    assert solve(tall, [0, 1, 0]) is None


def test_rref_idempotent(field: FieldSpec) -> None:
    rng = make_rng(10, field.characteristic)
    for rows, cols in random_shapes(11, 40):
        m = random_matrix(field, rng, rows, cols)
        once = rref(m)
        twice = rref(once.R)
        assert twice.R == once.R
        assert twice.pivots == once.pivots


def test_kernel_annihilated(field: FieldSpec) -> None:
    rng = make_rng(20, field.characteristic)
    for rows, cols in random_shapes(21, 40):
        m = random_matrix(field, rng, rows, cols)
        k = kernel(m)
        assert (m @ k.basis).is_zero()
        assert rank(m) + k.dim == cols
        assert rank(k.basis) == k.dim


def test_complement_direct_sum(field: FieldSpec) -> None:
    rng = make_rng(30, field.characteristic)
    for rows, cols in random_shapes(31, 30):
        u = image(random_matrix(field, rng, rows, cols))
        for w in (complement(u), random_complement(u, rng)):
            assert u.dim + w.dim == rows
            assert rank(augment(u.basis, w.basis)) == rows


def test_solve() -> None:
    m = Matrix.from_rows(QQ, [[1, 1], [1, -1]])
    assert solve(m, [3, 1]) == (2, 1)
    assert solve(Matrix.from_rows(QQ, [[1, 1], [1, 1]]), [1, 2]) is None
    with pytest.raises(DimensionMismatch):
        solve(m, [1, 2, 3])


def test_solve_random(field: FieldSpec) -> None:
    rng = make_rng(40, field.characteristic)
    for rows, cols in random_shapes(41, 30):
        m = random_matrix(field, rng, rows, cols)
        x = [field.canonical(rng.randint(-5, 5)) for _ in range(cols)]
        b = m.apply(x)
        solution = solve(m, b)
        assert solution is not None
        assert m.apply(solution) == b


def test_inverse(field: FieldSpec) -> None:
    rng = make_rng(50, field.characteristic)
    for n in range(1, 6):
        m = random_invertible(field, n, rng)
        assert m @ inverse(m) == identity(field, n)
        assert inverse(m) @ m == identity(field, n)
    with pytest.raises(DivisionByZero):
        inverse(Matrix.from_rows(field, [[1, 2], [2, 4]]))
    with pytest.raises(DimensionMismatch):
        inverse(Matrix.from_rows(field, [[1, 2, 3]]))


def test_subspace_same_as(field: FieldSpec) -> None:
    u = span(field, 3, [[1, 0, 1], [0, 1, 1]])
    v = span(field, 3, [[1, 1, 2], [1, -1, 0], [2, 0, 2]])
    assert u.dim == v.dim == 2
    assert u.same_as(v)
    assert v.contains([field.canonical(x) for x in (3, 5, 8)])
    assert not u.same_as(span(field, 3, [[1, 0, 0], [0, 1, 0]]))
    assert not u.contains([0, 0, 1])


def test_shape_errors() -> None:
    a = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    b = Matrix.from_rows(QQ, [[1, 2, 3]])
    with pytest.raises(DimensionMismatch):
        _ = a @ b
    with pytest.raises(DimensionMismatch):
        stack(a, b)
    with pytest.raises(DimensionMismatch):
        augment(a, b)
    with pytest.raises(FieldMismatch):
        _ = a @ Matrix.from_rows(F101, [[1], [1]])
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, 2, 2, ((1, 2),))


def test_transpose_and_stack() -> None:
    a = Matrix.from_rows(PrimeField(7), [[1, 2, 3], [4, 5, 6]])
    assert a.transpose().transpose() == a
    assert a.transpose().row(2) == (3, 6)
    assert stack(a, a).rows == 4
    assert augment(a, a).cols == 6
    assert str(a) == "[1, 2, 3; 4, 5, 6]"
