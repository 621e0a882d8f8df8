# -*- coding: utf-8 -*-


from random import Random

import pytest

from gale_goppa.algebra import BasePointSpec
from gale_goppa.algebra import DimensionMismatch
from gale_goppa.algebra import FieldNotFinite
from gale_goppa.algebra import FieldSpec
from gale_goppa.algebra import HomogPoly
from gale_goppa.algebra import MonomialBasis
from gale_goppa.algebra import PrimeField
from gale_goppa.algebra import RawVector
from gale_goppa.algebra import ZeroPoint
from gale_goppa.algebra import divides
from gale_goppa.algebra import enumerate_projective
from gale_goppa.algebra import evaluate
from gale_goppa.algebra import evaluation_matrix
from gale_goppa.algebra import make_rng
from gale_goppa.algebra import multiples_of
from gale_goppa.algebra import multiply
from gale_goppa.algebra import normalize_point
from gale_goppa.algebra import partial
from gale_goppa.algebra import polys_of
from gale_goppa.algebra import random_invertible
from gale_goppa.algebra import same_point
from gale_goppa.algebra import substitute_linear
from gale_goppa.algebra import vanishing_conditions
from gale_goppa.algebra import vanishing_system

from .conftest import QQ


def random_poly(field: FieldSpec, rng: Random, n_vars: int, degree: int) -> HomogPoly:
    count = MonomialBasis(n_vars, degree).count
    return HomogPoly.from_coeffs(field, n_vars, degree, (field.canonical(rng.randint(-5, 5)) for _ in range(count)))


def non_collinear(field: FieldSpec, seed: int) -> list[RawVector]:
    """
    随机可逆矩阵的三列
    """
    change = random_invertible(field, 3, make_rng(seed))
    return list(change.columns())


def test_monomial_order() -> None:
    assert MonomialBasis(3, 2).exponents == (
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    )
    assert MonomialBasis(3, 4).count == 15
    assert MonomialBasis(6, 2).count == 21
    assert MonomialBasis(2, 3).index((1, 2)) == 2
    with pytest.raises(DimensionMismatch):
        MonomialBasis(0, 2)


def test_evaluate_and_json() -> None:
    f = HomogPoly.from_terms(QQ, 3, 2, {(2, 0, 0): 1, (0, 1, 1): -1})
    assert evaluate(f, (2, 4, 1)) == 0
    assert f((1, 1, 2)) == -1
    assert f.to_json() == {"2,0,0": "1", "0,1,1": "-1"}
    assert str(f) == "1*X^2 + -1*Y*Z"
    with pytest.raises(DimensionMismatch):
        HomogPoly.from_terms(QQ, 3, 2, {(1, 0, 0): 1})


def test_partial() -> None:
    f = HomogPoly.from_terms(QQ, 3, 3, {(2, 1, 0): 1, (0, 0, 3): 5})
    assert partial(f, 0).terms() == {(1, 1, 0): 2}
    assert partial(f, 2).terms() == {(0, 0, 2): 15}
    with pytest.raises(DimensionMismatch):
        partial(f, 3)


def test_euler_identity(field: FieldSpec) -> None:
    rng = make_rng(5, field.characteristic)
    for degree in range(1, 5):
        f = random_poly(field, rng, 3, degree)
        point = tuple(field.canonical(rng.randint(-9, 9)) for _ in range(3))
        total = field.zero
        for var in range(3):
            total = field.add(total, field.mul(point[var], evaluate(partial(f, var), point)))
        assert total == field.mul(field.canonical(degree), evaluate(f, point))


@pytest.mark.parametrize(
    ("degree", "multiplicities", "expected"),
    [
        (2, (1,), 5),
        (2, (1, 1), 4),
        (4, (2, 2, 2), 6),
        (6, (3, 3, 3), 10),
        (4, (1, 1, 1), 12),
    ],
)
def test_blowup_dimensions(field: FieldSpec, degree: int, multiplicities: tuple[int, ...], expected: int) -> None:
    for seed in range(5):
        points = non_collinear(field, seed)
        base = [BasePointSpec(p, m) for p, m in zip(points, multiplicities)]
        assert vanishing_system(field, degree, base).dim == expected


def test_double_point_conditions(field: FieldSpec) -> None:
    xy = HomogPoly.from_terms(field, 3, 2, {(1, 1, 0): 1})
    conditions = vanishing_conditions(field, 2, [BasePointSpec((0, 0, 1), 2)], 3)
    assert conditions.rows == 4
    assert all(x == 0 for x in conditions.apply(xy.coeffs))
    xz = HomogPoly.from_terms(field, 3, 2, {(1, 0, 1): 1})
    assert any(x != 0 for x in conditions.apply(xz.coeffs))


def test_vanishing_system_members_vanish(field: FieldSpec) -> None:
    rng = make_rng(6, field.characteristic)
    points = [tuple(field.canonical(rng.randint(-9, 9)) for _ in range(3)) for _ in range(6)]
    points = [p for p in points if any(x != 0 for x in p)]
    system = vanishing_system(field, 3, (BasePointSpec(p) for p in points))
    for f in polys_of(field, system, 3):
        assert all(evaluate(f, p) == 0 for p in points)


def test_evaluation_matrix_shape() -> None:
    m = evaluation_matrix(QQ, 2, [(1, 2, 3), (0, 0, 1)], 3)
    assert (m.rows, m.cols) == (2, 6)
    assert m.row(0) == (1, 2, 3, 4, 6, 9)
    assert m.row(1) == (0, 0, 0, 0, 0, 1)


def test_multiply_and_divide(field: FieldSpec) -> None:
    rng = make_rng(7, field.characteristic)
    for _ in range(10):
        f = random_poly(field, rng, 3, 2)
        g = random_poly(field, rng, 3, 3)
        if f.is_zero():
            continue
        product = multiply(f, g)
        assert product.degree == 5
        quotient = divides(f, product)
        assert quotient is not None and quotient == g
        assert multiples_of(f, 4).contains(multiply(f, random_poly(field, rng, 3, 2)).coeffs)
        assert multiples_of(f, 4).dim == 6
    x = HomogPoly.linear_form(field, [1, 0, 0])
    y2 = HomogPoly.from_terms(field, 3, 2, {(0, 2, 0): 1})
    assert divides(x, y2) is None


def test_substitute_linear(field: FieldSpec) -> None:
    rng = make_rng(8, field.characteristic)
    for degree in (1, 2, 3):
        f = random_poly(field, rng, 3, degree)
        transform = random_invertible(field, 3, rng)
        moved = substitute_linear(f, transform)
        for _ in range(5):
            y = tuple(field.canonical(rng.randint(-9, 9)) for _ in range(3))
            assert evaluate(moved, y) == evaluate(f, transform.apply(y))


def test_points() -> None:
    assert normalize_point(QQ, (0, 2, 4)) == (0, 1, 2)
    assert same_point(QQ, (1, 2, 3), (-2, -4, -6))
    assert not same_point(QQ, (1, 2, 3), (1, 2))
    with pytest.raises(ZeroPoint):
        normalize_point(QQ, (0, 0, 0))
    with pytest.raises(ZeroPoint):
        BasePointSpec((0, 0, 0))


def test_enumerate_projective() -> None:
    points = list(enumerate_projective(PrimeField(3), 3))
    assert len(points) == 13
    assert len(set(points)) == 13
    assert all(p[next(i for i, x in enumerate(p) if x)] == 1 for p in points)
    with pytest.raises(FieldNotFinite):
        list(enumerate_projective(QQ, 3))
