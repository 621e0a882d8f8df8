# -*- coding: utf-8 -*-


from random import Random

import pytest

from gale_goppa.algebra import ExcessDegreeTooHigh
from gale_goppa.algebra import FieldSpec
from gale_goppa.algebra import HomogPoly
from gale_goppa.algebra import InfiniteIntersection
from gale_goppa.algebra import KnownPointNotOnCurves
from gale_goppa.algebra import MonomialBasis
from gale_goppa.algebra import NonRationalExcess
from gale_goppa.algebra import NonReducedIntersection
from gale_goppa.algebra import PrimeField
from gale_goppa.algebra import enumerate_projective
from gale_goppa.algebra import evaluate
from gale_goppa.algebra import make_rng
from gale_goppa.algebra import normalize_point
from gale_goppa.algebra import plane_curve_intersection

from .conftest import QQ
from .conftest import grid_points


def curve(field: FieldSpec, degree: int, terms: dict[tuple[int, int, int], int]) -> HomogPoly:
    return HomogPoly.from_terms(field, 3, degree, dict(terms))


def random_curve(field: FieldSpec, rng: Random, degree: int) -> HomogPoly:
    count = MonomialBasis(3, degree).count
    return HomogPoly.from_coeffs(field, 3, degree, (field.random_raw(rng) for _ in range(count)))


def test_line_and_conic() -> None:
    y = HomogPoly.linear_form(QQ, [0, 1, 0])
    g = curve(QQ, 2, {(2, 0, 0): 1, (0, 0, 2): -1})
    assert plane_curve_intersection(y, g) == [(1, 0, -1), (1, 0, 1)]
    assert plane_curve_intersection(y, g, [(2, 0, 2)]) == [(1, 0, -1)]


def test_known_point_must_lie_on_both() -> None:
    y = HomogPoly.linear_form(QQ, [0, 1, 0])
    g = curve(QQ, 2, {(2, 0, 0): 1, (0, 0, 2): -1})
    with pytest.raises(KnownPointNotOnCurves) as info:
        plane_curve_intersection(y, g, [(1, 1, 1)])
    assert info.value.point == ["1", "1", "1"]


def test_common_component() -> None:
    f7 = PrimeField(7)
    with pytest.raises(InfiniteIntersection):
        plane_curve_intersection(curve(f7, 2, {(1, 1, 0): 1}), curve(f7, 2, {(1, 0, 1): 1}))


def test_tangency() -> None:
    f7 = PrimeField(7)
    x = HomogPoly.linear_form(f7, [1, 0, 0])
    conic = curve(f7, 2, {(1, 0, 1): 1, (0, 2, 0): -1})
    with pytest.raises(NonReducedIntersection):
        plane_curve_intersection(x, conic)


def test_rational_excess_limit() -> None:
    f = curve(QQ, 3, {(3, 0, 0): 1, (0, 0, 3): -1})
    g = curve(QQ, 3, {(0, 3, 0): 1, (0, 0, 3): -1})
    with pytest.raises(ExcessDegreeTooHigh) as info:
        plane_curve_intersection(f, g)
    assert info.value.excess == 9


def test_non_rational_excess() -> None:
    z = HomogPoly.linear_form(QQ, [0, 0, 1])
    g = curve(QQ, 2, {(2, 0, 0): 1, (0, 2, 0): 1})
    with pytest.raises(NonRationalExcess) as info:
        plane_curve_intersection(z, g)
    assert info.value.count == 2
    assert plane_curve_intersection(z, g, rational_only=True) == []


@pytest.mark.parametrize("p", [5, 7, 11])
def test_matches_enumeration(p: int) -> None:
    field = PrimeField(p)
    rng = make_rng(p)
    checked = 0
    for _ in range(80):
        f = random_curve(field, rng, rng.randint(1, 2))
        g = random_curve(field, rng, rng.randint(1, 3))
        try:
            points = plane_curve_intersection(f, g, rational_only=True)
        except (NonReducedIntersection, InfiniteIntersection):
            continue
        expected = sorted(
            point for point in enumerate_projective(field, 3) if evaluate(f, point) == 0 and evaluate(g, point) == 0
        )
        assert points == expected
        checked += 1
    assert checked >= 20


def test_deterministic() -> None:
    field = PrimeField(101)
    # X(X−Z)(X+Z) 与 Y(Y−Z)(Y+Z) 横截相交于九个有理点
    f = curve(field, 3, {(3, 0, 0): 1, (1, 0, 2): -1})
    g = curve(field, 3, {(0, 3, 0): 1, (0, 1, 2): -1})
    first = plane_curve_intersection(f, g, rational_only=True, seed=5)
    assert set(first) == {normalize_point(field, p) for p in grid_points(field).points}
    assert plane_curve_intersection(f, g, rational_only=True, seed=5) == first
    assert plane_curve_intersection(f, g, rational_only=True, seed=6) == first
