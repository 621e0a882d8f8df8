# -*- coding: utf-8 -*-


import pytest

from gale_goppa.algebra import BasePointSpec
from gale_goppa.algebra import DimensionMismatch
from gale_goppa.algebra import FieldSpec
from gale_goppa.algebra import HomogPoly
from gale_goppa.algebra import KnownPointNotOnCurves
from gale_goppa.algebra import PrimeField
from gale_goppa.algebra import evaluate
from gale_goppa.algebra import evaluation_matrix
from gale_goppa.algebra import identity
from gale_goppa.algebra import kernel
from gale_goppa.algebra import multiples_of
from gale_goppa.algebra import same_point
from gale_goppa.algebra import span
from gale_goppa.geometry import CiInstance
from gale_goppa.geometry import CoincidentPoints
from gale_goppa.geometry import ComplementRule
from gale_goppa.geometry import NegativeDualDegree
from gale_goppa.geometry import PointConfig
from gale_goppa.geometry import WNotComplementary
from gale_goppa.geometry import blowup_h0
from gale_goppa.geometry import ci_goppa_dual
from gale_goppa.geometry import dual_degree
from gale_goppa.geometry import eight_points_p4
from gale_goppa.geometry import family_dim
from gale_goppa.geometry import gale_transform
from gale_goppa.geometry import gen_ci_instance
from gale_goppa.geometry import gen_cubic_pencil_base
from gale_goppa.geometry import gen_seven_points_p3
from gale_goppa.geometry import kernel_is_multiples
from gale_goppa.geometry import seven_points_p3
from gale_goppa.geometry import veronese_from_ci33

from .conftest import F101
from .conftest import QQ


def eight_in_p4(field: FieldSpec, seed: int) -> PointConfig:
    """
    取三次曲线束九个基点中的前八个，再做 Gale 变换
    """
    base = gen_cubic_pencil_base(field, seed)
    return gale_transform(PointConfig.from_rows(field, base.points.points[:8]))


def test_dual_degree() -> None:
    assert dual_degree(1, 2, 4) == 2
    assert dual_degree(3, 3, 3) == 0
    assert dual_degree(4, 2, 4) == -1


@pytest.mark.parametrize(("degrees", "fields"), [((1, 3), (QQ, F101)), ((2, 3), (QQ, F101)), ((2, 4), (F101,))])
def test_gen_ci_instance(degrees: tuple[int, int], fields: tuple[FieldSpec, ...]) -> None:
    d1, d2 = degrees
    for field in fields:
        ci = gen_ci_instance(field, d1, d2, 1)
        assert (ci.d1, ci.d2, ci.gamma) == (d1, d2, d1 * d2)
        for point in ci.points.points:
            assert evaluate(ci.f, point) == 0
            assert evaluate(ci.g, point) == 0


def test_gen_ci_instance_rejects_degrees() -> None:
    with pytest.raises(DimensionMismatch):
        gen_ci_instance(F101, 3, 4, 0)


def test_ci_instance_validation() -> None:
    x = HomogPoly.linear_form(QQ, [1, 0, 0])
    g = HomogPoly.from_terms(QQ, 3, 2, {(0, 2, 0): 1, (0, 0, 2): -1})
    with pytest.raises(CoincidentPoints) as info:
        CiInstance(1, 2, x, g, PointConfig.from_rows(QQ, [[0, 1, 1], [0, 2, 2]]))
    assert (info.value.first, info.value.second) == (0, 1)
    with pytest.raises(KnownPointNotOnCurves):
        CiInstance(1, 2, x, g, PointConfig.from_rows(QQ, [[0, 1, 1], [0, 1, 0]]))
    with pytest.raises(DimensionMismatch):
        CiInstance(1, 2, x, g, PointConfig.from_rows(QQ, [[0, 1, 1]]))
    ci = CiInstance(1, 2, x, g, PointConfig.from_rows(QQ, [[0, 1, 1], [0, 1, -1]]))
    assert ci.gamma == 2


@pytest.mark.parametrize("rule", list(ComplementRule))
def test_goppa_dual_conic_quartic(rule: ComplementRule) -> None:
    ci = gen_ci_instance(F101, 2, 4, 3)
    w = span(F101, 3, identity(F101, 3).columns())
    result = ci_goppa_dual(ci, 1, w, complement_rule=rule, seed=7)
    assert (result.degree, result.dual_degree) == (1, 2)
    assert result.Wperp.dim == 5
    assert result.certificate.verify()
    assert (result.certificate.A.cols, result.certificate.B.cols) == (3, 5)


@pytest.mark.parametrize("seed", range(10))
def test_goppa_dual_choice_independence(seed: int) -> None:
    ci = gen_ci_instance(F101, 2, 4, seed)
    w = span(F101, 3, identity(F101, 3).columns())
    results = [
        ci_goppa_dual(ci, 1, w),
        ci_goppa_dual(ci, 1, w, complement_rule=ComplementRule.RANDOM, seed=seed),
        ci_goppa_dual(ci, 1, w, complement_rule=ComplementRule.RANDOM, seed=seed + 50),
    ]
    # 不同的补空间只改变 W⊥ 的基，在 Γ 上的取值张成同一个空间
    images = [span(F101, ci.gamma, result.certificate.B.columns()) for result in results]
    for result, image in zip(results, images):
        assert result.certificate.verify()
        assert image.dim == 5
        assert image.same_as(images[0])


def test_goppa_dual_preconditions() -> None:
    ci = gen_ci_instance(F101, 2, 4, 3)
    with pytest.raises(NegativeDualDegree):
        ci_goppa_dual(ci, 4, span(F101, 15, []))
    with pytest.raises(WNotComplementary) as info:
        ci_goppa_dual(ci, 1, span(F101, 3, [[1, 0, 0]]))
    assert info.value.w_dim == 1
    with pytest.raises(DimensionMismatch):
        ci_goppa_dual(ci, 1, span(F101, 4, [[1, 0, 0, 0]]))


def test_kernel_is_multiples(field: FieldSpec) -> None:
    ci = gen_ci_instance(field, 2, 3, 5)
    assert kernel_is_multiples(ci, 2)
    line = gen_ci_instance(field, 1, 3, 5)
    assert kernel_is_multiples(line, 1)
    assert kernel_is_multiples(line, 2)

    quartic = gen_ci_instance(field, 2, 4, 5)
    assert kernel_is_multiples(quartic, 2)
    quintic = gen_ci_instance(field, 2, 5, 5)
    assert kernel_is_multiples(quintic, 3)
    restriction_kernel = kernel(evaluation_matrix(field, 3, quintic.points.points, 3))
    assert restriction_kernel.dim == multiples_of(quintic.f, 3).dim == 3


def test_veronese_from_ci33() -> None:
    ci = gen_ci_instance(F101, 3, 3, 2)
    result = veronese_from_ci33(ci)
    assert (result.images.count, result.images.dim) == (9, 5)
    assert result.certificate.verify()
    with pytest.raises(DimensionMismatch):
        veronese_from_ci33(gen_ci_instance(F101, 2, 3, 2))


@pytest.mark.parametrize("seed", range(10))
def test_eight_points_p4(seed: int) -> None:
    gamma4 = eight_in_p4(F101, seed)
    result = eight_points_p4(gamma4)
    assert len(result.excess) == 1
    assert result.system.dim == 5
    assert (result.target_dim, result.transport_dim) == (4, 1)
    assert result.certificate.verify()
    assert result.transport.rows == result.transport.cols == 5
    for p, q in zip(result.images.points, gamma4.points):
        assert same_point(F101, result.transport.apply(p), q)
    for cubic in result.cubics:
        assert evaluate(cubic, result.excess[0].point) == 0


def test_eight_points_p4_shape() -> None:
    with pytest.raises(DimensionMismatch):
        eight_points_p4(PointConfig(identity(F101, 5)))


def test_seven_points_p3() -> None:
    pairs = [(0, 1), (0, 2)]
    gamma3 = gen_seven_points_p3(F101, 4, pairs)
    results = [seven_points_p3(gamma3, pair) for pair in pairs]
    for result in results:
        assert len(result.excess) == 2
        assert result.system.dim == 4
        assert result.target_dim == 3
        assert result.certificate.verify()
        for p, q in zip(result.images.points, gamma3.points):
            assert same_point(F101, result.transport.apply(p), q)
    first = {spec.point for spec in results[0].excess}
    second = {spec.point for spec in results[1].excess}
    assert first != second


@pytest.mark.parametrize(("d", "expected"), [(3, 0), (4, 5), (5, 21), (6, 54), (12, 945)])
def test_family_dim(d: int, expected: int) -> None:
    assert family_dim(d) == expected


def test_family_dim_small() -> None:
    with pytest.raises(DimensionMismatch):
        family_dim(2)


def test_blowup_h0() -> None:
    field = PrimeField(101)
    base = [BasePointSpec((1, 0, 0), 2), BasePointSpec((0, 1, 0), 2), BasePointSpec((0, 0, 1), 2)]
    assert blowup_h0(field, 4, base) == 6
    assert blowup_h0(field, 2, []) == 6
