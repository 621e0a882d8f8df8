# -*- coding: utf-8 -*-


import logging
from collections.abc import Iterable
from collections.abc import Sequence
from typing import Any

import sympy

from .exactla import identity
from .exactla import random_invertible
from .polyspace import HomogPoly
from .polyspace import evaluate
from .polyspace import normalize_point
from .polyspace import substitute_linear
from .scalars import FieldSpec
from .utils import DimensionMismatch
from .utils import FieldMismatch
from .utils import MathematicalFailure
from .utils import PreconditionError
from .utils import Raw
from .utils import RawVector
from .utils import make_rng

logger = logging.getLogger(__name__)

INTERSECTION_SEED = 0x9E3779B97F4A7C15
"""
坐标变换序列的默认种子
"""

_X0, _X1, _T = sympy.symbols("x0 x1 t")


class NonReducedIntersection(MathematicalFailure):
    """
    交点不横截
    """

    translate_key = "message.failure.non_reduced_intersection"

    def __init__(self, where: str):
        super().__init__(where)
        self.where = where

    def __str__(self) -> str:
        return f"Curves do not meet transversally ({self.where})"


class NonRationalExcess(MathematicalFailure):
    """
    剩余交点不全在基域中
    """

    translate_key = "message.failure.non_rational_excess"

    def __init__(self, count: int):
        super().__init__(count)
        self.count = count

    def __str__(self) -> str:
        return f"{self.count} remaining intersection point(s) are not rational"


class DegenerateAfterRetries(MathematicalFailure):
    """
    坐标变换预算耗尽
    """

    translate_key = "message.failure.degenerate_after_retries"

    def __init__(self, retries: int):
        super().__init__(retries)
        self.retries = retries

    def __str__(self) -> str:
        return f"No usable coordinate change within {self.retries} attempts"


class InfiniteIntersection(PreconditionError):
    """
    两条曲线有公共分支
    """

    translate_key = "message.failure.infinite_intersection"

    def __str__(self) -> str:
        return "Curves share a component"


class KnownPointNotOnCurves(PreconditionError):
    """
    已知点不在两条曲线上
    """

    translate_key = "message.failure.known_point_not_on_curves"

    def __init__(self, point: list[str]):
        super().__init__(point)
        self.point = point

    def __str__(self) -> str:
        return f"Known point [{':'.join(self.point)}] does not lie on both curves"


class ExcessDegreeTooHigh(PreconditionError):
    """
    有理数域上剩余交点过多
    """

    translate_key = "message.failure.excess_degree_too_high"

    def __init__(self, excess: int):
        super().__init__(excess)
        self.excess = excess

    def __str__(self) -> str:
        return f"Over the rationals at most 2 remaining points are solved, got {self.excess}"


def _sympy_poly(field: FieldSpec, terms: dict[tuple[int, ...], Raw], *gens: sympy.Symbol) -> sympy.Poly:
    rep: dict[tuple[int, ...], Any] = {}
    for key, c in terms.items():
        rep[key] = rep.get(key, 0) + field.to_sympy(c)
    if not rep:
        rep = {(0,) * len(gens): 0}
    return sympy.Poly.from_dict(rep, *gens, **field.poly_options())


def _linear_roots(field: FieldSpec, poly: sympy.Poly) -> tuple[dict[Raw, int], int]:
    """
    基域中的根及其重数

    :return: ``{根: 重数}``，以及不在基域中的根的个数 (计重数)
    :rtype: tuple[dict[Raw, int], int]
    """
    roots: dict[Raw, int] = {}
    hidden = 0
    if poly.degree() <= 0:
        return roots, hidden
    _, factors = poly.factor_list()
    for factor, multiplicity in factors:
        if factor.degree() == 1:
            c1, c0 = factor.all_coeffs()
            root = field.neg(field.div(field.from_sympy(c0), field.from_sympy(c1)))
            roots[root] = roots.get(root, 0) + multiplicity
        else:
            hidden += factor.degree() * multiplicity
    return roots, hidden


def _distinct_degree(poly: sympy.Poly) -> int:
    return max(poly.sqf_part().degree(), 0)


def _chart_intersection(field: FieldSpec, f: HomogPoly, g: HomogPoly) -> tuple[list[RawVector], int]:
    """
    在 ``[0:1:0]`` 不在两条曲线上的前提下求全部交点

    仿射部分 (x2 = 1) 由关于 x1 的结式求 x0，再在每条竖直线上取 gcd 求 x1；
    无穷远直线 x2 = 0 上的交点由两条限制二元型的 gcd 求出

    :return: 基域中的交点，以及不在基域中的交点个数
    :rtype: tuple[list[RawVector], int]
    """
    affine_f = _sympy_poly(field, {(e1, e0): c for (e0, e1, _), c in f.terms().items()}, _X1, _X0)
    affine_g = _sympy_poly(field, {(e1, e0): c for (e0, e1, _), c in g.terms().items()}, _X1, _X0)
    resultant = affine_f.resultant(affine_g)
    if resultant.is_zero:
        raise InfiniteIntersection()
    deficit = f.degree * g.degree - max(resultant.degree(), 0)
    logger.debug("resultant degree %d, %d intersection(s) at infinity", resultant.degree(), deficit)

    points: list[RawVector] = []

    # 无穷远直线
    at_infinity = _sympy_poly(field, {(e1,): c for (_, e1, e2), c in f.terms().items() if e2 == 0}, _T).gcd(
        _sympy_poly(field, {(e1,): c for (_, e1, e2), c in g.terms().items() if e2 == 0}, _T)
    )
    if _distinct_degree(at_infinity) != deficit:
        raise NonReducedIntersection("line at infinity")
    roots, hidden = _linear_roots(field, at_infinity)
    points.extend((field.one, t, field.zero) for t in roots)

    # 仿射部分
    roots, hidden_x0 = _linear_roots(field, resultant)
    hidden += hidden_x0
    for a, multiplicity in roots.items():
        value = field.to_sympy(a)
        common = affine_f.eval(_X0, value).gcd(affine_g.eval(_X0, value))
        if _distinct_degree(common) != multiplicity:
            raise NonReducedIntersection(f"x0 = {field.format_raw(a)}")
        ys, hidden_y = _linear_roots(field, common)
        hidden += hidden_y
        points.extend((a, y, field.one) for y in ys)
    return points, hidden


def _check_inputs(f: HomogPoly, g: HomogPoly, known: Sequence[Sequence[Raw]]) -> None:
    if f.field != g.field:
        raise FieldMismatch(f.field, g.field)
    for poly in (f, g):
        if poly.n_vars != 3:
            raise DimensionMismatch(3, poly.n_vars, "variable count")
        if poly.is_zero():
            raise InfiniteIntersection()
    for point in known:
        if evaluate(f, point) != 0 or evaluate(g, point) != 0:
            raise KnownPointNotOnCurves([f.field.format_raw(x) for x in point])


def plane_curve_intersection(
        f: HomogPoly,
        g: HomogPoly,
        known: Iterable[Sequence[Raw]] = (),
        *,
        rational_only: bool = False,
        retries: int = 20,
        seed: int = INTERSECTION_SEED,
) -> list[RawVector]:
    """
    两条平面曲线除已知点以外的交点

    依次尝试恒等变换与由 ``seed`` 确定的随机可逆坐标变换，直到 ``[0:1:0]`` 不在两条曲线上

    :param f: 第一条曲线
    :type f: HomogPoly
    :param g: 第二条曲线
    :type g: HomogPoly
    :param known: 已知交点
    :type known: Iterable[Sequence[Raw]]
    :param rational_only: 为真时忽略不在基域中的交点，否则抛出 :py:class:`NonRationalExcess`
    :type rational_only: bool
    :param retries: 坐标变换预算
    :type retries: int
    :param seed: 坐标变换序列的种子
    :type seed: int

    :return: 剩余交点 (首个非零坐标为 1)，按坐标排序
    :rtype: list[RawVector]

    :raise ExcessDegreeTooHigh: 有理数域上剩余交点多于两个
    :raise InfiniteIntersection: 公共分支
    :raise NonReducedIntersection: 交点不横截
    :raise NonRationalExcess: 剩余交点不在基域中
    :raise DegenerateAfterRetries: 坐标变换预算耗尽
    """
    known = [tuple(p) for p in known]
    _check_inputs(f, g, known)
    field = f.field
    excess = f.degree * g.degree - len(known)
    if field.characteristic == 0 and excess > 2:
        raise ExcessDegreeTooHigh(excess)

    rng = make_rng(seed)
    for attempt in range(retries):
        transform = identity(field, 3) if attempt == 0 else random_invertible(field, 3, rng)
        moved_f = substitute_linear(f, transform)
        moved_g = substitute_linear(g, transform)
        if evaluate(moved_f, (0, 1, 0)) == 0 or evaluate(moved_g, (0, 1, 0)) == 0:
            logger.debug("coordinate change #%d puts [0:1:0] on a curve, retrying", attempt)
            continue
        points, hidden = _chart_intersection(field, moved_f, moved_g)
        break
    else:
        raise DegenerateAfterRetries(retries)

    known_points = {normalize_point(field, p) for p in known}
    remaining = sorted(
        point for point in (normalize_point(field, transform.apply(p)) for p in points)
        if point not in known_points
    )
    if hidden:
        logger.debug("%d intersection point(s) outside the base field", hidden)
        if not rational_only:
            raise NonRationalExcess(hidden)
    return remaining


__all__ = (
    "INTERSECTION_SEED",

    "NonReducedIntersection",
    "NonRationalExcess",
    "DegenerateAfterRetries",
    "InfiniteIntersection",
    "KnownPointNotOnCurves",
    "ExcessDegreeTooHigh",

    "plane_curve_intersection",
)
