# -*- coding: utf-8 -*-


import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

from ..algebra import BasePointSpec
from ..algebra import DimensionMismatch
from ..algebra import FieldSpec
from ..algebra import HomogPoly
from ..algebra import INTERSECTION_SEED
from ..algebra import KnownPointNotOnCurves
from ..algebra import Matrix
from ..algebra import PreconditionError
from ..algebra import Raw
from ..algebra import RawVector
from ..algebra import RetryBudgetExhausted
from ..algebra import Subspace
from ..algebra import complement
from ..algebra import divides
from ..algebra import evaluate
from ..algebra import evaluation_matrix
from ..algebra import inverse
from ..algebra import kernel
from ..algebra import make_rng
from ..algebra import multiples_of
from ..algebra import polys_of
from ..algebra import random_complement
from ..algebra import random_invertible
from ..algebra import rank
from ..algebra import substitute_linear
from ..algebra import vanishing_system
from .gale_core import DualCertificate
from .gale_core import NoTransport
from .gale_core import PointConfig
from .gale_core import TransportNotUnique
from .gale_core import gale_transform
from .gale_core import projective_transport
from .gale_core import require_certificate
from .plane_curves import FieldTooSmall
from .plane_curves import SystemDimWrong
from .plane_curves import cubic_pencil_ninth
from .plane_curves import gen_cubic_pencil_base
from .plane_curves import two_excess_points

logger = logging.getLogger(__name__)


class NegativeDualDegree(PreconditionError):
    """
    对偶线性系的次数为负
    """

    translate_key = "message.failure.negative_dual_degree"

    def __init__(self, d: int, d1: int, d2: int):
        super().__init__(d, d1, d2)
        self.d = d
        self.d1 = d1
        self.d2 = d2

    def __str__(self) -> str:
        return f"Dual degree {self.d1} + {self.d2} - {self.d} - 3 is negative"


class WNotComplementary(PreconditionError):
    """
    ``W`` 与限制映射的核不互补
    """

    translate_key = "message.failure.w_not_complementary"

    def __init__(self, w_dim: int, kernel_dim: int, ambient_dim: int):
        super().__init__(w_dim, kernel_dim, ambient_dim)
        self.w_dim = w_dim
        self.kernel_dim = kernel_dim
        self.ambient_dim = ambient_dim

    def __str__(self) -> str:
        return (
            f"W (dimension {self.w_dim}) is not complementary to the restriction kernel "
            f"(dimension {self.kernel_dim}) in a space of dimension {self.ambient_dim}"
        )


class CoincidentPoints(PreconditionError):
    """
    完全交不是既约的
    """

    translate_key = "message.failure.coincident_points"

    def __init__(self, first: int, second: int):
        super().__init__(first, second)
        self.first = first
        self.second = second

    def __str__(self) -> str:
        return f"Points {self.first} and {self.second} coincide"


class ComplementRule(StrEnum):
    """
    选取补空间的方式
    """
    STANDARD = "standard"
    RANDOM = "random"


@dataclass(frozen=True)
class CiInstance:
    """
    平面上的 ``(d1, d2)`` 完全交
    """

    d1: int
    d2: int
    f: HomogPoly
    g: HomogPoly
    points: PointConfig

    def __post_init__(self) -> None:
        if (self.f.degree, self.g.degree) != (self.d1, self.d2):
            raise DimensionMismatch((self.d1, self.d2), (self.f.degree, self.g.degree), "curve degrees")
        if self.points.dim != 2 or self.points.count != self.d1 * self.d2:
            raise DimensionMismatch(self.d1 * self.d2, self.points.count, "point count")
        seen: dict[RawVector, int] = {}
        for index, point in enumerate(self.points.normalized().points):
            if point in seen:
                raise CoincidentPoints(seen[point], index)
            seen[point] = index
            if evaluate(self.f, point) != 0 or evaluate(self.g, point) != 0:
                raise KnownPointNotOnCurves([self.field.format_raw(x) for x in point])

    @property
    def field(self) -> FieldSpec:
        return self.points.field

    @property
    def gamma(self) -> int:
        return self.points.count


@dataclass(frozen=True)
class GoppaDual:
    """
    互为 Gale 对偶的一对线性系在 ``Γ`` 上的限制
    """

    degree: int
    dual_degree: int
    W: Subspace
    Wperp: Subspace
    certificate: DualCertificate


@dataclass(frozen=True)
class VeroneseCertificate:
    images: PointConfig
    certificate: DualCertificate


@dataclass(frozen=True)
class BlowupFactorization:
    """
    ``Γ`` 经过一个平面爆破后嵌入 ``Pˢ`` 的分解
    """

    gamma2: PointConfig
    """
    输入点组的 Gale 变换
    """
    excess: tuple[BasePointSpec, ...]
    cubics: tuple[HomogPoly, HomogPoly]
    system: Subspace
    images: PointConfig
    """
    ``gamma2`` 在线性系下的像
    """
    certificate: DualCertificate
    transport: Matrix
    transport_dim: int

    @property
    def target_dim(self) -> int:
        return self.system.dim - 1


def dual_degree(d: int, d1: int, d2: int) -> int:
    """
    :return: ``d1 + d2 − d − 3``
    :rtype: int
    """
    return d1 + d2 - d - 3


def _restriction(config: PointConfig, degree: int, system: Subspace) -> Matrix:
    """
    线性系的基在各点处的取值
    """
    return evaluation_matrix(config.field, degree, config.points, 3) @ system.basis


def _require_complementary(w: Subspace, restriction_kernel: Subspace) -> None:
    ambient = restriction_kernel.ambient_dim
    if w.ambient_dim != ambient:
        raise DimensionMismatch(ambient, w.ambient_dim, "W ambient dimension")
    if w.dim + restriction_kernel.dim != ambient:
        raise WNotComplementary(w.dim, restriction_kernel.dim, ambient)
    combined = Matrix.from_columns(w.field, [*w.vectors, *restriction_kernel.vectors], ambient)
    if rank(combined) != ambient:
        raise WNotComplementary(w.dim, restriction_kernel.dim, ambient)


def ci_goppa_dual(
        ci: CiInstance,
        d: int,
        w: Subspace,
        *,
        complement_rule: ComplementRule | str = ComplementRule.STANDARD,
        seed: int = 0,
        **certificate_options: Any,
) -> GoppaDual:
    """
    完全交上 ``d`` 次线性系 ``W`` 的 Goppa 对偶

    ``W⊥`` 取 ``d' = d1 + d2 − d − 3`` 次限制映射的核的一个补空间

    :param ci: 完全交
    :type ci: CiInstance
    :param d: ``W`` 的次数
    :type d: int
    :param w: ``H⁰(O(d))`` 的子空间
    :type w: Subspace
    :param complement_rule: 补空间取标准基向量或随机向量
    :type complement_rule: ComplementRule | str
    :param seed: 随机补空间的种子
    :type seed: int

    :return: ``W``、``W⊥`` 与对角证书
    :rtype: GoppaDual

    :raise NegativeDualDegree: ``d' < 0``
    :raise WNotComplementary: ``W`` 与 ``d`` 次限制映射的核不互补
    :raise CertificateNotFound: 找不到证书
    """
    dual = dual_degree(d, ci.d1, ci.d2)
    if d < 0 or dual < 0:
        raise NegativeDualDegree(d, ci.d1, ci.d2)
    field = ci.field
    _require_complementary(w, kernel(evaluation_matrix(field, d, ci.points.points, 3)))

    dual_kernel = kernel(evaluation_matrix(field, dual, ci.points.points, 3))
    match ComplementRule(complement_rule):
        case ComplementRule.STANDARD:
            wperp = complement(dual_kernel)
        case ComplementRule.RANDOM:
            wperp = random_complement(dual_kernel, make_rng(seed, d, dual))
    logger.debug("goppa dual: dim W = %d, dim W^perp = %d, gamma = %d", w.dim, wperp.dim, ci.gamma)

    certificate = require_certificate(
        PointConfig(_restriction(ci.points, d, w)),
        PointConfig(_restriction(ci.points, dual, wperp)),
        **certificate_options,
    )
    return GoppaDual(d, dual, w, wperp, certificate)


def kernel_is_multiples(ci: CiInstance, degree: int) -> bool:
    """
    低于 ``d2`` 次时，限制映射的核恰为 ``H⁰(O(degree − d1))·f``
    """
    restriction_kernel = kernel(evaluation_matrix(ci.field, degree, ci.points.points, 3))
    return restriction_kernel.same_as(multiples_of(ci.f, degree))


def veronese_from_ci33(ci: CiInstance, **certificate_options: Any) -> VeroneseCertificate:
    """
    ``(3, 3)`` 完全交的 Gale 变换经过 Veronese 曲面

    :raise CertificateNotFound: 找不到证书
    """
    if (ci.d1, ci.d2) != (3, 3):
        raise DimensionMismatch((3, 3), (ci.d1, ci.d2), "curve degrees")
    images = PointConfig(evaluation_matrix(ci.field, 2, ci.points.points, 3))
    return VeroneseCertificate(images, require_certificate(ci.points, images, **certificate_options))


def _factor_through(
        target: PointConfig,
        gamma2: PointConfig,
        excess: tuple[BasePointSpec, ...],
        cubics: tuple[HomogPoly, HomogPoly],
        expected_dim: int,
        certificate_options: dict[str, Any],
) -> BlowupFactorization:
    field = target.field
    system = vanishing_system(field, 2, excess)
    if system.dim != expected_dim:
        raise SystemDimWrong(expected_dim, system.dim, "conics through the excess points")
    images = PointConfig(_restriction(gamma2, 2, system))
    certificate = require_certificate(gamma2, images, **certificate_options)
    transport = projective_transport(images, target)
    if transport.matrix is None:
        raise TransportNotUnique(transport.dimension)
    if not transport.reproduces(images, target):
        raise NoTransport(transport.dimension)
    return BlowupFactorization(
        gamma2, excess, cubics, system, images, certificate, transport.matrix, transport.dimension
    )


def eight_points_p4(
        gamma4: PointConfig,
        *,
        retries: int = 20,
        seed: int = INTERSECTION_SEED,
        **certificate_options: Any,
) -> BlowupFactorization:
    """
    ``P⁴`` 中八个点经过 ``Bl_p P² → P⁴`` 的分解

    :param gamma4: ``P⁴`` 中的八个点
    :type gamma4: PointConfig

    :return: 分解
    :rtype: BlowupFactorization

    :raise Degenerate: 点组退化
    :raise PencilDimWrong: Gale 变换不够一般
    :raise TransportNotUnique: 分解不唯一
    """
    if gamma4.dim != 4 or gamma4.count != 8:
        raise DimensionMismatch("8 points in P^4", (gamma4.count, gamma4.dim), "configuration")
    gamma2 = gale_transform(gamma4)
    ninth = cubic_pencil_ninth(gamma2, retries=retries, seed=seed)
    return _factor_through(
        gamma4, gamma2, (BasePointSpec(ninth.point),), ninth.cubics, 5, certificate_options
    )


def seven_points_p3(
        gamma3: PointConfig,
        pair: tuple[int, int] = (0, 1),
        *,
        retries: int = 20,
        seed: int = INTERSECTION_SEED,
        **certificate_options: Any,
) -> BlowupFactorization:
    """
    ``P³`` 中七个点经过 ``Bl_{p,q} P² → P³`` 的分解，``p, q`` 依赖于所选的三次曲线对

    :param gamma3: ``P³`` 中的七个点
    :type gamma3: PointConfig
    :param pair: 三次曲线对 (从 0 开始)
    :type pair: tuple[int, int]

    :return: 分解
    :rtype: BlowupFactorization

    :raise NonRationalExcess: 剩余交点不在基域中
    """
    if gamma3.dim != 3 or gamma3.count != 7:
        raise DimensionMismatch("7 points in P^3", (gamma3.count, gamma3.dim), "configuration")
    gamma2 = gale_transform(gamma3)
    excess = two_excess_points(gamma2, pair, retries=retries, seed=seed)
    return _factor_through(
        gamma3, gamma2, tuple(BasePointSpec(p) for p in excess.points), excess.cubics, 4, certificate_options
    )


def family_dim(d: int) -> int:
    """
    ``(2, d)`` 完全交的分解族的维数 ``(d−2)(d−3)(2d−3)/2``，与 Grassmannian 的维数相互核对

    :raise DimensionMismatch: ``d < 3`` 或两者不等
    """
    if d < 3:
        raise DimensionMismatch(">= 3", d, "degree")
    value = (d - 2) * (d - 3) * (2 * d - 3) // 2
    grassmannian = (2 * d - 3) * (d * (d - 1) // 2 - (2 * d - 3))
    if value != grassmannian:
        raise DimensionMismatch(grassmannian, value, "family dimension")
    return value


def blowup_h0(field: FieldSpec, d: int, base: Iterable[BasePointSpec]) -> int:
    """
    :return: ``h⁰(Bl_R P², O(dH − Σ mᵢEᵢ))``
    :rtype: int
    """
    return vanishing_system(field, d, base).dim


def _distinct_parameters(field: FieldSpec, count: int, rng: Any, budget: int) -> list[tuple[Raw, Raw]]:
    """
    ``P¹`` 中 ``count`` 个互不相同的点，最多包含一个无穷远点
    """
    p = field.characteristic
    if p and p + 1 < count:
        raise FieldTooSmall(p, count)
    chosen: list[tuple[Raw, Raw]] = []
    if p and p + 1 == count:
        chosen.append((field.zero, field.one))
    seen: set[Raw] = set()
    for _ in range(budget):
        if len(chosen) == count:
            return chosen
        t = field.random_raw(rng, 4 * count)
        if t not in seen:
            seen.add(t)
            chosen.append((field.one, t))
    if len(chosen) == count:
        return chosen
    raise RetryBudgetExhausted("choosing distinct parameters", budget)


def _rational_curve(field: FieldSpec, degree: int) -> tuple[HomogPoly, list[HomogPoly]]:
    """
    直线 ``Z = 0`` 与二次曲线 ``XZ − Y² = 0`` 及其参数化
    """
    if degree == 1:
        return HomogPoly.linear_form(field, [0, 0, 1]), [
            HomogPoly.linear_form(field, [1, 0]),
            HomogPoly.linear_form(field, [0, 1]),
            HomogPoly.zero(field, 2, 1),
        ]
    curve = HomogPoly.from_terms(field, 3, 2, {(1, 0, 1): 1, (0, 2, 0): -1})
    return curve, [
        HomogPoly.from_terms(field, 2, 2, {(2, 0): 1}),
        HomogPoly.from_terms(field, 2, 2, {(1, 1): 1}),
        HomogPoly.from_terms(field, 2, 2, {(0, 2): 1}),
    ]


def gen_ci_instance(field: FieldSpec, d1: int, d2: int, seed: int, *, budget: int = 1000) -> CiInstance:
    """
    确定性地生成点全部在基域中的完全交

    支持 ``(1, d)``、``(2, d)`` 与 ``(3, 3)``：前两种在有理曲线上取 ``d1·d2`` 个参数点，
    再取经过这些点且不含该曲线的一条 ``d2`` 次曲线，最后做一次随机坐标变换

    :param field: 域
    :type field: FieldSpec
    :param d1: 较低的次数
    :type d1: int
    :param d2: 较高的次数
    :type d2: int
    :param seed: 种子
    :type seed: int

    :return: 完全交
    :rtype: CiInstance

    :raise DimensionMismatch: 不支持的次数
    :raise FieldTooSmall: 域中的点不够多
    :raise RetryBudgetExhausted: 预算耗尽
    """
    d1, d2 = sorted((d1, d2))
    if (d1, d2) == (3, 3):
        base = gen_cubic_pencil_base(field, seed, budget=budget)
        return CiInstance(3, 3, base.f, base.g, base.points)
    if d1 not in (1, 2) or d2 < 1:
        raise DimensionMismatch("(1, d), (2, d) or (3, 3)", (d1, d2), "curve degrees")

    rng = make_rng(seed, d1, d2)
    curve, parametrization = _rational_curve(field, d1)
    params = _distinct_parameters(field, d1 * d2, rng, budget)
    points = [tuple(evaluate(c, t) for c in parametrization) for t in params]
    change = random_invertible(field, 3, rng)
    moved = [change.apply(p) for p in points]
    moved_curve = substitute_linear(curve, inverse(change))

    candidates = polys_of(field, vanishing_system(field, d2, (BasePointSpec(p) for p in moved)), d2)
    for _ in range(budget):
        g = HomogPoly.zero(field, 3, d2)
        for c in candidates:
            g = g + c.scale(field.random_raw(rng))
        if not g.is_zero() and divides(moved_curve, g) is None:
            logger.debug("(%d, %d) complete intersection generated", d1, d2)
            return CiInstance(d1, d2, moved_curve.monic(), g.monic(), PointConfig.from_rows(field, moved))
    raise RetryBudgetExhausted("choosing the second curve", budget)


__all__ = (
    "NegativeDualDegree",
    "WNotComplementary",
    "CoincidentPoints",

    "ComplementRule",
    "CiInstance",
    "GoppaDual",
    "VeroneseCertificate",
    "BlowupFactorization",

    "dual_degree",
    "ci_goppa_dual",
    "kernel_is_multiples",
    "veronese_from_ci33",
    "eight_points_p4",
    "seven_points_p3",
    "family_dim",
    "blowup_h0",
    "gen_ci_instance",
)
