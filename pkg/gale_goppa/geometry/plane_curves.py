# -*- coding: utf-8 -*-


import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from random import Random

from ..algebra import BasePointSpec
from ..algebra import DimensionMismatch
from ..algebra import FieldSpec
from ..algebra import HomogPoly
from ..algebra import INTERSECTION_SEED
from ..algebra import Matrix
from ..algebra import MonomialBasis
from ..algebra import NonRationalExcess
from ..algebra import NonReducedIntersection
from ..algebra import PreconditionError
from ..algebra import Raw
from ..algebra import RawVector
from ..algebra import RetryBudgetExhausted
from ..algebra import Subspace
from ..algebra import evaluation_matrix
from ..algebra import kernel
from ..algebra import make_rng
from ..algebra import normalize_point
from ..algebra import plane_curve_intersection
from ..algebra import polys_of
from ..algebra import rank
from ..algebra import require_characteristic
from ..algebra import vanishing_system
from .gale_core import Degenerate
from .gale_core import PointConfig
from .gale_core import TransportNotUnique
from .gale_core import ZeroRowInDual
from .gale_core import gale_transform
from .gale_core import is_nondegenerate
from .gale_core import projective_transport

logger = logging.getLogger(__name__)

PENCIL_MIN_CHARACTERISTIC = 11


class NotUnique(PreconditionError):
    """
    满足条件的曲线不唯一
    """

    translate_key = "message.failure.not_unique"

    def __init__(self, dimension: int):
        super().__init__(dimension)
        self.dimension = dimension

    def __str__(self) -> str:
        return f"Curve is not unique (linear system of dimension {self.dimension})"


class CoincidentGalePoints(PreconditionError):
    """
    Gale 变换后有两个点重合
    """

    translate_key = "message.failure.coincident_gale_points"

    def __init__(self, first: int, second: int):
        super().__init__(first, second)
        self.first = first
        self.second = second

    def __str__(self) -> str:
        return f"Gale points {self.first} and {self.second} coincide"


class SystemDimWrong(PreconditionError):
    """
    线性系的维数与预期不符
    """

    translate_key = "message.failure.system_dim_wrong"

    def __init__(self, expected: int, actual: int, what: str):
        super().__init__(expected, actual, what)
        self.expected = expected
        self.actual = actual
        self.what = what

    def __str__(self) -> str:
        return f"Linear system {self.what} has dimension {self.actual}, expected {self.expected}"


class PencilDimWrong(SystemDimWrong):
    """
    经过八个点的三次曲线不构成束
    """

    translate_key = "message.failure.pencil_dim_wrong"

    def __init__(self, actual: int):
        super().__init__(2, actual, "cubics through 8 points")


class FieldTooSmall(PreconditionError):
    """
    域太小，采样不到一般位置的点
    """

    translate_key = "message.failure.field_too_small"

    def __init__(self, characteristic: int, count: int):
        super().__init__(characteristic, count)
        self.characteristic = characteristic
        self.count = count

    def __str__(self) -> str:
        return f"F_{self.characteristic} is too small for {self.count} points in general position"


@dataclass(frozen=True)
class RncParam:
    """
    有理正规曲线 ``P¹ → Pˢ``，``t ↦ M·v_s(t)``
    """

    s: int
    M: Matrix
    source_points: PointConfig
    """
    ``P¹`` 中的 Gale 点，首个非零坐标为 1
    """


@dataclass(frozen=True)
class PencilNinth:
    point: RawVector
    pencil: Subspace
    cubics: tuple[HomogPoly, HomogPoly]


@dataclass(frozen=True)
class ExcessPair:
    """
    两条三次曲线在七个基点之外的两个交点
    """

    points: tuple[RawVector, RawVector]
    cubics: tuple[HomogPoly, HomogPoly]
    pair: tuple[int, int]


@dataclass(frozen=True)
class PencilBase:
    """
    两条横截三次曲线的九个交点
    """

    points: PointConfig
    f: HomogPoly
    g: HomogPoly


def conic_through_five(gamma: PointConfig) -> HomogPoly:
    """
    经过平面上五个点的二次曲线

    :param gamma: ``P²`` 中的五个点
    :type gamma: PointConfig

    :return: 首个非零系数为 1 的二次型
    :rtype: HomogPoly

    :raise NotUnique: 二次曲线不唯一
    """
    if gamma.dim != 2 or gamma.count != 5:
        raise DimensionMismatch("5 points in P^2", (gamma.count, gamma.dim), "configuration")
    conics = kernel(evaluation_matrix(gamma.field, 2, gamma.points, 3))
    if conics.dim != 1:
        raise NotUnique(conics.dim)
    return polys_of(gamma.field, conics, 2)[0].monic()


def _distinct_points(config: PointConfig) -> None:
    seen: dict[RawVector, int] = {}
    for index, point in enumerate(config.points):
        if point in seen:
            raise CoincidentGalePoints(seen[point], index)
        seen[point] = index


def rnc_through(gamma: PointConfig) -> RncParam:
    """
    经过 ``Pˢ`` 中 ``s + 3`` 个一般点的有理正规曲线

    先取 Gale 变换得到 ``P¹`` 中的点 ``qᵢ``，再求把 ``v_s(qᵢ)`` 送到 ``Γᵢ`` 的射影变换

    :param gamma: ``Pˢ`` 中的 ``s + 3`` 个点
    :type gamma: PointConfig

    :return: 参数化
    :rtype: RncParam

    :raise CoincidentGalePoints: Gale 点重合
    :raise NoTransport: 不存在射影变换
    :raise TransportNotUnique: 射影变换不唯一
    """
    s = gamma.dim
    if s < 1 or gamma.count != s + 3:
        raise DimensionMismatch(s + 3, gamma.count, "point count")
    source = gale_transform(gamma).normalized()
    _distinct_points(source)
    veronese = PointConfig(evaluation_matrix(gamma.field, s, source.points, 2))
    transport = projective_transport(veronese, gamma)
    if transport.matrix is None:
        raise TransportNotUnique(transport.dimension)
    logger.debug("rational normal curve of degree %d through %d points", s, gamma.count)
    return RncParam(s, transport.matrix, source)


def rnc_eval(param: RncParam, t: Sequence[Raw]) -> RawVector:
    """
    :return: ``M·v_s(t)``
    :rtype: RawVector
    """
    field = param.M.field
    return param.M.apply(MonomialBasis(2, param.s).monomial_values(field, t))


def cubic_pencil_ninth(
        gamma8: PointConfig,
        *,
        retries: int = 20,
        seed: int = INTERSECTION_SEED,
) -> PencilNinth:
    """
    经过八个点的三次曲线束的第九个基点

    :param gamma8: ``P²`` 中的八个点
    :type gamma8: PointConfig

    :return: 第九个点、三次曲线束及其两个生成元
    :rtype: PencilNinth

    :raise PencilDimWrong: 三次曲线束的维数不是 2
    :raise NonReducedIntersection: 生成元不横截
    """
    if gamma8.dim != 2 or gamma8.count != 8:
        raise DimensionMismatch("8 points in P^2", (gamma8.count, gamma8.dim), "configuration")
    field = gamma8.field
    pencil = vanishing_system(field, 3, (BasePointSpec(p) for p in gamma8.points))
    if pencil.dim != 2:
        raise PencilDimWrong(pencil.dim)
    f, g = polys_of(field, pencil, 3)
    remaining = plane_curve_intersection(f, g, gamma8.points, retries=retries, seed=seed)
    if len(remaining) != 1:
        raise NonReducedIntersection(f"{len(remaining)} points beyond the eight")
    logger.debug("ninth base point %s", remaining[0])
    return PencilNinth(remaining[0], pencil, (f, g))


def two_excess_points(
        gamma7: PointConfig,
        pair: tuple[int, int] = (0, 1),
        *,
        retries: int = 20,
        seed: int = INTERSECTION_SEED,
) -> ExcessPair:
    """
    经过七个点的两条三次曲线的另外两个交点

    :param gamma7: ``P²`` 中的七个点
    :type gamma7: PointConfig
    :param pair: 取三次曲线线性系基中的哪两个元素 (从 0 开始)
    :type pair: tuple[int, int]

    :return: 两个剩余交点与所用的两条三次曲线
    :rtype: ExcessPair

    :raise SystemDimWrong: 三次曲线线性系的维数不是 3
    :raise NonRationalExcess: 剩余交点不在基域中
    :raise NonReducedIntersection: 交点不横截
    """
    if gamma7.dim != 2 or gamma7.count != 7:
        raise DimensionMismatch("7 points in P^2", (gamma7.count, gamma7.dim), "configuration")
    first, second = pair
    if first == second or not (0 <= first < 3 and 0 <= second < 3):
        raise DimensionMismatch("two distinct indices in 0..2", pair, "cubic pair")
    field = gamma7.field
    net = vanishing_system(field, 3, (BasePointSpec(p) for p in gamma7.points))
    if net.dim != 3:
        raise SystemDimWrong(3, net.dim, "cubics through 7 points")
    cubics = polys_of(field, net, 3)
    f, g = cubics[first], cubics[second]
    remaining = plane_curve_intersection(f, g, gamma7.points, retries=retries, seed=seed)
    if len(remaining) != 2:
        raise NonReducedIntersection(f"{len(remaining)} points beyond the seven")
    p, q = remaining
    return ExcessPair((p, q), (f, g), (first, second))


def _subsets_independent(config: PointConfig, rng: Random, subset_checks: int) -> bool:
    size = config.dim + 1
    if config.count <= 12:
        subsets = itertools.combinations(range(config.count), size)
    else:
        subsets = (sorted(rng.sample(range(config.count), size)) for _ in range(subset_checks))
    for subset in subsets:
        rows = [config.points[i] for i in subset]
        if rank(Matrix.from_rows(config.field, rows, size)) != size:
            return False
    return True


def _random_points(field: FieldSpec, count: int, n_vars: int, rng: Random) -> PointConfig | None:
    rows = [tuple(field.random_raw(rng) for _ in range(n_vars)) for _ in range(count)]
    if any(all(x == 0 for x in row) for row in rows):
        return None
    return PointConfig.from_rows(field, rows)


def gen_general_points(
        field: FieldSpec,
        count: int,
        r: int,
        seed: int,
        *,
        resample: int = 1000,
        subset_checks: int = 200,
) -> PointConfig:
    """
    确定性地生成 ``Pʳ`` 中一般位置的点

    :param field: 域
    :type field: FieldSpec
    :param count: 点数
    :type count: int
    :param r: 射影空间维数
    :type r: int
    :param seed: 种子
    :type seed: int
    :param resample: 重新采样的预算
    :type resample: int
    :param subset_checks: 点数多于 12 时随机检查的子集个数
    :type subset_checks: int

    :return: 非退化的点组，任意 ``r + 1`` 个点线性无关，Gale 变换中没有零行
    :rtype: PointConfig

    :raise FieldTooSmall: 域太小或预算耗尽
    """
    p = field.characteristic
    if p and p <= 4 * count:
        raise FieldTooSmall(p, count)
    rng = make_rng(seed, count, r)
    for attempt in range(resample):
        config = _random_points(field, count, r + 1, rng)
        if config is None or not is_nondegenerate(config):
            continue
        if not _subsets_independent(config, rng, subset_checks):
            continue
        if count >= r + 2:
            try:
                gale_transform(config)
            except ZeroRowInDual:
                continue
        logger.debug("general points found after %d resample(s)", attempt)
        return config
    raise FieldTooSmall(p, count)


def gen_cubic_pencil_base(
        field: FieldSpec,
        seed: int,
        *,
        budget: int = 1000,
        retries: int = 20,
) -> PencilBase:
    """
    确定性地生成两条横截三次曲线及其九个交点

    随机取八个点，取经过它们的三次曲线束，再补上第九个基点

    :param field: 有理数域或特征不小于 11 的素域
    :type field: FieldSpec
    :param seed: 种子
    :type seed: int

    :return: 九个互不相同的点与两条三次曲线
    :rtype: PencilBase

    :raise SmallCharacteristic: 特征太小
    :raise RetryBudgetExhausted: 预算耗尽
    """
    require_characteristic(field.characteristic, PENCIL_MIN_CHARACTERISTIC)
    rng = make_rng(seed, 9, 2)
    for attempt in range(budget):
        config = _random_points(field, 8, 3, rng)
        if config is None:
            continue
        normalized = config.normalized()
        if len(set(normalized.points)) != 8:
            continue
        try:
            ninth = cubic_pencil_ninth(normalized, retries=retries)
        except (PencilDimWrong, NonReducedIntersection, NonRationalExcess):
            continue
        f, g = ninth.cubics
        logger.debug("pencil base found after %d attempt(s)", attempt)
        return PencilBase(PointConfig.from_rows(field, [*normalized.points, ninth.point]), f, g)
    raise RetryBudgetExhausted("cubic pencil base", budget)


def gen_seven_points_p3(
        field: FieldSpec,
        seed: int,
        pairs: Sequence[tuple[int, int]] = ((0, 1),),
        *,
        budget: int = 200,
        resample: int = 1000,
        retries: int = 20,
) -> PointConfig:
    """
    确定性地生成 ``P³`` 中的七个一般点，使其 Gale 变换对 ``pairs`` 中的每一对三次曲线都有基域中的剩余交点

    :param field: 域
    :type field: FieldSpec
    :param seed: 种子
    :type seed: int
    :param pairs: 需要检查的三次曲线对
    :type pairs: Sequence[tuple[int, int]]

    :return: ``P³`` 中的七个点
    :rtype: PointConfig

    :raise RetryBudgetExhausted: 预算耗尽
    """
    for attempt in range(budget):
        gamma3 = gen_general_points(field, 7, 3, make_rng(seed, attempt).getrandbits(63), resample=resample)
        try:
            gamma2 = gale_transform(gamma3)
            for pair in pairs:
                two_excess_points(gamma2, pair, retries=retries)
        except (SystemDimWrong, NonRationalExcess, NonReducedIntersection, ZeroRowInDual, Degenerate) as e:
            logger.debug("seven-point attempt %d rejected: %s", attempt, e)
            continue
        return gamma3
    raise RetryBudgetExhausted("seven points in P^3", budget)


def distinct_points(field: FieldSpec, points: Sequence[Sequence[Raw]]) -> bool:
    """
    点两两射影不同
    """
    normalized = [normalize_point(field, p) for p in points]
    return len(set(normalized)) == len(normalized)


__all__ = (
    "PENCIL_MIN_CHARACTERISTIC",

    "NotUnique",
    "CoincidentGalePoints",
    "SystemDimWrong",
    "PencilDimWrong",
    "FieldTooSmall",

    "RncParam",
    "PencilNinth",
    "ExcessPair",
    "PencilBase",

    "conic_through_five",
    "rnc_through",
    "rnc_eval",
    "cubic_pencil_ninth",
    "two_excess_points",
    "gen_general_points",
    "gen_cubic_pencil_base",
    "gen_seven_points_p3",
    "distinct_points",
)
