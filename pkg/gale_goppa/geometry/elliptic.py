# -*- coding: utf-8 -*-


import logging
from collections.abc import Callable
from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from fractions import Fraction
from functools import cached_property
from typing import Self

import sympy

from ..algebra import BasePointSpec
from ..algebra import DimensionMismatch
from ..algebra import FieldNotFinite
from ..algebra import FieldSpec
from ..algebra import HomogPoly
from ..algebra import MathematicalFailure
from ..algebra import Matrix
from ..algebra import PreconditionError
from ..algebra import PrimeField
from ..algebra import Raw
from ..algebra import RawVector
from ..algebra import RetryBudgetExhausted
from ..algebra import Subspace
from ..algebra import dot
from ..algebra import evaluate
from ..algebra import evaluation_matrix
from ..algebra import divides
from ..algebra import gradient
from ..algebra import inverse
from ..algebra import kernel
from ..algebra import make_rng
from ..algebra import multiply
from ..algebra import normalize_point
from ..algebra import polys_of
from ..algebra import random_invertible
from ..algebra import rank
from ..algebra import require_characteristic
from ..algebra import span
from ..algebra import substitute_linear
from ..algebra import vanishing_system
from .gale_core import PointConfig
from .gale_core import TransportNotUnique
from .gale_core import ZeroRowInDual
from .gale_core import gale_transform
from .gale_core import is_nondegenerate
from .gale_core import projective_transport
from .plane_curves import SystemDimWrong

logger = logging.getLogger(__name__)

MIN_CHARACTERISTIC = 5
COBLE_MIN_CHARACTERISTIC = 11
MIN_SEXTIC_SAMPLES = 20
AUXILIARY_PRIME_START = 101
AUXILIARY_PRIME_TRIES = 50


class LineOnCurve(MathematicalFailure):
    """
    直线是三次曲线的分支
    """

    translate_key = "message.failure.line_on_curve"

    def __str__(self) -> str:
        return "The line through the given points lies on the cubic"


class NoSolution(MathematicalFailure):
    """
    除子类在基域上不能减半
    """

    translate_key = "message.failure.no_solution"

    def __str__(self) -> str:
        return "The class has no square root over the base field"


class CubicNotUnique(PreconditionError):
    """
    经过九个点的三次曲线不唯一
    """

    translate_key = "message.failure.cubic_not_unique"

    def __init__(self, dimension: int):
        super().__init__(dimension)
        self.dimension = dimension

    def __str__(self) -> str:
        return f"Cubics through the points form a space of dimension {self.dimension}, expected 1"


class PartialTorsion(MathematicalFailure):
    """
    有理的平方根少于四个
    """

    translate_key = "message.failure.partial_torsion"

    def __init__(self, count: int):
        super().__init__(count)
        self.count = count

    def __str__(self) -> str:
        return f"Only {self.count} of the 4 square roots are rational"


class SingularCubic(PreconditionError):
    """
    三次曲线有奇点
    """

    translate_key = "message.failure.singular_cubic"

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason

    def __str__(self) -> str:
        return f"The cubic is not smooth ({self.reason})"


class PointNotOnCurve(PreconditionError):
    """
    点不在三次曲线上
    """

    translate_key = "message.failure.point_not_on_curve"

    def __init__(self, point: list[str]):
        super().__init__(point)
        self.point = point

    def __str__(self) -> str:
        return f"Point [{':'.join(self.point)}] is not on the cubic"


class EnumerationTooLarge(PreconditionError):
    """
    域太大，无法逐点列举
    """

    translate_key = "message.failure.enumeration_too_large"

    def __init__(self, characteristic: int, limit: int):
        super().__init__(characteristic, limit)
        self.characteristic = characteristic
        self.limit = limit

    def __str__(self) -> str:
        return f"Enumerating points over F_{self.characteristic} exceeds the limit {self.limit}"


class QuadricSpaceWrong(MathematicalFailure):
    """
    曲面像上的二次型空间维数不是 6
    """

    translate_key = "message.failure.quadric_space_wrong"

    def __init__(self, dimension: int):
        super().__init__(dimension)
        self.dimension = dimension

    def __str__(self) -> str:
        return f"Quadrics through the sampled surface points form a space of dimension {self.dimension}, expected 6"


class SampleTooSmall(PreconditionError):
    """
    样本点太少
    """

    translate_key = "message.failure.sample_too_small"

    def __init__(self, count: int, minimum: int):
        super().__init__(count, minimum)
        self.count = count
        self.minimum = minimum

    def __str__(self) -> str:
        return f"Only {self.count} sample point(s), at least {self.minimum} required"


class SexticNotOnVeronese(MathematicalFailure):
    """
    六次曲线的像不在对应的 Veronese 曲面上
    """

    translate_key = "message.failure.sextic_not_on_veronese"

    def __init__(self, index: int):
        super().__init__(index)
        self.index = index

    def __str__(self) -> str:
        return f"Sampled sextic points do not satisfy the quadrics of factorization {self.index}"


@dataclass(frozen=True, order=True)
class CurvePoint:
    """
    三次曲线上的点，坐标首个非零分量为 1
    """

    coords: RawVector


@dataclass(frozen=True)
class DivisorClass:
    """
    有效除子的线性等价类，由次数与群和 ``⊕Pᵢ`` (相对原点) 决定
    """

    degree: int
    abel: CurvePoint


def _reduce_coefficients(f: HomogPoly, target: FieldSpec) -> HomogPoly:
    return HomogPoly.from_coeffs(target, f.n_vars, f.degree, (Fraction(c) for c in f.coeffs))


def _sympy_expr(f: HomogPoly, gens: Sequence[sympy.Symbol]) -> sympy.Expr:
    expr: sympy.Expr = sympy.Integer(0)
    for exponents, value in f.terms().items():
        monomial = sympy.Mul(*(g ** e for g, e in zip(gens, exponents)))
        expr += f.field.to_sympy(value) * monomial
    return expr


def _singular_over_closure(f: HomogPoly) -> bool:
    """
    偏导数在代数闭包上是否有公共零点，只用于特征 0

    依次在三个仿射坐标卡上计算 Gröbner 基，基为 ``[1]`` 时该坐标卡上没有奇点
    """
    gens = sympy.symbols("x y z")
    partials = [sympy.diff(_sympy_expr(f, gens), g) for g in gens]
    for chart in gens:
        rest = [g for g in gens if g is not chart]
        basis = sympy.groebner([d.subs(chart, 1) for d in partials], *rest, order="grevlex", domain=sympy.QQ)
        if list(basis.exprs) != [1]:
            logger.debug("singular point in the chart %s = 1", chart)
            return True
    return False


def _auxiliary_prime(f: HomogPoly, enumeration_limit: int, budget: int = AUXILIARY_PRIME_TRIES) -> PrimeField:
    """
    第一个约化后仍光滑的素数 (不小于 101)

    :raise RetryBudgetExhausted: 前 ``budget`` 个素数都是坏约化
    """
    fractions = [Fraction(c) for c in f.coeffs]
    q = sympy.nextprime(AUXILIARY_PRIME_START - 1)
    for _ in range(budget):
        if all(c.denominator % q for c in fractions) and any(c.numerator % q for c in fractions):
            field = PrimeField(int(q))
            try:
                check_smooth(_reduce_coefficients(f, field), enumeration_limit=enumeration_limit)
            except SingularCubic:
                logger.debug("bad reduction modulo %d", q)
            else:
                return field
        q = sympy.nextprime(q)
    raise RetryBudgetExhausted("choosing a prime of good reduction", budget)


def _coefficients_in_y(f: HomogPoly, x: Raw, z: Raw) -> list[Raw]:
    """
    固定 ``x, z`` 后关于 ``y`` 的系数，按次数升序
    """
    field = f.field
    coefficients = [field.zero] * (f.degree + 1)
    for (a, b, c), value in f.terms().items():
        term = field.mul(value, field.mul(field.pow(x, a), field.pow(z, c)))
        coefficients[b] = field.add(coefficients[b], term)
    return coefficients


def _horner(field: FieldSpec, coefficients: Sequence[Raw], y: Raw) -> Raw:
    result = field.zero
    for c in reversed(coefficients):
        result = field.add(field.mul(result, y), c)
    return result


def _zeros_over_prime_field(f: HomogPoly, limit: int) -> list[RawVector]:
    field = f.field
    p = field.characteristic
    if p == 0:
        raise FieldNotFinite(field)
    if p > limit:
        raise EnumerationTooLarge(p, limit)
    zeros: list[RawVector] = []
    for x in range(p):
        coefficients = _coefficients_in_y(f, x, 1)
        zeros.extend(normalize_point(field, (x, y, 1)) for y in range(p) if _horner(field, coefficients, y) == 0)
    coefficients = _coefficients_in_y(f, 1, 0)
    zeros.extend((1, y, 0) for y in range(p) if _horner(field, coefficients, y) == 0)
    if evaluate(f, (0, 1, 0)) == 0:
        zeros.append((0, 1, 0))
    return sorted(zeros)


def _hasse_holds(p: int, count: int) -> bool:
    return (count - p - 1) ** 2 <= 4 * p


def check_smooth(f: HomogPoly, *, enumeration_limit: int = 10000) -> list[RawVector]:
    """
    检查三次曲线的光滑性

    素域上：没有基域中的奇点且点数满足 Hasse 界。有理数域上：偏导数在代数闭包上没有公共零点，
    并找出一个好约化的辅助素数

    :return: 素域上为全部有理点，有理数域上为空列表
    :rtype: list[RawVector]

    :raise SingularCubic: 三次曲线有奇点
    :raise SmallCharacteristic: 特征为 2 或 3
    :raise RetryBudgetExhausted: 找不到好约化的辅助素数
    """
    if f.n_vars != 3 or f.degree != 3:
        raise DimensionMismatch((3, 3), (f.n_vars, f.degree), "variable count and degree")
    p = f.field.characteristic
    if p == 0:
        if _singular_over_closure(f):
            raise SingularCubic("the partial derivatives have a common zero")
        auxiliary = _auxiliary_prime(f, enumeration_limit)
        logger.debug("good reduction modulo %d", auxiliary.characteristic)
        return []
    require_characteristic(p, MIN_CHARACTERISTIC)
    points = _zeros_over_prime_field(f, enumeration_limit)
    partials = gradient(f)
    for point in points:
        if all(evaluate(d, point) == 0 for d in partials):
            raise SingularCubic(f"singular point {point}")
    if not _hasse_holds(p, len(points)):
        raise SingularCubic(f"{len(points)} points violate the Hasse bound")
    return points


@dataclass(frozen=True)
class PlaneCubic:
    """
    光滑平面三次曲线与选定的原点
    """

    f: HomogPoly
    origin: CurvePoint
    points: tuple[CurvePoint, ...] = dataclass_field(default=(), compare=False, repr=False)
    """
    素域上的全部有理点，按坐标排序
    """

    def __post_init__(self) -> None:
        if evaluate(self.f, self.origin.coords) != 0:
            raise PointNotOnCurve([self.field.format_raw(x) for x in self.origin.coords])

    @classmethod
    def create(
            cls,
            f: HomogPoly,
            origin: Sequence[Raw] | None = None,
            *,
            enumeration_limit: int = 10000,
    ) -> Self:
        """
        检查光滑性并列举有理点

        :param f: 三次型
        :type f: HomogPoly
        :param origin: 原点，缺省时取列举的第一个点 (仅素域)
        :type origin: Sequence[Raw] | None

        :raise SingularCubic: 三次曲线有奇点
        :raise FieldNotFinite: 有理数域上没有给出原点
        """
        points = tuple(CurvePoint(p) for p in check_smooth(f, enumeration_limit=enumeration_limit))
        if origin is None:
            if not points:
                raise FieldNotFinite(f.field)
            chosen = points[0]
        else:
            chosen = CurvePoint(normalize_point(f.field, [f.field.canonical(Fraction(x)) for x in origin]))
        logger.debug("plane cubic with %d rational points, origin %s", len(points), chosen.coords)
        return cls(f, chosen, points)

    @property
    def field(self) -> FieldSpec:
        return self.f.field

    @cached_property
    def partials(self) -> tuple[HomogPoly, ...]:
        return gradient(self.f)

    def point(self, coords: Sequence[Raw]) -> CurvePoint:
        """
        :raise PointNotOnCurve: 点不在曲线上
        """
        normalized = normalize_point(self.field, coords)
        if evaluate(self.f, normalized) != 0:
            raise PointNotOnCurve([self.field.format_raw(x) for x in normalized])
        return CurvePoint(normalized)

    def gradient_at(self, coords: Sequence[Raw]) -> RawVector:
        return tuple(evaluate(d, coords) for d in self.partials)

    def line_section_class(self) -> DivisorClass:
        """
        直线截面的类，其群和为 ``O * O``
        """
        return DivisorClass(3, third_intersection(self, self.origin, self.origin))

    def two_torsion(self) -> list[CurvePoint]:
        """
        ``E[2]`` 中的有理点
        """
        return [p for p in self.points if mul(self, 2, p) == self.origin]


def _scaled_difference(field: FieldSpec, a: Raw, p: Sequence[Raw], b: Raw, q: Sequence[Raw]) -> RawVector:
    return tuple(field.sub(field.mul(a, x), field.mul(b, y)) for x, y in zip(p, q))


def _other_point_on_line(field: FieldSpec, line: Sequence[Raw], p: RawVector) -> RawVector:
    """
    直线 ``line·x = 0`` 上异于 ``p`` 的一个点
    """
    for i in range(3):
        e = [field.zero] * 3
        e[i] = field.one
        # line × eᵢ
        candidate = (
            field.sub(field.mul(line[1], e[2]), field.mul(line[2], e[1])),
            field.sub(field.mul(line[2], e[0]), field.mul(line[0], e[2])),
            field.sub(field.mul(line[0], e[1]), field.mul(line[1], e[0])),
        )
        if any(x != 0 for x in candidate) and normalize_point(field, candidate) != p:
            return candidate
    raise DimensionMismatch("a line", tuple(line), "line coefficients")


def third_intersection(curve: PlaneCubic, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """
    直线 ``PQ`` (``P = Q`` 时为切线) 与三次曲线的第三个交点

    :raise LineOnCurve: 直线整条在曲线上
    :raise SingularCubic: ``P = Q`` 是奇点
    """
    field = curve.field
    if p != q:
        # f(uP + vQ) = uv·(b·u + c·v)
        b = dot(field, curve.gradient_at(p.coords), q.coords)
        c = dot(field, curve.gradient_at(q.coords), p.coords)
        if b == 0 and c == 0:
            raise LineOnCurve()
        return CurvePoint(normalize_point(field, _scaled_difference(field, c, p.coords, b, q.coords)))

    tangent = curve.gradient_at(p.coords)
    if all(x == 0 for x in tangent):
        raise SingularCubic(f"singular point {p.coords}")
    other = _other_point_on_line(field, tangent, p.coords)
    # f(uP + vQ') = v²·(c·u + d·v)
    c = dot(field, curve.gradient_at(other), p.coords)
    d = evaluate(curve.f, other)
    if c == 0 and d == 0:
        raise LineOnCurve()
    return CurvePoint(normalize_point(field, _scaled_difference(field, d, p.coords, c, other)))


def add(curve: PlaneCubic, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """
    ``P ⊕ Q = O * (P * Q)``
    """
    return third_intersection(curve, curve.origin, third_intersection(curve, p, q))


def neg(curve: PlaneCubic, p: CurvePoint) -> CurvePoint:
    """
    ``⊖P = P * (O * O)``
    """
    return third_intersection(curve, p, third_intersection(curve, curve.origin, curve.origin))


def sub(curve: PlaneCubic, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    return add(curve, p, neg(curve, q))


def mul(curve: PlaneCubic, n: int, p: CurvePoint) -> CurvePoint:
    """
    ``[n]P``，倍加法
    """
    if n < 0:
        return mul(curve, -n, neg(curve, p))
    result = curve.origin
    addend = p
    while n:
        if n & 1:
            result = add(curve, result, addend)
        n >>= 1
        if n:
            addend = add(curve, addend, addend)
    return result


def enumerate_points(curve: PlaneCubic) -> list[CurvePoint]:
    """
    全部有理点

    :raise FieldNotFinite: 有理数域
    """
    if curve.field.characteristic == 0:
        raise FieldNotFinite(curve.field)
    return list(curve.points)


def abel_sum(curve: PlaneCubic, points: Iterable[CurvePoint]) -> DivisorClass:
    degree = 0
    total = curve.origin
    for point in points:
        total = add(curve, total, point)
        degree += 1
    return DivisorClass(degree, total)


def square_roots(curve: PlaneCubic, target: DivisorClass) -> list[DivisorClass]:
    """
    次数为 ``target`` 一半的类 ``x``，满足 ``2·x = target``

    先逐点寻找一个 ``[2]a₀ = t``，再加上 ``E[2]`` 中的全部点

    :raise NoSolution: 基域上不能减半
    """
    if target.degree % 2:
        raise DimensionMismatch("an even degree", target.degree, "class degree")
    points = enumerate_points(curve)
    a0 = next((a for a in points if mul(curve, 2, a) == target.abel), None)
    if a0 is None:
        raise NoSolution()
    roots = sorted({add(curve, a0, e) for e in curve.two_torsion()})
    logger.debug("%d square root(s) of the degree-%d class", len(roots), target.degree)
    return [DivisorClass(target.degree // 2, root) for root in roots]


def collinear(field: FieldSpec, points: Sequence[Sequence[Raw]]) -> bool:
    return rank(Matrix.from_rows(field, points, 3)) < 3


def representative_triple(
        curve: PlaneCubic,
        cls: DivisorClass,
        avoid: Iterable[Sequence[Raw]] = (),
        seed: int = 0,
        *,
        budget: int = 500,
) -> tuple[CurvePoint, CurvePoint, CurvePoint]:
    """
    类 ``cls`` 中三个不共线且不在 ``avoid`` 中的互异点

    :raise RetryBudgetExhausted: 预算耗尽
    """
    if cls.degree != 3:
        raise DimensionMismatch(3, cls.degree, "class degree")
    field = curve.field
    avoided = {normalize_point(field, p) for p in avoid}
    candidates = [p for p in enumerate_points(curve) if p.coords not in avoided]
    rng = make_rng(seed, cls.degree)
    if len(candidates) >= 2:
        for _ in range(budget):
            p1, p2 = rng.sample(candidates, 2)
            p3 = sub(curve, sub(curve, cls.abel, p1), p2)
            triple = (p1, p2, p3)
            if len(set(triple)) != 3 or p3.coords in avoided:
                continue
            if collinear(field, [p.coords for p in triple]):
                continue
            return triple
    raise RetryBudgetExhausted("choosing a representative triple", budget)


def quintic_node_criterion(
        gamma9: PointConfig,
        curve: PlaneCubic,
        triple: Sequence[CurvePoint],
) -> tuple[int, bool]:
    """
    经过 ``Γ`` 且在 ``R`` 处有二重点的五次曲线

    :return: 线性系的维数，以及是否存在不含三次曲线为分支的元素
    :rtype: tuple[int, bool]
    """
    base = [BasePointSpec(p) for p in gamma9.points] + [BasePointSpec(p.coords, 2) for p in triple]
    system = vanishing_system(curve.field, 5, base)
    irreducible = any(divides(curve.f, q) is None for q in polys_of(curve.field, system, 5))
    return system.dim, irreducible


@dataclass(frozen=True)
class CobleSetup:
    """
    四个 Veronese 分解共用的数据
    """

    gamma5: PointConfig
    gamma2: PointConfig
    curve: PlaneCubic
    target: DivisorClass
    roots: tuple[DivisorClass, ...]


@dataclass(frozen=True)
class VeroneseResult:
    """
    经过 ``Bl_R P² →|4H−2E| P⁵`` 的一个分解
    """

    root: DivisorClass
    triple: tuple[CurvePoint, CurvePoint, CurvePoint]
    node_system: Subspace
    conic_system: Subspace
    images: PointConfig
    transport: Matrix
    quadrics: Subspace
    """
    ``P⁵`` 中 Veronese 曲面的二次型空间，在输入点组的坐标下
    """

    def map_point(self, point: Sequence[Raw]) -> RawVector:
        """
        平面上的点在 ``P⁵`` 中的像
        """
        field = self.transport.field
        values = evaluation_matrix(field, 4, [point], 3) @ self.node_system.basis
        return self.transport.apply(values.row(0))

    def on_surface(self, point: Sequence[Raw]) -> bool:
        """
        ``P⁵`` 中的点是否满足全部二次型
        """
        field = self.transport.field
        values = evaluation_matrix(field, 2, [point], 6).row(0)
        return all(dot(field, values, q) == 0 for q in self.quadrics.vectors)


def prepare_coble(
        gamma5: PointConfig,
        *,
        require_four: bool = True,
        enumeration_limit: int = 10000,
) -> CobleSetup:
    """
    取 Gale 变换、经过九个点的三次曲线及目标类的全部平方根

    :raise CubicNotUnique: 三次曲线不唯一
    :raise NoSolution: 目标类不能减半
    :raise PartialTorsion: ``require_four`` 且平方根少于四个
    """
    if gamma5.dim != 5 or gamma5.count != 9:
        raise DimensionMismatch("9 points in P^5", (gamma5.count, gamma5.dim), "configuration")
    field = gamma5.field
    if field.characteristic == 0:
        raise FieldNotFinite(field)
    require_characteristic(field.characteristic, COBLE_MIN_CHARACTERISTIC)
    gamma2 = gale_transform(gamma5).normalized()
    cubics = kernel(evaluation_matrix(field, 3, gamma2.points, 3))
    if cubics.dim != 1:
        raise CubicNotUnique(cubics.dim)
    curve = PlaneCubic.create(polys_of(field, cubics, 3)[0].monic(), enumeration_limit=enumeration_limit)

    on_curve = [curve.point(p) for p in gamma2.points]
    line = curve.line_section_class()
    target = DivisorClass(6, sub(curve, mul(curve, 5, line.abel), abel_sum(curve, on_curve).abel))
    roots = tuple(square_roots(curve, target))
    if require_four and len(roots) < 4:
        raise PartialTorsion(len(roots))
    return CobleSetup(gamma5, gamma2, curve, target, roots)


def _sample_plane_points(
        field: FieldSpec,
        count: int,
        seed: int,
        exclude: Iterable[Sequence[Raw]],
        accept: Callable[[RawVector], bool],
        budget: int,
) -> list[RawVector]:
    excluded = {normalize_point(field, p) for p in exclude}
    rng = make_rng(seed, count)
    chosen: list[RawVector] = []
    for _ in range(budget):
        if len(chosen) == count:
            break
        raw = tuple(field.random_raw(rng) for _ in range(3))
        if all(x == 0 for x in raw):
            continue
        point = normalize_point(field, raw)
        if point in excluded or not accept(point):
            continue
        excluded.add(point)
        chosen.append(point)
    return chosen


def factor_through_triple(
        setup: CobleSetup,
        root: DivisorClass,
        triple: Sequence[CurvePoint],
        *,
        samples: int = 40,
        seed: int = 0,
        budget: int = 1000,
) -> VeroneseResult:
    """
    由非共线三点 ``R`` 构造经过 Veronese 曲面的分解

    :raise SystemDimWrong: 四次线性系的维数不是 6
    :raise NoTransport: 像与输入点组射影不等价
    :raise QuadricSpaceWrong: 二次型空间的维数不是 6
    """
    if samples < MIN_SEXTIC_SAMPLES:
        raise SampleTooSmall(samples, MIN_SEXTIC_SAMPLES)
    field = setup.curve.field
    r_points = [p.coords for p in triple]
    node_system = vanishing_system(field, 4, (BasePointSpec(p, 2) for p in r_points))
    if node_system.dim != 6:
        raise SystemDimWrong(6, node_system.dim, "quartics singular at R")
    conic_system = vanishing_system(field, 2, (BasePointSpec(p) for p in r_points))
    if conic_system.dim != 3:
        raise SystemDimWrong(3, conic_system.dim, "conics through R")
    conics = polys_of(field, conic_system, 2)
    products = span(field, node_system.ambient_dim, (
        multiply(conics[i], conics[j]).coeffs for i in range(3) for j in range(i, 3)
    ))
    if not products.same_as(node_system):
        raise SystemDimWrong(6, products.dim, "products of conics through R")

    images = PointConfig(evaluation_matrix(field, 4, setup.gamma2.points, 3) @ node_system.basis)
    transport = projective_transport(images, setup.gamma5)
    if transport.matrix is None:
        raise TransportNotUnique(transport.dimension)

    surface = _sample_plane_points(field, samples, seed, r_points, lambda p: True, budget)
    if len(surface) < samples:
        raise SampleTooSmall(len(surface), samples)
    mapped = [
        transport.matrix.apply(row)
        for row in (evaluation_matrix(field, 4, surface, 3) @ node_system.basis).data
    ]
    quadrics = kernel(evaluation_matrix(field, 2, mapped, 6))
    if quadrics.dim != 6:
        raise QuadricSpaceWrong(quadrics.dim)
    logger.debug("veronese factorization for class %s", root.abel.coords)
    return VeroneseResult(
        root, (triple[0], triple[1], triple[2]), node_system, conic_system, images, transport.matrix, quadrics
    )


def coble_four_veronese(
        gamma5: PointConfig,
        *,
        seed: int = 0,
        samples: int = 40,
        require_four: bool = True,
        triple_retries: int = 500,
        enumeration_limit: int = 10000,
) -> list[VeroneseResult]:
    """
    ``P⁵`` 中九个一般点经过 Veronese 曲面的全部分解

    :param gamma5: ``P⁵`` 中的九个点
    :type gamma5: PointConfig
    :param seed: 选取代表三点组与样本点的种子
    :type seed: int
    :param samples: 计算二次型空间所用的样本点数
    :type samples: int
    :param require_four: 为真时平方根少于四个抛出 :py:class:`PartialTorsion`
    :type require_four: bool

    :return: 每个平方根类对应一个分解
    :rtype: list[VeroneseResult]
    """
    setup = prepare_coble(gamma5, require_four=require_four, enumeration_limit=enumeration_limit)
    return veronese_factorizations(setup, seed=seed, samples=samples, triple_retries=triple_retries)


def veronese_factorizations(
        setup: CobleSetup,
        *,
        seed: int = 0,
        samples: int = 40,
        triple_retries: int = 500,
) -> list[VeroneseResult]:
    """
    对每个平方根类取一组代表三点并构造分解
    """
    results = []
    for index, root in enumerate(setup.roots):
        triple = representative_triple(
            setup.curve, root, setup.gamma2.points, make_rng(seed, index).getrandbits(63), budget=triple_retries
        )
        results.append(factor_through_triple(setup, root, triple, samples=samples, seed=seed))
    return results


@dataclass(frozen=True)
class SexticCertificate:
    """
    六次曲线在每个 Veronese 曲面上，且各曲面两两不同
    """

    curve_samples: int
    distinct_pairs: tuple[tuple[int, int], ...]


def two_sextics_veronese(
        setup: CobleSetup,
        results: Sequence[VeroneseResult],
        *,
        samples: int = 40,
        seed: int = 0,
        budget: int = 1000,
) -> SexticCertificate:
    """
    检查三次曲线在每个分解下的像 (经过九个点的六次曲线) 在对应的 Veronese 曲面上，
    并用曲线外的样本点说明两两不同的分解给出不同的曲面

    :raise SampleTooSmall: 样本点少于 20 个
    :raise SexticNotOnVeronese: 六次曲线的像不满足二次型
    """
    if samples < MIN_SEXTIC_SAMPLES:
        raise SampleTooSmall(samples, MIN_SEXTIC_SAMPLES)
    curve = setup.curve
    excluded = {p.coords for result in results for p in result.triple}
    on_curve = [p.coords for p in curve.points if p.coords not in excluded]
    rng = make_rng(seed, samples)
    chosen = rng.sample(on_curve, min(samples, len(on_curve)))
    if len(chosen) < MIN_SEXTIC_SAMPLES:
        raise SampleTooSmall(len(chosen), MIN_SEXTIC_SAMPLES)
    for index, result in enumerate(results):
        if not all(result.on_surface(result.map_point(p)) for p in chosen):
            raise SexticNotOnVeronese(index)

    off_curve = _sample_plane_points(
        curve.field, samples, seed, excluded, lambda p: evaluate(curve.f, p) != 0, budget
    )
    distinct = []
    for k, result in enumerate(results):
        images = [result.map_point(p) for p in off_curve]
        for j, other in enumerate(results):
            if j != k and not all(other.on_surface(image) for image in images):
                distinct.append((k, j))
    return SexticCertificate(len(chosen), tuple(distinct))


@dataclass(frozen=True)
class CobleInstance:
    """
    ``P⁵`` 中九个点及其 Gale 变换所在的平面三次曲线
    """

    points: PointConfig
    plane_points: PointConfig
    cubic: HomogPoly


def _weierstrass(field: FieldSpec, roots: Sequence[Raw]) -> HomogPoly:
    """
    ``Y²Z − (X − e₁Z)(X − e₂Z)(X − e₃Z)``
    """
    product = HomogPoly.from_terms(field, 3, 0, {(0, 0, 0): 1})
    for e in roots:
        product = multiply(product, HomogPoly.linear_form(field, [1, 0, field.neg(e)]))
    return HomogPoly.from_terms(field, 3, 3, {(0, 2, 1): 1}) + product.scale(field.neg(field.one))


def gen_coble_instance(
        field: FieldSpec,
        seed: int,
        *,
        budget: int = 100,
        enumeration_limit: int = 10000,
) -> CobleInstance:
    """
    确定性地生成四个 Veronese 分解都在基域上存在的九点组

    平面三次曲线取有全部有理 2 挠点的 Weierstrass 曲线并做随机坐标变换，
    九个点中的最后一个点选取为使目标类等于 ``[2]a``

    :raise SmallCharacteristic: 特征小于 11
    :raise RetryBudgetExhausted: 预算耗尽
    """
    if field.characteristic == 0:
        raise FieldNotFinite(field)
    require_characteristic(field.characteristic, COBLE_MIN_CHARACTERISTIC)
    rng = make_rng(seed, 9, 5)
    for attempt in range(budget):
        roots = {field.random_raw(rng) for _ in range(3)}
        if len(roots) != 3:
            continue
        change = random_invertible(field, 3, rng)
        cubic = substitute_linear(_weierstrass(field, sorted(roots)), inverse(change)).monic()
        curve = PlaneCubic.create(cubic, enumeration_limit=enumeration_limit)
        if len(curve.points) < 12:
            continue
        eight = rng.sample(curve.points, 8)
        a = rng.choice(curve.points)
        fives = mul(curve, 5, curve.line_section_class().abel)
        ninth = sub(curve, sub(curve, fives, mul(curve, 2, a)), abel_sum(curve, eight).abel)
        if ninth in eight:
            continue
        plane = PointConfig.from_rows(field, [p.coords for p in (*eight, ninth)])
        if not is_nondegenerate(plane) or kernel(evaluation_matrix(field, 3, plane.points, 3)).dim != 1:
            continue
        try:
            points = gale_transform(plane)
        except ZeroRowInDual:
            continue
        logger.debug("coble instance found after %d attempt(s)", attempt)
        return CobleInstance(points, plane, cubic)
    raise RetryBudgetExhausted("generating a nine-point instance", budget)


__all__ = (
    "MIN_CHARACTERISTIC",
    "COBLE_MIN_CHARACTERISTIC",
    "MIN_SEXTIC_SAMPLES",

    "LineOnCurve",
    "NoSolution",
    "CubicNotUnique",
    "PartialTorsion",
    "SingularCubic",
    "PointNotOnCurve",
    "EnumerationTooLarge",
    "QuadricSpaceWrong",
    "SampleTooSmall",
    "SexticNotOnVeronese",

    "CurvePoint",
    "DivisorClass",
    "PlaneCubic",
    "check_smooth",
    "third_intersection",
    "add",
    "neg",
    "sub",
    "mul",
    "enumerate_points",
    "abel_sum",
    "square_roots",
    "collinear",
    "representative_triple",
    "quintic_node_criterion",

    "CobleSetup",
    "VeroneseResult",
    "prepare_coble",
    "factor_through_triple",
    "coble_four_veronese",
    "veronese_factorizations",
    "SexticCertificate",
    "two_sextics_veronese",
    "CobleInstance",
    "gen_coble_instance",
)
