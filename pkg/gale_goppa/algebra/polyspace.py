# -*- coding: utf-8 -*-


import itertools
import math
from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache
from typing import Self

from .exactla import Entry
from .exactla import Matrix
from .exactla import Subspace
from .exactla import kernel
from .exactla import solve
from .exactla import span
from .exactla import to_raw
from .scalars import FieldElement
from .scalars import FieldSpec
from .utils import DimensionMismatch
from .utils import FieldMismatch
from .utils import FieldNotFinite
from .utils import PreconditionError
from .utils import Raw
from .utils import RawVector

type Exponent = tuple[int, ...]


class ZeroPoint(PreconditionError, ValueError):
    """
    齐次坐标全为零
    """

    translate_key = "message.failure.zero_point"

    def __str__(self) -> str:
        return "Homogeneous coordinates must not all vanish"


@cache
def _exponents(n_vars: int, degree: int) -> tuple[Exponent, ...]:
    """
    次数为 ``degree`` 的全部指数向量，按分次字典序降序排列 (x0 > x1 > ...)
    """
    if n_vars == 1:
        return (degree,),
    return tuple(
        (head, *tail)
        for head in range(degree, -1, -1)
        for tail in _exponents(n_vars - 1, degree - head)
    )


@dataclass(frozen=True)
class MonomialBasis:
    """
    ``H⁰(Pⁿ, O(d))`` 的单项式基，``n_vars = n + 1``
    """

    n_vars: int
    degree: int

    def __post_init__(self) -> None:
        if self.n_vars < 1 or self.degree < 0:
            raise DimensionMismatch("n_vars >= 1 and degree >= 0", (self.n_vars, self.degree), "monomial basis")

    @property
    def exponents(self) -> tuple[Exponent, ...]:
        return _exponents(self.n_vars, self.degree)

    @property
    def count(self) -> int:
        return math.comb(self.degree + self.n_vars - 1, self.n_vars - 1)

    def index(self, exponent: Exponent) -> int:
        return _index_table(self.n_vars, self.degree)[exponent]

    def monomial_values(self, field: FieldSpec, point: Sequence[Raw]) -> RawVector:
        """
        所有单项式在一点处的取值

        :raise DimensionMismatch: 点的坐标个数不等于变量个数
        """
        if len(point) != self.n_vars:
            raise DimensionMismatch(self.n_vars, len(point), "point dimension")
        powers = [[field.one] for _ in point]
        for var, x in enumerate(point):
            for _ in range(self.degree):
                powers[var].append(field.mul(powers[var][-1], x))
        values = []
        for exponent in self.exponents:
            value = field.one
            for var, e in enumerate(exponent):
                value = field.mul(value, powers[var][e])
            values.append(value)
        return tuple(values)


@cache
def _index_table(n_vars: int, degree: int) -> dict[Exponent, int]:
    return {e: i for i, e in enumerate(_exponents(n_vars, degree))}


def exponent_key(exponent: Exponent) -> str:
    """
    单项式的序列化键 ``"e0,e1,e2"``
    """
    return ",".join(str(e) for e in exponent)


@dataclass(frozen=True)
class HomogPoly:
    """
    齐次多项式，系数与 :py:class:`MonomialBasis` 对齐
    """

    field: FieldSpec
    basis: MonomialBasis
    coeffs: RawVector

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.basis.count:
            raise DimensionMismatch(self.basis.count, len(self.coeffs), "coefficient count")

    @classmethod
    def from_coeffs(cls, field: FieldSpec, n_vars: int, degree: int, coeffs: Iterable[Entry]) -> Self:
        basis = MonomialBasis(n_vars, degree)
        values = tuple(to_raw(field, c) for c in coeffs)
        return cls(field, basis, values)

    @classmethod
    def from_terms(cls, field: FieldSpec, n_vars: int, degree: int, terms: dict[Exponent, Entry]) -> Self:
        """
        由 ``{指数: 系数}`` 构造

        :raise DimensionMismatch: 指数的次数或长度不符
        """
        basis = MonomialBasis(n_vars, degree)
        coeffs = [field.zero] * basis.count
        for exponent, value in terms.items():
            if len(exponent) != n_vars or sum(exponent) != degree:
                raise DimensionMismatch((n_vars, degree), (len(exponent), sum(exponent)), "monomial")
            index = basis.index(tuple(exponent))
            coeffs[index] = field.add(coeffs[index], to_raw(field, value))
        return cls(field, basis, tuple(coeffs))

    @classmethod
    def zero(cls, field: FieldSpec, n_vars: int, degree: int) -> Self:
        basis = MonomialBasis(n_vars, degree)
        return cls(field, basis, (field.zero,) * basis.count)

    @classmethod
    def linear_form(cls, field: FieldSpec, coeffs: Sequence[Entry]) -> Self:
        return cls.from_coeffs(field, len(coeffs), 1, coeffs)

    @property
    def n_vars(self) -> int:
        return self.basis.n_vars

    @property
    def degree(self) -> int:
        return self.basis.degree

    def terms(self) -> dict[Exponent, Raw]:
        """
        非零项
        """
        return {e: c for e, c in zip(self.basis.exponents, self.coeffs) if c != 0}

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: "HomogPoly") -> None:
        if other.field != self.field:
            raise FieldMismatch(self.field, other.field)
        if other.n_vars != self.n_vars:
            raise DimensionMismatch(self.n_vars, other.n_vars, "variable count")

    def __add__(self, other: "HomogPoly") -> Self:
        self._check(other)
        if other.degree != self.degree:
            raise DimensionMismatch(self.degree, other.degree, "degree")
        f = self.field
        # noinspection PyArgumentList
        return type(self)(f, self.basis, tuple(f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Raw) -> Self:
        f = self.field
        # noinspection PyArgumentList
        return type(self)(f, self.basis, tuple(f.mul(c, a) for a in self.coeffs))

    def __mul__(self, other: "HomogPoly") -> "HomogPoly":
        return multiply(self, other)

    def __call__(self, point: Sequence[Raw]) -> Raw:
        return evaluate(self, point)

    def monic(self) -> Self:
        """
        首个非零系数化为 1
        """
        lead = next((c for c in self.coeffs if c != 0), None)
        return self if lead is None else self.scale(self.field.inv(lead))

    def to_json(self) -> dict[str, str]:
        return {exponent_key(e): self.field.format_raw(c) for e, c in self.terms().items()}

    def __str__(self) -> str:
        names: Sequence[str] = "XYZW" if self.n_vars <= 4 else [f"x{i}" for i in range(self.n_vars)]
        parts = []
        for exponent, c in self.terms().items():
            monomial = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exponent) if e
            )
            parts.append(f"{self.field.format_raw(c)}*{monomial}" if monomial else self.field.format_raw(c))
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class BasePointSpec:
    """
    带重数的基点
    """

    point: RawVector
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if all(x == 0 for x in self.point):
            raise ZeroPoint()
        if self.multiplicity < 1:
            raise DimensionMismatch(">= 1", self.multiplicity, "multiplicity")


def evaluate(f: HomogPoly, point: Sequence[Raw]) -> Raw:
    """
    在齐次坐标代表元处求值

    :param f: 多项式
    :type f: HomogPoly
    :param point: 齐次坐标
    :type point: Sequence[Raw]

    :return: 取值
    :rtype: Raw

    :raise DimensionMismatch: 坐标个数不等于变量个数
    """
    values = f.basis.monomial_values(f.field, point)
    return f.field.canonical(sum((c * v for c, v in zip(f.coeffs, values) if c != 0), f.field.zero))


def evaluate_element(f: HomogPoly, point: Sequence[FieldElement]) -> FieldElement:
    return FieldElement(f.field, evaluate(f, [f.field.element(x).value for x in point]))


def evaluation_matrix(field: FieldSpec, degree: int, points: Iterable[Sequence[Raw]], n_vars: int) -> Matrix:
    """
    求值矩阵，第 ``i`` 行第 ``j`` 列为第 ``j`` 个单项式在第 ``i`` 个点处的取值

    :param field: 域
    :type field: FieldSpec
    :param degree: 次数
    :type degree: int
    :param points: 点的齐次坐标
    :type points: Iterable[Sequence[Raw]]
    :param n_vars: 变量个数
    :type n_vars: int

    :return: ``γ × C(d+n, n)`` 矩阵
    :rtype: Matrix
    """
    basis = MonomialBasis(n_vars, degree)
    return Matrix.from_rows(field, (basis.monomial_values(field, p) for p in points), basis.count)


def partial(f: HomogPoly, var: int) -> HomogPoly:
    """
    形式偏导数

    :raise DimensionMismatch: 零次多项式或变量下标越界
    """
    if f.degree < 1:
        raise DimensionMismatch(">= 1", f.degree, "degree")
    if not 0 <= var < f.n_vars:
        raise DimensionMismatch(f"< {f.n_vars}", var, "variable index")
    field = f.field
    result = HomogPoly.zero(field, f.n_vars, f.degree - 1)
    coeffs = list(result.coeffs)
    for exponent, c in f.terms().items():
        if exponent[var] == 0:
            continue
        lowered = list(exponent)
        lowered[var] -= 1
        index = result.basis.index(tuple(lowered))
        coeffs[index] = field.add(coeffs[index], field.mul(c, field.canonical(exponent[var])))
    return HomogPoly(field, result.basis, tuple(coeffs))


def gradient(f: HomogPoly) -> tuple[HomogPoly, ...]:
    return tuple(partial(f, i) for i in range(f.n_vars))


def _order_conditions(field: FieldSpec, degree: int, spec: BasePointSpec) -> list[RawVector]:
    """
    基点处所有阶数小于重数的 Hasse 导数为零的条件，每行一个
    """
    n_vars = len(spec.point)
    basis = MonomialBasis(n_vars, degree)
    rows = []
    for order in range(min(spec.multiplicity, degree + 1)):
        lowered_basis = MonomialBasis(n_vars, degree - order)
        values = lowered_basis.monomial_values(field, spec.point)
        for alpha in _exponents(n_vars, order):
            row = []
            for exponent in basis.exponents:
                if any(e < a for e, a in zip(exponent, alpha)):
                    row.append(field.zero)
                    continue
                binomial = math.prod(math.comb(e, a) for e, a in zip(exponent, alpha))
                rest = tuple(e - a for e, a in zip(exponent, alpha))
                row.append(field.mul(field.canonical(binomial), values[lowered_basis.index(rest)]))
            rows.append(tuple(row))
    return rows


def vanishing_conditions(field: FieldSpec, degree: int, base: Iterable[BasePointSpec], n_vars: int) -> Matrix:
    """
    把全部基点条件叠成一个矩阵，其零空间即线性系
    """
    count = MonomialBasis(n_vars, degree).count
    rows = []
    for spec in base:
        if len(spec.point) != n_vars:
            raise DimensionMismatch(n_vars, len(spec.point), "base point dimension")
        rows.extend(_order_conditions(field, degree, spec))
    return Matrix.from_rows(field, rows, count)


def vanishing_system(field: FieldSpec, degree: int, base: Iterable[BasePointSpec], n_vars: int = 3) -> Subspace:
    """
    线性系 ``|dH − Σ mᵢEᵢ|``：在每个基点处所有阶数小于 ``mᵢ`` 的导数都为零的 ``d`` 次形式

    :param field: 域
    :type field: FieldSpec
    :param degree: 次数
    :type degree: int
    :param base: 基点
    :type base: Iterable[BasePointSpec]
    :param n_vars: 变量个数
    :type n_vars: int

    :return: ``H⁰(O(d))`` 的子空间
    :rtype: Subspace
    """
    return kernel(vanishing_conditions(field, degree, base, n_vars))


def polys_of(field: FieldSpec, subspace: Subspace, degree: int, n_vars: int = 3) -> list[HomogPoly]:
    """
    把子空间的基向量转换为多项式
    """
    basis = MonomialBasis(n_vars, degree)
    if subspace.ambient_dim != basis.count:
        raise DimensionMismatch(basis.count, subspace.ambient_dim, "ambient dimension")
    return [HomogPoly(field, basis, v) for v in subspace.vectors]


def multiply(f: HomogPoly, g: HomogPoly) -> HomogPoly:
    """
    乘积
    """
    f._check(g)
    field = f.field
    basis = MonomialBasis(f.n_vars, f.degree + g.degree)
    coeffs = [field.zero] * basis.count
    g_terms = g.terms()
    for ef, cf in f.terms().items():
        for eg, cg in g_terms.items():
            index = basis.index(tuple(a + b for a, b in zip(ef, eg)))
            coeffs[index] = field.add(coeffs[index], field.mul(cf, cg))
    return HomogPoly(field, basis, tuple(coeffs))


def multiplication_matrix(f: HomogPoly, degree: int) -> Matrix:
    """
    ``q ↦ f·q`` 在单项式坐标下的矩阵，``q`` 为 ``degree`` 次形式
    """
    field = f.field
    source = MonomialBasis(f.n_vars, degree)
    target = MonomialBasis(f.n_vars, f.degree + degree)
    columns = []
    for exponent in source.exponents:
        monomial = HomogPoly.from_terms(field, f.n_vars, degree, {exponent: 1})
        columns.append(multiply(f, monomial).coeffs)
    return Matrix.from_columns(field, columns, target.count)


def divides(f: HomogPoly, g: HomogPoly) -> HomogPoly | None:
    """
    求 ``q`` 使 ``f·q = g``

    :return: 商，不存在时返回 ``None``
    :rtype: HomogPoly | None
    """
    f._check(g)
    if f.degree > g.degree:
        return None
    if f.is_zero():
        return HomogPoly.zero(f.field, f.n_vars, g.degree - f.degree) if g.is_zero() else None
    q = solve(multiplication_matrix(f, g.degree - f.degree), g.coeffs)
    return None if q is None else HomogPoly(f.field, MonomialBasis(f.n_vars, g.degree - f.degree), q)


def multiples_of(f: HomogPoly, degree: int) -> Subspace:
    """
    子空间 ``H⁰(O(degree − deg f))·f``
    """
    field = f.field
    target = MonomialBasis(f.n_vars, degree)
    if degree < f.degree:
        return span(field, target.count, [])
    return span(field, target.count, multiplication_matrix(f, degree - f.degree).columns())


def substitute_linear(f: HomogPoly, transform: Matrix) -> HomogPoly:
    """
    沿线性映射拉回：``(f∘T)(y) = f(T·y)``

    ``T`` 为 ``n_vars × k`` 矩阵，结果为 ``k`` 元多项式

    :raise DimensionMismatch: ``T`` 的行数不等于变量个数
    """
    if transform.field != f.field:
        raise FieldMismatch(f.field, transform.field)
    if transform.rows != f.n_vars:
        raise DimensionMismatch(f.n_vars, transform.rows, "transform rows")
    field = f.field
    k = transform.cols
    linear = [HomogPoly.linear_form(field, transform.row(i)) for i in range(f.n_vars)]
    powers: list[list[HomogPoly]] = []
    for form in linear:
        chain = [HomogPoly.from_terms(field, k, 0, {(0,) * k: 1})]
        for _ in range(f.degree):
            chain.append(multiply(chain[-1], form))
        powers.append(chain)
    result = HomogPoly.zero(field, k, f.degree)
    for exponent, c in f.terms().items():
        term = powers[0][exponent[0]]
        for var in range(1, f.n_vars):
            term = multiply(term, powers[var][exponent[var]])
        result = result + term.scale(c)
    return result


def normalize_point(field: FieldSpec, point: Sequence[Raw]) -> RawVector:
    """
    首个非零坐标化为 1

    :raise ZeroPoint: 全为零
    """
    lead = next((x for x in point if x != 0), None)
    if lead is None:
        raise ZeroPoint()
    inv = field.inv(lead)
    return tuple(field.mul(x, inv) for x in point)


def same_point(field: FieldSpec, p: Sequence[Raw], q: Sequence[Raw]) -> bool:
    """
    两组齐次坐标是否表示同一个射影点
    """
    return len(p) == len(q) and normalize_point(field, p) == normalize_point(field, q)


def enumerate_projective(field: FieldSpec, n_vars: int) -> Iterable[RawVector]:
    """
    按固定顺序列举 ``P^{n_vars-1}(F_p)`` 的全部点 (规范化代表元)
    """
    p = field.characteristic
    if p == 0:
        raise FieldNotFinite(field)
    for lead in range(n_vars):
        for tail in itertools.product(range(p), repeat=n_vars - lead - 1):
            yield (0,) * lead + (1,) + tail


__all__ = (
    "Exponent",
    "ZeroPoint",
    "MonomialBasis",
    "exponent_key",
    "HomogPoly",
    "BasePointSpec",

    "evaluate",
    "evaluate_element",
    "evaluation_matrix",
    "partial",
    "gradient",
    "vanishing_conditions",
    "vanishing_system",
    "polys_of",
    "multiply",
    "multiplication_matrix",
    "divides",
    "multiples_of",
    "substitute_linear",
    "normalize_point",
    "same_point",
    "enumerate_projective",
)
