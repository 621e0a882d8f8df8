# -*- coding: utf-8 -*-


from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Self

from sympy.polys.matrices import DomainMatrix

from .scalars import DivisionByZero
from .scalars import FieldElement
from .scalars import FieldSpec
from .utils import DimensionMismatch
from .utils import FieldMismatch
from .utils import Raw
from .utils import RawVector
from .utils import RetryBudgetExhausted

type Entry = int | Fraction | FieldElement


def to_raw(field: FieldSpec, value: Entry) -> Raw:
    if isinstance(value, FieldElement):
        if value.field != field:
            raise FieldMismatch(field, value.field)
        return value.value
    return field.canonical(value)


@dataclass(frozen=True)
class Matrix:
    """
    稠密的精确矩阵

    元素以规范原始表示按行储存，:py:meth:`__getitem__` 返回 :py:class:`FieldElement`
    """

    field: FieldSpec
    rows: int
    cols: int
    data: tuple[RawVector, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows:
            raise DimensionMismatch(self.rows, len(self.data), "row count")
        for row in self.data:
            if len(row) != self.cols:
                raise DimensionMismatch(self.cols, len(row), "column count")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable[Entry]], cols: int | None = None) -> Self:
        """
        从行构造矩阵

        :param field: 域
        :type field: FieldSpec
        :param rows: 行，元素可以是整数、分数或域元素
        :type rows: Iterable[Iterable[Entry]]
        :param cols: 列数，仅在没有行时需要
        :type cols: int | None

        :return: 矩阵
        :rtype: Self
        """
        data = tuple(tuple(to_raw(field, x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(field, len(data), cols, data)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Iterable[Iterable[Entry]], rows: int) -> Self:
        return cls.from_rows(field, columns, rows).transpose()

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Self:
        zero = field.zero
        return cls(field, rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Self:
        return cls(field, n, n, tuple(
            tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
        ))

    def __getitem__(self, index: tuple[int, int]) -> FieldElement:
        i, j = index
        return FieldElement(self.field, self.data[i][j])

    def row(self, i: int) -> RawVector:
        return self.data[i]

    def column(self, j: int) -> RawVector:
        return tuple(row[j] for row in self.data)

    def columns(self) -> tuple[RawVector, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.cols, self.rows, self.columns())

    def _check_field(self, other: "Matrix") -> None:
        if other.field != self.field:
            raise FieldMismatch(self.field, other.field)

    def __matmul__(self, other: "Matrix") -> Self:
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(self.cols, other.rows, "inner dimension")
        f = self.field
        other_cols = other.columns()
        data = tuple(
            tuple(dot(f, row, col) for col in other_cols)
            for row in self.data
        )
        # noinspection PyArgumentList
        return type(self)(f, self.rows, other.cols, data)

    def apply(self, vector: Sequence[Raw]) -> RawVector:
        """
        矩阵乘以列向量

        :raise DimensionMismatch: 向量长度不等于列数
        """
        if len(vector) != self.cols:
            raise DimensionMismatch(self.cols, len(vector), "vector length")
        return tuple(dot(self.field, row, vector) for row in self.data)

    def scale_rows(self, factors: Sequence[Raw]) -> Self:
        """
        以 ``diag(factors)`` 左乘
        """
        if len(factors) != self.rows:
            raise DimensionMismatch(self.rows, len(factors), "factor count")
        f = self.field
        # noinspection PyArgumentList
        return type(self)(f, self.rows, self.cols, tuple(
            tuple(f.mul(c, x) for x in row) for c, row in zip(factors, self.data)
        ))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format_raw(x) for x in row] for row in self.data]

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(row) for row in self.to_strings()) + "]"


def dot(field: FieldSpec, left: Sequence[Raw], right: Sequence[Raw]) -> Raw:
    """
    两个原始向量的内积
    """
    return field.canonical(sum((a * b for a, b in zip(left, right)), field.zero))


@dataclass(frozen=True)
class RrefResult:
    R: Matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def to_domain_matrix(m: Matrix) -> DomainMatrix:
    """
    转换为 sympy 的 :py:class:`DomainMatrix`，系数域由 :py:meth:`FieldSpec.matrix_domain` 给出
    """
    domain = m.field.matrix_domain()
    to_sympy = m.field.to_sympy
    rows = [[domain.from_sympy(to_sympy(x)) for x in row] for row in m.data]
    return DomainMatrix(rows, (m.rows, m.cols), domain)


def from_domain_matrix(field: FieldSpec, dm: DomainMatrix) -> Matrix:
    rows, cols = dm.shape
    domain = dm.domain
    data = tuple(tuple(field.from_sympy(domain.to_sympy(x)) for x in row) for row in dm.to_list())
    return Matrix(field, rows, cols, data)


def rref(m: Matrix) -> RrefResult:
    """
    简化行阶梯形，主元取列序中第一个非零元

    :param m: 矩阵
    :type m: Matrix

    :return: 简化行阶梯形与主元列
    :rtype: RrefResult
    """
    if m.rows == 0 or m.cols == 0:
        return RrefResult(m, ())
    reduced, pivots = to_domain_matrix(m).rref()
    return RrefResult(from_domain_matrix(m.field, reduced), tuple(int(j) for j in pivots))


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(to_domain_matrix(m).rank())


@dataclass(frozen=True)
class Subspace:
    """
    ``ambient_dim`` 维空间的子空间，基向量为 ``basis`` 的列
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self) -> None:
        if self.basis.rows != self.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, self.basis.rows, "ambient dimension")

    @classmethod
    def from_vectors(cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[Entry]]) -> Self:
        """
        由线性无关的向量构造子空间，不做化简
        """
        return cls(ambient_dim, Matrix.from_columns(field, vectors, ambient_dim))

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def vectors(self) -> tuple[RawVector, ...]:
        return self.basis.columns()

    def contains(self, vector: Sequence[Raw]) -> bool:
        """
        判断向量是否属于子空间
        """
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, len(vector), "vector length")
        return solve(self.basis, vector) is not None

    def same_as(self, other: "Subspace") -> bool:
        """
        作为子空间是否相等
        """
        if other.ambient_dim != self.ambient_dim or other.dim != self.dim:
            return False
        return all(self.contains(v) for v in other.vectors)


def kernel(m: Matrix) -> Subspace:
    """
    零空间，每个自由变量依次取 1 并回代

    :param m: 矩阵
    :type m: Matrix

    :return: 零空间
    :rtype: Subspace
    """
    f = m.field
    result = rref(m)
    pivot_set = set(result.pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = [f.zero] * m.cols
        vector[free] = f.one
        for i, pivot in enumerate(result.pivots):
            vector[pivot] = f.neg(result.R.data[i][free])
        vectors.append(vector)
    return Subspace.from_vectors(f, m.cols, vectors)


def solve(m: Matrix, b: Sequence[Entry]) -> RawVector | None:
    """
    求解 ``m·x = b``，自由变量取 0

    :param m: 系数矩阵
    :type m: Matrix
    :param b: 右端向量
    :type b: Sequence[Entry]

    :return: 一个解，无解时返回 ``None``
    :rtype: RawVector | None

    :raise DimensionMismatch: ``b`` 的长度不等于行数
    """
    if len(b) != m.rows:
        raise DimensionMismatch(m.rows, len(b), "right-hand side length")
    f = m.field
    augmented = Matrix(f, m.rows, m.cols + 1, tuple((*row, to_raw(f, x)) for row, x in zip(m.data, b)))
    result = rref(augmented)
    if result.pivots and result.pivots[-1] == m.cols:
        return None
    solution = [f.zero] * m.cols
    for i, pivot in enumerate(result.pivots):
        solution[pivot] = result.R.data[i][-1]
    return tuple(solution)


def image(m: Matrix) -> Subspace:
    """
    列空间，基取为主元所在的原始列
    """
    pivots = rref(m).pivots
    return Subspace.from_vectors(m.field, m.rows, (m.column(j) for j in pivots))


def span(field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[Entry]]) -> Subspace:
    """
    任意向量组张成的子空间
    """
    return image(Matrix.from_columns(field, vectors, ambient_dim))


def complement(u: Subspace) -> Subspace:
    """
    补空间，取 ``rref(Uᵀ)`` 非主元位置对应的标准基向量

    :param u: 子空间
    :type u: Subspace

    :return: 与 ``u`` 直和为全空间的子空间
    :rtype: Subspace
    """
    f = u.field
    pivots = set(rref(u.basis.transpose()).pivots)
    vectors = []
    for i in range(u.ambient_dim):
        if i in pivots:
            continue
        vector = [f.zero] * u.ambient_dim
        vector[i] = f.one
        vectors.append(vector)
    return Subspace.from_vectors(f, u.ambient_dim, vectors)


def random_complement(u: Subspace, rng: Random, budget: int = 1000) -> Subspace:
    """
    随机选取的补空间

    :raise RetryBudgetExhausted: 抽样次数超过 ``budget``
    """
    f = u.field
    chosen: list[RawVector] = []
    current = rank(u.basis)
    for _ in range(budget):
        if current == u.ambient_dim:
            return Subspace.from_vectors(f, u.ambient_dim, chosen)
        candidate = tuple(f.random_raw(rng, 3) for _ in range(u.ambient_dim))
        trial = Matrix.from_columns(f, [*u.vectors, *chosen, candidate], u.ambient_dim)
        if rank(trial) > current:
            chosen.append(candidate)
            current += 1
    if current == u.ambient_dim:
        return Subspace.from_vectors(f, u.ambient_dim, chosen)
    raise RetryBudgetExhausted("choosing a random complement", budget)


def stack(*matrices: Matrix) -> Matrix:
    """
    纵向拼接

    :raise DimensionMismatch: 列数不一致
    """
    first = matrices[0]
    for m in matrices[1:]:
        first._check_field(m)
        if m.cols != first.cols:
            raise DimensionMismatch(first.cols, m.cols, "column count")
    data = tuple(row for m in matrices for row in m.data)
    return Matrix(first.field, len(data), first.cols, data)


def augment(*matrices: Matrix) -> Matrix:
    """
    横向拼接

    :raise DimensionMismatch: 行数不一致
    """
    first = matrices[0]
    for m in matrices[1:]:
        first._check_field(m)
        if m.rows != first.rows:
            raise DimensionMismatch(first.rows, m.rows, "row count")
    data = tuple(tuple(x for m in matrices for x in m.data[i]) for i in range(first.rows))
    return Matrix(first.field, first.rows, sum(m.cols for m in matrices), data)


def identity(field: FieldSpec, n: int) -> Matrix:
    return Matrix.identity(field, n)


def inverse(m: Matrix) -> Matrix:
    """
    逆矩阵

    :raise DimensionMismatch: 非方阵
    :raise DivisionByZero: 奇异矩阵
    """
    if m.rows != m.cols:
        raise DimensionMismatch(m.rows, m.cols, "square size")
    n = m.rows
    result = rref(augment(m, identity(m.field, n)))
    if result.pivots[:n] != tuple(range(n)):
        raise DivisionByZero()
    return Matrix(m.field, n, n, tuple(row[n:] for row in result.R.data))


def random_invertible(field: FieldSpec, n: int, rng: Random, budget: int = 1000) -> Matrix:
    """
    随机可逆矩阵

    :raise RetryBudgetExhausted: 抽样次数超过 ``budget``
    """
    for _ in range(budget):
        candidate = Matrix.from_rows(field, [[field.random_raw(rng, 5) for _ in range(n)] for _ in range(n)], n)
        if rank(candidate) == n:
            return candidate
    raise RetryBudgetExhausted("sampling an invertible matrix", budget)


__all__ = (
    "Entry",
    "to_raw",
    "Matrix",
    "dot",
    "RrefResult",
    "Subspace",

    "to_domain_matrix",
    "from_domain_matrix",

    "rref",
    "rank",
    "kernel",
    "solve",
    "image",
    "span",
    "complement",
    "random_complement",
    "stack",
    "augment",
    "identity",
    "inverse",
    "random_invertible",
)
