# -*- coding: utf-8 -*-


import logging
from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import Any
from typing import Self

from ..algebra import DimensionMismatch
from ..algebra import Entry
from ..algebra import FieldMismatch
from ..algebra import FieldSpec
from ..algebra import MathematicalFailure
from ..algebra import Matrix
from ..algebra import PreconditionError
from ..algebra import RawVector
from ..algebra import Subspace
from ..algebra import ZeroPoint
from ..algebra import kernel
from ..algebra import make_rng
from ..algebra import normalize_point
from ..algebra import rank
from ..algebra import same_point
from ..algebra import solve

logger = logging.getLogger(__name__)


class Degenerate(PreconditionError):
    """
    点组张不满整个射影空间
    """

    translate_key = "message.failure.degenerate"

    def __init__(self, rank: int, expected: int):
        super().__init__(rank, expected)
        self.rank = rank
        self.expected = expected

    def __str__(self) -> str:
        return f"Configuration is degenerate: rank {self.rank}, expected {self.expected}"


class TooFewPoints(PreconditionError):
    """
    点数少于 ``r + 2``
    """

    translate_key = "message.failure.too_few_points"

    def __init__(self, count: int, minimum: int):
        super().__init__(count, minimum)
        self.count = count
        self.minimum = minimum

    def __str__(self) -> str:
        return f"Too few points: {self.count}, at least {self.minimum} required"


class ZeroRowInDual(PreconditionError):
    """
    Gale 变换中出现零行，点组不够一般
    """

    translate_key = "message.failure.zero_row_in_dual"

    def __init__(self, index: int):
        super().__init__(index)
        self.index = index

    def __str__(self) -> str:
        return f"Gale transform has a zero row at index {self.index}"


class NoTransport(MathematicalFailure):
    """
    不存在把一组点逐点送到另一组点的射影变换
    """

    translate_key = "message.failure.no_transport"

    def __init__(self, dimension: int):
        super().__init__(dimension)
        self.dimension = dimension

    def __str__(self) -> str:
        return f"No projective transport exists (solution space dimension {self.dimension})"


class TransportNotUnique(MathematicalFailure):
    """
    射影变换不唯一
    """

    translate_key = "message.failure.transport_not_unique"

    def __init__(self, dimension: int):
        super().__init__(dimension)
        self.dimension = dimension

    def __str__(self) -> str:
        return f"Projective transport is not unique (solution space dimension {self.dimension})"


class CertificateNotFound(MathematicalFailure):
    """
    找不到对角证书
    """

    translate_key = "message.failure.certificate_not_found"

    def __init__(self, status: str):
        super().__init__(status)
        self.status = status

    def __str__(self) -> str:
        return f"No Gale duality certificate found ({self.status})"


@dataclass(frozen=True)
class PointConfig:
    """
    ``Pʳ`` 中的 ``γ`` 个点，矩阵的每一行是一个齐次坐标代表元
    """

    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.rows < 1 or self.matrix.cols < 1:
            raise DimensionMismatch(">= 1 point in P^r, r >= 0", (self.matrix.rows, self.matrix.cols), "shape")
        for row in self.matrix.data:
            if all(x == 0 for x in row):
                raise ZeroPoint()

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable[Entry]]) -> Self:
        return cls(Matrix.from_rows(field, rows))

    @property
    def field(self) -> FieldSpec:
        return self.matrix.field

    @property
    def dim(self) -> int:
        """
        环境射影空间的维数 ``r``
        """
        return self.matrix.cols - 1

    @property
    def count(self) -> int:
        return self.matrix.rows

    @property
    def points(self) -> tuple[RawVector, ...]:
        return self.matrix.data

    def scaled(self, factors: Sequence[Entry]) -> Self:
        """
        逐行缩放，射影上不变
        """
        # noinspection PyArgumentList
        return type(self)(self.matrix.scale_rows(Matrix.from_rows(self.field, [factors]).row(0)))

    def transformed(self, transform: Matrix) -> Self:
        """
        每个点左乘 ``transform``
        """
        # noinspection PyArgumentList
        return type(self)(self.matrix @ transform.transpose())

    def normalized(self) -> Self:
        # noinspection PyArgumentList
        return type(self)(Matrix.from_rows(self.field, (normalize_point(self.field, p) for p in self.points)))

    def same_points(self, other: "PointConfig") -> bool:
        """
        逐点 (按顺序) 射影相等
        """
        return self.count == other.count and all(
            same_point(self.field, p, q) for p, q in zip(self.points, other.points)
        )

    def to_strings(self) -> list[list[str]]:
        return self.matrix.to_strings()


def is_nondegenerate(c: PointConfig) -> bool:
    """
    点组是否张满 ``Pʳ``
    """
    return rank(c.matrix) == c.dim + 1


def _require_nondegenerate(c: PointConfig) -> None:
    actual = rank(c.matrix)
    if actual != c.dim + 1:
        raise Degenerate(actual, c.dim + 1)


def gale_transform(c: PointConfig) -> PointConfig:
    """
    Gale 变换：``Gᵀ`` 的零空间基矩阵的各行

    :param c: ``Pʳ`` 中的 ``γ`` 个非退化点
    :type c: PointConfig

    :return: ``Pˢ`` 中的 ``γ`` 个点，``s = γ − r − 2``
    :rtype: PointConfig

    :raise Degenerate: 点组退化
    :raise TooFewPoints: ``γ < r + 2``
    :raise ZeroRowInDual: 结果中有零行
    """
    _require_nondegenerate(c)
    if c.count < c.dim + 2:
        raise TooFewPoints(c.count, c.dim + 2)
    dual = kernel(c.matrix.transpose()).basis
    for index, row in enumerate(dual.data):
        if all(x == 0 for x in row):
            raise ZeroRowInDual(index)
    logger.debug("gale transform: %d points in P^%d -> P^%d", c.count, c.dim, dual.cols - 1)
    return PointConfig(dual)


class CertificateStatus(StrEnum):
    """
    证书搜索的结果
    """
    FOUND = "found"
    KERNEL_ZERO = "kernel_zero"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class DualCertificate:
    """
    ``Bᵀ·diag(D)·A = 0``，且 ``D`` 的每个分量非零
    """

    D: RawVector
    A: Matrix
    B: Matrix

    @property
    def field(self) -> FieldSpec:
        return self.A.field

    def residual(self) -> Matrix:
        """
        ``Bᵀ·diag(D)·A``
        """
        return self.B.transpose() @ self.A.scale_rows(self.D)

    def verify(self) -> bool:
        if self.A.field != self.B.field:
            return False
        if not (len(self.D) == self.A.rows == self.B.rows):
            return False
        return all(d != 0 for d in self.D) and self.residual().is_zero()


@dataclass(frozen=True)
class CertificateSearch:
    status: CertificateStatus
    kernel_dim: int
    certificate: DualCertificate | None = None


def _certificate_system(a: Matrix, b: Matrix) -> Matrix:
    """
    关于 ``d`` 的线性方程组 ``Σᵢ B[i,k]·dᵢ·A[i,j] = 0``
    """
    f = a.field
    rows = [
        tuple(f.mul(b.data[i][k], a.data[i][j]) for i in range(a.rows))
        for j in range(a.cols)
        for k in range(b.cols)
    ]
    return Matrix.from_rows(f, rows, a.rows)


def _nonzero_combination(
        field: FieldSpec,
        basis: Sequence[RawVector],
        *,
        seed: int,
        random_tries: int,
        power_sweep: int,
) -> RawVector | None:
    """
    在零空间中寻找所有分量均非零的向量

    素域上随机组合，有理数域上依次尝试 ``Σ tⁱ·kᵢ``，``t = 1, 2, ...``
    """
    length = len(basis[0])

    def combine(coefficients: Sequence[Any]) -> RawVector:
        return tuple(
            field.canonical(sum((c * v[n] for c, v in zip(coefficients, basis)), field.zero))
            for n in range(length)
        )

    if field.characteristic:
        rng = make_rng(seed)
        for _ in range(random_tries):
            candidate = combine([field.random_raw(rng) for _ in basis])
            if all(x != 0 for x in candidate):
                return candidate
        return None
    for t in range(1, power_sweep + 1):
        candidate = combine([field.pow(field.canonical(t), i) for i in range(len(basis))])
        if all(x != 0 for x in candidate):
            return candidate
    return None


def find_dual_certificate(
        a: PointConfig,
        b: PointConfig,
        *,
        seed: int = 0,
        random_tries: int = 100,
        power_sweep: int = 1000,
) -> CertificateSearch:
    """
    寻找使 ``Bᵀ·diag(D)·A = 0`` 的可逆对角矩阵 ``D``

    :param a: ``Pʳ`` 中的点组
    :type a: PointConfig
    :param b: ``Pˢ`` 中的点组
    :type b: PointConfig
    :param seed: 素域上随机组合的种子
    :type seed: int
    :param random_tries: 素域上的随机组合次数
    :type random_tries: int
    :param power_sweep: 有理数域上 ``t`` 的上界
    :type power_sweep: int

    :return: 搜索结果，找到时 ``D[0] = 1``
    :rtype: CertificateSearch

    :raise DimensionMismatch: 点数不同或 ``r + s + 2 ≠ γ``
    :raise Degenerate: 点组退化
    """
    if a.field != b.field:
        raise FieldMismatch(a.field, b.field)
    if a.count != b.count:
        raise DimensionMismatch(a.count, b.count, "point count")
    if a.dim + b.dim + 2 != a.count:
        raise DimensionMismatch(a.count, a.dim + b.dim + 2, "r + s + 2")
    _require_nondegenerate(a)
    _require_nondegenerate(b)

    field = a.field
    solutions = kernel(_certificate_system(a.matrix, b.matrix))
    logger.debug("certificate kernel dimension %d", solutions.dim)
    if solutions.dim == 0:
        return CertificateSearch(CertificateStatus.KERNEL_ZERO, 0)
    d = _nonzero_combination(
        field, solutions.vectors, seed=seed, random_tries=random_tries, power_sweep=power_sweep
    )
    if d is None:
        return CertificateSearch(CertificateStatus.BUDGET_EXHAUSTED, solutions.dim)
    d = normalize_point(field, d)
    return CertificateSearch(CertificateStatus.FOUND, solutions.dim, DualCertificate(d, a.matrix, b.matrix))


def is_gale_dual(a: PointConfig, b: PointConfig, **kwargs: Any) -> DualCertificate | None:
    """
    :return: 对角证书，不存在或在预算内找不到时返回 ``None``
    :rtype: DualCertificate | None

    .. seealso::
       :py:func:`find_dual_certificate`
    """
    return find_dual_certificate(a, b, **kwargs).certificate


def require_certificate(a: PointConfig, b: PointConfig, **kwargs: Any) -> DualCertificate:
    """
    :raise CertificateNotFound: 找不到证书
    """
    search = find_dual_certificate(a, b, **kwargs)
    if search.certificate is None:
        raise CertificateNotFound(search.status.value)
    return search.certificate


@dataclass(frozen=True)
class TransportResult:
    """
    方程组 ``M·srcᵢ − λᵢ·dstᵢ = 0`` 的解空间

    未知数依次为 ``M`` 的按行排列的元素与 ``λ₁..λ_γ``
    """

    solutions: Subspace
    matrix: Matrix | None = None
    scales: RawVector | None = None

    @property
    def dimension(self) -> int:
        return self.solutions.dim

    def reproduces(self, src: PointConfig, dst: PointConfig) -> bool:
        """
        ``M·srcᵢ`` 是否为 ``dstᵢ`` 的非零倍数
        """
        if self.matrix is None or src.count != dst.count:
            return False
        for p, q in zip(src.points, dst.points):
            image = self.matrix.apply(p)
            if all(x == 0 for x in image) or not same_point(src.field, image, q):
                return False
        return True


def projective_transport(src: PointConfig, dst: PointConfig) -> TransportResult:
    """
    求把 ``src`` 逐点送到 ``dst`` 的射影变换

    :param src: ``Pᵐ`` 中的点组
    :type src: PointConfig
    :param dst: ``Pᵐ`` 中的点组
    :type dst: PointConfig

    :return: 解空间；维数为 1 时附带 ``M`` (首个非零元素为 1) 与 ``λ``
    :rtype: TransportResult

    :raise DimensionMismatch: 点数或维数不同
    :raise NoTransport: 只有零解，或唯一的解使某个 ``λᵢ = 0``
    """
    if src.field != dst.field:
        raise FieldMismatch(src.field, dst.field)
    if src.count != dst.count:
        raise DimensionMismatch(src.count, dst.count, "point count")
    if src.dim != dst.dim:
        raise DimensionMismatch(src.dim, dst.dim, "ambient dimension")

    field = src.field
    size = src.dim + 1
    unknowns = size * size + src.count
    rows = []
    for i, (p, q) in enumerate(zip(src.points, dst.points)):
        for a in range(size):
            row = [field.zero] * unknowns
            row[a * size:(a + 1) * size] = p
            row[size * size + i] = field.neg(q[a])
            rows.append(row)
    solutions = kernel(Matrix.from_rows(field, rows, unknowns))
    logger.debug("transport solution space dimension %d", solutions.dim)
    if solutions.dim == 0:
        raise NoTransport(0)
    if solutions.dim > 1:
        return TransportResult(solutions)

    vector = normalize_point(field, solutions.vectors[0])
    matrix = Matrix(field, size, size, tuple(vector[a * size:(a + 1) * size] for a in range(size)))
    scales = vector[size * size:]
    if matrix.is_zero() or any(x == 0 for x in scales):
        raise NoTransport(1)
    return TransportResult(solutions, matrix, scales)


def double_dual_check(c: PointConfig, **kwargs: Any) -> DualCertificate:
    """
    检查 ``c`` 与其二次 Gale 变换

    ``gale(c)`` 与 ``gale(gale(c))`` 互为 Gale 对偶，并且存在把 ``c`` 逐点送到
    ``gale(gale(c))`` 的射影变换；变换不唯一时改为求解 ``G·X = G''``

    :raise CertificateNotFound: 找不到证书
    :raise NoTransport: 不存在射影变换
    """
    first = gale_transform(c)
    second = gale_transform(first)
    certificate = require_certificate(first, second, **kwargs)
    transport = projective_transport(c, second)
    if transport.matrix is not None:
        if not transport.reproduces(c, second):
            raise NoTransport(transport.dimension)
        return certificate

    # G'' 的列空间等于 G 的列空间
    for column in second.matrix.columns():
        if solve(c.matrix, column) is None:
            raise NoTransport(transport.dimension)
    logger.debug("double dual matched by column-space change of basis")
    return certificate


__all__ = (
    "Degenerate",
    "TooFewPoints",
    "ZeroRowInDual",
    "NoTransport",
    "TransportNotUnique",
    "CertificateNotFound",

    "PointConfig",
    "is_nondegenerate",
    "gale_transform",

    "CertificateStatus",
    "DualCertificate",
    "CertificateSearch",
    "find_dual_certificate",
    "is_gale_dual",
    "require_certificate",

    "TransportResult",
    "projective_transport",
    "double_dual_check",
)
