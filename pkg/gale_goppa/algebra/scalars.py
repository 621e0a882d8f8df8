# -*- coding: utf-8 -*-


import math
import re
from abc import ABC
from abc import abstractmethod
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from random import Random
from typing import Any
from typing import ClassVar
from typing import Self
from typing import override

import sympy
import wrapt  # type: ignore[import-untyped]
from sympy.ntheory import sqrt_mod

from .utils import FieldMismatch
from .utils import InputError
from .utils import MathematicalFailure
from .utils import PreconditionError
from .utils import Raw

_NUMBER_PATTERN = re.compile(r"([+-]?\d+)(?:/([+-]?\d+))?")
MAX_PRIME = 1 << 63


class FieldKind(StrEnum):
    """
    域的种类
    """
    RATIONAL = "rational"
    PRIME = "prime"


class NotPrime(PreconditionError, ValueError):
    """
    素域的模数不是素数
    """

    translate_key = "message.failure.not_prime"

    def __init__(self, p: int):
        super().__init__(p)
        self.p = p

    def __str__(self) -> str:
        return f"Not a prime modulus: {self.p}"


class DivisionByZero(MathematicalFailure, ZeroDivisionError):
    """
    除以零
    """

    translate_key = "message.failure.division_by_zero"

    def __str__(self) -> str:
        return "Division by zero"


class ParseError(InputError, ValueError):
    """
    无法解析的数
    """

    translate_key = "message.failure.parse"

    def __init__(self, text: str, field: str):
        super().__init__(text, field)
        self.text = text
        self.field = field

    def __str__(self) -> str:
        return f"Cannot parse {self.text!r} over {self.field}"


def _split_number(text: str) -> tuple[int, int]:
    """
    把 ``"-?[0-9]+"`` 或 ``"a/b"`` 拆成分子与分母

    :raise DivisionByZero: 分母为零
    """
    match = _NUMBER_PATTERN.fullmatch(text.strip())
    if match is None:
        raise ValueError(text)
    numerator = int(match.group(1))
    denominator = 1 if match.group(2) is None else int(match.group(2))
    if denominator == 0:
        raise DivisionByZero()
    return numerator, denominator


@dataclass(frozen=True)
class FieldSpec(ABC):
    """
    精确的域

    所有的原始运算 (``add``, ``mul`` ...) 都作用于规范原始表示 :py:data:`Raw`，
    并且结果总是规范的；:py:class:`FieldElement` 只是在其上包装了运算符
    """

    kind: ClassVar[FieldKind]

    @property
    @abstractmethod
    def characteristic(self) -> int:
        """
        域的特征
        """

    @abstractmethod
    def canonical(self, value: int | Fraction) -> Raw:
        """
        规范化

        :param value: 整数或分数
        :type value: int | Fraction

        :return: 规范原始表示
        :rtype: Raw

        :raise DivisionByZero: 素域中分母为 ``p`` 的倍数
        """

    @abstractmethod
    def inv(self, a: Raw) -> Raw:
        """
        乘法逆元

        :raise DivisionByZero: ``a`` 为零
        """

    @abstractmethod
    def sqrt(self, a: Raw) -> Raw | None:
        """
        平方根，不存在时返回 ``None``
        """

    @abstractmethod
    def random_raw(self, rng: Random, bound: int = 20) -> Raw:
        """
        随机元素

        :param rng: 随机数生成器
        :type rng: Random
        :param bound: 有理数域中整数的绝对值上界，素域忽略此参数
        :type bound: int
        """

    @abstractmethod
    def format_raw(self, a: Raw) -> str:
        """
        规范字符串形式
        """

    @abstractmethod
    def to_sympy(self, a: Raw) -> sympy.Expr:
        """
        转换为 sympy 数
        """

    @abstractmethod
    def poly_options(self) -> dict[str, Any]:
        """
        构造 :py:class:`sympy.Poly` 时使用的域参数
        """

    @abstractmethod
    def matrix_domain(self) -> Any:
        """
        :py:class:`sympy.polys.matrices.DomainMatrix` 使用的系数域
        """

    @abstractmethod
    def to_dict(self) -> dict[str, Any]:
        """
        转换为配置文件中的域对象
        """

    @property
    def zero(self) -> Raw:
        return self.canonical(0)

    @property
    def one(self) -> Raw:
        return self.canonical(1)

    def add(self, a: Raw, b: Raw) -> Raw:
        return self.canonical(a + b)

    def sub(self, a: Raw, b: Raw) -> Raw:
        return self.canonical(a - b)

    def mul(self, a: Raw, b: Raw) -> Raw:
        return self.canonical(a * b)

    def neg(self, a: Raw) -> Raw:
        return self.canonical(-a)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def pow(self, a: Raw, exponent: int) -> Raw:
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        result = self.one
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    @staticmethod
    def is_zero(a: Raw) -> bool:
        return a == 0

    def parse_raw(self, text: str) -> Raw:
        """
        解析 ``"-?[0-9]+"`` 或 ``"a/b"``

        :raise ParseError: 格式不正确
        :raise DivisionByZero: 分母为零
        """
        try:
            numerator, denominator = _split_number(text)
        except ValueError:
            raise ParseError(text, str(self)) from None
        return self.canonical(Fraction(numerator, denominator))

    def from_sympy(self, value: Any) -> Raw:
        """
        从 sympy 数转换
        """
        value = sympy.Rational(value)
        return self.canonical(Fraction(int(value.p), int(value.q)))

    def element(self, value: "int | Fraction | FieldElement") -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(self, value.field)
            return value
        return FieldElement(self, self.canonical(value))

    def from_integer(self, n: int) -> "FieldElement":
        return FieldElement(self, self.canonical(n))

    def parse(self, text: str) -> "FieldElement":
        return FieldElement(self, self.parse_raw(text))

    def random_element(self, rng: Random, bound: int = 20) -> "FieldElement":
        return FieldElement(self, self.random_raw(rng, bound))


@dataclass(frozen=True)
class RationalField(FieldSpec):
    """
    有理数域，任意精度
    """

    kind = FieldKind.RATIONAL

    @property
    @override
    def characteristic(self) -> int:
        return 0

    @override
    def canonical(self, value: int | Fraction) -> Raw:
        return Fraction(value)

    @override
    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise DivisionByZero()
        return 1 / Fraction(a)

    @override
    def sqrt(self, a: Raw) -> Raw | None:
        a = Fraction(a)
        if a < 0:
            return None
        num, den = math.isqrt(a.numerator), math.isqrt(a.denominator)
        if num * num != a.numerator or den * den != a.denominator:
            return None
        return Fraction(num, den)

    @override
    def random_raw(self, rng: Random, bound: int = 20) -> Raw:
        return Fraction(rng.randint(-bound, bound))

    @override
    def format_raw(self, a: Raw) -> str:
        return str(Fraction(a))

    @override
    def to_sympy(self, a: Raw) -> sympy.Expr:
        a = Fraction(a)
        return sympy.Rational(a.numerator, a.denominator)

    @override
    def poly_options(self) -> dict[str, Any]:
        return {"domain": sympy.QQ}

    @override
    def matrix_domain(self) -> Any:
        return sympy.QQ

    @override
    def to_dict(self) -> dict[str, Any]:
        return {"type": FieldKind.RATIONAL.value}

    def __str__(self) -> str:
        return "rational"


@dataclass(frozen=True)
class PrimeField(FieldSpec):
    """
    素域 F_p，``p < 2**63``
    """

    p: int
    kind = FieldKind.PRIME

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 2 or self.p >= MAX_PRIME:
            raise NotPrime(self.p)
        # sympy.isprime 对 64 位以内的整数是确定性的
        if not sympy.isprime(self.p):
            raise NotPrime(self.p)

    @property
    @override
    def characteristic(self) -> int:
        return self.p

    @override
    def canonical(self, value: int | Fraction) -> Raw:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero()
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    @override
    def inv(self, a: Raw) -> Raw:
        if a % self.p == 0:
            raise DivisionByZero()
        return pow(int(a), -1, self.p)

    @override
    def sqrt(self, a: Raw) -> Raw | None:
        root = sqrt_mod(int(a) % self.p, self.p)
        return None if root is None else int(root) % self.p

    @override
    def random_raw(self, rng: Random, bound: int = 20) -> Raw:
        return rng.randrange(self.p)

    @override
    def format_raw(self, a: Raw) -> str:
        return str(int(a))

    @override
    def to_sympy(self, a: Raw) -> sympy.Expr:
        return sympy.Integer(int(a))

    @override
    def from_sympy(self, value: Any) -> Raw:
        return int(value) % self.p

    @override
    def poly_options(self) -> dict[str, Any]:
        return {"modulus": self.p}

    @override
    def matrix_domain(self) -> Any:
        return sympy.GF(self.p)

    @override
    def to_dict(self) -> dict[str, Any]:
        return {"type": FieldKind.PRIME.value, "p": self.p}

    def __str__(self) -> str:
        return f"prime:{self.p}"


def _convert_other[F: Callable[..., Any]](func: F) -> F:
    """
    将被装饰方法的第一个非self参数转换为同一个域中的元素

    :param func: 被装饰的方法
    :type func: Callable[..., Any]

    :return: 装饰后的方法
    :rtype: Callable[..., Any]
    """

    @wrapt.decorator  # type: ignore[misc]
    def decorator(wrapped: F, instance: Any, args: tuple[Any, ...], kwargs: dict[str, Any]) -> Any:
        if instance is None:
            raise TypeError("Cannot call method without instance")

        other = args[0]
        if isinstance(other, FieldElement):
            if other.field != instance.field:
                raise FieldMismatch(instance.field, other.field)
        elif isinstance(other, (int, Fraction)):
            other = instance.field.element(other)
        else:
            return NotImplemented
        return wrapped(other, *args[1:], **kwargs)

    return decorator(func)  # type: ignore[no-any-return]


@dataclass(frozen=True, eq=False)
class FieldElement:
    """
    域中的元素，不可变
    """

    field: FieldSpec
    value: Raw

    @_convert_other
    def __add__(self, other: Any) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.add(self.value, other.value))

    @_convert_other
    def __sub__(self, other: Any) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.sub(self.value, other.value))

    @_convert_other
    def __rsub__(self, other: Any) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.sub(other.value, self.value))

    @_convert_other
    def __mul__(self, other: Any) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.mul(self.value, other.value))

    @_convert_other
    def __truediv__(self, other: Any) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.div(self.value, other.value))

    @_convert_other
    def __rtruediv__(self, other: Any) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.div(other.value, self.value))

    @_convert_other
    def __eq__(self, other: Any) -> bool:  # type: ignore[override]
        return bool(self.value == other.value)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.neg(self.value))

    def __pow__(self, exponent: int) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.pow(self.value, exponent))

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __bool__(self) -> bool:
        return not self.field.is_zero(self.value)

    def inv(self) -> Self:
        # noinspection PyArgumentList
        return type(self)(self.field, self.field.inv(self.value))

    def __str__(self) -> str:
        return self.field.format_raw(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.field}, {self})"


FIELD_TYPES: dict[str, type[FieldSpec]] = {
    FieldKind.RATIONAL.value: RationalField,
    FieldKind.PRIME.value: PrimeField,
}


def field_make(kind: FieldKind | str, p: int | None = None) -> FieldSpec:
    """
    构造域

    :param kind: 域的种类
    :type kind: FieldKind | str
    :param p: 素域的模数
    :type p: int | None

    :return: 经过验证的域
    :rtype: FieldSpec

    :raise NotPrime: ``p`` 不是素数
    """
    kind = FieldKind(kind)
    if kind == FieldKind.PRIME:
        if p is None:
            raise NotPrime(0)
        return PrimeField(p)
    return RationalField()


__all__ = (
    "FieldKind",

    "NotPrime",
    "DivisionByZero",
    "ParseError",

    "FieldSpec",
    "RationalField",
    "PrimeField",
    "FieldElement",

    "FIELD_TYPES",
    "field_make",
)
