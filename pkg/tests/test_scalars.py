# -*- coding: utf-8 -*-


from fractions import Fraction

import pytest

from gale_goppa.algebra import DivisionByZero
from gale_goppa.algebra import FieldMismatch
from gale_goppa.algebra import FieldSpec
from gale_goppa.algebra import InputError
from gale_goppa.algebra import MathematicalFailure
from gale_goppa.algebra import NotPrime
from gale_goppa.algebra import ParseError
from gale_goppa.algebra import PreconditionError
from gale_goppa.algebra import PrimeField
from gale_goppa.algebra import RationalField
from gale_goppa.algebra import SmallCharacteristic
from gale_goppa.algebra import create_field
from gale_goppa.algebra import field_make
from gale_goppa.algebra import make_rng
from gale_goppa.algebra import parse_field_flag
from gale_goppa.algebra import require_characteristic

from .conftest import F101
from .conftest import QQ


@pytest.mark.parametrize("p", [0, 1, 4, 100, 1 << 63])
def test_not_prime(p: int) -> None:
    with pytest.raises(NotPrime) as info:
        PrimeField(p)
    assert info.value.p == p
    assert isinstance(info.value, PreconditionError)


def test_prime_inverse() -> None:
    assert F101.inv(3) == 34
    assert F101.div(1, 3) == 34
    with pytest.raises(DivisionByZero):
        F101.inv(0)
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))


def test_parse_raw() -> None:
    assert QQ.parse_raw("-3/6") == Fraction(-1, 2)
    assert QQ.parse_raw(" 7 ") == 7
    assert PrimeField(7).parse_raw("1/2") == 4
    assert PrimeField(7).parse_raw("-1") == 6
    with pytest.raises(DivisionByZero):
        QQ.parse_raw("1/0")
    with pytest.raises(DivisionByZero):
        PrimeField(7).parse_raw("1/14")
    with pytest.raises(ParseError) as info:
        QQ.parse_raw("1.5")
    assert info.value.text == "1.5"
    assert isinstance(info.value, InputError)


def test_format_raw() -> None:
    assert QQ.format_raw(Fraction(-4, 6)) == "-2/3"
    assert QQ.format_raw(Fraction(5)) == "5"
    assert F101.format_raw(F101.canonical(-1)) == "100"


def test_element_operators() -> None:
    f7 = PrimeField(7)
    a = f7.element(3)
    assert a + 5 == 1
    assert a * 5 == 1
    assert a / 5 == 2
    assert a - 5 == 5
    assert 2 - a == 6
    assert 1 / a == 5
    assert -a == 4
    assert a ** 6 == 1
    assert a ** -1 == a.inv()
    assert a == 10
    assert not f7.element(7)
    assert str(a) == "3"


def test_element_field_mismatch() -> None:
    with pytest.raises(FieldMismatch):
        _ = PrimeField(7).element(1) + PrimeField(11).element(1)
    with pytest.raises(FieldMismatch):
        PrimeField(7).element(PrimeField(11).element(1))


@pytest.mark.parametrize("f", [QQ, F101, PrimeField(5)], ids=str)
def test_field_axioms(f: FieldSpec) -> None:
    rng = make_rng(1, f.characteristic)
    for _ in range(200):
        a, b, c = (f.random_element(rng) for _ in range(3))
        assert a + (b + c) == (a + b) + c
        assert a * (b * c) == (a * b) * c
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a + 0 == a
        assert a * 1 == a
        assert a - a == 0
        if a:
            assert a * a.inv() == 1
            assert (b / a) * a == b


def test_fermat() -> None:
    rng = make_rng(2)
    for _ in range(50):
        a = F101.random_raw(rng)
        if a:
            assert F101.pow(a, 100) == 1
            assert F101.pow(a, -1) == F101.inv(a)


def test_sqrt() -> None:
    assert F101.sqrt(4) in (2, 99)
    # 101 ≡ 5 (mod 8)
    assert F101.sqrt(2) is None
    assert F101.sqrt(0) == 0
    assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert QQ.sqrt(Fraction(2)) is None
    assert QQ.sqrt(Fraction(-1)) is None
    rng = make_rng(3)
    for _ in range(50):
        a = F101.random_raw(rng)
        root = F101.sqrt(F101.mul(a, a))
        assert root is not None and F101.mul(root, root) == F101.mul(a, a)


def test_sympy_conversion(field: FieldSpec) -> None:
    for value in (Fraction(-3, 4), Fraction(17), Fraction(0)):
        raw = field.canonical(value)
        assert field.from_sympy(field.to_sympy(raw)) == raw


def test_create_field() -> None:
    assert create_field({"type": "prime", "p": 101}) == F101
    assert create_field({"type": "rational"}) == QQ
    assert create_field(F101.to_dict()) == F101
    for bad in ({"type": "prime"}, {"type": "complex"}, {"p": 7}, {"type": "prime", "p": "7"}):
        with pytest.raises(ParseError):
            create_field(bad)
    with pytest.raises(NotPrime):
        create_field({"type": "prime", "p": 91})


def test_parse_field_flag() -> None:
    assert parse_field_flag("prime:101") == F101
    assert parse_field_flag("rational") == QQ
    assert str(parse_field_flag("prime:7")) == "prime:7"
    with pytest.raises(ParseError):
        parse_field_flag("prime:x")
    with pytest.raises(ParseError):
        parse_field_flag("rational:3")
    with pytest.raises(NotPrime):
        parse_field_flag("prime:100")


def test_field_make() -> None:
    assert field_make("prime", 7) == PrimeField(7)
    assert field_make("rational") == RationalField()
    with pytest.raises(NotPrime):
        field_make("prime")


def test_make_rng_deterministic() -> None:
    assert make_rng(1, 2).random() == make_rng(1, 2).random()
    assert make_rng(1, 2).random() != make_rng(1, 3).random()


def test_require_characteristic() -> None:
    require_characteristic(0, 11)
    require_characteristic(11, 11)
    with pytest.raises(SmallCharacteristic) as info:
        require_characteristic(7, 11)
    assert info.value.translate_kwargs() == {"characteristic": 7, "minimum": 11}


def test_error_hierarchy() -> None:
    assert issubclass(DivisionByZero, MathematicalFailure)
    assert issubclass(DivisionByZero, ZeroDivisionError)
    assert NotPrime(4).translate_kwargs() == {"p": 4}
    assert NotPrime.translate_key == "message.failure.not_prime"
