# -*- coding: utf-8 -*-


import pytest

from gale_goppa.algebra import DimensionMismatch
from gale_goppa.algebra import FieldSpec
from gale_goppa.algebra import Matrix
from gale_goppa.algebra import ZeroPoint
from gale_goppa.algebra import make_rng
from gale_goppa.algebra import random_invertible
from gale_goppa.algebra import rank
from gale_goppa.geometry import CertificateNotFound
from gale_goppa.geometry import CertificateStatus
from gale_goppa.geometry import Degenerate
from gale_goppa.geometry import DualCertificate
from gale_goppa.geometry import NoTransport
from gale_goppa.geometry import PointConfig
from gale_goppa.geometry import TooFewPoints
from gale_goppa.geometry import ZeroRowInDual
from gale_goppa.geometry import double_dual_check
from gale_goppa.geometry import find_dual_certificate
from gale_goppa.geometry import gale_transform
from gale_goppa.geometry import gen_general_points
from gale_goppa.geometry import is_gale_dual
from gale_goppa.geometry import is_nondegenerate
from gale_goppa.geometry import projective_transport
from gale_goppa.geometry import require_certificate

from .conftest import F101

SHAPES = [(5, 2), (6, 2), (7, 3), (8, 2), (8, 4), (9, 3)]


def test_frame_dual(field: FieldSpec, frame: PointConfig) -> None:
    dual = PointConfig.from_rows(field, [[1, 1], [1, 2], [1, 3], [1, 0], [0, 1]])
    search = find_dual_certificate(frame, dual)
    assert search.status is CertificateStatus.FOUND
    assert search.kernel_dim == 1
    assert search.certificate is not None
    minus = field.canonical(-1)
    assert search.certificate.D == (1, 1, 1, minus, minus)
    assert search.certificate.verify()


def test_kernel_zero(field: FieldSpec, frame: PointConfig) -> None:
    other = PointConfig.from_rows(field, [[1, 1], [1, 2], [1, 3], [1, 0], [1, 5]])
    search = find_dual_certificate(frame, other)
    assert search.status is CertificateStatus.KERNEL_ZERO
    assert search.certificate is None
    assert is_gale_dual(frame, other) is None
    with pytest.raises(CertificateNotFound) as info:
        require_certificate(frame, other)
    assert info.value.status == "kernel_zero"


def general_configs(field: FieldSpec, count: int, offset: int = 0) -> list[PointConfig]:
    return [
        gen_general_points(field, *SHAPES[seed % len(SHAPES)], offset + seed)
        for seed in range(count)
    ]


def test_transform_is_dual(field: FieldSpec) -> None:
    for config in general_configs(field, 50):
        dual = gale_transform(config)
        assert (dual.count, dual.dim) == (config.count, config.count - config.dim - 2)
        assert (config.matrix.transpose() @ dual.matrix).is_zero()
        search = find_dual_certificate(config, dual)
        assert search.kernel_dim >= 1
        assert search.certificate is not None and search.certificate.verify()


def test_transform_ignores_coordinates(field: FieldSpec) -> None:
    rng = make_rng(3, field.characteristic)
    for config in general_configs(field, 50, 200):
        moved = config.transformed(random_invertible(field, config.dim + 1, rng))
        assert gale_transform(moved).matrix == gale_transform(config).matrix


def test_scaling_moves_into_certificate(field: FieldSpec) -> None:
    rng = make_rng(4, field.characteristic)
    for config in general_configs(field, 50, 400):
        factors = [field.canonical(rng.randint(1, 50)) for _ in range(config.count)]
        dual = gale_transform(config)
        certificate = require_certificate(config.scaled(factors), dual)
        products = {field.mul(d, c) for d, c in zip(certificate.D, factors)}
        assert len(products) == 1


def test_certificate_rejects_bad_diagonal(field: FieldSpec, frame: PointConfig) -> None:
    dual = gale_transform(frame)
    certificate = require_certificate(frame, dual)
    assert not DualCertificate((0,) + certificate.D[1:], certificate.A, certificate.B).verify()
    assert not DualCertificate(certificate.D[:-1], certificate.A, certificate.B).verify()
    changed = (certificate.D[0], field.add(certificate.D[1], 1), *certificate.D[2:])
    assert not DualCertificate(changed, certificate.A, certificate.B).verify()


def test_double_dual(field: FieldSpec, frame: PointConfig) -> None:
    assert double_dual_check(frame).verify()
    for config in general_configs(field, 50, 100):
        assert double_dual_check(config).verify()


def test_degenerate_inputs(field: FieldSpec) -> None:
    collinear = PointConfig.from_rows(field, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [1, 3, 0]])
    assert not is_nondegenerate(collinear)
    with pytest.raises(Degenerate) as info:
        gale_transform(collinear)
    assert (info.value.rank, info.value.expected) == (2, 3)
    with pytest.raises(TooFewPoints):
        gale_transform(PointConfig.from_rows(field, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(ZeroRowInDual) as zero:
        gale_transform(PointConfig.from_rows(field, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0]]))
    assert zero.value.index == 2
    with pytest.raises(ZeroPoint):
        PointConfig.from_rows(field, [[0, 0, 0], [1, 0, 0]])


def test_certificate_shape_checks(frame: PointConfig) -> None:
    with pytest.raises(DimensionMismatch):
        find_dual_certificate(frame, PointConfig.from_rows(frame.field, [[1, 0], [0, 1], [1, 1], [1, 2]]))
    with pytest.raises(DimensionMismatch):
        find_dual_certificate(frame, PointConfig.from_rows(frame.field, [[1, 0, 0]] * 5))


def test_transport_unique(field: FieldSpec) -> None:
    rng = make_rng(5, field.characteristic)
    src = gen_general_points(field, 5, 2, 5)
    transform = random_invertible(field, 3, rng)
    dst = src.transformed(transform).scaled([field.canonical(k) for k in (1, 2, 3, 4, 5)])
    result = projective_transport(src, dst)
    assert result.dimension == 1
    assert result.matrix is not None and result.scales is not None
    assert rank(result.matrix) == 3
    assert result.reproduces(src, dst)


def test_transport_simplex(field: FieldSpec) -> None:
    simplex = PointConfig(Matrix.from_rows(field, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    result = projective_transport(simplex, simplex)
    assert result.dimension == 3
    assert result.matrix is None
    assert not result.reproduces(simplex, simplex)


def test_no_transport(field: FieldSpec) -> None:
    src = PointConfig.from_rows(field, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    dst = PointConfig.from_rows(field, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])
    with pytest.raises(NoTransport) as info:
        projective_transport(src, dst)
    assert info.value.dimension == 1


def test_point_config_helpers() -> None:
    config = PointConfig.from_rows(F101, [[2, 4, 6], [0, 3, 1]])
    assert config.normalized().points == ((1, 2, 3), (0, 1, 34))
    assert config.same_points(config.normalized())
    assert not config.same_points(PointConfig.from_rows(F101, [[1, 2, 3], [0, 1, 2]]))
    assert config.to_strings() == [["2", "4", "6"], ["0", "3", "1"]]
    assert (config.count, config.dim) == (2, 2)
