# -*- coding: utf-8 -*-


import dataclasses
import logging
from collections.abc import Mapping
from collections.abc import Sequence
from typing import Any

from ..algebra import BasePointSpec
from ..algebra import DimensionMismatch
from ..algebra import FieldSpec
from ..algebra import HomogPoly
from ..algebra import MathematicalFailure
from ..algebra import Matrix
from ..algebra import RawVector
from ..algebra import create_field
from ..algebra import evaluate
from ..algebra import evaluation_matrix
from ..algebra import same_point
from ..algebra import span
from ..algebra import vanishing_conditions
from ..algebra import vanishing_system
from ..geometry import DualCertificate
from ..geometry import NoTransport
from ..geometry import PointConfig
from ..geometry import family_dim
from ..geometry import is_nondegenerate
from ..geometry import projective_transport
from .utils import MalformedInput
from .utils import decode_rows
from .utils import digest

logger = logging.getLogger(__name__)

INPUTS_REF = "$inputs.points"


class VerificationFailed(MathematicalFailure):
    """
    报告中的证书未通过检查
    """

    translate_key = "message.failure.verification"

    def __init__(self, name: str, reason: str):
        super().__init__(name, reason)
        self.name = name
        self.reason = reason

    def __str__(self) -> str:
        return f"Certificate {self.name} failed: {self.reason}"


def output_ref(*path: str | int) -> str:
    """
    ``$outputs.a.0.b`` 形式的引用
    """
    return ".".join(["$outputs", *(str(p) for p in path)])


def encode_vector(field: FieldSpec, vector: Sequence[Any]) -> list[str]:
    return [field.format_raw(x) for x in vector]


def encode_points(field: FieldSpec, points: Sequence[Sequence[Any]]) -> list[list[str]]:
    return [encode_vector(field, p) for p in points]


def encode_poly(f: HomogPoly) -> dict[str, Any]:
    return {
        "n_vars": f.n_vars,
        "degree": f.degree,
        "terms": f.to_json(),
    }


def decode_poly(field: FieldSpec, data: Any, what: str) -> HomogPoly:
    """
    :raise MalformedInput: 结构不正确
    """
    if not isinstance(data, Mapping) or not isinstance(data.get("terms"), Mapping):
        raise MalformedInput(f"{what} must be a polynomial object")
    n_vars, degree = data.get("n_vars", 3), data.get("degree")
    if not isinstance(n_vars, int) or not isinstance(degree, int) or n_vars < 1 or degree < 0:
        raise MalformedInput(f"{what} needs integer 'n_vars' and 'degree'")
    terms = {}
    for key, value in data["terms"].items():
        try:
            exponent = tuple(int(e) for e in str(key).split(','))
        except ValueError:
            raise MalformedInput(f"{what} has a bad monomial key {key!r}") from None
        if not isinstance(value, str):
            raise MalformedInput(f"{what} coefficients must be strings")
        terms[exponent] = field.parse_raw(value)
    try:
        return HomogPoly.from_terms(field, n_vars, degree, terms)
    except DimensionMismatch:
        raise MalformedInput(f"{what} has a monomial of the wrong degree") from None


def decode_matrix(field: FieldSpec, data: Any, what: str) -> Matrix:
    if not isinstance(data, list) or not data:
        raise MalformedInput(f"{what} must be a non-empty array")
    width = len(data[0]) if isinstance(data[0], list) else -1
    if any(not isinstance(row, list) or len(row) != width for row in data) or width < 1:
        raise MalformedInput(f"{what} rows must be arrays of equal length")
    if any(not isinstance(x, str) for row in data for x in row):
        raise MalformedInput(f"{what} entries must be strings")
    return Matrix.from_rows(field, ([field.parse_raw(x) for x in row] for row in data), width)


def gale_dual_certificate(name: str, a_ref: str, b_ref: str, certificate: DualCertificate) -> dict[str, Any]:
    """
    ``Bᵀ·diag(D)·A = 0``
    """
    return {
        "kind": "gale_dual",
        "name": name,
        "A": a_ref,
        "B": b_ref,
        "D": encode_vector(certificate.field, certificate.D),
    }


def transport_certificate(
        name: str,
        src_ref: str,
        dst_ref: str,
        matrix: Matrix | str,
        dimension: int,
        *,
        veronese_degree: int | None = None,
) -> dict[str, Any]:
    """
    ``M·srcᵢ ∝ dstᵢ``，``matrix`` 可以是引用；``veronese_degree`` 给出时 ``srcᵢ`` 先经过该次数的全部单项式
    """
    data: dict[str, Any] = {
        "kind": "transport",
        "name": name,
        "src": src_ref,
        "dst": dst_ref,
        "M": matrix if isinstance(matrix, str) else matrix.to_strings(),
        "dimension": dimension,
    }
    if veronese_degree is not None:
        data["veronese_degree"] = veronese_degree
    return data


def vanishing_certificate(
        name: str,
        polys_ref: str,
        point_refs: Sequence[str],
        multiplicity: int = 1,
) -> dict[str, Any]:
    """
    多项式在这些点处以给定重数为零
    """
    return {
        "kind": "vanishing",
        "name": name,
        "polys": polys_ref,
        "points": list(point_refs),
        "multiplicity": multiplicity,
    }


def evaluation_certificate(
        name: str,
        points_ref: str,
        images_ref: str,
        *,
        polys_ref: str | None = None,
        degree: int | None = None,
) -> dict[str, Any]:
    """
    ``imagesᵢ ∝ (q₀(pᵢ), q₁(pᵢ), ...)``，未给出多项式时取 ``degree`` 次的全部单项式
    """
    data: dict[str, Any] = {
        "kind": "evaluation",
        "name": name,
        "points": points_ref,
        "images": images_ref,
    }
    if polys_ref is not None:
        data["polys"] = polys_ref
    if degree is not None:
        data["degree"] = degree
    return data


def system_dimension_certificate(
        name: str,
        degree: int | str,
        points_ref: str,
        multiplicities: Sequence[int] | str,
        dimension: int | str,
) -> dict[str, Any]:
    return {
        "kind": "system_dimension",
        "name": name,
        "degree": degree,
        "points": points_ref,
        "multiplicities": multiplicities if isinstance(multiplicities, str) else list(multiplicities),
        "dimension": dimension,
    }


def family_dimension_certificate(name: str, degree: int | str, dimension: int | str) -> dict[str, Any]:
    return {
        "kind": "family_dimension",
        "name": name,
        "degree": degree,
        "dimension": dimension,
    }


def distinct_systems_certificate(name: str, system_refs: Sequence[str]) -> dict[str, Any]:
    """
    各组多项式张成的子空间两两不同
    """
    return {
        "kind": "distinct_systems",
        "name": name,
        "systems": list(system_refs),
    }


def inputs_section(field: FieldSpec, points: PointConfig | None) -> dict[str, Any]:
    encoded = [] if points is None else points.to_strings()
    return {
        "points": encoded,
        "digest": digest({"field": field.to_dict(), "points": encoded}),
    }


@dataclasses.dataclass
class Report:
    """
    命令的输出，可由 ``verify`` 独立复核
    """

    command: str
    field: FieldSpec
    points: PointConfig | None
    outputs: dict[str, Any] = dataclasses.field(default_factory=dict)
    certificates: list[dict[str, Any]] = dataclasses.field(default_factory=list)
    status: str = "ok"
    timings: dict[str, float] | None = None

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "command": self.command,
            "field": self.field.to_dict(),
            "inputs": inputs_section(self.field, self.points),
            "outputs": self.outputs,
            "certificates": self.certificates,
            "status": self.status,
        }
        if self.timings is not None:
            data["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return data


class ReportVerifier:
    """
    复核报告中的全部证书
    """

    def __init__(self, data: Any):
        if not isinstance(data, Mapping):
            raise MalformedInput("a report must be an object")
        for key in ("field", "inputs", "outputs", "certificates", "status"):
            if key not in data:
                raise MalformedInput(f"a report needs '{key}'")
        if not isinstance(data["field"], Mapping) or not isinstance(data["inputs"], Mapping):
            raise MalformedInput("'field' and 'inputs' must be objects")
        if not isinstance(data["certificates"], list):
            raise MalformedInput("'certificates' must be an array")
        self.data = data
        self.field = create_field(data["field"])

    def resolve(self, ref: Any) -> Any:
        """
        解析 ``$inputs.points``、``$outputs.a.0.b`` 形式的引用
        """
        if not isinstance(ref, str) or not ref.startswith('$'):
            raise MalformedInput(f"bad reference {ref!r}")
        node: Any = self.data
        for part in ref[1:].split('.'):
            if isinstance(node, Mapping) and part in node:
                node = node[part]
            elif isinstance(node, list) and part.isdigit() and int(part) < len(node):
                node = node[int(part)]
            else:
                raise MalformedInput(f"unresolved reference {ref}")
        return node

    def points(self, refs: Any) -> list[RawVector]:
        """
        引用或引用列表指向的点，依次拼接
        """
        refs = refs if isinstance(refs, list) else [refs]
        points = []
        for ref in refs:
            rows = self.resolve(ref)
            # 单个点
            if isinstance(rows, list) and rows and not isinstance(rows[0], list):
                rows = [rows]
            points.extend(decode_rows(self.field, rows, str(ref)))
        return points

    def value(self, data: Any) -> Any:
        """
        引用解析为其指向的值，其余原样返回
        """
        if isinstance(data, str) and data.startswith('$'):
            return self.resolve(data)
        return data

    def polys(self, ref: Any) -> list[HomogPoly]:
        node = self.resolve(ref)
        nodes = node if isinstance(node, list) else [node]
        return [decode_poly(self.field, n, f"{ref}[{i}]") for i, n in enumerate(nodes)]

    def check_digest(self) -> None:
        inputs = self.data["inputs"]
        points = inputs.get("points", [])
        if digest({"field": self.field.to_dict(), "points": points}) != inputs.get("digest"):
            raise VerificationFailed("inputs", "digest does not match the input points")

    def check(self, certificate: Any) -> None:
        """
        :raise VerificationFailed: 证书不成立
        :raise MalformedInput: 证书结构不正确
        """
        if not isinstance(certificate, Mapping) or not isinstance(certificate.get("name"), str):
            raise MalformedInput("a certificate needs a 'name'")
        name: str = certificate["name"]
        logger.debug("verifying %s (%s)", name, certificate.get("kind"))
        match certificate.get("kind"):
            case "gale_dual":
                self._check_gale_dual(name, certificate)
            case "transport":
                self._check_transport(name, certificate)
            case "vanishing":
                self._check_vanishing(name, certificate)
            case "evaluation":
                self._check_evaluation(name, certificate)
            case "system_dimension":
                self._check_system_dimension(name, certificate)
            case "family_dimension":
                self._check_family_dimension(name, certificate)
            case "distinct_systems":
                self._check_distinct_systems(name, certificate)
            case kind:
                raise VerificationFailed(name, f"unknown certificate kind {kind!r}")

    def _config(self, name: str, points: list[RawVector]) -> PointConfig:
        if not points:
            raise VerificationFailed(name, "no points")
        return PointConfig.from_rows(self.field, points)

    def _vector(self, name: str, data: Any) -> RawVector:
        if not isinstance(data, list) or any(not isinstance(x, str) for x in data):
            raise MalformedInput(f"{name}: D must be an array of strings")
        return tuple(self.field.parse_raw(x) for x in data)

    def _check_gale_dual(self, name: str, certificate: Mapping[str, Any]) -> None:
        a = self._config(name, self.points(certificate.get("A")))
        b = self._config(name, self.points(certificate.get("B")))
        d = self._vector(name, certificate.get("D"))
        if a.count != b.count or len(d) != a.count:
            raise VerificationFailed(name, "point counts differ")
        if a.dim + b.dim + 2 != a.count:
            raise VerificationFailed(name, "r + s + 2 differs from the point count")
        if not (is_nondegenerate(a) and is_nondegenerate(b)):
            raise VerificationFailed(name, "a configuration is degenerate")
        if not DualCertificate(d, a.matrix, b.matrix).verify():
            raise VerificationFailed(name, "B^T diag(D) A is not zero")

    def _check_transport(self, name: str, certificate: Mapping[str, Any]) -> None:
        src = self.points(certificate.get("src"))
        dst = self._config(name, self.points(certificate.get("dst")))
        degree = certificate.get("veronese_degree")
        if degree is not None:
            if not isinstance(degree, int) or degree < 1 or not src:
                raise MalformedInput(f"{name}: bad veronese_degree")
            src = list(evaluation_matrix(self.field, degree, src, len(src[0])).data)
        source = self._config(name, src)
        matrix = decode_matrix(self.field, self.value(certificate.get("M")), f"{name}.M")
        if (matrix.rows, matrix.cols) != (dst.dim + 1, source.dim + 1) or source.count != dst.count:
            raise VerificationFailed(name, "shapes do not match")
        for p, q in zip(source.points, dst.points):
            image = matrix.apply(p)
            if all(x == 0 for x in image) or not same_point(self.field, image, q):
                raise VerificationFailed(name, "M does not carry src to dst")
        if "dimension" in certificate:
            try:
                dimension = projective_transport(source, dst).dimension
            except NoTransport:
                dimension = 0
            except DimensionMismatch:
                raise VerificationFailed(name, "shapes do not match") from None
            if dimension != self.value(certificate["dimension"]):
                raise VerificationFailed(name, f"solution space has dimension {dimension}")

    def _check_vanishing(self, name: str, certificate: Mapping[str, Any]) -> None:
        multiplicity = certificate.get("multiplicity", 1)
        if not isinstance(multiplicity, int) or multiplicity < 1:
            raise MalformedInput(f"{name}: bad multiplicity")
        points = self.points(certificate.get("points"))
        for f in self.polys(certificate.get("polys")):
            if f.is_zero():
                raise VerificationFailed(name, "zero polynomial")
            if any(len(p) != f.n_vars for p in points):
                raise VerificationFailed(name, "point and polynomial dimensions differ")
            conditions = vanishing_conditions(
                self.field, f.degree, (BasePointSpec(p, multiplicity) for p in points), f.n_vars
            )
            if any(x != 0 for x in conditions.apply(f.coeffs)):
                raise VerificationFailed(name, "polynomial does not vanish to the stated order")

    def _check_evaluation(self, name: str, certificate: Mapping[str, Any]) -> None:
        points = self.points(certificate.get("points"))
        images = self.points(certificate.get("images"))
        if len(points) != len(images):
            raise VerificationFailed(name, "point counts differ")
        if "polys" in certificate:
            polys = self.polys(certificate["polys"])
            values = [tuple(evaluate(q, p) for q in polys) for p in points]
        else:
            degree = certificate.get("degree")
            if not isinstance(degree, int) or degree < 0:
                raise MalformedInput(f"{name}: needs 'polys' or 'degree'")
            values = list(evaluation_matrix(self.field, degree, points, len(points[0])).data)
        for value, image in zip(values, images):
            if all(x == 0 for x in value) or not same_point(self.field, value, image):
                raise VerificationFailed(name, "image differs from the evaluation")

    def _check_system_dimension(self, name: str, certificate: Mapping[str, Any]) -> None:
        points = self.points(certificate.get("points"))
        multiplicities = self.value(certificate.get("multiplicities"))
        degree = self.value(certificate.get("degree"))
        if not isinstance(multiplicities, list) or len(multiplicities) != len(points) or not isinstance(degree, int):
            raise MalformedInput(f"{name}: bad degree or multiplicities")
        base = [BasePointSpec(p, m) for p, m in zip(points, multiplicities)]
        dimension = vanishing_system(self.field, degree, base, len(points[0])).dim
        if dimension != self.value(certificate.get("dimension")):
            raise VerificationFailed(name, f"linear system has dimension {dimension}")

    def _check_family_dimension(self, name: str, certificate: Mapping[str, Any]) -> None:
        degree = self.value(certificate.get("degree"))
        if not isinstance(degree, int):
            raise MalformedInput(f"{name}: bad degree")
        try:
            dimension = family_dim(degree)
        except DimensionMismatch:
            raise VerificationFailed(name, "no family for this degree") from None
        if dimension != self.value(certificate.get("dimension")):
            raise VerificationFailed(name, f"family has dimension {dimension}")

    def _check_distinct_systems(self, name: str, certificate: Mapping[str, Any]) -> None:
        refs = certificate.get("systems")
        if not isinstance(refs, list) or len(refs) < 2:
            raise MalformedInput(f"{name}: needs at least two systems")
        spans = []
        for ref in refs:
            polys = self.polys(ref)
            if len({(f.n_vars, f.degree) for f in polys}) != 1:
                raise VerificationFailed(name, "a system mixes degrees")
            spans.append(span(self.field, len(polys[0].coeffs), (f.coeffs for f in polys)))
        for i, first in enumerate(spans):
            for second in spans[i + 1:]:
                if first.ambient_dim == second.ambient_dim and first.same_as(second):
                    raise VerificationFailed(name, "two systems coincide")

    def run(self) -> list[str]:
        """
        :return: 已通过的证书名
        :rtype: list[str]

        :raise VerificationFailed: 第一个未通过的证书
        """
        if self.data["status"] != "ok":
            raise VerificationFailed("status", f"report status is {self.data['status']!r}")
        self.check_digest()
        passed = []
        for certificate in self.data["certificates"]:
            self.check(certificate)
            passed.append(certificate["name"])
        return passed


def verify_report(data: Any) -> list[str]:
    """
    复核报告

    :raise VerificationFailed: 证书未通过
    """
    return ReportVerifier(data).run()


__all__ = (
    "INPUTS_REF",

    "VerificationFailed",

    "output_ref",
    "encode_vector",
    "encode_points",
    "encode_poly",
    "decode_poly",
    "decode_matrix",

    "gale_dual_certificate",
    "transport_certificate",
    "vanishing_certificate",
    "evaluation_certificate",
    "system_dimension_certificate",
    "family_dimension_certificate",
    "distinct_systems_certificate",

    "inputs_section",
    "Report",
    "ReportVerifier",
    "verify_report",
)
