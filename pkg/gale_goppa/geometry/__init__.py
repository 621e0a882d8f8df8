# -*- coding: utf-8 -*-


from .gale_core import CertificateNotFound
from .gale_core import CertificateSearch
from .gale_core import CertificateStatus
from .gale_core import Degenerate
from .gale_core import DualCertificate
from .gale_core import NoTransport
from .gale_core import PointConfig
from .gale_core import TooFewPoints
from .gale_core import TransportNotUnique
from .gale_core import TransportResult
from .gale_core import ZeroRowInDual
from .gale_core import double_dual_check
from .gale_core import find_dual_certificate
from .gale_core import gale_transform
from .gale_core import is_gale_dual
from .gale_core import is_nondegenerate
from .gale_core import projective_transport
from .gale_core import require_certificate
from .plane_curves import CoincidentGalePoints
from .plane_curves import ExcessPair
from .plane_curves import FieldTooSmall
from .plane_curves import NotUnique
from .plane_curves import PENCIL_MIN_CHARACTERISTIC
from .plane_curves import PencilBase
from .plane_curves import PencilDimWrong
from .plane_curves import PencilNinth
from .plane_curves import RncParam
from .plane_curves import SystemDimWrong
from .plane_curves import conic_through_five
from .plane_curves import cubic_pencil_ninth
from .plane_curves import distinct_points
from .plane_curves import gen_cubic_pencil_base
from .plane_curves import gen_general_points
from .plane_curves import gen_seven_points_p3
from .plane_curves import rnc_eval
from .plane_curves import rnc_through
from .plane_curves import two_excess_points
from .surface_goppa import BlowupFactorization
from .surface_goppa import CiInstance
from .surface_goppa import CoincidentPoints
from .surface_goppa import ComplementRule
from .surface_goppa import GoppaDual
from .surface_goppa import NegativeDualDegree
from .surface_goppa import VeroneseCertificate
from .surface_goppa import WNotComplementary
from .surface_goppa import blowup_h0
from .surface_goppa import ci_goppa_dual
from .surface_goppa import dual_degree
from .surface_goppa import eight_points_p4
from .surface_goppa import family_dim
from .surface_goppa import gen_ci_instance
from .surface_goppa import kernel_is_multiples
from .surface_goppa import seven_points_p3
from .surface_goppa import veronese_from_ci33
from .elliptic import COBLE_MIN_CHARACTERISTIC
from .elliptic import CobleInstance
from .elliptic import CobleSetup
from .elliptic import CubicNotUnique
from .elliptic import CurvePoint
from .elliptic import DivisorClass
from .elliptic import EnumerationTooLarge
from .elliptic import LineOnCurve
from .elliptic import MIN_CHARACTERISTIC
from .elliptic import MIN_SEXTIC_SAMPLES
from .elliptic import NoSolution
from .elliptic import PartialTorsion
from .elliptic import PlaneCubic
from .elliptic import PointNotOnCurve
from .elliptic import QuadricSpaceWrong
from .elliptic import SampleTooSmall
from .elliptic import SexticCertificate
from .elliptic import SexticNotOnVeronese
from .elliptic import SingularCubic
from .elliptic import VeroneseResult
from .elliptic import abel_sum
from .elliptic import add
from .elliptic import check_smooth
from .elliptic import coble_four_veronese
from .elliptic import collinear
from .elliptic import enumerate_points
from .elliptic import factor_through_triple
from .elliptic import gen_coble_instance
from .elliptic import mul
from .elliptic import neg
from .elliptic import prepare_coble
from .elliptic import quintic_node_criterion
from .elliptic import representative_triple
from .elliptic import square_roots
from .elliptic import sub
from .elliptic import third_intersection
from .elliptic import two_sextics_veronese
from .elliptic import veronese_factorizations


__all__ = (
    # Gale 变换
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

    # 平面曲线
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

    # 曲面上的 Goppa 对偶
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

    # 平面三次曲线
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
