# -*- coding: utf-8 -*-


from .exactla import Entry
from .exactla import Matrix
from .exactla import RrefResult
from .exactla import Subspace
from .exactla import augment
from .exactla import complement
from .exactla import dot
from .exactla import from_domain_matrix
from .exactla import identity
from .exactla import image
from .exactla import inverse
from .exactla import kernel
from .exactla import random_complement
from .exactla import random_invertible
from .exactla import rank
from .exactla import rref
from .exactla import solve
from .exactla import span
from .exactla import stack
from .exactla import to_domain_matrix
from .exactla import to_raw
from .factory import create_field
from .factory import parse_field_flag
from .intersection import DegenerateAfterRetries
from .intersection import ExcessDegreeTooHigh
from .intersection import INTERSECTION_SEED
from .intersection import InfiniteIntersection
from .intersection import KnownPointNotOnCurves
from .intersection import NonRationalExcess
from .intersection import NonReducedIntersection
from .intersection import plane_curve_intersection
from .polyspace import BasePointSpec
from .polyspace import Exponent
from .polyspace import HomogPoly
from .polyspace import MonomialBasis
from .polyspace import ZeroPoint
from .polyspace import divides
from .polyspace import enumerate_projective
from .polyspace import evaluate
from .polyspace import evaluate_element
from .polyspace import evaluation_matrix
from .polyspace import exponent_key
from .polyspace import gradient
from .polyspace import multiples_of
from .polyspace import multiplication_matrix
from .polyspace import multiply
from .polyspace import normalize_point
from .polyspace import partial
from .polyspace import polys_of
from .polyspace import same_point
from .polyspace import substitute_linear
from .polyspace import vanishing_conditions
from .polyspace import vanishing_system
from .scalars import DivisionByZero
from .scalars import FIELD_TYPES
from .scalars import FieldElement
from .scalars import FieldKind
from .scalars import FieldSpec
from .scalars import NotPrime
from .scalars import ParseError
from .scalars import PrimeField
from .scalars import RationalField
from .scalars import field_make
from .utils import DimensionMismatch
from .utils import FieldMismatch
from .utils import FieldNotFinite
from .utils import GaleGoppaError
from .utils import InputError
from .utils import MathematicalFailure
from .utils import PreconditionError
from .utils import Raw
from .utils import RawVector
from .utils import RetryBudgetExhausted
from .utils import SmallCharacteristic
from .utils import get_params
from .utils import make_rng
from .utils import require_characteristic

__all__ = (
    # 标量
    "FieldKind",
    "FieldSpec",
    "RationalField",
    "PrimeField",
    "FieldElement",
    "FIELD_TYPES",
    "field_make",
    "create_field",
    "parse_field_flag",

    # 线性代数
    "Entry",
    "Matrix",
    "RrefResult",
    "Subspace",
    "to_raw",
    "dot",
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

    # 多项式
    "Exponent",
    "MonomialBasis",
    "HomogPoly",
    "BasePointSpec",
    "exponent_key",
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
    "INTERSECTION_SEED",
    "plane_curve_intersection",

    # 错误
    "GaleGoppaError",
    "PreconditionError",
    "MathematicalFailure",
    "InputError",
    "DimensionMismatch",
    "FieldMismatch",
    "FieldNotFinite",
    "RetryBudgetExhausted",
    "SmallCharacteristic",
    "NotPrime",
    "DivisionByZero",
    "ParseError",
    "ZeroPoint",
    "NonReducedIntersection",
    "NonRationalExcess",
    "DegenerateAfterRetries",
    "InfiniteIntersection",
    "KnownPointNotOnCurves",
    "ExcessDegreeTooHigh",

    "Raw",
    "RawVector",
    "get_params",
    "make_rng",
    "require_characteristic",
)
