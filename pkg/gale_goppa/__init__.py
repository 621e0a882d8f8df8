# -*- coding: utf-8 -*-


from . import algebra
from . import geometry

__all__ = (
    "algebra",
    "geometry",
)
