"""Quadratic forms, quaternion algebras and transfers in characteristic 2."""

from .brauer import BrauerClass, Decision, QuaternionSymbol, class_equal, e2, frobenius_map, split_test
from .fields import FiniteField, QuadraticExtension, RationalFunctionField
from .forms import BilinearForm, QuadraticForm, equivalent, is_hyperbolic, is_isotropic, pfister

__version__ = "0.1.0"

__all__ = [
    "BilinearForm",
    "BrauerClass",
    "Decision",
    "FiniteField",
    "QuadraticExtension",
    "QuadraticForm",
    "QuaternionSymbol",
    "RationalFunctionField",
    "class_equal",
    "e2",
    "equivalent",
    "frobenius_map",
    "is_hyperbolic",
    "is_isotropic",
    "pfister",
    "split_test",
]
