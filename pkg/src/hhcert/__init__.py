"""Exact certificates for Hermite-Hadamard-type inequalities between quadrature
and numerical differentiation functionals."""

from .functional import Functional, IntervalSpec, bv_transform, make, mass, mean_integral, reference
from .ordering import Certificate, ConvexWitness, CrossingProfile, Verdict, compare, crossing_profile
from .pwfun import PwFun

__all__ = [
    "Certificate",
    "ConvexWitness",
    "CrossingProfile",
    "Functional",
    "IntervalSpec",
    "PwFun",
    "Verdict",
    "bv_transform",
    "compare",
    "crossing_profile",
    "make",
    "mass",
    "mean_integral",
    "reference",
]
