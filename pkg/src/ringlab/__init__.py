"""Exact experiments with McCoy and Duo properties of finite rings."""

from .errors import RingLabError
from .ring import FiniteRing, LeftIdeal, left_ideal_generated_by, validate_ring
from .polynomial import Polynomial

__all__ = ["FiniteRing", "LeftIdeal", "Polynomial", "RingLabError", "left_ideal_generated_by", "validate_ring"]
__version__ = "0.1.0"
