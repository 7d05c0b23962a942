"""Dense polynomials over a (possibly noncommutative) finite ring.

Coefficients are stored low-to-high; ``coeffs[i]`` is the coefficient of
``x**i``.  The indeterminate commutes with ring elements, so the product
coefficient of ``x**k`` is ``sum(a_i * b_(k-i))`` with the left factor's
coefficient kept on the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .errors import ParseError, RingMismatch, ZeroPolynomial
from .ring import FiniteRing


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Polynomial:
    ring: FiniteRing
    coeffs: tuple[int, ...]

    def __init__(self, ring: FiniteRing, coeffs: Iterable[int] = ()):
        coeffs = _normalize(coeffs)
        for c in coeffs:
            if not 0 <= c < ring.order:
                raise ValueError(f"coefficient {c} is not an element of {ring.name}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, ring: FiniteRing, c: int) -> "Polynomial":
        return cls(ring, (c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def constant_term(self) -> int:
        return self.coeff(0)

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ring.same_as(other.ring)

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        return poly_add(self, other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return scale_right(self, int(other))

    def __rmul__(self, other):
        return scale_left(int(other), self)

    def __neg__(self):
        return Polynomial(self.ring, (self.ring.neg(c) for c in self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.ring.name}, [{format_coeffs(self)}])"


def format_coeffs(f: Polynomial) -> str:
    return ",".join(str(c) for c in f.coeffs) if f.coeffs else "0"


def parse_poly(ring: FiniteRing, text: str) -> Polynomial:
    """Parse a literal like ``"2, 2"`` (meaning 2 + 2x)."""
    parts = [p.strip() for p in "".join(text.split()).split(",")]
    if not parts or any(p == "" for p in parts):
        raise ParseError(f"malformed polynomial literal {text!r}")
    try:
        coeffs = [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"malformed polynomial literal {text!r}") from exc
    bad = [c for c in coeffs if not 0 <= c < ring.order]
    if bad:
        raise ParseError(f"coefficient {bad[0]} out of range for ring of order {ring.order}")
    return Polynomial(ring, coeffs)


def _check_same(f: Polynomial, g: Polynomial) -> None:
    if not f.ring.same_as(g.ring):
        raise RingMismatch(f"{f.ring.name} vs {g.ring.name}")


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_same(f, g)
    r = f.ring
    n = max(len(f.coeffs), len(g.coeffs))
    return Polynomial(r, (r.add(f.coeff(i), g.coeff(i)) for i in range(n)))


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_same(f, g)
    r = f.ring
    if f.is_zero or g.is_zero:
        return Polynomial(r)
    M, A = r.mul_table, r.add_table
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = int(A[out[i + j], M[a, b]])
    return Polynomial(r, out)


def scale_left(a: int, f: Polynomial) -> Polynomial:
    return Polynomial(f.ring, (f.ring.mul(a, c) for c in f.coeffs))


def scale_right(f: Polynomial, a: int) -> Polynomial:
    return Polynomial(f.ring, (f.ring.mul(c, a) for c in f.coeffs))


def strip_constant(f: Polynomial) -> Polynomial:
    """Return ``(f - a0) / x``."""
    if f.is_zero:
        raise ZeroPolynomial("cannot strip the constant of the zero polynomial")
    return Polynomial(f.ring, f.coeffs[1:])


def shift(f: Polynomial, k: int = 1) -> Polynomial:
    """Multiply by ``x**k``."""
    if f.is_zero:
        return f
    return Polynomial(f.ring, (0,) * k + f.coeffs)


@dataclass(frozen=True)
class CoefficientWindow:
    """A polynomial viewed inside a fixed number of coefficient slots."""

    poly: Polynomial
    width: int

    def __post_init__(self):
        if self.width < len(self.poly.coeffs):
            raise ValueError(
                f"window width {self.width} is smaller than {len(self.poly.coeffs)} stored coefficients"
            )

    @classmethod
    def full(cls, f: Polynomial) -> "CoefficientWindow":
        if f.is_zero:
            raise ZeroPolynomial("the zero polynomial has no degree window")
        return cls(f, len(f.coeffs))


def reverse(window: CoefficientWindow) -> Polynomial:
    """``x**(width-1) * f(1/x)``: the padded coefficient list, reversed."""
    f = window.poly
    padded = f.coeffs + (0,) * (window.width - len(f.coeffs))
    return Polynomial(f.ring, padded[::-1])


def all_polynomials(ring: FiniteRing, max_degree: int, nonzero: bool = True):
    """Yield every polynomial of degree <= max_degree in lexicographic coefficient order."""
    for coeffs in product(range(ring.order), repeat=max_degree + 1):
        if nonzero and not any(coeffs):
            continue
        yield Polynomial(ring, coeffs)
