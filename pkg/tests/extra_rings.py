"""The local commutative unital rings of order 8 that are not in the builtin corpus."""

from itertools import product

from ringlab.catalog import builtin_ring, direct_product, make_truncated_polynomial_ring, make_zn
from ringlab.ring import validate_ring


def _from_coordinates(moduli, mul, name):
    elems = list(product(*(range(m) for m in moduli)))
    index = {e: i for i, e in enumerate(elems)}
    add_t = [[index[tuple((a + b) % m for a, b, m in zip(x, y, moduli))] for y in elems] for x in elems]
    mul_t = [[index[mul(x, y)] for y in elems] for x in elems]
    return validate_ring(add_t, mul_t, name=name)


def _square_zero_pair(x, y):
    # Z2 + Z2 u + Z2 v with u, v, uv all zero products
    a, b, c = x
    d, e, f = y
    return a * d % 2, (a * e + b * d) % 2, (a * f + c * d) % 2


def _z4_ext(square):
    # Z4 + Z2 x with 2x = 0 and x^2 = square
    def mul(x, y):
        a, b = x
        c, d = y
        return (a * c + square * b * d) % 4, (a * d + b * c) % 2
    return mul


def order_eight_rings():
    return [
        make_truncated_polynomial_ring(make_zn(2), 3, name="Z2t3"),
        _from_coordinates((2, 2, 2), _square_zero_pair, "Z2uv"),
        _from_coordinates((4, 2), _z4_ext(0), "Z4x_x2"),
        _from_coordinates((4, 2), _z4_ext(2), "Z4x_x2m2"),
        direct_product(make_zn(2), builtin_ring("order4:Z2e"), name="Z2xZ2e"),
    ]
