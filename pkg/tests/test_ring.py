from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles as o
from conftest import SMALL_RINGS, ring_strategy
from ringlab import FiniteRing, LeftIdeal, left_ideal_generated_by, validate_ring
from ringlab.catalog import builtin_ring, make_zn
from ringlab.errors import (
    NoUnity,
    NonUnitalUnsupported,
    NotAGroup,
    NotAssociative,
    NotDistributive,
    TableShapeError,
)
from ringlab.ring import (
    add,
    closure,
    ideal_generated_by,
    is_two_sided,
    mul,
    neg,
    pow,
    right_ideal_generated_by,
)

E = o.full_index


def test_matrix_units_multiply_like_matrices(m2z2):
    assert mul(m2z2, E(o.E12), E(o.E21)) == E(o.E11)
    assert mul(m2z2, E(o.E21), E(o.E12)) == E(o.E22)
    assert mul(m2z2, E(o.E12), E(o.E12)) == 0
    assert m2z2.one == E((1, 0, 0, 1))


def test_m2z2_tables_agree_with_matrix_oracle(m2z2):
    for x, y in product(product(range(2), repeat=4), repeat=2):
        assert m2z2.mul(E(x), E(y)) == E(o.mat_mul(x, y))
        assert m2z2.add(E(x), E(y)) == E(o.mat_add(x, y))


def test_zn_arithmetic():
    z = make_zn(12)
    assert add(z, 7, 8) == 3
    assert mul(z, 5, 7) == 11
    assert neg(z, 5) == 7
    assert z.sub(3, 5) == 10
    assert pow(z, 2, 3) == 8
    assert pow(z, 6, 2) == 0


def test_pow_rejects_nonpositive_exponent():
    with pytest.raises(ValueError):
        make_zn(4).pow(2, 0)


def test_upper_triangular_left_ideal_of_e12(u2z2):
    e12 = o.upper_index(o.E12)
    ideal = left_ideal_generated_by(u2z2, [e12])
    assert isinstance(ideal, LeftIdeal)
    assert ideal.members == (0, e12)
    assert e12 in ideal and len(ideal) == 2


def test_left_ideal_of_idempotent_is_not_two_sided(m2z2):
    ideal = left_ideal_generated_by(m2z2, [E(o.E11)])
    # R e11 = first column matrices
    assert set(ideal.members) == {E((a, 0, c, 0)) for a in range(2) for c in range(2)}
    assert not is_two_sided(m2z2, ideal.members)
    assert ideal_generated_by(m2z2, [E(o.E11)]) == frozenset(range(16))


def test_right_ideal_is_first_row(m2z2):
    ideal = right_ideal_generated_by(m2z2, [E(o.E11)])
    assert set(ideal.members) == {E((a, b, 0, 0)) for a in range(2) for b in range(2)}


def test_validate_renumbers_additive_identity_to_zero():
    # Z3 with labels rotated so that the identity is element 2
    relabel = [2, 0, 1]
    inv = [relabel.index(i) for i in range(3)]
    add_t = [[relabel[(inv[a] + inv[b]) % 3] for b in range(3)] for a in range(3)]
    mul_t = [[relabel[(inv[a] * inv[b]) % 3] for b in range(3)] for a in range(3)]
    r = validate_ring(add_t, mul_t, name="rot")
    assert int(r.add_table[0, 0]) == 0
    assert all(r.add(0, a) == a for a in r.elements)
    assert r.one is not None


def test_validate_errors():
    z2_add = [[0, 1], [1, 0]]
    with pytest.raises(TableShapeError):
        validate_ring([[0, 1]], [[0, 0]])
    with pytest.raises(TableShapeError):
        validate_ring(z2_add, [[0, 0], [0, 2]])
    with pytest.raises(NotAGroup):
        validate_ring([[0, 1], [1, 1]], [[0, 0], [0, 1]])
    with pytest.raises(NotDistributive):
        validate_ring(z2_add, [[1, 1], [1, 1]])
    with pytest.raises(NoUnity):
        validate_ring(z2_add, [[0, 0], [0, 0]])
    zero_mul = validate_ring(z2_add, [[0, 0], [0, 0]], unital=False)
    assert not zero_mul.is_unital
    with pytest.raises(NonUnitalUnsupported):
        left_ideal_generated_by(zero_mul, [1])


def test_non_associative_product_rejected():
    # Z2 x Z2 with a bilinear but non-associative product
    add_t = o.klein_add()
    # basis u=1, v=2; u*u = v, everything else 0 except v*u = u
    table = {(1, 1): 2, (1, 2): 0, (2, 1): 1, (2, 2): 0}

    def bil(x, y):
        acc = 0
        for i in (1, 2):
            for j in (1, 2):
                if x & i and y & j:
                    acc ^= table[i, j]
        return acc

    mul_t = [[bil(x, y) for y in range(4)] for x in range(4)]
    with pytest.raises(NotAssociative):
        validate_ring(add_t, mul_t, unital=False)


def test_tables_are_read_only():
    z = make_zn(3)
    with pytest.raises(ValueError):
        z.mul_table[1, 1] = 0


@pytest.mark.parametrize("name", SMALL_RINGS + ["Z12", "SkewF4"])
def test_builtin_rings_satisfy_axioms_by_oracle(name):
    r = builtin_ring(name)
    assert o.is_ring(r.add_table.tolist(), r.mul_table.tolist())
    assert o.has_unity(r.mul_table.tolist())


@given(ring_strategy(), st.data())
def test_ring_axioms_on_random_triples(r, data):
    a, b, c = (data.draw(st.integers(0, r.order - 1)) for _ in range(3))
    assert r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))
    assert r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
    assert r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c))
    assert r.add(a, r.neg(a)) == 0
    assert r.mul(r.one, a) == a == r.mul(a, r.one)


@given(ring_strategy(), st.data())
def test_pow_law(r, data):
    a = data.draw(st.integers(0, r.order - 1))
    i, j = data.draw(st.integers(1, 5)), data.draw(st.integers(1, 5))
    assert r.mul(r.pow(a, i), r.pow(a, j)) == r.pow(a, i + j)


@given(ring_strategy(), st.data())
def test_left_ideal_closure_is_idempotent_and_closed(r, data):
    gens = data.draw(st.lists(st.integers(0, r.order - 1), max_size=3))
    ideal = left_ideal_generated_by(r, gens)
    again = left_ideal_generated_by(r, list(ideal.members))
    assert again.members == ideal.members
    members = set(ideal.members)
    assert set(gens) <= members and 0 in members
    for x in members:
        for s in r.elements:
            assert r.mul(s, x) in members
        for y in members:
            assert r.add(x, y) in members


@given(ring_strategy(["Z4", "Z6", "Z8", "Z9", "Z12", "Z2xZ4"]), st.data())
def test_commutative_left_ideals_are_two_sided(r, data):
    gens = data.draw(st.lists(st.integers(0, r.order - 1), max_size=2))
    assert is_two_sided(r, left_ideal_generated_by(r, gens).members)


def test_closure_of_nothing_is_zero_ideal():
    assert closure(make_zn(6), []) == frozenset({0})


def test_zero_ring_is_unital_with_one_equal_zero():
    r = validate_ring([[0]], [[0]], name="Z1")
    assert isinstance(r, FiniteRing)
    assert r.one == 0 and r.order == 1
    assert np.array_equal(r.mul_table, [[0]])
