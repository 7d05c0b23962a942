from itertools import product

import pytest
from hypothesis import given, strategies as st

import oracles as o
from ringlab.catalog import builtin_ring, enumerate_unital_rings, make_zn
from ringlab.properties import (
    LINEAR,
    PROPERTIES,
    McCoyBound,
    Verdict,
    check_ring,
    evaluate,
    is_2_primal,
    is_armendariz_up_to,
    is_commutative,
    is_duo,
    is_left_duo,
    is_mccoy_up_to,
    is_right_duo,
    is_right_mccoy_up_to,
    is_semicommutative,
    nilpotents,
    prime_radical,
    recheck_witness,
    two_sided_ideals,
)

NAMES = ["Z2", "Z4", "Z6", "Z8", "Z9", "Z12", "Z2xZ2", "Z2xZ4", "U2Z2", "M2Z2", "SkewF4",
         "order4:Z2e", "order4:F4"]
ELEMENT_PROPS = ["commutative", "left_duo", "right_duo", "duo", "semicommutative", "reversible",
                 "symmetric", "reduced", "abelian", "dedekind_finite"]


def element_oracle(r, prop):
    M = r.mul_table.tolist()
    R = range(r.order)
    left = [{M[s][a] for s in R} for a in R]
    right = [{M[a][s] for s in R} for a in R]
    if prop == "commutative":
        return all(M[a][b] == M[b][a] for a, b in product(R, R))
    if prop == "left_duo":
        return all(right[a] <= left[a] for a in R)
    if prop == "right_duo":
        return all(left[a] <= right[a] for a in R)
    if prop == "duo":
        return all(right[a] == left[a] for a in R)
    if prop == "semicommutative":
        return all(M[M[a][c]][b] == 0 for a, b, c in product(R, R, R) if M[a][b] == 0)
    if prop == "reversible":
        return all(M[b][a] == 0 for a, b in product(R, R) if M[a][b] == 0)
    if prop == "symmetric":
        return all(M[M[a][c]][b] == 0 for a, b, c in product(R, R, R) if M[M[a][b]][c] == 0)
    if prop == "reduced":
        return all(M[a][a] != 0 for a in R if a)
    if prop == "abelian":
        idem = [e for e in R if M[e][e] == e]
        return all(M[e][a] == M[a][e] for e in idem for a in R)
    if prop == "dedekind_finite":
        one = r.one
        return all(M[b][a] == one for a, b in product(R, R) if M[a][b] == one)
    raise KeyError(prop)


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("prop", ELEMENT_PROPS)
def test_element_properties_match_oracle(name, prop):
    r = builtin_ring(name)
    verdict = evaluate(r, prop)
    assert verdict.holds == element_oracle(r, prop)
    if verdict.fails:
        assert recheck_witness(r, prop, verdict)


def right_mccoy_oracle(r, m, n):
    """Every zero product f g (deg f <= m, deg g <= n, both nonzero) has a nonzero constant c with f c = 0."""
    M = r.mul_table.tolist()
    A = r.add_table.tolist()
    ann = {}
    for f in product(range(r.order), repeat=m + 1):
        if not any(f):
            continue
        for g in product(range(r.order), repeat=n + 1):
            if not any(g):
                continue
            if o.naive_poly_mul(list(f), list(g), lambda a, b: M[a][b], lambda a, b: A[a][b]):
                continue
            if f not in ann:
                ann[f] = any(all(M[a][c] == 0 for a in f) for c in range(1, r.order))
            if not ann[f]:
                return False
    return True


@pytest.mark.parametrize("name", ["Z4", "Z6", "Z8", "Z2xZ2", "U2Z2", "order4:Z2e"])
def test_linear_right_mccoy_matches_oracle(name):
    r = builtin_ring(name)
    assert is_right_mccoy_up_to(r, LINEAR).holds == right_mccoy_oracle(r, 1, 1)


def test_upper_triangular_is_not_right_mccoy():
    r = builtin_ring("U2Z2")
    v = is_right_mccoy_up_to(r, LINEAR)
    assert v.fails and recheck_witness(r, "right_mccoy", v)
    assert not right_mccoy_oracle(r, 1, 1)


def test_z4_is_armendariz_at_small_bound():
    r = make_zn(4)
    # every zero product of linear polynomials over Z4 has pairwise zero coefficient products
    for f in product(range(4), repeat=2):
        for g in product(range(4), repeat=2):
            if not o.mod_poly_mul(list(f), list(g), 4):
                assert all(a * b % 4 == 0 for a in f for b in g)
    assert is_armendariz_up_to(r, LINEAR).holds


def test_m2z2_counterexamples():
    r = builtin_ring("M2Z2")
    e11, e12, e21 = (o.full_index(x) for x in (o.E11, o.E12, o.E21))
    c = is_commutative(r)
    assert c.fails and recheck_witness(r, "commutative", c)
    assert recheck_witness(r, "commutative", Verdict("fails", (e12, e21)))
    sc = is_semicommutative(r)
    assert sc.fails and recheck_witness(r, "semicommutative", sc)
    # a b = 0 but a c b != 0 for a = b = e12, c = e21
    assert recheck_witness(r, "semicommutative", Verdict("fails", (e12, e21, e12)))
    assert r.mul_chain(e12, e21, e12) == e12
    assert is_duo(r).fails and is_mccoy_up_to(r, LINEAR).fails
    assert is_2_primal(r).fails
    assert e11 not in nilpotents(r)


@pytest.mark.parametrize("name", ["Z4", "Z8", "Z12", "Z2xZ4", "U2Z2", "order4:Z2e"])
def test_prime_radical_matches_subset_oracle(name):
    r = builtin_ring(name)
    add, mul = r.add_table.tolist(), r.mul_table.tolist()
    assert set(two_sided_ideals(r)) == set(o.two_sided_ideals_by_subsets(add, mul))
    assert prime_radical(r) == o.prime_radical_by_subsets(add, mul)


def test_zn_prime_radicals():
    assert prime_radical(make_zn(4)) == {0, 2}
    assert prime_radical(make_zn(12)) == {0, 6}
    assert prime_radical(make_zn(6)) == {0}
    assert is_2_primal(make_zn(9)).holds


def test_two_primal_refuses_large_rings():
    from ringlab.catalog import make_matrix_ring
    big = make_matrix_ring(make_zn(3))
    v = evaluate(big, "2_primal")
    assert v.status == "unsupported" and "order" in v.reason


def test_duo_sides():
    r = builtin_ring("U2Z2")
    left, right = is_left_duo(r), is_right_duo(r)
    assert left.fails and right.fails
    assert recheck_witness(r, "left_duo", left) and recheck_witness(r, "right_duo", right)


@pytest.mark.parametrize("name", ["Z4", "Z8", "U2Z2", "SkewF4"])
def test_bound_monotonicity(name):
    # a failure at a bound persists at any larger bound
    r = builtin_ring(name)
    small = is_mccoy_up_to(r, LINEAR)
    larger = is_mccoy_up_to(r, McCoyBound(1, 2))
    if small.fails:
        assert larger.fails
    if larger.holds:
        assert small.holds


def test_bounded_verdict_format():
    v = is_mccoy_up_to(make_zn(4), McCoyBound(2, 1))
    assert v.status == "holds_up_to" and v.format() == "holds_up_to(2,1)"


def test_mccoy_bound_parse():
    assert McCoyBound.parse("3,2") == McCoyBound(3, 2)
    assert str(McCoyBound(3, 2)) == "3,2"
    for bad in ["3", "0,1", "a,b", "1,2,3"]:
        with pytest.raises(ValueError):
            McCoyBound.parse(bad)


def test_report_lines():
    rep = check_ring(make_zn(4), ["commutative", "reduced", "mccoy"], LINEAR)
    assert rep.lines() == [
        "ring Z4 property commutative verdict holds",
        "ring Z4 property reduced verdict fails witness 2",
        "ring Z4 property mccoy verdict holds_up_to(1,1)",
    ]


def test_every_registered_property_evaluates():
    r = builtin_ring("order4:Z2e")
    rep = check_ring(r, bound=LINEAR)
    assert set(rep.verdicts) == set(PROPERTIES)
    assert all(v.status in ("holds", "holds_up_to", "fails") for v in rep.verdicts.values())


@given(st.sampled_from(["Z4", "Z8", "U2Z2", "M2Z2", "order4:Z2e"]), st.sampled_from(list(PROPERTIES)))
def test_failure_witnesses_are_sound(name, prop):
    r = builtin_ring(name)
    v = evaluate(r, prop, LINEAR)
    if v.fails and v.witness:
        assert recheck_witness(r, prop, v)


def test_reduced_verdicts_on_order_four():
    reduced = {r.name: evaluate(r, "reduced").holds for r in enumerate_unital_rings(4)}
    assert reduced == {"order4:Z4": False, "order4:Z2e": False, "order4:Z2xZ2": True, "order4:F4": True}
