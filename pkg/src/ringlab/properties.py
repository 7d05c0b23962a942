"""Decision procedures for the ring properties appearing in the implication diagram.

Element-quantified properties (commutative, Duo, reduced, ...) are decided
exactly by exhaustive search.  Polynomial-quantified ones (McCoy,
Armendariz) are decided only up to a degree bound and reported as
``holds_up_to(m,n)``; a concrete failure at any bound is a genuine
counterexample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import OrderTooLarge
from .ring import FiniteRing, closure, left_ideal_generated_by, right_ideal_generated_by

MAX_TWO_PRIMAL_ORDER = 16


@dataclass(frozen=True)
class McCoyBound:
    m: int = 2
    n: int = 2

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("McCoy bounds must be >= 1")

    @classmethod
    def parse(cls, text: str) -> "McCoyBound":
        try:
            m, n = (int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"bound must look like 'm,n', got {text!r}") from None
        return cls(m, n)

    def __str__(self):
        return f"{self.m},{self.n}"


LINEAR = McCoyBound(1, 1)


@dataclass(frozen=True)
class Verdict:
    status: str  # holds | fails | holds_up_to | unsupported
    witness: tuple = ()
    bound: Optional[McCoyBound] = None
    reason: str = ""
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status in ("holds", "holds_up_to")

    @property
    def fails(self) -> bool:
        return self.status == "fails"

    def format(self) -> str:
        if self.status == "holds_up_to":
            word = f"holds_up_to({self.bound.m},{self.bound.n})"
        else:
            word = self.status
        parts = [word]
        if self.witness:
            parts.append("witness " + " ".join(_fmt_witness_item(w) for w in self.witness))
        if self.detail:
            parts.append(self.detail)
        if self.reason:
            parts.append(f"reason {self.reason}")
        return " ".join(parts)


def _fmt_witness_item(w) -> str:
    if isinstance(w, (tuple, list)):
        return "[" + ",".join(str(int(v)) for v in w) + "]"
    return str(int(w))


HOLDS = Verdict("holds")


def _fails(*witness, detail: str = "") -> Verdict:
    return Verdict("fails", tuple(witness), detail=detail)


def _unsupported(reason: str) -> Verdict:
    return Verdict("unsupported", reason=reason.replace(" ", "_"))


# element-quantified properties -----------------------------------------

def is_commutative(r: FiniteRing) -> Verdict:
    M = r.mul_table
    bad = np.argwhere(M != M.T)
    if len(bad):
        a, b = bad[0]
        return _fails(a, b)
    return HOLDS


def _principal_left(r: FiniteRing, a: int) -> np.ndarray:
    mask = np.zeros(r.order, dtype=bool)
    mask[list(left_ideal_generated_by(r, [a]))] = True
    return mask


def _principal_right(r: FiniteRing, a: int) -> np.ndarray:
    mask = np.zeros(r.order, dtype=bool)
    mask[list(right_ideal_generated_by(r, [a]))] = True
    return mask


def is_left_duo(r: FiniteRing) -> Verdict:
    """Every principal left ideal ``Ra`` is closed under right multiplication.

    In a unital ring every left ideal is a sum of principal ones, so this
    decides the property.  Witness ``(a, s)`` has ``a*s`` outside ``Ra``.
    """
    r.require_unital("left Duo check")
    for a in range(1, r.order):
        mask = _principal_left(r, a)
        out = ~mask[r.mul_table[a]]
        if out.any():
            return _fails(a, int(np.argmax(out)))
    return HOLDS


def is_right_duo(r: FiniteRing) -> Verdict:
    r.require_unital("right Duo check")
    for a in range(1, r.order):
        mask = _principal_right(r, a)
        out = ~mask[r.mul_table[:, a]]
        if out.any():
            return _fails(a, int(np.argmax(out)))
    return HOLDS


def is_duo(r: FiniteRing) -> Verdict:
    left = is_left_duo(r)
    if left.fails:
        return Verdict("fails", left.witness, detail="side=left")
    right = is_right_duo(r)
    if right.fails:
        return Verdict("fails", right.witness, detail="side=right")
    return HOLDS


def _triple_products(r: FiniteRing) -> np.ndarray:
    """T[a, b, c] = a*b*c."""
    M = r.mul_table
    return M[M[:, :, None], np.arange(r.order)[None, None, :]]


def is_semicommutative(r: FiniteRing) -> Verdict:
    """ab = 0 implies aRb = 0.  Witness (a, c, b) with ab = 0 but acb != 0."""
    M = r.mul_table
    T = _triple_products(r)  # T[a, c, b] = a c b
    zero_ab = M == 0
    bad = np.argwhere(zero_ab[:, None, :] & (T != 0))
    if len(bad):
        a, c, b = bad[0]
        return _fails(a, c, b)
    return HOLDS


def is_reversible(r: FiniteRing) -> Verdict:
    M = r.mul_table
    bad = np.argwhere((M == 0) & (M.T != 0))
    if len(bad):
        a, b = bad[0]
        return _fails(a, b)
    return HOLDS


_PERMS = ["abc", "acb", "bac", "bca", "cab", "cba"]


def is_symmetric(r: FiniteRing) -> Verdict:
    """abc = 0 implies acb = 0.

    A failure also lists every ordering of the witness triple whose
    product is nonzero.
    """
    T = _triple_products(r)
    acb = T.transpose(0, 2, 1)
    bad = np.argwhere((T == 0) & (acb != 0))
    if not len(bad):
        return HOLDS
    a, b, c = (int(v) for v in bad[0])
    vals = dict(a=a, b=b, c=c)
    nonzero = [p for p in _PERMS if r.mul_chain(*(vals[ch] for ch in p)) != 0]
    return _fails(a, b, c, detail="nonzero_orders " + ",".join(nonzero))


def is_reduced(r: FiniteRing) -> Verdict:
    sq = np.diagonal(r.mul_table)
    bad = np.flatnonzero((sq == 0) & (np.arange(r.order) != 0))
    if len(bad):
        return _fails(bad[0])
    return HOLDS


def idempotents(r: FiniteRing) -> list[int]:
    return [a for a in r.elements if r.mul(a, a) == a]


def is_abelian(r: FiniteRing) -> Verdict:
    M = r.mul_table
    for e in idempotents(r):
        bad = np.flatnonzero(M[e] != M[:, e])
        if len(bad):
            return _fails(e, bad[0])
    return HOLDS


def is_dedekind_finite(r: FiniteRing) -> Verdict:
    r.require_unital("Dedekind-finite check")
    M = r.mul_table
    bad = np.argwhere((M == r.one) & (M.T != r.one))
    if len(bad):
        a, b = bad[0]
        return _fails(a, b)
    return HOLDS


# 2-primal -------------------------------------------------------------

def two_sided_ideals(r: FiniteRing) -> list[frozenset]:
    """Every two-sided ideal, found by closing sums of principal ideals."""
    r.require_unital("ideal enumeration")
    seen = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for ideal in frontier:
            for x in r.elements:
                if x in ideal:
                    continue
                bigger = closure(r, list(ideal) + [x], left=True, right=True)
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def is_prime_ideal(r: FiniteRing, ideal: frozenset) -> bool:
    if len(ideal) == r.order:
        return False
    inside = np.zeros(r.order, dtype=bool)
    inside[list(ideal)] = True
    T = _triple_products(r)  # T[a, s, b] = a s b
    arb_inside = inside[T].all(axis=1)
    for a, b in np.argwhere(arb_inside):
        if not inside[a] and not inside[b]:
            return False
    return True


def prime_radical(r: FiniteRing) -> frozenset:
    primes = [I for I in two_sided_ideals(r) if is_prime_ideal(r, I)]
    out = frozenset(r.elements)
    for p in primes:
        out &= p
    return out


def nilpotents(r: FiniteRing) -> frozenset:
    return frozenset(a for a in r.elements if r.is_nilpotent(a))


def is_2_primal(r: FiniteRing) -> Verdict:
    r.require_unital("2-primal check")
    if r.order > MAX_TWO_PRIMAL_ORDER:
        raise OrderTooLarge(f"2-primal check is limited to order <= {MAX_TWO_PRIMAL_ORDER}")
    nil = nilpotents(r)
    rad = prime_radical(r)
    extra = sorted(nil - rad)
    if extra:
        return _fails(extra[0], detail="prime_radical " + ",".join(map(str, sorted(rad))))
    return HOLDS


# polynomial-quantified properties ---------------------------------------

def coefficient_grid(order: int, degree: int, nonzero: bool = True) -> np.ndarray:
    """All coefficient vectors of length degree+1, lexicographic, as an (N, degree+1) array."""
    grid = np.array(list(itertools.product(range(order), repeat=degree + 1)), dtype=np.int64)
    if nonzero:
        grid = grid[grid.any(axis=1)]
    return grid


def batch_products(r: FiniteRing, F: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Coefficients of f*g for every f in F and g in G: shape (len F, len G, degF+degG+1)."""
    A, M = r.add_table, r.mul_table
    mf, ng = F.shape[1], G.shape[1]
    out = np.zeros((F.shape[0], G.shape[0], mf + ng - 1), dtype=np.int64)
    for i in range(mf):
        for j in range(ng):
            out[:, :, i + j] = A[out[:, :, i + j], M[F[:, i][:, None], G[:, j][None, :]]]
    return out


def _chunks(n: int, per: int):
    for s in range(0, n, max(1, per)):
        yield slice(s, min(n, s + max(1, per)))


_CHUNK_CELLS = 1 << 21


def _has_right_annihilator(r: FiniteRing, F: np.ndarray) -> np.ndarray:
    """For each row f, does a nonzero r with f*r = 0 exist?"""
    M = r.mul_table
    kills = (M[F[:, :, None], np.arange(r.order)[None, None, :]] == 0).all(axis=1)
    return kills[:, 1:].any(axis=1)


def _has_left_annihilator(r: FiniteRing, G: np.ndarray) -> np.ndarray:
    M = r.mul_table
    kills = (M[np.arange(r.order)[None, None, :], G[:, :, None]] == 0).all(axis=1)
    return kills[:, 1:].any(axis=1)


def _first_zero_product(r: FiniteRing, F: np.ndarray, G: np.ndarray):
    """First (f, g) in row-major order with f*g = 0, or None."""
    per = max(1, _CHUNK_CELLS // max(1, G.shape[0]))
    for sl in _chunks(F.shape[0], per):
        zero = (batch_products(r, F[sl], G) == 0).all(axis=2)
        hits = np.argwhere(zero)
        if len(hits):
            i, j = hits[0]
            return F[sl][i], G[j]
    return None


def is_right_mccoy_up_to(r: FiniteRing, bound: McCoyBound = McCoyBound()) -> Verdict:
    """deg f <= m, deg g <= n, f g = 0, f, g nonzero  =>  f r = 0 for some nonzero r.

    Witness ``(f, g)`` as coefficient lists.
    """
    F = coefficient_grid(r.order, bound.m)
    G = coefficient_grid(r.order, bound.n)
    suspects = F[~_has_right_annihilator(r, F)]
    hit = _first_zero_product(r, suspects, G) if len(suspects) else None
    if hit is not None:
        return _fails(tuple(hit[0]), tuple(hit[1]), detail="side=right")
    return Verdict("holds_up_to", bound=bound)


def is_left_mccoy_up_to(r: FiniteRing, bound: McCoyBound = McCoyBound()) -> Verdict:
    """Mirror: f g = 0 with f, g nonzero  =>  s g = 0 for some nonzero s."""
    F = coefficient_grid(r.order, bound.m)
    G = coefficient_grid(r.order, bound.n)
    suspects = G[~_has_left_annihilator(r, G)]
    if len(suspects):
        hit = _first_zero_product(r, F, suspects)
        if hit is not None:
            return _fails(tuple(hit[0]), tuple(hit[1]), detail="side=left")
    return Verdict("holds_up_to", bound=bound)


def is_mccoy_up_to(r: FiniteRing, bound: McCoyBound = McCoyBound()) -> Verdict:
    right = is_right_mccoy_up_to(r, bound)
    if right.fails:
        return right
    left = is_left_mccoy_up_to(r, bound)
    if left.fails:
        return left
    return Verdict("holds_up_to", bound=bound)


def is_linearly_mccoy(r: FiniteRing) -> Verdict:
    return is_mccoy_up_to(r, LINEAR)


def is_right_linearly_mccoy(r: FiniteRing) -> Verdict:
    return is_right_mccoy_up_to(r, LINEAR)


def is_armendariz_up_to(r: FiniteRing, bound: McCoyBound = McCoyBound()) -> Verdict:
    """f g = 0 implies a_i b_j = 0 for every coefficient pair.  Witness ``(f, g)``."""
    F = coefficient_grid(r.order, bound.m)
    G = coefficient_grid(r.order, bound.n)
    M = r.mul_table
    per = max(1, _CHUNK_CELLS // max(1, G.shape[0]))
    for sl in _chunks(F.shape[0], per):
        Fc = F[sl]
        zero = (batch_products(r, Fc, G) == 0).all(axis=2)
        coeff_nonzero = np.zeros_like(zero)
        for i in range(Fc.shape[1]):
            for j in range(G.shape[1]):
                coeff_nonzero |= M[Fc[:, i][:, None], G[:, j][None, :]] != 0
        bad = np.argwhere(zero & coeff_nonzero)
        if len(bad):
            i, j = bad[0]
            return _fails(tuple(Fc[i]), tuple(G[j]))
    return Verdict("holds_up_to", bound=bound)


def is_linearly_armendariz(r: FiniteRing) -> Verdict:
    return is_armendariz_up_to(r, LINEAR)


# registry ---------------------------------------------------------------

@dataclass(frozen=True)
class PropertySpec:
    id: str
    label: str
    check: Callable
    bounded: bool = False


PROPERTIES: dict[str, PropertySpec] = {
    p.id: p
    for p in [
        PropertySpec("commutative", "comm.", is_commutative),
        PropertySpec("duo", "Duo", is_duo),
        PropertySpec("left_duo", "Left Duo", is_left_duo),
        PropertySpec("right_duo", "Right Duo", is_right_duo),
        PropertySpec("semicommutative", "s.c.", is_semicommutative),
        PropertySpec("2_primal", "2-primal", is_2_primal),
        PropertySpec("symmetric", "symm.", is_symmetric),
        PropertySpec("reversible", "rev.", is_reversible),
        PropertySpec("abelian", "Abelian", is_abelian),
        PropertySpec("dedekind_finite", "D. Finite", is_dedekind_finite),
        PropertySpec("reduced", "red.", is_reduced),
        PropertySpec("armendariz", "Arm.", is_armendariz_up_to, bounded=True),
        PropertySpec("mccoy", "McCoy", is_mccoy_up_to, bounded=True),
        PropertySpec("right_mccoy", "Right McCoy", is_right_mccoy_up_to, bounded=True),
        PropertySpec("left_mccoy", "Left McCoy", is_left_mccoy_up_to, bounded=True),
        PropertySpec("linearly_armendariz", "lin. arm.", is_linearly_armendariz),
        PropertySpec("linearly_mccoy", "lin. McCoy", is_linearly_mccoy),
        PropertySpec("right_linearly_mccoy", "right lin. McCoy", is_right_linearly_mccoy),
    ]
}


def evaluate(r: FiniteRing, prop: str, bound: McCoyBound = McCoyBound()) -> Verdict:
    spec = PROPERTIES[prop]
    try:
        return spec.check(r, bound) if spec.bounded else spec.check(r)
    except OrderTooLarge as exc:
        return _unsupported(str(exc))


@dataclass
class PropertyReport:
    ring: str
    verdicts: dict[str, Verdict] = field(default_factory=dict)

    def lines(self) -> list[str]:
        return [f"ring {self.ring} property {pid} verdict {v.format()}" for pid, v in self.verdicts.items()]

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def check_ring(r: FiniteRing, props=None, bound: McCoyBound = McCoyBound()) -> PropertyReport:
    props = list(PROPERTIES) if props is None else list(props)
    report = PropertyReport(r.name)
    for pid in props:
        report.verdicts[pid] = evaluate(r, pid, bound)
    return report


# witness re-checking ------------------------------------------------------

def _poly_product_zero(r: FiniteRing, f, g) -> bool:
    return not batch_products(r, np.array([f]), np.array([g])).any()


def recheck_witness(r: FiniteRing, prop: str, verdict: Verdict) -> bool:
    """Confirm a ``fails`` witness by direct arithmetic, without any search."""
    w = verdict.witness
    M = r.mul_table
    if prop == "commutative":
        a, b = w
        return M[a, b] != M[b, a]
    if prop in ("left_duo", "right_duo", "duo"):
        a, s = w
        side = "right" if prop == "right_duo" or verdict.detail == "side=right" else "left"
        if side == "left":
            return not _principal_left(r, a)[M[a, s]]
        return not _principal_right(r, a)[M[s, a]]
    if prop == "semicommutative":
        a, c, b = w
        return M[a, b] == 0 and r.mul_chain(a, c, b) != 0
    if prop == "reversible":
        a, b = w
        return M[a, b] == 0 and M[b, a] != 0
    if prop == "symmetric":
        a, b, c = w
        return r.mul_chain(a, b, c) == 0 and r.mul_chain(a, c, b) != 0
    if prop == "reduced":
        (a,) = w
        return a != 0 and M[a, a] == 0
    if prop == "abelian":
        e, x = w
        return M[e, e] == e and M[e, x] != M[x, e]
    if prop == "dedekind_finite":
        a, b = w
        return M[a, b] == r.one and M[b, a] != r.one
    if prop == "2_primal":
        (a,) = w
        return r.is_nilpotent(a) and a not in prime_radical(r)
    if prop in ("armendariz", "linearly_armendariz"):
        f, g = w
        return _poly_product_zero(r, f, g) and any(M[a, b] for a in f for b in g)
    if prop in ("mccoy", "right_mccoy", "left_mccoy", "linearly_mccoy", "right_linearly_mccoy"):
        f, g = w
        if not (_poly_product_zero(r, f, g) and any(f) and any(g)):
            return False
        if verdict.detail == "side=left":
            return not any(all(M[s, b] == 0 for b in g) for s in range(1, r.order))
        return not any(all(M[a, s] == 0 for a in f) for s in range(1, r.order))
    raise KeyError(prop)
