"""Finite rings given by explicit addition and multiplication tables.

Elements are plain integers ``0 .. order-1``; element 0 is always the
additive identity.  A :class:`FiniteRing` is built through
:func:`validate_ring`, which checks every ring axiom exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    NoUnity,
    NonUnitalUnsupported,
    NotAGroup,
    NotAssociative,
    NotDistributive,
    TableShapeError,
)


class FiniteRing:
    """An immutable, validated finite ring.

    Do not call the constructor directly; use :func:`validate_ring`, which
    renumbers elements so that 0 is the additive identity and discovers
    the unity.
    """

    __slots__ = ("order", "add_table", "mul_table", "neg_table", "one", "name", "__weakref__")

    zero = 0

    def __init__(self, add_table, mul_table, one, name):
        add_table = np.array(add_table, dtype=np.int64)
        mul_table = np.array(mul_table, dtype=np.int64)
        neg_table = np.argmin(add_table, axis=1)
        for arr in (add_table, mul_table, neg_table):
            arr.setflags(write=False)
        self.order = int(add_table.shape[0])
        self.add_table = add_table
        self.mul_table = mul_table
        self.neg_table = neg_table
        self.one = one
        self.name = name

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"

    def __len__(self):
        return self.order

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_unital(self) -> bool:
        return self.one is not None

    def same_as(self, other: "FiniteRing") -> bool:
        """Structural equality of the underlying tables (names ignored)."""
        return self is other or (
            self.order == other.order
            and np.array_equal(self.add_table, other.add_table)
            and np.array_equal(self.mul_table, other.mul_table)
        )

    def require_unital(self, what: str = "this operation") -> None:
        if self.one is None:
            raise NonUnitalUnsupported(f"{what} requires a unital ring; {self.name} has no unity")

    # arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def pow(self, a: int, e: int) -> int:
        if e < 1:
            raise ValueError("exponent must be >= 1")
        out = a
        for _ in range(e - 1):
            out = int(self.mul_table[out, a])
        return out

    def mul_chain(self, *xs: int) -> int:
        out = xs[0]
        for x in xs[1:]:
            out = int(self.mul_table[out, x])
        return out

    def is_nilpotent(self, a: int) -> bool:
        x = a
        for _ in range(self.order):
            if x == 0:
                return True
            x = int(self.mul_table[x, a])
        return x == 0

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul_table, self.mul_table.T))


# convenience wrappers mirroring the method names -----------------------

def add(r: FiniteRing, a: int, b: int) -> int:
    return r.add(a, b)


def mul(r: FiniteRing, a: int, b: int) -> int:
    return r.mul(a, b)


def neg(r: FiniteRing, a: int) -> int:
    return r.neg(a)


def pow(r: FiniteRing, a: int, e: int) -> int:  # noqa: A001 - mirrors ring vocabulary
    return r.pow(a, e)


# validation -----------------------------------------------------------

def _as_table(raw, name: str) -> np.ndarray:
    try:
        arr = np.array(raw, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise TableShapeError(f"{name} table is not an integer array") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise TableShapeError(f"{name} table must be a non-empty k x k array, got shape {arr.shape}")
    return arr


def _relabel(table: np.ndarray, perm: np.ndarray) -> np.ndarray:
    # perm[old] = new
    k = table.shape[0]
    inv = np.empty(k, dtype=np.int64)
    inv[perm] = np.arange(k)
    return perm[table[np.ix_(inv, inv)]]


def _associative(t: np.ndarray) -> bool:
    k = t.shape[0]
    idx = np.arange(k)
    lhs = t[t, :]  # lhs[a, b, c] = (a*b)*c
    rhs = t[idx[:, None, None], t[None, :, :]]  # rhs[a, b, c] = a*(b*c)
    return bool(np.array_equal(lhs, rhs))


def validate_ring(add_table, mul_table, unital: bool = True, name: str = "R") -> FiniteRing:
    """Check the ring axioms on raw tables and return a :class:`FiniteRing`.

    Elements are renumbered (by swapping) if the additive identity is not
    already element 0.  When ``unital`` is true the two-sided identity is
    located, and :class:`NoUnity` raised if there is none; when false the
    ring is treated as non-unital even if an identity happens to exist.
    """
    A = _as_table(add_table, "addition")
    M = _as_table(mul_table, "multiplication")
    k = A.shape[0]
    if M.shape != A.shape:
        raise TableShapeError(f"table shapes differ: {A.shape} vs {M.shape}")
    for arr, label in ((A, "addition"), (M, "multiplication")):
        if arr.min() < 0 or arr.max() >= k:
            raise TableShapeError(f"{label} table has entries outside [0, {k})")

    idx = np.arange(k)
    ids = [e for e in range(k) if np.array_equal(A[e], idx) and np.array_equal(A[:, e], idx)]
    if not ids:
        raise NotAGroup("addition has no identity element")
    e = ids[0]
    if e != 0:
        perm = idx.copy()
        perm[0], perm[e] = e, 0
        A = _relabel(A, perm)
        M = _relabel(M, perm)

    if not np.array_equal(A, A.T):
        raise NotAGroup("addition is not commutative")
    if not _associative(A):
        raise NotAGroup("addition is not associative")
    if not all((A[a] == 0).any() for a in range(k)):
        raise NotAGroup("some element has no additive inverse")

    if not _associative(M):
        raise NotAssociative("multiplication is not associative")
    # a*(b+c) == a*b + a*c  and  (b+c)*a == b*a + c*a
    left = M[idx[:, None, None], A[None, :, :]]
    left_rhs = A[M[:, :, None], M[:, None, :]]
    if not np.array_equal(left, left_rhs):
        raise NotDistributive("multiplication does not distribute from the left")
    right = M[A[:, :, None], idx[None, None, :]]
    # right_rhs[b, c, a] = b*a + c*a
    right_rhs = A[M[:, None, :], M[None, :, :]]
    if not np.array_equal(right, right_rhs):
        raise NotDistributive("multiplication does not distribute from the right")
    if (M[0] != 0).any() or (M[:, 0] != 0).any():
        raise NotDistributive("zero does not annihilate")

    one = None
    if unital:
        for u in range(k):
            if np.array_equal(M[u], idx) and np.array_equal(M[:, u], idx):
                one = u
                break
        if one is None:
            raise NoUnity(f"{name} has no two-sided multiplicative identity")
    return FiniteRing(A, M, one, name)


# ideals ---------------------------------------------------------------

@dataclass(frozen=True)
class LeftIdeal:
    members: tuple[int, ...]
    generators: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def closure(r: FiniteRing, gens: Iterable[int], left: bool = True, right: bool = False) -> frozenset[int]:
    """Worklist closure of ``gens`` under +, negation and the chosen one-sided products."""
    members = {0}
    work = [g for g in gens]
    while work:
        x = work.pop()
        if x in members:
            continue
        current = list(members)
        members.add(x)
        new = [r.neg(x)]
        new.extend(r.add(x, y) for y in current)
        new.append(r.add(x, x))
        if left:
            new.extend(int(v) for v in r.mul_table[:, x])
        if right:
            new.extend(int(v) for v in r.mul_table[x, :])
        work.extend(v for v in new if v not in members)
    return frozenset(members)


def left_ideal_generated_by(r: FiniteRing, gens: Sequence[int]) -> LeftIdeal:
    r.require_unital("left ideal generation")
    gens = tuple(int(g) for g in gens)
    return LeftIdeal(tuple(sorted(closure(r, gens, left=True))), gens)


def right_ideal_generated_by(r: FiniteRing, gens: Sequence[int]) -> LeftIdeal:
    """Right-handed mirror of :func:`left_ideal_generated_by` (same container type)."""
    r.require_unital("right ideal generation")
    gens = tuple(int(g) for g in gens)
    return LeftIdeal(tuple(sorted(closure(r, gens, left=False, right=True))), gens)


def ideal_generated_by(r: FiniteRing, gens: Sequence[int]) -> frozenset[int]:
    """Two-sided ideal generated by ``gens``."""
    r.require_unital("ideal generation")
    return closure(r, gens, left=True, right=True)


def is_two_sided(r: FiniteRing, ideal) -> bool:
    """True iff the left ideal is also closed under right multiplication."""
    members = np.zeros(r.order, dtype=bool)
    members[list(ideal)] = True
    return bool(members[r.mul_table[list(ideal), :]].all())
