"""Ring constructors, small-order enumeration, ``.ring`` files and the builtin corpus."""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .errors import MixedUnitality, OrderTooLarge, ParseError, RingLabError
from .ring import FiniteRing, validate_ring

log = logging.getLogger(__name__)

MAX_ENUMERATION_ORDER = 4


@dataclass
class RingCorpus:
    rings: list[FiniteRing] = field(default_factory=list)
    provenance: dict[str, str] = field(default_factory=dict)

    def add(self, ring: FiniteRing, source: str) -> None:
        if ring.name in self.provenance:
            raise ValueError(f"duplicate ring name {ring.name!r} in corpus")
        self.rings.append(ring)
        self.provenance[ring.name] = source

    def extend(self, other: "RingCorpus") -> None:
        for r in other.rings:
            self.add(r, other.provenance[r.name])

    def __iter__(self):
        return iter(self.rings)

    def __len__(self):
        return len(self.rings)

    def names(self) -> list[str]:
        return [r.name for r in self.rings]


# constructors ---------------------------------------------------------

def _cyclic_tables(n: int):
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n


def make_zn(n: int) -> FiniteRing:
    if n < 2:
        raise ValueError("make_zn needs n >= 2")
    add, mul = _cyclic_tables(n)
    return validate_ring(add, mul, unital=True, name=f"Z{n}")


def zero_ring(name: str = "Z1") -> FiniteRing:
    return validate_ring([[0]], [[0]], unital=True, name=name)


def direct_product(a: FiniteRing, b: FiniteRing, name: Optional[str] = None) -> FiniteRing:
    """Componentwise product; element ``(x, y)`` has index ``x * |b| + y``."""
    if a.is_unital != b.is_unital:
        raise MixedUnitality(f"{a.name} and {b.name} differ in unitality")
    ka, kb = a.order, b.order
    xs = np.repeat(np.arange(ka), kb)
    ys = np.tile(np.arange(kb), ka)
    add = a.add_table[xs[:, None], xs[None, :]] * kb + b.add_table[ys[:, None], ys[None, :]]
    mul = a.mul_table[xs[:, None], xs[None, :]] * kb + b.mul_table[ys[:, None], ys[None, :]]
    return validate_ring(add, mul, unital=a.is_unital, name=name or f"{a.name}x{b.name}")


_SHAPES = {"full2x2": 4, "upper_triangular2x2": 3}


def matrix_element(base: FiniteRing, shape: str, entries: Iterable[int]) -> int:
    """Index of a matrix in :func:`make_matrix_ring`.

    ``entries`` are (m11, m12, m21, m22) for ``full2x2`` and (m11, m12, m22)
    for ``upper_triangular2x2``.
    """
    entries = tuple(entries)
    if len(entries) != _SHAPES[shape]:
        raise ValueError(f"{shape} needs {_SHAPES[shape]} entries")
    idx = 0
    for e in entries:
        idx = idx * base.order + e
    return idx


def make_matrix_ring(base: FiniteRing, shape: str = "full2x2", name: Optional[str] = None) -> FiniteRing:
    if shape not in _SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    base.require_unital("matrix ring construction")
    if not base.is_commutative():
        raise ValueError("matrix rings are built over commutative bases only")
    k = base.order
    A, M = base.add_table, base.mul_table
    elems = list(itertools.product(range(k), repeat=_SHAPES[shape]))
    if shape == "upper_triangular2x2":
        mats = [(a, b, 0, c) for a, b, c in elems]
    else:
        mats = elems

    def mat_mul(x, y):
        x11, x12, x21, x22 = x
        y11, y12, y21, y22 = y
        return (
            A[M[x11, y11], M[x12, y21]],
            A[M[x11, y12], M[x12, y22]],
            A[M[x21, y11], M[x22, y21]],
            A[M[x21, y12], M[x22, y22]],
        )

    def to_index(m):
        entries = (m[0], m[1], m[3]) if shape == "upper_triangular2x2" else m
        return matrix_element(base, shape, (int(v) for v in entries))

    size = len(mats)
    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    for i, x in enumerate(mats):
        for j, y in enumerate(mats):
            add[i, j] = to_index(tuple(A[p, q] for p, q in zip(x, y)))
            mul[i, j] = to_index(mat_mul(x, y))
    tag = "M2" if shape == "full2x2" else "U2"
    return validate_ring(add, mul, unital=True, name=name or f"{tag}{base.name}")


def make_skew_trivial_extension(field_ring: FiniteRing, frobenius_power: int = 2,
                                name: Optional[str] = None) -> FiniteRing:
    """Matrices ``[[a, b], [0, s(a)]]`` with ``s(a) = a**frobenius_power``.

    For a field of order 4 and the Frobenius map this is a noncommutative
    local ring of order 16 in which every one-sided ideal is two-sided.
    The element ``(a, b)`` has index ``a * q + b``.
    """
    q = field_ring.order
    A, M = field_ring.add_table, field_ring.mul_table
    s = [field_ring.pow(a, frobenius_power) if a else 0 for a in range(q)]
    size = q * q
    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    for a, b, c, d in itertools.product(range(q), repeat=4):
        i, j = a * q + b, c * q + d
        add[i, j] = A[a, c] * q + A[b, d]
        mul[i, j] = M[a, c] * q + A[M[a, d], M[b, s[c]]]
    return validate_ring(add, mul, unital=True, name=name or f"Skew{field_ring.name}")


def make_truncated_polynomial_ring(base: FiniteRing, n: int, name: Optional[str] = None) -> FiniteRing:
    """``base[t] / (t**n)``; element ``c0 + c1 t + ...`` has base-``|base|`` digits ``c0 c1 ...``.

    ``Z4[t]/(t**2)`` is commutative but not Armendariz: ``(2 + t x)**2 = 0``
    while ``2 t != 0``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if base.order ** n > 256:
        raise OrderTooLarge(f"{base.name}[t]/(t^{n}) would have order {base.order ** n}")
    q = base.order
    A, M = base.add_table, base.mul_table
    digits = list(itertools.product(range(q), repeat=n))
    index = {d[::-1]: i for i, d in enumerate(digits)}
    elems = [d[::-1] for d in digits]
    size = len(elems)
    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            add[i, j] = index[tuple(int(A[a, b]) for a, b in zip(x, y))]
            prod = [0] * n
            for u in range(n):
                for v in range(n - u):
                    prod[u + v] = int(A[prod[u + v], M[x[u], y[v]]])
            mul[i, j] = index[tuple(prod)]
    return validate_ring(add, mul, unital=True, name=name or f"{base.name}t{n}")


# isomorphism ----------------------------------------------------------

def find_isomorphism(r1: FiniteRing, r2: FiniteRing) -> Optional[tuple[int, ...]]:
    """Return a bijection ``phi`` (as a tuple, ``phi[x]``) that carries r1's tables onto r2's.

    Brute force over permutations fixing 0, pruned by additive order and
    by where the unity must go.
    """
    if r1.order != r2.order or r1.is_unital != r2.is_unital:
        return None
    k = r1.order
    if k == 1:
        return (0,)

    def add_orders(r):
        out = []
        for a in range(k):
            x, n = a, 1
            while x != 0:
                x, n = r.add(x, a), n + 1
            out.append(n if a else 1)
        return out

    o1, o2 = add_orders(r1), add_orders(r2)
    if sorted(o1) != sorted(o2):
        return None
    A1, M1, A2, M2 = r1.add_table, r1.mul_table, r2.add_table, r2.mul_table
    for perm in itertools.permutations(range(1, k)):
        phi = np.array((0,) + perm, dtype=np.int64)
        if r1.is_unital and phi[r1.one] != r2.one:
            continue
        if any(o1[x] != o2[phi[x]] for x in range(k)):
            continue
        if np.array_equal(phi[A1], A2[np.ix_(phi, phi)]) and np.array_equal(phi[M1], M2[np.ix_(phi, phi)]):
            return tuple(int(v) for v in phi)
    return None


def are_isomorphic(r1: FiniteRing, r2: FiniteRing) -> bool:
    return find_isomorphism(r1, r2) is not None


# enumeration ----------------------------------------------------------

def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(n: int, largest: Optional[int] = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def abelian_groups(order: int) -> list[tuple[str, np.ndarray]]:
    """Addition tables for every abelian group of the given order, up to isomorphism."""
    if order == 1:
        return [("Z1", np.zeros((1, 1), dtype=np.int64))]
    per_prime = []
    for p, e in sorted(_prime_factors(order).items()):
        per_prime.append([tuple(p**part for part in parts) for parts in _partitions(e)])
    groups = []
    for choice in itertools.product(*per_prime):
        moduli = tuple(m for cyc in choice for m in cyc)
        elems = list(itertools.product(*(range(m) for m in moduli)))
        index = {e: i for i, e in enumerate(elems)}
        table = np.array(
            [[index[tuple((x + y) % m for x, y, m in zip(a, b, moduli))] for b in elems] for a in elems],
            dtype=np.int64,
        )
        groups.append(("x".join(f"Z{m}" for m in moduli), table))
    return groups


def _distributive_tables(A: np.ndarray):
    """Yield every multiplication table bi-additive over A, by cellwise backtracking.

    Row and column 0 are fixed to 0; every distributivity equation is checked
    as soon as the last of its three cells is assigned.
    """
    k = A.shape[0]
    cells = [(a, b) for a in range(1, k) for b in range(1, k)]
    pos = {c: i for i, c in enumerate(cells)}
    checks: list[list[tuple]] = [[] for _ in cells]
    for a, b, c in itertools.product(range(k), repeat=3):
        # a*(b+c) = a*b + a*c ;  (a+b)*c = a*c + b*c
        for trio in (((a, A[b, c]), (a, b), (a, c)), ((A[a, b], c), (a, c), (b, c))):
            ps = [pos.get((int(x), int(y))) for x, y in trio]
            known = [p for p in ps if p is not None]
            if not known:
                continue
            checks[max(known)].append(tuple((int(x), int(y)) for x, y in trio))
    M = np.zeros((k, k), dtype=np.int64)

    def ok(i):
        for lhs, u, v in checks[i]:
            if M[lhs] != A[M[u], M[v]]:
                return False
        return True

    def rec(i):
        if i == len(cells):
            yield M.copy()
            return
        for val in range(k):
            M[cells[i]] = val
            if ok(i):
                yield from rec(i + 1)
        M[cells[i]] = 0

    yield from rec(0)


def _describe(ring: FiniteRing, group_name: str) -> str:
    if ring.order == 1:
        return "Z1"
    k = ring.order
    if group_name == f"Z{k}":
        return f"Z{k}"
    units = sum(1 for a in ring.elements if any(ring.mul(a, b) == ring.one for b in ring.elements))
    if units == k - 1:
        return f"F{k}"
    if any(ring.is_nilpotent(a) for a in range(1, k)):
        return "Z2e" if group_name == "Z2xZ2" else "nil"
    return group_name


def enumerate_unital_rings(order: int) -> "RingCorpus":
    """All unital rings of ``order`` up to isomorphism, by brute-force table search."""
    if not 1 <= order <= MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(f"enumeration supports orders 1..{MAX_ENUMERATION_ORDER}, got {order}")
    corpus = RingCorpus()
    for ring in _enumerate_cached(order):
        corpus.add(ring, "enumerated")
    return corpus


@functools.lru_cache(maxsize=None)
def _enumerate_cached(order: int) -> tuple[FiniteRing, ...]:
    found: list[tuple[FiniteRing, str]] = []
    for gname, A in abelian_groups(order):
        for M in _distributive_tables(A):
            try:
                ring = validate_ring(A, M, unital=True, name="candidate")
            except RingLabError:
                continue
            if any(are_isomorphic(ring, prev) for prev, _ in found):
                continue
            found.append((ring, gname))
    out = []
    used: dict[str, int] = {}
    for ring, gname in found:
        base = f"order{order}:{_describe(ring, gname)}"
        used[base] = used.get(base, 0) + 1
        name = base if used[base] == 1 else f"{base}_{used[base]}"
        out.append(FiniteRing(ring.add_table, ring.mul_table, ring.one, name))
    log.debug("order %d: %d unital rings", order, len(out))
    return tuple(out)


# .ring files ----------------------------------------------------------

def format_ring(ring: FiniteRing) -> str:
    lines = [
        f"order {ring.order}",
        f"unital {'yes' if ring.is_unital else 'no'}",
        f"name {ring.name}",
    ]
    lines += [" ".join(str(int(v)) for v in row) for row in ring.add_table]
    lines.append("")
    lines += [" ".join(str(int(v)) for v in row) for row in ring.mul_table]
    return "\n".join(lines) + "\n"


def parse_ring(text: str) -> FiniteRing:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def header(i, key):
        if i >= len(lines):
            raise ParseError(f"missing '{key}' header", i + 1)
        parts = lines[i].split()
        if len(parts) != 2 or parts[0] != key:
            raise ParseError(f"expected '{key} <value>'", i + 1)
        return parts[1]

    try:
        k = int(header(0, "order"))
    except ValueError:
        raise ParseError("order must be an integer", 1) from None
    if k < 1:
        raise ParseError("order must be positive", 1)
    unital_word = header(1, "unital")
    if unital_word not in ("yes", "no"):
        raise ParseError("unital must be 'yes' or 'no'", 2)
    name = header(2, "name")

    def table(start):
        rows = []
        for i in range(start, start + k):
            if i >= len(lines) or not lines[i].strip():
                raise ParseError(f"expected {k} table rows", i + 1)
            try:
                row = [int(t) for t in lines[i].split()]
            except ValueError:
                raise ParseError("non-integer table entry", i + 1) from None
            if len(row) != k:
                raise ParseError(f"expected {k} entries, found {len(row)}", i + 1)
            if any(not 0 <= v < k for v in row):
                raise ParseError(f"entry out of range [0, {k})", i + 1)
            rows.append(row)
        return rows

    add = table(3)
    sep = 3 + k
    if sep >= len(lines) or lines[sep].strip():
        raise ParseError("expected a blank line between the tables", sep + 1)
    mul = table(sep + 1)
    end = sep + 1 + k
    for i in range(end, len(lines)):
        if lines[i].strip():
            raise ParseError("trailing content after multiplication table", i + 1)
    return validate_ring(add, mul, unital=unital_word == "yes", name=name)


def save_ring(ring: FiniteRing, path) -> None:
    Path(path).write_text(format_ring(ring))


def load_ring(path) -> FiniteRing:
    return parse_ring(Path(path).read_text())


def load_corpus_dir(path) -> RingCorpus:
    corpus = RingCorpus()
    for p in sorted(Path(path).glob("*.ring")):
        corpus.add(load_ring(p), "file")
    return corpus


# builtins -------------------------------------------------------------

def _builtin_factories():
    reg = {f"Z{n}": (lambda n=n: make_zn(n)) for n in range(2, 13)}
    reg["Z2xZ2"] = lambda: direct_product(make_zn(2), make_zn(2))
    reg["Z2xZ4"] = lambda: direct_product(make_zn(2), make_zn(4))
    reg["U2Z2"] = lambda: make_matrix_ring(make_zn(2), "upper_triangular2x2")
    reg["M2Z2"] = lambda: make_matrix_ring(make_zn(2), "full2x2")
    reg["SkewF4"] = _skew_f4
    reg["Z4t2"] = lambda: make_truncated_polynomial_ring(make_zn(4), 2)
    return reg


def _field_of_order_4() -> FiniteRing:
    for ring in enumerate_unital_rings(4):
        if ring.name == "order4:F4":
            return FiniteRing(ring.add_table, ring.mul_table, ring.one, "F4")
    raise RingLabError("no field of order 4 found by enumeration")


def _skew_f4() -> FiniteRing:
    return make_skew_trivial_extension(_field_of_order_4(), 2, name="SkewF4")


_CACHE: dict[str, FiniteRing] = {}

# Names in the corpus used for diagram runs; SkewF4 and Z4t2 are registered but kept out.
CORPUS_NAMES = [f"Z{n}" for n in range(2, 13)] + ["Z2xZ2", "Z2xZ4", "U2Z2", "M2Z2"]


def builtin_names() -> list[str]:
    names = list(_builtin_factories())
    names += [r.name for r in enumerate_unital_rings(4)]
    return names


def builtin_ring(name: str) -> FiniteRing:
    if name in _CACHE:
        return _CACHE[name]
    factories = _builtin_factories()
    if name in factories:
        ring = factories[name]()
    elif name.startswith("order"):
        try:
            order = int(name[len("order"):].split(":")[0])
        except ValueError:
            raise KeyError(name) from None
        matches = [r for r in enumerate_unital_rings(order) if r.name == name]
        if not matches:
            raise KeyError(name)
        ring = matches[0]
    else:
        raise KeyError(name)
    _CACHE[name] = ring
    return ring


def builtin_corpus() -> RingCorpus:
    corpus = RingCorpus()
    for name in CORPUS_NAMES:
        corpus.add(builtin_ring(name), "builtin")
    corpus.extend(enumerate_unital_rings(4))
    return corpus


def resolve_ring(spec: str) -> FiniteRing:
    """``builtin:<name>`` or a path to a ``.ring`` file."""
    if spec.startswith("builtin:"):
        return builtin_ring(spec[len("builtin:"):])
    return load_ring(spec)
