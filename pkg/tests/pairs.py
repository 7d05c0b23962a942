"""Enumerate annihilating polynomial pairs straight from a ring's tables."""

from functools import lru_cache
from itertools import product

import numpy as np

from ringlab import Polynomial
from ringlab.catalog import builtin_ring


def grid(order, degree):
    rows = np.array(list(product(range(order), repeat=degree + 1)), dtype=np.int64)
    return rows[rows.any(axis=1)]


def _zero_mask(r, F, G):
    M, A = r.mul_table, r.add_table
    mask = np.ones((len(F), len(G)), dtype=bool)
    for k in range(F.shape[1] + G.shape[1] - 1):
        acc = np.zeros((len(F), len(G)), dtype=np.int64)
        for i in range(F.shape[1]):
            j = k - i
            if 0 <= j < G.shape[1]:
                acc = A[acc, M[F[:, i][:, None], G[:, j][None, :]]]
        mask &= acc == 0
    return mask


def zero_pairs_of(r, deg_f, deg_g):
    """All ``(f, g)`` coefficient tuples, both nonzero, ``deg f <= deg_f``, ``deg g <= deg_g``, ``f g = 0``."""
    F, G = grid(r.order, deg_f), grid(r.order, deg_g)
    out = []
    step = max(1, 4_000_000 // max(1, len(G)))
    for s in range(0, len(F), step):
        block = F[s:s + step]
        for i, j in np.argwhere(_zero_mask(r, block, G)):
            out.append((tuple(int(v) for v in block[i]), tuple(int(v) for v in G[j])))
    return tuple(out)


def zero_right_factors(r, f, deg_g):
    """Every nonzero ``g`` (as a coefficient tuple) with ``deg g <= deg_g`` and ``f g = 0``."""
    G = grid(r.order, deg_g)
    mask = _zero_mask(r, np.array([f], dtype=np.int64), G)[0]
    return [tuple(int(v) for v in row) for row in G[mask]]


@lru_cache(maxsize=None)
def zero_pairs(name, deg_f, deg_g):
    return zero_pairs_of(builtin_ring(name), deg_f, deg_g)


def polys(name, pair):
    r = builtin_ring(name)
    return Polynomial(r, pair[0]), Polynomial(r, pair[1])
