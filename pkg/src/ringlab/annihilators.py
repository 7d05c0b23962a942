"""Constructive ring-element annihilators of annihilating polynomial pairs.

Given nonzero ``f, g`` in ``R[x]`` with ``f g = 0`` this module computes

* the closed-form left annihilators ``a0**(n+1)``, ``am**(n+1)`` of ``g``
  (semi-commutative rings) and right annihilators ``b0**(m+1)``,
  ``bn**(m+1)`` of ``f`` (one-sided Duo rings);
* a nonzero right annihilator of ``f`` lying in the left ideal generated by
  the coefficients of ``g``, by degree-reduction procedures for right Duo
  and left Duo rings, each recorded step by step in an
  :class:`AnnihilatorTrace`;
* the brute-force set ``{r : f r = 0}`` that certifies all of the above.

Scans over ring elements are in ascending index order, so every procedure
is deterministic.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import (
    AnnihilationFailure,
    NonterminationGuard,
    NotDuo,
    NotLeftDuo,
    NotRightDuo,
    NotSemicommutative,
    ProductNotZero,
    RingMismatch,
    WitnessNotFound,
    ZeroPolynomial,
)
from .polynomial import Polynomial, format_coeffs, poly_mul, scale_left, scale_right, strip_constant
from .properties import is_left_duo, is_right_duo, is_semicommutative
from .ring import FiniteRing, left_ideal_generated_by

_PROPERTY_CACHE: "weakref.WeakKeyDictionary[FiniteRing, dict]" = weakref.WeakKeyDictionary()


def _ring_has(r: FiniteRing, prop: str) -> bool:
    cache = _PROPERTY_CACHE.setdefault(r, {})
    if prop not in cache:
        check = {"sc": is_semicommutative, "left_duo": is_left_duo, "right_duo": is_right_duo}[prop]
        cache[prop] = check(r).holds
    return cache[prop]


def _require_pair(f: Polynomial, g: Polynomial) -> None:
    if not f.ring.same_as(g.ring):
        raise RingMismatch(f"{f.ring.name} vs {g.ring.name}")
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("both polynomials must be nonzero")
    if not poly_mul(f, g).is_zero:
        raise ProductNotZero(f"f*g = {format_coeffs(poly_mul(f, g))}, not 0")


# ground truth -----------------------------------------------------------

def oracle_right_annihilators(f: Polynomial) -> frozenset[int]:
    """``{r : f r = 0}`` by scanning every ring element (always contains 0)."""
    if f.is_zero:
        raise ZeroPolynomial("every element annihilates the zero polynomial")
    M = f.ring.mul_table
    return frozenset(r for r in f.ring.elements if all(M[a, r] == 0 for a in f.coeffs))


def oracle_left_annihilators(g: Polynomial) -> frozenset[int]:
    if g.is_zero:
        raise ZeroPolynomial("every element annihilates the zero polynomial")
    M = g.ring.mul_table
    return frozenset(s for s in g.ring.elements if all(M[s, b] == 0 for b in g.coeffs))


def verify_annihilation(f: Polynomial, r: int) -> bool:
    """``f(x) r == 0``."""
    return all(f.ring.mul(a, r) == 0 for a in f.coeffs)


def verify_left(s: int, g: Polynomial) -> bool:
    """``s g(x) == 0``."""
    return all(g.ring.mul(s, b) == 0 for b in g.coeffs)


# closed-form annihilators ---------------------------------------------------

class FormulaAnnihilators(NamedTuple):
    low: int   # built from the constant coefficient
    high: int  # built from the leading coefficient

    @property
    def is_zero(self) -> tuple[bool, bool]:
        return self.low == 0, self.high == 0


def lemma1_left_annihilators(f: Polynomial, g: Polynomial) -> FormulaAnnihilators:
    """``(a0**(n+1), am**(n+1))``, both of which left-annihilate ``g``.

    Needs a semi-commutative ring.  Either element may be zero.
    """
    _require_pair(f, g)
    r = f.ring
    if not _ring_has(r, "sc"):
        raise NotSemicommutative(f"{r.name} is not semi-commutative")
    n = g.degree
    out = FormulaAnnihilators(r.pow(f.constant_term, n + 1), r.pow(f.leading, n + 1))
    for s in out:
        if not verify_left(s, g):
            raise AnnihilationFailure(f"{s} does not left-annihilate g={format_coeffs(g)} over {r.name}")
    return out


def thm3_right_annihilators(f: Polynomial, g: Polynomial) -> FormulaAnnihilators:
    """``(b0**(m+1), bn**(m+1))``, both of which right-annihilate ``f``.

    Needs a left or right Duo ring.  Either element may be zero.
    """
    _require_pair(f, g)
    r = f.ring
    if not (_ring_has(r, "left_duo") or _ring_has(r, "right_duo")):
        raise NotDuo(f"{r.name} is neither left nor right Duo")
    m = f.degree
    out = FormulaAnnihilators(r.pow(g.constant_term, m + 1), r.pow(g.leading, m + 1))
    for s in out:
        if not verify_annihilation(f, s):
            raise AnnihilationFailure(f"{s} does not right-annihilate f={format_coeffs(f)} over {r.name}")
    return out


def lemma1_ladder(f: Polynomial, g: Polynomial) -> list[int]:
    """``[a0**(j+1) * b_j for j = 0..n]``; all zero when ``f g = 0`` in a semi-commutative ring."""
    r = f.ring
    a0 = f.constant_term
    return [r.mul(r.pow(a0, j + 1), b) for j, b in enumerate(g.coeffs)]


def thm3_ladder(f: Polynomial, g: Polynomial) -> list[int]:
    """``[a_k * b0**(k+1) for k = 0..m]``."""
    r = f.ring
    b0 = g.constant_term
    return [r.mul(a, r.pow(b0, k + 1)) for k, a in enumerate(f.coeffs)]


# traces ---------------------------------------------------------------------

STEP_KINDS = (
    "strip_f",         # f <- (f - a0) / x
    "strip_g",         # g <- (g - b0) / x
    "right_scale_g",   # g <- g * witness
    "left_scale_f",    # f <- witness * f
    "duo_witness",     # g <- g * witness, where a0**k b_j = b_j witness
    "degenerate_g",    # g * b0 vanished; result <- witness (= b0)
    "degenerate_f",    # a0 * f vanished; state unchanged
    "base",            # result <- witness
    "lift",            # result <- result * witness
    "oracle_fallback", # result <- witness, taken from the brute-force set
)


@dataclass(frozen=True)
class TraceStep:
    kind: str
    f: tuple[int, ...]
    g: tuple[int, ...]
    witness: Optional[int] = None
    k: Optional[int] = None
    j: Optional[int] = None

    def format(self, idx: int) -> str:
        parts = [f"step {idx} {self.kind} f={_fmt(self.f)} g={_fmt(self.g)}"]
        if self.witness is not None:
            parts.append(f"witness={self.witness}")
        if self.k is not None:
            parts.append(f"k={self.k}")
        if self.j is not None:
            parts.append(f"j={self.j}")
        return " ".join(parts)


def _fmt(coeffs) -> str:
    return ",".join(map(str, coeffs)) if coeffs else "0"


@dataclass
class AnnihilatorTrace:
    method: str
    f: tuple[int, ...]
    g: tuple[int, ...]
    steps: list[TraceStep] = field(default_factory=list)
    result: Optional[int] = None
    failure: Optional[str] = None
    stalled: bool = False

    def lines(self) -> list[str]:
        out = [f"method {self.method} f={_fmt(self.f)} g={_fmt(self.g)}"]
        out += [s.format(i) for i, s in enumerate(self.steps)]
        if self.stalled:
            out.append(f"note procedure-stalled reason={self.failure}")
        if self.result is not None:
            out.append(f"result {self.result}")
        else:
            out.append(f"failed {self.failure or 'unknown'}")
        return out

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


class _Recorder:
    def __init__(self, method: str, f: Polynomial, g: Polynomial, cap: int):
        self.trace = AnnihilatorTrace(method, f.coeffs, g.coeffs)
        self.cap = cap
        self.moves = 0

    def step(self, kind, f, g, witness=None, k=None, j=None):
        self.trace.steps.append(TraceStep(kind, f.coeffs, g.coeffs, witness, k, j))

    def tick(self):
        self.moves += 1
        return self.moves > self.cap


def _guard_cap(f: Polynomial, g: Polynomial) -> int:
    return f.ring.order * (f.degree + g.degree + 2)


def _first_nonzero(g: Polynomial) -> tuple[int, int]:
    for j, b in enumerate(g.coeffs):
        if b:
            return j, b
    raise ZeroPolynomial("no nonzero coefficient")


def _annihilates_all(r: FiniteRing, a: int, g: Polynomial) -> bool:
    return all(r.mul(a, b) == 0 for b in g.coeffs)


def _stall(rec: _Recorder, f0: Polynomial, g0: Polynomial, f: Polynomial, g: Polynomial,
           reason: str, strict: bool):
    rec.trace.stalled = True
    rec.trace.failure = reason
    if strict:
        rec.trace.result = None
        raise NonterminationGuard(reason, rec.trace)
    ideal = left_ideal_generated_by(f0.ring, g0.coeffs)
    candidates = sorted(oracle_right_annihilators(f0) - {0})
    preferred = [c for c in candidates if c in ideal] or candidates
    if not preferred:
        rec.trace.result = None
        return None
    rec.step("oracle_fallback", f, g, witness=preferred[0])
    rec.trace.result = preferred[0]
    return preferred[0]


# Right Duo ------------------------------------------------------------------

def _power_exponent(r: FiniteRing, a0: int, b: int) -> Optional[int]:
    """Smallest k >= 1 with a0**k b != 0 and a0**(k+1) b == 0."""
    p = a0
    for k in range(1, r.order + 2):
        nxt = r.mul(r.mul(p, a0), b)
        if r.mul(p, b) != 0 and nxt == 0:
            return k
        p = r.mul(p, a0)
    return None


def lemma2_right_annihilator(f: Polynomial, g: Polynomial, strict: bool = False):
    """Nonzero ``r`` in the left ideal of g's coefficients with ``f r = 0`` (right Duo rings).

    Induction on ``deg f``.  While ``a0 g != 0`` the first coefficient
    ``b_j`` with ``a0 b_j != 0`` is pushed into the annihilator of ``a0`` by
    replacing ``g`` with ``g r``, where ``a0**k b_j = b_j r`` and
    ``a0**(k+1) b_j = 0``.  Once ``a0 g = 0`` the constant of ``f`` is
    stripped.  A constant ``f`` is annihilated by the first nonzero
    coefficient of ``g``.  On the way back out the result is multiplied by
    the ``b0`` current at each strip unless that product is zero.

    Returns ``(r, trace)``.
    """
    _require_pair(f, g)
    ring = f.ring
    if not _ring_has(ring, "right_duo"):
        raise NotRightDuo(f"{ring.name} is not right Duo")
    rec = _Recorder("lemma2", f, g, _guard_cap(f, g))
    f0, g0 = f, g
    lifts: list[int] = []
    while True:
        if rec.tick():
            return _stall(rec, f0, g0, f, g, "iteration-cap", strict), rec.trace
        if f.degree == 0:
            _, b = _first_nonzero(g)
            rec.step("base", f, g, witness=b)
            result = b
            break
        a0 = f.constant_term
        if _annihilates_all(ring, a0, g):
            lifts.append(g.constant_term)
            f = strip_constant(f)
            rec.step("strip_f", f, g)
            continue
        j = next(i for i, b in enumerate(g.coeffs) if ring.mul(a0, b))
        bj = g.coeffs[j]
        k = _power_exponent(ring, a0, bj)
        if k is None:
            raise WitnessNotFound(f"no exponent k for a0={a0}, b_j={bj} within {ring.order} powers")
        target = ring.mul(ring.pow(a0, k), bj)
        witness = next((s for s in ring.elements if ring.mul(bj, s) == target), None)
        if witness is None:
            raise WitnessNotFound(f"no r with {target} = {bj}*r; {ring.name} is not right Duo")
        g = scale_right(g, witness)
        rec.step("duo_witness", f, g, witness=witness, k=k, j=j)
    for b0 in reversed(lifts):
        lifted = ring.mul(result, b0)
        if lifted:
            result = lifted
            rec.step("lift", f, g, witness=b0)
    rec.trace.result = result
    _certify(f0, result, rec.trace)
    return result, rec.trace


# Left Duo -------------------------------------------------------------------

def _linear_base(ring: FiniteRing, f: Polynomial, g: Polynomial) -> Optional[int]:
    ideal = left_ideal_generated_by(ring, g.coeffs)
    return next((r for r in ideal.members if r and verify_annihilation(f, r)), None)


def thm1_right_annihilator(f: Polynomial, g: Polynomial, variant: str = "alternative",
                           strict: bool = False):
    """Nonzero ``r`` with ``f r = 0`` for left Duo rings, by degree reduction.

    ``variant="alternative"``: while both polynomials have positive degree,
    strip both constants if ``a0 g = 0`` and ``f b0 = 0``; otherwise
    replace ``(f, g)`` by ``(a0 f, g b0)``.  If ``g b0`` vanishes the
    answer is ``b0``; if ``a0 f`` vanishes only f's constant is stripped.
    A constant ``f`` is answered by the first nonzero coefficient of ``g``
    and a constant ``g`` by ``b0``.

    ``variant="induction"``: first lower ``deg f`` to 1 (strip when
    ``a0 g = 0``, else ``g <- g b0``), then lower ``deg g`` to 1 (strip
    when ``f b0 = 0``, else ``f <- a0 f`` and strip), and solve the linear
    pair by searching the left ideal of g's coefficients.

    Rewriting ``f`` as ``a0 f`` only preserves annihilators in one
    direction, so the result is checked against the original ``f``.  A
    failed check, or hitting the iteration cap, is a stall: the answer is
    then taken from :func:`oracle_right_annihilators` and the trace is
    marked, or :class:`NonterminationGuard` is raised when ``strict``.
    Returns ``(r, trace)``.
    """
    if variant not in ("alternative", "induction"):
        raise ValueError(f"unknown variant {variant!r}")
    _require_pair(f, g)
    ring = f.ring
    if not _ring_has(ring, "left_duo"):
        raise NotLeftDuo(f"{ring.name} is not left Duo")
    rec = _Recorder(f"thm1_{variant}", f, g, _guard_cap(f, g))
    f0, g0 = f, g
    step = _alternative_step if variant == "alternative" else _induction_step
    result = None
    while result is None:
        if rec.tick():
            return _stall(rec, f0, g0, f, g, "iteration-cap", strict), rec.trace
        if f.degree == 0:
            _, result = _first_nonzero(g)
            rec.step("base", f, g, witness=result)
            break
        if g.degree == 0:
            result = g.constant_term
            rec.step("base", f, g, witness=result)
            break
        f, g, result = step(ring, rec, f, g)
    if result == _NO_LINEAR_BASE:
        return _stall(rec, f0, g0, f, g, "no-linear-annihilator", strict), rec.trace
    if not result or not verify_annihilation(f0, result):
        return _stall(rec, f0, g0, f, g, "unsound-result", strict), rec.trace
    rec.trace.result = result
    return result, rec.trace


def _alternative_step(ring, rec, f, g):
    a0, b0 = f.constant_term, g.constant_term
    if _annihilates_all(ring, a0, g) and verify_annihilation(f, b0):
        f = strip_constant(f)
        rec.step("strip_f", f, g)
        g = strip_constant(g)
        rec.step("strip_g", f, g)
        return f, g, None
    g_star = scale_right(g, b0)
    if g_star.is_zero:
        rec.step("degenerate_g", f, g, witness=b0)
        return f, g, b0
    f_star = scale_left(a0, f)
    if f_star.is_zero:
        rec.step("degenerate_f", f, g, witness=a0)
        f = strip_constant(f)
        rec.step("strip_f", f, g)
        return f, g, None
    rec.step("left_scale_f", f_star, g, witness=a0)
    rec.step("right_scale_g", f_star, g_star, witness=b0)
    return f_star, g_star, None


_NO_LINEAR_BASE = -1  # returned by _induction_step when the linear search finds nothing


def _induction_step(ring, rec, f, g):
    a0, b0 = f.constant_term, g.constant_term
    if f.degree <= 1 and g.degree <= 1:
        result = _linear_base(ring, f, g)
        if result is None:
            return f, g, _NO_LINEAR_BASE
        rec.step("base", f, g, witness=result)
        return f, g, result
    if f.degree > 1:
        if _annihilates_all(ring, a0, g):
            f = strip_constant(f)
            rec.step("strip_f", f, g)
            return f, g, None
        g_star = scale_right(g, b0)
        if g_star.is_zero:
            rec.step("degenerate_g", f, g, witness=b0)
            return f, g, b0
        rec.step("right_scale_g", f, g_star, witness=b0)
        return f, g_star, None
    if not verify_annihilation(f, b0):
        f_star = scale_left(a0, f)
        if f_star.is_zero:
            rec.step("degenerate_f", f, g, witness=a0)
            f = strip_constant(f)
            rec.step("strip_f", f, g)
            return f, g, None
        f = f_star
        rec.step("left_scale_f", f, g, witness=a0)
    g = strip_constant(g)
    rec.step("strip_g", f, g)
    return f, g, None


def _certify(f: Polynomial, r: int, trace: AnnihilatorTrace) -> None:
    if not r or not verify_annihilation(f, r):
        trace.failure = "unsound-result"
        raise AnnihilationFailure(f"procedure returned {r}, which is not a nonzero right annihilator\n"
                                  + trace.text())


def right_annihilator(f: Polynomial, g: Polynomial, method: str = "thm1", variant: str = "alternative",
                      strict: bool = False):
    if method == "lemma2":
        return lemma2_right_annihilator(f, g, strict=strict)
    if method == "thm1":
        return thm1_right_annihilator(f, g, variant=variant, strict=strict)
    raise ValueError(f"unknown procedure {method!r}")


# replay -----------------------------------------------------------------------

def replay_trace(ring: FiniteRing, trace: AnnihilatorTrace) -> bool:
    """Re-apply every recorded step to the inputs and compare intermediates.

    Also checks the identity recorded by each ``duo_witness`` step.
    """
    f = Polynomial(ring, trace.f)
    g = Polynomial(ring, trace.g)
    result = None
    for step in trace.steps:
        a0 = f.constant_term
        if step.kind == "strip_f":
            f = strip_constant(f)
        elif step.kind == "strip_g":
            g = strip_constant(g)
        elif step.kind == "right_scale_g":
            g = scale_right(g, step.witness)
        elif step.kind == "left_scale_f":
            f = scale_left(step.witness, f)
        elif step.kind == "duo_witness":
            bj = g.coeffs[step.j]
            if ring.mul(ring.pow(a0, step.k), bj) != ring.mul(bj, step.witness):
                return False
            g = scale_right(g, step.witness)
        elif step.kind == "degenerate_f":
            pass
        elif step.kind in ("base", "oracle_fallback", "degenerate_g"):
            result = step.witness
        elif step.kind == "lift":
            result = ring.mul(result, step.witness)
        else:
            return False
        if f.coeffs != step.f or g.coeffs != step.g:
            return False
    return result == trace.result
