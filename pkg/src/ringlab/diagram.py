"""The McCoy/Duo implication diagram as data, and checks of it against ring corpora."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .catalog import RingCorpus
from .properties import PROPERTIES, McCoyBound, PropertyReport, Verdict, check_ring

log = logging.getLogger(__name__)

# Node id -> diagram label.
NODES: dict[str, str] = {
    "commutative": "comm.",
    "duo": "Duo",
    "left_duo": "Left Duo",
    "semicommutative": "s.c.",
    "2_primal": "2-primal",
    "symmetric": "symm.",
    "reversible": "rev.",
    "abelian": "Abelian",
    "dedekind_finite": "D. Finite",
    "reduced": "red.",
    "armendariz": "Arm.",
    "mccoy": "McCoy",
    "right_mccoy": "Right McCoy",
    "linearly_armendariz": "lin. arm.",
    "linearly_mccoy": "lin. McCoy",
    "right_linearly_mccoy": "right lin. McCoy",
}

# Grid positions (row, column) of the tikz matrix, used to transcribe its path list.
_GRID = {
    (1, 1): "commutative", (1, 2): "duo", (1, 3): "semicommutative", (1, 4): "2_primal",
    (2, 1): "symmetric", (2, 2): "reversible", (2, 3): "left_duo", (2, 4): "abelian",
    (2, 5): "dedekind_finite",
    (3, 1): "reduced", (3, 2): "armendariz", (3, 3): "mccoy", (3, 4): "right_mccoy",
    (4, 3): "linearly_armendariz", (4, 4): "linearly_mccoy", (4, 5): "right_linearly_mccoy",
}

_TIKZ_PATHS = [
    ((1, 1), (1, 2)), ((1, 1), (2, 1)), ((1, 2), (2, 3)), ((1, 2), (1, 3)),
    ((1, 2), (3, 3)), ((2, 3), (1, 3)), ((2, 3), (3, 3)), ((2, 3), (3, 4)),
    ((1, 4), (2, 5)), ((2, 1), (2, 2)), ((2, 2), (1, 3)), ((2, 2), (3, 3)),
    ((1, 3), (2, 4)), ((1, 3), (4, 4)), ((1, 3), (1, 4)), ((2, 4), (2, 5)),
    ((3, 1), (2, 1)), ((3, 1), (3, 2)), ((3, 2), (3, 3)), ((3, 2), (4, 3)),
    ((3, 3), (3, 4)), ((3, 3), (4, 4)), ((3, 4), (4, 5)), ((4, 3), (2, 4)),
    ((4, 3), (4, 4)), ((4, 4), (4, 5)), ((4, 5), (2, 5)),
]

EDGES: tuple[tuple[str, str], ...] = tuple((_GRID[a], _GRID[b]) for a, b in _TIKZ_PATHS)

# Arrows into or out of the Duo nodes.
DUO_EDGES = tuple(e for e in EDGES if {"duo", "left_duo"} & set(e))


@dataclass(frozen=True)
class ImplicationDiagram:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def successors(self, node: str) -> list[str]:
        return [b for a, b in self.edges if a == node]

    def implies(self, p: str, q: str) -> bool:
        """Reachability along arrows (reflexive)."""
        seen, stack = {p}, [p]
        while stack:
            x = stack.pop()
            if x == q:
                return True
            for y in self.successors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def is_acyclic(self) -> bool:
        return all(not self.implies(b, a) for a, b in self.edges)


def builtin_diagram() -> ImplicationDiagram:
    return ImplicationDiagram(tuple(NODES), EDGES)


@dataclass
class EdgeResult:
    source: str
    target: str
    status: str  # consistent | violated | vacuous
    violators: list[tuple[str, Verdict]] = field(default_factory=list)
    bounded: Optional[McCoyBound] = None

    def format(self) -> str:
        parts = [f"edge {self.source} -> {self.target} {self.status}"]
        parts += [f"ring={name}" for name, _ in self.violators]
        if self.bounded is not None:
            parts.append(f"bounded={self.bounded}")
        return " ".join(parts)


@dataclass
class DiagramReport:
    bound: McCoyBound
    rings: list[PropertyReport]
    edges: list[EdgeResult]
    hunted: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def violations(self) -> list[EdgeResult]:
        return [e for e in self.edges if e.status == "violated"]

    def edge(self, source: str, target: str) -> EdgeResult:
        return next(e for e in self.edges if (e.source, e.target) == (source, target))

    def lines(self) -> list[str]:
        out = []
        for rep in self.rings:
            out += rep.lines()
        out += [e.format() for e in self.edges]
        for p, q, ring in self.hunted:
            out.append(f"nonimplication {p} -> {q} ring={ring}")
        out.append(f"summary edges={len(self.edges)} violated={len(self.violations)} "
                   f"vacuous={sum(e.status == 'vacuous' for e in self.edges)}")
        return out

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines())

    def matrix_csv(self) -> str:
        nodes = list(NODES)
        rows = ["ring," + ",".join(nodes)]
        for rep in self.rings:
            rows.append(rep.ring + "," + ",".join(_cell(rep.verdicts[n]) for n in nodes))
        return "\n".join(rows) + "\n"


def _cell(v: Verdict) -> str:
    return {"holds": "1", "holds_up_to": "1", "fails": "0"}.get(v.status, "?")


def _evaluate(args) -> PropertyReport:
    ring, bound = args
    return check_ring(ring, list(NODES), bound)


def evaluate_corpus(corpus: RingCorpus, bound: McCoyBound, jobs: int = 1) -> list[PropertyReport]:
    for ring in corpus:
        ring.require_unital("diagram checking")
    work = [(ring, bound) for ring in corpus]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate, work))
    return [_evaluate(w) for w in work]


def check_diagram(corpus: RingCorpus, bound: McCoyBound = McCoyBound(), jobs: int = 1,
                  diagram: Optional[ImplicationDiagram] = None,
                  reports: Optional[list[PropertyReport]] = None) -> DiagramReport:
    """Evaluate every node on every ring and test each arrow.

    An arrow P -> Q is violated by a ring where P holds (at the bound, for
    polynomial properties) and Q fails; a bounded failure is a real
    failure, so it still counts.  Arrows whose premise never holds are
    reported as vacuous.
    """
    diagram = diagram or builtin_diagram()
    reports = reports if reports is not None else evaluate_corpus(corpus, bound, jobs)
    edges = []
    for p, q in diagram.edges:
        premise = [rep for rep in reports if rep.verdicts[p].holds]
        bad = [(rep.ring, rep.verdicts[q]) for rep in premise if rep.verdicts[q].fails]
        status = "violated" if bad else ("consistent" if premise else "vacuous")
        is_bounded = PROPERTIES[p].bounded or PROPERTIES[q].bounded
        edges.append(EdgeResult(p, q, status, bad, bound if is_bounded else None))
    return DiagramReport(bound, reports, edges)


def non_edges(diagram: Optional[ImplicationDiagram] = None) -> list[tuple[str, str]]:
    """Ordered node pairs not implied by the diagram's arrows."""
    diagram = diagram or builtin_diagram()
    return [(p, q) for p in diagram.nodes for q in diagram.nodes if p != q and not diagram.implies(p, q)]


def hunt_nonimplications(corpus: RingCorpus, candidates: Iterable[tuple[str, str]],
                         bound: McCoyBound = McCoyBound(),
                         reports: Optional[list[PropertyReport]] = None,
                         jobs: int = 1) -> list[tuple[str, str, str]]:
    """Rings separating P from Q: P holds, Q fails.  Empty means no witness here, nothing more."""
    candidates = list(candidates)
    edges = set(EDGES)
    overlap = [c for c in candidates if c in edges]
    if overlap:
        raise ValueError(f"candidates include diagram arrows: {overlap}")
    reports = reports if reports is not None else evaluate_corpus(corpus, bound, jobs)
    found = []
    for p, q in candidates:
        for rep in reports:
            vp, vq = rep.verdicts.get(p), rep.verdicts.get(q)
            if vp is not None and vq is not None and vp.holds and vq.fails:
                found.append((p, q, rep.ring))
    return found
