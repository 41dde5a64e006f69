"""Structural classification of contagion chains into the eight patterns.

The decision procedure is purely topological and total: every chain of two
or more nodes lands in exactly one pattern.

1. A strongly connected component of size >= 3 means loop-mutual behavior:
   P5 when the loop covers the whole chain, P6 when other nodes hang off it.
2. Otherwise a 2-cycle means mutual behavior: P3 for the bare pair, P4 when
   the chain extends beyond it.
3. Otherwise the chain is acyclic: P1 for the single-edge chain, P2 for a
   simple directed path, P7 for a depth-1 star (every edge leaves the
   source), and P8 for any other branching spread.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from sklearn.base import BaseEstimator

from .contagion import ContagionChain
from .errors import DegenerateChainError


class Pattern(str, Enum):
    P1 = "P1"  # direct
    P2 = "P2"  # single chain
    P3 = "P3"  # mutual
    P4 = "P4"  # mutual-ext
    P5 = "P5"  # loop-mutual
    P6 = "P6"  # loop-mutual-ext
    P7 = "P7"  # star
    P8 = "P8"  # star-ext


class Quadrant(str, Enum):
    QI = "QI"    # chain-like
    QII = "QII"   # mutual
    QIII = "QIII"  # loop-mutual
    QIV = "QIV"   # star-like


PATTERN_QUADRANT: dict[Pattern, Quadrant] = {
    Pattern.P1: Quadrant.QI,
    Pattern.P2: Quadrant.QI,
    Pattern.P3: Quadrant.QII,
    Pattern.P4: Quadrant.QII,
    Pattern.P5: Quadrant.QIII,
    Pattern.P6: Quadrant.QIII,
    Pattern.P7: Quadrant.QIV,
    Pattern.P8: Quadrant.QIV,
}

QUADRANT_PATTERNS: dict[Quadrant, tuple[Pattern, Pattern]] = {
    Quadrant.QI: (Pattern.P1, Pattern.P2),
    Quadrant.QII: (Pattern.P3, Pattern.P4),
    Quadrant.QIII: (Pattern.P5, Pattern.P6),
    Quadrant.QIV: (Pattern.P7, Pattern.P8),
}

# Node counts of the canonical motif shapes (None = open-ended).
CANONICAL_NODE_COUNT: dict[Pattern, int | None] = {
    Pattern.P1: 2,
    Pattern.P2: 3,
    Pattern.P3: 2,
    Pattern.P4: 3,
    Pattern.P5: 3,
    Pattern.P6: 4,
    Pattern.P7: None,
    Pattern.P8: None,
}


@dataclass(frozen=True)
class PatternLabel:
    pattern: Pattern
    quadrant: Quadrant
    source_kind: str  # "structural" | "spectral"


def strongly_connected_components(
    nodes: frozenset[str], edges: frozenset[tuple[str, str]]
) -> list[frozenset[str]]:
    """Tarjan's algorithm, iterative so deep chains cannot blow the stack."""
    adjacency: dict[str, list[str]] = {node: [] for node in nodes}
    for a, b in sorted(edges):
        adjacency[a].append(b)

    index_of: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[frozenset[str]] = []
    counter = 0

    for root in sorted(nodes):
        if root in index_of:
            continue
        work = [(root, 0)]
        while work:
            node, edge_pos = work[-1]
            if edge_pos == 0:
                index_of[node] = lowlink[node] = counter
                counter += 1
                stack.append(node)
                on_stack.add(node)
            advanced = False
            successors = adjacency[node]
            while edge_pos < len(successors):
                successor = successors[edge_pos]
                edge_pos += 1
                if successor not in index_of:
                    work[-1] = (node, edge_pos)
                    work.append((successor, 0))
                    advanced = True
                    break
                if successor in on_stack:
                    lowlink[node] = min(lowlink[node], index_of[successor])
            if advanced:
                continue
            work.pop()
            if lowlink[node] == index_of[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                components.append(frozenset(component))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
    return components


def _degrees(
    nodes: frozenset[str], edges: frozenset[tuple[str, str]]
) -> tuple[dict[str, int], dict[str, int]]:
    in_deg = {node: 0 for node in nodes}
    out_deg = {node: 0 for node in nodes}
    for a, b in edges:
        out_deg[a] += 1
        in_deg[b] += 1
    return in_deg, out_deg


def classify_topology(nodes: frozenset[str], edges: frozenset[tuple[str, str]]) -> Pattern:
    """Classify a contagion subgraph given as (node set, directed edge set)."""
    n = len(nodes)
    if n < 2:
        raise DegenerateChainError(f"cannot classify a {n}-node chain")

    sccs = [c for c in strongly_connected_components(nodes, edges) if len(c) >= 2]
    big = [c for c in sccs if len(c) >= 3]
    if big:
        return Pattern.P5 if any(len(c) == n for c in big) else Pattern.P6
    if sccs:  # only 2-cycles remain
        return Pattern.P3 if n == 2 else Pattern.P4

    # acyclic from here on
    in_deg, out_deg = _degrees(nodes, edges)
    if n == 2 and len(edges) == 1:
        return Pattern.P1
    if all(d <= 1 for d in in_deg.values()) and all(d <= 1 for d in out_deg.values()):
        return Pattern.P2
    roots = [node for node in nodes if in_deg[node] == 0]
    if len(roots) == 1 and out_deg[roots[0]] == n - 1 and len(edges) == n - 1:
        return Pattern.P7
    return Pattern.P8


def classify_structural(chain: ContagionChain) -> PatternLabel:
    """Assign the structural pattern label (the ground-truth route)."""
    pattern = classify_topology(chain.node_ids, chain.contagion_edges)
    return PatternLabel(pattern=pattern, quadrant=PATTERN_QUADRANT[pattern], source_kind="structural")


class StructuralPatternClassifier(BaseEstimator):
    """Estimator facade over the topological decision procedure.

    Stateless: fit() is a no-op kept for pipeline compatibility, predict()
    maps chains to pattern names ("P1".."P8").
    """

    def fit(self, X: list[ContagionChain], y=None):
        return self

    def predict(self, X: list[ContagionChain]) -> list[str]:
        return [classify_structural(chain).pattern.value for chain in X]
