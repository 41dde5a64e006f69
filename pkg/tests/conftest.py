"""Shared builders and oracles for datasets and chains used across the suite."""

from __future__ import annotations

import numpy as np
import pytest

from iconviz.contagion import ContagionChain, reachable_from
from iconviz.ingest import Corporation, Dataset, GuaranteeEdge


def closure_rows(nodes: list[str], edges: list[tuple[str, str]]) -> dict[str, frozenset[str]]:
    """Brute-force boolean transitive closure (with self-reachability).

    Independent oracle for reachability: relaxes a dense boolean matrix to
    its fixed point, no traversal involved.
    """
    index = {node: i for i, node in enumerate(nodes)}
    n = len(nodes)
    reach = np.eye(n, dtype=bool)
    for a, b in edges:
        reach[index[a], index[b]] = True
    for _ in range(n):
        updated = reach | (reach @ reach)
        if (updated == reach).all():
            break
        reach = updated
    return {
        node: frozenset(nodes[j] for j in range(n) if reach[index[node], j])
        for node in nodes
    }


def corp(corp_id: str, exposure: int = 0, capital: int = 100,
         business_type: str = "manufacturing", size_class: str = "small") -> Corporation:
    return Corporation(
        id=corp_id,
        name=None,
        business_type=business_type,
        size_class=size_class,
        registered_capital=capital,
        exposure=exposure,
    )


def make_dataset(
    guarantee_edges: list[tuple[str, str]] | list[tuple[str, str, int]],
    exposures: dict[str, int] | None = None,
    extra_nodes: list[str] = (),
) -> Dataset:
    """Dataset from guarantee pairs; node set inferred, amounts default 10."""
    exposures = exposures or {}
    edges = []
    node_ids: list[str] = []
    for item in guarantee_edges:
        guarantor, borrower = item[0], item[1]
        amount = item[2] if len(item) == 3 else 10
        edges.append(GuaranteeEdge(guarantor, borrower, amount))
        for node in (guarantor, borrower):
            if node not in node_ids:
                node_ids.append(node)
    for node in extra_nodes:
        if node not in node_ids:
            node_ids.append(node)
    corporations = {node: corp(node, exposure=exposures.get(node, 0)) for node in node_ids}
    return Dataset(corporations=corporations, edges=edges)


def make_chain(
    contagion_edges: list[tuple[str, str]],
    chain_id: int = 0,
    network_id: int = 0,
    exposure: int = 0,
    guarantee_amount: int = 0,
) -> ContagionChain:
    """Chain directly from contagion-direction edges; sources recomputed."""
    nodes = frozenset(n for edge in contagion_edges for n in edge)
    adjacency: dict[str, list[str]] = {node: [] for node in nodes}
    for a, b in contagion_edges:
        adjacency[a].append(b)
    adjacency_t = {node: tuple(succ) for node, succ in adjacency.items()}
    sources = frozenset(
        node for node in nodes
        if adjacency_t[node] and reachable_from(adjacency_t, node) == nodes
    )
    return ContagionChain(
        chain_id=chain_id,
        network_id=network_id,
        node_ids=nodes,
        contagion_edges=frozenset(contagion_edges),
        sources=sources,
        exposure=exposure,
        guarantee_amount=guarantee_amount,
    )


@pytest.fixture
def p1_dataset(tmp_path):
    """Smallest analyzable dataset: one guarantee edge A -> B."""
    nodes = tmp_path / "nodes.csv"
    edges = tmp_path / "edges.csv"
    nodes.write_text(
        "id,name,business_type,size_class,registered_capital,exposure\n"
        "A,,manufacturing,small,100,40\n"
        "B,,retail,micro,80,25\n"
    )
    edges.write_text("guarantor_id,borrower_id,amount\nA,B,50\n")
    return nodes, edges
