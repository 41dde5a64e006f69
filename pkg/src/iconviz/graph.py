"""Guarantee graph construction and decomposition into independent networks.

An "independent network" is one weakly connected component of the directed
guarantee graph; isolated corporations form singleton networks and are kept
so node-level views can still show them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .ingest import Dataset, GuaranteeEdge


@dataclass(frozen=True)
class GuaranteeNetwork:
    """One weakly connected component of the guarantee graph."""

    network_id: int
    node_ids: frozenset[str]
    edges: tuple[GuaranteeEdge, ...]

    @property
    def node_count(self) -> int:
        return len(self.node_ids)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass
class NetworkIndex:
    """All networks of a dataset plus the node -> network lookup.

    `networks` is kept in display order: node_count descending, ties by
    ascending network_id (complex networks first).
    """

    networks: list[GuaranteeNetwork]
    node_to_network: dict[str, int]

    def by_id(self, network_id: int) -> GuaranteeNetwork:
        return self._by_id[network_id]

    def __post_init__(self) -> None:
        self._by_id = {net.network_id: net for net in self.networks}


def build_networks(ds: Dataset) -> NetworkIndex:
    """Decompose the dataset into weakly connected guarantee networks.

    Network ids are assigned by first-seen node order (node-table order),
    so they do not depend on edge order.
    """
    undirected: dict[str, list[str]] = {corp_id: [] for corp_id in ds.corporations}
    for edge in ds.edges:
        undirected[edge.guarantor_id].append(edge.borrower_id)
        undirected[edge.borrower_id].append(edge.guarantor_id)

    component_of: dict[str, int] = {}
    next_id = 0
    for corp_id in ds.corporations:
        if corp_id in component_of:
            continue
        queue = deque([corp_id])
        component_of[corp_id] = next_id
        while queue:
            node = queue.popleft()
            for neighbor in undirected[node]:
                if neighbor not in component_of:
                    component_of[neighbor] = next_id
                    queue.append(neighbor)
        next_id += 1

    members: dict[int, list[str]] = {i: [] for i in range(next_id)}
    for corp_id in ds.corporations:
        members[component_of[corp_id]].append(corp_id)
    edges_of: dict[int, list[GuaranteeEdge]] = {i: [] for i in range(next_id)}
    for edge in ds.edges:
        edges_of[component_of[edge.guarantor_id]].append(edge)

    networks = [
        GuaranteeNetwork(
            network_id=i,
            node_ids=frozenset(members[i]),
            edges=tuple(edges_of[i]),
        )
        for i in range(next_id)
    ]
    networks.sort(key=lambda net: (-net.node_count, net.network_id))
    return NetworkIndex(networks=networks, node_to_network=component_of)


def sort_networks(idx: NetworkIndex) -> list[int]:
    """Network ids in display order: node_count descending, ties id ascending."""
    ordered = sorted(idx.networks, key=lambda net: (-net.node_count, net.network_id))
    return [net.network_id for net in ordered]


def reverse_adjacency(adjacency: dict[str, tuple[str, ...]]) -> dict[str, tuple[str, ...]]:
    """Flip every directed edge of an adjacency mapping (an involution)."""
    flipped: dict[str, list[str]] = {node: [] for node in adjacency}
    for source, successors in adjacency.items():
        for target in successors:
            flipped[target].append(source)
    return {node: tuple(successors) for node, successors in flipped.items()}


def guarantee_adjacency(net: GuaranteeNetwork) -> dict[str, tuple[str, ...]]:
    """Adjacency along the guarantee arrows (guarantor -> borrower)."""
    adjacency: dict[str, list[str]] = {node: [] for node in net.node_ids}
    for edge in net.edges:
        adjacency[edge.guarantor_id].append(edge.borrower_id)
    return {node: tuple(successors) for node, successors in adjacency.items()}


def reverse_graph(net: GuaranteeNetwork) -> dict[str, tuple[str, ...]]:
    """Adjacency in contagion direction: guarantee u->v becomes v->u.

    Every node of the network keys the mapping, sinks included.
    """
    return reverse_adjacency(guarantee_adjacency(net))
