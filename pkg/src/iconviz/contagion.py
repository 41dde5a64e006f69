"""Contagion chain extraction.

A default at node s spreads along reversed guarantee edges; the chain is
the subgraph the default can reach. Every node with at least one outgoing
contagion edge (i.e. every borrower) can start an outbreak, so one chain
is generated per such node and chains with identical reachable sets are
merged into a single instance carrying all of its outbreak sources.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import IoFailureError, UnknownNodeError
from .graph import GuaranteeNetwork, reverse_graph
from .ingest import Corporation, Dataset


@dataclass(frozen=True)
class ContagionChain:
    """Deduplicated reversed-reachability subgraph with its outbreak sources.

    `contagion_edges` point infector -> infected (borrower -> guarantor)
    and are the full induced contagion subgraph on `node_ids`, not just a
    traversal tree: every edge between infected nodes is a live
    transmission path.
    """

    chain_id: int
    network_id: int
    node_ids: frozenset[str]
    contagion_edges: frozenset[tuple[str, str]]
    sources: frozenset[str]
    exposure: int
    guarantee_amount: int

    @property
    def n_nodes(self) -> int:
        return len(self.node_ids)


def reachable_from(adjacency: dict[str, tuple[str, ...]], start: str) -> frozenset[str]:
    """Breadth-first reachable set including the start node."""
    seen = {start}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for successor in adjacency[node]:
            if successor not in seen:
                seen.add(successor)
                queue.append(successor)
    return frozenset(seen)


def extract_chains(
    net: GuaranteeNetwork,
    corporations: dict[str, Corporation],
    start_id: int = 0,
) -> list[ContagionChain]:
    """All merged contagion chains of one network.

    Chains are ordered by their sorted node-id tuple so the result does not
    depend on input edge order; ids are assigned sequentially from
    `start_id` (the caller threads a global counter across networks).
    """
    contagion = reverse_graph(net)
    by_node_set: dict[frozenset[str], set[str]] = {}
    for source in net.node_ids:
        if not contagion[source]:
            continue
        reached = reachable_from(contagion, source)
        by_node_set.setdefault(reached, set()).add(source)

    chains = []
    ordered = sorted(by_node_set.items(), key=lambda item: tuple(sorted(item[0])))
    for offset, (node_set, generators) in enumerate(ordered):
        if len(node_set) < 2:
            continue
        induced = frozenset(
            (node, successor)
            for node in node_set
            for successor in contagion[node]
            if successor in node_set
        )
        exposure = sum(corporations[node].exposure for node in node_set)
        guarantee_amount = sum(
            edge.amount
            for edge in net.edges
            if (edge.borrower_id, edge.guarantor_id) in induced
        )
        chains.append(
            ContagionChain(
                chain_id=start_id + offset,
                network_id=net.network_id,
                node_ids=node_set,
                contagion_edges=induced,
                sources=frozenset(generators),
                exposure=exposure,
                guarantee_amount=guarantee_amount,
            )
        )
    return chains


def chain_financials(chain: ContagionChain, ds: Dataset) -> tuple[int, int]:
    """Recompute (exposure, guarantee_amount) for a chain from the dataset.

    Exposure sums node exposures; guarantee_amount sums the original
    guarantee edges whose reversed counterpart is a contagion edge.
    """
    exposure = 0
    for node in sorted(chain.node_ids):
        corp = ds.corporations.get(node)
        if corp is None:
            raise UnknownNodeError(node)
        exposure += corp.exposure
    guarantee_amount = sum(
        edge.amount
        for edge in ds.edges
        if (edge.borrower_id, edge.guarantor_id) in chain.contagion_edges
    )
    return exposure, guarantee_amount


def with_financials(chain: ContagionChain, ds: Dataset) -> ContagionChain:
    exposure, guarantee_amount = chain_financials(chain, ds)
    return replace(chain, exposure=exposure, guarantee_amount=guarantee_amount)


def chain_record(chain: ContagionChain) -> dict:
    """Canonical JSON-ready record for one chain (sorted member lists)."""
    return {
        "chain_id": chain.chain_id,
        "network_id": chain.network_id,
        "nodes": sorted(chain.node_ids),
        "edges": sorted([a, b] for a, b in chain.contagion_edges),
        "sources": sorted(chain.sources),
        "exposure": chain.exposure,
        "guarantee_amount": chain.guarantee_amount,
    }


def chains_to_table(chains: list[ContagionChain]) -> list[dict]:
    """Serialize chains as records ordered by (network_id, chain_id)."""
    ordered = sorted(chains, key=lambda c: (c.network_id, c.chain_id))
    return [chain_record(chain) for chain in ordered]


def write_chain_table(records: list[dict], path: str | Path) -> None:
    """Write the chain table JSON document (canonical formatting)."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(records, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise IoFailureError(str(path), exc) from exc


def parse_chain_table(path: str | Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
