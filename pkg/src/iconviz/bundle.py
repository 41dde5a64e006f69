"""End-to-end analysis and the on-disk bundle format.

A bundle directory is the unit the read-only service loads:

    nodes.csv      canonical node table (round-trips through ingest)
    edges.csv      canonical merged edge table
    chains.json    chain table augmented with features/pattern/quadrant/cluster
    networks.json  per-network risk profiles (cells, pq, radius_rel)
    config.json    analysis configuration snapshot + content hash

Nothing in a bundle depends on wall-clock time or dict iteration hazards,
so re-analyzing identical inputs with identical configuration reproduces
every file byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .contagion import ContagionChain, chain_record, extract_chains
from .errors import BundleLoadFailureError, IngestError, IoFailureError
from .features import compute_features, standardize_features
from .graph import NetworkIndex, build_networks
from .ingest import Dataset, load_dataset, parse_edge_table, parse_node_table
from .patterns import Pattern, classify_structural
from .riskmetrics import (
    NetworkRiskProfile,
    PatternRiskCell,
    build_risk_profiles,
    profile_record,
)
from .spectral import build_similarity, kmeans_cluster, spectral_embed

log = logging.getLogger("iconviz.bundle")

BUNDLE_FILES = ("nodes.csv", "edges.csv", "chains.json", "networks.json", "config.json")


@dataclass
class AnalysisConfig:
    """All knobs and tolerances of one analysis run, in one record."""

    k: int | None = 8
    sigma: float | None = None        # None -> median pairwise distance
    seed: int = 0
    spectral_max_chains: int = 2000   # beyond this, cluster = pattern index
    kmeans_restarts: int = 10
    kmeans_max_iter: int = 300
    kmeans_tol: float = 1e-6
    zero_eigenvalue_rel_tol: float = 1e-8


@dataclass
class AnalysisBundle:
    dataset: Dataset
    index: NetworkIndex
    chains: list[ContagionChain]
    chain_records: list[dict]
    profiles: dict[int, NetworkRiskProfile]
    snapshot: dict = field(default_factory=dict)


def _sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


def _canonical_json(document) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def config_hash(snapshot: dict) -> str:
    stripped = {key: value for key, value in snapshot.items() if key != "config_hash"}
    return hashlib.sha256(_canonical_json(stripped).encode("utf-8")).hexdigest()


def analyze_dataset(ds: Dataset, config: AnalysisConfig | None = None) -> AnalysisBundle:
    """Run the full pipeline: networks -> chains -> labels -> risk profiles."""
    config = config or AnalysisConfig()
    index = build_networks(ds)

    chains: list[ContagionChain] = []
    for net in sorted(index.networks, key=lambda n: n.network_id):
        chains.extend(extract_chains(net, ds.corporations, start_id=len(chains)))

    features = [compute_features(chain) for chain in chains]
    labels = [classify_structural(chain) for chain in chains]
    patterns = [label.pattern for label in labels]

    k_effective: int | None = None
    sigma_effective: float | None = None
    spectral_skipped = len(chains) < 2 or len(chains) > config.spectral_max_chains
    if spectral_skipped:
        # structural pattern index stands in for a cluster id
        clusters = [list(Pattern).index(p) for p in patterns]
        if len(chains) > config.spectral_max_chains:
            log.warning(
                "spectral stage skipped: %d chains exceed the %d-chain cap",
                len(chains),
                config.spectral_max_chains,
            )
    else:
        matrix = standardize_features(features)
        model = build_similarity(matrix, config.sigma)
        k_request = min(config.k, len(chains)) if config.k is not None else None
        model = spectral_embed(model, k_request)
        assignments = kmeans_cluster(
            model.embedding,
            model.k,
            config.seed,
            config.kmeans_restarts,
            config.kmeans_max_iter,
            config.kmeans_tol,
        )
        clusters = [int(c) for c in assignments]
        k_effective = model.k
        sigma_effective = model.sigma

    labeled_by_network: dict[int, list[tuple[ContagionChain, Pattern]]] = {}
    for chain, pattern in zip(chains, patterns):
        labeled_by_network.setdefault(chain.network_id, []).append((chain, pattern))
    profiles = build_risk_profiles(index.networks, ds.corporations, labeled_by_network)

    chain_records = []
    for chain, feats, label, cluster in zip(chains, features, labels, clusters):
        record = chain_record(chain)
        record["features"] = {
            "n": feats.n_nodes,
            "e": feats.n_edges,
            "density": feats.density,
            "avg_clustering": feats.avg_clustering,
            "avg_path_len": feats.avg_path_length,
        }
        record["pattern"] = label.pattern.value
        record["quadrant"] = label.quadrant.value
        record["cluster"] = cluster
        chain_records.append(record)
    chain_records.sort(key=lambda r: (r["network_id"], r["chain_id"]))

    snapshot = {
        "version": __version__,
        "k_requested": config.k,
        "k_effective": k_effective,
        "sigma_requested": config.sigma if config.sigma is not None else "auto",
        "sigma_effective": sigma_effective,
        "seed": config.seed,
        "spectral_max_chains": config.spectral_max_chains,
        "spectral_skipped": spectral_skipped,
        "tolerances": {
            "kmeans_restarts": config.kmeans_restarts,
            "kmeans_max_iter": config.kmeans_max_iter,
            "kmeans_tol": config.kmeans_tol,
            "zero_eigenvalue_rel_tol": config.zero_eigenvalue_rel_tol,
        },
        "counts": {
            "corporations": len(ds.corporations),
            "edges": len(ds.edges),
            "networks": len(index.networks),
            "chains": len(chains),
        },
    }
    return AnalysisBundle(
        dataset=ds,
        index=index,
        chains=chains,
        chain_records=chain_records,
        profiles=profiles,
        snapshot=snapshot,
    )


def analyze_files(
    node_path: str | Path, edge_path: str | Path, config: AnalysisConfig | None = None
) -> AnalysisBundle:
    ds = load_dataset(node_path, edge_path)
    bundle = analyze_dataset(ds, config)
    bundle.snapshot["inputs"] = {
        "nodes": str(node_path),
        "nodes_sha256": _sha256_file(node_path),
        "edges": str(edge_path),
        "edges_sha256": _sha256_file(edge_path),
    }
    return bundle


def write_bundle(bundle: AnalysisBundle, out_dir: str | Path) -> Path:
    """Write the five bundle files with canonical formatting."""
    from .ingest import write_edge_table, write_node_table

    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        write_node_table(bundle.dataset.corporations, out / "nodes.csv")
        write_edge_table(bundle.dataset.edges, out / "edges.csv")
        (out / "chains.json").write_text(_canonical_json(bundle.chain_records), encoding="utf-8")
        by_id = {net.network_id: net for net in bundle.index.networks}
        network_records = [
            profile_record(bundle.profiles[net_id], by_id[net_id])
            for net_id in sorted(by_id)
        ]
        (out / "networks.json").write_text(_canonical_json(network_records), encoding="utf-8")
        snapshot = dict(bundle.snapshot)
        snapshot["config_hash"] = config_hash(snapshot)
        (out / "config.json").write_text(_canonical_json(snapshot), encoding="utf-8")
    except OSError as exc:
        raise IoFailureError(str(out), exc) from exc
    return out


@dataclass
class ServedBundle:
    """Immutable view of a bundle directory, shaped for the HTTP service."""

    dataset: Dataset
    index: NetworkIndex
    chain_records: list[dict]
    network_records: list[dict]
    config: dict
    config_hash: str

    def __post_init__(self) -> None:
        self.chain_by_id = {record["chain_id"]: record for record in self.chain_records}
        self.chains_by_network: dict[int, list[dict]] = {}
        for record in self.chain_records:
            self.chains_by_network.setdefault(record["network_id"], []).append(record)
        self.network_record_by_id = {record["network_id"]: record for record in self.network_records}

    def cells_for(self, network_id: int) -> dict[Pattern, PatternRiskCell]:
        record = self.network_record_by_id[network_id]
        cells = {}
        for cell in record["cells"]:
            pattern = Pattern(cell["pattern"])
            cells[pattern] = PatternRiskCell(
                pattern=pattern,
                frequency=cell["f"],
                max_influence=cell["v"],
                effect=cell["effect"],
            )
        return cells


def load_bundle(bundle_dir: str | Path) -> ServedBundle:
    """Load and cross-check a bundle directory."""
    root = Path(bundle_dir)
    for name in BUNDLE_FILES:
        if not (root / name).is_file():
            raise BundleLoadFailureError(str(root), f"missing {name}")
    try:
        corporations = parse_node_table(root / "nodes.csv")
        edges = parse_edge_table(root / "edges.csv", corporations)
        ds = Dataset(corporations=corporations, edges=edges)
        chain_records = json.loads((root / "chains.json").read_text(encoding="utf-8"))
        network_records = json.loads((root / "networks.json").read_text(encoding="utf-8"))
        config = json.loads((root / "config.json").read_text(encoding="utf-8"))
    except (OSError, ValueError, IngestError) as exc:
        raise BundleLoadFailureError(str(root), str(exc)) from exc
    index = build_networks(ds)
    known_networks = {net.network_id for net in index.networks}
    for record in chain_records:
        if record["network_id"] not in known_networks:
            raise BundleLoadFailureError(str(root), f"chain {record['chain_id']} references unknown network")
    stated_hash = config.get("config_hash", "")
    if config_hash(config) != stated_hash:
        raise BundleLoadFailureError(str(root), "config hash mismatch")
    return ServedBundle(
        dataset=ds,
        index=index,
        chain_records=chain_records,
        network_records=network_records,
        config=config,
        config_hash=stated_hash,
    )
