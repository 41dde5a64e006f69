"""Contagion-risk analytics for networked-guarantee loans.

The pipeline: parse node/edge tables, split the guarantee graph into
independent networks, extract and deduplicate default-contagion chains,
describe and classify each chain into one of eight patterns, and quantify
per-network risk (contagion effect matrix, contagion score, badge). A CLI
and a read-only HTTP API expose analyzed bundles to the risk console.
"""

__version__ = "0.1.0"

from .contagion import ContagionChain, chain_financials, chains_to_table, extract_chains
from .features import ChainFeatureExtractor, ChainFeatures, compute_features, standardize_features
from .graph import GuaranteeNetwork, NetworkIndex, build_networks, reverse_graph, sort_networks
from .ingest import (
    Corporation,
    Dataset,
    GuaranteeEdge,
    load_dataset,
    parse_edge_table,
    parse_node_table,
    validate_dataset,
)
from .patterns import (
    Pattern,
    PatternLabel,
    Quadrant,
    StructuralPatternClassifier,
    classify_structural,
)
from .riskmetrics import (
    BadgeGeometry,
    ContagionScore,
    NetworkRiskProfile,
    PatternRiskCell,
    badge_geometry,
    cem_layout,
    contagion_score,
    pattern_cells,
    risk_color,
)
from .spectral import (
    SpectralChainClusterer,
    SpectralModel,
    align_clusters,
    build_similarity,
    kmeans_cluster,
    spectral_embed,
)
from .synth import GeneratorSpec, generate, scale_profile

__all__ = [
    "__version__",
    "BadgeGeometry",
    "ChainFeatureExtractor",
    "ChainFeatures",
    "ContagionChain",
    "ContagionScore",
    "Corporation",
    "Dataset",
    "GeneratorSpec",
    "GuaranteeEdge",
    "GuaranteeNetwork",
    "NetworkIndex",
    "NetworkRiskProfile",
    "Pattern",
    "PatternLabel",
    "PatternRiskCell",
    "Quadrant",
    "SpectralChainClusterer",
    "SpectralModel",
    "StructuralPatternClassifier",
    "align_clusters",
    "badge_geometry",
    "build_networks",
    "build_similarity",
    "cem_layout",
    "chain_financials",
    "chains_to_table",
    "classify_structural",
    "compute_features",
    "contagion_score",
    "extract_chains",
    "generate",
    "kmeans_cluster",
    "load_dataset",
    "parse_edge_table",
    "parse_node_table",
    "pattern_cells",
    "reverse_graph",
    "risk_color",
    "scale_profile",
    "sort_networks",
    "spectral_embed",
    "standardize_features",
    "validate_dataset",
]
