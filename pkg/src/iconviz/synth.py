"""Synthetic guarantee datasets with planted contagion motifs.

Stands in for confidential loan records: every motif is written in
contagion direction first, then flipped into guarantee edges, so the
extraction + classification pipeline must recover the planted pattern.
Isolated mode keeps each motif as its own network (ground truth holds);
composite mode stitches consecutive motifs through fresh bridge borrowers,
producing mixed networks with no pattern guarantee, like real data.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidSpecError, IoFailureError
from .ingest import Corporation, Dataset, GuaranteeEdge, write_edge_table, write_node_table
from .patterns import Pattern

CANONICAL_MIN_NODES: dict[Pattern, int] = {
    Pattern.P1: 2,
    Pattern.P2: 3,
    Pattern.P3: 2,
    Pattern.P4: 3,
    Pattern.P5: 3,
    Pattern.P6: 4,
    Pattern.P7: 3,
    Pattern.P8: 4,
}

EXTENSIBLE_PATTERNS = (Pattern.P2, Pattern.P4, Pattern.P6, Pattern.P7, Pattern.P8)

DEFAULT_SIZE_RANGES: dict[Pattern, tuple[int, int]] = {
    Pattern.P2: (3, 6),
    Pattern.P4: (3, 6),
    Pattern.P6: (4, 7),
    Pattern.P7: (3, 6),
    Pattern.P8: (4, 8),
}

BUSINESS_TYPES = ("manufacturing", "retail", "services", "construction", "logistics", "agriculture")
SIZE_CLASSES = ("micro", "small", "medium", "large")


@dataclass(frozen=True)
class FinancialParams:
    """Log-normal exposure/capital (heavy-tailed, like real books) and a
    uniform integer range for guarantee amounts, all in minor units."""

    exposure_mu: float = 8.0
    exposure_sigma: float = 1.2
    capital_mu: float = 9.0
    capital_sigma: float = 0.8
    guarantee_min: int = 100
    guarantee_max: int = 100_000


@dataclass
class GeneratorSpec:
    seed: int = 0
    motif_counts: dict[Pattern, int] = field(default_factory=dict)
    size_ranges: dict[Pattern, tuple[int, int]] = field(default_factory=dict)
    financials: FinancialParams = field(default_factory=FinancialParams)
    mode: str = "isolated"
    composite_join_prob: float = 0.3

    def validate(self) -> None:
        if self.mode not in ("isolated", "composite"):
            raise InvalidSpecError(f"unknown mode {self.mode!r}")
        if not 0.0 <= self.composite_join_prob <= 1.0:
            raise InvalidSpecError("composite_join_prob must be in [0, 1]")
        for pattern, count in self.motif_counts.items():
            if count < 0:
                raise InvalidSpecError(f"negative count for {pattern.value}")
        for pattern, (lo, hi) in self.size_ranges.items():
            if pattern not in EXTENSIBLE_PATTERNS:
                raise InvalidSpecError(f"{pattern.value} has a fixed canonical size")
            if lo < CANONICAL_MIN_NODES[pattern]:
                raise InvalidSpecError(
                    f"{pattern.value} needs >= {CANONICAL_MIN_NODES[pattern]} nodes, got {lo}"
                )
            if lo > hi:
                raise InvalidSpecError(f"empty size range for {pattern.value}")
        if self.financials.guarantee_min < 1 or self.financials.guarantee_min > self.financials.guarantee_max:
            raise InvalidSpecError("guarantee amount range must satisfy 1 <= min <= max")

    def size_range(self, pattern: Pattern) -> tuple[int, int]:
        if pattern in self.size_ranges:
            return self.size_ranges[pattern]
        if pattern in DEFAULT_SIZE_RANGES:
            return DEFAULT_SIZE_RANGES[pattern]
        fixed = CANONICAL_MIN_NODES[pattern]
        return (fixed, fixed)


@dataclass
class ScaleReport:
    expected_nodes: int
    expected_networks: int
    expected_motifs: int
    paper_scale: bool


def spec_from_json(path: str | Path, seed_override: int | None = None) -> GeneratorSpec:
    """Load a generator spec document; unknown keys are rejected."""
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    known = {"seed", "mode", "motif_counts", "size_ranges", "composite_join_prob", "financials"}
    unknown = set(raw) - known
    if unknown:
        raise InvalidSpecError(f"unknown spec keys: {sorted(unknown)}")
    try:
        motif_counts = {Pattern(p): int(c) for p, c in raw.get("motif_counts", {}).items()}
        size_ranges = {
            Pattern(p): (int(lo), int(hi)) for p, (lo, hi) in raw.get("size_ranges", {}).items()
        }
        financials = FinancialParams(**raw.get("financials", {}))
    except (ValueError, TypeError) as exc:
        raise InvalidSpecError(str(exc)) from exc
    spec = GeneratorSpec(
        seed=seed_override if seed_override is not None else int(raw.get("seed", 0)),
        motif_counts=motif_counts,
        size_ranges=size_ranges,
        financials=financials,
        mode=raw.get("mode", "isolated"),
        composite_join_prob=float(raw.get("composite_join_prob", 0.3)),
    )
    spec.validate()
    return spec


def _motif_contagion_edges(pattern: Pattern, n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Edges of one motif in contagion direction over local indices 0..n-1."""
    if pattern is Pattern.P1:
        return [(0, 1)]
    if pattern is Pattern.P2:
        return [(i, i + 1) for i in range(n - 1)]
    if pattern is Pattern.P3:
        return [(0, 1), (1, 0)]
    if pattern is Pattern.P4:
        # mutual pair plus an out-path hanging off it
        edges = [(0, 1), (1, 0)]
        edges += [(i, i + 1) for i in range(1, n - 1)]
        return edges
    if pattern is Pattern.P5:
        return [(i, (i + 1) % n) for i in range(n)]
    if pattern is Pattern.P6:
        cycle_len = rng.randint(3, n - 1)
        edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
        for pendant in range(cycle_len, n):
            edges.append((rng.randrange(cycle_len), pendant))
        return edges
    if pattern is Pattern.P7:
        return [(0, leaf) for leaf in range(1, n)]
    if pattern is Pattern.P8:
        # out-tree, root branching >= 2, at least one grandchild
        edges = [(0, 1), (0, 2), (1, 3)]
        for node in range(4, n):
            edges.append((rng.randrange(node), node))
        return edges
    raise InvalidSpecError(f"unknown pattern {pattern}")


def _make_corporation(corp_id: str, fin: FinancialParams, rng: random.Random) -> Corporation:
    return Corporation(
        id=corp_id,
        name=None,
        business_type=rng.choice(BUSINESS_TYPES),
        size_class=rng.choice(SIZE_CLASSES),
        registered_capital=max(0, int(round(rng.lognormvariate(fin.capital_mu, fin.capital_sigma)))),
        exposure=max(0, int(round(rng.lognormvariate(fin.exposure_mu, fin.exposure_sigma)))),
    )


def generate(spec: GeneratorSpec) -> tuple[Dataset, dict[str, str]]:
    """Build the dataset and the motif-id -> planted-pattern map.

    The seed fully determines the output: one RNG drives motif sizes,
    shapes, stitching, and financials in a fixed iteration order.
    """
    spec.validate()
    rng = random.Random(spec.seed)
    fin = spec.financials

    corporations: dict[str, Corporation] = {}
    edges: list[GuaranteeEdge] = []
    ground_truth: dict[str, str] = {}
    motif_nodes: list[list[str]] = []

    motif_index = 0
    for pattern in Pattern:
        count = spec.motif_counts.get(pattern, 0)
        lo, hi = spec.size_range(pattern)
        for _ in range(count):
            motif_id = f"m{motif_index:05d}"
            motif_index += 1
            n = rng.randint(lo, hi)
            node_ids = [f"{motif_id}n{j:02d}" for j in range(n)]
            for node_id in node_ids:
                corporations[node_id] = _make_corporation(node_id, fin, rng)
            for infector, infected in _motif_contagion_edges(pattern, n, rng):
                # reversed: the infected guarantor guarantees the infecting borrower
                edges.append(
                    GuaranteeEdge(
                        guarantor_id=node_ids[infected],
                        borrower_id=node_ids[infector],
                        amount=rng.randint(fin.guarantee_min, fin.guarantee_max),
                    )
                )
            ground_truth[motif_id] = pattern.value
            motif_nodes.append(node_ids)

    if spec.mode == "composite" and len(motif_nodes) > 1:
        bridge_index = 0
        for i in range(1, len(motif_nodes)):
            if rng.random() >= spec.composite_join_prob:
                continue
            bridge_id = f"b{bridge_index:05d}"
            bridge_index += 1
            corporations[bridge_id] = _make_corporation(bridge_id, fin, rng)
            for member in (rng.choice(motif_nodes[i - 1]), rng.choice(motif_nodes[i])):
                edges.append(
                    GuaranteeEdge(
                        guarantor_id=member,
                        borrower_id=bridge_id,
                        amount=rng.randint(fin.guarantee_min, fin.guarantee_max),
                    )
                )

    return Dataset(corporations=corporations, edges=edges, provenance=None), ground_truth


def scale_profile(spec: GeneratorSpec) -> ScaleReport:
    """Predicted dataset scale, for matching the real-data order of magnitude
    (tens of thousands of businesses across thousands of networks)."""
    spec.validate()
    total_motifs = sum(spec.motif_counts.values())
    expected_nodes = 0.0
    for pattern, count in spec.motif_counts.items():
        lo, hi = spec.size_range(pattern)
        expected_nodes += count * (lo + hi) / 2.0
    if spec.mode == "composite" and total_motifs > 1:
        expected_joins = (total_motifs - 1) * spec.composite_join_prob
        expected_nodes += expected_joins  # one bridge borrower per join
        expected_networks = total_motifs - expected_joins
    else:
        expected_networks = float(total_motifs)
    report = ScaleReport(
        expected_nodes=int(round(expected_nodes)),
        expected_networks=int(round(expected_networks)),
        expected_motifs=total_motifs,
        paper_scale=expected_nodes >= 20_000 and expected_networks >= 3_000,
    )
    return report


def write_generated(ds: Dataset, ground_truth: dict[str, str], out_dir: str | Path) -> None:
    """Write nodes.csv, edges.csv, and ground_truth.json into out_dir."""
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        write_node_table(ds.corporations, out / "nodes.csv")
        write_edge_table(ds.edges, out / "edges.csv")
        with open(out / "ground_truth.json", "w", encoding="utf-8") as fh:
            json.dump(ground_truth, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise IoFailureError(str(out), exc) from exc
