"""Per-network contagion risk quantification.

Severity of a pattern inside a network is its contagion effect: how often
the pattern occurs times how many other nodes its worst instance could
infect (probability times consequence, as in a standard risk matrix). The
network-level contagion score combines total exposure with the instance
share of each contagion behavior, and drives the four-slice badge shown
on the network grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .contagion import ContagionChain
from .errors import NoExposureAnywhereError
from .graph import GuaranteeNetwork
from .ingest import Corporation
from .patterns import (
    CANONICAL_NODE_COUNT,
    PATTERN_QUADRANT,
    QUADRANT_PATTERNS,
    Pattern,
    Quadrant,
)

# Risk level by contagion behavior: loop-mutual spreads most easily (high),
# star-like distresses many companies at once (middle), mutual pairs are
# fragile (low), chain-like breaks easily (safe).
DEFAULT_RISK_COLORS: dict[Quadrant, str] = {
    Quadrant.QIII: "#d73027",  # high
    Quadrant.QIV: "#fc8d59",  # middle
    Quadrant.QII: "#fee08b",  # low
    Quadrant.QI: "#1a9850",  # safe
}

# Fixed 2x4 matrix: mutual | chain-like on top, loop-mutual | star-like below.
CEM_GRID_POSITION: dict[Pattern, tuple[int, int]] = {
    Pattern.P3: (0, 0),
    Pattern.P4: (0, 1),
    Pattern.P1: (0, 2),
    Pattern.P2: (0, 3),
    Pattern.P5: (1, 0),
    Pattern.P6: (1, 1),
    Pattern.P7: (1, 2),
    Pattern.P8: (1, 3),
}

# Range-of-influence axis labels; canonical node counts collide (P1 = P3,
# P2 = P4 = P5) so sub-letters keep the cells distinguishable.
RANGE_OF_INFLUENCE_LABEL: dict[Pattern, str] = {
    Pattern.P1: "2a",
    Pattern.P3: "2b",
    Pattern.P2: "3a",
    Pattern.P4: "3b",
    Pattern.P5: "3c",
    Pattern.P6: "4+",
    Pattern.P7: "n",
    Pattern.P8: "n+",
}


@dataclass(frozen=True)
class PatternRiskCell:
    pattern: Pattern
    frequency: int       # merged chain instances of this pattern
    max_influence: int   # worst-case infected-others count, max(n_nodes - 1)
    effect: int          # frequency * max_influence


@dataclass(frozen=True)
class ContagionScore:
    eda: int
    pq: tuple[float, float, float, float]  # instance share per QI..QIV


@dataclass(frozen=True)
class BadgeGeometry:
    radius_rel: float
    slices: tuple[float, float, float, float]  # degrees per QI..QIV


@dataclass
class NetworkRiskProfile:
    network_id: int
    cells: dict[Pattern, PatternRiskCell]
    score: ContagionScore
    badge: BadgeGeometry
    chain_count: int = field(default=0)


def pattern_cells(labeled_chains: list[tuple[ContagionChain, Pattern]]) -> dict[Pattern, PatternRiskCell]:
    """The eight (frequency, max influence, effect) cells for one network."""
    cells: dict[Pattern, PatternRiskCell] = {}
    for pattern in Pattern:
        instances = [chain for chain, label in labeled_chains if label == pattern]
        frequency = len(instances)
        max_influence = max((chain.n_nodes - 1 for chain in instances), default=0)
        cells[pattern] = PatternRiskCell(
            pattern=pattern,
            frequency=frequency,
            max_influence=max_influence,
            effect=frequency * max_influence,
        )
    return cells


def contagion_score(
    net: GuaranteeNetwork,
    corporations: dict[str, Corporation],
    cells: dict[Pattern, PatternRiskCell],
) -> ContagionScore:
    """Network exposure (eda) plus the instance share of each behavior (pq)."""
    eda = sum(corporations[node].exposure for node in net.node_ids)
    total = sum(cell.frequency for cell in cells.values())
    if total == 0:
        pq = (0.0, 0.0, 0.0, 0.0)
    else:
        pq = tuple(
            sum(cells[p].frequency for p in QUADRANT_PATTERNS[q]) / total
            for q in (Quadrant.QI, Quadrant.QII, Quadrant.QIII, Quadrant.QIV)
        )
    return ContagionScore(eda=eda, pq=pq)


def badge_geometry(score: ContagionScore, global_max_eda: int) -> BadgeGeometry:
    """Badge radius relative to the riskiest network, slice spans in degrees."""
    if global_max_eda <= 0:
        raise NoExposureAnywhereError("every network has zero exposure")
    return BadgeGeometry(
        radius_rel=score.eda / global_max_eda,
        slices=tuple(share * 360.0 for share in score.pq),
    )


def risk_color(quadrant: Quadrant, palette: dict[Quadrant, str] | None = None) -> str:
    return (palette or DEFAULT_RISK_COLORS)[quadrant]


def cem_layout(
    cells: dict[Pattern, PatternRiskCell],
    palette: dict[Quadrant, str] | None = None,
) -> list[dict]:
    """Fixed grid data for the contagion effect matrix view.

    All eight cells are always present (zero counts render as empty grid
    positions); the count goes in the top-left corner of each cell.
    """
    layout = []
    for pattern in Pattern:
        cell = cells[pattern]
        quadrant = PATTERN_QUADRANT[pattern]
        row, col = CEM_GRID_POSITION[pattern]
        layout.append(
            {
                "pattern": pattern.value,
                "quadrant": quadrant.value,
                "color": risk_color(quadrant, palette),
                "row": row,
                "col": col,
                "range_of_influence": RANGE_OF_INFLUENCE_LABEL[pattern],
                "canonical_nodes": CANONICAL_NODE_COUNT[pattern],
                "count": cell.frequency,
                "max_influence": cell.max_influence,
                "effect": cell.effect,
            }
        )
    return layout


def build_risk_profiles(
    networks: list[GuaranteeNetwork],
    corporations: dict[str, Corporation],
    labeled_chains_by_network: dict[int, list[tuple[ContagionChain, Pattern]]],
) -> dict[int, NetworkRiskProfile]:
    """Profiles for every network, badge radii scaled to the global max EDA.

    When no network carries any exposure the badge radius is 0 everywhere
    (calling badge_geometry directly with a zero max still raises).
    """
    scores: dict[int, ContagionScore] = {}
    cells_by_network: dict[int, dict[Pattern, PatternRiskCell]] = {}
    for net in networks:
        labeled = labeled_chains_by_network.get(net.network_id, [])
        cells = pattern_cells(labeled)
        cells_by_network[net.network_id] = cells
        scores[net.network_id] = contagion_score(net, corporations, cells)
    global_max_eda = max((score.eda for score in scores.values()), default=0)

    profiles: dict[int, NetworkRiskProfile] = {}
    for net in networks:
        score = scores[net.network_id]
        if global_max_eda > 0:
            badge = badge_geometry(score, global_max_eda)
        else:
            badge = BadgeGeometry(radius_rel=0.0, slices=tuple(s * 360.0 for s in score.pq))
        profiles[net.network_id] = NetworkRiskProfile(
            network_id=net.network_id,
            cells=cells_by_network[net.network_id],
            score=score,
            badge=badge,
            chain_count=len(labeled_chains_by_network.get(net.network_id, [])),
        )
    return profiles


def profile_record(profile: NetworkRiskProfile, net: GuaranteeNetwork) -> dict:
    """Canonical networks.json record for one network."""
    return {
        "network_id": profile.network_id,
        "node_count": net.node_count,
        "edge_count": net.edge_count,
        "eda": profile.score.eda,
        "cells": [
            {
                "pattern": pattern.value,
                "f": profile.cells[pattern].frequency,
                "v": profile.cells[pattern].max_influence,
                "effect": profile.cells[pattern].effect,
            }
            for pattern in Pattern
        ],
        "pq": list(profile.score.pq),
        "radius_rel": profile.badge.radius_rel,
    }
