import json

import pytest

from iconviz.bundle import analyze_dataset, AnalysisConfig
from iconviz.errors import InvalidSpecError
from iconviz.graph import build_networks
from iconviz.patterns import Pattern
from iconviz.synth import (
    GeneratorSpec,
    generate,
    scale_profile,
    spec_from_json,
    write_generated,
)


def maximal_chain_patterns(ds):
    """network_id -> (motif prefix, classified pattern of its maximal chain)."""
    bundle = analyze_dataset(ds, AnalysisConfig(k=None, spectral_max_chains=0))
    by_net = {}
    for record in bundle.chain_records:
        by_net.setdefault(record["network_id"], []).append(record)
    out = {}
    for net_id, records in by_net.items():
        top = max(records, key=lambda r: len(r["nodes"]))
        out[net_id] = (top["nodes"][0][:6], top["pattern"])
    return out


def test_single_p1_motif():
    ds, ground_truth = generate(GeneratorSpec(seed=1, motif_counts={Pattern.P1: 1}))
    assert len(ds.corporations) == 2
    assert len(ds.edges) == 1
    idx = build_networks(ds)
    assert len(idx.networks) == 1
    recovered = maximal_chain_patterns(ds)
    assert list(recovered.values()) == [("m00000", "P1")]
    assert ground_truth == {"m00000": "P1"}


def test_single_p5_motif_three_cycle():
    from iconviz.contagion import extract_chains

    ds, _ = generate(GeneratorSpec(seed=2, motif_counts={Pattern.P5: 1}))
    net = build_networks(ds).networks[0]
    assert net.node_count == 3 and net.edge_count == 3
    chains = extract_chains(net, ds.corporations)
    assert len(chains) == 1
    assert len(chains[0].sources) == 3
    assert maximal_chain_patterns(ds)[0][1] == "P5"


def test_identical_seeds_byte_identical_files(tmp_path):
    spec = GeneratorSpec(
        seed=42,
        motif_counts={p: 4 for p in Pattern},
        mode="composite",
        composite_join_prob=0.5,
    )
    for out in ("a", "b"):
        ds, gt = generate(spec)
        write_generated(ds, gt, tmp_path / out)
    for name in ("nodes.csv", "edges.csv", "ground_truth.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_different_seeds_differ():
    ds1, _ = generate(GeneratorSpec(seed=1, motif_counts={Pattern.P8: 3}))
    ds2, _ = generate(GeneratorSpec(seed=2, motif_counts={Pattern.P8: 3}))
    assert ds1 != ds2


def test_plant_and_recover_small():
    spec = GeneratorSpec(seed=11, motif_counts={p: 5 for p in Pattern})
    ds, ground_truth = generate(spec)
    recovered = maximal_chain_patterns(ds)
    assert len(recovered) == 40
    for motif_id, pattern in recovered.values():
        assert ground_truth[motif_id] == pattern


def test_composite_mode_stitches_networks():
    spec = GeneratorSpec(
        seed=3,
        motif_counts={Pattern.P1: 10},
        mode="composite",
        composite_join_prob=1.0,
    )
    ds, _ = generate(spec)
    idx = build_networks(ds)
    assert len(idx.networks) == 1  # every join fires, all motifs merge
    assert len(ds.corporations) == 10 * 2 + 9  # bridge borrower per join


def test_composite_join_prob_zero_keeps_motifs_isolated():
    spec = GeneratorSpec(
        seed=3, motif_counts={Pattern.P1: 10}, mode="composite", composite_join_prob=0.0
    )
    ds, _ = generate(spec)
    assert len(build_networks(ds).networks) == 10


def test_financial_sanity():
    spec = GeneratorSpec(seed=9, motif_counts={p: 6 for p in Pattern})
    ds, _ = generate(spec)
    assert all(c.exposure >= 0 for c in ds.corporations.values())
    assert all(c.registered_capital >= 0 for c in ds.corporations.values())
    assert all(e.amount > 0 for e in ds.edges)


def test_invalid_specs_rejected():
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(motif_counts={Pattern.P1: -1}).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(size_ranges={Pattern.P1: (2, 3)}).validate()  # fixed-size pattern
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(size_ranges={Pattern.P6: (3, 5)}).validate()  # below canonical min
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(size_ranges={Pattern.P2: (6, 3)}).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(mode="streaming").validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(composite_join_prob=1.5).validate()


def test_spec_from_json_rejects_unknown_keys(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({"motif_counts": {"P1": 1}, "wat": 1}))
    with pytest.raises(InvalidSpecError):
        spec_from_json(path)


def test_spec_from_json_roundtrip(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(
        json.dumps(
            {
                "seed": 5,
                "mode": "composite",
                "motif_counts": {"P1": 2, "P7": 3},
                "size_ranges": {"P7": [3, 4]},
                "composite_join_prob": 0.25,
                "financials": {"guarantee_min": 10, "guarantee_max": 20},
            }
        )
    )
    spec = spec_from_json(path)
    assert spec.seed == 5
    assert spec.motif_counts == {Pattern.P1: 2, Pattern.P7: 3}
    assert spec.size_ranges == {Pattern.P7: (3, 4)}
    assert spec.financials.guarantee_min == 10
    override = spec_from_json(path, seed_override=99)
    assert override.seed == 99


def test_scale_profile_isolated_p1():
    report = scale_profile(GeneratorSpec(motif_counts={Pattern.P1: 3000}))
    assert report.expected_nodes == 6000
    assert report.expected_networks == 3000
    assert not report.paper_scale


def test_scale_profile_empty_spec():
    report = scale_profile(GeneratorSpec())
    assert (report.expected_nodes, report.expected_networks) == (0, 0)
    assert not report.paper_scale


def test_scale_profile_paper_scale_flag():
    spec = GeneratorSpec(
        motif_counts={p: 600 for p in Pattern}, mode="composite", composite_join_prob=0.3
    )
    report = scale_profile(spec)
    assert report.expected_nodes >= 20_000
    assert report.expected_networks >= 3_000
    assert report.paper_scale


def test_ground_truth_ids_prefix_node_ids():
    ds, ground_truth = generate(GeneratorSpec(seed=8, motif_counts={Pattern.P4: 2}))
    prefixes = {node_id[:6] for node_id in ds.corporations}
    assert prefixes == set(ground_truth)
