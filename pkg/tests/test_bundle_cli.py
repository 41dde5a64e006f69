import json

import pytest

from iconviz.bundle import (
    AnalysisConfig,
    analyze_dataset,
    analyze_files,
    config_hash,
    load_bundle,
    write_bundle,
)
from iconviz.cli import main
from iconviz.errors import BundleLoadFailureError
from iconviz.patterns import Pattern
from iconviz.synth import GeneratorSpec, generate, write_generated

from conftest import make_dataset


def bundle_files(path):
    return sorted(p.name for p in path.iterdir())


def test_analyze_p1_dataset_end_to_end(p1_dataset, tmp_path):
    nodes, edges = p1_dataset
    out = tmp_path / "bundle"
    code = main(["analyze", "--nodes", str(nodes), "--edges", str(edges), "--out", str(out)])
    assert code == 0
    assert bundle_files(out) == ["chains.json", "config.json", "edges.csv", "networks.json", "nodes.csv"]
    chains = json.loads((out / "chains.json").read_text())
    assert len(chains) == 1
    record = chains[0]
    assert record["pattern"] == "P1"
    assert record["quadrant"] == "QI"
    assert record["cluster"] == 0
    assert record["features"]["n"] == 2
    networks = json.loads((out / "networks.json").read_text())
    assert networks[0]["eda"] == 65


def test_analyze_twice_is_byte_identical(tmp_path):
    spec = GeneratorSpec(seed=5, motif_counts={p: 6 for p in Pattern}, mode="composite")
    ds, gt = generate(spec)
    write_generated(ds, gt, tmp_path / "data")
    args = [
        "analyze",
        "--nodes", str(tmp_path / "data" / "nodes.csv"),
        "--edges", str(tmp_path / "data" / "edges.csv"),
    ]
    assert main(args + ["--out", str(tmp_path / "b1")]) == 0
    assert main(args + ["--out", str(tmp_path / "b2")]) == 0
    for name in bundle_files(tmp_path / "b1"):
        assert (tmp_path / "b1" / name).read_bytes() == (tmp_path / "b2" / name).read_bytes(), name


def test_missing_edge_file_exits_2(p1_dataset, tmp_path, capsys):
    nodes, _ = p1_dataset
    code = main(
        ["analyze", "--nodes", str(nodes), "--edges", str(tmp_path / "nope.csv"),
         "--out", str(tmp_path / "b")]
    )
    assert code == 2
    assert "edge table not found" in capsys.readouterr().err


def test_generate_cli_deterministic(tmp_path, capsys):
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps({"motif_counts": {"P1": 2, "P5": 1}}))
    args = ["generate", "--spec", str(spec_path), "--seed", "42"]
    assert main(args + ["--out", str(tmp_path / "d1")]) == 0
    assert main(args + ["--out", str(tmp_path / "d2")]) == 0
    for name in ("nodes.csv", "edges.csv", "ground_truth.json"):
        assert (tmp_path / "d1" / name).read_bytes() == (tmp_path / "d2" / name).read_bytes()


def test_generate_cli_invalid_spec_exits_2(tmp_path, capsys):
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps({"motif_counts": {"P1": -3}}))
    assert main(["generate", "--spec", str(spec_path), "--out", str(tmp_path / "d")]) == 2
    assert "error" in capsys.readouterr().err


def test_generate_cli_empty_spec_writes_empty_tables(tmp_path):
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps({"motif_counts": {}}))
    assert main(["generate", "--spec", str(spec_path), "--out", str(tmp_path / "d")]) == 0
    assert (tmp_path / "d" / "nodes.csv").read_text().strip() == (
        "id,name,business_type,size_class,registered_capital,exposure"
    )
    assert json.loads((tmp_path / "d" / "ground_truth.json").read_text()) == {}


def test_bundle_load_roundtrip(tmp_path):
    ds, _ = generate(GeneratorSpec(seed=6, motif_counts={Pattern.P3: 2, Pattern.P7: 2}))
    bundle = analyze_dataset(ds, AnalysisConfig())
    out = write_bundle(bundle, tmp_path / "bundle")
    served = load_bundle(out)
    assert len(served.chain_records) == len(bundle.chain_records)
    assert served.config_hash == config_hash(served.config)
    assert {net.network_id for net in served.index.networks} == {
        net.network_id for net in bundle.index.networks
    }


def test_bundle_load_missing_file(tmp_path):
    with pytest.raises(BundleLoadFailureError):
        load_bundle(tmp_path)


def test_bundle_load_detects_tampering(tmp_path):
    ds, _ = generate(GeneratorSpec(seed=6, motif_counts={Pattern.P1: 1}))
    out = write_bundle(analyze_dataset(ds), tmp_path / "bundle")
    config = json.loads((out / "config.json").read_text())
    config["seed"] = 999  # content no longer matches the stated hash
    (out / "config.json").write_text(json.dumps(config))
    with pytest.raises(BundleLoadFailureError):
        load_bundle(out)


def test_k_clamped_to_chain_count():
    ds = make_dataset([("A", "B", 5), ("C", "D", 5), ("E", "F", 5)])
    bundle = analyze_dataset(ds, AnalysisConfig(k=8))
    assert bundle.snapshot["counts"]["chains"] == 3
    assert bundle.snapshot["k_effective"] == 3
    assert not bundle.snapshot["spectral_skipped"]


def test_single_chain_skips_spectral_with_cluster_zero():
    ds = make_dataset([("A", "B", 5)])
    bundle = analyze_dataset(ds, AnalysisConfig(k=8))
    assert bundle.snapshot["spectral_skipped"]
    assert bundle.chain_records[0]["cluster"] == 0


def test_spectral_cap_falls_back_to_pattern_index():
    ds, _ = generate(GeneratorSpec(seed=1, motif_counts={Pattern.P3: 3, Pattern.P5: 2}))
    bundle = analyze_dataset(ds, AnalysisConfig(spectral_max_chains=1))
    assert bundle.snapshot["spectral_skipped"]
    patterns = [r["pattern"] for r in bundle.chain_records]
    clusters = [r["cluster"] for r in bundle.chain_records]
    expected = [list(Pattern).index(Pattern(p)) for p in patterns]
    assert clusters == expected


def test_snapshot_records_inputs_and_hash(p1_dataset, tmp_path):
    nodes, edges = p1_dataset
    bundle = analyze_files(nodes, edges, AnalysisConfig())
    out = write_bundle(bundle, tmp_path / "bundle")
    snapshot = json.loads((out / "config.json").read_text())
    assert snapshot["inputs"]["nodes_sha256"]
    assert snapshot["sigma_requested"] == "auto"
    assert snapshot["config_hash"] == config_hash(snapshot)


def test_log_level_env_var(monkeypatch):
    import logging

    from iconviz.cli import _configure_logging

    monkeypatch.setenv("ICONVIZ_LOG", "DEBUG")
    root = logging.getLogger()
    previous_level, previous_handlers = root.level, root.handlers[:]
    root.handlers = []
    try:
        _configure_logging()
        assert root.level == logging.DEBUG
    finally:
        root.level, root.handlers = previous_level, previous_handlers


def test_sigma_flag_parsing(p1_dataset, tmp_path, capsys):
    nodes, edges = p1_dataset
    out = tmp_path / "b"
    code = main(
        ["analyze", "--nodes", str(nodes), "--edges", str(edges), "--out", str(out),
         "--sigma", "2.5", "--seed", "7"]
    )
    assert code == 0
    snapshot = json.loads((out / "config.json").read_text())
    assert snapshot["sigma_requested"] == 2.5
    assert snapshot["seed"] == 7
