"""Read-only HTTP API over an analyzed bundle.

The bundle is loaded once and shared immutably across request handlers;
every endpoint is a pure read, so identical requests always return
identical bodies and unbounded read parallelism is safe. Each response
carries the bundle's configuration hash in the X-Config-Hash header so
clients can detect stale caches.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .bundle import ServedBundle
from .patterns import Pattern, Quadrant
from .riskmetrics import cem_layout

HISTOGRAM_BINS = 10


def _not_found(request: Request, message: str, config_hash: str) -> JSONResponse:
    return JSONResponse(
        status_code=404,
        content={"error": message, "path": str(request.url.path)},
        headers={"X-Config-Hash": config_hash},
    )


def _bad_request(request: Request, message: str, config_hash: str) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": message, "path": str(request.url.path)},
        headers={"X-Config-Hash": config_hash},
    )


def _histogram(values: list[int]) -> dict:
    """Equal-width histogram from 0 to the max value (single bin when flat)."""
    if not values:
        return {"bin_edges": [0.0, 0.0], "counts": [0]}
    top = max(values)
    if top <= 0:
        return {"bin_edges": [0.0, 0.0], "counts": [len(values)]}
    width = top / HISTOGRAM_BINS
    counts = [0] * HISTOGRAM_BINS
    for value in values:
        slot = min(int(value / width), HISTOGRAM_BINS - 1)
        counts[slot] += 1
    edges = [round(width * i, 6) for i in range(HISTOGRAM_BINS + 1)]
    return {"bin_edges": edges, "counts": counts}


def _category_counts(values: list[str]) -> dict:
    counts: dict[str, int] = {}
    for value in values:
        counts[value] = counts.get(value, 0) + 1
    categories = sorted(counts)
    return {"categories": categories, "counts": [counts[c] for c in categories]}


def create_app(bundle: ServedBundle, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="iconviz", version=bundle.config.get("version", "0"), docs_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )
    config_hash = bundle.config_hash

    @app.middleware("http")
    async def stamp_config_hash(request: Request, call_next):
        response = await call_next(request)
        response.headers.setdefault("X-Config-Hash", config_hash)
        return response

    def network_summary(record: dict) -> dict:
        summary = dict(record)
        summary["slices"] = [share * 360.0 for share in record["pq"]]
        summary["chain_count"] = len(bundle.chains_by_network.get(record["network_id"], []))
        return summary

    @app.get("/api/networks")
    def list_networks(request: Request, sort: str = "size"):
        if sort not in ("size", "id"):
            return _bad_request(request, f"unknown sort {sort!r}, expected size|id", config_hash)
        records = [network_summary(r) for r in bundle.network_records]
        if sort == "size":
            records.sort(key=lambda r: (-r["node_count"], r["network_id"]))
        else:
            records.sort(key=lambda r: r["network_id"])
        return records

    @app.get("/api/networks/{network_id}")
    def network_detail(request: Request, network_id: int):
        if network_id not in bundle.network_record_by_id:
            return _not_found(request, f"network {network_id} not found", config_hash)
        net = bundle.index.by_id(network_id)
        nodes = [
            {
                "id": corp.id,
                "name": corp.name,
                "business_type": corp.business_type,
                "size_class": corp.size_class,
                "registered_capital": corp.registered_capital,
                "exposure": corp.exposure,
            }
            for corp in (bundle.dataset.corporations[n] for n in sorted(net.node_ids))
        ]
        edges = [
            {"guarantor_id": e.guarantor_id, "borrower_id": e.borrower_id, "amount": e.amount}
            for e in net.edges
        ]
        return {
            "network_id": network_id,
            "node_count": net.node_count,
            "edge_count": net.edge_count,
            "nodes": nodes,
            "edges": edges,
        }

    @app.get("/api/networks/{network_id}/cem")
    def network_cem(request: Request, network_id: int):
        if network_id not in bundle.network_record_by_id:
            return _not_found(request, f"network {network_id} not found", config_hash)
        return {"network_id": network_id, "cells": cem_layout(bundle.cells_for(network_id))}

    @app.get("/api/networks/{network_id}/chains")
    def network_chains(
        request: Request, network_id: int, pattern: str | None = None, quadrant: str | None = None
    ):
        if network_id not in bundle.network_record_by_id:
            return _not_found(request, f"network {network_id} not found", config_hash)
        if pattern is not None and pattern not in {p.value for p in Pattern}:
            return _bad_request(request, f"unknown pattern {pattern!r}", config_hash)
        if quadrant is not None and quadrant not in {q.value for q in Quadrant}:
            return _bad_request(request, f"unknown quadrant {quadrant!r}", config_hash)
        records = bundle.chains_by_network.get(network_id, [])
        if pattern is not None:
            records = [r for r in records if r["pattern"] == pattern]
        if quadrant is not None:
            records = [r for r in records if r["quadrant"] == quadrant]
        return records

    @app.get("/api/chains/{chain_id}")
    def chain_detail(request: Request, chain_id: int):
        record = bundle.chain_by_id.get(chain_id)
        if record is None:
            return _not_found(request, f"chain {chain_id} not found", config_hash)
        return record

    @app.get("/api/networks/{network_id}/stats")
    def network_stats(request: Request, network_id: int):
        if network_id not in bundle.network_record_by_id:
            return _not_found(request, f"network {network_id} not found", config_hash)
        net = bundle.index.by_id(network_id)
        corps = [bundle.dataset.corporations[n] for n in sorted(net.node_ids)]
        return {
            "network_id": network_id,
            "exposure": _histogram([c.exposure for c in corps]),
            "registered_capital": _histogram([c.registered_capital for c in corps]),
            "business_type": _category_counts([c.business_type for c in corps]),
            "size_class": _category_counts([c.size_class for c in corps]),
        }

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="console")

    return app
