"""Node/edge table parsing and dataset normalization.

Conventions fixed here and relied on everywhere downstream:

* A guarantee edge (u, v) means "u guarantees v". Default contagion runs
  against the arrows, so a borrower's default infects its guarantors.
* Currency amounts are exact integers in minor units (e.g. cents). Sums
  therefore never drift; ratios are the only place floats appear.
* Duplicate (guarantor, borrower) rows are merged by summing amounts,
  since one guarantor may back several loan contracts of one borrower.
"""

from __future__ import annotations

import csv
import datetime
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    DuplicateIdError,
    IngestError,
    MalformedNumberError,
    MissingColumnError,
    NegativeAmountError,
    NonPositiveAmountError,
    SelfLoopError,
    UnknownEndpointError,
)

log = logging.getLogger("iconviz.ingest")

NODE_COLUMNS = ("id", "name", "business_type", "size_class", "registered_capital", "exposure")
NODE_REQUIRED = ("id", "business_type", "size_class", "registered_capital", "exposure")
EDGE_COLUMNS = ("guarantor_id", "borrower_id", "amount")


@dataclass(frozen=True)
class Corporation:
    """One node of the guarantee graph: identity plus financial profile."""

    id: str
    business_type: str
    size_class: str
    registered_capital: int
    exposure: int
    name: str | None = None


@dataclass(frozen=True)
class GuaranteeEdge:
    """Directed guarantee relation: guarantor backs borrower for `amount`."""

    guarantor_id: str
    borrower_id: str
    amount: int


@dataclass(frozen=True)
class Provenance:
    node_path: str
    edge_path: str
    ingested_at: str


@dataclass
class Dataset:
    """Parsed and validated node/edge tables, immutable once built."""

    corporations: dict[str, Corporation]
    edges: list[GuaranteeEdge]
    provenance: Provenance | None = field(default=None, compare=False)


@dataclass
class ValidationReport:
    nodes: int
    edges: int
    isolated: int
    warnings: list[str] = field(default_factory=list)


def _parse_amount(value: str, row: int, column: str) -> int:
    """Parse an exact integer minor-unit amount; decimals are rejected."""
    text = value.strip()
    try:
        return int(text)
    except ValueError:
        raise MalformedNumberError(row, column, value) from None


def parse_node_table(path: str | Path) -> dict[str, Corporation]:
    """Read the corporation table; returns corporations keyed by id, in file order.

    Raises MissingColumnError, DuplicateIdError, NegativeAmountError, or
    MalformedNumberError on the first bad row (fail fast, nothing is
    silently dropped).
    """
    corporations: dict[str, Corporation] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in NODE_REQUIRED:
            if column not in header:
                raise MissingColumnError(column)
        for row_no, row in enumerate(reader, start=2):
            corp_id = (row["id"] or "").strip()
            if not corp_id:
                raise IngestError(f"row {row_no}: empty corporation id")
            if corp_id in corporations:
                raise DuplicateIdError(corp_id)
            capital = _parse_amount(row["registered_capital"], row_no, "registered_capital")
            exposure = _parse_amount(row["exposure"], row_no, "exposure")
            if capital < 0:
                raise NegativeAmountError(row_no, "registered_capital")
            if exposure < 0:
                raise NegativeAmountError(row_no, "exposure")
            name = (row.get("name") or "").strip() or None
            corporations[corp_id] = Corporation(
                id=corp_id,
                name=name,
                business_type=(row["business_type"] or "").strip(),
                size_class=(row["size_class"] or "").strip(),
                registered_capital=capital,
                exposure=exposure,
            )
    return corporations


def parse_edge_table(path: str | Path, corporations: dict[str, Corporation]) -> list[GuaranteeEdge]:
    """Read the guarantee table and validate it against the node table.

    Duplicate (guarantor, borrower) rows merge by summing amounts; merged
    edges keep the position of their first occurrence.
    """
    merged: dict[tuple[str, str], int] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in EDGE_COLUMNS:
            if column not in header:
                raise MissingColumnError(column)
        for row_no, row in enumerate(reader, start=2):
            guarantor = (row["guarantor_id"] or "").strip()
            borrower = (row["borrower_id"] or "").strip()
            amount = _parse_amount(row["amount"], row_no, "amount")
            if amount <= 0:
                raise NonPositiveAmountError(row_no)
            if guarantor == borrower:
                raise SelfLoopError(guarantor, row_no)
            for endpoint in (guarantor, borrower):
                if endpoint not in corporations:
                    raise UnknownEndpointError(endpoint, row_no)
            key = (guarantor, borrower)
            merged[key] = merged.get(key, 0) + amount
    return [GuaranteeEdge(g, b, amount) for (g, b), amount in merged.items()]


def load_dataset(node_path: str | Path, edge_path: str | Path) -> Dataset:
    """Parse both tables into a Dataset with provenance attached."""
    corporations = parse_node_table(node_path)
    edges = parse_edge_table(edge_path, corporations)
    provenance = Provenance(
        node_path=str(node_path),
        edge_path=str(edge_path),
        ingested_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
    )
    log.info("ingested %d corporations, %d merged edges", len(corporations), len(edges))
    return Dataset(corporations=corporations, edges=edges, provenance=provenance)


def write_node_table(corporations: dict[str, Corporation], path: str | Path) -> None:
    """Write the canonical node CSV (full header, insertion order)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(NODE_COLUMNS)
        for corp in corporations.values():
            writer.writerow(
                [corp.id, corp.name or "", corp.business_type, corp.size_class,
                 corp.registered_capital, corp.exposure]
            )


def write_edge_table(edges: list[GuaranteeEdge], path: str | Path) -> None:
    """Write the canonical edge CSV (merged edges, first-seen order)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(EDGE_COLUMNS)
        for edge in edges:
            writer.writerow([edge.guarantor_id, edge.borrower_id, edge.amount])


def validate_dataset(ds: Dataset) -> ValidationReport:
    """Summarize a parsed dataset; purely informational, never mutates."""
    touched: set[str] = set()
    for edge in ds.edges:
        touched.add(edge.guarantor_id)
        touched.add(edge.borrower_id)
    isolated = sum(1 for corp_id in ds.corporations if corp_id not in touched)
    warnings = []
    if isolated:
        warnings.append(f"{isolated} isolated corporation(s) form singleton networks")
    return ValidationReport(
        nodes=len(ds.corporations),
        edges=len(ds.edges),
        isolated=isolated,
        warnings=warnings,
    )
