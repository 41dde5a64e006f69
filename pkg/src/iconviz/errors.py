"""Exception types raised across the analytics pipeline."""

from __future__ import annotations


class IconvizError(Exception):
    """Base class for all package errors."""


# --- ingest ---------------------------------------------------------------

class IngestError(IconvizError):
    """A table could not be parsed into a valid dataset."""


class MissingColumnError(IngestError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"required column missing: {column!r}")


class DuplicateIdError(IngestError):
    def __init__(self, corp_id: str):
        self.corp_id = corp_id
        super().__init__(f"duplicate corporation id: {corp_id!r}")


class NegativeAmountError(IngestError):
    def __init__(self, row: int, column: str):
        self.row = row
        self.column = column
        super().__init__(f"row {row}: {column} must be >= 0")


class MalformedNumberError(IngestError):
    def __init__(self, row: int, column: str, value: str):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(
            f"row {row}: column {column!r} holds {value!r}, expected an "
            "integer amount in minor units"
        )


class UnknownEndpointError(IngestError):
    def __init__(self, corp_id: str, row: int):
        self.corp_id = corp_id
        self.row = row
        super().__init__(f"row {row}: endpoint {corp_id!r} not in node table")


class SelfLoopError(IngestError):
    def __init__(self, corp_id: str, row: int):
        self.corp_id = corp_id
        self.row = row
        super().__init__(f"row {row}: self-guarantee on {corp_id!r} rejected")


class NonPositiveAmountError(IngestError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row}: guarantee amount must be > 0")


# --- contagion / analytics ------------------------------------------------

class UnknownNodeError(IconvizError):
    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(f"chain references unknown corporation {node_id!r}")


class DegenerateChainError(IconvizError):
    """Chain has fewer than two nodes and carries no contagion semantics."""


class TooFewChainsError(IconvizError):
    """Feature standardization needs at least two chains."""


class InvalidKError(IconvizError):
    def __init__(self, k: int, n_rows: int):
        self.k = k
        self.n_rows = n_rows
        super().__init__(f"k={k} invalid for {n_rows} rows")


class EigensolverFailure(IconvizError):
    """The symmetric eigensolver did not converge."""


# --- risk metrics ---------------------------------------------------------

class NoExposureAnywhereError(IconvizError):
    """Badge geometry is undefined when every network has zero exposure."""


# --- synth / service ------------------------------------------------------

class InvalidSpecError(IconvizError):
    """Generator specification failed validation."""


class IoFailureError(IconvizError):
    def __init__(self, path: str, cause: Exception | None = None):
        self.path = path
        super().__init__(f"could not write {path!r}" + (f": {cause}" if cause else ""))


class BundleLoadFailureError(IconvizError):
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"bundle at {path!r} unreadable: {reason}")
