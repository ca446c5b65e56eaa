"""Derived-rule catalog and the proof builder behind it.

Every entry is a recipe that emits kernel-checkable steps; nothing in
this package extends the trusted base. The catalog registry loads
lazily on first access through any of the functions re-exported here.
"""

from ..kernel import Proof
from .builder import ProofBuilder
from .catalog import (
    CatalogEntry, MANIFEST_PATH, apply_entry, canonical_statements,
    derive, entry, labels, prove, registry_records, run_catalog,
    verify_manifest, write_manifest,
)

__all__ = [
    "CatalogEntry", "MANIFEST_PATH", "Proof", "ProofBuilder",
    "apply_entry", "canonical_statements", "derive", "entry", "labels",
    "prove", "registry_records", "run_catalog", "verify_manifest",
    "write_manifest",
]
