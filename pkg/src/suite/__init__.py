from .case import CATALOG, CaseContext, CaseRegistry, Finding, SkipCase, TheoremCase, case_registry
from .catalog import (
    BUILTIN_PREFIX,
    BUILTIN_RINGS,
    Catalog,
    builtin_descriptor,
    catalog_digest,
    default_catalog,
    load_catalog,
)
from .runner import run_all, run_case

__all__ = [
    "BUILTIN_PREFIX",
    "BUILTIN_RINGS",
    "CATALOG",
    "CaseContext",
    "CaseRegistry",
    "Catalog",
    "Finding",
    "SkipCase",
    "TheoremCase",
    "builtin_descriptor",
    "case_registry",
    "catalog_digest",
    "default_catalog",
    "load_catalog",
    "run_all",
    "run_case",
]
