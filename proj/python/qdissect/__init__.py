"""Exact q-series expansion, dissection and vanishing-coefficient certification."""

from ._core import (
    SpecParseError,
    catalog,
    catalog_ids,
    dissect,
    expand,
    normalize_spec,
    prove,
    scan,
    theta_series,
    verify,
)

__all__ = [
    "SpecParseError",
    "catalog",
    "catalog_ids",
    "dissect",
    "expand",
    "normalize_spec",
    "prove",
    "scan",
    "theta_series",
    "verify",
]
