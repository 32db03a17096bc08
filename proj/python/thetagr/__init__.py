"""Exact verification of Theta_n-graded Lie algebras over sl_3 and sl_4."""

from ._thetagr import (
    Example,
    NonThetaConstituent,
    catalog,
    decompose,
    hom_dim,
    theta_component,
    verify_homs,
    verify_tables,
)

__all__ = [
    "Example",
    "NonThetaConstituent",
    "catalog",
    "decompose",
    "hom_dim",
    "theta_component",
    "verify_homs",
    "verify_tables",
]
