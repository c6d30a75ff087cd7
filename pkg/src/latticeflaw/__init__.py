"""Exact enumeration of lattice paths by the number of points above a rational-slope boundary."""

from .bijection import classify_codomain, classify_domain, phi, psi, verify_bijection
from .enumeration import (
    FlawTable,
    enumerate_paths,
    enumerate_S,
    formula_flaw_table,
    is_member_S,
    oracle_flaw_table,
)
from .formula import E, H, Partition, c_lambda, catalan, count_flawed, mu, mu_unit_slope, partitions_of, rational_catalan
from .paths import BoundarySpec, LatticePath, PathPoint, boundary_points, flaw_count, flaw_points, hpbs, lpas, rotate180

__all__ = [
    "BoundarySpec", "LatticePath", "PathPoint", "FlawTable", "Partition",
    "flaw_points", "flaw_count", "boundary_points", "hpbs", "lpas", "rotate180",
    "enumerate_paths", "oracle_flaw_table", "formula_flaw_table", "is_member_S", "enumerate_S",
    "partitions_of", "rational_catalan", "c_lambda", "H", "E", "mu", "count_flawed",
    "catalan", "mu_unit_slope",
    "classify_domain", "classify_codomain", "phi", "psi", "verify_bijection",
]
