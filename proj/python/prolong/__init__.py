"""Exact prolongation profiles and cross-checks for overdetermined geometric
PDE systems.

The heavy lifting lives in the compiled extension ``_prolong``; this package
re-exports its functions under a stable name.
"""

from _prolong import (
    ConfigError,
    ResourceError,
    VerificationError,
    catalog,
    curved_check,
    flat_solution_dim,
    identity_checks,
    oracle_dims,
    profile,
)

__all__ = [
    "ConfigError",
    "ResourceError",
    "VerificationError",
    "catalog",
    "curved_check",
    "flat_solution_dim",
    "identity_checks",
    "oracle_dims",
    "profile",
]
