"""Runtime limits and tolerances, overridable per call or via environment.

Environment variables (used when a function receives no explicit value):

    ROOKLAB_ENUM_CAP    max vertex count for full enumeration   (default 10_000_000)
    ROOKLAB_EIG_CAP     max vertex count for dense eigensolves  (default 2000)
    ROOKLAB_MASK_LIMIT  max coordinate count for the subset DP  (default 22)
    ROOKLAB_TOL         numeric tolerance for spectral verdicts (default 1e-6)

Search caps for the brute-force oracles have plain defaults and are set per
call; they guard runtime, not correctness.
"""

import os

DEFAULT_ENUM_CAP = 10_000_000
DEFAULT_EIG_CAP = 2000
DEFAULT_MASK_LIMIT = 22
DEFAULT_TOL = 1e-6
DEFAULT_SEARCH_CAP = 200
DEFAULT_AUT_CAP = 128

# merge tolerance for collapsing near-equal eigenvalues into multiplicities
EIG_MERGE_TOL = 1e-8


def enum_cap(value: int | None = None) -> int:
    if value is not None:
        return int(value)
    return int(os.environ.get("ROOKLAB_ENUM_CAP", DEFAULT_ENUM_CAP))


def eig_cap(value: int | None = None) -> int:
    if value is not None:
        return int(value)
    return int(os.environ.get("ROOKLAB_EIG_CAP", DEFAULT_EIG_CAP))


def mask_limit(value: int | None = None) -> int:
    if value is not None:
        return int(value)
    return int(os.environ.get("ROOKLAB_MASK_LIMIT", DEFAULT_MASK_LIMIT))


def tol(value: float | None = None) -> float:
    if value is not None:
        return float(value)
    return float(os.environ.get("ROOKLAB_TOL", DEFAULT_TOL))


def search_cap(value: int | None = None) -> int:
    if value is not None:
        return int(value)
    return DEFAULT_SEARCH_CAP


def aut_cap(value: int | None = None) -> int:
    if value is not None:
        return int(value)
    return DEFAULT_AUT_CAP
