"""Simplicial rook graphs SR(m, n) and their cyclic variant CSR(m, n):
constructions, invariants, spectra, automorphisms, and brute-force
certification at desk scale."""

from .core import CSR, SR, GraphSpec, Vertex, csr_spec, sr_spec
from .errors import CapExceededError, InternalConsistencyError

__version__ = "0.1.0"

__all__ = [
    "CSR",
    "SR",
    "GraphSpec",
    "Vertex",
    "csr_spec",
    "sr_spec",
    "CapExceededError",
    "InternalConsistencyError",
    "__version__",
]
