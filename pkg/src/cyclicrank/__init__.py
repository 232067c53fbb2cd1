"""Exact rank computations for Higgs-field kernels of families of cyclic covers of P^1."""

from .errors import (CyclicRankError, GenusError, OracleMismatchError, PreconditionError,
                     TruncationError)
from .superelliptic import (INF, BranchPoint, CurveDivisor, CyclicCoverSpec,
                            catanese_dettweiler_spec, genus, simple_cyclic_spec)

__version__ = "0.1.0"
