"""Resource limits for the exact solvers and enumerators.

Every limit can be overridden globally through the ``EKRLAB_LIMIT``
environment variable (an integer applied to all three knobs), or per call
via the ``limit=`` keyword accepted by the gated operations.
"""

from __future__ import annotations

import os

ENV_VAR = "EKRLAB_LIMIT"

# Largest Gram system dimension solved exactly by the eigenspace-mass code.
EIGEN_SOLVE_LIMIT = 5000
# Largest edge count accepted by the exact rational LP solver.
LP_EDGE_LIMIT = 5000
# Largest number of k-sets (Kneser vertices) for exhaustive enumeration.
ENUM_KSET_LIMIT = 64
# Branch-and-bound node budget for the exact matching solver.
MATCHING_NODE_LIMIT = 5_000_000


def resolve(limit: int | None, default: int) -> int:
    """Pick the effective limit: explicit argument, then env var, then default."""
    if limit is not None:
        return limit
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return int(env)
    return default
