"""Mixed Hodge structures on H^k(X, V_m) for Hilbert modular varieties.

Thin wrapper over the C++ core. Every function returns plain Python data
(the same JSON document the ``hilbert-hodge`` command emits).
"""

import json

from . import _core
from ._core import Error, count_N, rank, run_cli

__all__ = [
    "Error",
    "count_N",
    "eisenstein",
    "rank",
    "run_cli",
    "sheaf_matrix",
    "table",
    "verify",
]


def table(n, m, cusps, genus):
    """MHS, IH and Eisenstein tables with their consistency checks."""
    return json.loads(_core.table_json(n, list(m), cusps, genus))


def sheaf_matrix(n, m, oracle_cap=None):
    """Closed-form cohomology sheaves C^{P,l}, checked against the Higgs complex."""
    if oracle_cap is None:
        return json.loads(_core.sheaf_matrix_json(n, list(m)))
    return json.loads(_core.sheaf_matrix_json(n, list(m), oracle_cap))


def eisenstein(n, m, cusps):
    """Eisenstein cohomology bases and exponents for k = n..2n-1."""
    return json.loads(_core.eisenstein_json(n, list(m), cusps))


def verify(max_n=4, max_m=3):
    """Full consistency sweep."""
    return json.loads(_core.verify_json(max_n, max_m))
