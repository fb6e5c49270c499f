"""Brute-force existence search for QUH matrices of tiny order.

Rows of H are encoded as sign-vector pairs (a_i, b_i).  Rows i and j are
orthogonal under the Hermitian product exactly when

    sum_k a_ik a_jk + m sum_k b_ik b_jk == 0
    sum_k (a_jk b_ik - a_ik b_jk)     == 0

Negating a row of H keeps it in H(n, X_m) and flips the signs of both a_i
and b_i, so every row is normalized to a_i1 = +1.  The sign of b_i1 cannot
be fixed this way and stays free.  Nothing else about the symmetry group is
used.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .constructions import QuhPair, quh_verify
from .errors import ParameterError

DEFAULT_BUDGET = 10**8
MAX_ORDER = 6


class SearchStatus(enum.Enum):
    FOUND = "FOUND"
    EXHAUSTED_EMPTY = "EXHAUSTED_EMPTY"
    ABORTED = "ABORTED"


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    nodes_explored: int
    pair: QuhPair | None = None

    def __str__(self) -> str:
        return f"{self.status.value} nodes={self.nodes_explored}"


class _BudgetExhausted(Exception):
    pass


def parity_prune_applies(n: int, m: int) -> bool:
    """With n odd, sum_k b_ik b_jk is odd, so |m * that| >= m > n >= |sum_k a_ik a_jk|."""
    return n % 2 == 1 and n >= 3 and m > n


def _normalized_rows(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Every (a, b) row pair with a[0] = +1."""
    rows = np.array(list(itertools.product((1, -1), repeat=2 * n - 1)), dtype=np.int64)
    a = np.hstack([np.ones((len(rows), 1), dtype=np.int64), rows[:, : n - 1]])
    return a, rows[:, n - 1 :]


def exhaustive_search(
    n: int, m: int, node_budget: int = DEFAULT_BUDGET, use_parity_prune: bool = True
) -> SearchOutcome:
    if n < 1 or m < 1:
        raise ParameterError("n and m must be positive")
    if n > MAX_ORDER:
        raise ParameterError(f"search is limited to n <= {MAX_ORDER}")
    if use_parity_prune and parity_prune_applies(n, m):
        return SearchOutcome(SearchStatus.EXHAUSTED_EMPTY, 0)

    a, b = _normalized_rows(n)
    real = a @ a.T + m * (b @ b.T)
    imag = a @ b.T - b @ a.T
    compatible = (real == 0) & (imag == 0)

    chosen: list[int] = []
    nodes = 0

    def extend(mask: np.ndarray) -> bool:
        nonlocal nodes
        if len(chosen) == n:
            return True
        for c in np.flatnonzero(mask):
            nodes += 1
            if nodes > node_budget:
                raise _BudgetExhausted
            chosen.append(int(c))
            if extend(mask & compatible[c]):
                return True
            chosen.pop()
        return False

    try:
        found = extend(np.ones(len(a), dtype=bool))
    except _BudgetExhausted:
        return SearchOutcome(SearchStatus.ABORTED, node_budget)
    if not found:
        return SearchOutcome(SearchStatus.EXHAUSTED_EMPTY, nodes)
    pair = QuhPair(n, m, a[chosen].copy(), b[chosen].copy())
    assert quh_verify(pair)
    return SearchOutcome(SearchStatus.FOUND, nodes, pair)
