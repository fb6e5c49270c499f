"""From a QUH matrix and a skew-Hadamard matrix to a real Hadamard matrix.

Given a QUH pair (A, B) of order n with parameter m and a skew-Hadamard
matrix M of order m+1, the block matrix

    R = I (x) A + (M - I) (x) B

puts A on the diagonal blocks and +-B off the diagonal.  R has +-1 entries
and R R^T = n(m+1) I, with no condition on whether m+1 is a square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import matrix
from .constructions import QuhPair, fks_quh, paley_skew, quh_failure, check_prime_power_3mod4
from .errors import ParameterError, ValidationError


@dataclass(frozen=True, eq=False)
class MorphismResult:
    matrix: np.ndarray
    source_order: int
    skew_order: int

    @property
    def order(self) -> int:
        return self.matrix.shape[0]


def apply_morphism(quh: QuhPair, skew, verify: bool = False) -> MorphismResult:
    """Substitute A for the diagonal and +-B for the off-diagonal entries of ``skew``.

    ``verify=True`` re-checks R R^T = n(m+1) I on the output.
    """
    skew = matrix.sign_matrix(skew)
    k = skew.shape[0]
    if k != quh.parameter + 1:
        raise ParameterError(
            f"skew matrix has order {k}, QUH parameter {quh.parameter} needs {quh.parameter + 1}"
        )
    reason = quh_failure(quh)
    if reason is not None:
        raise ValidationError(f"QUH pair invalid: {reason}")
    reason = matrix.skew_failure(skew)
    if reason is not None:
        raise ValidationError(f"not skew-Hadamard: {reason}")

    ident = matrix.identity(k)
    off = matrix.add(skew, matrix.scale(-1, ident))
    r = matrix.add(matrix.kronecker(ident, quh.a), matrix.kronecker(off, quh.b))
    if verify:
        reason = matrix.hadamard_failure(r)
        if reason is not None:
            raise AssertionError(f"morphism output is not Hadamard: {reason}")
    return MorphismResult(matrix.sign_matrix(r, zero_free=True), quh.order, k)


def corollary_order(q: int, n: int) -> int:
    """q^n + q^(n-1), the order reached from fks_quh(q, n-1) and paley_skew(q)."""
    check_prime_power_3mod4(q)
    if n < 1:
        raise ParameterError(f"n={n} must be at least 1")
    return q**n + q ** (n - 1)


def corollary_matrix(q: int, n: int, verify: bool = False) -> MorphismResult:
    """Real Hadamard matrix of order q^n + q^(n-1)."""
    corollary_order(q, n)
    if n == 1:
        quh = QuhPair(1, q, matrix.sign_matrix([[1]]), matrix.sign_matrix([[1]]))
    else:
        quh = fks_quh(q, n - 1)
    return apply_morphism(quh, paley_skew(q), verify=verify)


def quartic_is_minimal(m: int) -> bool:
    """Whether x^4 + 2(m-1)/(m+1) x^2 + 1 is irreducible over Q, i.e. m+1 is not a square."""
    if m < 1:
        raise ParameterError(f"m={m} must be positive")
    r = math.isqrt(m + 1)
    return r * r != m + 1
