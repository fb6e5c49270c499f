"""Paley skew-Hadamard matrices and Fender-Kharaghani-Suda QUH matrices.

A QUH matrix H with entries in {(+-1 +- sqrt(-m)) / sqrt(m+1)} is stored as
the sign pair (A, B) with H = (A + sqrt(-m) B) / sqrt(m+1).  Expanding
H H* = n I gives the two integer identities checked by ``quh_verify``:

    A B^T = B A^T
    A A^T + m B B^T = n (m+1) I
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matrix
from .arithmetic import prime_power
from .errors import FormatError, ParameterError
from .finite_field import field_of_order, jacobsthal


@dataclass(frozen=True, eq=False)
class QuhPair:
    order: int
    parameter: int
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        if self.order < 1 or self.parameter < 1:
            raise ParameterError("order and parameter must be positive")
        for part in (self.a, self.b):
            if part.shape != (self.order, self.order):
                raise ParameterError(f"part of shape {part.shape} does not match order {self.order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuhPair):
            return NotImplemented
        return (
            self.order == other.order
            and self.parameter == other.parameter
            and matrix.equal(self.a, other.a)
            and matrix.equal(self.b, other.b)
        )

    def complex_matrix(self) -> np.ndarray:
        """Floating point H, for sanity checks only."""
        m = self.parameter
        return (self.a + 1j * np.sqrt(m) * self.b) / np.sqrt(m + 1)


def check_prime_power_3mod4(q: int) -> None:
    if q % 4 != 3 or prime_power(q) is None:
        raise ParameterError(f"q={q} must be a prime power congruent to 3 mod 4")


def paley_skew(q: int) -> np.ndarray:
    """Skew-Hadamard matrix of order q+1 bordered around I + Q."""
    check_prime_power_3mod4(q)
    jac = jacobsthal(field_of_order(q))
    h = np.empty((q + 1, q + 1), dtype=np.int64)
    h[0, :] = 1
    h[1:, 0] = -1
    h[1:, 1:] = jac + np.eye(q, dtype=np.int64)
    return matrix.sign_matrix(h, zero_free=True)


def fks_quh(q: int, t: int) -> QuhPair:
    """QUH matrix of order q^t with parameter q.

    A_t = J (x) B_{t-1},  B_t = I (x) A_{t-1} + Q (x) B_{t-1},  A_0 = B_0 = [1].
    """
    check_prime_power_3mod4(q)
    if t < 1:
        raise ParameterError(f"t={t} must be at least 1")
    jac = jacobsthal(field_of_order(q))
    ident, ones = matrix.identity(q), matrix.ones(q)
    a = b = matrix.sign_matrix([[1]])
    for _ in range(t):
        a, b = (
            matrix.kronecker(ones, b),
            matrix.add(matrix.kronecker(ident, a), matrix.kronecker(jac, b)),
        )
    # the zero diagonal of Q is exactly covered by I (x) A
    assert np.isin(b, (-1, 1)).all()
    return QuhPair(q**t, q, matrix.sign_matrix(a, zero_free=True), matrix.sign_matrix(b, zero_free=True))


def quh_failure(candidate: QuhPair) -> str | None:
    """Reason the pair fails to encode a QUH matrix, or None."""
    a, b, n, m = candidate.a, candidate.b, candidate.order, candidate.parameter
    if not (np.isin(a, (-1, 1)).all() and np.isin(b, (-1, 1)).all()):
        return "A or B has entries outside +1/-1"
    at, bt = matrix.transpose(a), matrix.transpose(b)
    if not matrix.equal(matrix.multiply(a, bt), matrix.multiply(b, at)):
        return "A*Bt != B*At"
    gram = matrix.add(matrix.multiply(a, at), matrix.scale(m, matrix.multiply(b, bt)))
    if not matrix.equal(gram, matrix.scale(n * (m + 1), matrix.identity(n))):
        return "A*At + m*B*Bt != n(m+1)I"
    return None


def quh_verify(candidate: QuhPair) -> bool:
    return quh_failure(candidate) is None


def format_quh(pair: QuhPair) -> str:
    body = matrix.format_pm(pair.a).split("\n")[1:-1] + matrix.format_pm(pair.b).split("\n")[1:-1]
    return "\n".join([f"QUH {pair.order} {pair.parameter}", *body]) + "\n"


def parse_quh(text: str) -> QuhPair:
    lines = text.splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty QUH input")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "QUH":
        raise FormatError(f"bad QUH header {lines[0]!r}")
    n, m = matrix.parse_order(header[1]), matrix.parse_order(header[2])
    if len(lines) != 2 * n + 1:
        raise FormatError(f"expected {2 * n} matrix rows, found {len(lines) - 1}")
    a = matrix.parse_pm_rows(lines[1 : n + 1], n)
    b = matrix.parse_pm_rows(lines[n + 1 :], n)
    if (a == 0).any() or (b == 0).any():
        raise FormatError("zero entries are not allowed in QUH format")
    return QuhPair(n, m, a, b)
