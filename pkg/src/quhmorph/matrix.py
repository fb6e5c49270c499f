"""Exact integer square matrices and Hadamard predicates.

Matrices are numpy arrays.  Products run in int64 whenever a bound on the
result entries fits, and fall back to Python integers (object dtype)
otherwise, so arithmetic is always exact.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, FormatError

_INT64_SAFE = 2**62

PM_CHARS = {"+": 1, "-": -1, "0": 0}
_PM_OUT = {1: "+", -1: "-", 0: "0"}


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def _square(a) -> np.ndarray:
    a = np.asarray(a)
    if a.dtype != object:
        a = a.astype(np.int64, copy=False)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionError(f"expected a non-empty square matrix, got shape {a.shape}")
    return a


def _narrow(a: np.ndarray) -> np.ndarray:
    """Return int64 if every entry fits, else keep Python integers."""
    if a.dtype == object and _max_abs(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def int_matrix(rows) -> np.ndarray:
    """Validate and freeze an integer square matrix."""
    a = _square(rows)
    if a.dtype == object and not all(isinstance(x, (int, np.integer)) for x in a.flat):
        raise DimensionError("matrix entries must be integers")
    return _frozen(np.array(_narrow(a)))


def sign_matrix(rows, zero_free: bool = False) -> np.ndarray:
    a = int_matrix(rows)
    allowed = (-1, 1) if zero_free else (-1, 0, 1)
    if not np.isin(a, allowed).all():
        raise DimensionError(f"entries must lie in {set(allowed)}")
    return a


def identity(n: int) -> np.ndarray:
    return _frozen(np.eye(n, dtype=np.int64))


def ones(n: int) -> np.ndarray:
    return _frozen(np.ones((n, n), dtype=np.int64))


def multiply(a, b) -> np.ndarray:
    a, b = _square(a), _square(b)
    if a.shape != b.shape:
        raise DimensionError(f"order mismatch: {a.shape[0]} vs {b.shape[0]}")
    bound = a.shape[0] * _max_abs(a) * _max_abs(b)
    if bound < _INT64_SAFE:
        return _frozen(a.astype(np.int64) @ b.astype(np.int64))
    return _frozen(_narrow(a.astype(object) @ b.astype(object)))


def add(a, b) -> np.ndarray:
    a, b = _square(a), _square(b)
    if a.shape != b.shape:
        raise DimensionError(f"order mismatch: {a.shape[0]} vs {b.shape[0]}")
    if _max_abs(a) + _max_abs(b) < _INT64_SAFE:
        return _frozen(a.astype(np.int64) + b.astype(np.int64))
    return _frozen(_narrow(a.astype(object) + b.astype(object)))


def scale(c: int, a) -> np.ndarray:
    a = _square(a)
    if abs(c) * _max_abs(a) < _INT64_SAFE:
        return _frozen(c * a.astype(np.int64))
    return _frozen(_narrow(c * a.astype(object)))


def transpose(a) -> np.ndarray:
    return _frozen(np.array(_square(a).T))


def kronecker(a, b) -> np.ndarray:
    """Block (i, j) of the result is ``a[i, j] * b``."""
    a, b = _square(a), _square(b)
    if _max_abs(a) * _max_abs(b) < _INT64_SAFE:
        return _frozen(np.kron(a.astype(np.int64), b.astype(np.int64)))
    return _frozen(_narrow(np.kron(a.astype(object), b.astype(object))))


def is_zero(a) -> bool:
    return not np.any(_square(a) != 0)


def equal(a, b) -> bool:
    a, b = _square(a), _square(b)
    return a.shape == b.shape and bool(np.all(a == b))


def _is_sign(h: np.ndarray, zero_free: bool) -> bool:
    allowed = (-1, 1) if zero_free else (-1, 0, 1)
    return bool(np.isin(h, allowed).all())


def hadamard_failure(h) -> str | None:
    """Reason ``h`` is not Hadamard, or None when it is."""
    h = _square(h)
    if not _is_sign(h, zero_free=True):
        return "entries not all +1/-1"
    n = h.shape[0]
    if not equal(multiply(h, transpose(h)), scale(n, identity(n))):
        return "H*Ht != nI"
    return None


def skew_failure(h) -> str | None:
    reason = hadamard_failure(h)
    if reason is not None:
        return reason
    h = _square(h)
    if not equal(add(h, transpose(h)), scale(2, identity(h.shape[0]))):
        return "H+Ht != 2I"
    return None


def is_hadamard(h) -> bool:
    return hadamard_failure(h) is None


def is_skew_hadamard(h) -> bool:
    return skew_failure(h) is None


def skew_quadratic_check(h) -> bool:
    """True iff H^2 = 2H - (m+1)I, where m+1 is the order of H."""
    h = _square(h)
    n = h.shape[0]
    rhs = add(scale(2, h), scale(-n, identity(n)))
    return equal(multiply(h, h), rhs)


def quartic_identity_check(h) -> bool:
    """True iff H^4 + 2(m-1)H^2 + (m+1)^2 I = 0 with m+1 the order of H.

    This is x^4 + 2(m-1)/(m+1) x^2 + 1 evaluated at H/sqrt(m+1) and cleared
    of denominators.
    """
    h = _square(h)
    n = h.shape[0]
    m = n - 1
    h2 = multiply(h, h)
    h4 = multiply(h2, h2)
    total = add(add(h4, scale(2 * (m - 1), h2)), scale(n * n, identity(n)))
    return is_zero(total)


def format_pm(h) -> str:
    h = _square(h)
    lines = [str(h.shape[0])]
    for row in h.tolist():
        try:
            lines.append("".join(_PM_OUT[x] for x in row))
        except KeyError:
            raise FormatError("PM format holds only -1, 0, +1 entries") from None
    return "\n".join(lines) + "\n"


def parse_pm_rows(lines: list[str], n: int) -> np.ndarray:
    if len(lines) != n:
        raise FormatError(f"expected {n} rows, found {len(lines)}")
    rows = []
    for i, line in enumerate(lines):
        if len(line) != n:
            raise FormatError(f"row {i + 1} has {len(line)} characters, expected {n}")
        try:
            rows.append([PM_CHARS[c] for c in line])
        except KeyError as exc:
            raise FormatError(f"row {i + 1}: invalid character {exc.args[0]!r}") from None
    return sign_matrix(rows)


def parse_order(token: str) -> int:
    if not (token.isascii() and token.isdigit()) or int(token) < 1:
        raise FormatError(f"invalid order {token!r}")
    return int(token)


def parse_pm(text: str) -> np.ndarray:
    lines = text.splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty PM input")
    n = parse_order(lines[0].strip())
    return parse_pm_rows(lines[1:], n)
