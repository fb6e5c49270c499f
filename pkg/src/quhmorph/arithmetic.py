"""Rational-prime arithmetic behind the QUH nonexistence criterion.

The number field in play is K = Q[sqrt(-p), sqrt(s)] where p = 3 mod 4 is
prime and s is the squarefree part of p + 1.  Its quadratic subfields are
labelled K1 = Q[sqrt(-p)], K2 = Q[sqrt(s)] and K3 = Q[sqrt(-ps)].  Splitting
of an odd prime q in K is read off from two Legendre symbols.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ParameterError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization, ``{prime: exponent}`` in increasing order."""
    if n < 1:
        raise ParameterError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    for f in (2, 3):
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
    f = 5
    while f * f <= n:
        for g in (f, f + 2):
            while n % g == 0:
                factors[g] = factors.get(g, 0) + 1
                n //= g
        f += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k`` for a prime p, or None."""
    if q < 2:
        return None
    factors = factorize(q)
    if len(factors) != 1:
        return None
    ((p, k),) = factors.items()
    return p, k


def primes_up_to(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for f in range(3, math.isqrt(limit) + 1, 2):
        if sieve[f]:
            sieve[f * f :: 2 * f] = False
    return np.flatnonzero(sieve)


def _require_odd_prime(q: int, name: str = "q") -> None:
    if q % 2 == 0 or not is_prime(q):
        raise ParameterError(f"{name}={q} must be an odd prime")


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) by Euler's criterion."""
    _require_odd_prime(q)
    r = pow(a % q, (q - 1) // 2, q)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def squarefree_part(n: int) -> int:
    if n < 1:
        raise ParameterError(f"squarefree part needs n >= 1, got {n}")
    return math.prod(p for p, e in factorize(n).items() if e % 2)


def _require_quh_prime(p: int) -> None:
    if p % 4 != 3 or not is_prime(p):
        raise ParameterError(f"p={p} must be a prime congruent to 3 mod 4")


def disc_K(p: int) -> int:
    """Discriminant of Q[sqrt(-p), sqrt(s)], s the squarefree part of p + 1."""
    _require_quh_prime(p)
    s = squarefree_part(p + 1)
    if s % 4 == 1:
        return s * s * p * p
    return 16 * s * s * p * p


def quadratic_disc(d: int) -> int:
    """Discriminant of Q[sqrt(d)] for squarefree d != 1."""
    if d == 1 or d == 0 or squarefree_part(abs(d)) != abs(d):
        raise ParameterError(f"d={d} must be a squarefree integer other than 0, 1")
    return d if d % 4 == 1 else 4 * d


class SplitType(enum.Enum):
    RAMIFIED = "Ramified"
    SPLITS_COMPLETELY = "SplitsCompletely"
    SPLITS_IN_K1_ONLY = "SplitsInK1Only"
    SPLITS_IN_K2_ONLY = "SplitsInK2Only"
    SPLITS_IN_K3_ONLY = "SplitsInK3Only"

    def __str__(self) -> str:
        return self.value


def split_type(q: int, p: int) -> SplitType:
    """How the odd prime q decomposes in K.  No prime is inert in K."""
    _require_odd_prime(q)
    _require_quh_prime(p)
    if q == p:
        raise ParameterError("q must differ from p")
    s = squarefree_part(p + 1)
    if (s * p) % q == 0:
        return SplitType.RAMIFIED
    in_k1 = legendre(-p, q) == 1
    in_k2 = legendre(s, q) == 1
    if in_k1 and in_k2:
        return SplitType.SPLITS_COMPLETELY
    if in_k1:
        return SplitType.SPLITS_IN_K1_ONLY
    if in_k2:
        return SplitType.SPLITS_IN_K2_ONLY
    # (-ps/q) = (-p/q)(s/q) = +1
    return SplitType.SPLITS_IN_K3_ONLY


@dataclass(frozen=True)
class NonexistenceVerdict:
    empty: bool
    witness: int | None
    n: int
    t: int
    p: int
    s: int

    def __str__(self) -> str:
        return f"EMPTY witness={self.witness}" if self.empty else "UNKNOWN"


def _is_witness(q: int, p: int, s: int) -> bool:
    return q % 2 == 1 and legendre(s, q) == 1 and legendre(-p, q) == -1


def nonexistence_witness(n: int, p: int) -> NonexistenceVerdict:
    """Decide whether the Legendre criterion rules out QUH matrices in H(n, X_p).

    Scans the odd prime divisors q of the squarefree part t of n in
    increasing order and returns the first q with (s/q) = 1 and
    (-p/q) = -1.  An UNKNOWN verdict only means the criterion is silent.
    """
    if n < 1 or n % 2 == 0:
        raise ParameterError(f"n={n} must be a positive odd integer")
    _require_quh_prime(p)
    s = squarefree_part(p + 1)
    if s == 1:
        raise ParameterError(
            f"squarefree part of p+1 is 1 for p={p}; use x3_emptiness instead"
        )
    t = squarefree_part(n)
    for q in factorize(t):
        if q != 2 and _is_witness(q, p, s):
            return NonexistenceVerdict(True, q, n, t, p, s)
    return NonexistenceVerdict(False, None, n, t, p, s)


def x3_emptiness(n: int) -> NonexistenceVerdict:
    """Emptiness of H(n, X_3): some prime q = 5 mod 6 divides the squarefree part of n."""
    if n < 1:
        raise ParameterError(f"n={n} must be positive")
    t = squarefree_part(n)
    for q in factorize(t):
        if q % 6 == 5:
            return NonexistenceVerdict(True, q, n, t, 3, 1)
    return NonexistenceVerdict(False, None, n, t, 3, 1)


def emptiness_table(p: int, n_max: int) -> list[int]:
    return [n for n in range(1, n_max + 1, 2) if nonexistence_witness(n, p).empty]


def density_counts(p: int, limit: int) -> tuple[int, int]:
    """``(hits, total)`` over odd primes q <= limit not dividing s*p."""
    if limit < 3:
        raise ParameterError(f"limit={limit} must be at least 3")
    _require_quh_prime(p)
    s = squarefree_part(p + 1)
    if s == 1:
        raise ParameterError(f"squarefree part of p+1 is 1 for p={p}")
    hits = total = 0
    for q in primes_up_to(limit)[1:].tolist():
        if (s * p) % q == 0:
            continue
        total += 1
        if _is_witness(q, p, s):
            hits += 1
    return hits, total


def density_scan(p: int, limit: int) -> Fraction:
    """Proportion of unramified odd primes up to ``limit`` that can act as witnesses."""
    hits, total = density_counts(p, limit)
    if total == 0:
        return Fraction(0)
    return Fraction(hits, total)
