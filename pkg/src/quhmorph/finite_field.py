"""GF(p^k) arithmetic, the quadratic character, and Jacobsthal matrices.

Elements are coefficient tuples ``(c0, c1, ..., c_{k-1})`` with c0 the
constant term.  The canonical enumeration reads that tuple as a base-p
integer (c0 least significant), so the zero element comes first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import matrix
from .arithmetic import is_prime, prime_power
from .errors import ParameterError


def _poly_mod(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num by the monic polynomial den, coefficients low to high."""
    num = [c % p for c in num]
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return num[:d] if d else []


def _divides(den: tuple[int, ...], num: tuple[int, ...], p: int) -> bool:
    return not any(_poly_mod(list(num), den, p))


def _monic(degree: int, p: int):
    """Monic polynomials of one degree, lowest coefficients compared first."""
    for low in itertools.product(range(p), repeat=degree):
        yield low + (1,)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for f in _monic(d, p):
            if _divides(f, poly, p):
                return False
    return k >= 1


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for poly in _monic(k, p):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class GfField:
    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    def __call__(self, value) -> GfElement:
        """Element from an integer (mod p) or a coefficient sequence."""
        if isinstance(value, (int, np.integer)):
            coeffs = (int(value) % self.p,) + (0,) * (self.k - 1)
        else:
            coeffs = tuple(int(c) % self.p for c in value)
            if len(coeffs) != self.k:
                raise ParameterError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return GfElement(self, coeffs)

    @property
    def zero(self) -> GfElement:
        return self(0)

    @property
    def one(self) -> GfElement:
        return self(1)

    def element(self, index: int) -> GfElement:
        if not 0 <= index < self.q:
            raise ParameterError(f"index {index} outside 0..{self.q - 1}")
        coeffs = []
        for _ in range(self.k):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return GfElement(self, tuple(coeffs))

    def elements(self) -> list[GfElement]:
        return [self.element(i) for i in range(self.q)]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k}, modulus={self.modulus})"


@dataclass(frozen=True)
class GfElement:
    owner: GfField = field(repr=False)
    coeffs: tuple[int, ...]

    def _check(self, other: GfElement) -> None:
        if not isinstance(other, GfElement) or other.owner != self.owner:
            raise ParameterError("operands belong to different fields")

    @property
    def index(self) -> int:
        p = self.owner.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __add__(self, other: GfElement) -> GfElement:
        self._check(other)
        p = self.owner.p
        return GfElement(self.owner, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> GfElement:
        p = self.owner.p
        return GfElement(self.owner, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other: GfElement) -> GfElement:
        return self + (-other)

    def __mul__(self, other: GfElement) -> GfElement:
        self._check(other)
        f = self.owner
        prod = [0] * (2 * f.k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return GfElement(f, tuple(_poly_mod(prod, f.modulus, f.p)))

    def __pow__(self, e: int) -> GfElement:
        if e < 0:
            raise ParameterError("negative exponents are not supported")
        result, base = self.owner.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __int__(self) -> int:
        return self.index


def field_new(p: int, k: int = 1) -> GfField:
    if p % 2 == 0 or not is_prime(p):
        raise ParameterError(f"characteristic {p} must be an odd prime")
    if k < 1:
        raise ParameterError(f"degree {k} must be positive")
    return GfField(p, k, smallest_irreducible(p, k))


def field_of_order(q: int) -> GfField:
    pk = prime_power(q)
    if pk is None or q % 2 == 0:
        raise ParameterError(f"q={q} is not an odd prime power")
    return field_new(*pk)


def gf_add(a: GfElement, b: GfElement) -> GfElement:
    return a + b


def gf_mul(a: GfElement, b: GfElement) -> GfElement:
    return a * b


def gf_pow(a: GfElement, e: int) -> GfElement:
    return a**e


def quadratic_character(a: GfElement) -> int:
    """+1 on nonzero squares, -1 on non-squares, 0 at zero (Euler's criterion)."""
    if not a:
        return 0
    f = a.owner
    r = a ** ((f.q - 1) // 2)
    if r == f.one:
        return 1
    if r == -f.one:
        return -1
    raise AssertionError(f"Euler criterion gave {r}; modulus is not irreducible")


def character_table(f: GfField) -> np.ndarray:
    """chi(g_i) for every element in canonical order."""
    return np.array([quadratic_character(g) for g in f.elements()], dtype=np.int64)


def jacobsthal(f: GfField) -> np.ndarray:
    """Q[i, j] = chi(g_i - g_j) under the canonical enumeration."""
    p, k, q = f.p, f.k, f.q
    chi = character_table(f)
    idx = np.arange(q)
    digits = np.stack([(idx // p**i) % p for i in range(k)])
    diff = (digits[:, :, None] - digits[:, None, :]) % p
    weights = (p ** np.arange(k)).reshape(k, 1, 1)
    return matrix.sign_matrix(chi[(diff * weights).sum(axis=0)])
