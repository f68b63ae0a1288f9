"""GF(p^n) in the polynomial basis.

Elements are coefficient vectors ``(c0, ..., c_{n-1})`` standing for
c0 + c1*X + ... + c_{n-1}*X^{n-1} modulo a monic irreducible polynomial.
Each element also has an integer *code*, its position in the
lexicographic enumeration of coefficient tuples:
``code = c0*p^(n-1) + c1*p^(n-2) + ... + c_{n-1}``.  The vectorised sweeps
in :mod:`apnkit.diffspec` work on codes; the element API below never needs
them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import ParameterError
from .numth import is_prime, prime_factors


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        return f"FieldElement({self.coeffs})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)


# --- polynomials over Z_p as little-endian coefficient lists -------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo m over Z_p; m need not be monic."""
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        shift = len(a) - 1 - dm
        f = a[-1] * inv_lead % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, deg: int):
    for low in itertools.product(range(p), repeat=deg):
        yield list(low) + [1]


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = _trim([c % p for c in modulus])
    deg = len(m) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for f in _monic_polys(p, k):
            if not _poly_rem(m, f, p):
                return False
    return True


def _parse_modulus(modulus, p: int, n: int) -> tuple[int, ...]:
    m = [int(c) for c in modulus]
    if any(not 0 <= c < p for c in m):
        raise ParameterError("modulus coefficients must lie in [0, p)")
    m = _trim(m)
    if len(m) - 1 != n:
        raise ParameterError(f"modulus has degree {len(m) - 1}, expected {n}")
    if m[-1] != 1:
        raise ParameterError("modulus must be monic")
    if not is_irreducible(m, p):
        raise ParameterError(f"modulus {m} is reducible over GF({p})")
    return tuple(m)


def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n.

    Candidates are ordered by their low coefficients (c0, ..., c_{n-1})
    compared from the constant term upward.
    """
    for low in itertools.product(range(p), repeat=n):
        m = list(low) + [1]
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.n)

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={self.modulus})"

    # -- elements ---------------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.n)

    @property
    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.n - 1))

    def element(self, coeffs) -> FieldElement:
        c = tuple(int(v) % self.p for v in coeffs)
        if len(c) != self.n:
            raise ParameterError(f"expected {self.n} coefficients, got {len(c)}")
        return FieldElement(c)

    def _check(self, *xs: FieldElement) -> None:
        for x in xs:
            if len(x.coeffs) != self.n:
                raise ParameterError(
                    f"element of dimension {len(x.coeffs)} used in GF({self.p}^{self.n})"
                )

    def to_code(self, x: FieldElement) -> int:
        self._check(x)
        code = 0
        for c in x.coeffs:
            code = code * self.p + c
        return code

    def from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise ParameterError(f"code {code} outside [0, {self.q})")
        out = []
        for _ in range(self.n):
            code, r = divmod(code, self.p)
            out.append(r)
        return FieldElement(tuple(reversed(out)))

    def enumerate(self) -> list[FieldElement]:
        return [FieldElement(c) for c in itertools.product(range(self.p), repeat=self.n)]

    # -- arithmetic -------------------------------------------------------

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        self._check(x, y)
        p = self.p
        return FieldElement(tuple((a + b) % p for a, b in zip(x.coeffs, y.coeffs)))

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        self._check(x, y)
        p = self.p
        return FieldElement(tuple((a - b) % p for a, b in zip(x.coeffs, y.coeffs)))

    def neg(self, x: FieldElement) -> FieldElement:
        self._check(x)
        return FieldElement(tuple(-a % self.p for a in x.coeffs))

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        self._check(x, y)
        p, n, m = self.p, self.n, self.modulus
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(x.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    prod[i + j] += a * b
        # m is monic: X^n = -(m_0 + ... + m_{n-1} X^{n-1})
        for k in range(2 * n - 2, n - 1, -1):
            f = prod[k] % p
            if f:
                base = k - n
                for i in range(n):
                    prod[base + i] -= f * m[i]
        return FieldElement(tuple(c % p for c in prod[:n]))

    def pow(self, x: FieldElement, d: int) -> FieldElement:
        """x^d by square-and-multiply; 0^0 = 1 and 0^d = 0 for d > 0."""
        self._check(x)
        if d < 0:
            raise ParameterError("exponent must be nonnegative")
        if x.is_zero():
            return self.one if d == 0 else self.zero
        if d:
            d = (d - 1) % (self.q - 1) + 1
        result, base = self.one, x
        while d:
            if d & 1:
                result = self.mul(result, base)
            d >>= 1
            if d:
                base = self.mul(base, base)
        return result

    def inverse(self, x: FieldElement) -> FieldElement:
        if x.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(x, self.q - 2)

    # -- tables for the sweeps -------------------------------------------

    @cached_property
    def primitive_element(self) -> FieldElement:
        order = self.q - 1
        cofactors = [order // r for r in prime_factors(order)] if order > 1 else []
        for code in range(1, self.q):
            g = self.from_code(code)
            if all(self.pow(g, c) != self.one for c in cofactors):
                return g
        raise AssertionError("multiplicative group is cyclic")  # cannot happen

    @cached_property
    def exp_table(self) -> np.ndarray:
        """exp_table[k] = code of g^k for 0 <= k < q-1."""
        g = self.primitive_element
        out = np.empty(self.q - 1, dtype=np.int64)
        cur = self.one
        for k in range(self.q - 1):
            out[k] = self.to_code(cur)
            cur = self.mul(cur, g)
        return out

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[code] = k with g^k = element; entry 0 is unused (-1)."""
        out = np.full(self.q, -1, dtype=np.int64)
        out[self.exp_table] = np.arange(self.q - 1, dtype=np.int64)
        return out

    @cached_property
    def _code_digits(self) -> np.ndarray:
        codes = np.arange(self.q, dtype=np.int64)
        return np.stack([(codes // self.p**i) % self.p for i in range(self.n)], axis=1)

    @cached_property
    def unit_shift(self) -> np.ndarray:
        return self.shift_table(self.one)

    def shift_table(self, a: FieldElement) -> np.ndarray:
        """Codes of x + a for every code x."""
        digits = self._code_digits
        ad = digits[self.to_code(a)]
        weights = self.p ** np.arange(self.n, dtype=np.int64)
        return ((digits + ad) % self.p) @ weights


def build_field(p: int, n: int, modulus=None) -> FieldSpec:
    if not isinstance(p, int) or not is_prime(p):
        raise ParameterError(f"{p!r} is not a prime")
    if not isinstance(n, int) or n < 1:
        raise ParameterError("degree n must be a positive integer")
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _build_field(p, n, modulus)


@lru_cache(maxsize=64)
def _build_field(p, n, modulus):
    m = default_modulus(p, n) if modulus is None else _parse_modulus(modulus, p, n)
    return FieldSpec(p, n, m)
