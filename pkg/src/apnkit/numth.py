"""Unbounded-integer number theory: p-adic digits, Lucas binomials,
modular inverses and the Hermite-Dickson coefficient of x^(q-1)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotInvertibleError, ParameterError, ResourceError

EXACT_BINOMIAL_LIMIT = 10**6


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % f for f in range(3, math.isqrt(p) + 1, 2))


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m >= 1, ascending (trial division)."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ParameterError(f"{p!r} is not a prime")


@dataclass(frozen=True)
class DigitVector:
    """Little-endian base-``base`` digits; zero is the empty tuple."""

    base: int
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        v = 0
        for dig in reversed(self.digits):
            v = v * self.base + dig
        return v

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i] if i < len(self.digits) else 0


@dataclass(frozen=True)
class HermiteReport:
    p: int
    n: int
    d: int
    t: int
    c_mod_p: int
    term_count: int

    @property
    def certifies_non_permutation(self) -> bool:
        return self.c_mod_p != 0


def p_adic_digits(m: int, p: int) -> DigitVector:
    _check_prime(p)
    if m < 0:
        raise ParameterError("m must be nonnegative")
    digits = []
    while m:
        m, r = divmod(m, p)
        digits.append(r)
    return DigitVector(p, tuple(digits))


@lru_cache(maxsize=None)
def _small_binomials(p: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(math.comb(a, b) % p for b in range(p)) for a in range(p))


def lucas_binomial(m: int, r: int, p: int) -> int:
    """binom(m, r) mod p as the product of binomials of base-p digits."""
    _check_prime(p)
    if m < 0 or r < 0:
        raise ParameterError("m and r must be nonnegative")
    if r > m:
        return 0
    table = _small_binomials(p)
    acc = 1
    while r:
        m, mi = divmod(m, p)
        r, ri = divmod(r, p)
        if ri > mi:
            return 0
        acc = acc * table[mi][ri] % p
    return acc


def exact_binomial(m: int, r: int) -> int:
    if m < 0 or r < 0:
        raise ParameterError("m and r must be nonnegative")
    if m > EXACT_BINOMIAL_LIMIT:
        raise ResourceError(f"exact_binomial guard: m = {m} > {EXACT_BINOMIAL_LIMIT}")
    return math.comb(m, r)


def mod_inverse(a: int, m: int) -> int:
    if m < 2:
        raise ParameterError("modulus must be at least 2")
    if math.gcd(a, m) != 1:
        raise NotInvertibleError(f"gcd({a}, {m}) = {math.gcd(a, m)}")
    return pow(a, -1, m)


def hermite_coefficient(p: int, n: int, d: int, t: int) -> HermiteReport:
    """Coefficient of x^(q-1) in ((x+1)^d - x^d)^t mod (x^q - x), reduced mod p.

    Evaluates the double sum over i (multiples of q-1 hit by the exponent
    dt - j) and k (the binomial expansion index), each binomial by Lucas.
    A nonzero result means (x+1)^d - x^d does not permute GF(p^n).
    """
    _check_prime(p)
    if n < 1:
        raise ParameterError("n must be >= 1")
    if d < 1:
        raise ParameterError("d must be >= 1")
    q = p**n
    if not 1 <= t <= q - 2:
        raise ParameterError(f"t = {t} outside [1, q-2] = [1, {q - 2}]")
    if t % p == 0:
        raise ParameterError(f"t = {t} is divisible by p = {p}")

    dt = d * t
    total = 0
    terms = 0
    for i in range(1, dt // (q - 1) + 1):
        j = dt - i * (q - 1)
        k_lo = max(0, -(-j // d))
        for k in range(k_lo, t + 1):
            c = lucas_binomial(t, k, p)
            if not c:
                continue
            c = c * lucas_binomial(d * k, j, p) % p
            if not c:
                continue
            terms += 1
            total += -c if (t - k) % 2 else c
    return HermiteReport(p, n, d, t, total % p, terms)
