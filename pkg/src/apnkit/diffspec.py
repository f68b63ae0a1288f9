"""Differential spectra of power maps, cyclotomic cosets and permutation tests."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ParameterError, ResourceError
from .ffield import FieldElement, FieldSpec
from .numth import _small_binomials, p_adic_digits

SWEEP_LIMIT = 10**6
SYMBOLIC_LIMIT = 10**5
HERMITE_DICKSON_LIMIT = 3000
SEARCH_LIMIT = 10**5


@dataclass(frozen=True)
class DifferentialSpectrum:
    """Counts N(a, b) for one exponent and one nonzero difference a.

    ``counts[i]`` is the number of solutions for the i-th element of
    ``spec.enumerate()``.
    """

    spec: FieldSpec
    d: int
    a: FieldElement
    counts: tuple[int, ...]

    @property
    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.counts).items()))

    @property
    def max_count(self) -> int:
        return max(self.counts)

    def count(self, b: FieldElement) -> int:
        return self.counts[self.spec.to_code(b)]


@dataclass(frozen=True)
class ExponentClass:
    p: int
    n: int
    d: int
    coset: tuple[int, ...]
    gcd_with_group: int

    @property
    def representative(self) -> int:
        return self.coset[0]

    @property
    def size(self) -> int:
        return len(self.coset)


def _check_sweep(spec: FieldSpec) -> None:
    if spec.q > SWEEP_LIMIT:
        raise ResourceError(f"q = {spec.q} exceeds the sweep limit {SWEEP_LIMIT}")


def power_map(spec: FieldSpec, d: int) -> np.ndarray:
    """Codes of x^d for every code x, in enumeration order."""
    if d < 0:
        raise ParameterError("exponent must be nonnegative")
    _check_sweep(spec)
    one = spec.to_code(spec.one)
    e = d % (spec.q - 1)
    return kernels.power_table(spec.exp_table, spec.log_table, e, one if d == 0 else 0)


def _derivative_counts(spec: FieldSpec, table: np.ndarray, a: FieldElement) -> np.ndarray:
    shift = spec.unit_shift if a == spec.one else spec.shift_table(a)
    return kernels.difference_counts(table, shift, spec.p, spec.n)


def spectrum(spec: FieldSpec, d: int, a: FieldElement | None = None) -> DifferentialSpectrum:
    a = spec.one if a is None else a
    spec._check(a)
    if a.is_zero():
        raise ParameterError("difference a must be nonzero")
    counts = _derivative_counts(spec, power_map(spec, d), a)
    return DifferentialSpectrum(spec, d, a, tuple(int(c) for c in counts))


def delta(spec: FieldSpec, d: int, full: bool = False) -> int:
    """Differential uniformity of x -> x^d.

    By default only a = 1 is examined, which suffices for power maps;
    ``full=True`` maximises over every nonzero a.
    """
    table = power_map(spec, d)
    if not full:
        return int(_derivative_counts(spec, table, spec.one).max())
    best = 0
    for code in range(1, spec.q):
        best = max(best, int(_derivative_counts(spec, table, spec.from_code(code)).max()))
    return best


def is_apn(spec: FieldSpec, d: int) -> bool:
    return delta(spec, d) == 2


def cyclotomic_coset(p: int, n: int, d: int) -> ExponentClass:
    order = p**n - 1
    if not 0 <= d <= order - 1:
        raise ParameterError(f"d = {d} outside [0, {order - 1}]")
    orbit = set()
    e = d
    for _ in range(n):
        orbit.add(e)
        e = e * p % order
    return ExponentClass(p, n, d, tuple(sorted(orbit)), math.gcd(d, order))


def is_permutation_derivative(spec: FieldSpec, d: int) -> bool:
    """Whether x -> (x+1)^d - x^d is a bijection, by direct evaluation."""
    counts = _derivative_counts(spec, power_map(spec, d), spec.one)
    return bool((counts == 1).all())


# --- polynomial side -------------------------------------------------------

def _reduced_exponent(s: int, q: int) -> int:
    return 0 if s == 0 else (s - 1) % (q - 1) + 1


def derivative_polynomial(spec: FieldSpec, d: int) -> np.ndarray:
    """Dense coefficients of (x+1)^d - x^d mod (x^q - x) over Z_p.

    Nonzero binomials binom(d, j) mod p are enumerated digitwise, so only
    the terms that survive Lucas' theorem are ever visited.
    """
    p, q = spec.p, spec.q
    out = np.zeros(q, dtype=np.int64)
    if d == 0:
        return out
    table = _small_binomials(p)
    digits = p_adic_digits(d, p).digits
    for js in itertools.product(*(range(dig + 1) for dig in digits)):
        coef = 1
        j = 0
        for i in reversed(range(len(js))):
            coef = coef * table[digits[i]][js[i]] % p
            j = j * p + js[i]
        if j == d:
            continue  # cancels against x^d
        s = _reduced_exponent(j, q)
        out[s] = (out[s] + coef) % p
    return out


def _poly_power(g: np.ndarray, t: int, p: int) -> np.ndarray:
    if t <= 8:
        acc = g
        for _ in range(t - 1):
            acc = kernels.polymulmod(acc, g, p)
        return acc
    acc = None
    base = g
    while t:
        if t & 1:
            acc = base if acc is None else kernels.polymulmod(acc, base, p)
        t >>= 1
        if t:
            base = kernels.polymulmod(base, base, p)
    return acc


def symbolic_power_reduce(spec: FieldSpec, d: int, t: int) -> int:
    """Coefficient of x^(q-1) in ((x+1)^d - x^d)^t mod (x^q - x), over Z_p."""
    q = spec.q
    if q > SYMBOLIC_LIMIT:
        raise ResourceError(f"q = {q} too large for dense polynomials (limit {SYMBOLIC_LIMIT})")
    if not 1 <= t <= q - 2:
        raise ParameterError(f"t = {t} outside [1, {q - 2}]")
    g = derivative_polynomial(spec, d)
    return int(_poly_power(g, t, spec.p)[q - 1])


def hermite_dickson_witness(spec: FieldSpec, d: int) -> int | None:
    """Smallest valid t whose reduced g^t reaches degree q-1, else None."""
    p, q = spec.p, spec.q
    g = derivative_polynomial(spec, d)
    cur = g
    for t in range(1, q - 1):
        if t % p and cur[q - 1]:
            return t
        if t < q - 2:
            cur = kernels.polymulmod(cur, g, p)
    return None


def hermite_dickson_is_permutation(spec: FieldSpec, d: int) -> bool:
    """Hermite-Dickson criterion applied to g(x) = (x+1)^d - x^d."""
    if spec.q > HERMITE_DICKSON_LIMIT:
        raise ResourceError(
            f"q = {spec.q} exceeds the Hermite-Dickson limit {HERMITE_DICKSON_LIMIT}"
        )
    roots = int(_derivative_counts(spec, power_map(spec, d), spec.one)[0])
    if roots != 1:
        return False
    return hermite_dickson_witness(spec, d) is None


def apn_search(spec: FieldSpec, delta_max: int = 2) -> list[ExponentClass]:
    """Classes of exponents d in [1, q-2] with delta(d) <= delta_max.

    Delta is computed once per coset; results are sorted by representative.
    """
    if spec.q > SEARCH_LIMIT:
        raise ResourceError(f"q = {spec.q} exceeds the search limit {SEARCH_LIMIT}")
    found = []
    seen = set()
    for d in range(1, spec.q - 1):
        if d in seen:
            continue
        cls = cyclotomic_coset(spec.p, spec.n, d)
        seen.update(cls.coset)
        if delta(spec, d) <= delta_max:
            found.append(cls)
    return sorted(found, key=lambda c: c.representative)
