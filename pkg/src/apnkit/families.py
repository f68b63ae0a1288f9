"""Generators for the APN exponent families over GF(3^n) and GF(5^n),
and the exact congruence identities that tie them together."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvariantError, NoSolutionError, ParameterError
from .numth import mod_inverse


class Family(str, Enum):
    CONJ_1_3 = "CONJ_1_3"
    CONJ_1_4 = "CONJ_1_4"
    CONJ_1_5 = "CONJ_1_5"
    THM_1_6_ZW3 = "THM_1_6_ZW3"
    THM_1_7_ZW5 = "THM_1_7_ZW5"
    THM_1_10 = "THM_1_10"
    PROP_3_2_HRS = "PROP_3_2_HRS"
    COR_3_3 = "COR_3_3"


@dataclass(frozen=True)
class FamilyDescriptor:
    family_id: Family
    p: int
    n: int
    params: dict
    d: int
    apn_guaranteed: bool = True
    notes: tuple[str, ...] = field(default=())

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def gcd_with_group(self) -> int:
        return math.gcd(self.d, self.q - 1)


def _exact(num: int, den: int, what: str) -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise InvariantError(f"{what}: {num} / {den} is not exact")
    return quo


def _odd_at_least(n: int, low: int) -> None:
    if not isinstance(n, int) or n % 2 == 0 or n < low:
        raise ParameterError(f"n must be an odd integer >= {low}, got {n!r}")


def conj13_exponent(n: int) -> FamilyDescriptor:
    _odd_at_least(n, 5)
    m = (n + 1) // 2
    d = _exact(3**m - 1, 2, "(3^m-1)/2")
    if n % 4 == 1:
        d += _exact(3**n - 1, 2, "(3^n-1)/2")
    return FamilyDescriptor(
        Family.CONJ_1_3, 3, n, {"m": m}, d,
        notes=("n = 1 mod 4 branch reads the printed 3^(m^2) as 3^m",),
    )


def conj14_exponent(n: int) -> FamilyDescriptor:
    _odd_at_least(n, 5)
    d = _exact(3 ** (n + 1) - 1, 8, "(3^(n+1)-1)/8")
    if n % 4 == 1:
        d += _exact(3**n - 1, 2, "(3^n-1)/2")
    return FamilyDescriptor(Family.CONJ_1_4, 3, n, {}, d)


def conj15_exponent(n: int) -> FamilyDescriptor:
    _odd_at_least(n, 3)
    m = (n + 1) // 2
    d = _exact(5**n - 1, 4, "(5^n-1)/4") + _exact(5**m - 1, 2, "(5^m-1)/2")
    return FamilyDescriptor(Family.CONJ_1_5, 5, n, {"m": m}, d)


def zw_exponent(p: int, n: int, k: int, u: int) -> FamilyDescriptor:
    """d with (p^k + 1) d - 2 = u (p^n - 1), p in {3, 5}.

    For p = 3 the APN conclusion also needs 2k < n; otherwise only
    delta <= 2 is guaranteed and ``apn_guaranteed`` is False.
    """
    if p not in (3, 5):
        raise ParameterError("p must be 3 or 5")
    if n < 1 or k < 1:
        raise ParameterError("n and k must be positive")
    if math.gcd(n, k) != 1:
        raise ParameterError(f"gcd(n, k) = {math.gcd(n, k)} != 1")
    if u % 2 == 0:
        raise ParameterError("u must be odd")
    if p == 5 and k % 2:
        raise ParameterError("k must be even for p = 5")
    d, rem = divmod(2 + u * (p**n - 1), p**k + 1)
    if rem:
        raise NoSolutionError(f"(2 + {u}*({p}^{n}-1)) is not divisible by {p}^{k}+1")
    fam = Family.THM_1_6_ZW3 if p == 3 else Family.THM_1_7_ZW5
    apn = 2 * k < n if p == 3 else True
    return FamilyDescriptor(fam, p, n, {"k": k, "u": u}, d, apn_guaranteed=apn)


def zw_solutions(p: int, n: int, k: int) -> list[FamilyDescriptor]:
    """All odd u <= p^k + 1 that give an integral exponent for (p, n, k).

    Past that bound u only adds multiples of p^n - 1 to d.
    """
    out = []
    for u in range(1, p**k + 2, 2):
        try:
            out.append(zw_exponent(p, n, k, u))
        except NoSolutionError:
            continue
    return out


def _check_thm110(n: int, l: int) -> None:
    if l < 2:
        raise ParameterError("l must be >= 2")
    if n < 1 or (n + 1) % 2**l:
        raise ParameterError(f"need n = -1 mod 2^{l}, got n = {n}")


def _thm110_value(n: int, l: int) -> int:
    k = (n + 1) >> l
    half = _exact(_exact(5 ** (n + 1) - 1, 5**k + 1, "(5^(n+1)-1)/(5^k+1)"), 2, "halving")
    return half + _exact(5**n - 1, 4, "(5^n-1)/4")


def thm110_exponent(n: int, l: int) -> FamilyDescriptor:
    _check_thm110(n, l)
    d = _thm110_value(n, l)
    if d % 2 == 0:
        raise InvariantError(f"exponent {d} for (n={n}, l={l}) is even")
    return FamilyDescriptor(Family.THM_1_10, 5, n, {"l": l, "k": (n + 1) >> l}, d)


def hrs_exponent(k: int, n: int) -> FamilyDescriptor:
    if k < 1 or n < 1:
        raise ParameterError("k and n must be positive")
    if math.gcd(2 * n, k) != 1:
        raise ParameterError(f"gcd(2n, k) = {math.gcd(2 * n, k)} != 1")
    return FamilyDescriptor(Family.PROP_3_2_HRS, 5, n, {"k": k}, _exact(5**k + 1, 2, "(5^k+1)/2"))


def cor33_exponent(n: int, l: int) -> FamilyDescriptor:
    if l < 1 or n < 1:
        raise ParameterError("n and l must be positive")
    if n % 2 ** (l + 1) != 2**l - 1:
        raise ParameterError(f"need n = 2^{l} - 1 mod 2^{l + 1}, got n = {n}")
    k = (n + 1) >> l
    base = hrs_exponent(k, n)
    return FamilyDescriptor(
        Family.COR_3_3, 5, n, {"l": l, "k": k}, base.d,
        notes=("exponent uses (n+1)/2^l, as in the proof",),
    )


def inverse_exponent(p: int, n: int, d: int) -> int:
    return mod_inverse(d, p**n - 1)


def lift_reduce_check(n: int, l: int) -> bool:
    """Exponent for GF(5^((2^l+1)n)) reduces mod 5^n - 1 to the one for GF(5^n)."""
    _check_thm110(n, l)
    big = (2**l + 1) * n
    e = _thm110_value(big, l)
    order = 5**n - 1
    return e % order == thm110_exponent(n, l).d % order


def conj15_lift_check(n: int) -> bool:
    """Lifting the n = 3 mod 4 exponent to GF(5^(3n)) for conj15."""
    if n < 3 or n % 4 != 3:
        raise ParameterError(f"need n = 3 mod 4, got n = {n}")
    m = (n + 1) // 2
    diff = (
        _exact(5 ** (3 * n) - 1, 4, "(5^(3n)-1)/4")
        + _exact(5 ** ((3 * n + 1) // 2) - 1, 2, "(5^((3n+1)/2)-1)/2")
        - _exact(5**n - 1, 4, "(5^n-1)/4")
        - _exact(5**m - 1, 2, "(5^m-1)/2")
    )
    num = (5**n - 1) * (2 * 5**m + 5**n * (5**n + 1))
    if num % 4:
        return False
    return diff == num // 4 and diff % (5**n - 1) == 0


def inverse_identity(n: int) -> bool:
    """((5^m + 1)/2) * conj15(n) = 1 mod 5^n - 1."""
    m = (n + 1) // 2
    return (5**m + 1) // 2 * conj15_exponent(n).d % (5**n - 1) == 1


def thm110_inverse_identity(n: int, l: int) -> bool:
    """((5^((n+1)/2^l) + 1)/2) * thm110(n, l) = 1 mod 5^n - 1."""
    k = (n + 1) >> l
    return (5**k + 1) // 2 * thm110_exponent(n, l).d % (5**n - 1) == 1


GENERATORS = {
    "conj13": conj13_exponent,
    "conj14": conj14_exponent,
    "conj15": conj15_exponent,
    "zw": zw_exponent,
    "thm110": thm110_exponent,
    "hrs": hrs_exponent,
    "cor33": cor33_exponent,
}
