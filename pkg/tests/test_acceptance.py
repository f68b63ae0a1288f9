"""Exit criteria. Each test prints one PASS/FAIL line; all checks are exact.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
import random
import time

import pytest

from apnkit import build_field, cli, kernels
from apnkit import diffspec as ds
from apnkit import families as fam
from apnkit.numth import hermite_coefficient, lucas_binomial, mod_inverse


@pytest.fixture
def report(capsys):
    def _report(number, title, checks, elapsed=None, limit=None):
        failed = [name for name, ok in checks if not ok]
        if limit is not None and elapsed > limit:
            failed.append(f"runtime {elapsed:.1f}s > {limit}s")
        timing = f" ({elapsed:.2f}s)" if elapsed is not None else ""
        status = "PASS" if not failed else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title}{timing}")
            for name in failed:
                print(f"       failed: {name}")
        assert not failed, failed

    return _report


def test_criterion_1_table(report):
    t0 = time.perf_counter()
    rep = cli.verify_table()
    code, _ = cli.run(["verify-table"])
    elapsed = time.perf_counter() - t0
    checks = [(f"row {r['case']}", r["pass"] and r["delta"] == 2) for r in rep["rows"]]
    checks.append(("seven rows", len(rep["rows"]) == 7))
    checks.append(("exit code 0", code == 0))
    report(1, "table rows I-VII: cosets and delta = 2", checks, elapsed, limit=10)


def test_criterion_2_hermite(report):
    cases = [(3, 5, 134, 2), (3, 5, 212, 2), (3, 7, 40, 116), (3, 7, 820, 26)]
    checks = [(str(c), hermite_coefficient(*c).c_mod_p == 1) for c in cases]
    report(2, "Hermite coefficient C = 1 mod 3 for the four cases", checks)


def test_criterion_3_symbolic_equivalence(report, gf243):
    t0 = time.perf_counter()
    mismatches = [
        (d, t)
        for d in range(1, 242)
        for t in (2, 4, 5)
        if hermite_coefficient(3, 5, d, t).c_mod_p != ds.symbolic_power_reduce(gf243, d, t)
    ]
    elapsed = time.perf_counter() - t0
    report(3, "Lucas double sum = symbolic reduction, GF(3^5), 723 pairs",
           [(f"mismatches {mismatches[:5]}", not mismatches)], elapsed, limit=120)


def test_criterion_4_hermite_dickson(report, gf125):
    t0 = time.perf_counter()
    bad = [
        d for d in range(1, 124)
        if ds.hermite_dickson_is_permutation(gf125, d) != ds.is_permutation_derivative(gf125, d)
    ]
    elapsed = time.perf_counter() - t0
    report(4, "Hermite-Dickson = direct bijection test, GF(5^3), d in [1,123]",
           [(f"disagreements {bad}", not bad)], elapsed, limit=60)


def test_criterion_5_families(report, gf125):
    c152 = ds.cyclotomic_coset(3, 5, 152).coset
    c274 = ds.cyclotomic_coset(3, 7, 274).coset
    c224 = ds.cyclotomic_coset(3, 7, 224).coset
    a = ds.cyclotomic_coset(5, 3, fam.thm110_exponent(3, 2).d)
    b = ds.cyclotomic_coset(5, 3, fam.zw_exponent(5, 3, 2, 9).d)
    checks = [
        ("conj13(5) = 134", fam.conj13_exponent(5).d == 134),
        ("conj13(7) = 40", fam.conj13_exponent(7).d == 40),
        ("conj14(5) = 212 in coset(152)", fam.conj14_exponent(5).d == 212 and 212 in c152),
        ("conj14(7) = 820 in coset(274)", fam.conj14_exponent(7).d == 820 and 820 in c274),
        ("conj15(5) = 843", fam.conj15_exponent(5).d == 843),
        ("zw(3,7,2,3) = 656 in coset(224)", fam.zw_exponent(3, 7, 2, 3).d == 656 and 656 in c224),
        ("thm110(3,2) = 83", fam.thm110_exponent(3, 2).d == 83),
        ("zw(5,3,2,9) = 43", fam.zw_exponent(5, 3, 2, 9).d == 43),
        ("83 and 43 share a coset", a.coset == b.coset),
        ("delta of that coset is 2", all(ds.delta(gf125, d) == 2 for d in a.coset)),
    ]
    report(5, "family exponents match the table", checks)


def test_criterion_6_identities(report):
    checks = []
    for n, l in [(3, 2), (7, 2), (7, 3)]:
        checks.append((f"lift_reduce_check{(n, l)}", fam.lift_reduce_check(n, l)))
    for n in (3, 7):
        checks.append((f"conj15_lift_check({n})", fam.conj15_lift_check(n)))
    for n in (5, 9, 13):
        m = (n + 1) // 2
        checks.append((f"inverse identity n={n}",
                       (5**m + 1) // 2 * fam.conj15_exponent(n).d % (5**n - 1) == 1))
    odd = all(
        fam.thm110_exponent(n, l).d % 2 == 1
        for l in range(2, 6)
        for n in range(1, 32)
        if (n + 1) % 2**l == 0
    )
    checks.append(("thm110 exponents odd, n <= 31", odd))
    for n in (5, 7, 9, 11):
        checks.append((f"gcd conj13({n})", math.gcd(fam.conj13_exponent(n).d, 3**n - 1) == 2))
        checks.append((f"gcd conj14({n})", math.gcd(fam.conj14_exponent(n).d, 3**n - 1) == 2))
    report(6, "proof identities in exact integer arithmetic", checks)


def test_criterion_7_properties(report, gf125, gf243, gf2187):
    checks = []
    rng = random.Random(2024)

    lucas_ok = all(
        lucas_binomial(m, r, p) == math.comb(m, r) % p
        for p in (3, 5) for m in range(730) for r in range(730)
    )
    checks.append(("Lucas = exact binomial mod p, m,r <= 729", lucas_ok))

    deltas = {d: ds.delta(gf125, d) for d in range(124)}
    coset_ok = all(
        deltas[c] == deltas[d] for d in range(123) for c in ds.cyclotomic_coset(5, 3, d).coset
    )
    for spec in (gf243, gf2187):
        order = spec.q - 1
        for d in rng.sample(range(order), 20):
            ref = ds.delta(spec, d)
            coset_ok &= all(ds.delta(spec, c) == ref
                            for c in ds.cyclotomic_coset(spec.p, spec.n, d).coset)
    checks.append(("coset invariance of delta", coset_ok))

    inv_ok = all(
        deltas[mod_inverse(d, 124)] == deltas[d] for d in range(1, 124) if math.gcd(d, 124) == 1
    )
    checks.append(("delta(d) = delta(d^-1) over GF(5^3)", inv_ok))

    transport_ok = True
    mass_ok = True
    for d in rng.sample(range(1, 124), 10):
        ref = ds.spectrum(gf125, d).histogram
        for code in range(1, 125):
            sp = ds.spectrum(gf125, d, gf125.from_code(code))
            transport_ok &= sp.histogram == ref
            mass_ok &= sum(sp.counts) == gf125.q
    for spec in (gf125, gf243):
        for d in range(spec.q - 1):
            mass_ok &= sum(ds.spectrum(spec, d).counts) == spec.q
    checks.append(("histogram transport across all a != 0", transport_ok))
    checks.append(("sum_b N(a,b) = q", mass_ok))

    other = build_field(3, 5, [1, 2, 0, 0, 0, 1])
    rep_ok = other.modulus != gf243.modulus and all(
        ds.delta(gf243, d) == ds.delta(other, d) for d in rng.sample(range(242), 20)
    )
    checks.append(("representation independence, two moduli of GF(3^5)", rep_ok))

    floor_ok = all(ds.spectrum(gf125, d).count(gf125.one) >= 2 for d in range(1, 124, 2))
    checks.append(("N(1,1) >= 2 for odd d over GF(5^3)", floor_ok))
    report(7, "property suites", checks)


def test_criterion_8_search(report, gf243, gf125):
    t0 = time.perf_counter()
    found243 = ds.apn_search(gf243, 2)
    found125 = ds.apn_search(gf125, 2)
    elapsed = time.perf_counter() - t0
    reps243 = {c.representative for c in found243}
    reps125 = {c.representative for c in found125}

    def exact(spec, reps):
        # independent sweep over every exponent, on the other kernel backend when available
        alt = [b for b in kernels.available_backends() if b != kernels.backend()]
        prev = kernels.use_backend(alt[0]) if alt else None
        try:
            want = {
                ds.cyclotomic_coset(spec.p, spec.n, d).representative
                for d in range(1, spec.q - 1)
                if ds.delta(spec, d) <= 2
            }
            apn = all(ds.delta(spec, r) == 2 for r in reps if ds.delta(spec, r) > 1)
        finally:
            if prev:
                kernels.use_backend(prev)
        return want == reps and apn

    checks = [
        ("GF(3^5) contains cosets of 134 and 152", {134, 152} <= reps243),
        ("GF(5^3) contains cosets of 14 and 43", {14, 43} <= reps125),
        ("GF(3^5) result is exactly the delta <= 2 classes", exact(gf243, reps243)),
        ("GF(5^3) result is exactly the delta <= 2 classes", exact(gf125, reps125)),
        ("every returned class re-verifies delta <= 2",
         all(ds.delta(gf243, c.representative) <= 2 for c in found243)
         and all(ds.delta(gf125, c.representative) <= 2 for c in found125)),
        ("attested classes have delta exactly 2",
         all(ds.delta(gf243, d) == 2 for d in (134, 152))
         and all(ds.delta(gf125, d) == 2 for d in (14, 43))),
    ]
    report(8, "APN search at desk scale", checks, elapsed, limit=60)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
