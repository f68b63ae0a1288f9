import numpy as np
import pytest

from apnkit import kernels
from apnkit.diffspec import power_map


def test_selection():
    assert "python" in kernels.available_backends()
    assert kernels.backend() in kernels.available_backends()
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.parametrize("d", [0, 1, 2, 14, 43, 83, 122, 10**40 + 7])
def test_power_table_backends_agree(gf125, d):
    tables = {}
    for name in kernels.available_backends():
        prev = kernels.use_backend(name)
        try:
            tables[name] = power_map(gf125, d)
        finally:
            kernels.use_backend(prev)
    ref = tables.pop("python")
    for other in tables.values():
        assert np.array_equal(ref, other)


def test_power_table_matches_element_pow(gf125, backend):
    for d in (0, 1, 5, 43, 124, 125, 10**20):
        table = power_map(gf125, d)
        for code in range(gf125.q):
            x = gf125.from_code(code)
            assert table[code] == gf125.to_code(gf125.pow(x, d))


def test_difference_counts_backends_agree(gf243):
    rng = np.random.default_rng(7)
    table = rng.integers(0, gf243.q, gf243.q, dtype=np.int64)
    shift = gf243.unit_shift
    out = []
    for name in kernels.available_backends():
        prev = kernels.use_backend(name)
        try:
            out.append(kernels.difference_counts(table, shift, 3, 5))
        finally:
            kernels.use_backend(prev)
    assert all(np.array_equal(out[0], o) for o in out)
    assert out[0].sum() == gf243.q


def _naive_polymulmod(a, b, p):
    q = len(a)
    out = [0] * q
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            s = i + j
            if s >= q:
                s -= q - 1
            out[s] += int(x) * int(y)
    return [c % p for c in out]


@pytest.mark.parametrize("p, q", [(3, 9), (5, 25), (3, 243), (7, 49)])
def test_polymulmod(backend, p, q):
    rng = np.random.default_rng(q)
    for _ in range(5):
        a = rng.integers(0, p, q, dtype=np.int64)
        b = rng.integers(0, p, q, dtype=np.int64)
        assert kernels.polymulmod(a, b, p).tolist() == _naive_polymulmod(a, b, p)


def test_polymulmod_long_input(backend):
    # exercises the periodic reduction of partial sums in the compiled loop
    p, q = 7, 3000
    rng = np.random.default_rng(1)
    a = rng.integers(0, p, q, dtype=np.int64)
    b = rng.integers(0, p, q, dtype=np.int64)
    got = kernels.polymulmod(a, b, p)
    full = np.convolve(a, b)
    ref = full[:q].copy()
    ref[1:] += full[q:]
    assert np.array_equal(got, ref % p)


def test_fallback_when_extension_missing():
    import subprocess
    import sys

    code = (
        "import sys\n"
        "class Block:\n"
        "    def find_spec(self, name, path=None, target=None):\n"
        "        if name == 'apnkit.kernels._ckernels':\n"
        "            raise ImportError(name)\n"
        "sys.meta_path.insert(0, Block())\n"
        "from apnkit import kernels, build_field, delta\n"
        "print(kernels.backend(), kernels.available_backends(), delta(build_field(3, 5), 134))\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "['python']", "2"]
