"""Reference kernels in plain Python (numpy only for the convolution)."""

import numpy as np


def power_table(exp, log, e, zero_value):
    exp = exp.tolist()
    m = len(exp)
    out = [zero_value]
    out.extend(exp[(lx * e) % m] for lx in log.tolist()[1:])
    return np.array(out, dtype=np.int64)


def difference_counts(table, shift, p, n):
    table = table.tolist()
    counts = [0] * len(table)
    for x, y in enumerate(shift.tolist()):
        u = table[y]
        v = table[x]
        b = 0
        place = 1
        for _ in range(n):
            u, du = divmod(u, p)
            v, dv = divmod(v, p)
            b += ((du - dv) % p) * place
            place *= p
        counts[b] += 1
    return np.array(counts, dtype=np.int64)


def polymulmod(a, b, p):
    q = len(a)
    full = np.convolve(a, b)
    out = full[:q].copy()
    # x^s for s >= q folds onto x^(s - (q-1))
    out[1:] += full[q:]
    return out % p
