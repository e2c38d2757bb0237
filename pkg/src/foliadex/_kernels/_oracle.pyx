# cython: language_level=3
"""Compiled enumeration kernel.

Twin of oracle_py.best_index_bound; same contract, same tie-breaking.
Works in C long long, so the dispatcher must pre-check that every
product formed here stays below 2^63 (see _kernels.__init__).
"""


def best_index_bound(
    long long beta_num,
    long long gamma_num,
    long long scale,
    long long m,
    long long b1,
    long long d_max,
    long long c_max,
):
    cdef long long a = beta_num
    cdef long long b = m * beta_num + gamma_num
    cdef long long best_num = 0
    cdef long long best_den = 0
    cdef long long best_d = 0
    cdef long long best_c = 0
    cdef long long d, c, lo, num, den
    for d in range(1, d_max + 1):
        lo = b1 * d + 1
        for c in range(lo, c_max + 1):
            if a * (c + m * d) <= b * d:
                num = a
                den = scale * d
            else:
                num = b
                den = scale * (c + m * d)
            if best_den == 0 or num * best_den > best_num * den:
                best_num = num
                best_den = den
                best_d = d
                best_c = c
    if best_den == 0:
        raise ValueError("empty enumeration range for (d_max, c_max)")
    return best_num, best_den, best_d, best_c
