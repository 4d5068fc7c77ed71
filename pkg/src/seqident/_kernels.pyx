# cython: language_level=3
"""Compiled compute kernels; Cython twin of seqident._kernels_py.

The values are arbitrary-precision Python ints (or Fractions), so the
arithmetic itself stays in CPython's exact object protocol; compiling
removes the interpreter overhead of the surrounding loops.  Signatures
and results are identical to the pure-Python module.
"""


def fib_pair(n):
    """Return (F(n), F(n+1)) for n >= 0 by fast doubling.

    Uses F(2k) = F(k)*(2*F(k+1) - F(k)) and F(2k+1) = F(k)^2 + F(k+1)^2,
    walking the bits of n from the top.  O(log n) big-int multiplications.
    """
    cdef object a = 0
    cdef object b = 1
    cdef object c, d
    cdef Py_ssize_t i
    for i in range(n.bit_length() - 1, -1, -1):
        c = a * (2 * b - a)
        d = a * a + b * b
        if (n >> i) & 1:
            a = d
            b = c + d
        else:
            a = c
            b = d
    return a, b


def fill_forward(list coeffs, list window, Py_ssize_t count):
    """Extend a linear recurrence forward by `count` steps.

    `window` holds the d most recent values U(s)..U(s+d-1); coeffs[i] is
    the coefficient of U(n-1-i).  Returns [U(s+d), ..., U(s+d+count-1)].
    """
    cdef Py_ssize_t d = len(coeffs)
    cdef list vals = list(window)
    cdef Py_ssize_t j, i, m
    cdef object acc
    for j in range(count):
        m = len(vals)
        acc = coeffs[0] * vals[m - 1]
        for i in range(1, d):
            acc = acc + coeffs[i] * vals[m - 1 - i]
        vals.append(acc)
    return vals[d:]


def dot_product(list xs, list ys):
    """Exact dot product of two equal-length value lists."""
    cdef object acc = 0
    cdef Py_ssize_t i
    cdef Py_ssize_t n = min(len(xs), len(ys))
    for i in range(n):
        acc = acc + xs[i] * ys[i]
    return acc


def convolution_values(list weights, list values, Py_ssize_t lo, Py_ssize_t hi):
    """Convolution sums S(n) = sum_{k=1}^{n-1} weights[k] * values[n-k].

    Both input lists are indexed by absolute sequence index (entry i is the
    i-th term, entries 0..hi must be present).  Returns [S(lo), ..., S(hi)].
    """
    cdef list out = []
    cdef Py_ssize_t n, k
    cdef object acc
    for n in range(lo, hi + 1):
        acc = 0
        for k in range(1, n):
            acc = acc + weights[k] * values[n - k]
        out.append(acc)
    return out
