# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the algorithms and contracts.

Coefficients are int64.  The L1 norm of every intermediate polynomial is at
most k * 2^(k*n), and the candidate constant is a sum of k terms in
{-1, 0, 1}, so the final comparison stays in range too.  Inputs with
k*n > MAX_WEIGHTS are handed to the pure-Python implementation instead.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memset

from fplab import _pykernels

cdef Py_ssize_t MAX_WEIGHTS = 56

cdef void _mul_into(const int64_t* a, Py_ssize_t la, const int64_t* b, Py_ssize_t lb,
                    int64_t* out) nogil:
    # out has room for la + lb - 1 entries
    cdef Py_ssize_t i, j
    memset(out, 0, (la + lb - 1) * sizeof(int64_t))
    for i in range(la):
        if a[i] != 0:
            for j in range(lb):
                out[i + j] += a[i] * b[j]


cdef Py_ssize_t _one_minus_into(const int* absw, Py_ssize_t n, int64_t* poly, int64_t* tmp) nogil:
    # poly <- prod_j (1 - t^absw[j]); returns length
    cdef Py_ssize_t length = 1, j, e
    cdef int a
    poly[0] = 1
    for j in range(n):
        a = absw[j]
        for e in range(length + a):
            tmp[e] = poly[e] if e < length else 0
        for e in range(length):
            tmp[e + a] -= poly[e]
        length += a
        for e in range(length):
            poly[e] = tmp[e]
    return length


def chi_constants(weight_lists):
    """Per-index constant value of the chi^i localization sum, None where non-constant."""
    cdef Py_ssize_t k = len(weight_lists)
    cdef Py_ssize_t n = len(weight_lists[0])
    if k * n > MAX_WEIGHTS:
        return _pykernels.chi_constants(weight_lists)

    cdef Py_ssize_t p, j, i, e, deg = 0, width
    cdef int* w = <int*> calloc(k * n, sizeof(int))
    cdef int* absw = <int*> calloc(k * n, sizeof(int))
    cdef Py_ssize_t* pdeg = <Py_ssize_t*> calloc(k, sizeof(Py_ssize_t))
    cdef int v
    for p in range(k):
        ws = weight_lists[p]
        for j in range(n):
            v = ws[j]
            w[p * n + j] = v
            absw[p * n + j] = v if v > 0 else -v
            pdeg[p] += absw[p * n + j]
        deg += pdeg[p]
    width = deg + 1

    # Q_p, prefix and suffix products, accumulators
    cdef int64_t* qs = <int64_t*> calloc(k * width, sizeof(int64_t))
    cdef int64_t* prefix = <int64_t*> calloc((k + 1) * width, sizeof(int64_t))
    cdef int64_t* suffix = <int64_t*> calloc((k + 1) * width, sizeof(int64_t))
    cdef Py_ssize_t* plen = <Py_ssize_t*> calloc(k + 1, sizeof(Py_ssize_t))
    cdef Py_ssize_t* slen = <Py_ssize_t*> calloc(k + 1, sizeof(Py_ssize_t))
    cdef int64_t* tmp = <int64_t*> calloc(2 * width + 1, sizeof(int64_t))
    cdef int64_t* others = <int64_t*> calloc(2 * width + 1, sizeof(int64_t))
    cdef int64_t* sig = <int64_t*> calloc((n + 1) * width, sizeof(int64_t))
    cdef int64_t* signew = <int64_t*> calloc(width, sizeof(int64_t))
    cdef int64_t* term = <int64_t*> calloc(2 * width + 1, sizeof(int64_t))
    cdef int64_t* acc = <int64_t*> calloc((n + 1) * width, sizeof(int64_t))
    cdef Py_ssize_t olen, used, top, sdeg
    cdef int a, sign
    cdef int64_t c
    cdef bint good

    try:
        for p in range(k):
            _one_minus_into(&absw[p * n], n, &qs[p * width], tmp)

        prefix[0] = 1
        plen[0] = 1
        for p in range(k):
            _mul_into(&prefix[p * width], plen[p], &qs[p * width], pdeg[p] + 1,
                      &prefix[(p + 1) * width])
            plen[p + 1] = plen[p] + pdeg[p]
        suffix[k * width] = 1
        slen[k] = 1
        for p in range(k - 1, -1, -1):
            _mul_into(&suffix[(p + 1) * width], slen[p + 1], &qs[p * width], pdeg[p] + 1,
                      &suffix[p * width])
            slen[p] = slen[p + 1] + pdeg[p]

        for p in range(k):
            _mul_into(&prefix[p * width], plen[p], &suffix[(p + 1) * width], slen[p + 1],
                      others)
            olen = plen[p] + slen[p + 1] - 1

            # t^A sigma_i(t^w) via prod over weights of (1 + y t^w) or (t^a + y)
            sdeg = pdeg[p]
            memset(sig, 0, (n + 1) * width * sizeof(int64_t))
            sig[0] = 1
            sign = 1
            used = 0
            for j in range(n):
                v = w[p * n + j]
                a = absw[p * n + j]
                if v < 0:
                    sign = -sign
                top = used + 1 if used + 1 < n else n
                for i in range(top, -1, -1):
                    for e in range(sdeg + 1):
                        if v > 0:
                            c = sig[i * width + e]
                            if i > 0 and e >= a:
                                c += sig[(i - 1) * width + e - a]
                        else:
                            c = sig[i * width + e - a] if e >= a else 0
                            if i > 0:
                                c += sig[(i - 1) * width + e]
                        signew[e] = c
                    for e in range(sdeg + 1):
                        sig[i * width + e] = signew[e]
                used += 1

            for i in range(n + 1):
                _mul_into(&sig[i * width], sdeg + 1, others, olen, term)
                for e in range(sdeg + olen):
                    if e < width:
                        acc[i * width + e] += sign * term[e]

        out = []
        for i in range(n + 1):
            c = acc[i * width]
            good = True
            for e in range(width):
                if acc[i * width + e] != c * prefix[k * width + e]:
                    good = False
                    break
            out.append(int(c) if good else None)
        return out
    finally:
        free(w); free(absw); free(pdeg); free(qs); free(prefix); free(suffix)
        free(plen); free(slen); free(tmp); free(others); free(sig); free(signew)
        free(term); free(acc)


def is_balanced(weight_lists):
    cdef dict counts = {}
    for ws in weight_lists:
        for x in ws:
            counts[x] = counts.get(x, 0) + 1
    for x, c in counts.items():
        if counts.get(-x, 0) != c:
            return False
    return True
