# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled normal-form kernel; same contract as ``braidquiver._nfcore``."""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "cython"


cdef inline int _lowest_bit(int mask) nogil:
    cdef int i = 0
    while not (mask >> i) & 1:
        i += 1
    return i


cdef bint _repair(int* fs, Py_ssize_t j, int n,
                  const int[::1] rm, const int[::1] lm,
                  const int[::1] rd, const int[::1] ld) nogil:
    cdef int a = fs[j]
    cdef int b = fs[j + 1]
    cdef int need = ld[b] & ~rd[a]
    cdef int i
    if need == 0:
        return False
    while need != 0:
        i = _lowest_bit(need)
        a = rm[a * n + i]
        b = lm[b * n + i]
        need = ld[b] & ~rd[a]
    fs[j] = a
    fs[j + 1] = b
    return True


cdef void _comb_back(int* fs, Py_ssize_t size, int n,
                     const int[::1] rm, const int[::1] lm,
                     const int[::1] rd, const int[::1] ld) nogil:
    cdef Py_ssize_t j = size - 2
    while j >= 0 and _repair(fs, j, n, rm, lm, rd, ld):
        j -= 1


cdef void _fixpoint(int* fs, Py_ssize_t size, int n,
                    const int[::1] rm, const int[::1] lm,
                    const int[::1] rd, const int[::1] ld) nogil:
    cdef bint changed = True
    cdef Py_ssize_t j
    while changed:
        changed = False
        j = size - 2
        while j >= 0:
            if _repair(fs, j, n, rm, lm, rd, ld):
                changed = True
            j -= 1


def normal_form_core(int p, factors, letters, int n,
                     const int[::1] rm, const int[::1] lm,
                     const int[::1] rd, const int[::1] ld,
                     const int[::1] tau, const int[::1] gen,
                     const int[::1] w0_gen, int w0):
    """Multiply ``delta^p * factors`` by the given letters and normalise."""
    cdef Py_ssize_t cap = len(factors) + len(letters) + 1
    cdef int* fs = <int*> malloc(cap * sizeof(int))
    if fs == NULL:
        raise MemoryError()
    cdef Py_ssize_t size = 0
    cdef Py_ssize_t idx
    cdef int letter, lifted
    try:
        for x in factors:
            fs[size] = x
            size += 1
        for obj in letters:
            letter = obj
            if letter > 0:
                fs[size] = gen[letter - 1]
                size += 1
            else:
                p -= 1
                with nogil:
                    for idx in range(size):
                        fs[idx] = tau[fs[idx]]
                lifted = w0_gen[-letter - 1]
                if lifted == 0:
                    continue
                fs[size] = lifted
                size += 1
            with nogil:
                _comb_back(fs, size, n, rm, lm, rd, ld)
        with nogil:
            _fixpoint(fs, size, n, rm, lm, rd, ld)
        lead = 0
        while lead < size and fs[lead] == w0:
            lead += 1
        p += lead
        out = [fs[idx] for idx in range(lead, size) if fs[idx] != 0]
        return p, out
    finally:
        free(fs)


def is_left_weighted(factors, int n, const int[::1] rd, const int[::1] ld):
    cdef Py_ssize_t k
    cdef int a, b
    fs = list(factors)
    for k in range(len(fs) - 1):
        a = fs[k]
        b = fs[k + 1]
        if ld[b] & ~rd[a]:
            return False
    return True
