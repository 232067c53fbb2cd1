# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled permutation kernels; same contract as _perm_py."""

from libc.stdlib cimport malloc, free


def mul(const unsigned char[:] a, const unsigned char[:] b):
    cdef Py_ssize_t i, n = b.shape[0]
    out = bytearray(n)
    cdef unsigned char[:] o = out
    for i in range(n):
        o[i] = a[b[i]]
    return bytes(out)


def inv(const unsigned char[:] a):
    cdef Py_ssize_t i, n = a.shape[0]
    out = bytearray(n)
    cdef unsigned char[:] o = out
    for i in range(n):
        o[a[i]] = <unsigned char>i
    return bytes(out)


cdef bytes _move(bytes flat, int n, int i, bint inverse):
    out = bytearray(flat)
    cdef unsigned char[:] o = out
    cdef const unsigned char[:] f = flat
    cdef int x
    cdef int pa = i * n, pb = (i + 1) * n
    cdef unsigned char *ainv = <unsigned char *>malloc(n)
    try:
        if not inverse:
            # new_i = a b a^-1, new_{i+1} = a
            for x in range(n):
                ainv[f[pa + x]] = <unsigned char>x
            for x in range(n):
                o[pa + x] = f[pa + f[pb + ainv[x]]]
                o[pb + x] = f[pa + x]
        else:
            # new_i = b, new_{i+1} = b^-1 a b
            for x in range(n):
                ainv[f[pb + x]] = <unsigned char>x
            for x in range(n):
                o[pa + x] = f[pb + x]
                o[pb + x] = ainv[f[pa + f[pb + x]]]
    finally:
        free(ainv)
    return bytes(out)


def hurwitz_move(bytes flat, int n, int i):
    return _move(flat, n, i, False)


def hurwitz_move_inverse(bytes flat, int n, int i):
    return _move(flat, n, i, True)


def apply_braid_word(bytes flat, int n, word):
    for letter in word:
        if letter > 0:
            flat = _move(flat, n, letter - 1, False)
        else:
            flat = _move(flat, n, -letter - 1, True)
    return flat


def product_is_identity(const unsigned char[:] flat, int n, int m):
    cdef int j, x
    cdef int *acc = <int *>malloc(n * sizeof(int))
    cdef int *tmp = <int *>malloc(n * sizeof(int))
    try:
        for x in range(n):
            acc[x] = x
        for j in range(m):
            for x in range(n):
                tmp[x] = acc[flat[j * n + x]]
            for x in range(n):
                acc[x] = tmp[x]
        for x in range(n):
            if acc[x] != x:
                return False
        return True
    finally:
        free(acc)
        free(tmp)


def is_transitive(const unsigned char[:] flat, int n, int m):
    cdef int j, u, v, top = 0, count = 1
    cdef char *seen = <char *>malloc(n)
    cdef int *stack = <int *>malloc(n * sizeof(int))
    try:
        for u in range(n):
            seen[u] = 0
        seen[0] = 1
        stack[0] = 0
        top = 1
        while top:
            top -= 1
            u = stack[top]
            for j in range(m):
                v = flat[j * n + u]
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack[top] = v
                    top += 1
        return count == n
    finally:
        free(seen)
        free(stack)


def canonical_form(const unsigned char[:] flat, int n, int m):
    cdef int start, j, u, v, head, size, base, k
    cdef int *label = <int *>malloc(n * sizeof(int))
    cdef int *order = <int *>malloc(n * sizeof(int))
    cdef Py_ssize_t total = m * n
    best = bytearray(total)
    cand = bytearray(total)
    cdef unsigned char[:] bv = best
    cdef unsigned char[:] cv = cand
    cdef bint have = False
    cdef int cmp
    try:
        for start in range(n):
            for u in range(n):
                label[u] = -1
            label[start] = 0
            order[0] = start
            size = 1
            head = 0
            while head < size:
                u = order[head]
                head += 1
                for j in range(m):
                    v = flat[j * n + u]
                    if label[v] < 0:
                        label[v] = size
                        order[size] = v
                        size += 1
            if size != n:
                raise ValueError("canonical form needs a transitive tuple")
            for j in range(m):
                base = j * n
                for u in range(n):
                    cv[base + label[u]] = <unsigned char>label[flat[base + u]]
            if not have:
                bv[:] = cv
                have = True
            else:
                cmp = 0
                for k in range(total):
                    if cv[k] != bv[k]:
                        cmp = -1 if cv[k] < bv[k] else 1
                        break
                if cmp < 0:
                    bv[:] = cv
        return bytes(best)
    finally:
        free(label)
        free(order)
