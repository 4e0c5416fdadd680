# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; same algorithms as the pure-Python module."""
from libc.stdlib cimport malloc, free

cdef dict _TABLES = {}


cdef int _reduce_into(int* src, Py_ssize_t n, int* dst):
    cdef Py_ssize_t k
    cdef int top = 0
    cdef int x
    for k in range(n):
        x = src[k]
        if top > 0 and dst[top - 1] == -x:
            top -= 1
        else:
            dst[top] = x
            top += 1
    return top


def free_reduce(letters):
    cdef Py_ssize_t n = len(letters)
    cdef int* buf = <int*>malloc((n + 1) * sizeof(int))
    cdef int* out = <int*>malloc((n + 1) * sizeof(int))
    cdef Py_ssize_t k
    cdef int m
    try:
        for k in range(n):
            buf[k] = letters[k]
        m = _reduce_into(buf, n, out)
        return tuple([out[k] for k in range(m)])
    finally:
        free(buf)
        free(out)


def apply_images(images, word):
    cdef list out = []
    cdef Py_ssize_t top = 0
    cdef int x, y
    cdef tuple img
    for x in word:
        if x > 0:
            img = images[x - 1]
            for y in img:
                if top and out[top - 1] == -y:
                    out.pop()
                    top -= 1
                else:
                    out.append(y)
                    top += 1
        else:
            img = images[-x - 1]
            for k in range(len(img) - 1, -1, -1):
                y = -<int>img[k]
                if top and out[top - 1] == -y:
                    out.pop()
                    top -= 1
                else:
                    out.append(y)
                    top += 1
    return tuple(out)


cdef object _table(int g):
    t = _TABLES.get(g)
    if t is None:
        n = 2 * g
        size = (2 * g + 1) * (2 * g + 1)
        codes = [-1] * size
        rel = [x for i in range(1, g + 1) for x in (i, i)]
        rels = [rel, [-x for x in reversed(rel)]]
        for ri in range(2):
            for p in range(n):
                a = rels[ri][p]
                b = rels[ri][(p + 1) % n]
                codes[(a + g) * (2 * g + 1) + (b + g)] = ri * n + p
        t = (codes, rels[0] + rels[1])
        _TABLES[g] = t
    return t


def dehn_reduce(word, int g):
    cdef int n = 2 * g
    cdef int width = 2 * g + 1
    codes_l, rels_l = _table(g)
    cdef int* codes = <int*>malloc(width * width * sizeof(int))
    cdef int* rels = <int*>malloc(2 * n * sizeof(int))
    cdef Py_ssize_t cap = len(word) + 4 * n + 8
    cdef int* w = <int*>malloc(cap * sizeof(int))
    cdef int* tmp = <int*>malloc(cap * sizeof(int))
    cdef int* swap
    cdef Py_ssize_t length, i, k, L, newlen, p, ri
    cdef int code
    cdef bint changed
    try:
        for k in range(width * width):
            codes[k] = codes_l[k]
        for k in range(2 * n):
            rels[k] = rels_l[k]
        for k in range(len(word)):
            tmp[k] = word[k]
        length = _reduce_into(tmp, len(word), w)
        changed = True
        while changed:
            changed = False
            i = 0
            while i < length - g:
                code = codes[(w[i] + g) * width + (w[i + 1] + g)]
                if code >= 0:
                    ri = code // n
                    p = code % n
                    L = 2
                    while i + L < length and L < n and w[i + L] == rels[ri * n + (p + L) % n]:
                        L += 1
                    if L > g:
                        # splice w[:i] + rep + w[i+L:] into tmp, then reduce into w
                        newlen = 0
                        for k in range(i):
                            tmp[newlen] = w[k]
                            newlen += 1
                        for k in range(n - L):
                            tmp[newlen] = -rels[ri * n + (p + n - 1 - k) % n]
                            newlen += 1
                        for k in range(i + L, length):
                            tmp[newlen] = w[k]
                            newlen += 1
                        length = _reduce_into(tmp, newlen, w)
                        changed = True
                        i = i - n if i > n else 0
                        continue
                i += 1
        return tuple([w[k] for k in range(length)])
    finally:
        free(codes)
        free(rels)
        free(w)
        free(tmp)
