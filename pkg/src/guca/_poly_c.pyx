# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for sparse Laurent polynomial arithmetic.

Mirrors `guca._poly_py` exactly; see there for semantics.  Exponent
tuples and big-integer coefficients stay Python objects (they must be
exact), the win comes from C-level loops and tuple arithmetic.
"""

cimport cython


cdef inline tuple _tadd(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


cdef inline tuple _tsub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] - b[i]
    return tuple(out)


def add(dict a, dict b):
    cdef dict out = dict(a)
    cdef tuple e
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def mul(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef tuple ea, eb, e
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _tadd(ea, eb)
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def divexact(dict a, dict b):
    cdef Py_ssize_t i, nv
    cdef tuple e, ee, lead_f, lead_g, t, sa, sb, shift
    cdef dict f, g, q
    if not b:
        raise ZeroDivisionError("laurent division by zero")
    if not a:
        return {}
    nv = len(next(iter(b)))
    sa = tuple([min([e[i] for e in a]) for i in range(nv)])
    sb = tuple([min([e[i] for e in b]) for i in range(nv)])
    f = {}
    for e, c in a.items():
        f[_tsub(e, sa)] = c
    g = {}
    for e, c in b.items():
        g[_tsub(e, sb)] = c
    lead_g = max(g)
    cg = g[lead_g]
    shift = _tsub(sa, sb)
    q = {}
    while f:
        lead_f = max(f)
        t = _tsub(lead_f, lead_g)
        for i in range(nv):
            if t[i] < 0:
                return None
        cf = f[lead_f]
        if cf % cg:
            return None
        coef = cf // cg
        q[t] = coef
        for e, c in g.items():
            ee = _tadd(e, t)
            s = f.get(ee, 0) - coef * c
            if s:
                f[ee] = s
            else:
                del f[ee]
    out = {}
    for e, c in q.items():
        out[_tadd(e, shift)] = c
    return out
