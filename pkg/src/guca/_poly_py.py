"""Pure-python kernel for sparse Laurent polynomial arithmetic.

Terms are dicts mapping exponent tuples (length = number of variables) to
nonzero integer coefficients.  The compiled twin `_poly_c` implements the
same three entry points; `guca.kernel` picks one at import time.
"""


def add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def divexact(a, b):
    """Exact division in the Laurent ring; returns None if not divisible.

    Both arguments are shifted to honest polynomials, then reduced by
    lex-leading terms.  Lex on nonnegative exponent tuples is a well
    order, so the loop terminates.
    """
    if not b:
        raise ZeroDivisionError("laurent division by zero")
    if not a:
        return {}
    nv = len(next(iter(b)))
    sa = tuple(min(e[i] for e in a) for i in range(nv))
    sb = tuple(min(e[i] for e in b) for i in range(nv))
    f = {tuple(x - y for x, y in zip(e, sa)): c for e, c in a.items()}
    g = {tuple(x - y for x, y in zip(e, sb)): c for e, c in b.items()}
    lead_g = max(g)
    cg = g[lead_g]
    shift = tuple(x - y for x, y in zip(sa, sb))
    q = {}
    while f:
        lead_f = max(f)
        t = tuple(x - y for x, y in zip(lead_f, lead_g))
        if any(x < 0 for x in t):
            return None
        cf = f[lead_f]
        if cf % cg:
            return None
        coef = cf // cg
        q[t] = coef
        for e, c in g.items():
            ee = tuple(x + y for x, y in zip(e, t))
            s = f.get(ee, 0) - coef * c
            if s:
                f[ee] = s
            else:
                del f[ee]
    return {tuple(x + y for x, y in zip(e, shift)): c for e, c in q.items()}
