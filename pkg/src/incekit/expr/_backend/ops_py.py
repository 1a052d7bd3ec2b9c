"""Pure-Python polynomial kernel.

A *monomial* is a tuple of ``(generator_id, exponent)`` pairs, sorted by
generator id, with all exponents positive; the empty tuple is the constant
monomial.  A *polynomial* is a dict mapping monomials to nonzero Python
integers (exact big-integer coefficients); the empty dict is zero.

These functions are the inner loops of every symbolic operation in the
package.  ``_ops_cy.pyx`` is a compiled twin with the same signatures;
``incekit.expr._backend`` picks one at import time.
"""

BACKEND_NAME = "python"


def mono_mul(a, b):
    """Product of two monomials (merge of sorted pair tuples)."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ga, ea = a[i]
        gb, eb = b[j]
        if ga == gb:
            out.append((ga, ea + eb))
            i += 1
            j += 1
        elif ga < gb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def poly_add(p, q):
    """Sum of two polynomials."""
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    out = dict(p)
    for m, c in q.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def poly_sub(p, q):
    if not q:
        return dict(p)
    out = dict(p)
    for m, c in q.items():
        s = out.get(m, 0) - c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def poly_neg(p):
    return {m: -c for m, c in p.items()}


def poly_scale(p, k):
    """Multiply every coefficient by the integer ``k``."""
    if k == 0:
        return {}
    if k == 1:
        return dict(p)
    return {m: c * k for m, c in p.items()}


def poly_mul_term(p, mono, k):
    """Multiply ``p`` by the single term ``k * mono``."""
    if k == 0:
        return {}
    if not mono:
        return poly_scale(p, k)
    out = {}
    for m, c in p.items():
        out[mono_mul(m, mono)] = c * k
    return out


def poly_mul(p, q):
    """Product of two polynomials."""
    if not p or not q:
        return {}
    if len(p) > len(q):
        p, q = q, p
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            else:
                del out[m]
    return out
