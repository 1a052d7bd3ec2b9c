"""Multivariate polynomial gcd over the integers (subresultant PRS).

Sparse polynomials (monomial-dict form, see ``_backend``) are converted to
a dense recursive representation: a polynomial in the *main* variable whose
coefficients are polynomials in the remaining variables, with plain ints at
the bottom.  Lists store coefficients leading-first; the empty list is zero
at every level.  ``u`` counts the remaining variables minus one, so ``u == 0``
means univariate with integer coefficients.

The gcd itself is the classical primitive-PRS scheme with subresultant
coefficient correction, which keeps intermediate coefficient growth tame
without ever leaving exact integer arithmetic.
"""

from math import gcd as int_gcd


# --- dense-recursive primitives -------------------------------------------

def _zero_coeff(u):
    return 0 if u == 0 else []


def _c_is_zero(c, u):
    return c == 0 if u == 0 else not c


def _strip(f):
    i = 0
    n = len(f)
    while i < n and (f[i] == 0 if not isinstance(f[i], list) else not f[i]):
        i += 1
    return f[i:]


def _deg(f):
    return len(f) - 1


def _c_add(a, b, u):
    if u == 0:
        return a + b
    return _add(a, b, u - 1)


def _c_sub(a, b, u):
    if u == 0:
        return a - b
    return _sub(a, b, u - 1)


def _c_neg(a, u):
    if u == 0:
        return -a
    return _neg(a, u - 1)


def _c_mul(a, b, u):
    if u == 0:
        return a * b
    return _mul(a, b, u - 1)


def _c_pow(a, n, u):
    if u == 0:
        return a ** n
    r = [1] if u == 1 else _ground(1, u - 1)
    for _ in range(n):
        r = _mul(r, a, u - 1)
    return r


def _ground(c, u):
    """The constant polynomial ``c`` at level ``u`` (c a plain int)."""
    if c == 0:
        return []
    f = c
    for _ in range(u + 1):
        f = [f]
    return f


def _add(f, g, u):
    if not f:
        return list(g)
    if not g:
        return list(f)
    df, dg = len(f), len(g)
    if df >= dg:
        head, tail = f[: df - dg], f[df - dg:]
        other = g
    else:
        head, tail = g[: dg - df], g[dg - df:]
        other = f
    body = [_c_add(a, b, u) for a, b in zip(tail, other)]
    return _strip(head + body)


def _sub(f, g, u):
    return _add(f, _neg(g, u), u)


def _neg(f, u):
    return [_c_neg(c, u) for c in f]


def _mul(f, g, u):
    if not f or not g:
        return []
    df, dg = len(f) - 1, len(g) - 1
    out = [_zero_coeff(u) for _ in range(df + dg + 1)]
    for i, a in enumerate(f):
        if _c_is_zero(a, u):
            continue
        for j, b in enumerate(g):
            if _c_is_zero(b, u):
                continue
            out[i + j] = _c_add(out[i + j], _c_mul(a, b, u), u)
    return _strip(out)


def _mul_coeff(f, c, u):
    if _c_is_zero(c, u) or not f:
        return []
    return _strip([_c_mul(a, c, u) for a in f])


def _shift(f, n, u):
    """Multiply by main_variable**n."""
    if not f:
        return []
    return f + [_zero_coeff(u) for _ in range(n)]


def _c_exquo(a, b, u):
    if u == 0:
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division in gcd kernel")
        return q
    return _exquo(a, b, u - 1)


def _exquo_coeff(f, c, u):
    return [_c_exquo(a, c, u) for a in f]


def _exquo(f, g, u):
    """Exact polynomial division at level u; raises if not divisible."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return []
    q = []
    rem = list(f)
    dg = _deg(g)
    lc_g = g[0]
    while rem and _deg(rem) >= dg:
        t = _c_exquo(rem[0], lc_g, u)
        k = _deg(rem) - dg
        q.append((k, t))
        rem = _sub(rem, _shift(_mul_coeff(g, t, u), k, u), u)
        if rem and _deg(rem) >= dg and _deg(rem) == _deg(f):
            raise ArithmeticError("no cancellation in exact division")
    if rem:
        raise ArithmeticError("inexact polynomial division in gcd kernel")
    out = [_zero_coeff(u)] * (q[0][0] + 1) if q else []
    for k, t in q:
        out[len(out) - 1 - k] = t
    return _strip(out)


def _prem(f, g, u):
    """Pseudo-remainder of f by g in the main variable."""
    df, dg = _deg(f), _deg(g)
    if dg < 0:
        raise ZeroDivisionError("polynomial division by zero")
    r, dr = list(f), df
    if df < dg:
        return r
    lc_g = g[0]
    n = df - dg + 1
    while r and dr >= dg:
        lc_r = r[0]
        n -= 1
        r = _sub(_mul_coeff(r, lc_g, u), _shift(_mul_coeff(g, lc_r, u), dr - dg, u), u)
        dr = _deg(r)
    c = _c_pow(lc_g, n, u)
    return _mul_coeff(r, c, u)


def _content(f, u):
    """Gcd of the coefficients (a level u-1 object; int when u == 0)."""
    c = _zero_coeff(u)
    for a in f:
        if u == 0:
            c = int_gcd(c, a)
            if c == 1:
                return 1
        else:
            c = _gcd_rec(c, a, u - 1)
            if c == [1] or (c and _deg(c) == 0 and _is_ground_one(c, u - 1)):
                return c
    return c


def _is_ground_one(f, u):
    while u > 0:
        if len(f) != 1:
            return False
        f = f[0]
        u -= 1
    return f == [1]


def _primitive(f, u):
    if not f:
        return _zero_coeff(u), f
    c = _content(f, u)
    if u == 0:
        if c in (0, 1):
            return c, list(f)
        return c, [a // c for a in f]
    return c, [_exquo(a, c, u - 1) for a in f]


def _ground_lc(f, u):
    """Innermost leading integer coefficient."""
    lvl = u
    while lvl >= 0:
        if not f:
            return 0
        f = f[0]
        lvl -= 1
    return f


def _subresultant_prs_last(f, g, u):
    """Last nonzero element of the subresultant PRS of f, g (deg f >= deg g)."""
    d = _deg(f) - _deg(g)
    b = _ground((-1) ** (d + 1), u - 1) if u > 0 else (-1) ** (d + 1)
    h = _prem(f, g, u)
    h = _mul_coeff(h, b, u)
    lc = g[0]
    c = _c_pow(lc, d, u) if d else (_ground(1, u - 1) if u > 0 else 1)
    prev = g
    while h:
        k = _deg(h)
        f, g, prev = g, h, h
        d = _deg(f) - k
        neg_lc = _c_neg(lc, u)
        b = _c_mul(neg_lc, _c_pow(c, d, u), u)
        h = _prem(f, g, u)
        h = _exquo_coeff(h, b, u)
        h = _strip(h)
        lc = g[0]
        if d > 1:
            p = _c_pow(_c_neg(lc, u), d, u)
            q = _c_pow(c, d - 1, u)
            c = _c_exquo(p, q, u)
        else:
            c = _c_neg(lc, u)
    return prev


def _gcd_rec(f, g, u):
    if not f:
        return list(g)
    if not g:
        return list(f)
    if u == 0 and _deg(f) == 0 and _deg(g) == 0:
        return [int_gcd(f[0], g[0])]
    fc, fp = _primitive(f, u)
    gc, gp = _primitive(g, u)
    if u == 0:
        cc = int_gcd(fc, gc)
    else:
        cc = _gcd_rec(fc, gc, u - 1)
    if _deg(fp) < _deg(gp):
        fp, gp = gp, fp
    if _deg(gp) == 0:
        # a primitive degree-0 polynomial is a unit, so only the content
        # gcd survives
        h = [cc]
        if _ground_lc(h, u) < 0:
            h = _neg(h, u)
        return _strip(h)
    r = _subresultant_prs_last(fp, gp, u)
    _, r = _primitive(r, u)
    if u == 0:
        h = [a * cc for a in r] if cc != 1 else list(r)
    else:
        h = [_mul(a, cc, u - 1) for a in r] if not _is_ground_one(cc, u - 1) else list(r)
    if _ground_lc(h, u) < 0:
        h = _neg(h, u)
    return h


# --- sparse interface ------------------------------------------------------

def _vars_of(p):
    s = set()
    for mono in p:
        for gid, _ in mono:
            s.add(gid)
    return s


def _to_rec(p, gids):
    if not gids:
        return p.get((), 0)
    g0 = gids[0]
    rest = gids[1:]
    buckets = {}
    for mono, c in p.items():
        e0 = 0
        rem = []
        for gid, e in mono:
            if gid == g0:
                e0 = e
            else:
                rem.append((gid, e))
        buckets.setdefault(e0, {})[tuple(rem)] = c
    if not buckets:
        return []
    dmax = max(buckets)
    u = len(rest)
    out = []
    for e in range(dmax, -1, -1):
        sub = buckets.get(e)
        if sub is None:
            out.append(_zero_coeff(u - 1) if u else 0)
        else:
            out.append(_to_rec(sub, rest))
    return _strip(out)


def _from_rec(f, gids, out, prefix):
    if not gids:
        if f:
            out[prefix] = f
        return
    if not f:
        return
    g0 = gids[0]
    rest = gids[1:]
    d = len(f) - 1
    for i, c in enumerate(f):
        e = d - i
        if isinstance(c, list):
            if not c:
                continue
            _from_rec(c, rest, out, prefix + ((g0, e),) if e else prefix)
        else:
            if c == 0:
                continue
            mono = prefix + ((g0, e),) if e else prefix
            out[mono] = c


def int_content(p):
    """Gcd of the integer coefficients of a sparse polynomial (>= 0)."""
    c = 0
    for v in p.values():
        c = int_gcd(c, v)
        if c == 1:
            return 1
    return c


def poly_gcd(p, q):
    """Gcd of two sparse polynomials, sign-normalized to positive lead."""
    if not p:
        return _canonical_sign(dict(q))
    if not q:
        return _canonical_sign(dict(p))
    if p == q:
        return _canonical_sign(dict(p))
    pv, qv = _vars_of(p), _vars_of(q)
    if not pv and not qv:
        return {(): int_gcd(p.get((), 0), q.get((), 0))}
    if not pv:
        return {(): int_gcd(p.get((), 0), int_content(q))}
    if not qv:
        return {(): int_gcd(q.get((), 0), int_content(p))}
    gids = sorted(pv | qv)
    F = _to_rec(p, gids)
    G = _to_rec(q, gids)
    H = _gcd_rec(F, G, len(gids) - 1)
    out = {}
    for mono in ():
        pass
    res = {}
    _from_rec(H, gids, res, ())
    return _canonical_sign(res)


def poly_divexact(p, q):
    """Exact quotient p / q of sparse polynomials; ArithmeticError if inexact."""
    if not p:
        return {}
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    qv = _vars_of(q)
    if not qv:
        c = q[()]
        out = {}
        for m, v in p.items():
            d, r = divmod(v, c)
            if r:
                raise ArithmeticError("inexact division")
            out[m] = d
        return out
    gids = sorted(_vars_of(p) | qv)
    F = _to_rec(p, gids)
    G = _to_rec(q, gids)
    H = _exquo(F, G, len(gids) - 1)
    res = {}
    _from_rec(H, gids, res, ())
    return res


def _mono_sort_key(mono):
    return (-sum(e for _, e in mono), tuple((g, -e) for g, e in mono))


def leading_monomial(p):
    """Largest monomial in graded-lex order (None for the zero polynomial)."""
    if not p:
        return None
    return min(p, key=_mono_sort_key)


def _canonical_sign(p):
    lm = leading_monomial(p)
    if lm is not None and p[lm] < 0:
        return {m: -c for m, c in p.items()}
    return p
