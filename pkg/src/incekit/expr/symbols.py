"""Global symbol registry.

Every generator the kernel can see -- state variables, the time variable,
free parameters, derivative jets of function symbols, and adjoined square
roots -- is interned here and carries a global integer id.  Monomial
orderings and all canonical forms are taken with respect to these ids, so
registration order is the one fixed "global symbol ordering".

Kinds
-----
VAR    state variable (x, y, z, u, du, chart coordinates, ...)
TIME   the distinguished independent variable t
PARAM  free constant (alpha, beta, C1, c1, m, ...); d/dt == 0
FUNC   jet variable: (base, order) stands for the order-th derivative of
       an unknown function of t, e.g. ("q", 2) is q''
ALG    adjoined radical with a single defining relation  s**2 == square,
       where square is a polynomial free of VAR and ALG generators
"""

from ..errors import NestedRadical

VAR = "var"
TIME = "time"
PARAM = "param"
FUNC = "func"
ALG = "alg"

_PRIMES = ("", "'", "''", "'''", "''''")


class Symbol:
    __slots__ = ("gid", "kind", "name", "base", "order", "square")

    def __init__(self, gid, kind, name, base=None, order=0, square=None):
        self.gid = gid
        self.kind = kind
        self.name = name
        self.base = base
        self.order = order
        self.square = square  # polynomial dict, ALG only

    def __repr__(self):
        return f"Symbol({self.name})"

    def __hash__(self):
        return self.gid

    def __eq__(self, other):
        return self is other


_by_name: dict = {}
_by_gid: list = []


def _register(kind, name, **kw):
    sym = _by_name.get(name)
    if sym is not None:
        if sym.kind != kind:
            raise ValueError(f"symbol {name!r} already registered as {sym.kind}")
        return sym
    sym = Symbol(len(_by_gid), kind, name, **kw)
    _by_name[name] = sym
    _by_gid.append(sym)
    return sym


def var(name):
    return _register(VAR, name)


def time_var():
    return _register(TIME, "t")


def param(name):
    return _register(PARAM, name)


def func_name(base, order):
    if order < len(_PRIMES):
        return base + _PRIMES[order]
    return f"{base}^({order})"


def func(base, order=0):
    return _register(FUNC, func_name(base, order), base=base, order=order)


def alg(name, square_poly):
    """Adjoin a radical with defining relation name**2 == square_poly.

    The square must be a polynomial over PARAM/TIME/FUNC generators only;
    radicals of expressions containing state variables or other radicals
    are rejected.
    """
    existing = _by_name.get(name)
    if existing is not None:
        if existing.kind != ALG or existing.square != square_poly:
            raise ValueError(f"symbol {name!r} already registered differently")
        return existing
    for mono in square_poly:
        for gid, _ in mono:
            g = _by_gid[gid]
            if g.kind == ALG:
                raise NestedRadical(f"square of {name} contains radical {g.name}")
            if g.kind == VAR:
                raise NestedRadical(f"square of {name} contains state variable {g.name}")
    return _register(ALG, name, square=square_poly)


def by_gid(gid):
    return _by_gid[gid]


def lookup(name):
    return _by_name.get(name)


def all_symbols():
    return tuple(_by_gid)
