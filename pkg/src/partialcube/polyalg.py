"""Sparse integer polynomials in one and two variables.

Coefficients are exact Python integers held to the signed 64-bit range;
leaving it raises :class:`PolyOverflowError` rather than wrapping.  The
graph polynomials of this package have non-negative coefficients, but
signed values are allowed so that substitutions such as ``x -> x - 1`` can
be expressed and cancellation can be tracked exactly.
"""

from __future__ import annotations

import re
from math import comb, factorial
from typing import Iterable, Mapping

from .errors import ArityMismatchError, NegativeCoefficientError, PolyOverflowError

COEFF_LIMIT = 2 ** 63


def _checked(c: int) -> int:
    if not -COEFF_LIMIT <= c < COEFF_LIMIT:
        raise PolyOverflowError(f"coefficient {c} outside the 64-bit range")
    return c


class _Poly:
    __slots__ = ("_c",)
    arity = 0

    def __init__(self, coeffs: Mapping | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict = {}
        for key, c in items:
            key = self._key(key)
            acc[key] = acc.get(key, 0) + int(c)
        self._c = {k: _checked(c) for k, c in sorted(acc.items()) if c}

    @staticmethod
    def _key(key):
        raise NotImplementedError

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, key) -> int:
        return self._c.get(self._key(key), 0)

    def __eq__(self, other):
        if not isinstance(other, _Poly):
            return NotImplemented
        return type(self) is type(other) and self._c == other._c

    def __hash__(self):
        return hash((type(self).__name__, tuple(self._c.items())))

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        _same_arity(self, other)
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a: int):
        return type(self)({k: a * c for k, c in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        _same_arity(self, other)
        out: dict = {}
        for k1, c1 in self._c.items():
            for k2, c2 in other._c.items():
                k = self._add_keys(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    @property
    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._c.values())

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class Poly1(_Poly):
    """Univariate polynomial ``sum c_k x^k``."""

    __slots__ = ()
    arity = 1

    @staticmethod
    def _key(key):
        k = int(key)
        if k < 0:
            raise ValueError("negative exponent")
        return k

    @staticmethod
    def _add_keys(a, b):
        return a + b

    @classmethod
    def from_pairs(cls, pairs) -> "Poly1":
        return cls((e, c) for e, c in pairs)

    def to_pairs(self) -> list:
        return [[k, c] for k, c in self._c.items()]

    @property
    def degree(self) -> int:
        return max(self._c, default=-1)

    def __call__(self, x: int) -> int:
        return eval1(self, x)

    def __str__(self):
        return _render([(c, ((("x", k),))) for k, c in sorted(self._c.items(), reverse=True)])

    @classmethod
    def parse(cls, text: str) -> "Poly1":
        return cls((k, c) for (k,), c in _parse_terms(text, "x"))


class Poly2(_Poly):
    """Bivariate polynomial ``sum c_{k,d} x^k y^d``."""

    __slots__ = ()
    arity = 2

    @staticmethod
    def _key(key):
        k, d = key
        k, d = int(k), int(d)
        if k < 0 or d < 0:
            raise ValueError("negative exponent")
        return k, d

    @staticmethod
    def _add_keys(a, b):
        return a[0] + b[0], a[1] + b[1]

    @classmethod
    def from_triples(cls, triples) -> "Poly2":
        return cls(((k, d), c) for k, d, c in triples)

    def to_triples(self) -> list:
        return [[k, d, c] for (k, d), c in self._c.items()]

    def __call__(self, x: int, y: int) -> int:
        return eval2(self, x, y)

    def __str__(self):
        order = sorted(self._c.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
        return _render([(c, (("x", k), ("y", d))) for (k, d), c in order])

    @classmethod
    def parse(cls, text: str) -> "Poly2":
        return cls((key, c) for key, c in _parse_terms(text, "xy"))


def _same_arity(p, q):
    if not isinstance(q, _Poly) or p.arity != q.arity:
        raise ArityMismatchError(
            f"cannot combine {type(p).__name__} with {type(q).__name__}")


# -- printing / parsing -----------------------------------------------------

def _render(terms) -> str:
    if not terms:
        return "0"
    out = []
    for c, powers in terms:
        mono = "".join(v if e == 1 else f"{v}^{e}" for v, e in powers if e)
        mag = abs(c)
        body = mono if mono and mag == 1 else f"{mag}{mono}"
        out.append(("-" if c < 0 else "+") + body)
    text = "".join(out)
    return text[1:] if text[0] == "+" else text


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*((?:[a-z](?:\^\d+)?)*)")


def _parse_terms(text: str, variables: str):
    text = text.replace(" ", "").replace("*", "")
    if not text:
        raise ValueError("empty polynomial")
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign, digits, mono = m.groups()
        if not digits and not mono:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        coeff = int(digits) if digits else 1
        exps = dict.fromkeys(variables, 0)
        for var, e in re.findall(r"([a-z])(?:\^(\d+))?", mono):
            if var not in exps:
                raise ValueError(f"unexpected variable {var!r}")
            exps[var] += int(e) if e else 1
        key = tuple(exps[v] for v in variables)
        yield key, -coeff if sign == "-" else coeff
        pos = m.end()


# -- substitutions ----------------------------------------------------------

def add(p, q):
    return p + q


def scale(p, a: int):
    return p.scale(a)


def equal(p, q) -> bool:
    _same_arity(p, q)
    return p == q


def shift1(p: Poly1, by: int = 1) -> Poly1:
    """``p(x) -> p(x + by)``; the default is the shift ``x -> x + 1``."""
    out: dict = {}
    for d, w in p.items():
        for k in range(d + 1):
            out[k] = out.get(k, 0) + w * comb(d, k) * by ** (d - k)
    return Poly1(out)


def subst_sum(p: Poly1) -> Poly2:
    """``p(x) -> p(x + y)``."""
    out: dict = {}
    for d, w in p.items():
        for k in range(d + 1):
            key = (k, d - k)
            out[key] = out.get(key, 0) + w * comb(d, k)
    return Poly2(out)


def subst_shift_sum(p: Poly1, check: bool = True) -> Poly2:
    """``p(x) -> p(x + y - 1)`` by trinomial expansion.

    With ``check`` set, a negative coefficient in the result raises
    :class:`NegativeCoefficientError`.
    """
    out: dict = {}
    for d, w in p.items():
        fd = factorial(d)
        for a in range(d + 1):
            for b in range(d - a + 1):
                c = d - a - b
                term = fd // (factorial(a) * factorial(b) * factorial(c))
                out[(a, b)] = out.get((a, b), 0) + w * term * (-1) ** c
    result = Poly2(out)
    if check:
        neg = [(key, c) for key, c in result.items() if c < 0]
        if neg:
            raise NegativeCoefficientError(
                f"p(x+y-1) has negative coefficient {neg[0][1]} at x^{neg[0][0][0]}y^{neg[0][0][1]}")
    return result


def spec_y1(p: Poly2) -> Poly1:
    """``p(x, 1)``."""
    out: dict = {}
    for (k, _), c in p.items():
        out[k] = out.get(k, 0) + c
    return Poly1(out)


def spec_x0(p: Poly2) -> Poly1:
    """``p(0, y)`` written in the variable ``x``."""
    return Poly1((d, c) for (k, d), c in p.items() if k == 0)


def spec_y0(p: Poly2) -> Poly1:
    return Poly1((k, c) for (k, d), c in p.items() if d == 0)


def leq(p, q) -> bool:
    """Coefficient-wise order: every coefficient of ``p`` is at most the one of ``q``."""
    _same_arity(p, q)
    keys = set(p.coeffs) | set(q.coeffs)
    return all(p[k] <= q[k] for k in keys)


def eval1(p: Poly1, x: int) -> int:
    acc = 0
    for k in range(p.degree, -1, -1):
        acc = _checked(acc * x + p[k])
    return acc


def eval2(p: Poly2, x: int, y: int) -> int:
    return _checked(sum(c * x ** k * y ** d for (k, d), c in p.items()))
