"""Exact Laurent polynomials in v = q^(1/6) and their fraction field.

Every exponent is stored in sixths of a power of ``q``: the monomial
``q^(a/6)`` is the integer key ``a``.  Values are immutable and hashable;
equality is syntactic because both types keep a canonical form.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "QLaurent",
    "QRational",
    "DivisionByZero",
    "NonUnitDenominator",
    "InexactDivision",
    "qpow",
    "series_truncate",
    "ql_arith",
    "qr_arith",
]


class DivisionByZero(ZeroDivisionError):
    """Raised when dividing by the zero element."""


class NonUnitDenominator(ValueError):
    """Raised when a power-series expansion would leave the integers."""


class InexactDivision(ArithmeticError):
    """Raised by :meth:`QLaurent.exact_div` when the remainder is nonzero."""


Scalar = Union[int, "QLaurent"]


class QLaurent:
    """A Laurent polynomial in ``v = q^(1/6)`` with integer coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        t: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                if c:
                    e = int(e)
                    c = t.get(e, 0) + int(c)
                    if c:
                        t[e] = c
                    else:
                        t.pop(e, None)
        self._t = t
        self._hash: int | None = None

    @classmethod
    def _raw(cls, t: dict[int, int]) -> QLaurent:
        # t must already be canonical (no zero values)
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls) -> QLaurent:
        return cls._raw({})

    @classmethod
    def one(cls) -> QLaurent:
        return cls._raw({0: 1})

    @classmethod
    def const(cls, c: int) -> QLaurent:
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def monomial(cls, sixths: int, coeff: int = 1) -> QLaurent:
        return cls._raw({int(sixths): int(coeff)} if coeff else {})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> QLaurent:
        return cls((int(e), int(c)) for e, c in pairs)

    @classmethod
    def coerce(cls, x: Scalar) -> QLaurent:
        if isinstance(x, QLaurent):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QLaurent")

    # -- inspection -------------------------------------------------------
    def terms(self) -> dict[int, int]:
        return dict(self._t)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._t.items()))

    def coeff(self, sixths: int) -> int:
        return self._t.get(sixths, 0)

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    @property
    def valuation(self) -> int:
        """Lowest v-exponent present (ValueError for zero)."""
        if not self._t:
            raise ValueError("zero has no valuation")
        return min(self._t)

    @property
    def degree(self) -> int:
        if not self._t:
            raise ValueError("zero has no degree")
        return max(self._t)

    def content(self) -> int:
        return math.gcd(*self._t.values()) if self._t else 0

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> QLaurent:
        if isinstance(other, int):
            other = QLaurent.const(other)
        elif not isinstance(other, QLaurent):
            return NotImplemented
        if len(other._t) > len(self._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        t = dict(a)
        for e, c in b.items():
            c = t.get(e, 0) + c
            if c:
                t[e] = c
            else:
                del t[e]
        return QLaurent._raw(t)

    __radd__ = __add__

    def __neg__(self) -> QLaurent:
        return QLaurent._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other: Scalar) -> QLaurent:
        if isinstance(other, int):
            other = QLaurent.const(other)
        elif not isinstance(other, QLaurent):
            return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            c = t.get(e, 0) - c
            if c:
                t[e] = c
            else:
                del t[e]
        return QLaurent._raw(t)

    def __rsub__(self, other: Scalar) -> QLaurent:
        return QLaurent.coerce(other) - self

    def __mul__(self, other: Scalar) -> QLaurent:
        if isinstance(other, int):
            if not other:
                return QLaurent._raw({})
            return QLaurent._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, QLaurent):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return QLaurent._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return QLaurent._raw({e + eb: c * cb for e, c in a.items()})
        t: dict[int, int] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                k = ea + eb
                t[k] = t.get(k, 0) + ca * cb
        return QLaurent._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QLaurent:
        if n < 0:
            if self.is_monomial():
                (e, c), = self._t.items()
                if c in (1, -1):
                    return QLaurent._raw({e * n: c ** (-n)})
            raise ValueError("negative powers exist only for unit monomials")
        result = QLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, sixths: int) -> QLaurent:
        """Multiply by ``q^(sixths/6)``."""
        if not sixths:
            return self
        return QLaurent._raw({e + sixths: c for e, c in self._t.items()})

    def exact_div(self, other: Scalar) -> QLaurent:
        """Quotient ``self / other`` in the Laurent ring; raises if inexact."""
        other = QLaurent.coerce(other)
        if not other:
            raise DivisionByZero("division by zero QLaurent")
        if not self._t:
            return self
        if other.is_monomial():
            (eo, co), = other._t.items()
            t = {}
            for e, c in self._t.items():
                qt, r = divmod(c, co)
                if r:
                    raise InexactDivision(f"{self} is not divisible by {other}")
                t[e - eo] = qt
            return QLaurent._raw(t)
        # long division from the top degree down
        rem = dict(self._t)
        od, oc = other.degree, other._t[other.degree]
        ov = other.valuation
        out: dict[int, int] = {}
        sv = self.valuation
        while rem:
            top = max(rem)
            if top - od < sv - ov:
                raise InexactDivision(f"{self} is not divisible by {other}")
            c, r = divmod(rem[top], oc)
            if r:
                raise InexactDivision(f"{self} is not divisible by {other}")
            s = top - od
            out[s] = c
            for e, k in other._t.items():
                v = rem.get(e + s, 0) - c * k
                if v:
                    rem[e + s] = v
                else:
                    rem.pop(e + s, None)
        return QLaurent._raw(out)

    def __truediv__(self, other: Scalar | QRational) -> QRational:
        return QRational(self) / other

    def __rtruediv__(self, other: Scalar) -> QRational:
        return QRational(QLaurent.coerce(other)) / QRational(self)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, QLaurent):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        if isinstance(other, QRational):
            return other == self
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- rendering --------------------------------------------------------
    def to_pairs(self) -> list[tuple[int, int]]:
        """Machine rendering: ``(v-exponent, coefficient)`` pairs, ascending."""
        return sorted(self._t.items())

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._t.items()):
            mono = _render_monomial(e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QLaurent({self})"

    # -- power-series helpers ---------------------------------------------
    def truncate(self, max_sixths: int) -> QLaurent:
        """Drop every term whose v-exponent exceeds ``max_sixths``."""
        return QLaurent._raw({e: c for e, c in self._t.items() if e <= max_sixths})

    def q_exponents_integral(self) -> bool:
        return all(e % 6 == 0 for e in self._t)


def _render_monomial(e: int) -> str:
    if e == 0:
        return ""
    f = Fraction(e, 6)
    if f.denominator == 1:
        n = f.numerator
        if n == 1:
            return "q"
        return f"q^{n}" if n > 0 else f"q^({n})"
    return f"q^({f.numerator}/{f.denominator})"


def qpow(sixths: int) -> QLaurent:
    """The monomial ``q^(sixths/6)``."""
    return QLaurent.monomial(sixths)


def ql_arith(op: str, a: Scalar, b: Scalar) -> QLaurent:
    a, b = QLaurent.coerce(a), QLaurent.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown QLaurent operation {op!r}")


# ---------------------------------------------------------------------------
# dense integer polynomials (lowest coefficient first) for gcd work


def _dense(p: QLaurent) -> list[int]:
    v = p.valuation
    out = [0] * (p.degree - v + 1)
    for e, c in p._t.items():
        out[e - v] = c
    return out


def _from_dense(coeffs: list[int], shift: int = 0) -> QLaurent:
    return QLaurent._raw({i + shift: c for i, c in enumerate(coeffs) if c})


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive(a: list[int]) -> list[int]:
    g = math.gcd(*a) if a else 0
    if g > 1:
        a = [c // g for c in a]
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b``; both nonzero, trimmed."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        _trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd over Z[x] of two nonzero dense polynomials."""
    a, b = _primitive(_trim(list(a))), _primitive(_trim(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    return _primitive(a)


def _dense_exact_div(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) - len(b) + 1)
    a = list(a)
    lb = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(a[i + len(b) - 1], lb)
        if r:
            raise InexactDivision("dense division left a remainder")
        out[i] = c
        if c:
            for j, k in enumerate(b):
                a[i + j] -= c * k
    if any(a):
        raise InexactDivision("dense division left a remainder")
    return out


class QRational:
    """A reduced quotient ``num / den`` of two :class:`QLaurent` values.

    Canonical form: ``gcd(num, den) = 1`` in Q[v] after removing monomial
    content, the integer contents are coprime, and ``den`` has lowest
    exponent 0 with a positive coefficient there.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Scalar | QRational = 0, den: Scalar = 1):
        if isinstance(num, QRational):
            if isinstance(den, int) and den == 1:
                self.num, self.den, self._hash = num.num, num.den, None
                return
            r = num / QRational(den)
            self.num, self.den, self._hash = r.num, r.den, None
            return
        n, d = QLaurent.coerce(num), QLaurent.coerce(den)
        if not d:
            raise DivisionByZero("zero denominator")
        self.num, self.den = _canonical(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num: QLaurent, den: QLaurent) -> QRational:
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def coerce(cls, x: Scalar | QRational) -> QRational:
        if isinstance(x, QRational):
            return x
        if isinstance(x, (int, QLaurent)):
            return cls._raw(QLaurent.coerce(x), QLaurent.one())
        raise TypeError(f"cannot coerce {type(x).__name__} to QRational")

    def is_laurent(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> QLaurent:
        if not self.is_laurent():
            raise InexactDivision(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other: Scalar | QRational) -> QRational:
        try:
            o = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            if self.den == 1:
                return QRational._raw(self.num + o.num, self.den)
            return QRational(self.num + o.num, self.den)
        return QRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> QRational:
        return QRational._raw(-self.num, self.den)

    def __sub__(self, other: Scalar | QRational) -> QRational:
        try:
            o = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar | QRational) -> QRational:
        return QRational.coerce(other) - self

    def __mul__(self, other: Scalar | QRational) -> QRational:
        try:
            o = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == 1 and o.den == 1:
            return QRational._raw(self.num * o.num, self.den)
        return QRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar | QRational) -> QRational:
        try:
            o = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            raise DivisionByZero("division by zero")
        return QRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: Scalar | QRational) -> QRational:
        return QRational.coerce(other) / self

    def __pow__(self, n: int) -> QRational:
        if n < 0:
            return QRational(1) / (self ** (-n))
        return QRational(self.num ** n, self.den ** n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, QLaurent)):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.num) if self.den == 1 else hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"QRational({self})"


def _canonical(n: QLaurent, d: QLaurent) -> tuple[QLaurent, QLaurent]:
    if not n:
        return QLaurent.zero(), QLaurent.one()
    if d.is_monomial():
        (e, c), = d._t.items()
        if c in (1, -1):
            return n.shift(-e) * c, QLaurent.one()
    vn, vd = n.valuation, d.valuation
    a, b = _dense(n), _dense(d)
    if len(b) > 1:
        g = _poly_gcd(a, b)
        if len(g) > 1:
            a = _dense_exact_div(a, g)
            b = _dense_exact_div(b, g)
    c = math.gcd(math.gcd(*a), math.gcd(*b))
    if c > 1:
        a = [x // c for x in a]
        b = [x // c for x in b]
    if b[0] < 0:
        a = [-x for x in a]
        b = [-x for x in b]
    return _from_dense(a, vn - vd), _from_dense(b)


def qr_arith(op: str, a: Scalar | QRational, b: Scalar | QRational) -> QRational:
    a, b = QRational.coerce(a), QRational.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown QRational operation {op!r}")


def series_truncate(r: Scalar | QRational, order: int) -> QLaurent:
    """Expand ``r`` as a Laurent series in v and keep q-exponents <= ``order``."""
    r = QRational.coerce(r)
    limit = 6 * order
    if r.den == 1:
        return r.num.truncate(limit)
    den = r.den
    d0 = den.coeff(0)
    if d0 not in (1, -1):
        raise NonUnitDenominator(f"denominator {den} has non-unit constant term")
    if not r.num:
        return QLaurent.zero()
    vn = r.num.valuation
    need = limit - vn
    if need < 0:
        return QLaurent.zero()
    # invert den as a power series up to v^need
    dd = {e: c for e, c in den._t.items() if e <= need}
    inv = [0] * (need + 1)
    inv[0] = d0
    for k in range(1, need + 1):
        s = 0
        for e, c in dd.items():
            if 0 < e <= k:
                s += c * inv[k - e]
        inv[k] = -s * d0
    out: dict[int, int] = {}
    for e, c in r.num._t.items():
        off = e - vn
        for k in range(0, need - off + 1):
            if inv[k]:
                key = e + k
                out[key] = out.get(key, 0) + c * inv[k]
    return QLaurent._raw({e: c for e, c in out.items() if c and e <= limit})
