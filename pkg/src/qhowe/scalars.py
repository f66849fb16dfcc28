"""Exact arithmetic in Q(i)(v), where v = q^(1/2).

Every coefficient that occurs in the oscillator modules is a Laurent
polynomial in v with rational coefficients; rational functions arise from
quantum-integer denominators and from Gaussian elimination.  Gaussian
rationals only show up in one Cartan branch constant.

Coefficients inside :class:`LaurentPoly` are stored as ``int``,
``Fraction`` or :class:`GaussianRational` (the latter only when the
imaginary part is nonzero), which keeps the common real case fast.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple, Union

__all__ = [
    "GaussianRational",
    "LaurentPoly",
    "Scalar",
    "PoleAtOne",
    "quantum_int",
    "q_factorial",
    "q_binomial",
    "q_factorial_binomial",
    "q_sub",
    "bq",
    "eval_at_one",
    "parse_scalar",
    "parse_expr",
    "ZERO",
    "ONE",
    "V",
    "Q",
    "I_UNIT",
]


class PoleAtOne(ArithmeticError):
    """The element is not regular at v = 1."""


# ---------------------------------------------------------------------------
# Gaussian rationals


class GaussianRational:
    """A number re + im*i with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _parts(x):
        if isinstance(x, GaussianRational):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return x, 0
        return NotImplemented

    def __add__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return NotImplemented
        return _gauss(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return NotImplemented
        return _gauss(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return NotImplemented
        return _gauss(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        return _gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return NotImplemented
        c, d = p
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b = self.re, self.im
        return _gauss(Fraction(a * c + b * d) / n, Fraction(b * c - a * d) / n)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return NotImplemented
        return GaussianRational(p[0], p[1]) / self

    def __eq__(self, other):
        p = self._parts(other)
        if p is NotImplemented:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return _gauss(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return _fmt_coeff(self)


def _gauss(re, im):
    """Demote to a plain rational when the imaginary part vanishes."""
    if im == 0:
        return re
    return GaussianRational(re, im)


def as_gaussian(c) -> GaussianRational:
    return c if isinstance(c, GaussianRational) else GaussianRational(c, 0)


def _cdiv(a, b):
    if type(a) is int and type(b) is int:
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    r = a / b
    if type(r) is Fraction and r.denominator == 1:
        return r.numerator
    return r


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Sparse Laurent polynomial in v; ``terms`` maps exponent -> coefficient."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Union[Dict[int, object], None] = None):
        self._t = {k: c for k, c in (terms or {}).items() if c != 0}
        self._h = None

    @classmethod
    def _raw(cls, d):
        p = cls.__new__(cls)
        p._t = d
        p._h = None
        return p

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "LaurentPoly":
        if coeff == 0:
            return cls._raw({})
        return cls._raw({exp: coeff})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls.monomial(0, c)

    # -- inspection ----------------------------------------------------------
    @property
    def terms(self) -> Dict[int, object]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def coeff(self, k: int):
        return self._t.get(k, 0)

    def is_zero(self) -> bool:
        return not self._t

    def is_one(self) -> bool:
        t = self._t
        return len(t) == 1 and t.get(0) == 1

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def min_exp(self) -> int:
        return min(self._t)

    def max_exp(self) -> int:
        return max(self._t)

    def nterms(self) -> int:
        return len(self._t)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if not other._t:
            return self
        if not self._t:
            return other
        d = dict(self._t)
        for k, c in other._t.items():
            s = d.get(k)
            if s is None:
                d[k] = c
            else:
                s = s + c
                if s == 0:
                    del d[k]
                else:
                    d[k] = s
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if other == 0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()})
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if cb == 1:
                return LaurentPoly._raw({k + kb: c for k, c in a.items()})
            return LaurentPoly._raw({k + kb: c * cb for k, c in a.items()})
        d = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                s = d.get(k)
                d[k] = ca * cb if s is None else s + ca * cb
        return LaurentPoly._raw({k: c for k, c in d.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of a Laurent polynomial need Scalar")
        out = ONE_POLY
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def bar(self) -> "LaurentPoly":
        """v -> v^{-1}, coefficients fixed."""
        return LaurentPoly._raw({-e: c for e, c in self._t.items()})

    def eval_at_one(self):
        s = 0
        for c in self._t.values():
            s = s + c
        return s

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction, GaussianRational)):
            if other == 0:
                return not self._t
            return self._t == {0: other}
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def __repr__(self):
        return f"LaurentPoly({_fmt_poly(self)})"

    def __str__(self):
        return _fmt_poly(self)


ONE_POLY = LaurentPoly._raw({0: 1})
ZERO_POLY = LaurentPoly._raw({})


def _dense(p: LaurentPoly) -> list:
    """Descending coefficient list of p * v^(-min_exp)."""
    lo, hi = p.min_exp(), p.max_exp()
    t = p._t
    return [t.get(k, 0) for k in range(hi, lo - 1, -1)]


def _from_dense(coeffs: Sequence, lo: int = 0) -> LaurentPoly:
    n = len(coeffs)
    return LaurentPoly._raw({lo + n - 1 - i: c for i, c in enumerate(coeffs) if c != 0})


def _strip(a: list) -> list:
    i = 0
    while i < len(a) and a[i] == 0:
        i += 1
    return a[i:]


def _divmod_dense(a: list, b: list):
    a = list(a)
    lb = b[0]
    nb = len(b)
    if len(a) < nb:
        return [], a
    quot = []
    for i in range(len(a) - nb + 1):
        c = _cdiv(a[i], lb)
        quot.append(c)
        if c != 0:
            for j in range(1, nb):
                if b[j] != 0:
                    a[i + j] = a[i + j] - c * b[j]
    return quot, _strip(a[len(a) - nb + 1:])


def _gcd_dense(a: list, b: list) -> list:
    a, b = _strip(a), _strip(b)
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    lead = a[0]
    return [_cdiv(c, lead) for c in a]


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd up to units, normalized with lowest exponent 0 and constant term 1."""
    if a.is_zero():
        return _normalize_unit(b)
    if b.is_zero():
        return _normalize_unit(a)
    if len(a._t) == 1 or len(b._t) == 1:
        return ONE_POLY
    g = _gcd_dense(_dense(a), _dense(b))
    return _normalize_unit(_from_dense(g))


def _normalize_unit(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    p = p.shift(-p.min_exp())
    c = p._t[0]
    if c == 1:
        return p
    return LaurentPoly._raw({k: _cdiv(x, c) for k, x in p._t.items()})


def poly_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if len(b._t) == 1:
        (k, c), = b._t.items()
        return LaurentPoly._raw({e - k: _cdiv(x, c) for e, x in a._t.items()})
    if a.is_zero():
        return a
    la, lb = a.min_exp(), b.min_exp()
    quot, rem = _divmod_dense(_dense(a), _dense(b))
    if rem:
        raise ArithmeticError("inexact Laurent polynomial division")
    return _from_dense(quot, la - lb)


# ---------------------------------------------------------------------------
# Rational functions


class Scalar:
    """Reduced fraction num/den of Laurent polynomials in v.

    The denominator is normalized to have lowest exponent 0 and lowest
    coefficient 1, so each field element has exactly one representation.
    """

    __slots__ = ("num", "den", "_p", "_h")

    def __init__(self, num=0, den=None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        if den is None:
            den = ONE_POLY
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den)
        self._set(*_canonical(num, den))

    def _set(self, num, den):
        self.num = num
        self.den = den
        self._p = den.is_one()
        self._h = None

    @classmethod
    def _make(cls, num, den=None):
        s = cls.__new__(cls)
        if den is None or den.is_one():
            s.num, s.den, s._p = num, ONE_POLY, True
        else:
            s.num, s.den, s._p = num, den, False
        s._h = None
        return s

    @classmethod
    def poly(cls, p: LaurentPoly) -> "Scalar":
        return cls._make(p)

    @classmethod
    def mono(cls, exp_v: int, coeff=1) -> "Scalar":
        """coeff * v^exp_v."""
        return cls._make(LaurentPoly.monomial(exp_v, coeff))

    @classmethod
    def qpow(cls, e: int, sign: int = 1) -> "Scalar":
        """sign * q^e."""
        if e == 0 and sign == 1:
            return ONE
        return cls._make(LaurentPoly.monomial(2 * e, sign))

    # -- predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num._t

    def is_poly(self) -> bool:
        return self._p

    def is_one(self) -> bool:
        return self._p and self.num.is_one()

    def nterms(self) -> int:
        return len(self.num._t) + (0 if self._p else len(self.den._t))

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, LaurentPoly):
            return Scalar._make(x)
        if isinstance(x, (int, Fraction, GaussianRational)):
            return Scalar._make(LaurentPoly.const(x))
        return NotImplemented

    def __add__(self, other):
        o = other if type(other) is Scalar else Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._p and o._p:
            return Scalar._make(self.num + o.num)
        if not o.num._t:
            return self
        if not self.num._t:
            return o
        if self.den == o.den:
            n = self.num + o.num
            return Scalar._reduce(n, self.den)
        g = poly_gcd(self.den, o.den)
        if g.is_one():
            n = self.num * o.den + o.num * self.den
            return Scalar._reduce(n, self.den * o.den, skip_gcd=False)
        bd = poly_exact_div(self.den, g)
        dd = poly_exact_div(o.den, g)
        n = self.num * dd + o.num * bd
        return Scalar._reduce(n, self.den * dd)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.num, self.den)

    def __sub__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = other if type(other) is Scalar else Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is ONE:
            return self
        if self is ONE:
            return o
        if self._p and o._p:
            a, b = self.num._t, o.num._t
            if len(a) == 1 and len(b) == 1:
                (ka, ca), = a.items()
                (kb, cb), = b.items()
                return Scalar._make(LaurentPoly._raw({ka + kb: ca * cb}))
            return Scalar._make(self.num * o.num)
        if not self.num._t or not o.num._t:
            return ZERO
        a, b, c, d = self.num, self.den, o.num, o.den
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one():
            a, d = poly_exact_div(a, g1), poly_exact_div(d, g1)
        if not g2.is_one():
            c, b = poly_exact_div(c, g2), poly_exact_div(b, g2)
        return Scalar._make(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        n, d = self.den, self.num
        k = d.min_exp()
        n, d = n.shift(-k), d.shift(-k)
        c = d._t[0]
        if c != 1:
            n = LaurentPoly._raw({e: _cdiv(x, c) for e, x in n._t.items()})
            d = LaurentPoly._raw({e: _cdiv(x, c) for e, x in d._t.items()})
        return Scalar._make(n, d)

    def __truediv__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    @staticmethod
    def _reduce(n: LaurentPoly, d: LaurentPoly, skip_gcd: bool = False) -> "Scalar":
        if not n._t:
            return ZERO
        if not skip_gcd:
            g = poly_gcd(n, d)
            if not g.is_one():
                n, d = poly_exact_div(n, g), poly_exact_div(d, g)
        return Scalar._make(n, d)

    # -- maps ----------------------------------------------------------------
    def bar(self) -> "Scalar":
        """The involution v -> v^{-1}."""
        return Scalar(self.num.bar(), self.den.bar())

    def eval_at_one(self) -> GaussianRational:
        return eval_at_one(self)

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.num, self.den))
        return self._h

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self._p:
            return _fmt_poly(self.num)
        return f"({_fmt_poly(self.num)})/({_fmt_poly(self.den)})"


def _canonical(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    k = den.min_exp()
    num, den = num.shift(-k), den.shift(-k)
    if len(den._t) > 1:
        g = poly_gcd(num, den)
        if not g.is_one():
            num, den = poly_exact_div(num, g), poly_exact_div(den, g)
    c = den._t[0]
    if c != 1:
        num = LaurentPoly._raw({e: _cdiv(x, c) for e, x in num._t.items()})
        den = LaurentPoly._raw({e: _cdiv(x, c) for e, x in den._t.items()})
    return num, den


ZERO = Scalar._make(ZERO_POLY)
ONE = Scalar._make(ONE_POLY)
V = Scalar.mono(1)
Q = Scalar.mono(2)
I_UNIT = Scalar._make(LaurentPoly.const(GaussianRational(0, 1)))


# ---------------------------------------------------------------------------
# q-combinatorics

_QINT_CACHE: Dict[int, LaurentPoly] = {}


def quantum_int(m: int) -> LaurentPoly:
    """[m] = (q^m - q^-m)/(q - q^-1) as a Laurent polynomial in v."""
    if m < 0:
        raise ValueError("quantum_int expects m >= 0")
    p = _QINT_CACHE.get(m)
    if p is None:
        p = LaurentPoly._raw({2 * (m - 1 - 2 * k): 1 for k in range(m)})
        _QINT_CACHE[m] = p
    return p


def q_factorial(m: int) -> LaurentPoly:
    if m < 0:
        raise ValueError("q_factorial expects m >= 0")
    out = ONE_POLY
    for j in range(2, m + 1):
        out = out * quantum_int(j)
    return out


def q_binomial(m: int, k: int) -> Scalar:
    if not 0 <= k <= m:
        raise ValueError(f"q_binomial needs 0 <= k <= m, got m={m}, k={k}")
    top = ONE_POLY
    for j in range(m - k + 1, m + 1):
        top = top * quantum_int(j)
    return Scalar(top, q_factorial(k))


def q_factorial_binomial(m: int, k: int) -> Tuple[LaurentPoly, Scalar]:
    return q_factorial(m), q_binomial(m, k)


def q_sub(parity: int) -> Scalar:
    """q_i for a slot of the given parity: q (even) or -q^{-1} (odd)."""
    return Scalar.qpow(1) if parity == 0 else Scalar.qpow(-1, -1)


def q_sub_pow(parity: int, e: int) -> Scalar:
    """q_i ** e as a signed monomial."""
    if parity == 0:
        return Scalar.qpow(e)
    return Scalar.qpow(-e, -1 if e % 2 else 1)


def bq(mu: Sequence[int], nu: Sequence[int], eps: Sequence[int]) -> Scalar:
    """The bicharacter prod_i q_i^(mu_i nu_i)."""
    if not (len(mu) == len(nu) == len(eps)):
        raise ValueError("bq: length mismatch between mu, nu and eps")
    e_q = 0
    sign = 1
    for a, b, p in zip(mu, nu, eps):
        e = a * b
        if p == 0:
            e_q += e
        else:
            e_q -= e
            if e % 2:
                sign = -sign
    return Scalar.qpow(e_q, sign)


def eval_at_one(x) -> GaussianRational:
    """Value at v = 1; raises PoleAtOne if the reduced denominator vanishes there."""
    x = Scalar._coerce(x)
    d = x.den.eval_at_one()
    if d == 0:
        raise PoleAtOne(f"{x} has a pole at v = 1")
    return as_gaussian(_cdiv(x.num.eval_at_one(), d) if x.den._t else 0)


# ---------------------------------------------------------------------------
# text form:  term = coeff "*v^" int,  coeff = rat | rat "+" rat "i"

_RAT = r"-?\d+(?:/\d+)?"
_TERM_RE = re.compile(rf"({_RAT})(?:\+({_RAT})i)?\*v\^(-?\d+)")


def _fmt_coeff(c) -> str:
    if isinstance(c, GaussianRational):
        return f"{c.re}+{c.im}i"
    return str(Fraction(c))


def _fmt_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0*v^0"
    return "+".join(f"{_fmt_coeff(c)}*v^{k}" for k, c in sorted(p._t.items(), reverse=True))


def _parse_poly(s: str) -> LaurentPoly:
    pos = 0
    d: Dict[int, object] = {}
    while True:
        m = _TERM_RE.match(s, pos)
        if m is None:
            raise ValueError(f"malformed polynomial text at {s[pos:]!r}")
        re_part = Fraction(m.group(1))
        im_part = Fraction(m.group(2)) if m.group(2) is not None else 0
        c = _gauss(re_part, im_part)
        if type(c) is Fraction and c.denominator == 1:
            c = c.numerator
        k = int(m.group(3))
        d[k] = d.get(k, 0) + c
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "+":
            raise ValueError(f"expected '+' at {s[pos:]!r}")
        pos += 1
    return LaurentPoly(d)


def parse_scalar(text: str) -> Scalar:
    """Inverse of ``str(Scalar)``."""
    s = text.strip()
    if s.startswith("("):
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", s)
        if m is None:
            raise ValueError(f"malformed scalar text {text!r}")
        return Scalar(_parse_poly(m.group(1)), _parse_poly(m.group(2)))
    return Scalar(_parse_poly(s))


_NAMES = {"v": V, "q": Q, "i": I_UNIT}


def parse_expr(text: str) -> Scalar:
    """Parse a human-written expression in q, v and i, such as ``-q^-1`` or
    ``(q^2 - q^-2)/(q - q^-1)``.  Falls back to the serialized grammar."""
    src = text.strip()
    if "*v^" in src:
        return parse_scalar(src)
    tree = ast.parse(src.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Scalar(node.value)
        if isinstance(node, ast.Name) and node.id in _NAMES:
            return _NAMES[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            x = ev(node.operand)
            return -x if isinstance(node.op, ast.USub) else x
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = _int_exponent(node.right)
                return ev(node.left) ** e
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
        raise ValueError(f"unsupported syntax in scalar expression {text!r}")

    return ev(tree)


def _int_exponent(node) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_int_exponent(node.operand)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.UAdd):
        return _int_exponent(node.operand)
    raise ValueError("exponents must be integer literals")


def scalar_sum(xs: Iterable[Scalar]) -> Scalar:
    out = ZERO
    for x in xs:
        out = out + x
    return out
