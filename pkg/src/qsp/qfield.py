"""Exact coefficient field for the coideal computations.

Elements live in the fraction field of Laurent polynomials in ``q`` (and
optionally a second central indeterminate ``mu``) over the Gaussian rationals
``Q(i)``.  Nothing here ever touches floating point.

Internally a :class:`LaurentPoly` is a dict from ``(q_exp, mu_exp, iota_bit)``
to a nonzero :class:`gmpy2.mpq`.  The iota bit records whether the term carries
a factor of ``i = sqrt(-1)``; multiplying two such terms flips the sign and
clears the bit.  This keeps the hot loops on plain rationals while still
presenting Gaussian-rational coefficients through :meth:`LaurentPoly.coeff`.

A :class:`Scalar` is ``num / den``.  Fractions whose denominator is free of
``mu`` are brought to a canonical reduced form with a univariate GCD over
``Q(i)``.  When ``mu`` appears in a denominator the fraction is kept as is and
equality falls back to cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union

from gmpy2 import mpq

__all__ = [
    "GaussianRational",
    "LaurentPoly",
    "Scalar",
    "ScalarLike",
    "q",
    "mu",
    "iota",
    "qint",
    "qbracket",
    "alpha_minus",
    "alpha_plus",
    "as_scalar",
]

Key = tuple[int, int, int]

_ZERO = mpq(0)
_ONE = mpq(1)
_EXP_LIMIT = 2**62


def _rat(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class GaussianRational:
    """A number ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _rat(re)
        self.im = _rat(im)

    @staticmethod
    def _coerce(other) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return other
        return GaussianRational(other, 0)

    def __add__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> mpq:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) or type(other) is type(_ONE):
            return self.im == 0 and self.re == other
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return _fmt_gauss(self.re, self.im)


def _fmt_rat(r: mpq) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def _fmt_gauss(re: mpq, im: mpq) -> str:
    if im == 0:
        return _fmt_rat(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{_fmt_rat(im)}*i"
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    imag = "i" if mag == 1 else f"{_fmt_rat(mag)}*i"
    return f"({_fmt_rat(re)}{sign}{imag})"


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Sparse Laurent polynomial in ``q`` and ``mu`` over ``Q(i)``."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: dict | None = None):
        clean: dict[Key, mpq] = {}
        if terms:
            for (qe, me, ib), c in terms.items():
                c = _rat(c)
                if c:
                    _check_exp(qe)
                    _check_exp(me)
                    k = (int(qe), int(me), int(ib) & 1)
                    clean[k] = clean.get(k, _ZERO) + c
            clean = {k: v for k, v in clean.items() if v}
        self._t = clean
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._t = d
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({(0, 0, 0): _ONE})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        if isinstance(c, GaussianRational):
            d = {}
            if c.re:
                d[(0, 0, 0)] = c.re
            if c.im:
                d[(0, 0, 1)] = c.im
            return cls._raw(d)
        c = _rat(c)
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def monomial(cls, q_exp: int = 0, mu_exp: int = 0, coeff=1, iota: bool = False) -> "LaurentPoly":
        _check_exp(q_exp)
        _check_exp(mu_exp)
        c = _rat(coeff)
        return cls._raw({(q_exp, mu_exp, int(iota)): c} if c else {})

    # inspection -------------------------------------------------------------
    def terms(self) -> dict[Key, mpq]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def is_one(self) -> bool:
        return len(self._t) == 1 and self._t.get((0, 0, 0)) == 1

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def has_mu(self) -> bool:
        return any(k[1] for k in self._t)

    def has_iota(self) -> bool:
        return any(k[2] for k in self._t)

    def coeff(self, q_exp: int, mu_exp: int = 0) -> GaussianRational:
        return GaussianRational(self._t.get((q_exp, mu_exp, 0), 0), self._t.get((q_exp, mu_exp, 1), 0))

    def support(self) -> list[tuple[int, int]]:
        return sorted({(k[0], k[1]) for k in self._t})

    def q_degree_range(self) -> tuple[int, int]:
        exps = [k[0] for k in self._t]
        return min(exps), max(exps)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other._t:
            return self
        if not self._t:
            return other
        out = dict(self._t)
        for k, v in other._t.items():
            w = out.get(k)
            if w is None:
                out[k] = v
            else:
                w = w + v
                if w:
                    out[k] = w
                else:
                    del out[k]
        return LaurentPoly._raw(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -v for k, v in self._t.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self._t, other._t
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) > len(b):
            a, b = b, a
        out: dict[Key, mpq] = {}
        get = out.get
        for (qa, ma, ia), ca in a.items():
            for (qb, mb, ib), cb in b.items():
                c = ca * cb
                i = ia + ib
                if i == 2:
                    i = 0
                    c = -c
                k = (qa + qb, ma + mb, i)
                v = get(k)
                out[k] = c if v is None else v + c
        return LaurentPoly._raw({k: v for k, v in out.items() if v})

    def scale(self, c) -> "LaurentPoly":
        c = _rat(c)
        if not c:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({k: v * c for k, v in self._t.items()})

    def shift(self, q_exp: int, mu_exp: int = 0) -> "LaurentPoly":
        """Multiply by the monomial ``q**q_exp * mu**mu_exp``."""
        if not q_exp and not mu_exp:
            return self
        return LaurentPoly._raw({(a + q_exp, m + mu_exp, i): v for (a, m, i), v in self._t.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            return self.monomial_inverse() ** (-n)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monomial_inverse(self) -> "LaurentPoly":
        ((qe, me, ib), c), = self._t.items()
        inv = 1 / c
        if ib:
            inv = -inv  # 1/(c i) = -i/c
        return LaurentPoly._raw({(-qe, -me, ib): inv})

    def flip(self) -> "LaurentPoly":
        """Substitute ``q -> q**-1``."""
        return LaurentPoly._raw({(-a, m, i): v for (a, m, i), v in self._t.items()})

    def conjugate_iota(self) -> "LaurentPoly":
        return LaurentPoly._raw({(a, m, i): (-v if i else v) for (a, m, i), v in self._t.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return _fmt_poly(self)


def _check_exp(e: int) -> None:
    if not -_EXP_LIMIT < e < _EXP_LIMIT:
        raise OverflowError(f"exponent {e} outside machine range")


def _grouped(poly: LaurentPoly) -> dict[tuple[int, int], tuple[mpq, mpq]]:
    out: dict[tuple[int, int], list] = {}
    for (a, m, i), v in poly.items():
        slot = out.setdefault((a, m), [_ZERO, _ZERO])
        slot[i] = v
    return {k: (v[0], v[1]) for k, v in out.items()}


def _fmt_monomial(a: int, m: int) -> str:
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if m:
        parts.append("mu" if m == 1 else f"mu^{m}")
    return "*".join(parts)


def _fmt_poly(poly: LaurentPoly) -> str:
    if poly.is_zero():
        return "0"
    groups = _grouped(poly)
    pieces: list[str] = []
    for (a, m) in sorted(groups, key=lambda k: (-k[1], -k[0])):
        re, im = groups[(a, m)]
        mono = _fmt_monomial(a, m)
        negative = False
        if im == 0 and re < 0:
            negative, re = True, -re
        elif re == 0 and im < 0:
            negative, im = True, -im
        if im == 0 and re == 1:
            body = mono or "1"
        else:
            c = _fmt_gauss(re, im)
            if im == 0 and re.denominator != 1 and mono:
                c = f"({c})"
            body = f"{c}*{mono}" if mono else c
        pieces.append(("-", body) if negative else ("+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficients are mpq or GaussianRational)
# ---------------------------------------------------------------------------


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _dense_slice(poly: LaurentPoly, mu_exp: int, gaussian: bool) -> tuple[int, list]:
    """Dense coefficient list (lowest q power first) of the ``mu**mu_exp`` slice."""
    entries = {}
    for (a, m, i), v in poly.items():
        if m != mu_exp:
            continue
        slot = entries.setdefault(a, [_ZERO, _ZERO])
        slot[i] = v
    lo = min(entries)
    hi = max(entries)
    if gaussian:
        dense = [GaussianRational(0, 0) for _ in range(hi - lo + 1)]
        for a, (re, im) in entries.items():
            dense[a - lo] = GaussianRational(re, im)
    else:
        dense = [_ZERO] * (hi - lo + 1)
        for a, (re, _im) in entries.items():
            dense[a - lo] = re
    return lo, dense


def _from_dense(dense: list, lo: int, mu_exp: int, gaussian: bool) -> dict[Key, mpq]:
    out: dict[Key, mpq] = {}
    for j, c in enumerate(dense):
        if gaussian:
            if c.re:
                out[(lo + j, mu_exp, 0)] = c.re
            if c.im:
                out[(lo + j, mu_exp, 1)] = c.im
        elif c:
            out[(lo + j, mu_exp, 0)] = c
    return out


def _divmod_dense(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    nb = len(b)
    lead_inv = 1 / b[-1]
    if len(a) < nb:
        return [], _trim(a)
    quot = [None] * (len(a) - nb + 1)
    for i in range(len(a) - nb, -1, -1):
        c = a[i + nb - 1] * lead_inv
        quot[i] = c
        if c:
            for j in range(nb):
                a[i + j] = a[i + j] - c * b[j]
    return quot, _trim(a[: nb - 1])


def _gcd_dense(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    if not a:
        return a
    inv = 1 / a[-1]
    return [c * inv for c in a]


def _is_unit_dense(p: list) -> bool:
    return len(p) == 1


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

ScalarLike = Union["Scalar", int, Fraction, LaurentPoly, GaussianRational]


class Scalar:
    """Element of ``Q(i)(q)`` or ``Q(i)(q, mu)`` stored as ``num / den``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: ScalarLike = 0, den: ScalarLike = 1):
        if isinstance(num, Scalar) or isinstance(den, Scalar):
            s = as_scalar(num) / as_scalar(den)
            n, d = s.num, s.den
        else:
            n, d = _to_poly(num), _to_poly(den)
        if d.is_zero():
            raise ZeroDivisionError("Scalar with zero denominator")
        self.num, self.den = _normalize(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "Scalar":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly) -> "Scalar":
        n, d = _normalize(num, den)
        return cls._raw(n, d)

    # inspection -------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def has_mu(self) -> bool:
        return self.num.has_mu() or self.den.has_mu()

    def has_iota(self) -> bool:
        return self.num.has_iota() or self.den.has_iota()

    def __bool__(self):
        return not self.num.is_zero()

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: ScalarLike) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den.is_one() and o.den.is_one():
            return Scalar._raw(self.num + o.num, self.den)
        if self.den == o.den:
            return Scalar._make(self.num + o.num, self.den)
        return Scalar._make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other: ScalarLike) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return _SZERO
        a, b = self, o
        if len(a.num._t) == 1 and a.den.is_one():
            a, b = b, a
        if len(b.num._t) == 1 and b.den.is_one():
            # multiplication by a monomial c q^k: no renormalisation needed
            ((k, c),) = b.num._t.items()
            if not k[1] and not k[2]:
                e = k[0]
                return Scalar._raw(LaurentPoly._raw({(x + e, m, i): v * c for (x, m, i), v in a.num._t.items()}), a.den)
        if self.den.is_one() and o.den.is_one():
            return Scalar._raw(self.num * o.num, self.den)
        return Scalar._make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar._make(self.den, self.num)

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        if self.den.is_one():
            return Scalar._raw(self.num ** n, self.den)
        return Scalar._make(self.num ** n, self.den ** n)

    def shift_q(self, k: int, sign: int = 1) -> "Scalar":
        """``sign * q**k * self`` without renormalising (monomials are units)."""
        if not k and sign == 1:
            return self
        t = self.num._t
        if sign == 1:
            num = LaurentPoly._raw({(a + k, m, i): v for (a, m, i), v in t.items()})
        else:
            num = LaurentPoly._raw({(a + k, m, i): -v for (a, m, i), v in t.items()})
        return Scalar._raw(num, self.den)

    # maps -----------------------------------------------------------------
    def flip(self) -> "Scalar":
        """The ring involution ``q -> q**-1``."""
        return Scalar._make(self.num.flip(), self.den.flip())

    def specialize_mu(self, value: ScalarLike) -> "Scalar":
        """Substitute ``mu -> value`` (value must be invertible if negative powers occur)."""
        v = as_scalar(value)
        return _eval_mu(self.num, v) / _eval_mu(self.den, v)

    # comparison -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction, LaurentPoly, GaussianRational)):
                other = as_scalar(other)
            else:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return self.num == other.num
        if not self.den.has_mu() and not other.den.has_mu():
            return self.num == other.num and self.den == other.den
        return (self.num * other.den - other.num * self.den).is_zero()

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # Denominators involving mu are not reduced, so equal values can have
        # different representatives.  Hash the value at a fixed generic point
        # instead, which only depends on the element of the field.
        if self._hash is None:
            d_re, d_im = _eval_at_hash_point(self.den)
            if not d_re and not d_im:
                self._hash = 0
            else:
                n_re, n_im = _eval_at_hash_point(self.num)
                norm = d_re * d_re + d_im * d_im
                re = (n_re * d_re + n_im * d_im) / norm
                im = (n_im * d_re - n_re * d_im) / norm
                self._hash = hash((re, im))
        return self._hash

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        if len(self.num.items()) > 1 or n.startswith("-"):
            n = f"({n})"
        return f"{n}/({self.den})"


def _to_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.const(x)


def as_scalar(x: ScalarLike) -> Scalar:
    """Coerce ints, fractions, Gaussian rationals and Laurent polynomials."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, LaurentPoly):
        return Scalar._raw(x, _PONE)
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction, GaussianRational)) or type(x) is type(_ONE):
        return Scalar._raw(LaurentPoly.const(x), _PONE)
    raise TypeError(f"cannot interpret {x!r} as a Scalar")


def _coerce(x) -> "Scalar | None":
    if isinstance(x, Scalar):
        return x
    try:
        return as_scalar(x)
    except TypeError:
        return None


def _eval_mu(poly: LaurentPoly, value: Scalar) -> Scalar:
    total = _SZERO
    by_mu: dict[int, dict] = {}
    for (a, m, i), v in poly.items():
        by_mu.setdefault(m, {})[(a, 0, i)] = v
    for m, d in by_mu.items():
        total = total + Scalar._raw(LaurentPoly._raw(d), _PONE) * value ** m
    return total


_HASH_Q = mpq(7, 3)
_HASH_MU = mpq(11, 5)


def _eval_at_hash_point(poly: LaurentPoly) -> tuple[mpq, mpq]:
    re, im = _ZERO, _ZERO
    for (a, m, i), v in poly._t.items():
        t = v * _HASH_Q**a * _HASH_MU**m
        if i:
            im += t
        else:
            re += t
    return re, im


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, _PONE
    if den.is_one():
        return num, den
    if den.is_monomial():
        return num * den.monomial_inverse(), _PONE
    # strip the monomial content of the denominator
    lo_q = min(k[0] for k in den._t)
    lo_m = min(k[1] for k in den._t)
    if lo_q or lo_m:
        den = den.shift(-lo_q, -lo_m)
        num = num.shift(-lo_q, -lo_m)
    if den.has_mu():
        # keep unreduced; just make the numerator's monomial content explicit
        return num, den
    gaussian = den.has_iota() or num.has_iota()
    _, d_dense = _dense_slice(den, 0, gaussian)
    g = d_dense
    mu_exps = sorted({k[1] for k in num._t})
    slices = {}
    for m in mu_exps:
        lo, dense = _dense_slice(num, m, gaussian)
        slices[m] = (lo, dense)
        if len(g) > 1:
            g = _gcd_dense(g, dense)
    if len(g) > 1:
        d_dense, _ = _divmod_dense(d_dense, g)
        for m in mu_exps:
            lo, dense = slices[m]
            quo, _ = _divmod_dense(dense, g)
            slices[m] = (lo, quo)
    # make the denominator monic
    lead = d_dense[-1]
    if not (lead == 1):
        inv = 1 / lead
        d_dense = [c * inv for c in d_dense]
        for m in mu_exps:
            lo, dense = slices[m]
            slices[m] = (lo, [c * inv for c in dense])
    new_num: dict[Key, mpq] = {}
    for m in mu_exps:
        lo, dense = slices[m]
        new_num.update(_from_dense(dense, lo, m, gaussian))
    new_den = _from_dense(d_dense, 0, 0, gaussian)
    return LaurentPoly._raw(new_num), LaurentPoly._raw(new_den)


_PONE = LaurentPoly.one()
_SZERO = Scalar._raw(LaurentPoly.zero(), _PONE)
_SONE = Scalar._raw(LaurentPoly.one(), _PONE)


# ---------------------------------------------------------------------------
# named constants and quantum-integer idioms
# ---------------------------------------------------------------------------


def q(n: int = 1) -> Scalar:
    """The scalar ``q**n``."""
    return Scalar._raw(LaurentPoly.monomial(n), _PONE)


def mu(n: int = 1) -> Scalar:
    """The scalar ``mu**n`` for the symbolic central parameter."""
    return Scalar._raw(LaurentPoly.monomial(0, n), _PONE)


def iota() -> Scalar:
    """A fixed square root of -1."""
    return Scalar._raw(LaurentPoly.monomial(0, 0, 1, iota=True), _PONE)


@lru_cache(maxsize=None)
def qint(n: int) -> Scalar:
    """Quantum integer ``(q**n - q**-n) / (q - q**-1)``, a Laurent polynomial."""
    if n < 0:
        return -qint(-n)
    return Scalar._raw(LaurentPoly._raw({(n - 1 - 2 * k, 0, 0): _ONE for k in range(n)}), _PONE)


_Q_MINUS_QINV = Scalar._raw(LaurentPoly._raw({(1, 0, 0): _ONE, (-1, 0, 0): -_ONE}), _PONE)


def qbracket(m: ScalarLike, n: int) -> Scalar:
    """``[m; n] = (q**n m - q**-n m**-1) / (q - q**-1)``."""
    m = as_scalar(m)
    if m.is_zero():
        raise ZeroDivisionError("[mu; n] needs an invertible mu")
    return (q(n) * m - q(-n) * m.inverse()) / _Q_MINUS_QINV


@lru_cache(maxsize=None)
def alpha_minus(n: int) -> Scalar:
    """``q**n - q**-n``."""
    return q(n) - q(-n)


@lru_cache(maxsize=None)
def alpha_plus(n: int) -> Scalar:
    """``q**n + q**-n``."""
    return q(n) + q(-n)


def q_minus_qinv() -> Scalar:
    return _Q_MINUS_QINV


def scalars_distinct(values: Iterable[Scalar]) -> bool:
    """True when no two of the given scalars are equal (exact pairwise test)."""
    vals = list(values)
    if not any(v.den.has_mu() for v in vals):
        return len(set(vals)) == len(vals)
    for i, a in enumerate(vals):
        for b in vals[i + 1:]:
            if a == b:
                return False
    return True


def iter_terms(s: Scalar) -> Iterator[tuple[int, int, GaussianRational]]:
    """Iterate ``(q_exp, mu_exp, coefficient)`` over a Laurent scalar's numerator."""
    for (a, m), (re, im) in sorted(_grouped(s.num).items()):
        yield a, m, GaussianRational(re, im)


ZERO = _SZERO
ONE = _SONE
