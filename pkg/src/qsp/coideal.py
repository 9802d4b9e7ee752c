"""The coideal subalgebra U_q' generated by B_{-1}, B_0, B_1 and the D-hats.

Algebra elements are kept as linear combinations of generator words
(:class:`Element`).  Canonical forms are :class:`PBWElement` objects, sparse maps
from PBW indices ``(f, y, e, x, b, z, kd, k1)`` to scalars, standing for the
ordered monomials

    m(f,y,e,x,b,z,kd,k1) = B_{-1}^f Y^y B_1^e X^x B_0^b Z^z Dd^kd D1^k1.

Normal forms are computed by letting a word act on the vacuum ``p_0`` of the
faithful module P whose basis vectors ``p_idx`` are in bijection with PBW
monomials.  Because ``m_idx . p_0 = p_idx`` the coordinates of ``u . p_0`` are
exactly the PBW coordinates of ``u``.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .qfield import ONE, ZERO, Scalar, ScalarLike, as_scalar, q, q_minus_qinv, qint

__all__ = [
    "Generator",
    "Element",
    "PBWIndex",
    "PBWElement",
    "ALIASES",
    "alias_expand",
    "p_act",
    "act",
    "act_sequence",
    "monomial_ops",
    "render_pbw",
    "render_index",
    "normal_form",
    "multiply",
    "check_identity",
    "tau",
    "degree",
    "comm",
    "monomial_word",
    "khat_bracket",
    "gen",
]


class Generator(enum.Enum):
    """Algebra generators; the D-hats carry explicit inverses."""

    Bminus1 = "B-1"
    B0 = "B0"
    B1 = "B1"
    Dd = "Dd"
    DdInv = "Dd^-1"
    D1 = "D1"
    D1Inv = "D1^-1"

    def __str__(self) -> str:
        return self.value


G = Generator
Word = tuple[Generator, ...]


class PBWIndex(NamedTuple):
    f: int = 0
    y: int = 0
    e: int = 0
    x: int = 0
    b: int = 0
    z: int = 0
    kd: int = 0
    k1: int = 0

    def level(self) -> int:
        """Filtration level ``f + y + e + x``."""
        return self.f + self.y + self.e + self.x


_FIELDS = PBWIndex._fields
P0 = PBWIndex()


def degree(idx: Iterable[int]) -> int:
    """The grading: deg B_{-1} = deg Y = -1, deg B_1 = deg X = +1, the rest 0."""
    f, y, e, x = tuple(idx)[:4]
    return -f - y + e + x


# ---------------------------------------------------------------------------
# Elements: linear combinations of words
# ---------------------------------------------------------------------------


class Element:
    """A finite linear combination of generator words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, ScalarLike] | None = None):
        clean: dict[Word, Scalar] = {}
        for w, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                w = tuple(w)
                prev = clean.get(w)
                clean[w] = c if prev is None else prev + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "Element":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def gen(cls, g: Generator) -> "Element":
        return cls._raw({(g,): ONE})

    @classmethod
    def scalar(cls, c: ScalarLike) -> "Element":
        c = as_scalar(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def one(cls) -> "Element":
        return cls._raw({(): ONE})

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def word(cls, *letters: Generator) -> "Element":
        return cls._raw({tuple(letters): ONE})

    def __add__(self, other) -> "Element":
        other = _as_element(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            if prev is None:
                out[w] = c
            else:
                s = prev + c
                if s:
                    out[w] = s
                else:
                    del out[w]
        return Element._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "Element":
        return self + (-_as_element(other))

    def __rsub__(self, other) -> "Element":
        return _as_element(other) - self

    def __mul__(self, other) -> "Element":
        if not isinstance(other, Element):
            c = as_scalar(other)
            if not c:
                return Element.zero()
            return Element._raw({w: v * c for w, v in self.terms.items()})
        out: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                prev = out.get(w)
                out[w] = c if prev is None else prev + c
        return Element._raw({w: c for w, c in out.items() if c})

    def __rmul__(self, other) -> "Element":
        return self * other  # scalars are central

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative powers are only defined for the D generators")
        result = Element.one()
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def tau(self) -> "Element":
        return tau(self)

    def max_word_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[w] == other.terms[w] for w in self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __repr__(self):
        return f"Element({self})"

    def __str__(self) -> str:
        return render_element(self)


def _as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    return Element.scalar(x)


def gen(g: Generator | str) -> Element:
    """Element for a generator or alias name (``"B1"``, ``"X"``, ``"Khat"``...)."""
    if isinstance(g, Generator):
        return Element.gen(g)
    return alias_expand(g)


def comm(a: Element, b: Element, p: ScalarLike = 1) -> Element:
    """The q-commutator ``[a, b]_p = ab - p ba``."""
    return a * b - as_scalar(p) * (b * a)


def _fmt_coeff_prefix(c: Scalar, joiner: str) -> tuple[str, str]:
    """Split a coefficient into (sign, text) for rendering ``c<joiner>thing``."""
    s = str(c)
    single = c.is_laurent() and len(c.num.items()) == 1 or (c.is_laurent() and c.num.is_zero())
    if single and s.startswith("-"):
        body = s[1:]
        return "-", ("" if body == "1" else body + joiner)
    if single:
        return "+", ("" if s == "1" else s + joiner)
    return "+", f"({s}){joiner}"


def render_element(el: Element) -> str:
    if not el.terms:
        return "0"
    parts = []
    for w in sorted(el.terms, key=lambda w: (len(w), [g.value for g in w])):
        c = el.terms[w]
        word = "*".join(g.value for g in w)
        sign, pre = _fmt_coeff_prefix(c, "*")
        if not word:
            text = pre[:-1] if pre else "1"
        else:
            text = pre + word
        parts.append((sign, text))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------------------
# aliases
# ---------------------------------------------------------------------------


def _build_aliases() -> dict[str, Element]:
    B0, B1, Bm = Element.gen(G.B0), Element.gen(G.B1), Element.gen(G.Bminus1)
    qi = q(-1)
    X = comm(B0, B1, qi)
    Y = comm(B0, Bm, qi)
    Z = comm(B1, Y, qi)
    W = comm(Bm, X, qi)
    K = Element.word(G.Dd, G.D1Inv)
    Kinv = Element.word(G.DdInv, G.D1)
    return {"X": X, "Y": Y, "Z": Z, "W": W, "Khat": K, "KhatInv": Kinv}


ALIASES: dict[str, Element] = _build_aliases()
_ALIAS_SYNONYMS = {"K": "Khat", "K^-1": "KhatInv", "Khat^-1": "KhatInv"}


def alias_expand(name: str) -> Element:
    """Expand X, Y, Z, W, Khat (K) or KhatInv (K^-1) into generator words."""
    key = _ALIAS_SYNONYMS.get(name, name)
    if key in ALIASES:
        return ALIASES[key]
    for g in Generator:
        if g.value == name or g.name == name:
            return Element.gen(g)
    raise KeyError(f"unknown alias {name!r}")


def khat_bracket(n: int = 0) -> Element:
    """``[Khat; n] = (q^n Khat - q^-n Khat^-1)/(q - q^-1)``."""
    inv = q_minus_qinv().inverse()
    return (q(n) * inv) * ALIASES["Khat"] - (q(-n) * inv) * ALIASES["KhatInv"]


def tau(el: Element) -> Element:
    """The algebra involution B_i -> B_{-i}, D-hat -> D-hat^{-1} (word order kept)."""
    swap = {
        G.Bminus1: G.B1,
        G.B1: G.Bminus1,
        G.B0: G.B0,
        G.Dd: G.DdInv,
        G.DdInv: G.Dd,
        G.D1: G.D1Inv,
        G.D1Inv: G.D1,
    }
    return Element._raw({tuple(swap[g] for g in w): c for w, c in el.terms.items()})


# ---------------------------------------------------------------------------
# the module P
# ---------------------------------------------------------------------------

Idx = tuple  # plain 8-tuple, used in the hot paths
PVec = dict  # Idx -> Scalar


def _qd(n: int) -> Scalar:
    return qint(n)


_INV_QQ = q_minus_qinv().inverse()


def _b1_terms(idx: Idx) -> list[tuple[Idx, Scalar]]:
    """Image of p_idx under B_1, one entry per summand of the closed formula."""
    f, y, e, x, b, z, kd, k1 = idx
    br = qint
    out: list[tuple[Idx, Scalar]] = []
    # line 1, first summand: q^{1-2y+2e+2x-f} [f]/(q-q^-1) p(f-1, kd+1, k1-1)
    if f >= 1:
        out.append(((f - 1, y, e, x, b, z, kd + 1, k1 - 1), q(1 - 2 * y + 2 * e + 2 * x - f) * br(f) * _INV_QQ))
        # line 2, first summand: -q^{f+2y-2e-2x-1} [f]/(q-q^-1) p(f-1, kd-1, k1+1)
        out.append(((f - 1, y, e, x, b, z, kd - 1, k1 + 1), -(q(f + 2 * y - 2 * e - 2 * x - 1) * br(f) * _INV_QQ)))
    # line 2, second summand: q^{-y} p(e+1)
    out.append(((f, y, e + 1, x, b, z, kd, k1), q(-y)))
    # line 3, first summand: -q^{2y-2e-2x-3} [y][y-1] p(f+1, y-2, kd-1, k1+1)
    if y >= 2:
        out.append(((f + 1, y - 2, e, x, b, z, kd - 1, k1 + 1), -(q(2 * y - 2 * e - 2 * x - 3) * br(y) * br(y - 1))))
    if y >= 1:
        # line 3, second summand: q^{-x-e} [y] p(y-1, z+1)
        out.append(((f, y - 1, e, x, b, z + 1, kd, k1), q(-x - e) * br(y)))
        q2y1 = q(2 * y) - 1
        # line 4: -q^{-3e-x-2}((q^{2y}-1)[y-1][x] + [2][y][x]) p(y-1, e+1, x-1, kd-1, k1+1)
        if x >= 1:
            c = q2y1 * br(y - 1) * br(x) + br(2) * br(y) * br(x)
            out.append(((f, y - 1, e + 1, x - 1, b, z, kd - 1, k1 + 1), -(q(-3 * e - x - 2) * c)))
        # line 5: -q^{-2e-2x-1}[e]([2][y] + (q^{2y}-1)[y-1]) p(y-1, e-1, x+1, kd-1, k1+1)
        if e >= 1:
            c = br(2) * br(y) + q2y1 * br(y - 1)
            out.append(((f, y - 1, e - 1, x + 1, b, z, kd - 1, k1 + 1), -(q(-2 * e - 2 * x - 1) * br(e) * c)))
        # line 6: (q^{-2e-x-1}(q^e-q^{-e})[2][y] - q^{-3e-x-1}(q^{2y}-1)[y-1]) p(y-1, b+1, kd-1, k1+1)
        c = q(-2 * e - x - 1) * (q(e) - q(-e)) * br(2) * br(y) - q(-3 * e - x - 1) * q2y1 * br(y - 1)
        out.append(((f, y - 1, e, x, b + 1, z, kd - 1, k1 + 1), c))
    return out


def _b0_terms(idx: Idx) -> list[tuple[Idx, Scalar]]:
    f, y, e, x, b, z, kd, k1 = idx
    out = [((f, y, e, x, b + 1, z, kd, k1), q(x + y - e - f))]
    if y >= 1:
        out.append(((f + 1, y - 1, e, x, b, z, kd, k1), q(y - f - 1) * qint(y)))
    if f >= 1:
        out.append(((f - 1, y + 1, e, x, b, z, kd, k1), qint(f)))
    if e >= 1:
        out.append(((f, y, e - 1, x + 1, b, z, kd, k1), q(y - f) * qint(e)))
    if x >= 1:
        out.append(((f, y, e + 1, x - 1, b, z, kd, k1), q(y - f - e + x - 1) * qint(x)))
    return out


@lru_cache(maxsize=None)
def _p_act_cached(g: Generator, idx: Idx) -> tuple[tuple[Idx, Scalar], ...]:
    f, y, e, x, b, z, kd, k1 = idx
    if g is G.Bminus1:
        terms = [((f + 1, y, e, x, b, z, kd, k1), ONE)]
    elif g is G.Dd:
        terms = [((f, y, e, x, b, z, kd + 1, k1), q(e + x - f - y))]
    elif g is G.DdInv:
        terms = [((f, y, e, x, b, z, kd - 1, k1), q(f + y - e - x))]
    elif g is G.D1:
        terms = [((f, y, e, x, b, z, kd, k1 + 1), q(f + y - e - x))]
    elif g is G.D1Inv:
        terms = [((f, y, e, x, b, z, kd, k1 - 1), q(e + x - f - y))]
    elif g is G.B0:
        terms = _b0_terms(idx)
    elif g is G.B1:
        terms = _b1_terms(idx)
    else:  # pragma: no cover
        raise ValueError(g)
    merged: dict[Idx, Scalar] = {}
    for k, c in terms:
        if not c:
            continue
        prev = merged.get(k)
        merged[k] = c if prev is None else prev + c
    return tuple((k, c) for k, c in merged.items() if c)


def p_act(g: Generator, idx: Iterable[int]) -> "PBWElement":
    """Image of the basis vector ``p_idx`` of P under a generator."""
    idx = tuple(idx)
    if len(idx) != 8:
        raise ValueError("PBW index needs eight entries")
    return PBWElement._raw(dict(_p_act_cached(g, idx)))


def _act_gen_vec(g: Generator, vec: PVec) -> PVec:
    out: PVec = {}
    get = out.get
    for idx, c in vec.items():
        for k, d in _p_act_cached(g, idx):
            v = c * d
            prev = get(k)
            out[k] = v if prev is None else prev + v
    return {k: v for k, v in out.items() if v}


def _act_word_vec(word: Word, vec: PVec) -> PVec:
    for g in reversed(word):
        if not vec:
            break
        vec = _act_gen_vec(g, vec)
    return vec


def _act_element_vec(el: Element, vec: PVec) -> PVec:
    out: PVec = {}
    for w, c in el.terms.items():
        part = _act_word_vec(w, vec)
        for k, v in part.items():
            v = c * v
            prev = out.get(k)
            out[k] = v if prev is None else prev + v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _alias_on_index(name: str, idx: Idx) -> tuple[tuple[Idx, Scalar], ...]:
    vec = _act_element_vec(ALIASES[name], {idx: ONE})
    return tuple(vec.items())


def _act_alias_vec(name: str, vec: PVec) -> PVec:
    out: PVec = {}
    for idx, c in vec.items():
        for k, d in _alias_on_index(name, idx):
            v = c * d
            prev = out.get(k)
            out[k] = v if prev is None else prev + v
    return {k: v for k, v in out.items() if v}


Actor = Union[Generator, str, Element]


def act(op: Actor, vec: "PBWElement | Mapping") -> "PBWElement":
    """Apply a generator, an alias name, or an Element to a vector of P."""
    v = dict(vec.coeffs if isinstance(vec, PBWElement) else {tuple(k): as_scalar(c) for k, c in vec.items()})
    if isinstance(op, Generator):
        return PBWElement._raw(_act_gen_vec(op, v))
    if isinstance(op, str):
        key = _ALIAS_SYNONYMS.get(op, op)
        if key in ALIASES:
            return PBWElement._raw(_act_alias_vec(key, v))
        return PBWElement._raw(_act_element_vec(alias_expand(op), v))
    return PBWElement._raw(_act_element_vec(op, v))


def act_sequence(ops: Iterable[Actor], vec: PVec) -> PVec:
    """Apply ``ops[0] ops[1] ... ops[-1]`` (rightmost first) to a raw P-vector."""
    for op in reversed(list(ops)):
        if not vec:
            return vec
        if isinstance(op, Generator):
            vec = _act_gen_vec(op, vec)
        elif isinstance(op, str) and _ALIAS_SYNONYMS.get(op, op) in ALIASES:
            vec = _act_alias_vec(_ALIAS_SYNONYMS.get(op, op), vec)
        else:
            vec = _act_element_vec(op if isinstance(op, Element) else alias_expand(op), vec)
    return vec


# ---------------------------------------------------------------------------
# PBW elements
# ---------------------------------------------------------------------------


class PBWElement:
    """Sparse PBW expansion ``{PBWIndex: Scalar}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        clean: dict[Idx, Scalar] = {}
        for k, c in (coeffs or {}).items():
            k = tuple(k)
            if len(k) != 8:
                raise ValueError("PBW index needs eight entries")
            if any(v < 0 for v in k[:6]):
                continue
            c = as_scalar(c)
            if c:
                clean[k] = clean.get(k, ZERO) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, d: dict) -> "PBWElement":
        obj = object.__new__(cls)
        obj.coeffs = d
        return obj

    @classmethod
    def monomial(cls, c: ScalarLike = 1, **fields: int) -> "PBWElement":
        idx = PBWIndex(**fields)
        return cls({tuple(idx): c})

    @classmethod
    def unit(cls) -> "PBWElement":
        return cls._raw({tuple(P0): ONE})

    def items(self) -> Iterator[tuple[PBWIndex, Scalar]]:
        for k, c in self.coeffs.items():
            yield PBWIndex(*k), c

    def __getitem__(self, idx) -> Scalar:
        return self.coeffs.get(tuple(idx), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[PBWIndex]:
        return [PBWIndex(*k) for k in sorted(self.coeffs)]

    def __add__(self, other: "PBWElement") -> "PBWElement":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                s = prev + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return PBWElement._raw(out)

    def __neg__(self) -> "PBWElement":
        return PBWElement._raw({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "PBWElement":
        c = as_scalar(c)
        if not c:
            return PBWElement._raw({})
        return PBWElement._raw({k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PBWElement):
            return NotImplemented
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(self.coeffs[k] == other.coeffs[k] for k in self.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs))

    def degrees(self) -> set[int]:
        return {degree(k) for k in self.coeffs}

    def to_element(self) -> Element:
        """An Element (generator words) whose normal form is this PBW element."""
        out = Element.zero()
        for k, c in self.coeffs.items():
            out = out + c * monomial_word(k)
        return out

    def __repr__(self):
        return f"PBWElement({self})"

    def __str__(self) -> str:
        return render_pbw(self)


def render_index(idx: Iterable[int]) -> str:
    idx = tuple(idx)
    fields = [f"{name}={v}" for name, v in zip(_FIELDS, idx) if v]
    return f"m({','.join(fields)})" if fields else "1"


def render_pbw(el: PBWElement) -> str:
    if not el.coeffs:
        return "0"
    parts = []
    for k in sorted(el.coeffs, reverse=True):
        c = el.coeffs[k]
        mono = render_index(k)
        sign, pre = _fmt_coeff_prefix(c, "·")
        if mono == "1":
            text = pre[:-1] if pre else "1"
        else:
            text = pre + mono
        parts.append((sign, text))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def monomial_word(idx: Iterable[int]) -> Element:
    """The Element B_{-1}^f Y^y B_1^e X^x B_0^b Z^z Dd^kd D1^k1 (aliases expanded)."""
    f, y, e, x, b, z, kd, k1 = tuple(idx)
    A = ALIASES
    out = Element.gen(G.Bminus1) ** f
    out = out * A["Y"] ** y * Element.gen(G.B1) ** e * A["X"] ** x
    out = out * Element.gen(G.B0) ** b * A["Z"] ** z
    out = out * (Element.gen(G.Dd) ** kd if kd >= 0 else Element.gen(G.DdInv) ** (-kd))
    out = out * (Element.gen(G.D1) ** k1 if k1 >= 0 else Element.gen(G.D1Inv) ** (-k1))
    return out


def monomial_ops(idx: Iterable[int]) -> list[Actor]:
    """The same monomial as a list of operators (aliases kept unexpanded)."""
    f, y, e, x, b, z, kd, k1 = tuple(idx)
    ops: list[Actor] = []
    ops += [G.Bminus1] * f + ["Y"] * y + [G.B1] * e + ["X"] * x + [G.B0] * b + ["Z"] * z
    ops += [G.Dd] * kd if kd >= 0 else [G.DdInv] * (-kd)
    ops += [G.D1] * k1 if k1 >= 0 else [G.D1Inv] * (-k1)
    return ops


@lru_cache(maxsize=4096)
def _word_nf(word: Word) -> tuple[tuple[Idx, Scalar], ...]:
    return tuple(_act_word_vec(word, {tuple(P0): ONE}).items())


def normal_form(el: Element | Generator | str) -> PBWElement:
    """PBW expansion of an algebra element, computed as ``el . p_0``."""
    if not isinstance(el, Element):
        el = gen(el)
    out: dict[Idx, Scalar] = {}
    for w, c in el.terms.items():
        for k, v in _word_nf(w):
            v = c * v
            prev = out.get(k)
            out[k] = v if prev is None else prev + v
    return PBWElement._raw({k: v for k, v in out.items() if v})


def multiply(a: PBWElement, b: PBWElement) -> PBWElement:
    """Normal form of the product ``a * b``.

    Each monomial of ``a`` is re-expressed as an operator sequence and applied
    to the P-vector of ``b`` (which equals ``b . p_0``).
    """
    out = PBWElement._raw({})
    for k, c in a.coeffs.items():
        part = act_sequence(monomial_ops(k), dict(b.coeffs))
        out = out + PBWElement._raw(part).scale(c)
    return out


def check_identity(el: Element) -> bool:
    """True iff the element has zero normal form."""
    return normal_form(el).is_zero()
