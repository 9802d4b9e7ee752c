"""Tensor powers of the natural representation V and type-B Hecke duality.

V has basis ``e_{-1}, e_{-d}, e_d, e_1`` (``d`` standing for the diamond
index), stored internally as the integers 0, 1, 2, 3 in path order of the
quiver ``-1 -> -d -> d -> 1`` whose arrows carry the labels 1, 0, -1.

The coideal acts on a tensor product ``M (x) V`` through the right coideal
coproduct::

    D(B1)  = B1 (x) K1^-1  + 1 (x) B1  + (Khat - 1)    (x) E_{-1} K1^-1
    D(B-1) = B-1 (x) K-1^-1 + 1 (x) B-1 + (Khat^-1 - 1) (x) E_1 K-1^-1
    D(B0)  = B0 (x) K0^-1  + 1 (x) B0

with the D-hats grouplike.  Only B's and Khat are needed on the left factor,
so the same rule drives both ``V^(x)d`` (left factor ``V^(x)(d-1)``,
recursively) and ``L (x) V`` for an abstract finite-dimensional module L.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .coideal import ALIASES, _ALIAS_SYNONYMS, Element, Generator, alias_expand
from .qfield import ONE, ZERO, Scalar, ScalarLike, alpha_plus, as_scalar, q, qint

G = Generator

__all__ = [
    "LABELS",
    "TensorVector",
    "Bipartition",
    "ParityPath",
    "HeckeWord",
    "WeightFailure",
    "TensorWeight",
    "coideal_act",
    "act_element",
    "hecke_act",
    "jucys_murphy",
    "jm_word",
    "x_vec",
    "y_vec",
    "eta_vec",
    "e_vec",
    "lambda_wedge",
    "special_filling",
    "omega",
    "omega_parts",
    "is_maximal",
    "eigenvalue",
    "weight_of",
    "expected_weight",
    "expected_jm_spectrum",
    "jm_spectrum",
    "jm_spectrum_check",
    "bipartitions",
    "standard_bitableaux",
    "specht_dim",
    "decompose",
    "h_m_coefficients",
    "h_m_element",
    "h_m_check",
    "LTensorV",
    "clebsch_gordan",
    "easy_irrep_check",
    "omega_recursion_check",
]

LABELS = ("-1", "-d", "d", "1")
_LABEL_INDEX = {s: k for k, s in enumerate(LABELS)}
_LABEL_INDEX.update({"-dd": 1, "dd": 2, "-♦": 1, "♦": 2})

# edge label -> (source sigma(i), target tau(i)) in path order
_EDGES = {1: (0, 1), 0: (1, 2), -1: (2, 3)}
_DD_EXP = (0, 1, 1, 0)  # D-hat diamond = D_d D_{-d}
_D1_EXP = (1, 0, 0, 1)  # D-hat one = D_1 D_{-1}
_KHAT_EXP = tuple(a - b for a, b in zip(_DD_EXP, _D1_EXP))


@lru_cache(maxsize=None)
def _qp(n: int) -> Scalar:
    return q(n)


Key = tuple


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


class TensorVector:
    """Sparse vector in ``V^(x)d``: index tuples over ``{0,1,2,3}`` -> Scalar."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Mapping[Key, ScalarLike] | None = None):
        self.d = d
        out: dict[Key, Scalar] = {}
        for k, c in (coeffs or {}).items():
            k = tuple(k)
            if len(k) != d:
                raise ValueError(f"index {k} does not have length {d}")
            c = as_scalar(c)
            if c:
                out[k] = c
        self.coeffs = out

    @classmethod
    def _raw(cls, d: int, coeffs: dict) -> "TensorVector":
        v = object.__new__(cls)
        v.d = d
        v.coeffs = coeffs
        return v

    @classmethod
    def unit(cls) -> "TensorVector":
        """The vector 1 in ``V^(x)0``."""
        return cls._raw(0, {(): ONE})

    @classmethod
    def basis(cls, *labels: Union[int, str]) -> "TensorVector":
        idx = tuple(_LABEL_INDEX[x] if isinstance(x, str) else x for x in labels)
        return cls._raw(len(idx), {idx: ONE})

    @classmethod
    def all_basis(cls, d: int) -> Iterator["TensorVector"]:
        for t in itertools.product(range(4), repeat=d):
            yield cls._raw(d, {t: ONE})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "TensorVector") -> None:
        if self.d != other.d:
            raise ValueError(f"tensor degrees differ: {self.d} vs {other.d}")

    def __add__(self, other: "TensorVector") -> "TensorVector":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorVector._raw(self.d, out)

    def __neg__(self) -> "TensorVector":
        return TensorVector._raw(self.d, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "TensorVector":
        c = as_scalar(c)
        if not c:
            return TensorVector._raw(self.d, {})
        return TensorVector._raw(self.d, {k: c * x for k, x in self.coeffs.items()})

    def __rmul__(self, c: ScalarLike) -> "TensorVector":
        return self.scale(c)

    def tensor(self, other: "TensorVector") -> "TensorVector":
        out = {}
        for a, c in self.coeffs.items():
            for b, e in other.coeffs.items():
                out[a + b] = c * e
        return TensorVector._raw(self.d + other.d, out)

    __matmul__ = tensor

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.d == other.d and self.coeffs.keys() == other.coeffs.keys() and all(
            c == other.coeffs[k] for k, c in self.coeffs.items()
        )

    def __hash__(self):
        return hash((self.d, frozenset(self.coeffs)))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"TensorVector(d={self.d}, {self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            parts.append(f"({self.coeffs[k]})*[{','.join(LABELS[i] for i in k)}]")
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {",".join(LABELS[i] for i in k): str(self.coeffs[k]) for k in sorted(self.coeffs)}


def _accumulate(out: dict, k, c: Scalar) -> None:
    s = out.get(k)
    s = c if s is None else s + c
    if s:
        out[k] = s
    else:
        out.pop(k, None)


# ---------------------------------------------------------------------------
# the natural representation
# ---------------------------------------------------------------------------


def _v_E(i: int, k: int) -> int | None:
    src, tgt = _EDGES[i]
    return src if k == tgt else None


def _v_F(i: int, k: int) -> int | None:
    src, tgt = _EDGES[i]
    return tgt if k == src else None


def _v_K_exp(i: int, k: int) -> int:
    src, tgt = _EDGES[i]
    return (k == src) - (k == tgt)


@lru_cache(maxsize=None)
def _v_single(op: str, k: int) -> tuple[tuple[int, Scalar], ...]:
    """Action of B's, their coproduct corrections and grouplikes on one factor."""
    if op == "B1":  # F_1 + E_{-1} K_1^-1
        terms = [(_v_F(1, k), ONE), (_v_E(-1, k), _qp(-_v_K_exp(1, k)))]
    elif op == "B-1":  # F_{-1} + E_1 K_{-1}^-1
        terms = [(_v_F(-1, k), ONE), (_v_E(1, k), _qp(-_v_K_exp(-1, k)))]
    elif op == "B0":  # F_0 + q^-1 E_0 K_0^-1
        terms = [(_v_F(0, k), ONE), (_v_E(0, k), _qp(-1 - _v_K_exp(0, k)))]
    elif op == "C1":  # E_{-1} K_1^-1
        terms = [(_v_E(-1, k), _qp(-_v_K_exp(1, k)))]
    elif op == "C-1":  # E_1 K_{-1}^-1
        terms = [(_v_E(1, k), _qp(-_v_K_exp(-1, k)))]
    elif op in ("K1inv", "K-1inv", "K0inv"):
        i = {"K1inv": 1, "K-1inv": -1, "K0inv": 0}[op]
        terms = [(k, _qp(-_v_K_exp(i, k)))]
    else:
        terms = [(k, _qp(_GROUPLIKE_EXP[op][k]))]
    return tuple((t, c) for t, c in terms if t is not None)


_GROUPLIKE_EXP = {
    "Dd": _DD_EXP,
    "Dd^-1": tuple(-e for e in _DD_EXP),
    "D1": _D1_EXP,
    "D1^-1": tuple(-e for e in _D1_EXP),
    "Khat": _KHAT_EXP,
    "KhatInv": tuple(-e for e in _KHAT_EXP),
}

_B_RULES = {
    # generator: (right grouplike for g (x) ., correction op on V, Khat power)
    "B1": ("K1inv", "C1", 1),
    "B-1": ("K-1inv", "C-1", -1),
    "B0": ("K0inv", None, 0),
}

LeftAct = Callable[[str, object], Iterable[tuple[object, Scalar]]]
LeftKhat = Callable[[object], Scalar]


def coproduct_step(op: str, left_act: LeftAct, left_khat: LeftKhat, key: tuple) -> dict:
    """Act with a generator on the basis tensor ``left_key (x) e_k`` of ``M (x) V``.

    ``key`` is ``(left_key, k)``; ``left_act(op, left_key)`` gives the image of a
    basis vector of M and ``left_khat(left_key)`` the Khat eigenvalue there.
    """
    lk, k = key
    out: dict = {}
    if op in _GROUPLIKE_EXP:
        c0 = _qp(_GROUPLIKE_EXP[op][k])
        for l2, c in left_act(op, lk):
            _accumulate(out, (l2, k), c * c0)
        return out
    right_g, corr, kpow = _B_RULES[op]
    ((_, gk),) = _v_single(right_g, k)
    for l2, c in left_act(op, lk):
        _accumulate(out, (l2, k), c * gk)
    for k2, c in _v_single(op, k):
        _accumulate(out, (lk, k2), c)
    if corr is not None:
        kh = left_khat(lk)
        f = (kh if kpow > 0 else kh.inverse()) - ONE
        if f:
            for k2, c in _v_single(corr, k):
                _accumulate(out, (lk, k2), f * c)
    return out


def _normalise_op(g: Union[Generator, str]) -> str:
    if isinstance(g, Generator):
        return g.value
    name = _ALIAS_SYNONYMS.get(g, g)
    if name in ("Khat", "KhatInv"):
        return name
    for gen in Generator:
        if name in (gen.value, gen.name):
            return gen.value
    return name


@lru_cache(maxsize=None)
def _tensor_basis_act(op: str, t: tuple) -> tuple[tuple[tuple, Scalar], ...]:
    if not t:
        # trivial module: B's act by zero, grouplikes by one
        return (((), ONE),) if op in _GROUPLIKE_EXP else ()
    res = coproduct_step(op, _tensor_left_act, _tensor_khat, (t[:-1], t[-1]))
    return tuple(((lk + (k,)), c) for (lk, k), c in res.items())


def _tensor_left_act(op: str, t: tuple):
    return _tensor_basis_act(op, t)


@lru_cache(maxsize=None)
def _tensor_khat(t: tuple) -> Scalar:
    return _qp(sum(_KHAT_EXP[k] for k in t))


def _act_gen(op: str, v: TensorVector) -> TensorVector:
    out: dict = {}
    for t, c in v.coeffs.items():
        for t2, e in _tensor_basis_act(op, t):
            _accumulate(out, t2, c * e)
    return TensorVector._raw(v.d, out)


def act_element(el: Element, v: TensorVector) -> TensorVector:
    """Act with an algebra element (a combination of generator words)."""
    out = TensorVector._raw(v.d, {})
    cache: dict[tuple, TensorVector] = {(): v}

    def word_image(w: tuple) -> TensorVector:
        # rightmost letter acts first; share suffixes between words
        if w in cache:
            return cache[w]
        img = _act_gen(w[0].value, word_image(w[1:]))
        cache[w] = img
        return img

    for w, c in el.terms.items():
        out = out + word_image(w).scale(c)
    return out


def coideal_act(g: Union[Generator, str, Element], v: TensorVector) -> TensorVector:
    """Action of a generator, alias (X, Y, Z, W, K, K^-1) or Element on ``v``."""
    if isinstance(g, Element):
        return act_element(g, v)
    op = _normalise_op(g)
    if op in _B_RULES or op in _GROUPLIKE_EXP:
        return _act_gen(op, v)
    return act_element(alias_expand(op), v)


def eigenvalue(v: TensorVector, image: TensorVector) -> Scalar | None:
    """The scalar c with ``image = c v``, or None."""
    if v.is_zero():
        raise ValueError("zero vector has no eigenvalue")
    k = next(iter(v.coeffs))
    c = image.coeffs.get(k, ZERO) / v.coeffs[k]
    return c if image == v.scale(c) else None


# ---------------------------------------------------------------------------
# Hecke algebra
# ---------------------------------------------------------------------------


class HeckeWord:
    """Linear combination of words in ``H_0, ..., H_{d-1}`` (leftmost acts last)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], ScalarLike] | None = None):
        self.terms: dict[tuple[int, ...], Scalar] = {}
        for w, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self.terms[tuple(w)] = self.terms.get(tuple(w), ZERO) + c

    @classmethod
    def one(cls) -> "HeckeWord":
        return cls({(): ONE})

    @classmethod
    def gen(cls, i: int) -> "HeckeWord":
        return cls({(i,): ONE})

    @classmethod
    def word(cls, *letters: int) -> "HeckeWord":
        return cls({tuple(letters): ONE})

    def __add__(self, other: "HeckeWord") -> "HeckeWord":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeWord(out)

    def __neg__(self) -> "HeckeWord":
        return HeckeWord({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeWord") -> "HeckeWord":
        return self + (-other)

    def __mul__(self, other: Union["HeckeWord", ScalarLike]) -> "HeckeWord":
        if not isinstance(other, HeckeWord):
            return HeckeWord({w: c * as_scalar(other) for w, c in self.terms.items()})
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out[w1 + w2] = out.get(w1 + w2, ZERO) + c1 * c2
        return HeckeWord(out)

    def __rmul__(self, c: ScalarLike) -> "HeckeWord":
        return self * c

    def max_letter(self) -> int:
        return max((max(w) for w in self.terms if w), default=-1)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            word = "*".join(f"H{i}" for i in w) or "1"
            parts.append(f"({self.terms[w]})*{word}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _hecke_basis(i: int, t: tuple) -> tuple[tuple[tuple, Scalar], ...]:
    if i == 0:
        return (((3 - t[0],) + t[1:], ONE),)
    a, b = t[i - 1], t[i]
    if a == b:
        return ((t, _qp(-1)),)
    swapped = t[: i - 1] + (b, a) + t[i + 1 :]
    if b < a:  # there is a path from e_b to e_a
        return ((swapped, ONE), (t, _qp(-1) - _qp(1)))
    return ((swapped, ONE),)


def _hecke_letter(i: int, v: TensorVector) -> TensorVector:
    if not 0 <= i < max(v.d, 1) or (i > 0 and i >= v.d):
        raise ValueError(f"Hecke letter H{i} out of range for d={v.d}")
    out: dict = {}
    if i == 0:
        for t, c in v.coeffs.items():
            out[(3 - t[0],) + t[1:]] = c
        return TensorVector._raw(v.d, out)
    for t, c in v.coeffs.items():
        a, b = t[i - 1], t[i]
        if a == b:
            _accumulate(out, t, c.shift_q(-1))
            continue
        _accumulate(out, t[: i - 1] + (b, a) + t[i + 1 :], c)
        if b < a:  # there is a path from e_b to e_a
            _accumulate(out, t, c.shift_q(-1) - c.shift_q(1))
    return TensorVector._raw(v.d, out)


def hecke_act(w: Union[HeckeWord, int, Sequence[int]], v: TensorVector) -> TensorVector:
    """Act with a Hecke word, a single letter, or a letter sequence (rightmost first)."""
    if isinstance(w, int):
        w = HeckeWord.gen(w)
    elif not isinstance(w, HeckeWord):
        w = HeckeWord.word(*w)
    if w.max_letter() >= max(v.d, 1) or (w.max_letter() >= 0 and v.d == 0):
        raise ValueError(f"Hecke letter H{w.max_letter()} out of range for d={v.d}")
    out = TensorVector._raw(v.d, {})
    for word, c in w.terms.items():
        img = v
        for i in reversed(word):
            img = _hecke_letter(i, img)
        out = out + img.scale(c)
    return out


def jm_word(i: int) -> tuple[int, ...]:
    """Letters of ``J_i = H_{i-1} ... H_1 H_0 H_1 ... H_{i-1}``."""
    if i < 1:
        raise ValueError("Jucys-Murphy index starts at 1")
    return tuple(range(i - 1, 0, -1)) + (0,) + tuple(range(1, i))


def jucys_murphy(i: int, v: TensorVector) -> TensorVector:
    if not 1 <= i <= v.d:
        raise ValueError(f"J_{i} out of range for d={v.d}")
    img = v
    for letter in reversed(jm_word(i)):
        img = _hecke_letter(letter, img)
    return img


# ---------------------------------------------------------------------------
# funny vectors and wedges
# ---------------------------------------------------------------------------


def _sgn(sign: Union[str, int]) -> int:
    if sign in ("+", 1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError(f"bad sign {sign!r}")


def e_vec(label: Union[int, str]) -> TensorVector:
    return TensorVector.basis(label)


def x_vec(sign: Union[str, int], n: int) -> TensorVector:
    """``x^+-_n = e_{-d} +- q^n e_d``."""
    return TensorVector._raw(1, {(1,): ONE, (2,): _qp(n) * _sgn(sign)})


def y_vec(sign: Union[str, int], n: int) -> TensorVector:
    """``y^+-_n = e_{-1} +- q^n e_1``."""
    return TensorVector._raw(1, {(0,): ONE, (3,): _qp(n) * _sgn(sign)})


def eta_vec(sign: Union[str, int], n: int) -> TensorVector:
    """``eta^+-_n = q^-1 y_n (x) x_n - x_n (x) y_{n-2}``."""
    s = _sgn(sign)
    return y_vec(s, n).tensor(x_vec(s, n)).scale(_qp(-1)) - x_vec(s, n).tensor(y_vec(s, n - 2))


@dataclass(frozen=True)
class ParityPath:
    """Column additions ``+`` (first component) or ``-`` (second component)."""

    steps: tuple[str, ...]

    def __post_init__(self):
        if any(s not in "+-" or len(s) != 1 for s in self.steps):
            raise ValueError(f"invalid parity path {self.steps!r}")

    @classmethod
    def parse(cls, text: str) -> "ParityPath":
        return cls(tuple(text))

    @classmethod
    def special(cls, s: int, t: int) -> "ParityPath":
        """The special filling of ``((s,s),(t,t))``: all first-component columns first."""
        return cls(("+",) * s + ("-",) * t)

    @property
    def shape(self) -> tuple[int, int]:
        return self.steps.count("+"), self.steps.count("-")

    def bitableau(self) -> tuple[list[list[int]], list[list[int]]]:
        """Rows of (S, T); column j added at step k holds ``2k+1, 2k+2``."""
        S: list[list[int]] = [[], []]
        T: list[list[int]] = [[], []]
        for k, s in enumerate(self.steps):
            comp = S if s == "+" else T
            comp[0].append(2 * k + 1)
            comp[1].append(2 * k + 2)
        return S, T

    def __str__(self) -> str:
        return "".join(self.steps)


def lambda_wedge(path: Union[ParityPath, str, Sequence[str]]) -> TensorVector:
    """The quantum wedge along a path: each step ``+`` from ``(s,t)`` columns adds
    ``eta^+_{s-t}`` and each step ``-`` adds ``eta^-_{t-s}``."""
    v = TensorVector.unit()
    for f in wedge_factors(path):
        v = v.tensor(f)
    return v


@dataclass(frozen=True)
class Bipartition:
    lam: tuple[int, int]
    mu: tuple[int, int]

    def __post_init__(self):
        for p in (self.lam, self.mu):
            if len(p) != 2 or p[0] < p[1] or p[1] < 0:
                raise ValueError(f"not a two-row partition: {p}")

    @classmethod
    def of(cls, lam: Sequence[int], mu: Sequence[int]) -> "Bipartition":
        lam, mu = tuple(lam) + (0, 0), tuple(mu) + (0, 0)
        if len([x for x in lam if x]) > 2 or len([x for x in mu if x]) > 2:
            raise ValueError("not a two-row bipartition")
        return cls(lam[:2], mu[:2])

    @staticmethod
    def is_valid(lam: Sequence[int], mu: Sequence[int]) -> bool:
        return all(len(p) == 2 and p[0] >= p[1] >= 0 for p in (lam, mu))

    @property
    def size(self) -> int:
        return sum(self.lam) + sum(self.mu)

    @property
    def kappa(self) -> int:
        return self.lam[0] + self.mu[0] - self.lam[1] - self.mu[1]

    @property
    def n(self) -> int:
        return self.lam[0] - self.mu[0]

    @property
    def dim_l(self) -> int:
        return (self.lam[0] - self.lam[1] + 1) * (self.mu[0] - self.mu[1] + 1)

    def __str__(self) -> str:
        def part(p):
            nz = [str(x) for x in p if x]
            return "(" + ",".join(nz) + ")" if nz else "()"

        return f"({part(self.lam)},{part(self.mu)})"

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu)}


def special_filling(bp: Bipartition) -> list[tuple[int, int, int]]:
    """``(component, row, column)`` of the box holding 1, 2, ..., d.

    The rectangular core is filled column by column (first component first),
    then the first-row overhang of lambda and then of mu left to right.
    """
    boxes: list[tuple[int, int, int]] = []
    for comp, p in ((0, bp.lam), (1, bp.mu)):
        for c in range(p[1]):
            boxes += [(comp, 0, c), (comp, 1, c)]
    for comp, p in ((0, bp.lam), (1, bp.mu)):
        for c in range(p[1], p[0]):
            boxes.append((comp, 0, c))
    return boxes


def omega_parts(bp: Bipartition) -> tuple[ParityPath, list[tuple[str, int]]]:
    """The wedge path and the trailing ``x`` factors of Omega(bp).

    There are s = l1 - l2 factors ``x^+`` with indices r, ..., r+s-1 and
    t = m1 - m2 factors ``x^-`` with indices -r-s, ..., -r-s+t-1, r = l2 - m2.
    """
    s, t, r = bp.lam[0] - bp.lam[1], bp.mu[0] - bp.mu[1], bp.lam[1] - bp.mu[1]
    path = ParityPath.special(bp.lam[1], bp.mu[1])
    tail = [("+", r + j) for j in range(s)] + [("-", -r - s + j) for j in range(t)]
    return path, tail


def omega(bp: Bipartition) -> TensorVector:
    v = TensorVector.unit()
    for f in omega_factors(bp):
        v = v.tensor(f)
    return v


# ---------------------------------------------------------------------------
# weights, maximality, spectra
# ---------------------------------------------------------------------------


def is_maximal(v: TensorVector) -> bool:
    """Killed by B1 and X (and nonzero)."""
    if v.is_zero():
        return False
    return coideal_act("B1", v).is_zero() and coideal_act("X", v).is_zero()


@dataclass(frozen=True)
class TensorWeight:
    dd: Scalar
    d1: Scalar
    b0: Scalar
    z: Scalar
    w: Scalar

    def values(self) -> tuple:
        return (self.dd, self.d1, self.b0, self.z, self.w)

    def to_dict(self) -> dict:
        return {"Dd": str(self.dd), "D1": str(self.d1), "B0": str(self.b0), "Z": str(self.z), "W": str(self.w)}


@dataclass(frozen=True)
class WeightFailure:
    """Returned by :func:`weight_of` when ``v`` is not a joint eigenvector."""

    operator: str

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"error": "not a weight vector", "operator": self.operator}


def weight_of(v: TensorVector) -> Union[TensorWeight, WeightFailure]:
    vals = []
    for name in ("Dd", "D1", "B0", "Z", "W"):
        c = eigenvalue(v, coideal_act(name, v))
        if c is None:
            return WeightFailure(name)
        vals.append(c)
    return TensorWeight(*vals)


def expected_weight(bp: Bipartition) -> TensorWeight:
    """Closed-form weight of the summand labelled by ``bp``."""
    k, n = bp.kappa, bp.n
    r = bp.lam[1] - bp.mu[1]
    return TensorWeight(
        _qp(bp.lam[0] + bp.mu[0]),
        _qp(bp.lam[1] + bp.mu[1]),
        qint(n),
        qint(r) - _qp(-k) * qint(n),
        _qp(-2) * qint(r) - _qp(k - 2) * qint(n),
    )


def expected_jm_spectrum(bp: Bipartition) -> list[Scalar]:
    """``+-q^(-2 cont(i))`` along the special filling (sign by component)."""
    out = []
    for comp, row, col in special_filling(bp):
        c = _qp(-2 * (col - row))
        out.append(c if comp == 0 else -c)
    return out


def jm_spectrum(v: Union[TensorVector, Sequence[TensorVector]]) -> list[Scalar | None]:
    """Eigenvalues of ``J_1, ..., J_d`` (None where not an eigenvector).

    ``v`` may be given as a list of tensor factors.  Since ``J_i`` only touches
    the first ``i`` positions, ``J_i`` is then applied to the shortest prefix
    product covering them: for ``v = P (x) R`` with ``R`` nonzero, ``v`` is a
    ``J_i``-eigenvector exactly when ``P`` is, with the same eigenvalue.
    """
    if isinstance(v, TensorVector):
        return [eigenvalue(v, jucys_murphy(i, v)) for i in range(1, v.d + 1)]
    factors = list(v)
    if any(f.is_zero() for f in factors):
        raise ValueError("zero vector has no eigenvalue")
    out: list[Scalar | None] = []
    prefix = TensorVector.unit()
    for f in factors:
        prefix = prefix.tensor(f)
        for i in range(len(out) + 1, prefix.d + 1):
            out.append(eigenvalue(prefix, jucys_murphy(i, prefix)))
    return out


def wedge_factors(path: Union["ParityPath", str, Sequence[str]]) -> list[TensorVector]:
    """The ``eta`` factors of :func:`lambda_wedge`, in order."""
    if not isinstance(path, ParityPath):
        path = ParityPath(tuple(path))
    out = []
    s = t = 0
    for step in path.steps:
        if step == "+":
            out.append(eta_vec(1, s - t))
            s += 1
        else:
            out.append(eta_vec(-1, t - s))
            t += 1
    return out


def omega_factors(bp: "Bipartition") -> list[TensorVector]:
    path, tail = omega_parts(bp)
    return wedge_factors(path) + [x_vec(sign, n) for sign, n in tail]


__all__ += ["wedge_factors", "omega_factors"]


def path_jm_spectrum(path: ParityPath) -> list[Scalar]:
    """Content-rule prediction for the wedge of a path."""
    S, T = path.bitableau()
    pos = {}
    for comp, rows in ((0, S), (1, T)):
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                pos[entry] = (comp, r, c)
    out = []
    for i in range(1, 2 * len(path.steps) + 1):
        comp, r, c = pos[i]
        e = _qp(-2 * (c - r))
        out.append(e if comp == 0 else -e)
    return out


__all__.append("path_jm_spectrum")


def bipartitions(d: int) -> list[Bipartition]:
    """Two-row bipartitions of ``d`` in a fixed order."""
    out = []
    for a in range(d, -1, -1):
        b = d - a
        for l2 in range(a // 2 + 1):
            for m2 in range(b // 2 + 1):
                out.append(Bipartition((a - l2, l2), (b - m2, m2)))
    return out


def _standard_count(shape: tuple[tuple[int, ...], tuple[int, ...]]) -> int:
    # count by removing the largest entry, which must sit in a removable corner
    @lru_cache(maxsize=None)
    def rec(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
        if sum(lam) + sum(mu) == 0:
            return 1
        total = 0
        for which in (0, 1):
            p = lam if which == 0 else mu
            for r in range(len(p)):
                if p[r] and (r + 1 == len(p) or p[r + 1] < p[r]):
                    np = p[:r] + (p[r] - 1,) + p[r + 1 :]
                    total += rec(np, mu) if which == 0 else rec(lam, np)
        return total

    return rec(*shape)


def standard_bitableaux(bp: Bipartition) -> list[tuple[list[list[int]], list[list[int]]]]:
    """All standard bitableaux of shape ``bp`` (rows of each component)."""
    d = bp.size
    shapes = (bp.lam, bp.mu)
    out = []
    # assign each number to a (component, row), filling rows left to right
    def rec(i, fill):
        if i > d:
            out.append(([list(r) for r in fill[0]], [list(r) for r in fill[1]]))
            return
        for comp in (0, 1):
            for r in (0, 1):
                row = fill[comp][r]
                if len(row) >= shapes[comp][r]:
                    continue
                if r == 1 and len(fill[comp][0]) <= len(row):
                    continue
                row.append(i)
                rec(i + 1, fill)
                row.pop()

    rec(1, [[[], []], [[], []]])
    return out


def specht_dim(bp: Bipartition) -> int:
    return len(standard_bitableaux(bp))


@dataclass
class Summand:
    bp: Bipartition
    dim_l: int
    dim_specht: int
    weight: Union[TensorWeight, WeightFailure, None] = None
    jm: list | None = None
    maximal: bool | None = None
    weight_ok: bool | None = None
    jm_ok: bool | None = None

    def to_dict(self) -> dict:
        out = {**self.bp.to_dict(), "dimL": self.dim_l, "dimSpecht": self.dim_specht}
        if self.weight is not None:
            out["weight"] = self.weight.to_dict()
            out["weight_ok"] = self.weight_ok
        if self.jm is not None:
            out["jm_spectrum"] = [None if x is None else str(x) for x in self.jm]
            out["jm_ok"] = self.jm_ok
        if self.maximal is not None:
            out["maximal"] = self.maximal
        return out


__all__.append("Summand")


def decompose(d: int, certify: bool = True) -> list[Summand]:
    """Summands of ``V^(x)d`` with certificates for the representative vectors."""
    if d < 0:
        raise ValueError("d must be non-negative")
    out = []
    for bp in bipartitions(d):
        s = Summand(bp, bp.dim_l, specht_dim(bp))
        if certify:
            v = omega(bp)
            s.maximal = is_maximal(v)
            s.weight = weight_of(v)
            s.weight_ok = isinstance(s.weight, TensorWeight) and all(
                a == b for a, b in zip(s.weight.values(), expected_weight(bp).values())
            )
            s.jm = jm_spectrum(omega_factors(bp))
            exp = expected_jm_spectrum(bp)
            s.jm_ok = all(a is not None and a == b for a, b in zip(s.jm, exp))
        out.append(s)
    return out


@dataclass
class SpectrumReport:
    bp: Bipartition
    measured: list
    expected: list
    matches: bool
    separated: bool

    def to_dict(self) -> dict:
        return {
            **self.bp.to_dict(),
            "measured": [None if x is None else str(x) for x in self.measured],
            "expected": [str(x) for x in self.expected],
            "matches": self.matches,
            "separated": self.separated,
        }


__all__.append("SpectrumReport")


def jm_spectrum_check(bp: Bipartition) -> SpectrumReport:
    """Compare the JM spectrum of Omega(bp) with the content rule, and check that
    no other bipartition of the same size has the same predicted spectrum."""
    measured = jm_spectrum(omega_factors(bp))
    expected = expected_jm_spectrum(bp)
    matches = all(a is not None and a == b for a, b in zip(measured, expected))
    separated = all(
        not all(a == b for a, b in zip(expected, expected_jm_spectrum(o)))
        for o in bipartitions(bp.size)
        if o != bp
    )
    return SpectrumReport(bp, measured, expected, matches, separated)


# ---------------------------------------------------------------------------
# the elements h_m
# ---------------------------------------------------------------------------


def h_m_coefficients(m: int) -> dict[str, Scalar]:
    den = (_qp(4) + _qp(2)) * _qp(2 * m) + _qp(4 * m + 6) + ONE
    inv = den.inverse()
    s = _qp(4 * m) + _qp(2 * m)
    return {
        "a": (_qp(6) - _qp(4) - _qp(2) + ONE) * _qp(4 * m) * inv,
        "b": (_qp(3) - _qp(1)) * s * inv,
        "c": -(_qp(4) - _qp(2)) * s * inv,
        "d": -(_qp(4) - _qp(2)) * s * inv,
        "e": (_qp(5) - _qp(3)) * s * inv,
        "f": (_qp(2) + _qp(2 * m + 2)) * (_qp(2 * m + 4) + ONE).inverse(),
    }


def h_m_element(m: int) -> HeckeWord:
    c = h_m_coefficients(m)
    return HeckeWord(
        {
            (): c["a"],
            (2,): c["b"],
            (1, 2): c["c"],
            (3, 2): c["d"],
            (1, 3, 2): c["e"],
            (2, 1, 3, 2): c["f"],
        }
    )


def h_m_check(m: int, form: str = "printed") -> bool:
    """Apply ``h_m`` to ``eta^+_m (x) eta^-_{-m-1}`` and compare.

    ``form="printed"`` compares with ``eta^-_m (x) eta^+_{-m-1}``;
    ``form="same_state"`` with ``eta^-_{-m} (x) eta^+_{m-1}``, the pair that a
    wedge path produces when its two steps are taken in the opposite order.
    The two targets coincide for ``m = 0``.
    """
    rhs = hecke_act(h_m_element(m), eta_vec(1, m).tensor(eta_vec(-1, -m - 1)))
    if form == "printed":
        lhs = eta_vec(-1, m).tensor(eta_vec(1, -m - 1))
    elif form == "same_state":
        lhs = eta_vec(-1, -m).tensor(eta_vec(1, m - 1))
    else:
        raise ValueError(f"unknown form {form!r}")
    return lhs == rhs


# ---------------------------------------------------------------------------
# L (x) V and the Clebsch-Gordan vectors
# ---------------------------------------------------------------------------


class LTensorV:
    """``L (x) V`` for a finite-dimensional module L given by matrices.

    Vectors are dicts ``(j, k) -> Scalar`` with ``j`` a basis index of L and
    ``k`` one of V.  The module must provide ``matrices`` with keys
    ``"B-1", "B0", "B1", "Dd", "D1"`` (as :class:`qsp.verma.IrreducibleModule`).
    """

    def __init__(self, module):
        self.module = module
        self.dim = module.dim
        self._cols: dict[tuple[str, int], tuple] = {}
        self._khat = [
            module.matrices["Dd"][j][j] * module.matrices["D1"][j][j].inverse() for j in range(self.dim)
        ]

    def _left(self, op: str, j: int):
        key = (op, j)
        if key not in self._cols:
            m = self.module.matrices
            if op in ("Dd", "D1"):
                col = ((j, m[op][j][j]),)
            elif op in ("Dd^-1", "D1^-1"):
                col = ((j, m[op[:2]][j][j].inverse()),)
            elif op == "Khat":
                col = ((j, self._khat[j]),)
            elif op == "KhatInv":
                col = ((j, self._khat[j].inverse()),)
            else:
                mat = m[op]
                col = tuple((r, mat[r][j]) for r in range(self.dim) if mat[r][j])
            self._cols[key] = col
        return self._cols[key]

    def _gen(self, op: str, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            for k2, e in coproduct_step(op, self._left, lambda j: self._khat[j], key).items():
                _accumulate(out, k2, c * e)
        return out

    def act(self, g: Union[Generator, str, Element], vec: dict) -> dict:
        if isinstance(g, Element):
            el = g
        else:
            op = _normalise_op(g)
            if op in _B_RULES or op in _GROUPLIKE_EXP:
                return self._gen(op, vec)
            el = alias_expand(op)
        out: dict = {}
        for w, c in el.terms.items():
            img = vec
            for letter in reversed(w):
                img = self._gen(letter.value, img)
            for k, v in img.items():
                _accumulate(out, k, c * v)
        return out

    def pure(self, ab: tuple[int, int], w: TensorVector, coeff: ScalarLike = 1) -> dict:
        """``coeff * (basis vector F_+^a F_-^b v) (x) w`` (zero outside the basis)."""
        if w.d != 1:
            raise ValueError("second factor must lie in V")
        basis = self.module.basis
        if ab not in basis:
            return {}
        j = basis.index(ab)
        c = as_scalar(coeff)
        return {(j, k[0]): c * x for k, x in w.coeffs.items() if c * x}

    @staticmethod
    def add(*vecs: dict) -> dict:
        out: dict = {}
        for v in vecs:
            for k, c in v.items():
                _accumulate(out, k, c)
        return out

    @staticmethod
    def scale(c: ScalarLike, vec: dict) -> dict:
        c = as_scalar(c)
        return {k: c * v for k, v in vec.items() if c * v}

    @staticmethod
    def eigenvalue(vec: dict, image: dict) -> Scalar | None:
        if not vec:
            raise ValueError("zero vector has no eigenvalue")
        if not image:
            return ZERO
        if set(image) != set(vec):
            return None
        k = next(iter(vec))
        c = image[k] / vec[k]
        return c if all(image[x] == c * vec[x] for x in vec) else None

    def is_maximal(self, vec: dict) -> bool:
        return bool(vec) and not self.act("B1", vec) and not self.act("X", vec)

    def render(self, vec: dict) -> str:
        if not vec:
            return "0"
        parts = []
        for j, k in sorted(vec):
            a, b = self.module.basis[j]
            parts.append(f"({vec[(j, k)]})*F+^{a}F-^{b}v(x)e[{LABELS[k]}]")
        return " + ".join(parts)


def module_of(bp: Bipartition):
    """The irreducible module labelled by ``bp`` via the finite-dimensional quotient."""
    from .verma import HighestWeight, dominant_zeta, fd_quotient

    k, n, i = bp.kappa, bp.n, bp.lam[0] - bp.lam[1]
    m = _qp(n)
    hw = HighestWeight.from_mu(bp.lam[0] + bp.mu[0], bp.lam[1] + bp.mu[1], m, dominant_zeta(m, k, i))
    mod = fd_quotient(hw)
    if mod is None or mod.i != i:
        raise RuntimeError(f"no finite-dimensional quotient for {bp}")
    return mod


__all__.append("module_of")


@dataclass
class CGCandidate:
    name: str
    target: Bipartition | None
    vector: dict
    rendered: str
    zero: bool
    maximal: bool | None
    b0: Scalar | None
    z: Scalar | None
    expected_z: Scalar | None
    target_weight_ok: bool | None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "target": None if self.target is None else self.target.to_dict(),
            "zero": self.zero,
            "maximal": self.maximal,
            "B0": None if self.b0 is None else str(self.b0),
            "Z": None if self.z is None else str(self.z),
            "expected_Z": None if self.expected_z is None else str(self.expected_z),
            "target_weight_ok": self.target_weight_ok,
        }


@dataclass
class CGResult:
    bp: Bipartition
    candidates: list[CGCandidate]
    dim_check: bool

    @property
    def ok(self) -> bool:
        return self.dim_check and all(
            (c.zero and c.target is None)
            or (not c.zero and c.target is not None and c.maximal and c.target_weight_ok and c.z == c.expected_z)
            for c in self.candidates
        )

    def to_dict(self) -> dict:
        return {
            **self.bp.to_dict(),
            "dim_check": self.dim_check,
            "ok": self.ok,
            "candidates": [c.to_dict() for c in self.candidates],
        }


__all__ += ["CGCandidate", "CGResult"]


def cg_vectors(bp: Bipartition) -> tuple[LTensorV, dict[str, dict]]:
    """The auxiliary vectors ``w_+-``, ``Xi_+-`` and ``v (x) x^+-_n`` in ``L (x) V``."""
    L = LTensorV(module_of(bp))
    k, n, i = bp.kappa, bp.n, bp.lam[0] - bp.lam[1]
    w_plus = L.add(
        L.pure((1, 0), x_vec(1, n - 1)),
        L.pure((0, 0), y_vec(1, n - k - 2), -_qp(1 - n) * qint(i) * alpha_plus(n + k - i)),
    )
    w_minus = L.add(
        L.pure((0, 1), x_vec(-1, -n - 1)),
        L.pure((0, 0), y_vec(-1, -n - k - 2), -_qp(n + 1) * qint(k - i) * alpha_plus(n - i)),
    )
    xi_plus = L.add(L.scale(_qp(2 * i) - ONE, w_minus), L.scale(-(_qp(2 * i) + _qp(2 * n)), w_plus))
    xi_minus = L.add(
        L.scale(_qp(2 * i - 2 * n) + _qp(2 * k), w_minus), L.scale(_qp(2 * i) - _qp(2 * k), w_plus)
    )
    return L, {
        "w+": w_plus,
        "w-": w_minus,
        "Xi+": xi_plus,
        "Xi-": xi_minus,
        "v(x)x+": L.pure((0, 0), x_vec(1, n)),
        "v(x)x-": L.pure((0, 0), x_vec(-1, -n)),
    }


__all__.append("cg_vectors")


def clebsch_gordan(bp: Bipartition) -> CGResult:
    """Build the four candidate maximal vectors of ``L(bp) (x) V`` and certify them."""
    L, vecs = cg_vectors(bp)
    (l1, l2), (m1, m2) = bp.lam, bp.mu
    k, n, i = bp.kappa, bp.n, l1 - l2
    specs = [
        ("Xi+", (l1, l2 + 1), (m1, m2), qint(k + n - 2 * i + 1) - _qp(1 - k) * qint(n)),
        ("Xi-", (l1, l2), (m1, m2 + 1), qint(k + n - 2 * i - 1) - _qp(1 - k) * qint(n)),
        ("v(x)x+", (l1 + 1, l2), (m1, m2), qint(k + n - 2 * i) - _qp(-1 - k) * qint(n + 1)),
        ("v(x)x-", (l1, l2), (m1 + 1, m2), qint(k + n - 2 * i) - _qp(-1 - k) * qint(n - 1)),
    ]
    cands = []
    total = 0
    for name, lam, mu, z_exp in specs:
        vec = vecs[name]
        target = Bipartition(lam, mu) if Bipartition.is_valid(lam, mu) else None
        if target is not None:
            total += target.dim_l
        if not vec:
            cands.append(CGCandidate(name, target, vec, "0", True, None, None, None, z_exp, None))
            continue
        b0 = L.eigenvalue(vec, L.act("B0", vec))
        z = L.eigenvalue(vec, L.act("Z", vec))
        ok = None
        if target is not None:
            exp = expected_weight(target)
            dd = L.eigenvalue(vec, L.act("Dd", vec))
            d1 = L.eigenvalue(vec, L.act("D1", vec))
            ok = (dd, d1, b0, z) == (exp.dd, exp.d1, exp.b0, exp.z)
        cands.append(CGCandidate(name, target, vec, L.render(vec), False, L.is_maximal(vec), b0, z, z_exp, ok))
    return CGResult(bp, cands, total == 4 * bp.dim_l)


def easy_irrep_check(bp: Bipartition) -> dict:
    """For ``mu`` rectangular: E_-, F_- vanish and E_+, F_+ have the closed-form
    entries on the basis ``v_a = B_{-1}^a v / [a]!``."""
    from .linalg import matmul
    from .verma import magical_matrices

    if bp.mu[0] != bp.mu[1]:
        raise ValueError("second partition must be rectangular")
    mod = module_of(bp)
    k, n = bp.kappa, bp.n
    _, mg = magical_matrices(mod.hw, mod.i)
    zero_minus = all(not x for name in ("E-", "F-") for row in mg[name] for x in row)
    # coordinates of v_a in the F_+^a v basis
    bm = mod.matrices["B-1"]
    vs = []
    cur = [ONE if j == 0 else ZERO for j in range(mod.dim)]
    fact = ONE
    for a in range(k + 1):
        if a:
            fact = fact * qint(a)
            cur = [sum((bm[r][c] * cur[c] for c in range(mod.dim) if bm[r][c]), ZERO) for r in range(mod.dim)]
        vs.append([x * fact.inverse() for x in cur])

    def apply(name, vec):
        m = mg[name]
        return [sum((m[r][c] * vec[c] for c in range(mod.dim) if m[r][c]), ZERO) for r in range(mod.dim)]

    ok = zero_minus
    for a in range(k + 1):
        ep = apply("E+", vs[a])
        want = [ZERO] * mod.dim if a == 0 else [
            (_qp(2 * n - 2 * a) + ONE) * qint(k - a + 1) * x for x in vs[a - 1]
        ]
        fp = apply("F+", vs[a])
        want_f = [ZERO] * mod.dim if a == k else [(ONE + _qp(2 * a - 2 * n)) * qint(a + 1) * x for x in vs[a + 1]]
        ok = ok and ep == want and fp == want_f
    return {"bp": str(bp), "minus_vanish": zero_minus, "ok": bool(ok)}


def omega_recursion_check(bp: Bipartition) -> bool | None:
    """W-eigenvalue of Omega(bp) against Omega(bp') for the last box removed."""
    (l1, l2), (m1, m2) = bp.lam, bp.mu
    if l1 == l2 and m1 == m2:
        return None
    comp, row, col = special_filling(bp)[-1]
    if comp == 0:
        prev = Bipartition((l1 - 1, l2), (m1, m2))
    else:
        prev = Bipartition((l1, l2), (m1 - 1, m2))
    w = weight_of(omega(bp))
    w0 = weight_of(omega(prev))
    if not isinstance(w, TensorWeight) or not isinstance(w0, TensorWeight):
        return False
    kp = l1 + m1 - l2 - m2 - 1
    if comp == 0:  # sign '-', m = l1 - m1 - 1
        m = l1 - m1 - 1
        pred = w0.w - _qp(kp - 1 + m)
    else:
        m = l1 - m1 + 1
        pred = w0.w + _qp(kp - 1 - m)
    return w.w == pred


# ---------------------------------------------------------------------------
# closed formulas used for the Z-weights of the Clebsch-Gordan vectors
# ---------------------------------------------------------------------------


def closed_form_checks(bp: Bipartition) -> dict[str, bool]:
    """Evaluate each closed formula for ``B_{-1}``, ``B_0 B_{-1}`` and
    ``B_1 B_0 B_{-1}`` on the auxiliary tensors of ``L(bp) (x) V`` and compare
    with the action computed through the coproduct."""
    L, vecs = cg_vectors(bp)
    k, n, i = bp.kappa, bp.n, bp.lam[0] - bp.lam[1]
    Q, A, I = _qp, alpha_plus, qint
    inv = lambda s: s.inverse()  # noqa: E731
    ed, edb, e1, e1b = e_vec("d"), e_vec("-d"), e_vec("1"), e_vec("-1")
    xp, xm, yp, ym = (lambda m: x_vec(1, m)), (lambda m: x_vec(-1, m)), (lambda m: y_vec(1, m)), (lambda m: y_vec(-1, m))

    def T(ab, w, c=ONE):
        return L.pure(ab, w, c)

    v, Fp, Fm, Fpp, Fmm, Fpm = (0, 0), (1, 0), (0, 1), (2, 0), (0, 2), (1, 1)
    add = L.add

    def B(ops, vec):
        for op in reversed(ops):
            vec = L.act(op, vec)
        return vec

    a_n = inv(A(n))
    out: dict[str, bool] = {}
    # B_{-1} on the simple tensors
    out["B-1 v(x)e1"] = B(["B-1"], T(v, e1)) == add(T(Fm, e1, Q(1 - n) * a_n), T(Fp, e1, Q(n + 1) * a_n))
    out["B-1 v(x)e-1"] = B(["B-1"], T(v, e1b)) == add(T(Fm, e1b, Q(-n) * a_n), T(Fp, e1b, Q(n) * a_n))
    out["B-1 F+v(x)x+"] = B(["B-1"], T(Fp, xp(n - 1))) == add(
        T(Fpp, xp(n - 2), Q(n - 1) * inv(A(n - 1))),
        T(Fpm, xp(n - 2), Q(1 - n) * inv(A(n - 1))),
        T(Fp, yp(n + k - 3), Q(2 - k)),
    )
    out["B-1 F-v(x)x-"] = B(["B-1"], T(Fm, xm(-n - 1))) == add(
        T(Fm, ym(-n + k - 3), Q(2 - k)),
        T(Fmm, xm(-n - 2), Q(-n - 1) * inv(A(n + 1))),
        T(Fpm, xm(-n - 2), Q(n + 1) * inv(A(n + 1))),
    )
    # B_0 B_{-1}
    out["B0B-1 v(x)e1"] = B(["B0", "B-1"], T(v, e1)) == add(
        T(Fm, e1, Q(1 - n) * I(n + 1) * a_n), T(Fp, e1, Q(n + 1) * I(n - 1) * a_n)
    )
    out["B0B-1 v(x)e-1"] = B(["B0", "B-1"], T(v, e1b)) == add(
        T(Fm, e1b, Q(-n) * I(n + 1) * a_n), T(Fp, e1b, Q(n) * I(n - 1) * a_n)
    )
    out["B0B-1 F+v(x)x+"] = B(["B0", "B-1"], T(Fp, xp(n - 1))) == add(
        T(Fpp, xp(n - 2), Q(n - 1) * I(n - 1) * inv(A(n - 1))),
        T(Fpm, ed, (Q(1 - n) + I(n)) * inv(A(n - 1))),
        T(Fpm, edb, (Q(-1) + Q(-n) * I(n)) * inv(A(n - 1))),
        T(Fp, yp(n + k - 3), Q(2 - k) * I(n - 1)),
    )
    out["B0B-1 F-v(x)x-"] = B(["B0", "B-1"], T(Fm, xm(-n - 1))) == add(
        T(Fm, ym(-n + k - 3), Q(2 - k) * I(n + 1)),
        T(Fmm, xm(-n - 2), Q(-n - 1) * I(n + 1) * inv(A(n + 1))),
        T(Fpm, edb, (Q(n) * I(n) - Q(-1)) * inv(A(n + 1))),
        T(Fpm, ed, (Q(n + 1) - I(n)) * inv(A(n + 1))),
    )
    # B_1 B_0 B_{-1}
    E = ["B1", "B0", "B-1"]
    out["B1B0B-1 F+^2v(x)x+"] = B(E, T(Fpp, xp(n - 2))) == T(
        Fp, xp(n - 3), Q(2 - n) * I(2) * I(i - 1) * A(k + n - i - 1)
    )
    out["B1B0B-1 F+F-v(x)ed"] = B(E, T(Fpm, ed)) == add(
        T(Fm, ed, Q(-n - 1) * I(i) * A(k + n - i) * A(n - 1) * a_n),
        T(Fp, ed, Q(n - 1) * I(k - i) * A(n - i) * A(n + 1) * a_n),
    )
    out["B1B0B-1 F+F-v(x)e-d"] = B(E, T(Fpm, edb)) == add(
        T(Fm, edb, Q(-n) * I(i) * A(k + n - i) * A(n - 1) * a_n),
        T(Fp, edb, Q(n) * I(k - i) * A(n - i) * A(n + 1) * a_n),
    )
    out["B1B0B-1 F+v(x)y+"] = B(E, T(Fp, yp(n + k - 3))) == add(
        T(v, yp(n + k - 2), Q(-n - 1) * I(i) * A(k + n - i)), T(Fp, xp(n + 2 * k - 5))
    )
    out["B1B0B-1 F-v(x)y-"] = B(E, T(Fm, ym(-n + k - 3))) == add(
        T(Fm, xm(2 * k - n - 5)), T(v, ym(k - n - 2), Q(n - 1) * I(k - i) * A(n - i))
    )
    out["B1B0B-1 F-^2v(x)x-"] = B(E, T(Fmm, xm(-n - 2))) == T(
        Fm, xm(1 - n), Q(n + 2) * I(2) * I(k - i - 1) * A(n - i + 1)
    )
    # the two expansions on w_+ and w_-
    c_i = I(i) * A(n + k - i)
    c_ki = I(k - i) * A(n - i)
    wp = add(
        T(Fp, xp(n - 3), Q(1) * I(n - 1) * inv(A(n - 1)) * I(2) * I(i - 1) * A(n + k - i - 1)),
        T(Fm, xp(2 * k + n - 1), -Q(1 - 2 * n) * I(n + 1) * c_i * a_n),
        T(v, yp(k + n + 2), -Q(1 - 2 * n) * I(n + 1) * c_i * a_n * Q(n - 1) * c_ki),
        T(Fp, edb, Q(n) * c_ki * A(n + 1) * a_n),
        T(Fm, ed, Q(-n - 1) * c_i * A(n - 1) * a_n),
        T(Fp, ed, I(n - 1) * (Q(n - 1) - Q(n - k) * c_i * a_n) * Q(k - 2)),
        T(v, e1, I(n - 1) * (Q(n - 1) - Q(n - k) * c_i * a_n) * Q(-n) * c_i),
        T(Fp, edb, I(n - 1) * (Q(2 - k) - Q(1) * c_i * a_n)),
        T(v, e1b, I(n - 1) * (Q(2 - k) - Q(1) * c_i * a_n) * Q(-n - 1) * c_i),
        T(Fm, edb, (Q(-1) + Q(-n) * I(n)) * inv(A(n - 1)) * Q(-n) * c_i * A(n - 1) * a_n),
        T(Fp, e1, (Q(1 - n) + I(n)) * inv(A(n - 1)) * Q(n - 1) * c_ki * A(n + 1) * a_n),
    )
    out["B1B0B-1 w+"] = B(E, vecs["w+"]) == wp
    wm = add(
        T(Fm, xm(-n - 3), Q(1) * I(n + 2) * I(2) * I(k - i - 1) * A(n - i + 1) * inv(A(n + 1))),
        T(Fp, xm(-n - 3), -Q(2 * n + 1) * I(n + 1) * c_ki * a_n),
        T(v, ym(-n - k), -Q(2 * n + 1) * I(n + 1) * c_ki * a_n * Q(-n - 1) * c_i),
        T(Fp, edb, Q(n + 1) * inv(A(n + 1)) * (Q(-1) * I(n) - Q(-n - 2)) * Q(n) * c_ki * A(n + 1) * a_n),
        T(Fm, edb, Q(n + 1) * inv(A(n + 1)) * (Q(-1) * I(n) - Q(-n - 2)) * Q(-n) * c_i * A(n - 1) * a_n),
        T(Fm, ed, Q(n + 1) * inv(A(n + 1)) * (ONE - Q(-n - 1) * I(n)) * Q(-n - 1) * c_i * A(n - 1) * a_n),
        T(Fp, ed, Q(n + 1) * inv(A(n + 1)) * (ONE - Q(-n - 1) * I(n)) * Q(n - 1) * c_ki * A(n + 1) * a_n),
        T(Fm, edb, I(n + 1) * (Q(2 - k) - Q(1) * c_ki * a_n)),
        T(v, e1b, I(n + 1) * (Q(2 - k) - Q(1) * c_ki * a_n) * Q(n - 1) * c_ki),
        T(Fm, ed, I(n + 1) * (Q(-n - k) * c_ki * a_n - Q(-n - 1)) * Q(k - 2)),
        T(v, e1, I(n + 1) * (Q(-n - k) * c_ki * a_n - Q(-n - 1)) * Q(n) * c_ki),
    )
    out["B1B0B-1 w-"] = B(E, vecs["w-"]) == wm
    # the resulting eigenvalues on Xi_+ and Xi_-; the printed sign is "-+",
    # the opposite sign is what matches the Z-weights
    for name, sign in (("Xi+", 1), ("Xi-", -1)):
        vec = vecs[name]
        ev = L.eigenvalue(vec, B(E, vec)) if vec else None
        for tag, s in (("", -sign), (" (opposite sign)", sign)):
            out[f"B1B0B-1 {name}{tag}"] = ev is not None and ev == I(k + n - 2 * i + s) + I(k - 2) * I(n)
    # B_1 on the pieces of w_+ and w_-
    from .verma import dominant_zeta

    zeta = dominant_zeta(Q(n), k, i)
    out["B1 v(x)e1"] = B(["B1"], T(v, e1)) == T(v, ed, Q(k))
    out["B1 v(x)e-1"] = B(["B1"], T(v, e1b)) == T(v, edb)
    out["B1 F+v(x)x+"] = B(["B1"], T(Fp, xp(n - 1))) == T(v, xp(n - 2), (I(k) - Q(-n) * zeta) * Q(1))
    out["B1 F-v(x)x-"] = B(["B1"], T(Fm, xm(-n - 1))) == T(v, xm(-n - 2), (I(k) + Q(n) * zeta) * Q(1))
    return out


__all__.append("closed_form_checks")
