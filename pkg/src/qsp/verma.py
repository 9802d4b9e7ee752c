"""Verma modules of U_q' and their finite-dimensional quotients.

A Verma module ``M(kd, k1, beta, zeta)`` has basis ``B_{-1}^f Y^y v``.  The
action of any algebra element is computed by normal ordering in the module P
(see :mod:`qsp.coideal`) and then letting the Cartan part act on ``v`` by its
character; PBW monomials with a raising factor (``e + x > 0``) kill ``v``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .coideal import (
    _ALIAS_SYNONYMS,
    ALIASES,
    Element,
    Generator,
    _act_element_vec,
    _alias_on_index,
    _p_act_cached,
    alias_expand,
)
from .linalg import Matrix, Poly, diagonal, identity, matmul, minimal_polynomial, row_echelon, zeros
from .qfield import ONE, ZERO, Scalar, ScalarLike, as_scalar, iota, iter_terms, q, qbracket, qint, scalars_distinct
from .relations import defining_relations

G = Generator

__all__ = [
    "HighestWeight",
    "VermaVector",
    "Weight",
    "IrreducibleModule",
    "BGGData",
    "ProbeResult",
    "dominant_zeta",
    "verma_act",
    "magical_apply",
    "f_vector",
    "eigenvalue",
    "measure_weight",
    "closed_weight",
    "weight_table",
    "epm_scalar",
    "is_maximal",
    "source_weight",
    "hom_exists",
    "dominance_index",
    "fd_quotient",
    "bgg_resolution",
    "quotient_level_dims",
    "sl2_character",
    "exceptional_candidates",
    "exceptional_probe",
    "b0_jordan_check",
    "element_matrix",
    "hom_image",
    "case_condition",
    "level_basis",
    "act_word",
    "f_eta",
    "weights_distinct",
    "NotAWeightVector",
    "magical_matrices",
]


# ---------------------------------------------------------------------------
# highest weights
# ---------------------------------------------------------------------------


def _is_exceptional_mu(m: Scalar) -> bool:
    """True when ``m = +-i q^l`` for some integer l."""
    if m.has_mu() or not m.is_laurent():
        return False
    terms = list(iter_terms(m))
    if len(terms) != 1:
        return False
    _, mexp, c = terms[0]
    return mexp == 0 and c.re == 0 and abs(c.im) == 1


@dataclass(frozen=True)
class HighestWeight:
    """Highest weight ``(kd, k1, beta, zeta)``; ``mu`` with ``beta = [mu;0]`` when known."""

    kd: int
    k1: int
    beta: Scalar
    zeta: Scalar
    mu: Scalar | None = field(default=None, compare=False)

    @classmethod
    def from_mu(cls, kd: int, k1: int, mu: ScalarLike, zeta: ScalarLike) -> "HighestWeight":
        m = as_scalar(mu)
        return cls(kd, k1, qbracket(m, 0), as_scalar(zeta), m)

    @property
    def kappa(self) -> int:
        return self.kd - self.k1

    @property
    def omega(self) -> Scalar:
        """W-eigenvalue of the highest weight vector."""
        k = self.kappa
        return q(-2) * (self.zeta - (q(k) - q(-k)) * self.beta)

    @property
    def good(self) -> bool:
        if self.mu is None:
            raise ValueError("goodness needs an explicit mu with beta = [mu;0]")
        return not _is_exceptional_mu(self.mu)

    def require_mu(self) -> Scalar:
        if self.mu is None:
            raise ValueError("this operation needs an explicit mu with beta = [mu;0]")
        return self.mu

    def to_dict(self) -> dict:
        out = {
            "kd": self.kd,
            "k1": self.k1,
            "kappa": self.kappa,
            "beta": str(self.beta),
            "zeta": str(self.zeta),
            "omega": str(self.omega),
        }
        if self.mu is not None:
            out["mu"] = str(self.mu)
            out["good"] = self.good
        return out

    def __str__(self) -> str:
        return f"M({self.kd}, {self.k1}, {self.beta}, {self.zeta})"


def dominant_zeta(mu: ScalarLike, kappa: int, i: int) -> Scalar:
    """``[mu; kappa - 2i] - q^-kappa [mu; 0]``."""
    m = as_scalar(mu)
    return qbracket(m, kappa - 2 * i) - q(-kappa) * qbracket(m, 0)


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

Key = tuple[int, int]


class VermaVector:
    """Sparse combination of ``B_{-1}^f Y^y v`` keyed by ``(f, y)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Key, ScalarLike] | None = None):
        self.coeffs: dict[Key, Scalar] = {}
        for k, c in (coeffs or {}).items():
            c = as_scalar(c)
            if c:
                self.coeffs[(int(k[0]), int(k[1]))] = c

    @classmethod
    def _raw(cls, d: dict) -> "VermaVector":
        obj = object.__new__(cls)
        obj.coeffs = d
        return obj

    @classmethod
    def highest(cls) -> "VermaVector":
        return cls._raw({(0, 0): ONE})

    @classmethod
    def basis(cls, f: int, y: int) -> "VermaVector":
        return cls._raw({(f, y): ONE})

    def __getitem__(self, k: Key) -> Scalar:
        return self.coeffs.get(tuple(k), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def levels(self) -> set[int]:
        return {f + y for f, y in self.coeffs}

    def __add__(self, other: "VermaVector") -> "VermaVector":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k)
            out[k] = c if v is None else v + c
        return VermaVector._raw({k: v for k, v in out.items() if v})

    def __neg__(self) -> "VermaVector":
        return VermaVector._raw({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "VermaVector":
        c = as_scalar(c)
        if not c:
            return VermaVector._raw({})
        return VermaVector._raw({k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VermaVector):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.coeffs))

    def __repr__(self):
        return f"VermaVector({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (f, y) in sorted(self.coeffs, key=lambda k: (k[0] + k[1], -k[0])):
            c = self.coeffs[(f, y)]
            mon = "*".join(
                [s for s in (_pw("B-1", f), _pw("Y", y)) if s] + ["v"]
            )
            parts.append(f"({c})*{mon}")
        return " + ".join(parts)


def _pw(name: str, n: int) -> str:
    if n == 0:
        return ""
    return name if n == 1 else f"{name}^{n}"


# ---------------------------------------------------------------------------
# the action
# ---------------------------------------------------------------------------

Operator = Union[Generator, str, Element]


@lru_cache(maxsize=None)
def _module_image(op: Union[Generator, str], f: int, y: int) -> tuple:
    """P-image of ``B_{-1}^f Y^y`` under ``op``, restricted to terms that survive on v.

    Entries are ``((f', y', b, z, kd, k1), coeff)``.
    """
    idx = (f, y, 0, 0, 0, 0, 0, 0)
    if isinstance(op, Generator):
        terms = _p_act_cached(op, idx)
    else:
        terms = _alias_on_index(op, idx)
    return tuple(((k[0], k[1], k[4], k[5], k[6], k[7]), c) for k, c in terms if k[2] == 0 and k[3] == 0)


class _Character:
    """Cached powers of the Cartan character of a highest weight."""

    def __init__(self, hw: HighestWeight):
        self.hw = hw
        self._b: list[Scalar] = [ONE]
        self._z: list[Scalar] = [ONE]

    def _pow(self, store: list[Scalar], base: Scalar, n: int) -> Scalar:
        while len(store) <= n:
            store.append(store[-1] * base)
        return store[n]

    def value(self, b: int, z: int, kd: int, k1: int) -> Scalar:
        hw = self.hw
        out = q(hw.kd * kd + hw.k1 * k1)
        if b:
            out = out * self._pow(self._b, hw.beta, b)
        if z:
            out = out * self._pow(self._z, hw.zeta, z)
        return out


_CHARS: dict[HighestWeight, _Character] = {}


def _character(hw: HighestWeight) -> _Character:
    ch = _CHARS.get(hw)
    if ch is None or ch.hw.mu != hw.mu:
        ch = _Character(hw)
        if len(_CHARS) > 256:
            _CHARS.clear()
        _CHARS[hw] = ch
    return ch


def _resolve(op: Operator) -> Union[Generator, str, Element]:
    if isinstance(op, str):
        key = _ALIAS_SYNONYMS.get(op, op)
        if key in ALIASES:
            return key
        return alias_expand(op)
    return op


def verma_act(hw: HighestWeight, op: Operator, v: VermaVector) -> VermaVector:
    """Apply a generator, alias name or Element to a vector of ``M(hw)``."""
    op = _resolve(op)
    ch = _character(hw)
    out: dict[Key, Scalar] = {}
    for (f, y), c in v.coeffs.items():
        if isinstance(op, Element):
            raw = _act_element_vec(op, {(f, y, 0, 0, 0, 0, 0, 0): ONE})
            terms = [((k[0], k[1], k[4], k[5], k[6], k[7]), d) for k, d in raw.items() if k[2] == 0 and k[3] == 0]
        else:
            terms = _module_image(op, f, y)
        for (f2, y2, b, z, kd, k1), d in terms:
            val = c * d * ch.value(b, z, kd, k1)
            prev = out.get((f2, y2))
            out[(f2, y2)] = val if prev is None else prev + val
    return VermaVector._raw({k: x for k, x in out.items() if x})


def act_word(hw: HighestWeight, ops: Sequence[Operator], v: VermaVector) -> VermaVector:
    """Apply ``ops[0] ... ops[-1]`` with the rightmost operator first."""
    for op in reversed(list(ops)):
        if v.is_zero():
            break
        v = verma_act(hw, op, v)
    return v


def eigenvalue(v: VermaVector, image: VermaVector) -> Scalar | None:
    """The scalar c with ``image = c v``, or None if there is none."""
    if v.is_zero():
        raise ValueError("zero vector has no eigenvalue")
    k = next(iter(v.coeffs))
    c = image[k] / v.coeffs[k]
    return c if image == v.scale(c) else None


# ---------------------------------------------------------------------------
# magical operators
# ---------------------------------------------------------------------------


def magical_apply(
    hw: HighestWeight, sign: int, direction: str, eta: ScalarLike, v: VermaVector, check: bool = True
) -> VermaVector:
    """Apply ``E_+-(eta)`` or ``F_+-(eta)`` to a B0-eigenvector of eigenvalue ``[eta;0]``."""
    eta = as_scalar(eta)
    if direction not in ("E", "F"):
        raise ValueError("direction must be 'E' or 'F'")
    if check and not v.is_zero():
        b0 = verma_act(hw, G.B0, v)
        if b0 != v.scale(qbracket(eta, 0)):
            raise ValueError("vector is not a B0-eigenvector with eigenvalue [eta;0]")
    if direction == "E":
        main, side = verma_act(hw, G.B1, v), verma_act(hw, "X", v)
        return main + side.scale(eta) if sign > 0 else main - side.scale(eta.inverse())
    main, side = verma_act(hw, G.Bminus1, v), verma_act(hw, "Y", v)
    return main - side.scale(eta.inverse()) if sign > 0 else main + side.scale(eta)


def f_eta(hw: HighestWeight, a: int, b: int) -> Scalar:
    """B0-parameter ``mu q^(b-a)`` of ``F_+^a F_-^b v``."""
    return hw.require_mu() * q(b - a)


@lru_cache(maxsize=2048)
def _f_vector_cached(hw: HighestWeight, mu_key: str, a: int, b: int) -> VermaVector:
    if a == 0 and b == 0:
        return VermaVector.highest()
    if a == 0:
        prev = _f_vector_cached(hw, mu_key, 0, b - 1)
        return magical_apply(hw, -1, "F", f_eta(hw, 0, b - 1), prev, check=False)
    prev = _f_vector_cached(hw, mu_key, a - 1, b)
    return magical_apply(hw, +1, "F", f_eta(hw, a - 1, b), prev, check=False)


def f_vector(hw: HighestWeight, a: int, b: int) -> VermaVector:
    """The weight vector ``F_+^a F_-^b v`` (the F_- are applied first)."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    return _f_vector_cached(hw, str(hw.require_mu()), a, b)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Weight:
    dd: Scalar
    d1: Scalar
    b0: Scalar
    z: Scalar
    w: Scalar | None = None

    def values(self) -> tuple:
        return (self.dd, self.d1, self.b0, self.z) + ((self.w,) if self.w is not None else ())

    def to_dict(self) -> dict:
        out = {"Dd": str(self.dd), "D1": str(self.d1), "B0": str(self.b0), "Z": str(self.z)}
        if self.w is not None:
            out["W"] = str(self.w)
        return out


class NotAWeightVector(ValueError):
    """Raised when a vector is not a joint eigenvector; ``operator`` names the culprit."""

    def __init__(self, operator: str):
        super().__init__(f"not an eigenvector of {operator}")
        self.operator = operator


def measure_weight(hw: HighestWeight, v: VermaVector, with_w: bool = True) -> Weight:
    """Joint eigenvalues of (Dd, D1, B0, Z, W) on ``v``, computed by the action."""
    vals = []
    names = [("Dd", G.Dd), ("D1", G.D1), ("B0", G.B0), ("Z", "Z")] + ([("W", "W")] if with_w else [])
    for name, op in names:
        c = eigenvalue(v, verma_act(hw, op, v))
        if c is None:
            raise NotAWeightVector(name)
        vals.append(c)
    return Weight(*vals) if with_w else Weight(*vals, None)


def closed_weight(hw: HighestWeight, a: int, b: int) -> Weight:
    """Closed-form weight of ``F_+^a F_-^b v``."""
    m = hw.require_mu()
    k = hw.kappa
    mi = m.inverse()
    two = qint(2)
    z = q(a + b) * (mi * q(a - k - 1) * two * qint(a) - m * q(b - k - 1) * two * qint(b) + hw.zeta)
    w = q(-a - b) * (m * q(k - a - 1) * two * qint(a) - mi * q(k - b - 1) * two * qint(b) + hw.omega)
    return Weight(q(hw.kd - a - b), q(hw.k1 + a + b), qbracket(m, b - a), z, w)


def weight_table(hw: HighestWeight, A: int, B: int) -> list[tuple[tuple[int, int], Weight]]:
    """Closed-form weights of ``F_+^a F_-^b v`` for ``a <= A``, ``b <= B``."""
    if not hw.good:
        raise ValueError("weight tables are only defined for good Verma modules")
    return [((a, b), closed_weight(hw, a, b)) for a in range(A + 1) for b in range(B + 1)]


def weights_distinct(table: Iterable[tuple[tuple[int, int], Weight]]) -> bool:
    seen = [w.values()[:4] for _, w in table]
    # compare on the full tuple; scalars_distinct handles the fields one at a time
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if all(x == y for x, y in zip(seen[i], seen[j])):
                return False
    return True


# ---------------------------------------------------------------------------
# E_+- scalars and maximal vectors
# ---------------------------------------------------------------------------


def epm_scalar(hw: HighestWeight, a: int, b: int) -> tuple[Scalar, Scalar]:
    """Scalars ``(c_+, c_-)`` with ``E_+ u = c_+ [a] u'`` and ``E_- u = c_- [b] u''``.

    Here ``u = F_+^a F_-^b v``, ``u' = F_+^(a-1) F_-^b v`` and
    ``u'' = F_+^a F_-^(b-1) v``.  ``c_+`` does not depend on ``b`` and ``c_-``
    does not depend on ``a``.
    """
    m = hw.require_mu()
    mi = m.inverse()
    k = hw.kappa
    zeta, omega = hw.zeta, hw.omega
    two = qint(2)

    def gamma(c: int) -> Scalar:
        return two * qint(k - c + 1)

    def mm(c: int, sign: int) -> Scalar:
        e = sign * (1 + k - 2 * c)
        return qint(c - 1) * (m * m * q(e) + mi * mi * q(-e))

    cp = q(-1) * (gamma(a) - mm(a, 1)) - q(a - 1) * mi * zeta - m * q(1 - a) * omega
    cm = q(-1) * (gamma(b) - mm(b, -1)) + q(1 - b) * mi * omega + m * q(b - 1) * zeta
    return cp, cm


def is_maximal(hw: HighestWeight, v: VermaVector) -> bool:
    """Killed by both B1 and X."""
    return verma_act(hw, G.B1, v).is_zero() and verma_act(hw, "X", v).is_zero()


# ---------------------------------------------------------------------------
# homomorphisms between good Verma modules
# ---------------------------------------------------------------------------


def _zeta_case1(m: Scalar, k: int, i: int) -> Scalar:
    return m * q(-i) * qint(k - i) - m.inverse() * q(i - k) * qint(i)


def _zeta_case2(m: Scalar, k: int, i: int) -> Scalar:
    return m * q(i - k) * qint(i) - m.inverse() * q(-i) * qint(k - i)


def source_weight(dst: HighestWeight, case: int, i: int) -> HighestWeight:
    """Highest weight of the Verma module mapping into ``dst`` in the given case.

    Cases 1 and 2 send the new highest weight vector to ``F_+^(i+1) v`` and
    ``F_-^(i+1) v``; case 3 sends it to ``F_+^(i+1) F_-^(kappa-i+1) v``.  The
    parameters of case 3 are read off from the weight of that vector: the
    D-hat parameters are ``(k1 - 2, kd + 2)`` and
    ``zeta' = mu^-1 q^(i+2) [i+2] - mu q^(kappa-i+2) [kappa-i+2]``, which is
    also what composing a case-1 map with a case-2 map produces.
    """
    m = dst.require_mu()
    k = dst.kappa
    mi = m.inverse()
    if case == 1:
        z = m * q(1) * qint(k - i) + mi * q(2 * i + 1 - k) * qint(i + 2)
        return HighestWeight.from_mu(dst.kd - i - 1, dst.k1 + i + 1, m * q(-i - 1), z)
    if case == 2:
        z = -(m * q(2 * i + 1 - k) * qint(i + 2)) - mi * q(1) * qint(k - i)
        return HighestWeight.from_mu(dst.kd - i - 1, dst.k1 + i + 1, m * q(i + 1), z)
    if case == 3:
        z = mi * q(i + 2) * qint(i + 2) - m * q(k - i + 2) * qint(k - i + 2)
        return HighestWeight.from_mu(dst.k1 - 2, dst.kd + 2, m * q(k - 2 * i), z)
    if case == 4:
        return dst
    raise ValueError("case must be 1, 2, 3 or 4")


def case_condition(dst: HighestWeight, case: int, i: int) -> bool:
    """Whether the zeta-condition of the given case holds for ``dst`` at ``i``."""
    m = dst.require_mu()
    k = dst.kappa
    if case in (1, 3):
        if case == 3 and not 0 <= i <= k:
            return False
        return dst.zeta == _zeta_case1(m, k, i)
    if case == 2:
        return dst.zeta == _zeta_case2(m, k, i)
    return case == 4


def _same(a: HighestWeight, b: HighestWeight) -> bool:
    return a.kd == b.kd and a.k1 == b.k1 and a.beta == b.beta and a.zeta == b.zeta


def hom_exists(src: HighestWeight, dst: HighestWeight) -> int | None:
    """Which case (1-4) gives a nonzero map ``M(src) -> M(dst)``; None if none does."""
    if not dst.good:
        raise ValueError("the target Verma module must be good")
    if _same(src, dst):
        return 4
    i = dst.kd - src.kd - 1
    if i >= 0:
        for case in (1, 2):
            if case_condition(dst, case, i) and _same(src, source_weight(dst, case, i)):
                return case
    for i in range(dst.kappa + 1):
        if case_condition(dst, 3, i) and _same(src, source_weight(dst, 3, i)):
            return 3
    return None


def hom_image(dst: HighestWeight, case: int, i: int) -> tuple[int, int]:
    """``(a, b)`` such that the map of the given case hits ``F_+^a F_-^b v``."""
    if case == 1:
        return (i + 1, 0)
    if case == 2:
        return (0, i + 1)
    if case == 3:
        return (i + 1, dst.kappa - i + 1)
    return (0, 0)


# ---------------------------------------------------------------------------
# finite-dimensional irreducible quotients
# ---------------------------------------------------------------------------


def dominance_index(hw: HighestWeight) -> int | None:
    """The ``i`` with ``zeta = [mu;kappa-2i] - q^-kappa [mu;0]`` and ``0 <= i <= kappa``."""
    m = hw.require_mu()
    for i in range(hw.kappa + 1):
        if hw.zeta == dominant_zeta(m, hw.kappa, i):
            return i
    return None


GENERATOR_NAMES = ("B-1", "B0", "B1", "Dd", "D1")


@dataclass
class IrreducibleModule:
    hw: HighestWeight
    i: int
    basis: list[tuple[int, int]]
    matrices: dict[str, Matrix]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self, g: Generator) -> Matrix:
        names = {
            G.Bminus1: "B-1",
            G.B0: "B0",
            G.B1: "B1",
            G.Dd: "Dd",
            G.D1: "D1",
        }
        if g in names:
            return self.matrices[names[g]]
        base = self.matrices["Dd" if g is G.DdInv else "D1"]
        return diagonal([base[r][r].inverse() for r in range(self.dim)])

    def element_matrix(self, el: Element) -> Matrix:
        return element_matrix(el, self.matrix, self.dim)

    def relation_failures(self) -> list[str]:
        return [label for label, el in defining_relations() if not _is_zero(self.element_matrix(el))]

    def to_dict(self) -> dict:
        return {
            "hw": self.hw.to_dict(),
            "i": self.i,
            "dim": self.dim,
            "basis": [list(b) for b in self.basis],
            "matrices": {k: [[str(x) for x in row] for row in m] for k, m in self.matrices.items()},
        }


def _is_zero(m: Matrix) -> bool:
    return all(not x for row in m for x in row)


def element_matrix(el: Element, mat_of, dim: int) -> Matrix:
    """Matrix of an Element given a function sending generators to matrices."""
    out = zeros(dim, dim)
    cache: dict = {}
    for word, c in el.terms.items():
        m = identity(dim)
        for g in word:
            if g not in cache:
                cache[g] = mat_of(g)
            m = matmul(m, cache[g])
        for r in range(dim):
            for s in range(dim):
                if m[r][s]:
                    out[r][s] = out[r][s] + c * m[r][s]
    return out


def magical_matrices(hw: HighestWeight, i: int) -> tuple[list[tuple[int, int]], dict[str, Matrix]]:
    """Matrices of F_+, F_-, E_+, E_- on the basis ``F_+^a F_-^b v`` of the quotient."""
    k = hw.kappa
    basis = [(a, b) for a in range(i + 1) for b in range(k - i + 1)]
    pos = {ab: n for n, ab in enumerate(basis)}
    dim = len(basis)
    mats = {name: zeros(dim, dim) for name in ("F+", "F-", "E+", "E-")}
    for col, (a, b) in enumerate(basis):
        if (a + 1, b) in pos:
            mats["F+"][pos[(a + 1, b)]][col] = ONE
        if (a, b + 1) in pos:
            mats["F-"][pos[(a, b + 1)]][col] = ONE
        cp, cm = epm_scalar(hw, a, b)
        if a > 0:
            mats["E+"][pos[(a - 1, b)]][col] = cp * qint(a)
        if b > 0:
            mats["E-"][pos[(a, b - 1)]][col] = cm * qint(b)
    return basis, mats


def fd_quotient(hw: HighestWeight) -> IrreducibleModule | None:
    """The finite-dimensional irreducible quotient of a good Verma module, if any."""
    if not hw.good:
        raise ValueError("fd_quotient needs a good Verma module")
    if hw.kappa < 0:
        return None
    i = dominance_index(hw)
    if i is None:
        return None
    m = hw.require_mu()
    basis, mg = magical_matrices(hw, i)
    dim = len(basis)
    bm, b1 = zeros(dim, dim), zeros(dim, dim)
    for col, (a, b) in enumerate(basis):
        eta = m * q(b - a)
        inv = eta.inverse()
        den = (eta + inv).inverse()
        for row in range(dim):
            fp, fm = mg["F+"][row][col], mg["F-"][row][col]
            ep, em = mg["E+"][row][col], mg["E-"][row][col]
            if fp or fm:
                bm[row][col] = (eta * fp + inv * fm) * den
            if ep or em:
                b1[row][col] = (inv * ep + eta * em) * den
    mats = {
        "B-1": bm,
        "B0": diagonal([qbracket(m, b - a) for a, b in basis]),
        "B1": b1,
        "Dd": diagonal([q(hw.kd - a - b) for a, b in basis]),
        "D1": diagonal([q(hw.k1 + a + b) for a, b in basis]),
    }
    return IrreducibleModule(hw, i, basis, mats)


# ---------------------------------------------------------------------------
# BGG resolution
# ---------------------------------------------------------------------------


@dataclass
class BGGData:
    hw: HighestWeight
    i: int
    left: HighestWeight
    middle: tuple[HighestWeight, HighestWeight]
    images: dict[str, tuple[int, int]]

    def to_dict(self) -> dict:
        return {
            "hw": self.hw.to_dict(),
            "i": self.i,
            "left": self.left.to_dict(),
            "middle": [m.to_dict() for m in self.middle],
            "images": {k: list(v) for k, v in self.images.items()},
        }

    def euler_check(self, levels: int) -> bool:
        """Alternating sum of Verma characters equals the character of L up to a depth.

        Characters are graded by the Dd-exponent; a Verma module with
        parameter ``kd`` has ``N + 1`` basis vectors at exponent ``kd - N``.
        """
        k, i = self.hw.kappa, self.i
        top = self.hw.kd

        def verma(kd: int, n: int) -> int:
            lvl = kd - n
            return lvl + 1 if lvl >= 0 else 0

        for n in range(levels + 1):
            e = top - n
            lhs = verma(top, e) - verma(self.middle[0].kd, e) - verma(self.middle[1].kd, e) + verma(self.left.kd, e)
            rhs = sum(1 for a in range(i + 1) for b in range(k - i + 1) if a + b == n)
            if lhs != rhs:
                return False
        return True


def bgg_resolution(hw: HighestWeight) -> BGGData:
    """Parameters of the BGG-type resolution of the irreducible quotient of ``M(hw)``."""
    if not hw.good:
        raise ValueError("BGG data needs a good Verma module")
    i = dominance_index(hw)
    if i is None:
        raise ValueError("highest weight is not dominant")
    k = hw.kappa
    m1 = source_weight(hw, 1, i)
    m2 = source_weight(hw, 2, k - i)
    left = source_weight(hw, 3, i)
    images = {"middle_1": hom_image(hw, 1, i), "middle_2": hom_image(hw, 2, k - i), "left": hom_image(hw, 3, i)}
    return BGGData(hw, i, left, (m1, m2), images)


# ---------------------------------------------------------------------------
# irreducible quotients by rank, exceptional probes
# ---------------------------------------------------------------------------


def level_basis(n: int) -> list[Key]:
    return [(n - y, y) for y in range(n + 1)]


def _raising_matrix(hw: HighestWeight, op: Operator, n: int) -> Matrix:
    """Matrix of ``op`` from level n to level n-1 in the (f, y) bases."""
    src, dst = level_basis(n), level_basis(n - 1)
    pos = {k: r for r, k in enumerate(dst)}
    out = zeros(len(dst), len(src))
    for col, key in enumerate(src):
        img = verma_act(hw, op, VermaVector.basis(*key))
        for k2, c in img.coeffs.items():
            out[pos[k2]][col] = c
    return out


def quotient_level_dims(hw: HighestWeight, depth: int, stop_at_zero: bool = True) -> list[int]:
    """Dimensions of the irreducible quotient of ``M(hw)`` at levels 0..depth.

    A vector at level n lies in the maximal submodule iff B1 and X send it
    into the maximal submodule at level n-1; the quotient at level n is the
    image of the stacked map into the quotient at level n-1.
    """
    dims = [1]
    proj: Matrix = [[ONE]]  # rows: coordinates on the quotient at the current level
    for n in range(1, depth + 1):
        if dims[-1] == 0:
            dims.append(0)
            continue
        stacked = matmul(proj, _raising_matrix(hw, G.B1, n)) + matmul(proj, _raising_matrix(hw, "X", n))
        rows, _ = row_echelon(stacked)
        proj = rows
        dims.append(len(rows))
        if stop_at_zero and not rows:
            break
    return dims


def sl2_character(dims: Sequence[int], kappa: int) -> list[int] | None:
    """U_q(sl2)-character ``[kappa+1-2N]`` multiplicities from level dimensions.

    Returns the list of irreducible dimensions (with repetition), or None if the
    level dimensions are not those of a finite-dimensional module.
    """
    d = list(dims)
    while d and d[-1] == 0:
        d.pop()
    if not d or len(d) != kappa + 1:
        return None
    if d != d[::-1]:
        return None
    out: list[int] = []
    prev = 0
    for n in range(kappa // 2 + 1):
        mult = d[n] - prev
        if mult < 0:
            return None
        out += [kappa + 1 - 2 * n] * mult
        prev = d[n]
    return out


def exceptional_candidates(kappa: int, n: int) -> list[tuple[int, Scalar]]:
    """``(j, zeta_j)`` with ``zeta_j = i (q^(n-j)[kappa-j] + q^(j-kappa-n)[j])``, 0 <= j <= kappa."""
    i = iota()
    return [(j, i * (q(n - j) * qint(kappa - j) + q(j - kappa - n) * qint(j))) for j in range(kappa + 1)]


@dataclass
class ProbeResult:
    zeta: Scalar
    j: int | None
    status: str  # "finite", "infinite-so-far"
    dims: list[int]
    character: list[int] | None
    label: str = "experimental"

    def to_dict(self) -> dict:
        return {
            "zeta": str(self.zeta),
            "j": self.j,
            "status": self.status,
            "level_dims": self.dims,
            "character": self.character,
            "label": self.label,
        }


def default_depth(kappa: int) -> int:
    env = os.environ.get("QSP_MAX_DEPTH")
    if env:
        return int(env)
    return kappa + 1


def exceptional_probe(
    kappa: int,
    n: int,
    depth: int | None = None,
    r: int = 0,
    zetas: Sequence[ScalarLike] | None = None,
) -> list[ProbeResult]:
    """Irreducible quotients of ``M(r+kappa, r, [i q^n;0], zeta)`` for candidate zetas.

    The quotient is computed level by level up to ``depth`` (default
    ``kappa + 1`` or ``QSP_MAX_DEPTH``).  A result is ``finite`` when a level of
    dimension zero is reached, and ``inconclusive`` otherwise.  The output is
    experimental: it is a bounded search, not a proof.
    """
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    depth = default_depth(kappa) if depth is None else depth
    m = iota() * q(n)
    if zetas is None:
        cands: list[tuple[int | None, Scalar]] = list(exceptional_candidates(kappa, n))
    else:
        cands = [(None, as_scalar(z)) for z in zetas]
    out = []
    for j, z in cands:
        hw = HighestWeight.from_mu(r + kappa, r, m, z)
        dims = quotient_level_dims(hw, depth)
        finite = dims[-1] == 0
        char = sl2_character(dims, kappa) if finite else None
        out.append(ProbeResult(z, j, "finite" if finite else "inconclusive", dims, char))
    return out


# ---------------------------------------------------------------------------
# diagonalizability of B0
# ---------------------------------------------------------------------------


def b0_jordan_check(hw: HighestWeight, level: int) -> dict:
    """Minimal polynomial of B0 on each level ``f + y = N`` for ``N <= level``.

    B0 preserves each level.  It is diagonalizable (over an algebraic closure)
    exactly when each minimal polynomial is squarefree; the repeated part is
    reported as ``gcd(m, m')``.
    """
    report = {"levels": [], "diagonalizable": True}
    for n in range(level + 1):
        basis = level_basis(n)
        pos = {k: r for r, k in enumerate(basis)}
        mat = zeros(len(basis), len(basis))
        for col, key in enumerate(basis):
            img = verma_act(hw, G.B0, VermaVector.basis(*key))
            for k2, c in img.coeffs.items():
                mat[pos[k2]][col] = c
        mp = minimal_polynomial(mat)
        sq = mp.gcd(mp.derivative()) if mp.degree > 0 else Poly([ONE])
        diag = sq.degree == 0
        report["levels"].append(
            {
                "level": n,
                "matrix": mat,
                "minimal_polynomial": mp,
                "square_factor": sq,
                "diagonalizable": diag,
            }
        )
        report["diagonalizable"] = report["diagonalizable"] and diag
    return report
