"""Small exact linear algebra over the Scalar field.

Matrices are lists of rows of Scalars.  Everything here is plain Gaussian
elimination; sizes stay in the tens at most.
"""

from __future__ import annotations

from typing import Sequence

from .qfield import ONE, ZERO, Scalar, ScalarLike, as_scalar

Matrix = list[list[Scalar]]

__all__ = [
    "Matrix",
    "zeros",
    "identity",
    "diagonal",
    "matmul",
    "matadd",
    "matscale",
    "is_zero_matrix",
    "mat_eq",
    "row_echelon",
    "rank",
    "nullspace",
    "minimal_polynomial",
    "Poly",
]


def zeros(r: int, c: int) -> Matrix:
    return [[ZERO] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def diagonal(entries: Sequence[ScalarLike]) -> Matrix:
    n = len(entries)
    out = zeros(n, n)
    for i, e in enumerate(entries):
        out[i][i] = as_scalar(e)
    return out


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        acc = out[i]
        for k in range(inner):
            c = row[k]
            if not c:
                continue
            brow = b[k]
            for j in range(cols):
                if brow[j]:
                    acc[j] = acc[j] + c * brow[j]
    return out


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(c: ScalarLike, a: Matrix) -> Matrix:
    c = as_scalar(c)
    return [[c * x for x in row] for row in a]


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def row_echelon(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (input is not modified)."""
    m = [list(row) for row in a]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(row_echelon(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> Matrix:
    """Basis of ``{v : a v = 0}`` as a list of column vectors (given as lists)."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    rref, piv = row_echelon(a)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fcol in free:
        v = [ZERO] * n
        v[fcol] = ONE
        for row, pc in zip(rref, piv):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


class Poly:
    """Univariate polynomial over the Scalar field, coefficients low degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence[ScalarLike]):
        c = [as_scalar(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = c

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def monic(self) -> "Poly":
        inv = self.c[-1].inverse()
        return Poly([x * inv for x in self.c])

    def derivative(self) -> "Poly":
        return Poly([x * k for k, x in enumerate(self.c)][1:])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        r = list(self.c)
        d = other.c
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        quo = [ZERO] * max(len(r) - len(d) + 1, 0)
        inv = d[-1].inverse()
        while len(r) >= len(d) and r:
            f = r[-1] * inv
            shift = len(r) - len(d)
            quo[shift] = f
            for k, x in enumerate(d):
                r[shift + k] = r[shift + k] - f * x
            r.pop()
            while r and not r[-1]:
                r.pop()
        return Poly(quo), Poly(r)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and len(self.c) == len(other.c) and all(
            x == y for x, y in zip(self.c, other.c)
        )

    def __str__(self) -> str:
        parts = []
        for k, x in enumerate(self.c):
            if not x:
                continue
            mon = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"({x})*{mon}" if mon else f"({x})")
        return " + ".join(reversed(parts)) or "0"


def minimal_polynomial(a: Matrix) -> Poly:
    """Minimal polynomial of a square matrix, found from powers of ``a``."""
    n = len(a)
    if n == 0:
        return Poly([ONE])
    powers = [identity(n)]
    while True:
        k = len(powers)
        nxt = matmul(powers[-1], a)
        # homogeneous system  sum_j c_j A^j - A^k = 0  in the unknowns (c, 1)
        cols = [[x for row in p for x in row] for p in powers]
        target = [x for row in nxt for x in row]
        aug = [[col[r] for col in cols] + [-target[r]] for r in range(n * n)]
        rref, piv = row_echelon(aug)
        if k not in piv:
            coeffs = [ZERO] * k
            for row, pc in zip(rref, piv):
                coeffs[pc] = row[k]
            return Poly(coeffs + [ONE])
        powers.append(nxt)
