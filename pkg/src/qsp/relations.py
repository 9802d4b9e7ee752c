"""Named identity suites for U_q'.

Each suite is a list of ``(label, element)`` pairs; an identity ``lhs = rhs`` is
stored as ``lhs - rhs`` so it holds iff the element normalizes to zero.
"""

from __future__ import annotations

from .coideal import ALIASES, Element, Generator, check_identity, comm, khat_bracket
from .qfield import ScalarLike, as_scalar, mu, q, qint

G = Generator

__all__ = ["SUITES", "suite", "run_suite", "defining_relations", "magical_F", "magical_E"]


def _gens():
    return (
        Element.gen(G.Bminus1),
        Element.gen(G.B0),
        Element.gen(G.B1),
        Element.gen(G.Dd),
        Element.gen(G.DdInv),
        Element.gen(G.D1),
        Element.gen(G.D1Inv),
    )


def d_relations() -> list[tuple[str, Element]]:
    Bm, B0, B1, Dd, Ddi, D1, D1i = _gens()
    one = Element.one()
    return [
        ("Dd Dd^-1 = 1", Dd * Ddi - one),
        ("Dd^-1 Dd = 1", Ddi * Dd - one),
        ("D1 D1^-1 = 1", D1 * D1i - one),
        ("D1^-1 D1 = 1", D1i * D1 - one),
        ("[Dd, D1] = 0", comm(Dd, D1)),
        ("Dd B1 = q B1 Dd", Dd * B1 - q(1) * (B1 * Dd)),
        ("Dd B-1 = q^-1 B-1 Dd", Dd * Bm - q(-1) * (Bm * Dd)),
        ("D1 B1 = q^-1 B1 D1", D1 * B1 - q(-1) * (B1 * D1)),
        ("D1 B-1 = q B-1 D1", D1 * Bm - q(1) * (Bm * D1)),
        ("[B0, Dd] = 0", comm(B0, Dd)),
        ("[B0, D1] = 0", comm(B0, D1)),
    ]


def ef_relation() -> list[tuple[str, Element]]:
    Bm, B0, B1, *_ = _gens()
    return [("B1 B-1 - B-1 B1 = [Khat;0]", comm(B1, Bm) - khat_bracket(0))]


def serre_relations() -> list[tuple[str, Element]]:
    Bm, B0, B1, *_ = _gens()
    two = qint(2)
    out = []
    for name, B in (("B1", B1), ("B-1", Bm)):
        out.append((f"B0^2 {name} - [2] B0 {name} B0 + {name} B0^2 = {name}",
                    B0 * B0 * B - two * (B0 * B * B0) + B * B0 * B0 - B))
        out.append((f"{name}^2 B0 - [2] {name} B0 {name} + B0 {name}^2 = 0",
                    B * B * B0 - two * (B * B0 * B) + B0 * B * B))
    return out


def defining_relations() -> list[tuple[str, Element]]:
    """Every defining relation of the presentation in B_{-1}, B_0, B_1 and the D-hats."""
    return d_relations() + ef_relation() + serre_relations()


def cartan_relations() -> list[tuple[str, Element]]:
    Bm, B0, B1, Dd, Ddi, D1, D1i = _gens()
    Z, W = ALIASES["Z"], ALIASES["W"]
    out = [
        ("[Dd, D1] = 0", comm(Dd, D1)),
        ("[B0, Dd] = 0", comm(B0, Dd)),
        ("[B0, D1] = 0", comm(B0, D1)),
        ("[Z, B0] = 0", comm(Z, B0)),
        ("[Dd, Z] = 0", comm(Dd, Z)),
        ("[D1, Z] = 0", comm(D1, Z)),
        ("[W, Dd] = 0", comm(W, Dd)),
        ("[W, D1] = 0", comm(W, D1)),
        ("[W, B0] = 0", comm(W, B0)),
        ("[Z, W] = 0", comm(Z, W)),
    ]
    return out + [z_in_w()]


def z_in_w() -> tuple[str, Element]:
    Bm, B0, B1, *_ = _gens()
    X, Y, Z, W = (ALIASES[k] for k in "XYZW")
    qq = q(1) - q(-1)
    rhs = (q(-2) * Z - (q(-2) * qq) * (khat_bracket(0) * B0)
           - (q(-2) - 1) * (Bm * X) - (q(-2) * qq) * (Y * B1))
    return ("W = q^-2 Z - q^-2(q-q^-1)[Khat;0]B0 - (q^-2-1)B-1 X - q^-2(q-q^-1) Y B1", W - rhs)


def commutation_lemma() -> list[tuple[str, Element]]:
    Bm, B0, B1, *_ = _gens()
    X, Y, K = ALIASES["X"], ALIASES["Y"], ALIASES["Khat"]
    return [
        ("B1 X = q^-1 X B1", B1 * X - q(-1) * (X * B1)),
        ("B-1 Y = q^-1 Y B-1", Bm * Y - q(-1) * (Y * Bm)),
        ("[B0, X]_q = B1", comm(B0, X, q(1)) - B1),
        ("[B0, Y]_q = B-1", comm(B0, Y, q(1)) - Bm),
        ("[X, Y] = -q^-1 [Khat;0]", comm(X, Y) + q(-1) * khat_bracket(0)),
        ("Khat X = q^2 X Khat", K * X - q(2) * (X * K)),
        ("Khat Y = q^-2 Y Khat", K * Y - q(-2) * (Y * K)),
    ]


def easy_commutations() -> list[tuple[str, Element]]:
    Bm, B0, B1, Dd, Ddi, D1, D1i = _gens()
    X, Y, K = ALIASES["X"], ALIASES["Y"], ALIASES["Khat"]
    return [
        ("Dd B1 = q B1 Dd", Dd * B1 - q(1) * (B1 * Dd)),
        ("Dd B-1 = q^-1 B-1 Dd", Dd * Bm - q(-1) * (Bm * Dd)),
        ("D1 B1 = q^-1 B1 D1", D1 * B1 - q(-1) * (B1 * D1)),
        ("D1 B-1 = q B-1 D1", D1 * Bm - q(1) * (Bm * D1)),
        ("Dd X = q X Dd", Dd * X - q(1) * (X * Dd)),
        ("Dd Y = q^-1 Y Dd", Dd * Y - q(-1) * (Y * Dd)),
        ("D1 Y = q Y D1", D1 * Y - q(1) * (Y * D1)),
        ("D1 X = q^-1 X D1", D1 * X - q(-1) * (X * D1)),
        ("Khat B1 = q^2 B1 Khat", K * B1 - q(2) * (B1 * K)),
        ("Khat B-1 = q^-2 B-1 Khat", K * Bm - q(-2) * (Bm * K)),
        ("Khat X = q^2 X Khat", K * X - q(2) * (X * K)),
        ("Khat Y = q^-2 Y Khat", K * Y - q(-2) * (Y * K)),
    ]


def mpi_relations() -> list[tuple[str, Element]]:
    Bm, B0, B1, *_ = _gens()
    X, Y, Z, W = (ALIASES[k] for k in "XYZW")
    K, Ki = ALIASES["Khat"], ALIASES["KhatInv"]
    two = qint(2)
    return [
        ("[B-1, Z]_{q^-1} = q^-2[2] Khat^-1 Y", comm(Bm, Z, q(-1)) - (q(-2) * two) * (Ki * Y)),
        ("[Z, B1]_{q^-1} = -q^-3[2] X Khat^-1 + (q^-1-q^-5) B1 B0 Khat^-1",
         comm(Z, B1, q(-1)) + (q(-3) * two) * (X * Ki) - (q(-1) - q(-5)) * (B1 * B0 * Ki)),
        ("[X, Z]_q = [2] Khat^-1 B1", comm(X, Z, q(1)) - two * (Ki * B1)),
        ("[Z, Y]_q = -q[2] B-1 Khat^-1 - (q^3-q^-1) Y B0 Khat^-1",
         comm(Z, Y, q(1)) + (q(1) * two) * (Bm * Ki) + (q(3) - q(-1)) * (Y * B0 * Ki)),
        ("[B1, W]_{q^-1} = q^-2[2] Khat X", comm(B1, W, q(-1)) - (q(-2) * two) * (K * X)),
        ("[B-1, W]_q = q^-2[2] Y Khat - (1-q^-4) B-1 B0 Khat",
         comm(Bm, W, q(1)) - (q(-2) * two) * (Y * K) + (1 - q(-4)) * (Bm * B0 * K)),
        ("[Y, W]_q = [2] Khat B-1", comm(Y, W, q(1)) - two * (K * Bm)),
        ("[X, W]_{q^-1} = q^-4[2] Khat B1 + (q^-1-q^-5) B0 Khat X",
         comm(X, W, q(-1)) - (q(-4) * two) * (K * B1) - (q(-1) - q(-5)) * (B0 * K * X)),
        z_in_w(),
    ]


def magical_E(sign: int, eta: ScalarLike) -> Element:
    """E_+(eta) = B1 + eta X and E_-(eta) = B1 - eta^-1 X."""
    eta = as_scalar(eta)
    B1, X = Element.gen(G.B1), ALIASES["X"]
    return B1 + eta * X if sign > 0 else B1 - eta.inverse() * X


def magical_F(sign: int, eta: ScalarLike) -> Element:
    """F_+(eta) = B-1 - eta^-1 Y and F_-(eta) = B-1 + eta Y."""
    eta = as_scalar(eta)
    Bm, Y = Element.gen(G.Bminus1), ALIASES["Y"]
    return Bm - eta.inverse() * Y if sign > 0 else Bm + eta * Y


def magical_khat() -> list[tuple[str, Element]]:
    """F_pm Khat = q^2 Khat F_pm and E_pm Khat = q^-2 Khat E_pm with symbolic eta."""
    K = ALIASES["Khat"]
    eta = mu()
    out = []
    for s, name in ((1, "+"), (-1, "-")):
        F = magical_F(s, eta)
        E = magical_E(s, eta)
        out.append((f"F_{name}(eta) Khat = q^2 Khat F_{name}(eta)", F * K - q(2) * (K * F)))
        out.append((f"E_{name}(eta) Khat = q^-2 Khat E_{name}(eta)", E * K - q(-2) * (K * E)))
    return out


SUITES = {
    "presentation": defining_relations,
    "serre": serre_relations,
    "d-relations": d_relations,
    "ef": ef_relation,
    "cartan": cartan_relations,
    "commutation": commutation_lemma,
    "easy": easy_commutations,
    "mpi": mpi_relations,
    "magical": magical_khat,
}


def suite(name: str) -> list[tuple[str, Element]]:
    try:
        return SUITES[name]()
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None


def run_suite(name: str) -> list[tuple[str, bool]]:
    return [(label, check_identity(el)) for label, el in suite(name)]
