"""End-to-end acceptance checks.

Each criterion prints one line ``[PASS]`` or ``[FAIL]`` with its runtime and
time limit.  Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qsp.center import (  # noqa: E402
    central_character,
    central_elements,
    character_from_matrices,
    embed_extended,
    hc_c2_expected,
    hc_project,
    is_central,
    w_gl2,
    w_s,
    weight_to_hw,
    weyl_hom_test,
    weyl_orbit,
)
from qsp.coideal import PBWElement, PBWIndex, act, act_sequence, comm, monomial_ops, normal_form  # noqa: E402
from qsp.qfield import iota, q, qint  # noqa: E402
from qsp.relations import defining_relations, run_suite  # noqa: E402
from qsp.tensor import (  # noqa: E402
    HeckeWord,
    TensorVector,
    bipartitions,
    clebsch_gordan,
    coideal_act,
    decompose,
    h_m_check,
    hecke_act,
    jm_spectrum,
    wedge_factors,
)
from qsp.verma import (  # noqa: E402
    HighestWeight,
    closed_weight,
    dominant_zeta,
    exceptional_probe,
    f_vector,
    fd_quotient,
    hom_exists,
    measure_weight,
    weight_table,
    weights_distinct,
)


def _fail(messages: list[str], label: str) -> None:
    if len(messages) < 6:
        messages.append(label)


# ---------------------------------------------------------------- 1


def criterion_1():
    bad: list[str] = []
    for name in ("presentation", "serre", "d-relations", "ef"):
        for label, ok in run_suite(name):
            if not ok:
                _fail(bad, f"{name}: {label}")
    return not bad, bad


# ---------------------------------------------------------------- 2


def criterion_2():
    bad: list[str] = []
    for label, rel in defining_relations():
        rng = random.Random(label)
        for _ in range(50):
            idx = tuple(rng.randint(0, 4) for _ in range(6)) + tuple(rng.randint(-4, 4) for _ in range(2))
            if not act(rel, {idx: 1}).is_zero():
                _fail(bad, f"{label} at {idx}")
    return not bad, bad


# ---------------------------------------------------------------- 3


def criterion_3():
    bad = [label for label, ok in run_suite("cartan") if not ok]
    return not bad, bad


# ---------------------------------------------------------------- 4


def criterion_4():
    rng = random.Random(4)
    bad: list[str] = []
    for _ in range(100):
        idx = PBWIndex(*[rng.randint(0, 4) for _ in range(6)], *[rng.randint(-4, 4) for _ in range(2)])
        vec = act_sequence(monomial_ops(idx), {tuple(PBWIndex()): q(0)})
        if PBWElement(vec) != PBWElement.monomial(1, **idx._asdict()):
            _fail(bad, str(tuple(idx)))
    return not bad, bad


# ---------------------------------------------------------------- 5


def criterion_5():
    bad: list[str] = []
    for m in range(4):
        for kappa in range(5):
            zetas = [dominant_zeta(q(m), kappa, i) for i in range(kappa + 1)] + [q(7) + 1]
            for z in zetas:
                hw = HighestWeight.from_mu(kappa, 0, q(m), z)
                table = weight_table(hw, 5, 5)
                if not weights_distinct(table):
                    _fail(bad, f"repeated weights for {hw}")
                for (a, b), w in table:
                    if w != closed_weight(hw, a, b) or measure_weight(hw, f_vector(hw, a, b)) != w:
                        _fail(bad, f"{hw} at F+^{a} F-^{b}")
    return not bad, bad


# ---------------------------------------------------------------- 6


def criterion_6():
    bad: list[str] = []
    for kappa in range(5):
        for n in range(-2, 3):
            for i in range(kappa + 1):
                hw = HighestWeight.from_mu(kappa, 0, q(n), dominant_zeta(q(n), kappa, i))
                mod = fd_quotient(hw)
                if mod is None or mod.dim != (i + 1) * (kappa - i + 1) or mod.relation_failures():
                    _fail(bad, f"kappa={kappa} n={n} i={i}")
            # zeta outside the dominant family
            if fd_quotient(HighestWeight.from_mu(kappa, 0, q(n), q(7) + 1)) is not None:
                _fail(bad, f"non-dominant zeta gave a quotient (kappa={kappa}, n={n})")
    return not bad, bad


# ---------------------------------------------------------------- 7

EXCEPTIONAL_TABLES = {
    3: [[4], [4, 2], [4, 2], [4]],
    4: [[5], [5, 3], [5, 3, 1], [5, 3], [5]],
}


def criterion_7():
    bad: list[str] = []
    I = iota()
    for n in range(3):
        res = exceptional_probe(2, n, zetas=[I * q(-1) * (q(n) + q(-n)), I * q(-1) * qint(2)])
        if res[0].character != [3, 1]:
            _fail(bad, f"kappa=2 n={n}: i q^-1 (q^n + q^-n) gave {res[0].character}")
        if res[1].character != [3]:
            _fail(bad, f"kappa=2 n={n}: i q^-1 [2] gave {res[1].character}")
        for kappa, table in EXCEPTIONAL_TABLES.items():
            got = [r.character for r in exceptional_probe(kappa, n)]
            for j, (want, have) in enumerate(zip(table, got)):
                if want != have:
                    _fail(bad, f"kappa={kappa} n={n} j={j}: want {want}, got {have}")
    return not bad, bad


# ---------------------------------------------------------------- 8

SPECIAL_WEDGE_SPECTRUM = [q(0), q(2), q(-2), q(0), -q(0), -q(2), -q(2), -q(0), q(4), q(2)]


def criterion_8():
    bad: list[str] = []
    for d in range(5):
        out = decompose(d)
        if sum(s.dim_l * s.dim_specht for s in out) != 4**d:
            _fail(bad, f"dimension count d={d}")
        for s in out:
            if not (s.maximal and s.weight_ok and s.jm_ok):
                _fail(bad, f"certificate for {s.bp}")
    measured = jm_spectrum(wedge_factors("++--+"))
    if measured != SPECIAL_WEDGE_SPECTRUM:
        _fail(bad, "special wedge spectrum: measured " + ",".join(str(x) for x in measured))
    for d in range(1, 4):
        for v in TensorVector.all_basis(d):
            for g in ("B1", "B-1", "B0", "Dd", "D1"):
                for i in range(d):
                    if coideal_act(g, hecke_act(i, v)) != hecke_act(i, coideal_act(g, v)):
                        _fail(bad, f"bimodule d={d} {g} H{i}")
    return not bad, bad


# ---------------------------------------------------------------- 9


def _same_operator(d, lhs, rhs):
    return all(hecke_act(lhs, v) == hecke_act(rhs, v) for v in TensorVector.all_basis(d))


def criterion_9():
    bad: list[str] = []
    H, one = HeckeWord.gen, HeckeWord.one()
    for d in range(1, 5):
        checks = [("H0^2 = 1", H(0) * H(0), one)]
        checks += [(f"quadratic H{i}", (H(i) - one * q(-1)) * (H(i) + one * q(1)), HeckeWord()) for i in range(1, d)]
        if d >= 2:
            checks.append(("type B braid", HeckeWord.word(0, 1, 0, 1), HeckeWord.word(1, 0, 1, 0)))
        checks += [
            (f"braid {i}", HeckeWord.word(i, i + 1, i), HeckeWord.word(i + 1, i, i + 1)) for i in range(1, d - 1)
        ]
        checks += [
            (f"H{i} H{j} commute", HeckeWord.word(i, j), HeckeWord.word(j, i))
            for i, j in itertools.combinations(range(d), 2)
            if j - i >= 2
        ]
        for label, lhs, rhs in checks:
            if not _same_operator(d, lhs, rhs):
                _fail(bad, f"d={d}: {label}")
    for m in range(3):
        if not h_m_check(m):
            _fail(bad, f"h_m identity at m={m}")
    return not bad, bad


# ---------------------------------------------------------------- 10


def criterion_10():
    bad = [str(bp) for d in range(4) for bp in bipartitions(d) if not clebsch_gordan(bp).ok]
    return not bad, bad


# ---------------------------------------------------------------- 11


def criterion_11():
    bad: list[str] = []
    ces = central_elements()
    for ce in ces:
        if not is_central(ce):
            _fail(bad, f"{ce.name} not central")
    for a, b in itertools.combinations(ces, 2):
        if not normal_form(comm(a.body, b.body)).is_zero():
            _fail(bad, f"[{a.name}, {b.name}] != 0")
    seen = set()
    for d in range(5):
        for bp in bipartitions(d):
            chi = central_character(bp)
            if chi != character_from_matrices(bp):
                _fail(bad, f"character of {bp}")
            if chi.values() in seen:
                _fail(bad, f"character of {bp} repeated")
            seen.add(chi.values())
    for ce in ces:
        xi = hc_project(ce)
        if w_gl2(xi) != xi:
            _fail(bad, f"W_gl2 moves xi({ce.name})")
        ext = embed_extended(xi)
        if w_s(ext) != ext:
            _fail(bad, f"W_s moves xi({ce.name})")
    if hc_project(ces[3]) != hc_c2_expected():
        _fail(bad, "xi(C2)")
    return not bad, bad


# ---------------------------------------------------------------- 12


def _grid():
    rng = random.Random(12)
    cases = []
    pairs = [(a, b) for a in range(-2, 3) for b in range(-2, 3)]
    while len(cases) < 200:
        dst = (rng.choice(pairs), rng.choice(pairs))
        if len(cases) % 2 == 0:
            src = rng.choice(weyl_orbit(*dst))
        else:
            src = (rng.choice(pairs), rng.choice(pairs))
        cases.append((src, dst))
    return cases


def criterion_12():
    bad: list[str] = []
    for src, dst in _grid():
        want = hom_exists(weight_to_hw(src), weight_to_hw(dst)) is not None
        if weyl_hom_test(src, dst) != want:
            _fail(bad, f"{src} -> {dst}")
    return not bad, bad


CRITERIA = [
    (1, "presentation suite", 5, criterion_1),
    (2, "representation P axioms", 30, criterion_2),
    (3, "Cartan commutativity", 10, criterion_3),
    (4, "PBW reconstruction", 30, criterion_4),
    (5, "good Verma weight basis", 60, criterion_5),
    (6, "finite-dimensional quotients", 60, criterion_6),
    (7, "exceptional tables", 120, criterion_7),
    (8, "tensor decomposition", 180, criterion_8),
    (9, "Hecke relations and h_m", 60, criterion_9),
    (10, "Clebsch-Gordan", 120, criterion_10),
    (11, "center", 60, criterion_11),
    (12, "Weyl orbit homs", 60, criterion_12),
]


def run_criterion(number, title, limit, fn):
    start = time.perf_counter()
    ok, details = fn()
    elapsed = time.perf_counter() - start
    passed = ok and elapsed < limit
    line = f"[{'PASS' if passed else 'FAIL'}] {number:2d} {title}: {elapsed:.1f} s (limit {limit} s)"
    if not ok:
        line += " -- " + "; ".join(details)
    elif elapsed >= limit:
        line += " -- over time"
    return passed, line


@pytest.mark.parametrize("number,title,limit,fn", CRITERIA, ids=[f"{c[0]:02d}-{c[1].replace(' ', '-')}" for c in CRITERIA])
def test_acceptance(number, title, limit, fn, capsys):
    passed, line = run_criterion(number, title, limit, fn)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
