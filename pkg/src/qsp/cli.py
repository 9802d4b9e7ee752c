"""Command-line front end.

Exit codes: 0 when everything requested was computed and verified, 1 when a
verification failed, 2 for usage and parse errors.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Sequence

import click

from .parser import ParseError, parse_element, parse_scalar
from .qfield import Scalar, iota, q

__all__ = ["main", "run", "parse_partition", "parse_mu_spec", "parse_zeta_spec"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# ---------------------------------------------------------------------------
# option parsing helpers
# ---------------------------------------------------------------------------


def parse_partition(text: str) -> tuple[int, int]:
    """``"2,1"`` -> (2, 1); ``"3"`` -> (3, 0); ``""`` or ``"-"`` -> (0, 0)."""
    text = text.strip()
    if text in ("", "-", "()", "0"):
        return (0, 0)
    parts = [p.strip() for p in text.strip("()").split(",") if p.strip()]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise click.BadParameter(f"{text!r} is not a partition") from None
    if len(vals) > 2:
        raise click.BadParameter(f"{text!r} has more than two rows")
    vals += [0] * (2 - len(vals))
    if vals[0] < vals[1] or vals[1] < 0:
        raise click.BadParameter(f"{text!r} is not a partition")
    return vals[0], vals[1]


def _parse_scalar_option(text: str, what: str) -> Scalar:
    try:
        return parse_scalar(text)
    except ParseError as e:
        raise click.BadParameter(f"{what}: {e.message} at position {e.pos}\n{e.pointer()}") from None


def parse_mu_spec(text: str) -> Scalar:
    """``q^n``, ``i*q^n`` or ``mu`` (or any scalar expression)."""
    return _parse_scalar_option(text, "mu-spec")


def parse_zeta_spec(text: str, mu: Scalar, kappa: int) -> Scalar:
    """``dominant:i`` or a scalar expression."""
    from .verma import dominant_zeta

    if text.startswith("dominant:"):
        try:
            i = int(text.split(":", 1)[1])
        except ValueError:
            raise click.BadParameter(f"{text!r}: expected dominant:<integer>") from None
        if not 0 <= i <= kappa:
            raise click.BadParameter(f"{text!r}: need 0 <= i <= kappa = {kappa}")
        return dominant_zeta(mu, kappa, i)
    return _parse_scalar_option(text, "zeta-spec")


def _emit(data: Any, as_json: bool, text: str) -> None:
    if as_json:
        click.echo(json.dumps(data, indent=2, sort_keys=True))
    else:
        click.echo(text)


def _bipartition(lam: str, mu: str):
    from .tensor import Bipartition

    return Bipartition(parse_partition(lam), parse_partition(mu))


json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text.")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Exact computations in the coideal subalgebra U_q' and its representations."""


@main.command()
@click.argument("expression")
@json_option
def nf(expression: str, as_json: bool) -> None:
    """PBW normal form of EXPRESSION, e.g. "B0*B1"."""
    from .coideal import normal_form, render_index

    try:
        el = parse_element(expression)
    except ParseError as e:
        click.echo(f"parse error: {e.message} at position {e.pos}\n{e.pointer()}", err=True)
        sys.exit(EXIT_USAGE)
    pbw = normal_form(el)
    data = {
        "input": expression,
        "normal_form": str(pbw),
        "terms": [{"index": render_index(k), "coeff": str(c)} for k, c in sorted(pbw.coeffs.items(), reverse=True)],
    }
    _emit(data, as_json, str(pbw))


@main.command()
@click.argument("suite_name", metavar="SUITE")
@json_option
def relcheck(suite_name: str, as_json: bool) -> None:
    """Check a named suite of identities (presentation, serre, cartan, ...)."""
    from .relations import SUITES, run_suite

    if suite_name not in SUITES:
        raise click.BadParameter(f"unknown suite {suite_name!r}; choose from {', '.join(sorted(SUITES))}")
    results = run_suite(suite_name)
    ok = all(r for _, r in results)
    lines = [f"{'PASS' if r else 'FAIL'}  {label}" for label, r in results]
    lines.append(f"{sum(r for _, r in results)}/{len(results)} passed")
    _emit({"suite": suite_name, "ok": ok, "results": [{"name": n, "ok": r} for n, r in results]}, as_json, "\n".join(lines))
    sys.exit(EXIT_OK if ok else EXIT_FAIL)


@main.command()
@click.option("--kd", type=int, required=True, help="Dd-exponent of the highest weight.")
@click.option("--k1", type=int, required=True, help="D1-exponent of the highest weight.")
@click.option("--mu", "mu_spec", required=True, help="q^n, i*q^n, mu, or a scalar expression.")
@click.option("--zeta", "zeta_spec", required=True, help="dominant:i or a scalar expression.")
@click.option("--table", nargs=2, type=int, default=None, metavar="A B", help="Weight table up to F+^A F-^B.")
@click.option("--fd", is_flag=True, help="Finite-dimensional quotient.")
@click.option("--bgg", is_flag=True, help="BGG resolution data.")
@json_option
def verma(kd: int, k1: int, mu_spec: str, zeta_spec: str, table, fd: bool, bgg: bool, as_json: bool) -> None:
    """Weight tables, finite-dimensional quotients and BGG data of a Verma module."""
    from .verma import HighestWeight, bgg_resolution, fd_quotient, weight_table

    m = parse_mu_spec(mu_spec)
    z = parse_zeta_spec(zeta_spec, m, kd - k1)
    hw = HighestWeight.from_mu(kd, k1, m, z)
    data: dict[str, Any] = {"hw": hw.to_dict()}
    lines = [str(hw)]
    status = EXIT_OK
    needs_good = table is not None or fd or bgg
    if needs_good and not hw.good:
        click.echo("weight tables, quotients and BGG data need a good Verma module", err=True)
        sys.exit(EXIT_USAGE)
    if table is not None:
        rows = weight_table(hw, *table)
        data["weights"] = [{"a": a, "b": b, **w.to_dict()} for (a, b), w in rows]
        lines += [f"F+^{a} F-^{b} v: " + ", ".join(f"{k}={v}" for k, v in w.to_dict().items()) for (a, b), w in rows]
    if fd:
        mod = fd_quotient(hw)
        if mod is None:
            data["fd_quotient"] = None
            lines.append("no finite-dimensional quotient")
        else:
            failures = mod.relation_failures()
            data["fd_quotient"] = {"i": mod.i, "dim": mod.dim, "basis": [list(b) for b in mod.basis], "relation_failures": failures}
            lines.append(f"finite-dimensional quotient: i={mod.i}, dim={mod.dim}, relations {'ok' if not failures else failures}")
            if failures:
                status = EXIT_FAIL
    if bgg:
        data_b = bgg_resolution(hw)
        data["bgg"] = data_b.to_dict()
        euler = data_b.euler_check(6)
        data["bgg"]["euler_check"] = euler
        lines.append(f"BGG: left {data_b.left}, middle {data_b.middle[0]} and {data_b.middle[1]}, euler {'ok' if euler else 'FAIL'}")
        if not euler:
            status = EXIT_FAIL
    _emit(data, as_json, "\n".join(lines))
    sys.exit(status)


@main.command()
@click.option("--d", "d", type=click.IntRange(0, 8), required=True, help="Tensor power.")
@click.option("--certify/--no-certify", default=True, help="Certify representative vectors (slow for d >= 4).")
@json_option
def tensor(d: int, certify: bool, as_json: bool) -> None:
    """Decomposition of the d-th tensor power of V."""
    from .tensor import decompose

    summands = decompose(d, certify=certify)
    total = sum(s.dim_l * s.dim_specht for s in summands)
    ok = total == 4**d
    if certify:
        ok = ok and all(s.maximal and s.weight_ok and s.jm_ok for s in summands)
    lines = [f"{s.bp}: dimL={s.dim_l} dimSpecht={s.dim_specht}" + (
        f" maximal={s.maximal} weight_ok={s.weight_ok} jm_ok={s.jm_ok}" if certify else "") for s in summands]
    lines.append(f"total {total} = 4^{d}" if total == 4**d else f"total {total} != 4^{d}")
    _emit({"d": d, "total": total, "ok": ok, "summands": [s.to_dict() for s in summands]}, as_json, "\n".join(lines))
    sys.exit(EXIT_OK if ok else EXIT_FAIL)


@main.command()
@click.argument("lam")
@click.argument("mu", default="")
@json_option
def cg(lam: str, mu: str, as_json: bool) -> None:
    """Clebsch-Gordan vectors in L(LAM, MU) (x) V; partitions as "2,1"."""
    from .tensor import clebsch_gordan

    res = clebsch_gordan(_bipartition(lam, mu))
    lines = [f"L{res.bp} (x) V, dimension check {'ok' if res.dim_check else 'FAIL'}"]
    for c in res.candidates:
        tgt = "none" if c.target is None else str(c.target)
        state = "zero" if c.zero else f"maximal={c.maximal} Z={c.z} expected={c.expected_z}"
        lines.append(f"  {c.name} -> {tgt}: {state}")
    _emit(res.to_dict(), as_json, "\n".join(lines))
    sys.exit(EXIT_OK if res.ok else EXIT_FAIL)


@main.command()
@click.option("--lam", default=None, help="First partition, e.g. 2,1.")
@click.option("--mu", default="", help="Second partition.")
@click.option("--max-size", type=click.IntRange(0, 6), default=None, help="All bipartitions up to this size.")
@click.option("--elements", is_flag=True, help="Print the central elements and certify them.")
@json_option
def center(lam, mu: str, max_size, elements: bool, as_json: bool) -> None:
    """Central characters (and optionally centrality certificates)."""
    from .center import central_character, central_elements, character_from_matrices, hc_project, is_central
    from .tensor import bipartitions

    if lam is None and max_size is None and not elements:
        raise click.UsageError("give --lam/--mu, --max-size or --elements")
    data: dict[str, Any] = {}
    lines: list[str] = []
    ok = True
    if elements:
        data["elements"] = []
        for ce in central_elements():
            cen = is_central(ce)
            ok = ok and cen
            data["elements"].append({"name": ce.name, "central": cen, "hc_image": str(hc_project(ce))})
            lines.append(f"{ce.name}: central={cen} xi={hc_project(ce)}")
    bps = []
    if lam is not None:
        bps.append(_bipartition(lam, mu))
    if max_size is not None:
        bps += [bp for d in range(max_size + 1) for bp in bipartitions(d)]
    if bps:
        data["characters"] = []
        for bp in bps:
            ch = central_character(bp)
            match = ch == character_from_matrices(bp)
            ok = ok and match
            data["characters"].append({**bp.to_dict(), "character": ch.to_dict(), "matches_matrices": match})
            lines.append(f"{bp}: " + ", ".join(f"{k}={v}" for k, v in ch.to_dict().items()) + ("" if match else "  MISMATCH"))
    _emit(data, as_json, "\n".join(lines))
    sys.exit(EXIT_OK if ok else EXIT_FAIL)


@main.command()
@click.option("--kappa", type=click.IntRange(0, 8), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--depth", type=int, default=None, help="Search depth (default kappa+1 or QSP_MAX_DEPTH).")
@json_option
def probe(kappa: int, n: int, depth, as_json: bool) -> None:
    """Experimental search for finite quotients of exceptional Verma modules."""
    from .verma import exceptional_probe

    results = exceptional_probe(kappa, n, depth=depth)
    lines = [f"[experimental] kappa={kappa} n={n}"]
    for r in results:
        lines.append(f"  j={r.j} zeta={r.zeta}: {r.status} levels={r.dims} character={r.character}")
    _emit({"kappa": kappa, "n": n, "results": [r.to_dict() for r in results]}, as_json, "\n".join(lines))


def run(argv: Sequence[str]) -> int:
    """Run the CLI on ``argv`` and return the exit code instead of exiting."""
    try:
        main.main(args=list(argv), prog_name="qsp", standalone_mode=False)
    except SystemExit as e:
        return int(e.code or 0)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    main()
