import json
import subprocess
import sys

import click
import pytest
from click.testing import CliRunner

from qsp.cli import main, parse_mu_spec, parse_partition, parse_zeta_spec, run
from qsp.qfield import iota, mu, q, qbracket
from qsp.verma import dominant_zeta


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_nf_example():
    res = invoke("nf", "B0*B1")
    assert res.exit_code == 0
    assert res.output.strip() == "q^-1·m(e=1,b=1) + m(x=1)"


def test_nf_json():
    res = invoke("nf", "B0*B1", "--json")
    data = json.loads(res.output)
    assert data["normal_form"] == "q^-1·m(e=1,b=1) + m(x=1)"
    assert {t["coeff"] for t in data["terms"]} == {"q^-1", "1"}


def test_nf_parse_error_exit_code():
    res = invoke("nf", "B0 + ")
    assert res.exit_code == 2
    assert "position 5" in res.output


def test_relcheck_serre():
    res = invoke("relcheck", "serre")
    assert res.exit_code == 0
    assert "FAIL" not in res.output


def test_relcheck_unknown_suite():
    assert run(["relcheck", "nonsense"]) == 2


def test_tensor_d2_json():
    res = invoke("tensor", "--d", "2", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data["summands"]) == 5
    assert data["total"] == 16
    assert sum(s["dimL"] * s["dimSpecht"] for s in data["summands"]) == 16


def test_tensor_out_of_range():
    assert run(["tensor", "--d", "-1"]) == 2


def test_cg():
    res = invoke("cg", "1")
    assert res.exit_code == 0
    assert "Xi+" in res.output


def test_cg_bad_partition():
    assert run(["cg", "1,2"]) == 2


def test_center_characters():
    res = invoke("center", "--max-size", "2", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert all(c["matches_matrices"] for c in data["characters"])


def test_center_needs_a_selection():
    assert run(["center"]) == 2


def test_verma_fd_and_table():
    res = invoke("verma", "--kd", "2", "--k1", "0", "--mu", "q^1", "--zeta", "dominant:1", "--fd", "--table", "1", "1", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["fd_quotient"]["dim"] == 4
    assert data["fd_quotient"]["relation_failures"] == []
    assert len(data["weights"]) == 4


def test_verma_bgg():
    res = invoke("verma", "--kd", "1", "--k1", "0", "--mu", "q^0", "--zeta", "dominant:0", "--bgg")
    assert res.exit_code == 0
    assert "euler ok" in res.output


def test_verma_exceptional_table_is_usage_error():
    assert run(["verma", "--kd", "2", "--k1", "0", "--mu", "i", "--zeta", "0", "--fd"]) == 2


def test_verma_bad_dominant_index():
    assert run(["verma", "--kd", "1", "--k1", "0", "--mu", "q", "--zeta", "dominant:5", "--fd"]) == 2


def test_probe():
    res = invoke("probe", "--kappa", "2", "--n", "1", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["kappa"] == 2 and data["results"]


def test_json_is_deterministic():
    outs = [invoke("tensor", "--d", "2", "--json").output for _ in range(2)]
    outs += [invoke("center", "--lam", "2,1", "--mu", "1", "--json").output for _ in range(2)]
    assert outs[0] == outs[1] and outs[2] == outs[3]


def test_json_is_deterministic_across_processes():
    cmd = [sys.executable, "-m", "qsp", "cg", "2,1", "1", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=False).stdout
    b = subprocess.run(cmd, capture_output=True, check=False, env={"PYTHONHASHSEED": "123"}).stdout
    assert a and a == b


def test_option_parsers():
    assert parse_partition("2,1") == (2, 1)
    assert parse_partition("3") == (3, 0)
    assert parse_partition("") == (0, 0)
    with pytest.raises(click.BadParameter):
        parse_partition("1,2")
    with pytest.raises(click.BadParameter):
        parse_partition("1,1,1")
    assert parse_mu_spec("i*q^2") == iota() * q(2)
    assert parse_mu_spec("mu") == mu()
    assert parse_zeta_spec("dominant:1", q(1), 2) == dominant_zeta(q(1), 2, 1)
    assert parse_zeta_spec("[mu;0]", mu(), 2) == qbracket(mu(), 0)
    with pytest.raises(click.BadParameter):
        parse_mu_spec("q^")
