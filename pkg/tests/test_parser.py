import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsp.coideal import ALIASES, Element, Generator, normal_form
from qsp.parser import ParseError, parse_element, parse_scalar, tokenize
from qsp.qfield import iota, mu, q, qbracket, qint

CORPUS = [
    "B0",
    "B-1",
    "B_-1*Bm1",
    "B0*B1 - q^-1*B1*B0",
    "comm(B0, B1; q^-1)",
    "comm(B1, Y; q^-1) - Z",
    "X + Y + Z + W",
    "Dd^-1*D1^2*K",
    "K^-1*KhatInv",
    "[2]*B0^3 - [3]*B0*B1*B0",
    "[mu; 2]*B1 + (q^2 + 1)/(q - q^-1)*Dd",
    "i*q^3*B0 - 3/4",
    "(B0 + B1)^2",
    "-B1 + +B0",
    "q·B0",
    "comm(X, Y)",
    "[i*q; -1] + [-2]",
]


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    el = parse_element(text)
    again = parse_element(str(el))
    assert normal_form(again) == normal_form(el)


def test_values():
    B0, B1 = Element.gen(Generator.B0), Element.gen(Generator.B1)
    assert parse_element("B0*B1 - q^-1*B1*B0") == B0 * B1 - q(-1) * (B1 * B0)
    assert parse_element("X") == ALIASES["X"]
    assert parse_element("comm(B0, B1; q^-1)") == ALIASES["X"]
    assert parse_element("Dd^-1") == Element.gen(Generator.DdInv)
    assert normal_form(parse_element("K^-1")) == normal_form(ALIASES["KhatInv"])


def test_scalars():
    assert parse_scalar("i*q^2") == iota() * q(2)
    assert parse_scalar("[3]") == qint(3)
    assert parse_scalar("[mu;2] - q^-3*[mu;0]") == qbracket(mu(), 2) - q(-3) * qbracket(mu(), 0)
    assert parse_scalar("q^(-2)") == q(-2)
    assert parse_scalar("2^-1") * 2 == 1
    assert parse_scalar("0") == 0


@given(st.integers(-30, 30))
def test_quantum_integers(n):
    assert parse_scalar(f"[{n}]") == qint(n)
    assert parse_scalar(f"q^{n}") == q(n)


def test_normal_form_output_reparses_coefficients():
    pbw = normal_form(parse_element("B0*B1"))
    for _, c in pbw.items():
        assert parse_scalar(str(c)) == c


ERRORS = [
    ("B0 +", 4),
    ("B0 * $", 5),
    ("B2", 0),
    ("B1^-1", 3),
    ("(B0", 3),
    ("1/0", 1),
    ("1/B0", 1),
    ("[2", 2),
    ("foo", 0),
    ("comm(B0 B1)", 8),
    ("B0 B1", 3),
]


@pytest.mark.parametrize("text,pos", ERRORS)
def test_error_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_element(text)
    assert exc.value.pos == pos
    assert exc.value.pointer().splitlines()[1] == " " * pos + "^"


def test_scalar_parser_rejects_elements():
    with pytest.raises(ParseError) as exc:
        parse_scalar("B0 + 1")
    assert exc.value.pos == 0


def test_tokenizer():
    toks = tokenize("B-1*B0 - 1")
    assert [t.value for t in toks] == ["B-1", "*", "B0", "-", "1", ""]
    assert [t.pos for t in toks] == [0, 3, 4, 7, 9, 10]
