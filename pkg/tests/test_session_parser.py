import pytest

from errors import SessionSyntaxError
from session_parser import parse_line, parse_session


def test_comments_and_blank_lines():
    assert parse_line(1, "   ") is None
    assert parse_line(2, "# only a comment") is None


def test_ideal_declaration():
    statement = parse_line(3, "ideal I = (x^2, x*y)  # two generators")
    assert statement.kind == "ideal"
    assert statement.text == "ideal I = (x^2, x*y)"
    assert statement.args == {"name": "I", "polys": ["x^2", "x*y"]}
    assert statement.is_declaration
    assert parse_line(4, "ideal Z = ()").args["polys"] == []
    assert parse_line(5, "ideal J = ideal(x - 1)").args["polys"] == ["x - 1"]


def test_ring_and_weyl():
    assert parse_line(1, "ring t1, t2,t3").args["variables"] == ["t1", "t2", "t3"]
    assert parse_line(1, "weyl n=2").args["n"] == 2


def test_prime_declaration():
    args = parse_line(1, "prime P = (x, y) cert=monomial").args
    assert args == {"name": "P", "polys": ["x", "y"], "cert": "monomial"}
    with pytest.raises(SessionSyntaxError):
        parse_line(1, "prime P = (x, y)")


def test_module_with_decomposition():
    args = parse_line(7, "module M = quotient(I) [decomp: (Q1, P1); (Q2, P2)]").args
    assert args["ideal"] == "I"
    assert args["decomp"] == [("Q1", "P1"), ("Q2", "P2")]
    assert "decomp" not in parse_line(7, "module N = quotient(I)").args
    with pytest.raises(SessionSyntaxError):
        parse_line(7, "module M = quotient(I) [decomp: Q1 P1]")


def test_commands():
    assert parse_line(1, "gb I order=lex").args == {"name": "I", "order": "lex"}
    assert parse_line(1, "member I x + y").args == {"name": "I", "poly": "x + y"}
    assert parse_line(1, "intersect I J").args == {"left": "I", "right": "J"}
    assert parse_line(1, "torsion M Z<=1").args == {"name": "M", "bound": 1}
    assert parse_line(1, "torsion M up(P, Q)").args == {"name": "M", "primes": ["P", "Q"]}
    assert parse_line(1, "regseq x, y*z").args["polys"] == ["x", "y*z"]
    assert parse_line(1, "hc-equiv Q P via Y1").args == {"q": "Q", "p": "P", "gen": "Y1"}
    search = parse_line(1, "hc-reach P in {A, B} depth 3")
    assert search.kind == "hc-reach"
    assert search.args == {"start": "P", "primes": ["A", "B"], "depth": 3}
    assert not search.is_declaration
    assert "depth" not in parse_line(1, "ass-bound P in {A}").args


@pytest.mark.parametrize("line", [
    "frobnicate I",
    "gb",
    "ideal I = (x,,y)",
    "intersect I",
    "torsion M Z<1",
    "hc-reach P in {A, 2B}",
    "weyl n=two",
])
def test_malformed_lines(line):
    with pytest.raises(SessionSyntaxError) as info:
        parse_line(9, line)
    assert info.value.lineno == 9
    assert str(info.value).startswith("line 9: parse error:")


def test_parse_session_collects_errors():
    statements, errors = parse_session(["ring x", "", "bogus", "gb", "gb I"])
    assert [s.lineno for s in statements] == [1, 5]
    assert [e.lineno for e in errors] == [3, 4]
