import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelcodes.errors import (
    CoefficientOutOfField,
    FieldMismatch,
    LengthMismatch,
    PolynomialSyntaxError,
    VariableIndexOutOfRange,
    ZeroDivisor,
    ZeroPolynomial,
)
from abelcodes.field import make_prime_field
from abelcodes.poly import (
    GREVLEX,
    GRLEX,
    LEX,
    ORDERINGS,
    Polynomial,
    compare,
    dominates,
    format_polynomial,
    leading,
    multi_divide,
    parse,
)

F2, F5, F7 = make_prime_field(2), make_prime_field(5), make_prime_field(7)


def P(text, F=F7, s=2):
    return parse(text, F, s)


def test_parse_reads_terms():
    f = P("x1^2*x2 + 3*x1 + 1")
    assert f.terms == {(2, 1): 1, (1, 0): 3, (0, 0): 1}


def test_parse_combines_and_drops_zero():
    assert parse("x1 + x1", F2, 1).is_zero()
    assert P("x1*x1*x2 + 6*x2*x1^2").is_zero()


def test_parse_minus_is_additive_inverse():
    assert P("x1 - 1").terms == {(1, 0): 1, (0, 0): 6}
    assert P("-x2").terms == {(0, 1): 6}


def test_parse_reduces_coefficients():
    assert P("9*x1").terms == {(1, 0): 2}
    assert P("7").is_zero()


def test_parse_ignores_whitespace():
    assert P(" x1 ^ 2 *x2+3 * x1+ 1 ") == P("x1^2*x2 + 3*x1 + 1")


def test_parse_variable_out_of_range():
    with pytest.raises(VariableIndexOutOfRange) as exc:
        P("x1 + x3")
    assert exc.value.position == 6


@pytest.mark.parametrize(
    "text, position",
    [("x1 +", 4), ("x1 ++ x2", 4), ("x1 y", 3), ("x", 1), ("2*3", 2), ("x1^", 3), ("", 0), ("x1 x2", 3)],
)
def test_parse_syntax_errors_carry_position(text, position):
    with pytest.raises(PolynomialSyntaxError) as exc:
        P(text)
    assert exc.value.position == position


def test_parse_strict_coefficients():
    with pytest.raises(CoefficientOutOfField):
        parse("9*x1", F7, 2, strict=True)
    assert parse("6*x1", F7, 2, strict=True).terms == {(1, 0): 6}


def test_add_and_mul_examples():
    f = P("x1^2*x2 + 3*x1 + 1")
    assert f + Polynomial.zero(F7, 2) == f
    assert parse("x1 + 1", F2, 1) * parse("x1+1", F2, 1) == parse("x1^2 + 1", F2, 1)
    assert P("x1 + x2", F5) * P("x1 - x2", F5) == P("x1^2 + 4*x2^2", F5)


def test_mismatched_operands():
    with pytest.raises(FieldMismatch):
        P("x1", F5) + P("x1", F7)
    with pytest.raises(LengthMismatch):
        P("x1", F7, 2) + P("x1", F7, 3)


def test_leading_examples():
    assert leading(P("x1^2*x2 + x1*x2^2"), LEX)[0] == (2, 1)
    assert leading(P("x1 + x2^3"), GRLEX)[0] == (0, 3)
    for order in ORDERINGS.values():
        assert leading(P("5"), order) == ((0, 0), 5)
    with pytest.raises(ZeroPolynomial):
        leading(P("0"))


def test_grevlex_breaks_ties_from_the_last_variable():
    # x2^2 > x1*x3 in grevlex, the reverse in lex
    assert compare((0, 2, 0), (1, 0, 1), GREVLEX) == 1
    assert compare((0, 2, 0), (1, 0, 1), LEX) == -1
    assert compare((1, 1, 0), (1, 0, 1), GREVLEX) == 1


def test_compare_and_dominates_examples():
    assert dominates((1, 0), (2, 3))
    assert not dominates((2, 0), (1, 3))
    assert compare((1, 2), (2, 1), LEX) == -1
    assert compare((1, 2), (1, 2), GRLEX) == 0
    with pytest.raises(LengthMismatch):
        dominates((1,), (1, 2))
    with pytest.raises(LengthMismatch):
        compare((1,), (1, 2))


def test_printer():
    assert str(P("1 + 3*x1 + x1^2*x2")) == "x1^2*x2 + 3*x1 + 1"
    assert str(P("0")) == "0"
    assert format_polynomial(P("x2^3 + x1"), LEX) == "x1 + x2^3"
    assert format_polynomial(P("x2^3 + x1"), GRLEX) == "x2^3 + x1"


def test_division_examples():
    qs, r = multi_divide(P("x1^2*x2 + x1"), [P("x1")])
    assert qs == [P("x1*x2 + 1")] and r.is_zero()
    qs, r = multi_divide(P("x1"), [P("x2")], LEX)
    assert r == P("x1") and qs[0].is_zero()
    f = parse("x1^2 + x1*x2", F2, 2)
    qs, r = multi_divide(f, [parse("x1 + x2", F2, 2), parse("x2^2", F2, 2)], LEX)
    assert r.is_zero()
    assert qs == [parse("x1", F2, 2), parse("0", F2, 2)]


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisor):
        multi_divide(P("x1"), [P("0")])


# --- properties ---------------------------------------------------------

exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 3))
orders = st.sampled_from(list(ORDERINGS.values()))


@st.composite
def polys(draw, field=F5, nonzero=False, max_terms=6):
    terms = draw(st.dictionaries(exps, st.integers(1, field.p - 1), min_size=1 if nonzero else 0, max_size=max_terms))
    return Polynomial(field, 3, terms)


@given(st.sampled_from([F2, F5, F7]).flatmap(lambda F: st.tuples(polys(F), st.lists(polys(F, nonzero=True), min_size=1, max_size=3))), orders)
@settings(max_examples=150, deadline=None)
def test_division_reconstructs_and_remainder_is_normal(data, order):
    f, gs = data
    qs, r = multi_divide(f, gs, order)
    total = r
    for a, g in zip(qs, gs):
        total = total + a * g
    assert total == f
    leads = [g.leading(order)[0] for g in gs]
    assert not any(dominates(lm, m) for m in r.terms for lm in leads)
    if f:
        lf = order.key(f.leading(order)[0])
        for a, g in zip(qs, gs):
            if a:
                assert order.key((a * g).leading(order)[0]) <= lf
    # deterministic
    assert multi_divide(f, gs, order) == (qs, r)


@given(exps, exps, exps, orders)
def test_orderings_are_multiplicative_and_well_founded(a, b, u, order):
    c = compare(a, b, order)
    au = tuple(x + y for x, y in zip(a, u))
    bu = tuple(x + y for x, y in zip(b, u))
    assert compare(au, bu, order) == c
    assert compare(b, a, order) == -c
    assert compare((0, 0, 0), a, order) <= 0
    if dominates(a, b):
        assert c <= 0


@given(polys(), polys(), polys())
@settings(max_examples=80)
def test_ring_laws(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f - f == Polynomial.zero(F5, 3)


@given(polys())
def test_printer_roundtrip(f):
    for order in ORDERINGS.values():
        assert parse(format_polynomial(f, order), F5, 3) == f
