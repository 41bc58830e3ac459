import pytest
from hypothesis import given, strategies as st

from genlink import Monomial, Universe, parse_variable, xvar, yvar

VARS = [xvar(i, j) for i in (1, 2) for j in (1, 2, 3)] + [yvar(1, 1), yvar(2, 2)]

monomials = st.builds(
    Monomial,
    st.dictionaries(st.sampled_from(VARS), st.integers(min_value=1, max_value=4), max_size=5),
)


def test_unit_and_basic():
    one = Monomial.one()
    assert one.is_unit() and one.degree() == 0 and one.is_squarefree()
    m = Monomial.of(xvar(1, 2), xvar(1, 2), yvar(1, 1))
    assert m.degree() == 3
    assert m.exponent(xvar(1, 2)) == 2
    assert not m.is_squarefree()
    assert str(m) == "Y[1,1]*x[1,2]^2"


def test_zero_exponents_dropped_negative_rejected():
    assert Monomial({xvar(1, 1): 0}) == Monomial.one()
    with pytest.raises(ValueError):
        Monomial({xvar(1, 1): -1})


def test_parse_roundtrip_examples():
    assert parse_variable("x[1,2]") == xvar(1, 2)
    assert parse_variable("Y[3,10]") == yvar(3, 10)
    m = Monomial.from_text("x[1,2]^2*Y[1,1]")
    assert m == Monomial({xvar(1, 2): 2, yvar(1, 1): 1})
    assert Monomial.from_text("1") == Monomial.one()
    with pytest.raises(ValueError):
        parse_variable("z[1,2]")
    with pytest.raises(ValueError):
        Monomial.from_text("x[1,2]^0")


@given(monomials)
def test_text_roundtrip(m):
    assert Monomial.from_text(str(m)) == m


@given(monomials, monomials)
def test_mul_degree_and_divisibility(a, b):
    p = a * b
    assert p.degree() == a.degree() + b.degree()
    assert a.divides(p) and b.divides(p)
    assert p.exact_div(a) == b


@given(monomials, monomials)
def test_gcd_lcm(a, b):
    g, l = a.gcd(b), a.lcm(b)
    assert g.divides(a) and g.divides(b)
    assert a.divides(l) and b.divides(l)
    assert g * l == a * b


def test_exact_div_rejects_nondivisor():
    with pytest.raises(ValueError):
        Monomial.of(xvar(1, 1)).exact_div(Monomial.of(xvar(1, 2)))


def test_universe_validation():
    u = Universe.x_grid(2, 3)
    assert len(u) == 6
    assert u.product_of_variables().degree() == 6
    with pytest.raises(ValueError):
        Universe(2, 3, 0, 0, (xvar(3, 1),))
    with pytest.raises(ValueError):
        Universe(2, 3, 0, 0, (xvar(1, 1), xvar(1, 1)))
    with pytest.raises(ValueError):
        Universe(2, 3, 0, 0, (yvar(1, 1),))


def test_monomials_upto_count():
    u = Universe.x_grid(1, 3)
    # monomials of degree <= 2 in 3 variables: C(5,2) = 10
    assert len(list(u.monomials_upto(2))) == 10
