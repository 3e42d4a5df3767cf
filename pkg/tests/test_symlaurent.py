import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from whskit.symlaurent import (
    DualRational,
    LaurentPoly,
    MultiPoly,
    MultiRational,
    all_monomials,
    poly_gcd,
    render_monomial,
    weight_of,
)
from whskit.errors import NonInvertibleEvenPart

X1 = MultiPoly.gen(2, 0)
X2 = MultiPoly.gen(2, 1)
ONE = MultiPoly.one(2)
NAMES = ["x1", "x2"]


def to_sympy(p, syms):
    total = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Integer(c) if not isinstance(c, Fraction) else sympy.Rational(c)
        for s, e in zip(syms, mono):
            term *= s ** e
        total += term
    return sympy.expand(total)


def random_poly(rng, arity=2, terms=4, deg=3, coeff=6, nonzero=False):
    while True:
        d = {}
        for _ in range(rng.randint(0, terms)):
            mono = tuple(rng.randint(0, deg) for _ in range(arity))
            c = rng.randint(-coeff, coeff)
            if c:
                d[mono] = d.get(mono, 0) + c
        p = MultiPoly(arity, {m: c for m, c in d.items() if c})
        if not (nonzero and p.is_zero()):
            return p


# -- arithmetic against sympy --------------------------------------------------


def test_products_match_sympy():
    syms = sympy.symbols("x1 x2")
    rng = random.Random(23)
    for _ in range(40):
        f = random_poly(rng)
        g = random_poly(rng)
        mine = to_sympy(f * g, syms)
        theirs = sympy.expand(to_sympy(f, syms) * to_sympy(g, syms))
        assert sympy.simplify(mine - theirs) == 0


def test_gcd_matches_sympy_up_to_sign():
    syms = sympy.symbols("x1 x2")
    rng = random.Random(7)
    checked = 0
    for _ in range(30):
        f = random_poly(rng, terms=3, deg=2, coeff=4, nonzero=True)
        g = random_poly(rng, terms=3, deg=2, coeff=4, nonzero=True)
        h = random_poly(rng, terms=2, deg=2, coeff=3, nonzero=True)
        a, b = f * h, g * h
        mine = to_sympy(poly_gcd(a, b), syms)
        theirs = sympy.gcd(
            sympy.Poly(to_sympy(a, syms), *syms),
            sympy.Poly(to_sympy(b, syms), *syms),
        ).as_expr()
        q = sympy.simplify(mine / theirs)
        assert q.is_number and abs(q) == 1
        checked += 1
    assert checked >= 20


def test_gcd_contract_on_contents():
    f = MultiPoly(2, {(2, 0): 6})
    g = MultiPoly(2, {(1, 1): 4})
    d = poly_gcd(f, g)
    assert d.terms == {(1, 0): 2}


def test_gcd_divides_both():
    rng = random.Random(91)
    for _ in range(25):
        f, g = random_poly(rng), random_poly(rng)
        if f.is_zero() or g.is_zero():
            continue
        d = poly_gcd(f, g)
        assert f.exact_div(d) is not None
        assert g.exact_div(d) is not None


def test_exact_div():
    assert (X1 * X2 + ONE).exact_div(X1) is None
    q = (X1 * X2 + X1).exact_div(X1)
    assert q.terms == (X2 + ONE).terms
    with pytest.raises(ZeroDivisionError):
        X1.exact_div(MultiPoly.zero(2))


# -- canonical rational functions ----------------------------------------------


def test_rational_cancellation():
    rng = random.Random(3)
    for _ in range(25):
        f, g, h = random_poly(rng), random_poly(rng), random_poly(rng)
        if g.is_zero() or h.is_zero():
            continue
        assert MultiRational(f * h, g * h) == MultiRational(f, g)


def test_rational_is_reduced():
    r = MultiRational(X1 * X1 - X2 * X2, X1 + X2)
    # difference of squares cancels to a polynomial
    assert r.is_polynomial()
    assert r.num.terms == (X1 - X2).terms
    d = poly_gcd(r.num, r.den)
    assert d.is_constant()


def test_field_laws():
    a = MultiRational(ONE + X2, X1)
    b = MultiRational(X1, ONE + X1)
    c = MultiRational(X2, ONE + X1 + X2)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * (b + c) == a * b + a * c
    assert (a / c) * c == a
    assert a ** 3 == a * a * a
    assert a ** -2 == (MultiRational.one(2) / a) ** 2
    assert a - a == MultiRational.zero(2)


def test_render_goldens():
    assert MultiRational(ONE + X2, X1).render(NAMES) == "(1 + x2)/x1"
    assert (
        MultiRational(ONE + X1 + X2, X1 * X2).render(NAMES)
        == "(1 + x2 + x1)/(x1*x2)"
    )
    assert MultiRational(X1, ONE + X2).render(NAMES) == "x1/(1 + x2)"
    assert (
        MultiRational(X1 * X1 * MultiPoly.const(2, 3), X2).render(NAMES)
        == "3*x1^2/x2"
    )
    assert MultiRational.zero(2).render(NAMES) == "0"
    assert MultiRational.one(2).render(NAMES) == "1"
    assert render_monomial(3, (2, -1), NAMES) == "3*x1^2*x2^-1"
    assert render_monomial(-1, (1, 0), NAMES) == "-x1"
    assert render_monomial(1, (0, 0), NAMES) == "1"


def test_eval_exact():
    r = MultiRational(ONE + X2, X1)
    assert r.eval([Fraction(2), Fraction(3)]) == Fraction(2)
    assert r.eval([Fraction(1, 2), Fraction(1)]) == Fraction(4)


def test_as_laurent():
    lp = MultiRational(X1 * X1 * MultiPoly.const(2, 3), X2).as_laurent()
    assert lp is not None
    assert lp.render(NAMES) == "3*x1^2*x2^-1"
    assert lp.min_exponents() == (2, -1)
    assert MultiRational(X1, ONE + X2).as_laurent() is None
    # roundtrip back to the rational form
    assert lp.to_rational() == MultiRational(X1 * X1 * MultiPoly.const(2, 3), X2)


def test_laurent_min_exponents_with_absent_variable():
    lp = MultiRational(X1 + X1 * X1, MultiPoly.one(2)).as_laurent()
    assert lp.min_exponents() == (1, 0)


# -- grading -------------------------------------------------------------------


def test_weight_of():
    assert weight_of(X1 * X2, [2, 3]) == 5
    assert weight_of(X1 + X2, [2, 3]) is None
    assert weight_of(X1 - X1, [2, 3]) is None
    assert weight_of(MultiRational(X1 * X1, X2), [2, 3]) == 1
    assert weight_of(MultiRational(ONE + X1, X2), [0, 3]) == -3


# -- dual numbers ---------------------------------------------------------------


DNAMES = ["x1", "x2", "y1", "y2"]


def test_dual_product_leibniz():
    z1 = DualRational.pair_gen(4, 0, 2)
    z2 = DualRational.pair_gen(4, 1, 3)
    p = z1 * z2
    assert p.even.render(DNAMES) == "x1*x2"
    assert p.odd.render(DNAMES) == "x2*y1 + x1*y2"


def test_dual_division_and_inverse():
    z1 = DualRational.pair_gen(4, 0, 2)
    z2 = DualRational.pair_gen(4, 1, 3)
    q = z1 / z2
    assert q.even.render(DNAMES) == "x1/x2"
    assert q.odd.render(DNAMES) == "(x2*y1 - x1*y2)/x2^2"
    assert (q * z2).even == z1.even
    assert (q * z2).odd == z1.odd
    inv = z1 ** -1
    assert inv.even.render(DNAMES) == "1/x1"
    assert inv.odd.render(DNAMES) == "-y1/x1^2"


def test_dual_epsilon_squares_to_zero():
    # a product of two purely odd elements vanishes
    eps1 = DualRational(MultiRational.zero(4), MultiRational(MultiPoly.gen(4, 2)))
    eps2 = DualRational(MultiRational.zero(4), MultiRational(MultiPoly.gen(4, 3)))
    p = eps1 * eps2
    assert p.even.is_zero() and p.odd.is_zero()


def test_dual_noninvertible():
    z1 = DualRational.pair_gen(4, 0, 2)
    odd_only = DualRational(
        MultiRational.zero(4), MultiRational(MultiPoly.gen(4, 2))
    )
    with pytest.raises(NonInvertibleEvenPart):
        z1 / odd_only


def test_dual_pow():
    z1 = DualRational.pair_gen(4, 0, 2)
    cube = z1 ** 3
    assert cube.even.render(DNAMES) == "x1^3"
    assert cube.odd.render(DNAMES) == "3*x1^2*y1"


# -- misc helpers ----------------------------------------------------------------


def test_all_monomials():
    assert sorted(all_monomials(2, 2)) == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0),
    ]


def test_total_degree_and_leading():
    f = X1 * X1 * X2 + X2 + ONE
    assert f.total_degree() == 3
    assert f.degree_in(0) == 2
    assert f.degree_in(1) == 1
    assert f.min_degree_in(0) == 0


# -- hypothesis properties --------------------------------------------------------


small_polys = st.builds(
    lambda pairs: MultiPoly(
        2,
        {
            m: c
            for m, c in (
                (tuple(mono), coeff) for mono, coeff in pairs if coeff
            )
        },
    ),
    st.lists(
        st.tuples(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            st.integers(-5, 5),
        ),
        max_size=4,
    ),
)


@given(small_polys, small_polys, small_polys)
@settings(max_examples=80, deadline=None)
def test_gcd_contains_common_factor(f, g, h):
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    d = poly_gcd(f * h, g * h)
    assert (f * h).exact_div(d) is not None
    assert (g * h).exact_div(d) is not None
    # the primitive part of h divides the gcd
    hp = h.exact_div(MultiPoly(2, {h.monomial_content(): h.int_content()}))
    assert d.exact_div(hp) is not None


@given(small_polys, small_polys, small_polys, small_polys)
@settings(max_examples=60, deadline=None)
def test_rational_addition_associates(f, g, h, k):
    if g.is_zero() or k.is_zero():
        return
    a = MultiRational(f, g)
    b = MultiRational(h, k)
    c = MultiRational(f + h, g + k) if not (g + k).is_zero() else a
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a - b) + b == a
