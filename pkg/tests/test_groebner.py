"""Groebner engine and radical oracle, cross-checked against sympy."""

import random
from fractions import Fraction

import pytest
import sympy

from cases import BENCH1_CERT, bench1
from edgeideals.graphs import Graph
from edgeideals.groebner import (
    GroebnerBudgetError,
    MonomialOrder,
    default_order,
    groebner_basis,
    monomial_radical_membership,
    normal_form,
    radical_membership,
    verify_radical_equals_edge_ideal,
)
from edgeideals.polynomials import Polynomial, parse_polynomial
from edgeideals.sampling import random_squarefree_monomials


def to_sympy(p: Polynomial, syms: dict):
    expr = sympy.Integer(0)
    for term, coeff in p.terms.items():
        m = sympy.Rational(coeff.numerator, coeff.denominator)
        for v, e in term:
            m *= syms[v] ** e
        expr += m
    return expr


def sympy_reduced_basis(polys, order: MonomialOrder):
    syms = {v: sympy.Symbol(v) for v in order.variables}
    gb = sympy.groebner(
        [to_sympy(p, syms) for p in polys],
        *[syms[v] for v in order.variables],
        order=order.kind,
        domain="QQ",
    )
    # sympy already returns the reduced monic basis for QQ
    return {sympy.expand(e) for e in gb.exprs}


def rabinowitsch_member(f: Polynomial, gens, order=None) -> bool:
    """Complete membership-in-radical decision, used as an oracle."""
    if order is None:
        order = default_order(list(gens) + [f])
    t = "_oracle_t"
    ext = MonomialOrder(order.variables + (t,), order.kind)
    system = list(gens) + [Polynomial.constant(1) - Polynomial.variable(t) * f]
    gb = groebner_basis(system, ext)
    return any(len(g.terms) == 1 and not g.support()[0] for g in gb)


# -- basis computation ------------------------------------------------------

P = parse_polynomial


def test_monomial_ideal_basis_is_minimal_generators():
    gens = [P("x*y"), P("x*y*z"), P("y*z"), P("z")]
    gb = groebner_basis(gens)
    assert gb == [P("z"), P("x*y")]


def test_basis_contains_one_for_unit_ideal():
    gb = groebner_basis([P("x"), P("x + 1")])
    assert gb == [P("1")]


def test_known_lex_basis():
    # x - t^2, y - t^3 with t ranked first eliminates t to x^3 - y^2
    order = MonomialOrder(("t", "x", "y"), "lex")
    gb = groebner_basis([P("x - t^2"), P("y - t^3")], order)
    assert P("x^3 - y^2") in gb or P("y^2 - x^3") in gb


def _random_poly(rng, variables, n_terms=3, max_deg=2):
    terms = {}
    for _ in range(n_terms):
        t = tuple(
            (v, rng.randint(1, max_deg))
            for v in sorted(rng.sample(variables, rng.randint(1, 2)))
        )
        terms[t] = Fraction(rng.randint(-3, 3))
    return Polynomial(terms)


@pytest.mark.parametrize("kind", ["grevlex", "lex"])
def test_basis_matches_sympy(kind):
    # lex bases explode quickly, so random lex instances stay in 2 variables
    rng = random.Random(13 if kind == "lex" else 29)
    variables = ["x", "y"] if kind == "lex" else ["x", "y", "z"]
    order = MonomialOrder(tuple(variables), kind)
    syms = {v: sympy.Symbol(v) for v in variables}
    for _ in range(15):
        polys = [_random_poly(rng, variables) for _ in range(rng.randint(1, 3))]
        polys = [p for p in polys if not p.is_zero()]
        if not polys:
            continue
        try:
            ours = {to_sympy(g, syms) for g in groebner_basis(polys, order, max_steps=200_000)}
        except GroebnerBudgetError:
            continue  # a rare hard instance proves nothing either way
        theirs = sympy_reduced_basis(polys, order)
        assert ours == theirs


def test_normal_form_of_member_is_zero():
    gens = [P("x*y - z"), P("y^2 - 1")]
    gb = groebner_basis(gens)
    f = P("x^2*y") * gens[0] + P("z - 3") * gens[1]
    assert normal_form(f, gb).is_zero()
    assert not normal_form(P("x"), gb).is_zero()


def test_budget_guard_raises():
    gens = [P("x^4*y - z^3"), P("y^5 - x*z"), P("z^4 - x^2*y^2")]
    with pytest.raises(GroebnerBudgetError):
        groebner_basis(gens, max_steps=5)


# -- radical membership -----------------------------------------------------


def test_square_absorption_identity():
    a, w, x, y = (Polynomial.variable(v) for v in "awxy")
    assert (x * y) ** 2 == x * y * (x * y + a * w) - a * x * y * w


def test_edge_monomial_in_radical_of_binomial_pair():
    a, w, x, y = (Polynomial.variable(v) for v in "awxy")
    assert radical_membership(x * y, [a * x, x * y + a * w])
    assert not radical_membership(x * y, [a * x])
    assert rabinowitsch_member(x * y, [a * x, x * y + a * w])


def test_monomial_fast_path_requires_monomials():
    with pytest.raises(ValueError):
        monomial_radical_membership(P("x + y"), [P("x")])
    with pytest.raises(ValueError):
        monomial_radical_membership(P("x"), [P("x + y")])


def test_monomial_fast_path_matches_oracle():
    rng = random.Random(97)
    for _ in range(40):
        gens = [
            Polynomial.monomial(m)
            for m in random_squarefree_monomials(rng, 4, rng.randint(1, 3))
        ]
        (target,) = random_squarefree_monomials(rng, 4, 1) or [("v0",)]
        f = Polynomial.monomial(target)
        assert monomial_radical_membership(f, gens) == rabinowitsch_member(f, gens)


def test_radical_membership_rejects_zero():
    with pytest.raises(ValueError):
        radical_membership(Polynomial.zero(), [P("x")])
    assert not radical_membership(P("x"), [])


# -- certificate verification ----------------------------------------------


def test_verify_reference_certificate():
    G = bench1()
    gens = [P(s) for s in BENCH1_CERT]
    assert verify_radical_equals_edge_ideal(gens, G).ok


def test_verify_reports_first_failing_edge():
    G = bench1()
    gens = [P(s) for s in BENCH1_CERT if "x1*x2" not in s]
    r = verify_radical_equals_edge_ideal(gens, G)
    assert not r.ok and r.failing_edge == ("x1", "x2")


def test_verify_rejects_foreign_variables():
    G = Graph.from_edges([("a", "b")])
    r = verify_radical_equals_edge_ideal([P("a*q")], G)
    assert not r.ok and "non-vertices" in r.reason


def test_verify_rejects_terms_outside_edge_ideal():
    G = Graph.from_edges([("a", "b")])
    r = verify_radical_equals_edge_ideal([P("a*b + a")], G)
    assert not r.ok and r.reason is not None


def test_verify_empty_cases():
    assert verify_radical_equals_edge_ideal([], Graph.empty()).ok
    G = Graph.from_edges([("a", "b")])
    r = verify_radical_equals_edge_ideal([], G)
    assert not r.ok and r.failing_edge == ("a", "b")
