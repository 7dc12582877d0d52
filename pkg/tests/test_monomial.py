"""Tests for monomials and monomial ideal arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperdepth.algebra.monomial import (
    Monomial,
    MonomialIdeal,
    colon,
    edge_ideal,
    ideal_sum,
    mono,
    power,
    variable_ideal,
)
from hyperdepth.core.errors import AmbientMismatch
from hyperdepth.core.forest import good_leaves
from hyperdepth.core.hypergraph import make_hypergraph
from hyperdepth.utils.generators import GenConfig, random_hypertree

ABCD = ("a", "b", "c", "d")


def ideal(variables, *gens):
    return MonomialIdeal.from_generators(variables, [Monomial(g) for g in gens])


@st.composite
def monomial_ideals(draw, max_vars=4, max_gens=4, max_exp=2):
    n = draw(st.integers(min_value=1, max_value=max_vars))
    exps = st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * n)
    gens = draw(st.lists(exps, min_size=1, max_size=max_gens))
    return ideal([f"x{i}" for i in range(n)], *gens)


def test_monomial_operations():
    """Test products, lcm, gcd and the colon quotient."""
    x2y = Monomial((2, 1))
    xy3 = Monomial((1, 3))

    assert (x2y * xy3).exponents == (3, 4)
    assert x2y.lcm(xy3).exponents == (2, 3)
    assert x2y.gcd(xy3).exponents == (1, 1)
    assert x2y.quotient(xy3).exponents == (1, 0)
    assert Monomial((1, 1)).divides(x2y)
    assert x2y.format(["x", "y"]) == "x^2*y"
    assert Monomial.one(2).format(["x", "y"]) == "1"


def test_minimal_generators():
    """Test duplicates and multiples are removed."""
    J = ideal(("x", "y"), (1, 1), (2, 1), (1, 1), (0, 3))

    assert J.generators == (Monomial((1, 1)), Monomial((0, 3)))
    assert J.contains(Monomial((3, 3)))
    assert not J.contains(Monomial((5, 0)))


def test_edge_ideal(tree12_deep):
    """Test one squarefree generator per edge."""
    J = edge_ideal(tree12_deep)

    assert len(J) == 11
    assert J.n == 12
    assert "x1*x2" in J.format()
    assert edge_ideal(make_hypergraph(["x"], [])).is_zero()


def test_power_examples():
    """Test small powers."""
    xy = ideal(("x", "y"), (1, 1))
    assert power(xy, 3).generators == (Monomial((3, 3)),)

    J = ideal(("a", "b", "c"), (1, 1, 0), (0, 1, 1))
    assert set(power(J, 2).generators) == {
        Monomial((2, 2, 0)),
        Monomial((1, 2, 1)),
        Monomial((0, 2, 2)),
    }
    assert power(J, 1) == J
    with pytest.raises(ValueError):
        power(J, 0)


def test_colon_examples():
    """Test colon ideals by a monomial."""
    J = ideal(("a", "b", "c"), (1, 1, 0), (0, 1, 1))
    ab = Monomial((1, 1, 0))

    assert colon(J, ab).is_unit()
    assert colon(power(J, 2), ab) == J

    cd = ideal(ABCD, (0, 0, 1, 1))
    assert colon(cd, Monomial((1, 1, 0, 0))) == cd


def test_sum_examples():
    """Test sums with absorption and the zero ideal."""
    ab = ideal(ABCD, (1, 1, 0, 0))
    abc = ideal(ABCD, (1, 1, 1, 0))
    cd = ideal(ABCD, (0, 0, 1, 1))

    assert ideal_sum(ab, MonomialIdeal.zero(ABCD)) == ab
    assert ideal_sum(ab, abc) == ab
    assert len(ideal_sum(ab, cd)) == 2
    with pytest.raises(AmbientMismatch):
        ideal_sum(ab, ideal(("a", "b"), (1, 1)))


def test_ambient_checks():
    """Test generators must match the number of variables."""
    with pytest.raises(AmbientMismatch):
        ideal(("x", "y"), (1, 1, 1))
    with pytest.raises(AmbientMismatch):
        colon(ideal(("x", "y"), (1, 1)), Monomial((1,)))


def test_variable_ideal_and_mono(p4):
    """Test helper constructors."""
    V = variable_ideal(ABCD, [0, 2])

    assert V.generators == (Monomial((1, 0, 0, 0)), Monomial((0, 0, 1, 0)))
    assert mono(p4, ["b", "c"]).exponents == (0, 1, 1, 0)


@settings(max_examples=60, deadline=None)
@given(monomial_ideals(), st.integers(min_value=1, max_value=2), st.integers(min_value=1, max_value=2))
def test_power_coherence(J, a, b):
    """Test J^(a+b) = J^a * J^b and that generators stay minimal."""
    lhs = power(J, a + b)

    assert lhs == power(J, a).product(power(J, b))
    for g in lhs.generators:
        assert not any(h != g and h.divides(g) for h in lhs.generators)


@pytest.mark.parametrize("seed", range(100))
@pytest.mark.parametrize("s", [2, 3])
def test_colon_by_good_leaf_lowers_power(seed, s):
    """Test I(T)^s : x^e = I(T)^(s-1) for a good leaf e of a hypertree."""
    T = random_hypertree(GenConfig(n=24, edges=6, max_edge_size=4, seed=seed))
    I = edge_ideal(T)
    for e in good_leaves(T):
        assert colon(power(I, s), mono(T, e)) == power(I, s - 1)
