import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from swcross.errors import ContractError, DimensionError
from swcross.exterior import (
    ExtElement,
    Orientation1,
    basis_monomials,
    divided_power,
    format_monomial,
    indices_from_mask,
    mask_from_indices,
    pair_top,
    truncated_exp,
    wedge,
)

from _util import disjoint_pair_divided_power, naive_power, naive_wedge

l = ExtElement.generator
mono = ExtElement.monomial


# -- worked examples -------------------------------------------------------

def test_wedge_examples():
    assert wedge(l(2, 1), l(2, 2)) == mono(2, (1, 2))
    assert wedge(l(2, 2), l(2, 1)) == mono(2, (1, 2), -1)
    s = l(2, 1) + l(2, 2)
    assert wedge(s, s) == 0


def test_wedge_dimension_mismatch():
    with pytest.raises(DimensionError):
        wedge(l(2, 1), l(3, 1))


def test_divided_power_examples():
    assert divided_power(mono(2, (1, 2), 2), 1) == mono(2, (1, 2), 2)
    u = mono(4, (1, 2)) + mono(4, (3, 4))
    # u ^ u = 2 l1^l2^l3^l4 by the wedge oracle; divide by 2!
    assert naive_wedge(u, u) == mono(4, (1, 2, 3, 4), 2)
    assert divided_power(u, 2) == mono(4, (1, 2, 3, 4))
    assert divided_power(mono(4, (1, 2), 5), 2) == 0
    assert divided_power(u, 0) == ExtElement.one(4)


def test_divided_power_overflow_and_contract_errors():
    u = mono(2, (1, 2), 3)
    assert divided_power(u, 2) == 0
    with pytest.raises(ContractError):
        divided_power(u + l(2, 1), 1)
    with pytest.raises(ContractError):
        divided_power(u / 2, 1)
    with pytest.raises(ContractError):
        divided_power(u, -1)


def test_truncated_exp_examples():
    assert truncated_exp(ExtElement.zero(4)) == ExtElement.one(4)
    assert truncated_exp(mono(2, (1, 2), 3), -1) == ExtElement.one(2) - mono(2, (1, 2), 3)
    u = mono(4, (1, 2)) + mono(4, (3, 4))
    assert truncated_exp(u, 1) == ExtElement.one(4) + u + mono(4, (1, 2, 3, 4))


def test_pair_top_examples():
    assert pair_top(mono(2, (1, 2)), Orientation1(1)) == 1
    assert pair_top(mono(2, (1, 2), 7) + l(2, 1) * 4, Orientation1(-1)) == -7
    assert pair_top(ExtElement.scalar(0, 5), Orientation1(1)) == 5


def test_orientation_validation():
    with pytest.raises(ContractError):
        Orientation1(0)
    assert Orientation1(-1).flipped() == Orientation1(1)


# -- representation --------------------------------------------------------

def test_masks_and_formatting():
    m = mask_from_indices((1, 3), 4)
    assert m == 0b101
    assert indices_from_mask(m) == (1, 3)
    assert format_monomial(m) == "l1^l3"
    assert format_monomial(0) == "1"
    with pytest.raises(ContractError):
        mask_from_indices((2, 1), 4)
    with pytest.raises(ContractError):
        mask_from_indices((5,), 4)
    assert list(basis_monomials(3)) == [0, 1, 2, 4, 3, 5, 6, 7]


def test_zero_pruning_and_queries():
    x = ExtElement(3, {1: 2, 2: 0, 4: Fraction(1, 2)})
    assert set(x.terms) == {1, 4}
    assert (x - x).terms == {}
    assert x.degrees() == {1}
    assert x.is_homogeneous(1) and not x.is_integral()
    assert (x + mono(3, (1, 2))).degrees() == {1, 2}
    with pytest.raises(ContractError):
        ExtElement(2, {8: 1})
    with pytest.raises(ContractError):
        ExtElement(2, {1: 0.5})
    with pytest.raises(ContractError):
        ExtElement(65)


def test_big_coefficients_use_exact_path():
    big = 10**30
    x = ExtElement(6, {0b000011: big, 0b001100: -big + 7})
    y = ExtElement(6, {0b110000: big, 0b000100: 3})
    assert wedge(x, y) == naive_wedge(x, y)
    assert wedge(x, y).coefficient((1, 2, 5, 6)) == big * big


def test_rational_coefficients():
    x = ExtElement(3, {1: Fraction(1, 3), 2: Fraction(-2, 5)})
    y = ExtElement(3, {4: Fraction(3, 7), 2: 1})
    assert wedge(x, y) == naive_wedge(x, y)


# -- oracles: divided powers -----------------------------------------------

@pytest.mark.parametrize("seed", range(30))
def test_divided_power_matches_two_oracles(seed):
    rng = random.Random(seed)
    b1 = rng.randint(2, 8)
    u = ExtElement(b1, {m: rng.randint(-4, 4) for m in rng.sample(
        [m for m in range(1 << b1) if m.bit_count() == 2], rng.randint(1, min(8, b1 * (b1 - 1) // 2)))})
    for k in range(0, b1 // 2 + 1):
        got = divided_power(u, k)
        assert got == disjoint_pair_divided_power(u, k)
        assert got * math.factorial(k) == naive_power(u, k)


# -- properties ------------------------------------------------------------

coeffs = st.integers(-9, 9)


@st.composite
def elements(draw, b1, degree=None):
    masks = [m for m in range(1 << b1) if degree is None or m.bit_count() == degree]
    chosen = draw(st.lists(st.sampled_from(masks), max_size=6, unique=True)) if masks else []
    return ExtElement(b1, {m: draw(coeffs) for m in chosen})


@st.composite
def triples(draw):
    b1 = draw(st.integers(0, 8))
    return b1, draw(elements(b1)), draw(elements(b1)), draw(elements(b1))


@st.composite
def homogeneous_pairs(draw):
    b1 = draw(st.integers(0, 8))
    p = draw(st.integers(0, b1))
    q = draw(st.integers(0, b1))
    return p, q, draw(elements(b1, p)), draw(elements(b1, q))


@st.composite
def degree_two(draw, b1=None):
    if b1 is None:
        b1 = draw(st.integers(0, 8))
    return draw(elements(b1, 2))


PROPS = settings(max_examples=300, deadline=None)


@PROPS
@given(triples())
def test_associative_and_unital(t):
    b1, x, y, z = t
    assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))
    one = ExtElement.one(b1)
    assert wedge(one, x) == x == wedge(x, one)
    assert wedge(x, y) == naive_wedge(x, y)


@PROPS
@given(homogeneous_pairs())
def test_graded_commutativity(t):
    p, q, x, y = t
    assert wedge(x, y) == (-1) ** (p * q) * wedge(y, x)


@PROPS
@given(degree_two())
def test_binomial_law(u):
    top = u.b1 // 2
    for j in range(top + 1):
        for k in range(top + 1 - j):
            assert wedge(divided_power(u, j), divided_power(u, k)) == math.comb(j + k, j) * divided_power(u, j + k)


@PROPS
@given(degree_two())
def test_exp_inverse(u):
    assert wedge(truncated_exp(u, 1), truncated_exp(u, -1)) == ExtElement.one(u.b1)


@PROPS
@given(st.integers(0, 8).flatmap(lambda b1: st.tuples(degree_two(b1), degree_two(b1))))
def test_exp_additive(uv):
    u, v = uv
    assert truncated_exp(u + v) == wedge(truncated_exp(u), truncated_exp(v))


@PROPS
@given(degree_two())
def test_divided_powers_integral(u):
    for k in range(u.b1 // 2 + 1):
        assert divided_power(u, k).is_integral()
