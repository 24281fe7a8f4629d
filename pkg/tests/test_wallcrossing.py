import random

import pytest

from swcross.errors import ContractError
from swcross.exterior import ExtElement, Orientation1, basis_monomials
from swcross.kahler import RationalSurface, kahler_orientation, sw_values
from swcross.manifold import FourManifoldData, make_char_class
from swcross.wallcrossing import SWForm, build_uc, sigma_eval, sigma_eval_coefficient_formula, sigma_table, \
    verify_wall_crossing

from _util import manifold_with_cij, random_even_cij

P2 = RationalSurface.p2().to_manifold()
O = Orientation1(1)
mono = ExtElement.monomial


def test_build_uc_examples():
    assert not build_uc(P2, make_char_class(P2, [3])).u
    m = manifold_with_cij([[0, 2], [-2, 0]])
    assert build_uc(m, make_char_class(m, [3, 1])).u == mono(2, (1, 2))
    cij = [[0, 4, 0, 0], [-4, 0, 0, 0], [0, 0, 0, -2], [0, 0, 2, 0]]
    m = manifold_with_cij(cij)
    assert build_uc(m, make_char_class(m, [3, 1])).u == mono(4, (1, 2), 2) - mono(4, (3, 4))


def test_sigma_examples():
    cc = make_char_class(P2, [3])
    assert sigma_eval(P2, cc, O, ExtElement.one(0)) == 1
    for k in (-3, 1, 5):
        m = manifold_with_cij([[0, 2 * k], [-2 * k, 0]])
        cc = make_char_class(m, [3, 1])
        assert cc.w_c >= 2
        assert sigma_eval(m, cc, O, ExtElement.one(2)) == -k
        assert sigma_eval(m, cc, O, ExtElement.generator(2, 1)) == 0
        assert sigma_eval_coefficient_formula(m, cc, O, ExtElement.generator(2, 2)) == 0
    m = manifold_with_cij([[0, 6], [-6, 0]])
    cc = make_char_class(m, [3, 1])
    assert sigma_eval_coefficient_formula(m, cc, O, ExtElement.one(2)) == -3


def test_sigma_vanishes_beyond_w_c():
    m = manifold_with_cij([[0, 2], [-2, 0]])
    cc = make_char_class(m, [1, 1])
    assert cc.w_c == 0
    lam = mono(2, (1, 2))
    assert sigma_eval(m, cc, O, lam) == 0
    assert sigma_eval_coefficient_formula(m, cc, O, lam) == 0
    assert sigma_eval(m, cc, O, ExtElement.one(2)) == -1


def test_sigma_contract_errors():
    m = manifold_with_cij([[0, 2], [-2, 0]])
    cc = make_char_class(m, [3, 1])
    with pytest.raises(ContractError):
        sigma_eval(m, cc, O, ExtElement.one(2) + ExtElement.generator(2, 1))
    with pytest.raises(ContractError):
        sigma_eval(m, cc, O, ExtElement.one(3))
    assert sigma_eval(m, cc, O, ExtElement.zero(2)) == 0


@pytest.mark.parametrize("seed", range(40))
def test_two_formulas_agree_and_orientation_flips(seed):
    rng = random.Random(seed)
    b1 = rng.choice([0, 2, 3, 4, 5, 6])
    m = manifold_with_cij(random_even_cij(rng, b1))
    cc = make_char_class(m, [rng.choice([1, 3, 5]), 1])
    for mask in basis_monomials(b1):
        lam = ExtElement(b1, {mask: rng.choice([-2, 1, 3])})
        a = sigma_eval(m, cc, O, lam)
        assert a == sigma_eval_coefficient_formula(m, cc, O, lam)
        assert sigma_eval(m, cc, O.flipped(), lam) == -a
        if (b1 - mask.bit_count()) % 2:
            assert a == 0


def test_sigma_table_modes():
    m = manifold_with_cij([[0, 2, 0], [-2, 0, 0], [0, 0, 0]])
    cc = make_char_class(m, [3, 1])
    parity = sigma_table(m, cc, O)
    full = sigma_table(m, cc, O, degrees="all")
    assert set(parity) == {mask for mask in range(8) if mask.bit_count() % 2 == 1}
    assert len(full) == 8
    assert all(full[k] == v for k, v in parity.items())


def test_verify_examples():
    for c in (5, 1, -5, 3, -3):
        cc = make_char_class(P2, [c])
        rep = verify_wall_crossing(sw_values(RationalSurface.p2(), cc), P2, cc, kahler_orientation())
        assert rep.ok and rep.checked == 1
    cc = make_char_class(P2, [1])
    assert verify_wall_crossing(SWForm(0), P2, cc, O).ok
    cc = make_char_class(P2, [5])
    bad = SWForm(0, plus={0: 2})
    rep = verify_wall_crossing(bad, P2, cc, O)
    assert [d.monomial for d in rep.discrepancies] == [0]
    assert "sigma = 1" in rep.discrepancies[0].describe()


def test_wrong_parity_support_is_flagged():
    m = manifold_with_cij([[0, 2], [-2, 0]])
    cc = make_char_class(m, [3, 1])
    sw = SWForm(2, plus={1: 4}, minus={1: 4})
    rep = verify_wall_crossing(sw, m, cc, O)
    assert not rep.ok
    assert [d.monomial for d in rep.discrepancies if d.reason == "support in wrong parity"] == [1]


def test_normalization():
    sw = SWForm(1, plus={0: 3}, minus={1: -2}, component=-1)
    n = sw.normalized()
    assert n.component == 1
    assert n.plus == {1: 2} and n.minus == {0: -3}
    assert n.for_component(-1) == sw
    with pytest.raises(ContractError):
        SWForm(0, component=0)


def test_non_b_plus_one_rejected():
    m = FourManifoldData(name="b2", b1=0, b_plus=2, b_minus=0, Q=[[1, 0], [0, 1]], ref_pos=(1, 0))
    cc = make_char_class(m, [1, 1])
    with pytest.raises(ContractError):
        sigma_eval(m, cc, O, ExtElement.one(0))
