import random

import numpy as np
import pytest

from swcross.errors import CharacteristicError, ContractError, LatticeInconsistencyError, ParityError, \
    ValidationError
from swcross.manifold import FourManifoldData, cij_tensor, make_char_class, validate

from _util import lorentzian_manifold, random_characteristic, random_lorentzian

P2 = FourManifoldData(name="P2", b1=0, b_plus=1, b_minus=0, Q=[[1]], ref_pos=(1,))


def test_p2_valid():
    assert validate(P2) == []
    assert P2.signature == 1 and P2.euler == 3


def test_signature_mismatch_reported():
    m = FourManifoldData(name="bad", b1=0, b_plus=1, b_minus=1, Q=[[1]], ref_pos=(1,))
    assert any("b_plus + b_minus" in v for v in validate(m))
    with pytest.raises(ValidationError):
        m.require_valid()


def test_l4_must_vanish_for_b_plus_one():
    l4 = np.zeros((4, 4, 4, 4), dtype=object)
    import itertools
    from swcross.manifold import _perm_sign
    for p in itertools.permutations(range(4)):
        l4[p] = _perm_sign(p)
    m = FourManifoldData(name="l4", b1=4, b_plus=1, b_minus=0, Q=[[1]], l4=l4, ref_pos=(1,))
    problems = validate(m)
    assert any("quadruple products must vanish" in v for v in problems)
    assert not any("antisymmetric" in v for v in problems)


def test_other_violations():
    t = np.zeros((2, 2, 1), dtype=object)
    t[0, 1, 0] = 2
    m = FourManifoldData(name="t", b1=2, b_plus=1, b_minus=0, Q=[[1]], t=t, ref_pos=(1,))
    assert any(v.startswith("t:") for v in validate(m))
    assert validate(FourManifoldData(name="q", b1=0, b_plus=1, b_minus=0, Q=[[3]], ref_pos=(1,)))
    assert validate(FourManifoldData(name="r", b1=0, b_plus=1, b_minus=1, Q=[[1, 0], [0, -1]], ref_pos=(0, 1)))
    assert validate(FourManifoldData(name="s", b1=0, b_plus=1, b_minus=1, Q=[[1, 1], [0, -1]], ref_pos=(1, 0)))
    with pytest.raises(ContractError):
        FourManifoldData(name="x", b1=0, b_plus=1, b_minus=0, Q=[[1]], ref_pos=(1, 0))


def test_char_class_examples():
    cc = make_char_class(P2, [3])
    assert (cc.w_c, cc.delta_c) == (0, 1)
    assert make_char_class(P2, [1]).w_c == -2
    with pytest.raises(CharacteristicError):
        make_char_class(P2, [2])
    with pytest.raises(ContractError):
        make_char_class(P2, [1, 1])


def test_lattice_inconsistency():
    # Not unimodular, so validate rejects it; bypass to exercise the mod-8 gate.
    m = FourManifoldData(name="odd", b1=0, b_plus=1, b_minus=0, Q=[[3]], ref_pos=(1,))
    object.__setattr__(m, "violations", ())
    with pytest.raises(LatticeInconsistencyError):
        make_char_class(m, [1])


def test_cij_examples():
    assert cij_tensor(P2, make_char_class(P2, [3])).shape == (0, 0)
    t = np.zeros((2, 2, 1), dtype=object)
    t[0, 1, 0], t[1, 0, 0] = 2, -2
    m = FourManifoldData(name="t2", b1=2, b_plus=1, b_minus=0, Q=[[1]], t=t, ref_pos=(1,))
    out = cij_tensor(m, make_char_class(m, [1]))
    assert out[0, 1] == 2 and out[1, 0] == -2
    t[0, 1, 0], t[1, 0, 0] = 1, -1
    m = FourManifoldData(name="t1", b1=2, b_plus=1, b_minus=0, Q=[[1]], t=t, ref_pos=(1,))
    with pytest.raises(ParityError):
        cij_tensor(m, make_char_class(m, [1]))


@pytest.mark.parametrize("seed", range(100))
def test_index_identities_random(seed):
    rng = random.Random(seed)
    Q = random_lorentzian(rng)
    m = lorentzian_manifold(Q, rng, b1=rng.randint(0, 4))
    assert validate(m) == []
    cc = make_char_class(m, random_characteristic(Q, rng))
    assert 4 * cc.w_c == cc.square - 3 * m.signature - 2 * m.euler
    assert 8 * cc.delta_c == cc.square - m.signature
    assert cc.w_c == m.b1 + 2 * cc.delta_c - 2


def test_equality_and_hash():
    other = FourManifoldData(name="P2", b1=0, b_plus=1, b_minus=0, Q=[[1]], ref_pos=(1,))
    assert P2 == other
    assert P2 != FourManifoldData(name="P2", b1=0, b_plus=1, b_minus=0, Q=[[1]], ref_pos=(2,))
