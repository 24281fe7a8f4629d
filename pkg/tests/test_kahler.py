import itertools

import pytest

from swcross.errors import ContractError, ParityError
from swcross.kahler import NAIVE_NOTE, DivisorClass, RationalSurface, count_blowup_solutions, dou_nonempty, \
    douady_model, enumerate_blowup_classes, expected_dimension, kahler_orientation, linear_system_dimension, \
    p2_table, serre_dual, sw_values
from swcross.manifold import CharClass, make_char_class, validate
from swcross.wallcrossing import verify_wall_crossing

P2S = RationalSurface.p2()
P2 = P2S.to_manifold()


def _brute_blowup(r, w, d_max):
    out = []
    for d in range(d_max + 1):
        for ms in itertools.product(range(d + 2), repeat=r):
            if d * (d + 3) - sum(x * (x + 1) for x in ms) == w:
                out.append((d, ms))
    return out


def test_surfaces_validate():
    assert validate(P2) == []
    for r in range(1, 9):
        s = RationalSurface.blowup(r)
        assert validate(s.to_manifold()) == []
        k = s.canonical
        assert s.to_manifold().square(k) == 9 - r
    with pytest.raises(ContractError):
        RationalSurface.blowup(0)


def test_dou_examples():
    assert dou_nonempty(P2S, DivisorClass(2, ()))
    assert linear_system_dimension(P2S, DivisorClass(2, ())) == 5
    assert not dou_nonempty(P2S, DivisorClass(-1, ()))
    b3 = RationalSurface.blowup(3)
    assert dou_nonempty(b3, DivisorClass(2, (2, 1, 1)))
    assert expected_dimension(b3, DivisorClass(2, (2, 1, 1))) == 0
    assert not dou_nonempty(b3, DivisorClass(1, (1, 1, 1)))
    assert not dou_nonempty(b3, DivisorClass(1, (-1, 0, 0)))
    with pytest.raises(ContractError):
        dou_nonempty(b3, DivisorClass(1, (0,)))


def test_sw_examples():
    assert sw_values(P2S, make_char_class(P2, [3])).plus == {0: 1}
    sw = sw_values(P2S, make_char_class(P2, [-5]))
    assert sw.plus == {} and sw.minus == {0: -1}
    sw = sw_values(P2S, make_char_class(P2, [1]))
    assert sw.plus == {} and sw.minus == {}
    assert sw_values(RationalSurface.blowup(3), make_char_class(RationalSurface.blowup(3).to_manifold(),
                                                                 [1, 1, 1, 1])).notes == (NAIVE_NOTE,)


def test_p2_table():
    rows = p2_table(-9, 9)
    assert [r[0] for r in rows] == list(range(-9, 10, 2))
    for c, w, plus, minus in rows:
        assert w * 4 == c * c - 9
        assert plus == (1 if c >= 3 else 0)
        assert minus == (-1 if c <= -3 else 0)


@pytest.mark.parametrize("k", range(-20, 21))
def test_p2_index_identity(k):
    c = 2 * k + 3
    cc = make_char_class(P2, [c])
    assert cc.w_c == k * (k + 3)
    m = douady_model(P2S, cc, "+")
    assert m.degree == k
    assert (cc.w_c >= 0) == (k * (k + 3) >= 0)
    sw = sw_values(P2S, cc)
    assert verify_wall_crossing(sw, P2, cc, kahler_orientation()).ok


@pytest.mark.parametrize("k", range(-12, 13))
def test_serre_dual_side_on_p2(k):
    # On P2 with w_c >= 0, exactly one of |m| and |K - m| is nonempty.
    cc = make_char_class(P2, [2 * k + 3])
    m = douady_model(P2S, cc, "+")
    assert douady_model(P2S, cc, "-") == serre_dual(P2S, m)
    assert dou_nonempty(P2S, m, serre_dual_side=True) == dou_nonempty(P2S, serre_dual(P2S, m))
    if cc.w_c >= 0:
        assert dou_nonempty(P2S, m) != dou_nonempty(P2S, m, serre_dual_side=True)


def test_parity_error():
    cc = CharClass(c=(2,), square=4, w_c=0, delta_c=0)
    with pytest.raises(ParityError):
        douady_model(P2S, cc, "+")
    with pytest.raises(ContractError):
        douady_model(P2S, make_char_class(P2, [3]), "x")


@pytest.mark.parametrize("r", [3, 4, 5])
def test_closure_on_blowups(r):
    s = RationalSurface.blowup(r)
    man = s.to_manifold()
    res = enumerate_blowup_classes(r, 0, 15)
    classes = [sol.c for sol in res.solutions]
    classes += [tuple(-x for x in c) for c in classes]
    for c in classes:
        cc = make_char_class(man, c)
        assert verify_wall_crossing(sw_values(s, cc), man, cc, kahler_orientation()).ok


def test_enumeration_examples():
    res = enumerate_blowup_classes(3, 0, 40)
    divs = {(s.divisor.degree, s.divisor.multiplicities) for s in res.solutions}
    assert {(0, (0, 0, 0)), (1, (1, 1, 0)), (2, (2, 1, 1))} <= divs
    assert all(s.w_c == 0 for s in res.solutions)
    assert res.notes == (NAIVE_NOTE,)
    res = enumerate_blowup_classes(3, 2, 40)
    assert (1, (1, 0, 0)) in {(s.divisor.degree, s.divisor.multiplicities) for s in res.solutions}
    with pytest.raises(ContractError):
        enumerate_blowup_classes(3, 1, 5)


@pytest.mark.parametrize("r,w", [(3, 0), (3, 2), (4, 0), (5, 4)])
def test_enumeration_matches_brute_force(r, w):
    expected = _brute_blowup(r, w, 5)
    res = enumerate_blowup_classes(r, w, 10_000, d_max=5)
    assert [(s.divisor.degree, s.divisor.multiplicities) for s in res.solutions] == expected
    assert res.bound_exceeded
    assert count_blowup_solutions(r, w, 5) == len(expected)


def test_enumeration_bound_flag():
    res = enumerate_blowup_classes(3, 0, 5)
    assert len(res.solutions) == 5 and not res.bound_exceeded
    res = enumerate_blowup_classes(3, 0, 1000, d_max=3)
    assert res.bound_exceeded


def test_growth_is_monotone():
    counts = [count_blowup_solutions(3, 0, D) for D in range(31)]
    assert all(a < b for a, b in zip(counts, counts[1:]))
