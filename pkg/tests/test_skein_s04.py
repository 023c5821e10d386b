import pytest

from skeinalg.curves import curve
from skeinalg.elements import NoProductRuleError, SkeinElement, single
from skeinalg.laurent import ONE, const, parse_laurent, q_power
from skeinalg.skein_s04 import (
    S04Label,
    SURFACE,
    apply_sigma,
    c_element,
    element_from_json,
    gamma_pair_ab,
    gamma_quad,
    g_s04_closed,
    h_part,
    lowest_q_term_s04,
    mul_a_bn,
    mul_by_a,
    mul_by_s10,
    mul_s10_sm2,
    mul_sn1_s01,
    mul_tna_b,
    p1_forcing_witness,
    slabel,
    tna_b_by_recurrence,
)


def _elem(*pairs, flavor="s"):
    return SkeinElement(SURFACE, flavor, list(pairs))


def _g(*exps):
    return S04Label(None, tuple(exps))


def test_constants():
    assert c_element(0) == _elem((_g(1, 0, 1, 0), ONE), (_g(0, 1, 0, 1), ONE))
    assert c_element(1) == _elem((_g(1, 0, 0, 1), ONE), (_g(0, 1, 1, 0), ONE))
    assert c_element(4) == c_element(0)
    assert c_element(-3) == c_element(1)
    gq = gamma_quad()
    assert gq.coeff(S04Label(None)) == const(-2)
    assert gq.coeff(_g(1, 1, 1, 1)) == ONE
    assert gq.coeff(_g(2, 0, 0, 0)) == ONE


def test_sigma_fixes_constants():
    assert apply_sigma(gamma_pair_ab()) == gamma_pair_ab()
    assert apply_sigma(gamma_quad()) == gamma_quad()
    assert apply_sigma(c_element(0)) == c_element(1)


def test_mul_a_bn_examples():
    assert mul_a_bn(0) == _elem(
        (slabel(1, 1), q_power(2)),
        (slabel(-1, 1), q_power(-2)),
        (_g(1, 0, 1, 0), ONE),
        (_g(0, 1, 0, 1), ONE),
        flavor="that",
    )
    got1 = mul_a_bn(1)
    assert got1.coeff(slabel(2, 1)) == q_power(2)
    assert got1.coeff(slabel(0, 1)) == q_power(-2)
    assert got1.coeff(_g(1, 0, 0, 1)) == ONE
    gotm1 = mul_a_bn(-1)
    assert gotm1.coeff(slabel(0, 1)) == q_power(2)
    assert gotm1.coeff(slabel(-2, 1)) == q_power(-2)
    assert gotm1.coeff(_g(0, 1, 1, 0)) == ONE


def test_mul_a_bn_sigma_equivariance():
    for n in range(-10, 10):
        assert apply_sigma(mul_a_bn(n)) == mul_a_bn(n + 1)


def test_mul_tna_b_examples():
    assert mul_tna_b(0) == _elem((slabel(0, 1), const(2)), flavor="that")
    assert mul_tna_b(1) == mul_a_bn(0)
    got = mul_tna_b(2)
    assert got.coeff(slabel(2, 1)) == q_power(4)
    assert got.coeff(slabel(-2, 1)) == q_power(-4)
    # c_0 * a and c_1 * [2]
    assert got.coeff(S04Label(curve(1, 0), (1, 0, 1, 0))) == ONE
    assert got.coeff(_g(1, 0, 0, 1)) == parse_laurent("q^2+q^-2")


def test_mul_tna_b_matches_recurrence():
    for n in range(16):
        assert mul_tna_b(n) == tna_b_by_recurrence(n)


def test_mul_by_a_rejects_unknown_labels():
    bad = single(SURFACE, "that", slabel(1, 2))
    with pytest.raises(NoProductRuleError):
        mul_by_a(bad)


def test_mul_s10_sm2_base_cases():
    got = mul_s10_sm2(0)
    assert got.coeff(slabel(1, 2)) == q_power(4)
    assert got.coeff(slabel(-1, 2)) == q_power(-4)
    assert got.coeff(S04Label(curve(0, 1), (1, 0, 1, 0))) == ONE
    assert got.coeff(slabel(1, 0)) == ONE
    assert got.coeff(_g(1, 1, 0, 0)) == parse_laurent("q^2+q^-2")
    got = mul_s10_sm2(1)
    assert got.coeff(slabel(2, 2)) == q_power(4)
    assert got.coeff(slabel(0, 2)) == q_power(-4)
    assert got.coeff(S04Label(curve(1, 1), (1, 0, 1, 0))) == q_power(2)
    assert got.coeff(S04Label(curve(0, 1), (1, 0, 0, 1))) == q_power(-2)
    assert got.coeff(S04Label(None)) == const(-2)


def test_mul_s10_sm2_transported_case():
    # One half twist moves the even base case up by two; the peripheral
    # block steps its parity while the bracket stays fixed.
    got = mul_s10_sm2(2)
    assert got.coeff(slabel(3, 2)) == q_power(4)
    assert got.coeff(slabel(1, 2)) == q_power(-4)
    assert got.coeff(S04Label(curve(1, 1), (1, 0, 0, 1))) == ONE
    assert got.coeff(S04Label(curve(1, 1), (0, 1, 1, 0))) == ONE
    assert got.coeff(slabel(1, 0)) == ONE
    assert got.coeff(_g(1, 1, 0, 0)) == parse_laurent("q^2+q^-2")


def test_mul_s10_sm2_sigma_transport():
    for m in range(-8, 8):
        assert apply_sigma(mul_s10_sm2(m)) == mul_s10_sm2(m + 2)


def test_g_s04_closed_examples():
    assert g_s04_closed(0).is_zero
    assert g_s04_closed(1).is_zero
    got2 = g_s04_closed(2)
    assert got2.coeff(S04Label(curve(1, 1), (1, 0, 1, 0))) == q_power(2)
    assert len(got2) == 2
    got3 = g_s04_closed(3)
    assert got3.coeff(S04Label(curve(1, 1), (1, 0, 0, 1))) == q_power(2)
    assert got3.coeff(S04Label(curve(2, 1), (1, 0, 1, 0))) == q_power(2)
    assert len(got3) == 4


def test_mul_sn1_s01_base_cases():
    full0, h0 = mul_sn1_s01(0)
    assert full0 == _elem((slabel(0, 2), ONE), (S04Label(None), ONE))
    assert h0.is_zero
    full1, h1 = mul_sn1_s01(1)
    assert full1 == _elem(
        (slabel(1, 2), q_power(2)),
        (slabel(1, 0), q_power(-2)),
        (_g(1, 1, 0, 0), ONE),
        (_g(0, 0, 1, 1), ONE),
    )
    assert h1 == gamma_pair_ab()


def test_mul_sn1_s01_n2_remainder():
    _, h2 = mul_sn1_s01(2)
    expected = gamma_quad() + _elem(
        (S04Label(curve(1, 0), (1, 1, 0, 0)), q_power(-2)),
        (S04Label(curve(1, 0), (0, 0, 1, 1)), q_power(-2)),
    )
    assert h2 == expected


def test_decomposition_reassembles():
    for n in range(0, 15):
        full, h = mul_sn1_s01(n)
        lead = _elem(
            (slabel(n, 2), q_power(2 * n)), (slabel(n, 0), q_power(-2 * n))
        ) if n else _elem((slabel(0, 2), ONE), (S04Label(None), ONE))
        if n:
            assert full == lead + g_s04_closed(n) + h
        else:
            assert full == lead


def test_h_structure():
    for n in range(1, 21):
        h = h_part(n)
        for label, c in h.items():
            assert label.slope is None or label.slope.s == 0, (n, label.text())
            rng = c.q_degree_range()
            assert rng is not None
            assert rng[0] >= -2 * n + 2 and rng[1] <= 2 * n - 2, (n, label.text())


def test_lowest_q_term():
    for n in (1, 2, 5, 12):
        low, elem = lowest_q_term_s04(n)
        assert low == -2 * n
        assert elem == single(SURFACE, "s", slabel(n, 0))
    with pytest.raises(ValueError):
        lowest_q_term_s04(0)


def test_gamma_centrality():
    # Dressing the input with a peripheral monomial dresses the output.
    dress = (0, 2, 1, 0)
    base = mul_by_s10(single(SURFACE, "s", slabel(3, 1)))
    dressed = mul_by_s10(single(SURFACE, "s", S04Label(curve(3, 1), dress)))
    redressed = base.map_labels(
        lambda lab: S04Label(lab.slope, tuple(a + b for a, b in zip(lab.g, dress)))
    )
    assert dressed == redressed


def test_mul_by_s10_rejects_unknown_labels():
    with pytest.raises(NoProductRuleError):
        mul_by_s10(single(SURFACE, "s", slabel(1, 3)))


def test_p1_forcing_witness():
    for delta in (-3, -2, -1, 1, 2, 3):
        rep = p1_forcing_witness(delta)
        assert rep.gamma_coeff == const(-delta)
        assert rep.slope_coeff == const(delta)
        assert rep.violations
        bad = dict((lab, c) for lab, c in rep.violations)
        if delta > 0:
            assert rep.gamma_label in bad
        else:
            assert rep.slope_label in bad
    with pytest.raises(ValueError):
        p1_forcing_witness(0)


def test_p1_forcing_element_structure():
    rep = p1_forcing_witness(1)
    e = rep.element
    assert e.coeff(slabel(1, 1)) == q_power(2)
    assert e.coeff(slabel(-1, 1)) == q_power(-2)
    assert e.coeff(_g(1, 0, 1, 0)) == ONE
    assert e.coeff(_g(0, 1, 0, 1)) == ONE
    for i in range(4):
        g = [0, 0, 0, 0]
        g[i] = 1
        assert e.coeff(S04Label(None, tuple(g))) == const(-1)
    assert e.coeff(slabel(0, 1)) == ONE
    assert e.coeff(S04Label(None)) == parse_laurent("1-q^2-q^-2")


def test_element_json_round_trip():
    e = mul_sn1_s01(3)[0]
    assert element_from_json(e.to_json_obj()) == e
