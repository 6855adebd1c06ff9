from math import gcd

from hypothesis import assume, given, settings, strategies as st

from bwb.semigroup import minimal_reduction, sg_new
from bwb.theorems import (
    NOT_MET,
    VERIFIED,
    G_gorenstein,
    canonical_checks,
    canonical_tables,
    e0_compare,
    gor_char_pairs,
    gor_char_verify,
    socle_formula_table,
    thm7_check,
)
from bwb.blowup import reduction_number


def test_gor_char_8_9_10(S4910):
    rep = gor_char_verify(S4910.ideal([8, 9, 10]), S4910.ideal([8]))
    assert rep.verdict == VERIFIED
    assert [(t["left"], t["right"]) for t in rep.table] == [(1, 1), (2, 2), (1, 1)]
    assert rep.certificates["F_gorenstein_by_resolution"] is True
    assert rep.certificates["criterion_agrees"]


def test_gor_char_8_18_10_as_computed(S4910):
    # t^18 = t^8 * t^10 lies in m I, so the ideal is (t^8, t^10); both routes say Gorenstein
    I = S4910.ideal([8, 18, 10])
    assert I == S4910.ideal([8, 10])
    rep = gor_char_verify(I, S4910.ideal([8]))
    assert rep.certificates["r"] == 1
    assert [(t["left"], t["right"]) for t in rep.table] == [(1, 1), (1, 1)]
    assert rep.certificates["F_gorenstein_by_resolution"] is True
    assert rep.certificates["F_gorenstein_by_socle"] is True


def test_gor_char_hypotheses_not_met(S4910):
    # (t^8, t^9): neither G(I) Gorenstein nor F(I) Cohen-Macaulay
    rep = gor_char_verify(S4910.ideal([8, 9]), S4910.ideal([8]))
    assert rep.verdict == NOT_MET
    assert [h.holds for h in rep.hypotheses] == [False, False]
    assert "criterion_agrees" not in rep.certificates


def test_canonical_checks(S4910):
    for gens in ([8, 9, 10], [8, 18, 10]):
        rep = canonical_checks(S4910.ideal(gens), S4910.ideal([8]))
        assert rep.verdict == VERIFIED, rep.witness
        assert all(v[2] for v in rep.certificates["checks"].values())


def test_a_invariants_power_stable(S4910):
    rep = canonical_checks(S4910.ideal([8, 9, 10]), S4910.ideal([8]))
    checks = rep.certificates["checks"]
    assert checks["a(G) = r - d"][0] == 1
    assert checks["a(F) = r - d"][0] == 1
    assert checks["a(F(I^2)) = floor((r-d)/2)"][0] == 0


def test_maximal_ideal_tables_coincide(S4910):
    m = S4910.maximal_ideal()
    J = minimal_reduction(m)
    r = reduction_number(m, J).r
    _, wG, wF = canonical_tables(m, J, r)
    assert wG == wF


def test_e0_compare(S4910):
    J = S4910.ideal([8])
    for gens, eF in (([8, 9, 10], 4), ([8, 18, 10], 2)):
        rep = e0_compare(S4910.ideal(gens), J)
        assert rep.verdict == VERIFIED and rep.certificates["strict"]
        assert rep.table[0]["e0_omega_F"] == eF and rep.table[0]["e0_omega_G"] == 8
    rep = e0_compare(S4910.maximal_ideal(), S4910.ideal([4]))
    assert rep.verdict == VERIFIED and not rep.certificates["strict"]


def test_thm7(S4910):
    assert thm7_check(S4910.ideal([8, 9, 10])).table == [{"reg_F": 2, "r": 2}]
    assert thm7_check(S4910.ideal([8, 18, 10])).table == [{"reg_F": 1, "r": 1}]
    assert thm7_check(S4910.ideal([4])).table == [{"reg_F": 0, "r": 0}]


def test_report_serializes(S4910):
    d = gor_char_verify(S4910.ideal([8, 9, 10]), S4910.ideal([8])).to_dict()
    assert d["schema_version"] == 1 and d["tag"] == "gor-char" and d["verdict"] == VERIFIED


# -- properties on ideals of two-generator (hence symmetric) semigroups


@st.composite
def symmetric_ideal(draw):
    a = draw(st.integers(2, 7))
    b = draw(st.integers(a + 1, 13).filter(lambda b: gcd(a, b) == 1))
    S = sg_new([a, b])
    elems = [s for s in range(1, S.conductor + a + b) if s in S]
    I = S.ideal(draw(st.lists(st.sampled_from(elems), min_size=1, max_size=3)))
    return S, I


@settings(max_examples=100)
@given(symmetric_ideal())
def test_omega_F_is_inside_omega_G(data):
    S, I = data
    J = minimal_reduction(I)
    r = reduction_number(I, J).r
    ns, wG, wF = canonical_tables(I, J, r, window=8)
    assert all(f <= g for f, g in zip(wF, wG))


@settings(max_examples=100)
@given(symmetric_ideal())
def test_zero_row_is_socle_test(data):
    S, I = data
    J = minimal_reduction(I)
    r = reduction_number(I, J).r
    n, left, right = gor_char_pairs(I, J, r)[0]
    assert n == 0 and right == 1
    assert left == I.socle_length()


@settings(max_examples=100)
@given(symmetric_ideal())
def test_socle_formula_matches_colon_route(data):
    S, I = data
    J = minimal_reduction(I)
    r = reduction_number(I, J).r
    assume(G_gorenstein(I, J, r).holds)
    ns, _, wF = canonical_tables(I, J, r, window=8)
    assert socle_formula_table(I, r, ns) == wF


@settings(max_examples=100)
@given(symmetric_ideal())
def test_criterion_agrees_with_resolution(data):
    S, I = data
    J = minimal_reduction(I)
    rep = gor_char_verify(I, J)
    if rep.verdict == NOT_MET:
        return
    assert rep.certificates["criterion_agrees"]
    assert rep.certificates["F_gorenstein_by_resolution"] == (rep.verdict == VERIFIED)


@settings(max_examples=100)
@given(symmetric_ideal())
def test_reg_F_equals_reduction_number(data):
    S, I = data
    rep = thm7_check(I)
    assert rep.verdict == VERIFIED, rep.table
