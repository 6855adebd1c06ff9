import pytest
from hypothesis import given, settings, strategies as st

from bwb.blowup import PresentedAlgebra, fiber_presentation, hilbert
from bwb.groebner import GroebnerIdeal
from bwb.homology import (
    NonHomogeneousInput,
    derived_invariants,
    free_resolution,
    koszul_betti,
    schreyer_resolution,
)
from bwb.poly import LEX, PolynomialRing

from conftest import local_ideal

S = PolynomialRing(("U", "V", "W"))
XY = PolynomialRing(("x", "y"))

PRINTED_POWER_STABLE = {(0, 0): 1, (1, 2): 1, (1, 3): 1, (1, 4): 4, (2, 4): 1, (2, 5): 7, (3, 6): 3}
PRINTED_LOW_REDUCTION = {(0, 0): 1, (1, 2): 1, (1, 3): 2, (1, 4): 1, (1, 5): 1,
                 (2, 4): 1, (2, 5): 4, (2, 6): 2, (3, 6): 2, (3, 7): 1}


def _betti(ring, gens):
    return free_resolution(GroebnerIdeal(ring, gens))


def test_koszul_syzygy():
    res = schreyer_resolution(GroebnerIdeal(XY, ["x", "y"]))
    assert res.degrees == [[0], [1, 1], [2]]
    assert res.check_complex()


def test_nonzerodivisor_has_no_syzygies():
    res = schreyer_resolution(GroebnerIdeal(XY, ["x^2 + y^2"]))
    assert res.degrees == [[0], [2]]


def test_hilbert_burch_shape():
    B = _betti(XY, ["x^2", "x*y", "y^2"])
    assert B.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert B.meta["resolution"].check_complex()


def test_power_stable_printed_table():
    B = _betti(S, ["U^2", "U*V^2", "V^3*W", "U*V*W^2", "U*W^3", "V^4"])
    assert B.entries == PRINTED_POWER_STABLE
    inv = derived_invariants(B, dim=1)
    assert inv.regularity == 3
    assert inv.depth == 0 and not inv.is_cm


def test_low_reduction_printed_table():
    B = _betti(S, ["U^2", "U*V*W", "W^3", "V^2*W^2", "V^4*W"])
    assert B.entries == PRINTED_LOW_REDUCTION
    assert derived_invariants(B, dim=1).regularity == 4


def test_zero_ideal():
    B = _betti(S, [])
    assert B.entries == {(0, 0): 1}
    inv = derived_invariants(B, dim=3)
    assert (inv.regularity, inv.pd, inv.is_cm, inv.is_gorenstein) == (0, 0, True, True)


def test_non_homogeneous_rejected():
    with pytest.raises(NonHomogeneousInput):
        schreyer_resolution(GroebnerIdeal(XY, ["x^2 + y"]))


def test_resolutions_are_minimal_complexes():
    B = _betti(S, ["U^2", "U*V^2", "V^3*W", "U*V*W^2", "U*W^3", "V^4"])
    res = B.meta["resolution"]
    assert res.check_complex() and res.is_minimal()


def test_grid_layout():
    B = _betti(XY, ["x^2", "x*y", "y^2"])
    assert B.grid() == [[1, 0, 0], [0, 3, 2]]
    assert B.to_dict()["schema_version"] == 1
    assert "total:" in B.format()


@pytest.mark.parametrize("gens", [
    ["U^2", "U*V^2", "V^3*W", "U*V*W^2", "U*W^3", "V^4"],
    ["U^2", "U*V*W", "W^3", "V^2*W^2", "V^4*W"],
    ["U*W - V^2", "W^2"],
])
def test_golden_tables_do_not_depend_on_order(gens):
    a = _betti(S, gens).entries
    b = _betti(S.with_order(LEX), gens).entries
    assert a == b
    L = GroebnerIdeal(S, gens)
    assert koszul_betti(L, max(j for _, j in a) + 1) == a


# -- properties on fiber cones of random monomial ideals


def _fiber(I):
    return fiber_presentation(I, verify=False)


def _interesting(I):
    return not (I.is_zero() or I.is_unit())


@settings(max_examples=200)
@given(local_ideal(relations=True, max_vars=3, max_gens=4, max_exp=3))
def test_schreyer_agrees_with_koszul(I):
    if not _interesting(I):
        return
    F = _fiber(I)
    B = free_resolution(F.ideal())
    top = max((j for _, j in B.entries), default=0) + 1
    assert koszul_betti(F.ideal(), top) == B.entries
    res = B.meta["resolution"]
    assert res.check_complex() and res.is_minimal()


@settings(max_examples=200)
@given(local_ideal(relations=True, max_vars=3, max_gens=4, max_exp=3))
def test_betti_table_is_order_independent(I):
    if not _interesting(I):
        return
    F = _fiber(I)
    lex = PresentedAlgebra(F.ring.with_order(LEX), [g.to_ring(F.ring.with_order(LEX)) for g in F.generators])
    assert free_resolution(F.ideal()).entries == free_resolution(lex.ideal()).entries


@settings(max_examples=200)
@given(local_ideal(relations=True, max_vars=3, max_gens=4, max_exp=3))
def test_euler_characteristic_is_hilbert_numerator(I):
    if not _interesting(I):
        return
    F = _fiber(I)
    B = free_resolution(F.ideal())
    K = hilbert(F, upto=0).numerator
    k = list(K)
    while len(k) > 1 and k[-1] == 0:
        k.pop()
    assert B.euler_numerator() == k
    assert B.pd <= B.nvars
    assert B.degrees(1) == sorted(g.degree() for g in F.generators)


@settings(max_examples=50)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(lambda e: sum(e) > 0),
                min_size=1, max_size=5))
def test_monomial_ideals_resolve(gens):
    L = GroebnerIdeal(S, [S.monomial(g) for g in gens])
    B = free_resolution(L)
    assert all(j >= i for (i, j) in B.entries)
    assert koszul_betti(L, max(j for _, j in B.entries) + 1) == B.entries


@st.composite
def binomial_ideal(draw):
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        d = draw(st.integers(1, 3))
        mono = st.tuples(st.integers(0, d), st.integers(0, d)).filter(lambda e: sum(e) <= d).map(
            lambda e, d=d: (e[0], e[1], d - e[0] - e[1]))
        a, b = draw(mono), draw(mono)
        c = draw(st.integers(0, 3))
        gens.append(S.monomial(a) - S.monomial(b, c) if a != b else S.monomial(a))
    return gens


@settings(max_examples=200)
@given(binomial_ideal())
def test_binomial_resolutions_under_both_orders(gens):
    L = GroebnerIdeal(S, gens)
    if L.is_zero():
        return
    B = free_resolution(L)
    res = B.meta["resolution"]
    assert res.check_complex() and res.is_minimal()
    Slex = S.with_order(LEX)
    assert free_resolution(GroebnerIdeal(Slex, [g.to_ring(Slex) for g in gens])).entries == B.entries
    assert koszul_betti(L, max(j for _, j in B.entries) + 1) == B.entries
