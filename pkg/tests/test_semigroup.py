from math import gcd
from functools import reduce

import pytest
from hypothesis import assume, given, settings, strategies as st

from bwb.groebner import GroebnerIdeal
from bwb.monomial import ContainmentError
from bwb.semigroup import (
    NotAReduction,
    NotNumericalSemigroup,
    SemigroupMismatch,
    fiber_kernel_by_degree,
    minimal_reduction,
    sg_canonical_length_tables,
    sg_fiber_presentation,
    sg_new,
    sg_reduction_number,
)


def _brute_members(gens, bound):
    reach = [False] * (bound + 1)
    reach[0] = True
    for s in range(1, bound + 1):
        reach[s] = any(s >= g and reach[s - g] for g in gens)
    return reach


def test_frobenius_numbers():
    assert sg_new([1]).frobenius == -1
    assert sg_new([4, 9, 10]).frobenius == 15
    assert sg_new([2, 3]).frobenius == 1


def test_gcd_must_be_one():
    with pytest.raises(NotNumericalSemigroup):
        sg_new([4, 6])


def test_apery_set(S4910):
    assert S4910.apery == (0, 9, 10, 19)


def test_ideal_arithmetic(S4910):
    I = S4910.ideal([8, 9, 10])
    J = S4910.ideal([8])
    assert I ** 3 == J * I ** 2
    assert I.colon(I).is_unit()
    assert (I ** 2).gens == (16, 17, 18, 19)


def test_mismatched_semigroups(S4910):
    with pytest.raises(SemigroupMismatch):
        S4910.ideal([8]) + sg_new([2, 3]).ideal([2])


def test_lengths(S4910):
    I = S4910.ideal([8, 9, 10])
    J = S4910.ideal([8])
    assert S4910.unit_ideal().quotient_length(S4910.maximal_ideal()) == 1
    assert I.quotient_length(I.m_times() + J) == 2
    assert I.quotient_length(I) == 0
    with pytest.raises(ContainmentError):
        J.quotient_length(I)


def test_reduction_numbers(S4910):
    I = S4910.ideal([8, 9, 10])
    assert sg_reduction_number(I, S4910.ideal([8])) == 2
    assert sg_reduction_number(I, I) == 0
    assert sg_reduction_number(S4910.ideal([8, 18, 10]), S4910.ideal([8])) == 1
    assert minimal_reduction(I) == S4910.ideal([8])


def test_not_a_reduction(S4910):
    with pytest.raises(NotAReduction):
        sg_reduction_number(S4910.ideal([8, 9, 10]), S4910.ideal([9]), bound=5)


def test_fiber_relations_of_8_9_10(S4910):
    I = S4910.ideal([8, 9, 10])
    F = sg_fiber_presentation(I, certify=True)
    ring = F.ring
    L = GroebnerIdeal(ring, F.generators)
    assert L.contains(ring("U3^2"))
    assert L.contains(ring("U1*U3 - U2^2"))
    assert not F.flags["heuristic"]


def test_principal_fiber_is_free(S4910):
    F = sg_fiber_presentation(S4910.ideal([4]))
    assert F.generators == []


def test_tangent_cone_of_two_generator_semigroup():
    # t^36 = (t^9)^4 already lies in m I^4, so the fiber cone is k[U,V]/(V^4)
    S = sg_new([4, 9])
    ring, found, _ = fiber_kernel_by_degree(S.ideal([4, 9]), 9)
    gens = [g for n in sorted(found) for g in found[n]]
    assert GroebnerIdeal(ring, gens) == GroebnerIdeal(ring, ["U2^4"])
    F = sg_fiber_presentation(S.ideal([4, 9]), certify=True)
    assert [str(g) for g in F.generators] == ["U2^4"]


def test_canonical_tables(S4910):
    I = S4910.ideal([8, 9, 10])
    J = S4910.ideal([8])
    ns, wG, wF = sg_canonical_length_tables(I, J, r=2)
    assert all(f <= g for f, g in zip(wF, wG))
    m = S4910.maximal_ideal()
    _, mG, mF = sg_canonical_length_tables(m, minimal_reduction(m))
    assert mG == mF


def test_canonical_tables_need_symmetry():
    S = sg_new([3, 4, 5])
    with pytest.raises(ValueError):
        sg_canonical_length_tables(S.maximal_ideal(), S.ideal([3]))


# -- properties

semigroups = st.lists(st.integers(2, 12), min_size=2, max_size=4).filter(lambda g: reduce(gcd, g) == 1).map(sg_new)


@settings(max_examples=200)
@given(semigroups)
def test_membership_matches_enumeration(S):
    bound = S.conductor + 2 * max(S.gens)
    brute = _brute_members(S.gens, bound)
    assert [s in S for s in range(bound + 1)] == brute
    assert S.frobenius == max((s for s in range(bound + 1) if not brute[s]), default=-1)


@settings(max_examples=200)
@given(semigroups)
def test_symmetry_two_ways(S):
    assert S.is_symmetric() == (2 * len(S.gaps) == S.frobenius + 1)


@st.composite
def ideal_pair(draw):
    S = draw(semigroups)
    elems = [s for s in range(1, S.conductor + 2 * max(S.gens)) if s in S]
    E = S.ideal(draw(st.lists(st.sampled_from(elems), min_size=1, max_size=3)))
    F = S.ideal(draw(st.lists(st.sampled_from(elems), min_size=1, max_size=3)))
    return S, E, F


@settings(max_examples=200)
@given(ideal_pair(), st.integers(0, 3), st.integers(0, 3))
def test_powers_add(data, a, b):
    _, E, _ = data
    assert (E ** a) * (E ** b) == E ** (a + b)


@settings(max_examples=200)
@given(ideal_pair())
def test_colon_adjunction(data):
    _, E, F = data
    Q = F.colon(E)
    assert (Q * E).issubset(F)
    assert F.colon(F.colon(Q)) == Q


@settings(max_examples=200)
@given(ideal_pair())
def test_length_additivity(data):
    S, E, F = data
    V = E & F
    W = V.m_times() + (E * F)
    assume(not W.is_zero())
    U = E + F
    assert U.quotient_length(W) == U.quotient_length(V) + V.quotient_length(W)
    brute = sum(1 for s in range(W.conductor + 1) if U.contains(s) and not W.contains(s))
    assert U.quotient_length(W) == brute


@settings(max_examples=100)
@given(ideal_pair())
def test_fiber_hilbert_function_matches_lengths(data):
    from bwb.blowup import hilbert

    _, I, _ = data
    F = sg_fiber_presentation(I)
    bound = F.flags["degree_bound"]
    hf = hilbert(F, upto=bound).function
    for n in range(bound + 1):
        In = I ** n
        assert hf[n] == In.quotient_length(In.m_times())
