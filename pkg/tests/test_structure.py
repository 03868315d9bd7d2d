import numpy as np
import pytest
from hypothesis import given, strategies as st

from expcrit import groups
from expcrit.core import direct_product
from expcrit.errors import CapExceeded, NotNormal
from expcrit.isomorphism import is_isomorphic
from expcrit.structure import (
    all_subgroups,
    center,
    derived_length,
    derived_subgroup,
    frattini,
    generate,
    hall_subgroup,
    is_minimal_nonabelian,
    is_normal,
    is_solvable,
    is_special,
    maximal_subgroups,
    power_subgroup,
    quotient,
    sylow_subgroup,
    trivial,
)
from expcrit import families

from oracles import dihedral_subgroup_count, two_generated_subgroups


def member_sets(G, lattice):
    return {frozenset(tuple(int(i) for i in G.element(x).images) for x in H.members) for H in lattice}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 18, 24, 32])
def test_dihedral_lattice_size_matches_formula(n):
    G = groups.dihedral(2 * n)
    assert len(all_subgroups(G)) == dihedral_subgroup_count(n)


@pytest.mark.parametrize(
    "G,count",
    [
        (groups.cyclic(7), 2),
        (groups.dicyclic(8), 6),
        (groups.dihedral(8), 10),
        (groups.symmetric(4), 30),
        (groups.alternating(5), 59),
        (groups.abelian([2, 2, 2]), 16),
    ],
    ids=["C7", "Q8", "D8", "S4", "A5", "C2^3"],
)
def test_lattice_sizes(G, count):
    assert len(all_subgroups(G)) == count


@pytest.mark.parametrize("G", [groups.symmetric(4), groups.dihedral(24), groups.dicyclic(16), groups.abelian([4, 2])],
                         ids=["S4", "D24", "Q16", "C4xC2"])
def test_lattice_equals_two_generated_closure_oracle(G):
    # every subgroup of these groups is generated by two elements
    assert member_sets(G, all_subgroups(G)) == two_generated_subgroups(G)


@pytest.mark.parametrize("G", [groups.symmetric(4), groups.dihedral(36), families.extraspecial(3, 1, "+"),
                               families.minimal_nonabelian_pq(2, 2, 3)], ids=["S4", "D36", "27", "A4"])
def test_extension_and_join_methods_agree(G):
    a = all_subgroups(G, method="extension")
    b = all_subgroups(G, method="join")
    assert {H.key for H in a} == {H.key for H in b}


def test_lattice_cap():
    with pytest.raises(CapExceeded):
        all_subgroups(groups.symmetric(5), cap=100)


def test_lagrange_and_lattice_invariants():
    G = groups.symmetric(4)
    lat = all_subgroups(G)
    keys = [H.key for H in lat]
    assert len(keys) == len(set(keys))
    assert lat.subgroups[0].order == 1 and lat.subgroups[-1].order == 24
    assert all(G.order % H.order == 0 for H in lat)


def test_maximal_subgroups_examples():
    ms = maximal_subgroups(groups.dihedral(16))
    assert sorted(M.order for M in ms) == [8, 8, 8]
    assert sum(M.is_abelian() for M in ms) == 1
    assert len(maximal_subgroups(groups.cyclic(27))) == 1
    assert [M.order for M in maximal_subgroups(groups.abelian([2, 2]))] == [2, 2, 2]


@pytest.mark.parametrize("G", [groups.dihedral(32), groups.dicyclic(16), families.extraspecial(3, 1, "-"),
                               groups.abelian([4, 2, 2]), families.typeB_presentation(3, 2, 1, 0, 1)],
                         ids=["D32", "Q16", "27-", "C4xC2xC2", "typeB"])
def test_hyperplane_maximals_agree_with_lattice(G):
    a = {M.key for M in maximal_subgroups(G)}
    b = {M.key for M in all_subgroups(G).maximal()}
    assert a == b


def test_characteristic_subgroups():
    A = groups.abelian([4, 2])
    assert derived_subgroup(A).order == 1 and center(A).order == 8
    Q = groups.dicyclic(8)
    assert derived_subgroup(Q) == center(Q) and center(Q).order == 2
    D = derived_subgroup(groups.dihedral(16))
    assert D.order == 4 and D.is_abelian() and D.exponent == 4
    assert frattini(groups.abelian([2, 2])).order == 1
    assert frattini(groups.cyclic(8)).order == 4
    assert frattini(Q) == center(Q)


@pytest.mark.parametrize("G", [groups.dihedral(32), groups.dicyclic(32), families.extraspecial(3, 1, "+"),
                               families.typeB_presentation(2, 2, 1, 1, 0), groups.abelian([9, 3])],
                         ids=["D32", "Q32", "27+", "typeB", "C9xC3"])
def test_frattini_of_pgroup_is_derived_times_powers(G):
    p = int(np.unique([f for f in range(2, G.order + 1) if G.order % f == 0])[0])
    D = derived_subgroup(G)
    P = power_subgroup(G, p)
    DP = generate(G, D.generators + P.generators)
    # frattini() computes the intersection of maximal subgroups
    inter = np.ones(G.order, dtype=bool)
    for M in maximal_subgroups(G, method="lattice"):
        inter &= M.mask
    assert np.array_equal(DP.mask, inter)
    assert frattini(G) == DP


def test_sylow_and_hall():
    A4 = groups.alternating(4)
    S = sylow_subgroup(A4, 2)
    assert S.order == 4 and S.exponent == 2
    G = groups.dicyclic(16)
    assert sylow_subgroup(G, 2).order == 16
    G = direct_product(groups.cyclic(5), A4)
    H = hall_subgroup(G, {2, 3})
    assert H.order == 12 and is_isomorphic(H.as_group()[0], A4)
    assert hall_subgroup(G, {2, 3, 5}).order == 60
    assert hall_subgroup(G, {5}).order == 5
    C4 = families.family_C4(3, "elementary", 2, 3, k=2)
    P = sylow_subgroup(C4, 2)
    assert C4.order == 72 and P.order == 8 and P.exponent == 8


def test_quotients():
    Q = groups.dicyclic(8)
    F = quotient(Q, center(Q))
    assert F.order == 4 and F.exponent == 2
    G = groups.symmetric(4)
    assert is_isomorphic(quotient(G, trivial(G)), G)
    proj = F.info["projection"]
    assert proj.is_surjective()
    with pytest.raises(NotNormal):
        quotient(G, next(H for H in all_subgroups(G) if not is_normal(G, H)))


@pytest.mark.parametrize("G", [groups.symmetric(4), groups.dihedral(24), families.extraspecial(3, 1, "+")],
                         ids=["S4", "D24", "27"])
def test_every_normal_quotient_has_correct_order_and_projection(G):
    for N in all_subgroups(G):
        if not is_normal(G, N):
            continue
        Q = quotient(G, N)
        assert Q.order * N.order == G.order
        proj = Q.info["projection"]
        assert np.array_equal(np.flatnonzero(proj.mapping == 0), N.members)


def test_predicates():
    assert is_special(groups.abelian([3, 3]))
    assert is_special(families.extraspecial(3, 1, "+"))
    assert not is_special(groups.cyclic(9))
    assert not is_minimal_nonabelian(groups.abelian([2, 2]))
    assert is_minimal_nonabelian(groups.dicyclic(8))
    assert not is_minimal_nonabelian(groups.symmetric(4))
    assert not is_solvable(groups.alternating(5))
    assert derived_length(groups.symmetric(4)) == 3


@given(st.sampled_from(["dihedral", "dicyclic", "abelian"]), st.integers(2, 24))
def test_abelian_maximal_implies_solvable(kind, k):
    G = groups.dihedral(2 * k) if kind == "dihedral" else groups.dicyclic(4 * k) if kind == "dicyclic" else groups.abelian([k, 2])
    if any(M.is_abelian() for M in maximal_subgroups(G)):
        assert is_solvable(G)


@given(st.integers(2, 30))
def test_dihedral_lattice_closed_under_intersection(n):
    G = groups.dihedral(2 * n)
    lat = all_subgroups(G)
    keys = {H.key for H in lat}
    subs = lat.subgroups
    for H in subs[:: max(1, len(subs) // 6)]:
        for K in subs[:: max(1, len(subs) // 5)]:
            assert np.flatnonzero(H.mask & K.mask).tobytes() in keys
