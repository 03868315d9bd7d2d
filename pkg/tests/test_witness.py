from math import lcm

import pytest
from hypothesis import given, strategies as st

from expcrit import families, groups
from expcrit.core import direct_product
from expcrit.dsl import build
from expcrit.errors import NotAPGroup
from expcrit.numtheory import p_part, prime_divisors
from expcrit.structure import all_subgroups, maximal_subgroups
from expcrit.witness import analyze, classify_pgroup, find_p_witness, find_p_witness_bruteforce, is_exponent_critical

from oracles import element_order, two_generated_subgroups


def oracle_has_witness(G, p):
    """Witness existence from the two-generated subgroup oracle (valid for dihedral groups)."""
    e = lcm(*(int(o) for o in G.orders))
    target = p_part(e, p)
    for S in two_generated_subgroups(G):
        if len(S) == G.order:
            continue
        elems = list(S)
        abelian = all(tuple(y[i] for i in x) == tuple(x[i] for i in y) for x in elems for y in elems)
        if abelian:
            continue
        if p_part(lcm(*(element_order(x) for x in elems)), p) == target:
            return True
    return False


def test_intro_examples():
    D16, D24 = groups.dihedral(16), groups.dihedral(24)
    assert D16.exponent == 8 and is_exponent_critical(D16)
    assert find_p_witness(D16, 2) is None
    assert D24.exponent == 12 and not is_exponent_critical(D24)
    w3 = find_p_witness(D24, 3)
    assert w3.exponent == 6 and w3.order == 12
    w2 = find_p_witness(D24, 2)
    assert p_part(w2.exponent, 2) == 4


def test_abelian_and_trivial_groups():
    assert is_exponent_critical(groups.abelian([4, 2]))
    assert find_p_witness(groups.cyclic(12), 3) is None
    assert not is_exponent_critical(groups.cyclic(1))
    with pytest.raises(ValueError):
        find_p_witness(groups.cyclic(12), 5)


@pytest.mark.parametrize("n", [6, 8, 10, 12, 16, 18, 20, 24, 30, 36])
def test_dihedral_witnesses_match_oracle(n):
    G = groups.dihedral(n)
    for p in prime_divisors(n):
        assert (find_p_witness(G, p) is not None) == oracle_has_witness(G, p)


@given(st.sampled_from(["dihedral", "quaternion", "sym", "alt", "familyC3", "mnapq", "C5xA4", "extraspecial"]),
       st.integers(0, 20))
def test_maximal_search_agrees_with_bruteforce(kind, k):
    G = {
        "dihedral": lambda: groups.dihedral(2 * (k + 3)),
        "quaternion": lambda: groups.dicyclic(4 * (k % 12 + 2)),
        "sym": lambda: groups.symmetric(2 + k % 3),
        "alt": lambda: groups.alternating(3 + k % 3),
        "familyC3": lambda: families.family_C3(3, 2, 1, 2),
        "mnapq": lambda: families.minimal_nonabelian_pq(3, 1, 2, 1 + k % 3),
        "C5xA4": lambda: direct_product(groups.cyclic(5), groups.alternating(4)),
        "extraspecial": lambda: families.extraspecial(3, 1, "+-"[k % 2]),
    }[kind]()
    lat = all_subgroups(G)
    for p in prime_divisors(G.order):
        fast = find_p_witness(G, p) is not None
        slow = find_p_witness_bruteforce(G, p, lat) is not None
        assert fast == slow


@given(st.sampled_from(["dihedral 12", "dihedral 40", "quaternion 24", "sym 4", "alt 5", "mnapq p=2 k=2 q=3",
                        "familyC2 p=2 m=2 k=2 q=3", "extraspecial 2 1 -"]))
def test_noncyclic_exponent_is_lcm_of_maximals(spec):
    G = build(spec)
    assert G.exponent == lcm(*(M.exponent for M in maximal_subgroups(G)))
    assert G.order % G.exponent == 0


def test_classify_pgroup():
    assert classify_pgroup(groups.dicyclic(8)) == "typeB"
    assert classify_pgroup(groups.dihedral(16)) == "typeA"
    assert classify_pgroup(groups.abelian([4, 2])) == "abelian"
    assert classify_pgroup(build("UmodD p=2 m=3")) == "typeA"
    with pytest.raises(NotAPGroup):
        classify_pgroup(groups.symmetric(3))


def test_report_fields():
    r = analyze(groups.dihedral(24))
    d = r.as_dict()
    assert set(d) >= {"order", "exponent", "primes", "witnesses", "critical", "type"}
    assert d["primes"] == [2, 3] and d["critical"] is False and d["type"] == "not-a-p-group"
    assert r.witness_for(3).witness_exponent == 6
