import pytest

from expcrit import families, groups
from expcrit.errors import NoSuchAction, NoSuchOrder, PreconditionViolated
from expcrit.isomorphism import is_isomorphic
from expcrit.modular import acts_irreducibly_mod_p, mat_order
from expcrit.structure import (
    center,
    centralizer,
    derived_subgroup,
    generate,
    is_minimal_nonabelian,
    is_normal,
    is_special,
    maximal_subgroups,
    sylow_subgroup,
)
from expcrit.witness import analyze, find_p_witness, is_exponent_critical


def test_irreducible_actions():
    act = families.irreducible_cyclic_action(3, 1, 2, 8)
    assert mat_order(act.matrix, 3) == 8 and acts_irreducibly_mod_p(act.matrix, 3)
    act = families.irreducible_cyclic_action(2, 2, 2, 3)
    assert mat_order(act.matrix, 4) == 3 and acts_irreducibly_mod_p(act.matrix, 2)
    act = families.irreducible_cyclic_action(7, 1, 1, 3)
    assert act.matrix.shape == (1, 1) and pow(int(act.matrix[0, 0]), 3, 7) == 1 != act.matrix[0, 0]
    with pytest.raises(NoSuchOrder):
        families.irreducible_cyclic_action(2, 1, 2, 5)


def test_minimal_nonabelian_pq():
    assert is_isomorphic(families.minimal_nonabelian_pq(2, 2, 3), groups.alternating(4))
    assert is_isomorphic(families.minimal_nonabelian_pq(3, 1, 2), groups.symmetric(3))
    G = families.minimal_nonabelian_pq(2, 2, 3, 2)
    assert G.order == 36 and is_minimal_nonabelian(G)
    with pytest.raises(NoSuchOrder):
        families.minimal_nonabelian_pq(2, 2, 5)


@pytest.mark.parametrize("p,mna,order", [(5, groups.alternating(4), 60), (7, groups.symmetric(3), 42),
                                         (5, groups.dicyclic(12), 60)])
def test_family_B(p, mna, order):
    G = families.family_B(p, 1, mna)
    assert G.order == order and is_exponent_critical(G)
    assert find_p_witness(G, p) is None
    others = [w for w in analyze(G).witnesses if w.prime != p]
    assert all(w.found for w in others)


def test_family_B_rejections():
    with pytest.raises(PreconditionViolated) as e:
        families.family_B(5, 1, groups.dihedral(12))
    assert e.value.check == "complement-minimal-nonabelian"
    with pytest.raises(PreconditionViolated) as e:
        families.family_B(2, 1, groups.alternating(4))
    assert e.value.check == "prime-not-in-complement"


def test_family_C1():
    G = families.family_C1(3, 1, groups.dicyclic(8))
    assert G.order == 24 and is_exponent_critical(G) and find_p_witness(G, 3) is None
    G = families.family_C1(3, 2, groups.dihedral(8))
    assert G.order == 72 and is_exponent_critical(G)
    with pytest.raises(PreconditionViolated):
        families.family_C1(3, 1, groups.abelian([2, 2, 2]))


@pytest.mark.parametrize("args,order,q", [((2, 2, 2, 3), 48, 3), ((5, 1, 1, 2), 10, 2), ((2, 1, 2, 3), 12, 3)])
def test_family_C2(args, order, q):
    G = families.family_C2(*args)
    p = args[0]
    assert G.order == order and is_exponent_critical(G) and find_p_witness(G, p) is None
    P = sylow_subgroup(G, p)
    assert is_normal(G, P) and P.is_abelian()
    assert G.order // centralizer(G, P).order == q


def test_family_C2_identifications():
    assert is_isomorphic(families.family_C2(2, 1, 2, 3), groups.alternating(4))
    assert is_isomorphic(families.family_C2(5, 1, 1, 2), groups.dihedral(10))


def test_family_C3():
    G = families.family_C3(3, 2, 1, 2)
    assert G.order == 54 and is_exponent_critical(G) and find_p_witness(G, 3) is None
    G = families.family_C3(2, 2, 2, 3)
    assert G.order == 48 and is_exponent_critical(G)
    P = sylow_subgroup(G, 2)
    assert G.order // centralizer(G, P).order == 3
    with pytest.raises(PreconditionViolated) as e:
        families.family_C3(3, 1, 1, 2)
    assert e.value.check == "m-too-small"


def test_family_C4():
    G = families.family_C4(3, "elementary", 2, 3, k=2)
    assert G.order == 72 and is_exponent_critical(G) and find_p_witness(G, 2) is None
    G = families.family_C4(3, "extraspecial", 2, 2, sign="+")
    assert G.order == 108 and is_exponent_critical(G) and find_p_witness(G, 2) is None
    P, Q = sylow_subgroup(G, 2), sylow_subgroup(G, 3)
    assert not is_normal(G, P) and is_special(Q.as_group()[0])
    x = int(P.members[G.orders[P.members].argmax()])
    Qd = derived_subgroup(Q.as_group()[0])
    assert Qd.order == 3
    z = generate(G, [G.commutator(int(a), int(b)) for a in Q.members for b in Q.generators])
    assert all(G.mul(G.mul(G.inv(x), int(c)), x) == int(c) for c in z.members)
    with pytest.raises(NoSuchAction):
        families.family_C4(2, "elementary", 3, 1, k=1)


def test_extraspecial():
    H = families.extraspecial(3, 1, "+")
    assert H.order == 27 and H.exponent == 3
    M = families.extraspecial(3, 1, "-")
    assert M.order == 27 and M.exponent == 9
    assert is_isomorphic(families.extraspecial(2, 1, "+"), groups.dihedral(8))
    for G in (H, M, families.extraspecial(2, 2, "+"), families.extraspecial(2, 2, "-")):
        assert is_special(G) and center(G).order == 2 + (G.order % 2)


def test_typeB_tuples():
    t2 = families.typeB_parameters(2, 5)
    t3 = families.typeB_parameters(3, 5)
    assert len(t2) == 16 and len(t3) == 16
    assert (1, 1, 0, 0) in t2 and (1, 1, 1, 1) in t2 and (1, 1, 0, 0) not in t3
    assert all(a >= b >= 1 and a + b <= 5 for a, b, _, _ in t2 + t3)


def test_typeB_examples():
    G = families.typeB_presentation(3, 1, 1, 0, 1)
    assert G.order == 27 and G.exponent == 9
    # the presentation with a^2 = b^2 = [a,b] is quaternion
    assert is_isomorphic(families.typeB_presentation(2, 1, 1, 0, 0), groups.dicyclic(8))
    assert is_isomorphic(families.typeB_presentation(2, 1, 1, 1, 1), groups.dihedral(8))
    with pytest.raises(PreconditionViolated):
        families.typeB_presentation(3, 1, 2, 0, 1)


@pytest.mark.parametrize("p", [2, 3])
def test_typeB_outputs_are_critical_type_B(p):
    for t in families.typeB_parameters(p, 4):
        G = families.typeB_presentation(p, *t)
        r = analyze(G)
        assert G.order == p ** (t[0] + t[1] + 1)
        assert r.exponent_critical and r.pgroup_type == "typeB"
        assert derived_subgroup(G).order == p
        assert sum(M.is_abelian() for M in maximal_subgroups(G)) >= 2


def test_two_prime_family_tags():
    assert "C1" in families.two_prime_family(families.family_C1(3, 1, groups.dicyclic(8)), 3)
    assert "C2" in families.two_prime_family(families.family_C2(2, 2, 2, 3), 2)
    assert "C3" in families.two_prime_family(families.family_C3(3, 2, 1, 2), 3)
    assert "C4" in families.two_prime_family(families.family_C4(3, "elementary", 2, 3, k=2), 2)


def test_negative_controls_are_not_critical():
    from expcrit.dsl import build

    # reducible action of C2 on (C3)^2
    assert not is_exponent_critical(build('perm "(1 2 3)" "(4 5 6)" "(2 3)(5 6)"'))
    assert not is_exponent_critical(build("directprod(cyclic 5, dihedral 12)"))
