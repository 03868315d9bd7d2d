import numpy as np
import pytest
from hypothesis import given, strategies as st

from expcrit import groups
from expcrit.dsl import build, script_N, universal_context
from expcrit.errors import PreconditionViolated
from expcrit.isomorphism import is_isomorphic
from expcrit.structure import all_subgroups, derived_subgroup, frattini, generate, is_normal
from expcrit.universal import (
    build_W,
    derived_U,
    kernel_route,
    maximal_abelian_M,
    native_quotient,
    phi_automorphism,
    phi_matrix,
    quotient_UD,
    quotient_UN,
    subgroup_D,
    verify_u_facts,
)
from expcrit.witness import analyze


def test_W():
    assert build_W(2, 3).moduli == (8, 4) and build_W(2, 3).order == 32
    assert build_W(3, 2).moduli == (9, 3, 3) and build_W(3, 2).order == 81
    assert build_W(2, 2).order == 8
    with pytest.raises(PreconditionViolated):
        build_W(2, 1)


def test_phi():
    M = phi_matrix(2)
    # phi(a0) = a0 a1
    assert M[:, 0].tolist() == [1, 1]
    W = build_W(2, 3)
    assert W.reduce(M[:, 1]) == (0, 3)  # a1^-1 modulo 4
    for p, m in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        assert phi_automorphism(p, m).order == p


@pytest.mark.parametrize("p,m,order", [(2, 2, 16), (2, 3, 128), (2, 4, 1024), (3, 2, 243)])
def test_U_order_formula(p, m, order):
    ctx = universal_context(p, m)
    assert ctx.U.order == order == p ** ((m - 1) * (p + 1) + 1)
    assert derived_U(ctx).order == p ** ((m - 1) * (p - 1))


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 2)])
def test_native_arithmetic_matches_permutations(p, m):
    assert universal_context(p, m).native_table_matches()


@given(st.sampled_from([(2, 2), (2, 3), (3, 2), (2, 4)]), st.data())
def test_vectorized_native_products(pm, data):
    ctx = universal_context(*pm)
    n = ctx.order
    x = data.draw(st.integers(0, n - 1))
    ys = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=20))
    els = ctx.native_elements
    want = [ctx.id_of(ctx.mul(els[x], els[y])) for y in ys]
    assert ctx.left_mul(x, ys).tolist() == want
    want = [ctx.id_of(ctx.mul(els[y], els[x])) for y in ys]
    assert ctx.right_mul(ys, x).tolist() == want


def test_D_and_M():
    ctx = universal_context(2, 3)
    U = ctx.U
    D = subgroup_D(ctx)
    d = U.mul(U.power(ctx.a0, 4), U.power(ctx.a_ids[1], 2))
    assert D.order == 2 and d in D and is_normal(U, D)
    assert D.issubset(frattini(U))
    M = maximal_abelian_M(ctx)
    assert M.is_abelian() and U.order // M.order == 2
    assert quotient_UD(ctx).order == 64
    assert quotient_UD(universal_context(3, 2)).order == 81


def lattice_script_N(ctx):
    """The family of N by filtering the full subgroup lattice of U."""
    U = ctx.U
    D, F, Ud = subgroup_D(ctx), frattini(U), derived_subgroup(U)
    a0 = generate(U, [ctx.a0])
    out = []
    for N in all_subgroups(U):
        if not is_normal(U, N) or not D.issubset(N) or not N.issubset(F):
            continue
        if np.any(N.mask & a0.mask & (np.arange(U.order) != 0)):
            continue
        if Ud.issubset(N):
            continue
        out.append(N.key)
    return sorted(out)


@pytest.mark.parametrize("p,m,count", [(2, 2, 1), (2, 3, 11), (3, 2, 1)])
def test_script_N_matches_lattice_oracle(p, m, count):
    ctx = universal_context(p, m)
    Ns = script_N(p, m)
    assert len(Ns) == count
    assert sorted(N.key for N in Ns) == lattice_script_N(ctx)


def test_script_N_count_2_4():
    assert len(script_N(2, 4)) == 39


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2)])
def test_quotients_are_type_A(p, m):
    ctx = universal_context(p, m)
    D = subgroup_D(ctx)
    for N in script_N(p, m):
        assert D.issubset(N)
        Q = quotient_UN(ctx, N)
        r = analyze(Q)
        assert Q.exponent == p**m and r.exponent_critical and r.pgroup_type == "typeA"
        assert derived_subgroup(Q).order == p ** ((m - 1) * (p - 1))


def test_no_type_A_quotient_for_2_2():
    ctx = universal_context(2, 2)
    for N in script_N(2, 2):
        assert analyze(quotient_UN(ctx, N)).pgroup_type != "typeA"


def test_native_quotient_agrees_with_permutation_quotient():
    ctx = universal_context(2, 3)
    for N in script_N(2, 3)[:4]:
        assert is_isomorphic(native_quotient(ctx, N.members), quotient_UN(ctx, N))


@pytest.mark.parametrize("G", [groups.dihedral(16), groups.dicyclic(16), groups.dihedral(32)], ids=["D16", "Q16", "D32"])
def test_kernel_route(G):
    r = analyze(G)
    assert r.pgroup_type == "typeA"
    from expcrit.structure import maximal_subgroups

    A = next(M for M in maximal_subgroups(G) if M.is_abelian())
    m = {16: 3, 32: 4}[G.order]
    ctx = universal_context(2, m)
    route = kernel_route(ctx, G, A)
    assert route is not None and route.ok
    assert native_quotient(ctx, route.kernel).order == G.order


def test_verify_u_facts_small():
    checks = verify_u_facts(universal_context(2, 3))
    assert checks and all(c.status == "pass" for c in checks)
    labels = {c.label for c in checks}
    assert "|U| = p^((m-1)(p+1)+1)" in labels and "D <= Phi(U)" in labels


def test_spec_strings():
    assert build("UmodD p=2 m=3").order == 64
    assert build("U p=3 m=2").order == 243
    with pytest.raises(ValueError):
        build("UmodN p=2 m=2 index=5")
