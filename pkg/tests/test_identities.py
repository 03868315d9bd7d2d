from math import comb

import pytest
from hypothesis import given, strategies as st

from expcrit import families, groups
from expcrit.dsl import build
from expcrit.identities import abelian_normal_maximals, binomials_mod, check_identities
from expcrit.structure import maximal_subgroups


def slow_identities(G, A):
    """Direct evaluation with single table lookups, one (x, b) pair at a time."""
    p = G.order // A.order
    n, e = G.order, G.exponent
    T = G.table.tolist()
    inv = G.inverses.tolist()
    powers = []
    for y in range(n):
        row = [0]
        for _ in range(e - 1):
            row.append(T[row[-1]][y])
        powers.append(row)

    def pw(y, k):
        return powers[y][k % e]

    def comm(x, y):
        return T[T[inv[x]][inv[y]]][T[x][y]]

    for b in range(n):
        if b in A:
            continue
        for x in A.members.tolist():
            chain = [x]
            for _ in range(n + 1):
                chain.append(comm(chain[-1], b))
            for i in range(1, n + 1):
                rhs = T[pw(b, i)][pw(x, i)]
                for j in range(1, i):
                    rhs = T[rhs][pw(chain[j], comb(i, j + 1))]
                if pw(T[b][x], i) != rhs:
                    return False
                rhs = x
                for j in range(1, i + 1):
                    rhs = T[rhs][pw(chain[j], comb(i, j))]
                if T[T[inv[pw(b, i)]][x]][pw(b, i)] != rhs:
                    return False
            rhs = 0
            for i in range(1, p):
                rhs = T[rhs][pw(chain[i], -comb(p, i))]
            if chain[p] != rhs:
                return False
    return True


def test_binomials():
    C = binomials_mod(6, 6, 1000)
    assert C[6].tolist() == [1, 6, 15, 20, 15, 6, 1]
    assert binomials_mod(4, 4, 3)[4].tolist() == [1, 1, 0, 1, 1]


@pytest.mark.parametrize("spec", ["dihedral 16", "quaternion 16", "sym 3", "alt 4", "extraspecial 3 1 -",
                                  "typeB p=3 alpha=1 beta=1 rho=0 sigma=1"])
def test_vectorized_checks_agree_with_direct_evaluation(spec):
    G = build(spec)
    As = abelian_normal_maximals(G)
    assert As
    for A in As:
        checks = check_identities(G, A, spec)
        assert len(checks) == 4
        assert all(c.status == "pass" for c in checks)
        assert slow_identities(G, A)


def test_abelian_normal_maximals_excludes_non_normal():
    S3 = groups.symmetric(3)
    orders = sorted(A.order for A in abelian_normal_maximals(S3))
    assert orders == [3]
    # S4 has no abelian maximal subgroup
    assert abelian_normal_maximals(groups.symmetric(4)) == []


def test_non_normal_subgroup_fails_the_checks():
    # negative control: the identities need A normal
    S3 = groups.symmetric(3)
    A = next(M for M in maximal_subgroups(S3) if M.order == 2)
    checks = check_identities(S3, A, "S3 / C2")
    assert any(c.status == "fail" for c in checks)


def test_sampling_above_threshold():
    G = groups.dihedral(1024)
    A = abelian_normal_maximals(G)[0]
    checks = check_identities(G, A, "big")
    assert all(c.status == "pass" for c in checks)
    assert "sampled 8" in checks[0].detail


@given(st.integers(3, 40))
def test_dihedral_identities_hold(n):
    G = groups.dihedral(2 * n)
    for A in abelian_normal_maximals(G):
        assert all(c.status == "pass" for c in check_identities(G, A, f"D{2 * n}"))


@given(st.sampled_from([(5, 1, 1, 2), (7, 1, 1, 3), (2, 2, 2, 3), (3, 2, 1, 2)]))
def test_family_C2_identities_hold(args):
    G = families.family_C2(*args)
    for A in abelian_normal_maximals(G):
        assert all(c.status == "pass" for c in check_identities(G, A, "C2"))
