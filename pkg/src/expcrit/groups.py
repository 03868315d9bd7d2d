"""Standard small groups as permutation groups."""

from __future__ import annotations

import numpy as np

from .core import Permutation, direct_product, materialize, regular_group


def cyclic(n):
    if n < 1:
        raise ValueError("cyclic order must be positive")
    if n == 1:
        return materialize([Permutation.identity(1)], name="C1")
    return materialize([np.roll(np.arange(n), -1)], name=f"C{n}")


def dihedral(n):
    """Dihedral group of order ``n`` (so ``dihedral(8)`` has 8 elements)."""
    if n < 2 or n % 2:
        raise ValueError("dihedral order must be an even integer >= 2")
    k = n // 2
    if k == 1:
        return materialize([[1, 0]], name="D2")
    if k == 2:
        return materialize([[1, 0, 2, 3], [0, 1, 3, 2]], name="D4")
    rot = np.roll(np.arange(k), -1)
    ref = (-np.arange(k)) % k
    return materialize([rot, ref], name=f"D{n}")


def dicyclic(n):
    """Dicyclic group of order ``n = 4k``; generalized quaternion when n is a power of 2."""
    if n < 4 or n % 4:
        raise ValueError("dicyclic order must be a multiple of 4")
    k = n // 4
    m = 2 * k

    def mul(x, y):
        i, j = x
        r, s = y
        if j == 0:
            return ((i + r) % m, s)
        if s == 0:
            return ((i - r) % m, 1)
        return ((i - r + k) % m, 0)

    G, _ = regular_group((0, 0), [(1, 0), (0, 1)], mul, name=f"Q{n}")
    return G


def symmetric(n):
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return materialize([Permutation.identity(1)], name="S1")
    if n == 2:
        return materialize([[1, 0]], name="S2")
    return materialize([Permutation.from_cycles([(0, 1)], n), np.roll(np.arange(n), -1)], name=f"S{n}")


def alternating(n):
    if n < 1:
        raise ValueError("degree must be positive")
    if n < 3:
        return materialize([Permutation.identity(n)], name=f"A{n}")
    gens = [Permutation.from_cycles([(0, 1, i)], n) for i in range(2, n)]
    return materialize(gens, name=f"A{n}")


def from_cycles(cycle_strings, one_based=True, name=None):
    """Permutation group from cycle-notation generator strings."""
    perms = [Permutation.from_cycles(s, one_based=one_based) for s in cycle_strings]
    degree = max(p.degree for p in perms)
    perms = [Permutation(np.concatenate([p.images, np.arange(p.degree, degree)]), check=False) for p in perms]
    return materialize(perms, name=name)


def abelian(orders):
    """Direct product of cyclic groups of the given orders."""
    orders = [int(o) for o in orders]
    if not orders:
        return cyclic(1)
    G = cyclic(orders[0])
    for o in orders[1:]:
        G = direct_product(G, cyclic(o))
    G.name = " x ".join(f"C{o}" for o in orders)
    return G


def elementary_abelian(p, k):
    return abelian([p] * k)


def heisenberg(q, n=1):
    """Extraspecial group of order ``q**(1+2n)`` and exponent ``q`` (q odd)."""

    def mul(x, y):
        a1, b1, z1 = x
        a2, b2, z2 = y
        dot = sum(u * v for u, v in zip(a1, b2))
        return (
            tuple((u + v) % q for u, v in zip(a1, a2)),
            tuple((u + v) % q for u, v in zip(b1, b2)),
            (z1 + z2 + dot) % q,
        )

    zero = (0,) * n
    gens = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        gens.append((e, zero, 0))
        gens.append((zero, e, 0))
    G, _ = regular_group((zero, zero, 0), gens, mul, name=f"{q}^(1+{2 * n})+")
    return G


def metacyclic_extraspecial(q):
    """``<a, b | a^(q^2), b^q, b^-1 a b = a^(1+q)>``: extraspecial of exponent q^2."""
    m = q * q

    def mul(x, y):
        # b^j a^r = a^(r (1+q)^-j) b^j
        i, j = x
        r, s = y
        return ((i + r * pow(1 + q, -j, m)) % m, (j + s) % q)

    G, _ = regular_group((0, 0), [(1, 0), (0, 1)], mul, name=f"{q}^(1+2)-")
    return G
