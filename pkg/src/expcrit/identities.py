"""Commutator identities for a group with an abelian normal maximal subgroup.

For ``A`` abelian and normal of prime index ``p`` in ``G``, with ``x`` in ``A``
and ``b`` outside ``A``:

* ``kappa(x) = [x, b]`` is an endomorphism of ``A``;
* ``(bx)^i = b^i x^i prod_{j=1}^{i-1} [x,_j b]^C(i, j+1)``;
* ``[x,_p b] = prod_{i=1}^{p-1} [x,_i b]^(-C(p, i))``;
* ``b^-i x b^i = x prod_{j=1}^{i} [x,_j b]^C(i, j)``.

Everything is evaluated from the Cayley table, vectorized over ``(x, b)``
pairs, for ``1 <= i <= |G|``.  The chains ``[x,_j b]`` are eventually
periodic in ``j``; since they live in the abelian ``A``, products over ``j``
are taken one distinct chain value at a time with summed exponents.
"""

from __future__ import annotations

import numpy as np

from .checks import check
from .structure import is_normal, maximal_subgroups
from .numtheory import is_prime

SAMPLE_ABOVE = 500
SAMPLED_B = 8


def abelian_normal_maximals(G):
    """Abelian maximal subgroups that are normal of prime index."""
    out = []
    for M in maximal_subgroups(G):
        if M.is_abelian() and is_prime(G.order // M.order) and is_normal(G, M):
            out.append(M)
    return out


def power_table(G):
    """``pw[y, k] = y^k`` for ``0 <= k < exp(G)``."""
    e = G.exponent
    T = G.table
    pw = np.empty((G.order, e), dtype=np.intp)
    pw[:, 0] = 0
    ids = np.arange(G.order)
    for k in range(1, e):
        pw[:, k] = T[pw[:, k - 1], ids]
    return pw


def binomials_mod(n, k, e):
    """``C[i, j] = binom(i, j) mod e`` for ``i <= n``, ``j <= k``."""
    C = np.zeros((n + 1, k + 1), dtype=np.int64)
    C[:, 0] = 1 % e
    for i in range(1, n + 1):
        C[i, 1:] = (C[i - 1, 1:] + C[i - 1, :-1]) % e
    return C


def _pairs(G, A, rng):
    outside = np.flatnonzero(~A.mask)
    if G.order > SAMPLE_ABOVE and outside.size > SAMPLED_B:
        bs = np.sort(rng.choice(outside, size=SAMPLED_B, replace=False))
        sampled = True
    else:
        bs = outside
        sampled = False
    xs = A.members
    X = np.tile(xs, bs.size)
    B = np.repeat(bs, xs.size)
    return X, B, bs, sampled


def check_identities(G, A, subject="", seed=0):
    """Evaluate the four identities for ``A`` (abelian, normal, prime index); returns Check records."""
    rng = np.random.default_rng(seed)
    n = G.order
    p = n // A.order
    T = G.table
    inv = G.inverses
    e = G.exponent
    pw = power_table(G)
    X, B, bs, sampled = _pairs(G, A, rng)
    mode = f"sampled {bs.size} elements b" if sampled else "exhaustive"
    where = f"{subject} |A|={A.order}"

    def comm(x, y):
        return T[T[inv[x], inv[y]], T[x, y]]

    # [x,_j b] for j = 0, 1, ... until the whole vector of chains repeats; from then on
    # the sequence is periodic, so level j is chains[level(j)]
    chains = [X]
    seen = {X.tobytes(): 0}
    while True:
        c = comm(chains[-1], B)
        k = seen.get(c.tobytes())
        if k is not None:
            break
        seen[c.tobytes()] = len(chains)
        chains.append(c)
    start, period = k, len(chains) - k

    def level(js):
        js = np.asarray(js, dtype=np.int64)
        return np.where(js < len(chains), js, start + (js - start) % period)

    C = binomials_mod(n + 1, n + 2, e)

    def product(base, coef, last):
        # base * prod_{j=1}^{last} [x,_j b]^coef[j]; A is abelian so equal levels are merged
        if last < 1:
            return base
        exps = np.zeros(len(chains), dtype=np.int64)
        np.add.at(exps, level(np.arange(1, last + 1)), coef[1: last + 1])
        for lv in np.flatnonzero(exps % e):
            base = T[base, pw[chains[lv], exps[lv] % e]]
        return base

    out = []

    # kappa is an endomorphism of A
    xs = A.members
    prod = T[xs[:, None], xs[None, :]]
    ok_hom = True
    for b in bs:
        K = np.zeros(n, dtype=np.intp)
        K[xs] = comm(xs, np.full(xs.size, b))
        ok_hom &= bool(np.all(A.mask[K[xs]]))
        ok_hom &= bool(np.array_equal(K[prod], T[K[xs][:, None], K[xs][None, :]]))
    out.append(check("kappa(x) = [x,b] is a homomorphism A -> A", where, ok_hom, mode))

    BX = T[B, X]
    ok_power = True
    ok_conj = True
    bad_i = None
    for i in range(1, n + 1):
        r = i % e
        lhs = pw[BX, r]
        rhs = product(T[pw[B, r], pw[X, r]], np.concatenate(([0], C[i, 2:])), i - 1)
        if not np.array_equal(lhs, rhs):
            ok_power = False
            bad_i = bad_i or i
        conj = T[T[pw[inv[B], r], X], pw[B, r]]
        rhs = product(X, C[i], i)
        if not np.array_equal(conj, rhs):
            ok_conj = False
            bad_i = bad_i or i
    detail = f"{mode}, 1 <= i <= {n}" + (f", first failure at i = {bad_i}" if bad_i else "")
    out.append(check("(bx)^i = b^i x^i prod [x,_j b]^C(i,j+1)", where, ok_power, detail))

    lhs = chains[int(level(p))]
    rhs = product(np.zeros_like(X), (-C[p]) % e, p - 1)
    out.append(check(f"[x,_p b] = prod [x,_i b]^-C(p,i) (p = {p})", where, bool(np.array_equal(lhs, rhs)), mode))
    out.append(check("b^-i x b^i = x prod [x,_j b]^C(i,j)", where, ok_conj, detail))
    return out
