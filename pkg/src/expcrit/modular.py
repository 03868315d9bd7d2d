"""Small matrices and polynomials over Z/nZ, sized for desk-scale searches."""

from __future__ import annotations

import itertools

import numpy as np


def mat_mul(A, B, n):
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % n


def mat_pow(M, e, n):
    M = np.asarray(M, dtype=np.int64) % n
    R = np.eye(M.shape[0], dtype=np.int64) % n
    while e:
        if e & 1:
            R = mat_mul(R, M, n)
        M = mat_mul(M, M, n)
        e >>= 1
    return R


def mat_order(M, n, limit=10**6):
    """Multiplicative order of an invertible matrix mod ``n`` by repeated multiplication."""
    M = np.asarray(M, dtype=np.int64) % n
    ident = np.eye(M.shape[0], dtype=np.int64) % n
    cur = M.copy()
    k = 1
    while not np.array_equal(cur, ident):
        cur = mat_mul(cur, M, n)
        k += 1
        if k > limit:
            raise ValueError("matrix is not invertible or its order is too large")
    return k


def rank_mod_p(rows, p):
    """Rank of an integer matrix over the field with ``p`` elements."""
    A = np.array(rows, dtype=np.int64) % p
    if A.size == 0:
        return 0
    r = 0
    nrows, ncols = A.shape
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        for i in range(nrows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        r += 1
        if r == nrows:
            break
    return r


def acts_irreducibly_mod_p(M, p):
    """True when no proper non-zero subspace of F_p^k is invariant under ``M``.

    The smallest invariant subspace containing ``v`` is spanned by
    ``v, Mv, M^2 v, ...``, so checking that this span is everything for every
    non-zero ``v`` is an exhaustive test.
    """
    M = np.asarray(M, dtype=np.int64) % p
    k = M.shape[0]
    for v in itertools.product(range(p), repeat=k):
        if not any(v):
            continue
        vecs = [np.array(v, dtype=np.int64)]
        for _ in range(k - 1):
            vecs.append(M @ vecs[-1] % p)
        if rank_mod_p(vecs, p) < k:
            return False
    return True


def invariant_subspaces_mod_p(M, p):
    """All M-invariant subspaces of F_p^k, by growing subspaces one vector at a time."""
    M = np.asarray(M, dtype=np.int64) % p
    k = M.shape[0]
    vectors = list(itertools.product(range(p), repeat=k))
    zero = (0,) * k
    frontier = [frozenset([zero])]
    seen = set(frontier)
    while frontier:
        nxt = []
        for S in frontier:
            for v in vectors:
                if v in S:
                    continue
                T = frozenset(
                    tuple((a + c * b) % p for a, b in zip(s, v)) for s in S for c in range(p)
                )
                if T not in seen:
                    seen.add(T)
                    nxt.append(T)
        frontier = nxt
    invariant = []
    for S in seen:
        if all(tuple(int(x) for x in M @ np.array(w) % p) in S for w in S):
            invariant.append(S)
    return sorted(invariant, key=len)


def poly_divmod(num, den, p):
    """Divide polynomials over F_p given as low-to-high coefficient lists."""
    num = [c % p for c in num]
    den = [c % p for c in den]
    while den and den[-1] == 0:
        den.pop()
    inv = pow(den[-1], -1, p)
    q = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv % p
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] = (num[i + j] - c * d) % p
    rem = num[: len(den) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


def is_irreducible_poly(coeffs, p):
    """Monic polynomial ``x^k + c_{k-1} x^{k-1} + ... + c_0`` given as ``(c_0, ..., c_{k-1})``."""
    k = len(coeffs)
    f = list(coeffs) + [1]
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            _, rem = poly_divmod(f, list(low) + [1], p)
            if not rem:
                return False
    return True


def companion(coeffs, n):
    """Companion matrix of the monic polynomial with low coefficients ``coeffs``, mod ``n``."""
    k = len(coeffs)
    C = np.zeros((k, k), dtype=np.int64)
    for i in range(1, k):
        C[i, i - 1] = 1
    for i, c in enumerate(coeffs):
        C[i, k - 1] = -c
    return C % n
