"""The universal type-A construction ``U = W : <b0>`` and its quotients ``U/N``.

Native elements are pairs ``(e, v)``: ``e`` is the exponent of ``b0`` modulo
``p^(m-1)`` and ``v`` the exponent vector of ``a_0, ..., a_{p-1}`` in ``W``.
The product is ``(e1, v1)(e2, v2) = (e1 + e2, phi^e2(v1) + v2)``, so that
``b0^-1 w b0 = phi(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import groups
from .checks import check, skip
from .coset_enum import presented_group, u_presentation, _columns
from .core import TABLE_CAP, Permutation, automorphism_order, hom_from_images, iterated_commutator, materialize
from .errors import CapExceeded, PreconditionViolated
from .numtheory import is_prime
from .structure import (
    derived_subgroup,
    frattini,
    generate,
    is_normal,
    join,
    normal_closure,
    quotient,
)


def _check_params(p, m):
    if not is_prime(p):
        raise PreconditionViolated("p-prime", f"{p} is not prime")
    if m < 2:
        raise PreconditionViolated("m-too-small", f"m = {m}: the universal group needs m >= 2")


@dataclass(frozen=True)
class WModule:
    """``Z_{p^m} x (Z_{p^(m-1)})^(p-1)`` with basis ``a_0, ..., a_{p-1}``."""

    p: int
    m: int

    @property
    def moduli(self):
        return (self.p**self.m,) + (self.p ** (self.m - 1),) * (self.p - 1)

    @property
    def order(self):
        return int(np.prod(self.moduli))

    @property
    def basis_names(self):
        return tuple(f"a{i}" for i in range(self.p))

    def reduce(self, v):
        return tuple(int(x) % q for x, q in zip(v, self.moduli))

    def vectors(self):
        """All exponent vectors in mixed-radix order (``a_0`` varies slowest)."""
        grids = np.meshgrid(*[np.arange(q) for q in self.moduli], indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)

    def index(self, vecs):
        vecs = np.asarray(vecs, dtype=np.int64)
        idx = np.zeros(vecs.shape[:-1], dtype=np.int64)
        for i, q in enumerate(self.moduli):
            idx = idx * q + vecs[..., i] % q
        return idx

    def group(self):
        return groups.abelian(self.moduli)


def build_W(p, m):
    _check_params(p, m)
    return WModule(p, m)


def phi_matrix(p):
    """Integer matrix of ``phi`` on exponent vectors; column ``i`` is ``phi(a_i)``."""
    M = np.zeros((p, p), dtype=np.int64)
    for i in range(p):
        M[i, i] = 1
    for i in range(p - 1):
        M[i + 1, i] += 1
    for j in range(1, p):
        M[j, p - 1] -= comb(p, j)
    return M


def _apply(W, M, v):
    return W.reduce(M @ np.asarray(v, dtype=np.int64))


def phi_automorphism(p, m):
    """``phi`` as a verified automorphism of ``W`` (realized as a permutation group)."""
    W = build_W(p, m)
    Wg = W.group()
    M = phi_matrix(p)

    def element(v):
        x = 0
        for g, c in zip(Wg.gen_ids, v):
            x = Wg.mul(x, Wg.power(g, c))
        return x

    images = [element(_apply(W, M, np.eye(p, dtype=np.int64)[i])) for i in range(p)]
    hom = hom_from_images(Wg, Wg, images)
    if not hom.is_bijective():
        raise PreconditionViolated("phi-automorphism", "phi is not bijective on W")
    hom.order = automorphism_order(hom)
    return hom


class UContext:
    """Native arithmetic for ``U`` plus, when requested, its permutation realization."""

    def __init__(self, p, m, realize=True):
        _check_params(p, m)
        self.p, self.m = p, m
        self.W = WModule(p, m)
        self.phi = phi_matrix(p)
        self.top = p ** (m - 1)
        # true powers phi^e for 0 <= e < p^(m-1); row i reduced mod the i-th modulus
        mods = np.array(self.W.moduli, dtype=np.int64)[:, None]
        self.phi_powers = [np.eye(p, dtype=np.int64)]
        for _ in range(1, self.top):
            self.phi_powers.append((self.phi @ self.phi_powers[-1]) % mods)
        self.order = self.W.order * self.top
        zero = (0,) * p
        self.identity = (0, zero)
        self.a_native = [(0, tuple(1 if j == i else 0 for j in range(p))) for i in range(p)]
        self.b_native = (1, zero)
        self.native_elements, self.native_index = self._enumerate()
        self.U = self._realize() if realize else None
        if self.U is not None:
            self.a_ids = [self.id_of(x) for x in self.a_native]
            self.b0 = self.id_of(self.b_native)
            self.a0 = self.a_ids[0]

    # -- native arithmetic -----------------------------------------------------

    def mul(self, x, y):
        e1, v1 = x
        e2, v2 = y
        w = self.phi_powers[e2] @ np.asarray(v1, dtype=np.int64) + np.asarray(v2, dtype=np.int64)
        return ((e1 + e2) % self.top, self.W.reduce(w))

    def _enumerate(self):
        gens = [self.a_native[0], self.b_native]
        elems = [self.identity]
        index = {self.identity: 0}
        i = 0
        while i < len(elems):
            x = elems[i]
            for g in gens:
                y = self.mul(x, g)
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
            i += 1
        return elems, index

    # -- permutation realization ----------------------------------------------------

    @property
    def degree(self):
        return self.W.order + self.top

    def permutation(self, x):
        """Affine action on ``W`` (``w -> phi^e(w) + v``) together with ``e`` on ``Z_{p^(m-1)}``."""
        e, v = x
        vecs = self._vecs
        img = vecs @ self.phi_powers[e].T + np.asarray(v, dtype=np.int64)
        pts = self.W.index(img)
        tail = self.W.order + (np.arange(self.top) + e) % self.top
        return Permutation(np.concatenate([pts, tail]), check=False)

    def _realize(self):
        self._vecs = self.W.vectors()
        gens = [self.permutation(self.a_native[0]), self.permutation(self.b_native)]
        U = materialize(gens, name=f"U({self.p},{self.m})")
        U.info["u_context"] = self
        return U

    def id_of(self, native):
        return self.native_index[native]

    # -- vectorized native arithmetic --------------------------------------------------

    def _arrays(self):
        if getattr(self, "_E", None) is None:
            self._E = np.array([e for e, _ in self.native_elements], dtype=np.int64)
            self._V = np.array([v for _, v in self.native_elements], dtype=np.int64)
            self._PH = np.stack(self.phi_powers)
            self._mods = np.array(self.W.moduli, dtype=np.int64)
            keys = self._E * self.W.order + self.W.index(self._V)
            self._key_to_id = np.empty(self.order, dtype=np.intp)
            self._key_to_id[keys] = np.arange(self.order)
        return self._E, self._V

    def _lookup(self, E, V):
        return self._key_to_id[(E % self.top) * self.W.order + self.W.index(V % self._mods)]

    def right_mul(self, xs, y):
        """Ids of ``x * y`` for every id ``x`` in ``xs`` (native BFS ids)."""
        E, V = self._arrays()
        xs = np.asarray(xs, dtype=np.intp)
        ey, vy = self.native_elements[y]
        img = V[xs] @ self.phi_powers[ey].T + np.asarray(vy, dtype=np.int64)
        return self._lookup(E[xs] + ey, img)

    def left_mul(self, x, ys):
        """Ids of ``x * y`` for every id ``y`` in ``ys``."""
        E, V = self._arrays()
        ys = np.asarray(ys, dtype=np.intp)
        ex, vx = self.native_elements[x]
        img = np.einsum("kij,j->ki", self._PH[E[ys]], np.asarray(vx, dtype=np.int64)) + V[ys]
        return self._lookup(E[ys] + ex, img)

    def native_of(self, x):
        return self.native_elements[x]

    def native_table_matches(self):
        """Compare the native product with the permutation group's table element by element."""
        U = self.U
        n = U.order
        idx = self.native_index
        els = self.native_elements
        for x in range(n):
            row = np.fromiter((idx[self.mul(els[x], els[y])] for y in range(n)), dtype=np.intp, count=n)
            if not np.array_equal(row, U.table[x]):
                return False
        return True

    def ids_match_permutations(self, sample=None):
        """Native BFS ids agree with the permutation realization's ids."""
        U = self.U
        xs = range(U.order) if sample is None else sample
        return all(U.id_of(self.permutation(self.native_elements[x])) == x for x in xs)


def build_U(p, m, realize=True):
    return UContext(p, m, realize=realize)


def subgroup_D(ctx):
    """The order-p normal subgroup generated by ``a_0^(p^(m-1)) a_{p-1}^(p^(m-2))``."""
    U, p, m = ctx.U, ctx.p, ctx.m
    d = U.mul(U.power(ctx.a0, p ** (m - 1)), U.power(ctx.a_ids[p - 1], p ** (m - 2)))
    D = generate(U, [d])
    if D.order != p or not is_normal(U, D):
        raise PreconditionViolated("D-normal-order-p", f"D has order {D.order}")
    return D


def derived_U(ctx):
    return generate(ctx.U, ctx.a_ids[1:])


def maximal_abelian_M(ctx):
    """``<b0^p> W``."""
    U = ctx.U
    return generate(U, [U.power(ctx.b0, ctx.p)] + ctx.a_ids)


def enumerate_script_N(ctx):
    """Every normal ``N`` with ``D <= N <= Phi(U)``, ``N`` meeting ``<a0>`` trivially, ``U'`` not in ``N``.

    Each such ``N`` is a join of ``D`` with normal closures of single
    elements of ``Phi(U)``; since any non-trivial subgroup of ``<a0>``
    contains ``a0^(p^(m-1))``, joins containing that element are pruned.
    """
    U, p, m = ctx.U, ctx.p, ctx.m
    if U.order > TABLE_CAP:
        raise CapExceeded("N enumeration", TABLE_CAP)
    D = subgroup_D(ctx)
    Phi = frattini(U)
    top = U.power(ctx.a0, p ** (m - 1))
    pieces = {}
    for x in Phi.members:
        if D.mask[x]:
            continue
        C = normal_closure(U, D.generators + (int(x),), start=D.mask)
        if not C.mask[top]:
            pieces.setdefault(C.key, C)
    pieces = sorted(pieces.values(), key=lambda H: (H.order, H.key))
    found = {D.key: D}
    frontier = [D]
    while frontier:
        nxt = []
        for N in frontier:
            for C in pieces:
                if C.issubset(N):
                    continue
                J = join(N, C)
                if J.mask[top] or J.key in found:
                    continue
                found[J.key] = J
                nxt.append(J)
        frontier = nxt
    Ud = derived_U(ctx)
    out = [N for N in found.values() if not Ud.issubset(N)]
    return sorted(out, key=lambda H: (H.order, H.members.tolist()))


def quotient_UN(ctx, N, name=None):
    return quotient(ctx.U, N, name=name or f"U({ctx.p},{ctx.m})/N[{N.order}]")


def quotient_UD(ctx):
    return quotient(ctx.U, subgroup_D(ctx), name=f"U({ctx.p},{ctx.m})/D")


def native_quotient(ctx, kernel, name=None):
    """``U/N`` on right cosets of ``N`` (given as native ids), using native arithmetic only."""
    n = ctx.order
    label = np.full(n, -1, dtype=np.intp)
    reps = []
    kernel = np.asarray(kernel, dtype=np.intp)
    for x in range(n):
        if label[x] < 0:
            label[ctx.left_mul(x, kernel)] = len(reps)
            reps.append(x)
    reps = np.array(reps, dtype=np.intp)
    everything = np.arange(n)
    gens = [ctx.id_of(ctx.a_native[0]), ctx.id_of(ctx.b_native)]
    perms = [Permutation(label[ctx.right_mul(everything, g)[reps]], check=False) for g in gens]
    for g in gens:
        # right multiplication must permute cosets, i.e. N is normal
        moved = label[ctx.right_mul(everything, g)]
        if np.any(moved != label[ctx.right_mul(reps, g)][label]):
            raise PreconditionViolated("N-normal", "kernel is not a union of cosets compatible with multiplication")
    return materialize(perms, name=name or f"U({ctx.p},{ctx.m})/N[{kernel.size}]")


@dataclass
class KernelRoute:
    """Result of mapping ``a0 -> a``, ``b0 -> b`` from ``U`` onto a type-A group ``P``."""

    a: int
    b: int
    kernel: np.ndarray
    in_script_N: dict

    @property
    def ok(self):
        return all(self.in_script_N.values())


def hom_images(ctx, P, a, b):
    """Images in ``P`` of every native element under ``a0 -> a, b0 -> b``, or None if that is no homomorphism."""
    n = ctx.order
    everything = np.arange(n)
    gens = [ctx.id_of(ctx.a_native[0]), ctx.id_of(ctx.b_native)]
    right = [ctx.right_mul(everything, g) for g in gens]
    targets = [a, b]
    img = np.full(n, -1, dtype=np.intp)
    img[0] = 0
    frontier = np.array([0], dtype=np.intp)
    while frontier.size:
        nxt = []
        for R, t in zip(right, targets):
            ys = R[frontier]
            new = img[ys] < 0
            ys, xs = ys[new], frontier[new]
            img[ys] = np.asarray(P._mul_arrays(img[xs], np.full(xs.size, t, dtype=np.intp)), dtype=np.intp)
            nxt.append(np.unique(ys))
        frontier = np.unique(np.concatenate(nxt))
    for R, t in zip(right, targets):
        if np.any(img[R] != P._mul_arrays(img, np.full(n, t, dtype=np.intp))):
            return None
    return img


def kernel_route(ctx, P, A):
    """Find generators ``a`` (of maximal order, in ``A``) and ``b`` (outside ``A``) of ``P``
    for which ``a0 -> a, b0 -> b`` extends to a surjection ``U -> P``; return its kernel
    with the defining conditions of the family of ``N`` checked natively.
    """
    p, m = ctx.p, ctx.m
    orders = P.orders
    top = p**m
    a_cands = [int(x) for x in A.members if orders[x] == top]
    b_cands = [int(x) for x in range(P.order) if not A.mask[x]]
    for a in a_cands:
        for b in b_cands:
            if generate(P, [a, b]).order != P.order:
                continue
            img = hom_images(ctx, P, a, b)
            if img is None:
                continue
            kernel = np.flatnonzero(img == 0)
            E, V = ctx._arrays()
            kmask = np.zeros(ctx.order, dtype=bool)
            kmask[kernel] = True
            mods = ctx.W.moduli
            d = [0] * p
            d[0] = p ** (m - 1)
            d[p - 1] = (d[p - 1] + p ** (m - 2)) % mods[p - 1]
            d_id = ctx.id_of((0, ctx.W.reduce(d)))
            pivot = ctx.id_of((0, ctx.W.reduce([p ** (m - 1)] + [0] * (p - 1))))
            derived_gens = [ctx.id_of(x) for x in ctx.a_native[1:]]
            conditions = {
                "surjective": np.unique(img).size == P.order,
                "D <= N": bool(kmask[d_id]),
                "N <= Phi(U)": bool(np.all((E[kernel] % p == 0) & (V[kernel, 0] % p == 0))),
                "N meets <a0> trivially": not kmask[pivot],
                "U' not in N": not all(kmask[g] for g in derived_gens),
            }
            return KernelRoute(a, b, kernel, conditions)
    return None


def _evaluate(U, gens, word):
    x = 0
    for c in _columns(word):
        g = gens[c // 2]
        x = U.mul(x, g if c % 2 == 0 else U.inv(g))
    return x


def verify_u_facts(ctx, max_cosets=None):
    """Check the listed properties of ``U`` on this instance; returns :class:`Check` records."""
    p, m = ctx.p, ctx.m
    subj = f"U({p},{m})"
    U = ctx.U
    out = []
    small = U.order <= TABLE_CAP
    over = f"skipped: |U| = {U.order} is over the table cap {TABLE_CAP}"

    phi = phi_automorphism(p, m)
    out.append(check("phi has order p", subj, phi.order == p, f"order {phi.order}"))

    if small:
        out.append(check("native arithmetic = permutation table", subj, ctx.native_table_matches()))
    else:
        sample = range(0, U.order, max(1, U.order // 200))
        out.append(check("native ids = permutation ids (sampled)", subj, ctx.ids_match_permutations(sample)))

    ok = all(iterated_commutator(U, ctx.a0, ctx.b0, i) == ctx.a_ids[i] for i in range(p))
    out.append(check("a_i = [a0,_i b0]", subj, ok))
    out.append(check("U = <a0, b0>", subj, generate(U, [ctx.a0, ctx.b0]).order == U.order))

    expected = p ** ((m - 1) * (p + 1) + 1)
    out.append(check("|U| = p^((m-1)(p+1)+1)", subj, U.order == expected == len(ctx.native_elements), f"{U.order} vs {expected}"))

    pres = u_presentation(p, m)
    gens = (ctx.a0, ctx.b0)
    bad = [i for i, r in enumerate(pres.relators) if _evaluate(U, gens, r) != 0]
    out.append(check("defining relators hold in U", subj, not bad, f"failing relators {bad}" if bad else ""))
    try:
        P = presented_group(pres, max_cosets=max_cosets)
        out.append(check("coset enumeration of the presentation gives |U|", subj, P.order == U.order, f"{P.order} cosets"))
    except CapExceeded as exc:
        out.append(skip("coset enumeration of the presentation gives |U|", subj, f"skipped: {exc}"))

    M = maximal_abelian_M(ctx)
    out.append(check("M = <b0^p>W is abelian", subj, M.is_abelian()))
    out.append(check("M = <b0^p>W is maximal (index p)", subj, U.order // M.order == p))

    Ud = derived_U(ctx)
    D_true = derived_subgroup(U)
    out.append(check("U' = <a_1..a_{p-1}>", subj, np.array_equal(Ud.mask, D_true.mask)))
    out.append(check("|U'| = p^((m-1)(p-1))", subj, Ud.order == p ** ((m - 1) * (p - 1)), f"|U'| = {Ud.order}"))
    out.append(check("U' abelian of exponent p^(m-1)", subj, Ud.is_abelian() and Ud.exponent == p ** (m - 1)))
    out.append(check("U has derived length 2", subj, derived_subgroup_of(U, Ud).order == 1))

    F = frattini(U)
    F_claim = generate(U, [U.power(ctx.a0, p)] + ctx.a_ids[1:] + [U.power(ctx.b0, p)])
    out.append(check("Phi(U) = <a0^p, a_1..a_{p-1}, b0^p>", subj, np.array_equal(F.mask, F_claim.mask)))

    if not small:
        out.append(skip("non-trivial normal subgroups of U inside U' contain the pivot", subj, over))
        out.append(skip("D has order p, is normal and lies in Phi(U)", subj, over))
        out.append(skip("U/D: elements outside M/D have order dividing p^(m-1)", subj, over))
        return out

    pivot = U.power(iterated_commutator(U, ctx.a0, ctx.b0, p - 1), p ** (m - 2))
    out.extend(_check_vii(U, Ud, pivot, subj))

    D = subgroup_D(ctx)
    out.append(check("D order p and normal", subj, D.order == p and is_normal(U, D)))
    out.append(check("D <= Phi(U)", subj, D.issubset(F)))
    out.append(check_expt(ctx, D, M, subj))
    return out


def derived_subgroup_of(U, H):
    """Derived subgroup of the subgroup ``H`` (commutators of its generators, closed in ``H``)."""
    comms = [U.commutator(a, b) for i, a in enumerate(H.generators) for b in H.generators[i + 1:]]
    if not comms:
        return generate(U, [])
    K = generate(U, comms)
    grew = True
    while grew:
        grew = False
        for k in K.generators:
            for h in H.generators:
                c = U.product(U.inv(h), k, h)
                if not K.mask[c]:
                    K = generate(U, K.generators + (c,), start=K.mask)
                    grew = True
    return K


def _check_vii(U, Ud, pivot, subj):
    """Every non-trivial subgroup of ``U'`` normal in ``U`` contains ``pivot``."""
    from .structure import all_subgroups

    K, embed = Ud.as_group()
    lattice = all_subgroups(K)
    n_normal = 0
    ok = pivot != 0
    for S in lattice:
        if S.order == 1:
            continue
        ids = embed[S.members]
        mask = np.zeros(U.order, dtype=bool)
        mask[ids] = True
        H = generate(U, ids.tolist())
        if is_normal(U, H):
            n_normal += 1
            ok = ok and bool(mask[pivot])
    return [check("non-trivial normal subgroups of U inside U' contain the pivot", subj, ok, f"{n_normal} non-trivial normal subgroups of U' scanned")]


def check_expt(ctx, D, M, subj):
    """In ``U/D`` every element outside ``M/D`` has order dividing ``p^(m-1)``."""
    Q = quotient(ctx.U, D)
    proj = Q.info["projection"]
    inside = np.zeros(Q.order, dtype=bool)
    inside[proj.mapping[M.members]] = True
    outside = ~inside
    orders = Q.orders[outside]
    bound = ctx.p ** (ctx.m - 1)
    ok = bool(np.all(bound % orders == 0))
    return check("U/D: elements outside M/D have order dividing p^(m-1)", subj, ok, f"{int(outside.sum())} elements outside M/D, max order {int(orders.max()) if orders.size else 1}")
