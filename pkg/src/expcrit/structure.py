"""Subgroups of materialized groups.

Subgroups are sets of element ids of a parent :class:`~expcrit.core.FiniteGroup`
together with a short generating sequence.  Closures are computed by
breadth-first right multiplication over whole frontiers at once.
"""

from __future__ import annotations

import os
from itertools import product

import numpy as np

from .core import Permutation, hom_from_images, lcm, materialize
from .errors import CapExceeded, NotAPGroup, NotNormal
from .numtheory import factorize, is_prime, p_part, prime_power


def lattice_cap():
    return int(os.environ.get("EXPCRIT_MAX_LATTICE", 2000))


class Subgroup:
    """A subgroup of ``parent``: sorted member ids plus generator ids."""

    __slots__ = ("parent", "members", "generators", "mask", "_group")

    def __init__(self, parent, mask, generators):
        self.parent = parent
        self.mask = mask
        self.members = np.flatnonzero(mask)
        self.generators = tuple(int(g) for g in generators)
        self._group = None

    @property
    def order(self):
        return int(self.members.size)

    @property
    def key(self):
        return self.members.tobytes()

    def __len__(self):
        return self.order

    def __contains__(self, x):
        return bool(self.mask[x])

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and np.array_equal(
            other.members, self.members
        )

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.parent!r}>"

    def issubset(self, other):
        return bool(other.mask[self.members].all())

    def is_abelian(self):
        G = self.parent
        gens = self.generators
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if G.mul(a, b) != G.mul(b, a):
                    return False
        return True

    @property
    def exponent(self):
        return lcm(*np.unique(self.parent.orders[self.members]).tolist())

    def is_proper(self):
        return self.order < self.parent.order

    def as_group(self):
        """Materialize as a standalone group.

        Returns ``(K, embed)`` where ``embed[k]`` is the parent id of the
        element with id ``k`` in ``K``.  Generators of ``K`` are this
        subgroup's generators, in order.
        """
        if self._group is None:
            G = self.parent
            gens = [G.element(g) for g in self.generators] or [Permutation.identity(G.degree)]
            K = materialize(gens, cap=max(G.order, 1) + 1)
            embed = G._ids_of_rows(K.elements)
            self._group = (K, embed)
        return self._group


def generate(G, gens, start=None):
    """Subgroup generated by ``gens`` (plus the members of ``start``, if given).

    ``start`` must be a mask of elements already in the generated subgroup.
    """
    gens = tuple(dict.fromkeys(int(g) for g in gens if int(g) != 0))
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    if start is not None:
        mask |= start
    frontier = np.flatnonzero(mask)
    tabs = [G.right(g) for g in gens]
    while frontier.size and tabs:
        nxt = np.unique(np.concatenate([t[frontier] for t in tabs]).astype(np.intp))
        nxt = nxt[~mask[nxt]]
        mask[nxt] = True
        frontier = nxt
    return Subgroup(G, mask, gens)


def whole(G):
    mask = np.ones(G.order, dtype=bool)
    return Subgroup(G, mask, [g for g in G.gen_ids if g != 0])


def trivial(G):
    return generate(G, [])


def from_mask(G, mask):
    """Wrap a subgroup given only by its member mask, finding generators greedily."""
    members = np.flatnonzero(mask)
    cur = trivial(G)
    if members.size == 1:
        return cur
    orders = G.orders[members]
    for x in members[np.lexsort((members, -orders))]:
        if not cur.mask[x]:
            cur = generate(G, cur.generators + (int(x),), start=cur.mask)
            if cur.order == members.size:
                break
    if cur.order != members.size or not np.array_equal(cur.mask, mask):
        raise ValueError("mask is not a subgroup")
    return cur


def join(A, B):
    G = A.parent
    return generate(G, A.generators + B.generators, start=A.mask | B.mask)


def intersection(A, B):
    return from_mask(A.parent, A.mask & B.mask)


def normal_closure(G, gens, start=None):
    """Smallest normal subgroup containing ``gens``."""
    H = generate(G, gens, start=start)
    changed = True
    while changed:
        changed = False
        for h in H.generators:
            for g in G.gen_ids:
                c = G.product(G.inv(g), h, g)
                if not H.mask[c]:
                    H = generate(G, H.generators + (c,), start=H.mask)
                    changed = True
    return H


def is_normal(G, H):
    for h in H.generators:
        for g in G.gen_ids:
            if not H.mask[G.product(G.inv(g), h, g)]:
                return False
    return True


# -- characteristic subgroups ----------------------------------------------------


def derived_subgroup(G):
    gens = [g for g in dict.fromkeys(G.gen_ids) if g != 0]
    comms = [G.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def derived_series(G):
    """Orders of the derived series, starting with ``|G|``, until it stabilizes."""
    sizes = [G.order]
    cur = G
    while True:
        D = derived_subgroup(cur)
        if D.order == cur.order:
            return sizes
        sizes.append(D.order)
        if D.order == 1:
            return sizes
        cur, _ = D.as_group()


def is_solvable(G):
    return derived_series(G)[-1] == 1


def derived_length(G):
    sizes = derived_series(G)
    return len(sizes) - 1 if sizes[-1] == 1 else None


def _commuting_mask(G, gens):
    mask = np.ones(G.order, dtype=bool)
    for g in gens:
        mask &= G.right(g) == G.left(g)
    return mask


def center(G):
    return from_mask(G, _commuting_mask(G, G.gen_ids))


def centralizer(G, S):
    return from_mask(G, _commuting_mask(G, S.generators))


def normalizer_mask(G, S):
    mask = np.ones(G.order, dtype=bool)
    for s in S.generators:
        mask &= S.mask[G.conjugates_of(s)]
    return mask


def normalizer(G, S):
    return from_mask(G, normalizer_mask(G, S))


def power_subgroup(G, p):
    """Subgroup generated by all ``p``-th powers."""
    return generate(G, np.unique(G.powers(p)))


def pgroup_prime(G):
    pp = prime_power(G.order)
    return pp[0] if pp else None


def _frattini_pgroup(G, p):
    # In a p-group, Phi = G' G^p and G' G^p = <G', g^p for generators g>.
    D = derived_subgroup(G)
    pows = [G.power(g, p) for g in G.gen_ids]
    return generate(G, D.generators + tuple(pows), start=D.mask)


def frattini(G):
    """Intersection of all maximal subgroups."""
    if G.order == 1:
        return trivial(G)
    p = pgroup_prime(G)
    if p is not None:
        return _frattini_pgroup(G, p)
    mask = np.ones(G.order, dtype=bool)
    for M in maximal_subgroups(G):
        mask &= M.mask
    return from_mask(G, mask)


def frattini_basis(G, p, phi=None):
    """Elements of ``G`` whose images form a basis of ``G / Phi(G)`` (G a p-group)."""
    phi = _frattini_pgroup(G, p) if phi is None else phi
    basis = []
    cur = phi
    candidates = list(G.gen_ids)
    for g in candidates:
        if not cur.mask[g]:
            basis.append(int(g))
            cur = generate(G, cur.generators + (int(g),), start=cur.mask)
    return basis, phi


def rank(G):
    """Minimal number of generators of a p-group (0 for the trivial group)."""
    if G.order == 1:
        return 0
    p = pgroup_prime(G)
    if p is None:
        raise NotAPGroup(f"order {G.order} is not a prime power")
    basis, _ = frattini_basis(G, p)
    return len(basis)


# -- maximal subgroups -----------------------------------------------------------


def _normalized_functionals(p, d):
    for f in product(range(p), repeat=d):
        nz = [c for c in f if c]
        if nz and nz[0] == 1:
            yield f


def _pgroup_maximals(G, p):
    basis, phi = frattini_basis(G, p)
    out = []
    for f in _normalized_functionals(p, len(basis)):
        i0 = next(i for i, c in enumerate(f) if c)
        gens = []
        for j, c in enumerate(f):
            if j != i0:
                gens.append(G.mul(basis[j], G.power(basis[i0], (-c) % p)))
        H = generate(G, phi.generators + tuple(gens), start=phi.mask)
        assert H.order * p == G.order
        out.append(H)
    return out


def maximal_subgroups(G, method="auto"):
    """Maximal subgroups of ``G``.

    For p-groups these are the preimages of the hyperplanes of ``G/Phi(G)``
    (``method="frattini"``); otherwise they are filtered from the full
    subgroup lattice (``method="lattice"``).
    """
    if G.order == 1:
        return []
    p = pgroup_prime(G)
    if method == "auto":
        method = "frattini" if p is not None else "lattice"
    if method == "frattini":
        if p is None:
            raise NotAPGroup("the Frattini-hyperplane method needs a p-group")
        return _pgroup_maximals(G, p)
    return all_subgroups(G).maximal()


# -- lattice ---------------------------------------------------------------------


class SubgroupLattice:
    """All subgroups of ``parent``, sorted by order and then by members."""

    def __init__(self, parent, subgroups):
        self.parent = parent
        self.subgroups = sorted(subgroups, key=lambda H: (H.order, tuple(H.members.tolist())))
        self._containment = None

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def proper(self):
        return [H for H in self.subgroups if H.order < self.parent.order]

    @property
    def containment(self):
        """Pairs ``(i, j)`` with ``subgroups[i]`` a proper subgroup of ``subgroups[j]``."""
        if self._containment is None:
            subs = self.subgroups
            pairs = []
            for j, K in enumerate(subs):
                for i, H in enumerate(subs[:j]):
                    if H.order < K.order and K.order % H.order == 0 and H.issubset(K):
                        pairs.append((i, j))
            self._containment = pairs
        return self._containment

    def maximal(self):
        found = []
        for H in sorted(self.proper(), key=lambda H: -H.order):
            if not any(M.order % H.order == 0 and H.issubset(M) for M in found):
                found.append(H)
        return sorted(found, key=lambda H: (H.order, tuple(H.members.tolist())))


def cyclic_subgroups(G):
    seen = {}
    for x in range(G.order):
        H = generate(G, [x])
        seen.setdefault(H.key, H)
    return list(seen.values())


def power_table(G):
    """``table[x, k] = x**k`` for ``0 <= k <= exp(G)``."""
    e = G.exponent
    n = G.order
    out = np.zeros((n, e + 1), dtype=np.intp)
    ids = np.arange(n)
    for k in range(1, e + 1):
        out[:, k] = G._mul_arrays(out[:, k - 1], ids)
    return out


def _cyclic_extension(G):
    # Every non-trivial subgroup K of a solvable group has a normal subgroup H
    # of prime index, so K = <H, x> with x in N(H) and x^r in H for a prime r.
    pw = power_table(G)
    orders = G.orders
    triv = trivial(G)
    found = {triv.key: triv}
    layer = [triv]
    while layer:
        new_layer = []
        for H in layer:
            cand_mask = normalizer_mask(G, H) & ~H.mask
            done = H.mask.copy()
            for x in np.flatnonzero(cand_mask):
                if done[x]:
                    continue
                hits = np.flatnonzero(H.mask[pw[x, 1: orders[x] + 1]])
                k = int(hits[0]) + 1
                if not is_prime(k):
                    continue
                J = generate(G, H.generators + (int(x),), start=H.mask)
                done |= J.mask
                if J.key not in found:
                    found[J.key] = J
                    new_layer.append(J)
        layer = new_layer
    return list(found.values())


def _join_closure(G):
    cyc = cyclic_subgroups(G)
    found = {H.key: H for H in cyc}
    queue = list(cyc)
    while queue:
        H = queue.pop()
        for C in cyc:
            if C.issubset(H):
                continue
            J = join(H, C)
            if J.key not in found:
                found[J.key] = J
                queue.append(J)
    return list(found.values())


def all_subgroups(G, cap=None, method="auto"):
    """Every subgroup of ``G``.

    Solvable groups use cyclic extension by normalizing elements of prime
    order modulo the current subgroup; other groups close the set of cyclic
    subgroups under joins.  Both produce the complete lattice.
    """
    cap = lattice_cap() if cap is None else cap
    if G.order > cap:
        raise CapExceeded("lattice group order", cap)
    cache = G.info.get("lattice")
    if cache is not None and method == "auto":
        return cache
    if method == "auto":
        method = "extension" if is_solvable(G) else "join"
    subs = _cyclic_extension(G) if method == "extension" else _join_closure(G)
    lat = SubgroupLattice(G, subs)
    if method in ("extension", "join"):
        G.info["lattice"] = lat
    return lat


# -- Sylow, Hall, quotients -----------------------------------------------------------


def sylow_subgroup(G, p):
    """A Sylow ``p``-subgroup, grown from a cyclic p-subgroup by normalizing p-elements."""
    target = p_part(G.order, p)
    if target == 1:
        raise ValueError(f"{p} does not divide the group order {G.order}")
    if target == G.order:
        return whole(G)
    orders = G.orders
    pel = np.array([o > 1 and p_part(int(o), p) == o for o in orders.tolist()])
    cands = np.flatnonzero(pel)
    start = int(cands[np.lexsort((cands, -orders[cands]))][0])
    H = generate(G, [start])
    while H.order < target:
        ext = np.flatnonzero(normalizer_mask(G, H) & ~H.mask & pel)
        if not ext.size:
            raise RuntimeError("Sylow ascent stalled")  # cannot happen by Sylow's theorem
        H = generate(G, H.generators + (int(ext[0]),), start=H.mask)
    return H


def hall_subgroup(G, primes):
    """A subgroup whose order is the product of the given prime parts of ``|G|``, or None."""
    primes = sorted({p for p in primes if G.order % p == 0})
    target = 1
    for p in primes:
        target *= p_part(G.order, p)
    if target == 1:
        return trivial(G)
    if target == G.order:
        return whole(G)
    if len(primes) == 1:
        return sylow_subgroup(G, primes[0])
    for H in all_subgroups(G):
        if H.order == target:
            return H
    return None


def quotient(G, N, name=None):
    """``G/N`` as the permutation group on right cosets of the normal subgroup ``N``.

    The projection ``G -> G/N`` is stored in ``info["projection"]``.
    """
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    n = G.order
    label = np.full(n, -1, dtype=np.intp)
    reps = []
    nm = N.members
    for x in range(n):
        if label[x] < 0:
            coset = G._mul_arrays(nm, np.full(nm.size, x, dtype=np.intp))
            label[coset] = len(reps)
            reps.append(x)
    reps = np.array(reps, dtype=np.intp)
    perms = [label[np.asarray(G.right(g), dtype=np.intp)[reps]] for g in G.gen_ids]
    Q = materialize(perms, name=name)
    assert Q.order * N.order == G.order
    images = [Q.id_of(p) for p in perms]
    Q.info["projection"] = hom_from_images(G, Q, images)
    Q.info["coset_label"] = label
    return Q


# -- predicates ---------------------------------------------------------------------


def is_elementary_abelian(G):
    if G.order == 1:
        return True
    pp = prime_power(G.order)
    return pp is not None and G.is_abelian() and G.exponent == pp[0]


def is_special(Q):
    """Elementary abelian, or class 2 with ``Q' = Z(Q) = Phi(Q)`` elementary abelian."""
    p = pgroup_prime(Q)
    if p is None:
        if Q.order == 1:
            return True
        raise NotAPGroup(f"order {Q.order} is not a prime power")
    if is_elementary_abelian(Q):
        return True
    D, Z, F = derived_subgroup(Q), center(Q), frattini(Q)
    if not (np.array_equal(D.mask, Z.mask) and np.array_equal(D.mask, F.mask)):
        return False
    return D.order > 1 and D.is_abelian() and D.exponent == p


def is_minimal_nonabelian(G):
    """Non-abelian with every proper subgroup abelian (checked on maximal subgroups)."""
    if G.is_abelian():
        return False
    return all(M.is_abelian() for M in maximal_subgroups(G))


def order_factorization(G):
    return dict(factorize(G.order)) if G.order > 1 else {}
