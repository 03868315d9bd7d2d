"""Isomorphism testing by invariant fingerprints and generator-image backtracking."""

from __future__ import annotations

import os
from collections import Counter

import numpy as np

from .core import GroupHom
from .errors import CapExceeded
from .numtheory import prime_divisors
from .structure import center, derived_series, frattini_basis, generate, pgroup_prime, trivial


def iso_cap():
    return int(os.environ.get("EXPCRIT_MAX_ISO", 512))


def element_invariants(G):
    """Per-element isomorphism invariants: order, centralizer size, p-th root counts."""
    inv = G.info.get("element_invariants")
    if inv is not None:
        return inv
    cols = [G.orders]
    if G.has_table and G.order <= 4096:
        t = G.table
        cols.append((t == t.T).sum(axis=1))
    for p in prime_divisors(G.order) if G.order > 1 else []:
        cols.append(np.bincount(G.powers(p), minlength=G.order))
    inv = np.stack(cols, axis=1).astype(np.int64)
    G.info["element_invariants"] = inv
    return inv


def fingerprint(G):
    fp = G.info.get("fingerprint")
    if fp is None:
        inv = element_invariants(G)
        classes = Counter(map(tuple, inv.tolist()))
        fp = (
            G.order,
            G.exponent,
            tuple(sorted(classes.items())),
            center(G).order,
            tuple(derived_series(G)),
        )
        G.info["fingerprint"] = fp
    return fp


def small_generating_set(G, target=None):
    """Greedy short generating sequence; minimal for p-groups.

    Ties between equally good elements prefer the invariant class that is
    rarest in ``target`` (fewer candidate images in a search).
    """
    if G.order == 1:
        return []
    inv = element_invariants(G)
    if target is not None:
        tinv = element_invariants(target)
        tcount = Counter(map(tuple, tinv.tolist()))
        rarity = np.array([tcount.get(tuple(r), 0) for r in inv.tolist()])
    else:
        rarity = np.zeros(G.order, dtype=np.int64)
    p = pgroup_prime(G)
    if p is not None:
        _, phi = frattini_basis(G, p)
        base = phi
    else:
        base = trivial(G)
    gens = []
    cur = trivial(G)
    span = base
    while cur.order < G.order:
        best = None
        for x in range(1, G.order):
            if span.mask[x]:
                continue
            H = generate(G, cur.generators + (x,), start=cur.mask)
            score = (-H.order, rarity[x], x)
            if best is None or score < best[0]:
                best = (score, x, H)
        _, x, cur = best
        gens.append(x)
        span = generate(G, span.generators + (x,), start=span.mask | cur.mask)
    return gens


def find_isomorphism(G, H, cap=None):
    """Return an isomorphism ``G -> H`` as a :class:`GroupHom`, or ``None``.

    Raises :class:`CapExceeded` when the fingerprints agree but the order is
    above the backtracking cap.
    """
    cap = iso_cap() if cap is None else cap
    if G.order != H.order:
        return None
    if G is H:
        return GroupHom(G, H, G.gen_ids, np.arange(G.order), G.gen_ids)
    if fingerprint(G) != fingerprint(H):
        return None
    if G.order > cap:
        raise CapExceeded("isomorphism order", cap)
    if G.order == 1:
        return GroupHom(G, H, [0] * len(G.gen_ids), np.zeros(1, dtype=np.intp), G.gen_ids)
    gens = small_generating_set(G, target=H)
    ginv, hinv = element_invariants(G), element_invariants(H)
    cands = [np.flatnonzero((hinv == ginv[g]).all(axis=1)) for g in gens]
    tree = G.spanning_tree(gens)
    gorders, horders = G.orders, H.orders
    k = len(gens)
    n = G.order
    # order of every pairwise product is preserved by an isomorphism
    pair_orders = {
        (i, j): (int(gorders[G.mul(gens[i], gens[j])]), int(gorders[G.mul(gens[j], gens[i])]))
        for j in range(k)
        for i in range(j)
    }
    chosen = [0] * k

    def leaf():
        mapping = tree.evaluate(H, chosen)
        for g, h in zip(gens, chosen):
            if not np.array_equal(mapping[G.right(g)], H.right(h)[mapping]):
                return None
        if np.unique(mapping).size != n:
            return None
        return mapping

    def rec(i):
        if i == k:
            return leaf()
        for y in cands[i]:
            y = int(y)
            ok = True
            for j in range(i):
                a, b = pair_orders[(j, i)]
                if horders[H.mul(chosen[j], y)] != a or horders[H.mul(y, chosen[j])] != b:
                    ok = False
                    break
            if not ok:
                continue
            chosen[i] = y
            found = rec(i + 1)
            if found is not None:
                return found
        return None

    mapping = rec(0)
    if mapping is None:
        return None
    return GroupHom(G, H, chosen, mapping, gens)


def is_isomorphic(G, H, cap=None):
    return find_isomorphism(G, H, cap=cap) is not None
