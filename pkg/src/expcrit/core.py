"""Permutations, materialized finite groups and homomorphisms.

Every concrete group in the package ends up as a :class:`FiniteGroup`: a
permutation group whose elements have been enumerated breadth-first from the
identity, so each element carries a stable integer id (0 is the identity).
Products are composed left to right: ``x * y`` applies ``x`` first.
"""

from __future__ import annotations

import math
import os
import re
from functools import reduce

import numpy as np

from .errors import (
    ActionError,
    CapExceeded,
    DegreeMismatch,
    NotAHomomorphism,
)

# Groups up to this order keep a full Cayley table (int16 entries).
TABLE_CAP = 8192


def max_elements():
    return int(os.environ.get("EXPCRIT_MAX_ELEMENTS", 20000))


def lcm(*values):
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


class Permutation:
    """A bijection of ``{0..degree-1}`` stored as its image sequence."""

    __slots__ = ("images",)

    def __init__(self, images, check=True):
        arr = np.array(images, dtype=np.intp)
        if check:
            if arr.ndim != 1 or arr.size == 0:
                raise ValueError("a permutation needs a non-empty 1-d image sequence")
            if not np.array_equal(np.sort(arr), np.arange(arr.size)):
                raise ValueError(f"not a bijection on 0..{arr.size - 1}: {arr.tolist()}")
        arr.setflags(write=False)
        self.images = arr

    @classmethod
    def identity(cls, degree):
        return cls(np.arange(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles, degree=None, one_based=False):
        """Build from cycle notation.

        ``cycles`` is either a string such as ``"(1 2 3)(4 5)"`` or an iterable
        of tuples.  With ``one_based`` the points are shifted down by one.
        """
        if isinstance(cycles, str):
            parsed = []
            text = cycles.strip()
            if text and not re.fullmatch(r"(\(\s*(-?\d+[\s,]*)*\)\s*)+", text):
                raise ValueError(f"malformed cycle notation: {cycles!r}")
            for body in re.findall(r"\(([^)]*)\)", text):
                pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
                parsed.append(tuple(pts))
            cycles = parsed
        cycles = [tuple(c) for c in cycles]
        shift = 1 if one_based else 0
        cycles = [tuple(x - shift for x in c) for c in cycles]
        pts = [x for c in cycles for x in c]
        if any(x < 0 for x in pts):
            raise ValueError("cycle points out of range")
        if len(pts) != len(set(pts)):
            raise ValueError("cycles are not disjoint")
        need = max(pts) + 1 if pts else 1
        if degree is None:
            degree = need
        elif degree < need:
            raise ValueError(f"degree {degree} too small for points up to {need - 1}")
        img = np.arange(degree)
        for c in cycles:
            for i, x in enumerate(c):
                img[x] = c[(i + 1) % len(c)]
        return cls(img, check=False)

    @property
    def degree(self):
        return self.images.size

    def __call__(self, point):
        return int(self.images[point])

    def __mul__(self, other):
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        return Permutation(other.images[self.images], check=False)

    def inverse(self):
        return Permutation(np.argsort(self.images), check=False)

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def cycles(self):
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = int(self.images[start])
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = int(self.images[x])
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self):
        return lcm(*(len(c) for c in self.cycles()))

    def cycle_string(self, one_based=False):
        shift = 1 if one_based else 0
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(x + shift) for x in c) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self.images, other.images)

    def __hash__(self):
        return hash(self.images.tobytes())

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def _as_images(g):
    return g.images if isinstance(g, Permutation) else np.asarray(g, dtype=np.intp)


class SpanningTree:
    """Breadth-first spanning tree of a group's Cayley graph for chosen generators.

    ``levels`` holds, per depth, triples ``(k, ids, parents)`` meaning
    ``ids = parents * gens[k]``.
    """

    def __init__(self, group, gens):
        n = group.order
        self.gens = tuple(int(g) for g in gens)
        parent = np.full(n, -1, dtype=np.intp)
        pgen = np.full(n, -1, dtype=np.intp)
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.intp)
        tables = [group.right(g) for g in self.gens]
        self.levels = []
        while frontier.size:
            level = []
            nxt_all = []
            for k, tab in enumerate(tables):
                nxt = np.asarray(tab[frontier], dtype=np.intp)
                fresh = ~seen[nxt]
                cand, par = nxt[fresh], frontier[fresh]
                cand, first = np.unique(cand, return_index=True)
                par = par[first]
                if cand.size:
                    seen[cand] = True
                    parent[cand] = par
                    pgen[cand] = k
                    level.append((k, cand, par))
                    nxt_all.append(cand)
            if level:
                self.levels.append(level)
            frontier = np.concatenate(nxt_all) if nxt_all else np.array([], dtype=np.intp)
        self.size = int(seen.sum())
        self.parent = parent
        self.parent_gen = pgen

    def spans(self, group):
        return self.size == group.order

    def evaluate(self, target, images):
        """Map every element to ``target`` ids by following generator images."""
        mapping = np.full(self.parent.size, -1, dtype=np.intp)
        mapping[0] = 0
        tabs = [target.right(int(h)) for h in images]
        for level in self.levels:
            for k, ids, par in level:
                mapping[ids] = tabs[k][mapping[par]]
        return mapping


class FiniteGroup:
    """A materialized permutation group.

    Elements are stored as rows of ``elements``; ``id`` of an element is its
    row.  Build instances with :func:`materialize`.
    """

    def __init__(self, generators, elements, gen_right, parent, parent_gen, name=None):
        self.generators = tuple(generators)
        self.elements = elements
        self.degree = elements.shape[1]
        self.order = elements.shape[0]
        self.name = name
        self._gen_right = gen_right
        self.parent = parent
        self.parent_gen = parent_gen
        self._index = {row.tobytes(): i for i, row in enumerate(elements)}
        self.gen_ids = tuple(self.id_of(g) for g in self.generators)
        self._rmul = None
        self._right_cache = {}
        self._left_cache = {}
        self._trees = {}
        self._inverses = None
        self._orders = None
        self.info = {}

    def __repr__(self):
        label = self.name or "FiniteGroup"
        return f"<{label}: order {self.order}, degree {self.degree}, {len(self.generators)} generators>"

    def __len__(self):
        return self.order

    # -- element access ---------------------------------------------------

    def element(self, i):
        return Permutation(self.elements[i].astype(np.intp), check=False)

    def id_of(self, perm):
        arr = np.asarray(_as_images(perm), dtype=self.elements.dtype)
        try:
            return self._index[arr.tobytes()]
        except KeyError:
            raise ValueError("permutation is not an element of this group") from None

    def contains(self, perm):
        arr = np.asarray(_as_images(perm), dtype=self.elements.dtype)
        return arr.size == self.degree and arr.tobytes() in self._index

    def _ids_of_rows(self, rows):
        rows = np.ascontiguousarray(rows, dtype=self.elements.dtype)
        idx = self._index
        return np.fromiter((idx[r.tobytes()] for r in rows), dtype=np.intp, count=rows.shape[0])

    # -- multiplication -----------------------------------------------------

    @property
    def has_table(self):
        return self.order <= TABLE_CAP

    def _ensure_table(self):
        if self._rmul is None:
            n = self.order
            dt = np.int16 if n < 2**15 else np.int32
            rm = np.empty((n, n), dtype=dt)
            rm[0] = np.arange(n)
            gr, par, pg = self._gen_right, self.parent, self.parent_gen
            for y in range(1, n):
                rm[y] = gr[pg[y]][rm[par[y]]]
            self._rmul = rm
        return self._rmul

    @property
    def table(self):
        """Cayley table: ``table[x, y]`` is the id of ``x * y``."""
        if not self.has_table:
            raise CapExceeded("Cayley table", TABLE_CAP)
        return self._ensure_table().T

    def right(self, h):
        """Array mapping every id ``x`` to the id of ``x * h``."""
        h = int(h)
        if self.has_table:
            return self._ensure_table()[h]
        tab = self._right_cache.get(h)
        if tab is None:
            himg = self.elements[h].astype(np.intp)
            tab = self._ids_of_rows(himg[self.elements])
            if len(self._right_cache) > 64:
                self._right_cache.clear()
            self._right_cache[h] = tab
        return tab

    def left(self, h):
        """Array mapping every id ``x`` to the id of ``h * x``."""
        h = int(h)
        if self.has_table:
            return np.ascontiguousarray(self._ensure_table()[:, h])
        tab = self._left_cache.get(h)
        if tab is None:
            himg = self.elements[h].astype(np.intp)
            tab = self._ids_of_rows(self.elements[:, himg])
            if len(self._left_cache) > 64:
                self._left_cache.clear()
            self._left_cache[h] = tab
        return tab

    def mul(self, x, y):
        if self.has_table:
            return int(self._ensure_table()[y, x])
        ex = self.elements[x].astype(np.intp)
        return self._index[self.elements[y][ex].tobytes()]

    def product(self, *ids):
        acc = 0
        for x in ids:
            acc = self.mul(acc, x)
        return acc

    @property
    def inverses(self):
        if self._inverses is None:
            if self.has_table:
                self._inverses = np.argmax(self._ensure_table() == 0, axis=1).astype(np.intp)
            else:
                self._inverses = self._ids_of_rows(np.argsort(self.elements, axis=1))
        return self._inverses

    def inv(self, x):
        return int(self.inverses[x])

    def power(self, x, k):
        k = int(k)
        if k < 0:
            x, k = self.inv(x), -k
        result, base = 0, int(x)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def powers(self, k):
        """Array of ``x**k`` for every id ``x``."""
        k = int(k)
        ids = np.arange(self.order, dtype=np.intp)
        if k < 0:
            ids = self.inverses.copy()
            k = -k
        result = np.zeros(self.order, dtype=np.intp)
        base = ids
        while k:
            if k & 1:
                result = self._mul_arrays(result, base)
            base = self._mul_arrays(base, base)
            k >>= 1
        return result

    def _mul_arrays(self, xs, ys):
        if self.has_table:
            return self._ensure_table()[ys, xs].astype(np.intp)
        ex = self.elements[xs].astype(np.intp)
        ey = self.elements[ys]
        return self._ids_of_rows(np.take_along_axis(ey, ex, axis=1))

    def conjugates_of(self, s):
        """Array mapping ``g`` to the id of ``g**-1 * s * g``."""
        inv = self.inverses
        if self.has_table:
            t = self._ensure_table()
            g = np.arange(self.order)
            return t[g, t[s, inv]].astype(np.intp)
        return self._mul_arrays(self.right(s)[inv], np.arange(self.order))

    def commutator(self, x, y):
        return commutator(self, x, y)

    # -- invariants -----------------------------------------------------------

    @property
    def orders(self):
        """Element orders, indexed by id."""
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            active = np.arange(n, dtype=np.intp)
            if self.has_table:
                t = self._ensure_table()
                cur = active.copy()
                k = 1
                while active.size:
                    done = cur == 0
                    orders[active[done]] = k
                    active, cur = active[~done], cur[~done]
                    cur = t[active, cur].astype(np.intp)
                    k += 1
            else:
                ident = np.arange(self.degree)
                base = self.elements.astype(np.intp)
                cur = base.copy()
                k = 1
                while active.size:
                    done = (cur == ident).all(axis=1)
                    orders[active[done]] = k
                    keep = ~done
                    active, cur, base = active[keep], cur[keep], base[keep]
                    cur = np.take_along_axis(base, cur, axis=1)
                    k += 1
            self._orders = orders
        return self._orders

    def element_order(self, x):
        return int(self.orders[x])

    @property
    def exponent(self):
        return lcm(*np.unique(self.orders).tolist())

    def is_abelian(self):
        gens = [g for g in self.gen_ids if g != 0]
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if self.mul(a, b) != self.mul(b, a):
                    return False
        return True

    def spanning_tree(self, gens=None):
        key = tuple(self.gen_ids if gens is None else (int(g) for g in gens))
        tree = self._trees.get(key)
        if tree is None:
            tree = SpanningTree(self, key)
            self._trees[key] = tree
        return tree


def materialize(generators, cap=None, name=None):
    """Enumerate the group generated by ``generators``.

    Ids are assigned breadth-first from the identity, expanding each element
    by right multiplication with the generators in the given order.
    """
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator degrees differ: {degree} vs {g.degree}")
    cap = max_elements() if cap is None else cap
    dt = np.int16 if degree < 2**15 else np.int32
    gimg = [g.images for g in gens]
    ident = np.arange(degree, dtype=dt)
    rows = [ident]
    index = {ident.tobytes(): 0}
    parent, pgen = [-1], [-1]
    right = [[] for _ in gens]
    i = 0
    while i < len(rows):
        x = rows[i]
        for k, g in enumerate(gimg):
            y = g[x].astype(dt)
            key = y.tobytes()
            j = index.get(key)
            if j is None:
                j = len(rows)
                if j >= cap:
                    raise CapExceeded("group order", cap, f"group order exceeds materialization cap {cap}")
                index[key] = j
                rows.append(y)
                parent.append(i)
                pgen.append(k)
            right[k].append(j)
        i += 1
    elements = np.vstack(rows)
    group = FiniteGroup(
        gens,
        elements,
        [np.array(r, dtype=np.intp) for r in right],
        np.array(parent, dtype=np.intp),
        np.array(pgen, dtype=np.intp),
        name=name,
    )
    return group


def regular_group(identity, generators, mul, cap=None, name=None):
    """Right regular permutation realization of a natively multiplied group.

    Returns ``(group, elements)`` where ``elements[i]`` is the native element
    with id ``i`` in ``group``.
    """
    cap = max_elements() if cap is None else cap
    elems = [identity]
    index = {identity: 0}
    right = [[] for _ in generators]
    i = 0
    while i < len(elems):
        x = elems[i]
        for k, g in enumerate(generators):
            y = mul(x, g)
            j = index.get(y)
            if j is None:
                j = len(elems)
                if j >= cap:
                    raise CapExceeded("group order", cap)
                index[y] = j
                elems.append(y)
            right[k].append(j)
        i += 1
    perms = [Permutation(r, check=False) for r in right]
    return materialize(perms, cap=cap, name=name), elems


def element_order(G, x):
    return G.element_order(x)


def exponent(G):
    return G.exponent


def commutator(G, x, y):
    """``x**-1 * y**-1 * x * y``."""
    return G.product(G.inv(x), G.inv(y), x, y)


def iterated_commutator(G, x, b, i):
    """``[x, b, ..., b]`` with ``i`` copies of ``b``; ``i = 0`` gives ``x``."""
    if i < 0:
        raise ValueError("iteration count must be non-negative")
    for _ in range(i):
        x = commutator(G, x, b)
    return x


class GroupHom:
    """A verified homomorphism given by the images of source generators."""

    def __init__(self, source, target, images, mapping, source_gens):
        self.source = source
        self.target = target
        self.images = tuple(int(h) for h in images)
        self.mapping = mapping
        self.source_gens = tuple(source_gens)

    def __call__(self, x):
        return int(self.mapping[x])

    def kernel_ids(self):
        return np.flatnonzero(self.mapping == 0)

    def image_ids(self):
        return np.unique(self.mapping)

    def is_injective(self):
        return self.kernel_ids().size == 1

    def is_surjective(self):
        return self.image_ids().size == self.target.order

    def is_bijective(self):
        return self.source.order == self.target.order and self.is_injective()

    def __repr__(self):
        return f"<GroupHom {self.source!r} -> {self.target!r}>"


def hom_from_images(source, target, images, source_gens=None):
    """Extend generator images to a homomorphism, checking every relation.

    The map is built along a spanning tree and then checked against
    ``f(x * g) == f(x) * f(g)`` for every element ``x`` and generator ``g``,
    which is exactly the condition for a well-defined homomorphism.
    """
    gens = source.gen_ids if source_gens is None else tuple(int(g) for g in source_gens)
    images = [int(h) for h in images]
    if len(images) != len(gens):
        raise ValueError(f"expected {len(gens)} images, got {len(images)}")
    tree = source.spanning_tree(gens)
    if not tree.spans(source):
        raise ValueError("source generators do not generate the source group")
    mapping = tree.evaluate(target, images)
    for k, (g, h) in enumerate(zip(gens, images)):
        lhs = mapping[source.right(g)]
        rhs = target.right(h)[mapping]
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            raise NotAHomomorphism(int(bad[0]), k)
    return GroupHom(source, target, images, mapping, gens)


def direct_product(G, H, name=None):
    """``G x H`` acting on the disjoint union of the two point sets."""
    dg, dh = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(np.concatenate([g.images, np.arange(dg, dg + dh)]))
    for h in H.generators:
        gens.append(np.concatenate([np.arange(dg), h.images + dg]))
    P = materialize(gens, name=name or f"{G.name or 'G'} x {H.name or 'H'}")
    P.info["factors"] = (G, H)
    P.info["first_gens"] = P.gen_ids[: len(G.generators)]
    P.info["second_gens"] = P.gen_ids[len(G.generators):]
    return P


def automorphism_order(hom):
    m = hom.mapping
    cur = m.copy()
    ident = np.arange(m.size)
    k = 1
    while not np.array_equal(cur, ident):
        cur = m[cur]
        k += 1
    return k


def semidirect_product(base, top_order, action, name=None):
    """``base`` extended by a cyclic group of order ``top_order``.

    ``action`` is either a :class:`GroupHom` from ``base`` to itself or the
    sequence of images of ``base``'s generators under the automorphism
    ``alpha`` induced by the top generator ``t``, so that
    ``t**-1 * x * t == alpha(x)``.  The product is realized on the points
    ``Z_top x base`` by right translation: ``(i, x)(j, y) = (i+j, alpha^j(x) y)``.
    """
    if isinstance(action, GroupHom):
        alpha = action
    else:
        try:
            alpha = hom_from_images(base, base, action)
        except NotAHomomorphism as exc:
            raise ActionError(f"action is not an automorphism: {exc}") from exc
    if not alpha.is_bijective():
        raise ActionError("action is not an automorphism: not bijective")
    a_ord = automorphism_order(alpha)
    if top_order % a_ord:
        raise ActionError(f"order mismatch: automorphism of order {a_ord} does not divide {top_order}")
    n = base.order
    total = n * top_order
    if total > max_elements():
        raise CapExceeded("group order", max_elements())
    gens = []
    for g in base.gen_ids:
        r = np.asarray(base.right(g), dtype=np.intp)
        gens.append(np.concatenate([i * n + r for i in range(top_order)]))
    amap = alpha.mapping
    gens.append(np.concatenate([((i + 1) % top_order) * n + amap for i in range(top_order)]))
    G = materialize(gens, name=name)
    G.info["base_gens"] = G.gen_ids[:-1]
    G.info["top_gen"] = G.gen_ids[-1]
    G.info["action_order"] = a_ord
    return G
