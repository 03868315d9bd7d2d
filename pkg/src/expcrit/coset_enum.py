"""Finitely presented groups and Todd-Coxeter coset enumeration (HLT strategy).

Words are tuples of signed generator numbers: ``k`` stands for generator
``k - 1`` and ``-k`` for its inverse.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from math import comb

import numpy as np

from .core import Permutation, materialize
from .errors import CapExceeded, IncompleteTable, PreconditionViolated, SpecSyntaxError


def coset_cap():
    return int(os.environ.get("EXPCRIT_MAX_COSETS", 100000))


# -- words ------------------------------------------------------------------------


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert(word):
    return tuple(-x for x in reversed(word))


def power(word, k):
    if k < 0:
        word, k = invert(word), -k
    return free_reduce(tuple(word) * k)


def comm(x, y):
    """Word for ``x**-1 y**-1 x y``."""
    return free_reduce(invert(x) + invert(y) + tuple(x) + tuple(y))


def iterated_comm(x, b, i):
    for _ in range(i):
        x = comm(x, b)
    return x


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        n = len(self.generators)
        rels = []
        for r in self.relators:
            r = free_reduce(r)
            if not r:
                continue
            if any(x == 0 or abs(x) > n for x in r):
                raise ValueError(f"relator {r} uses a generator out of range")
            rels.append(r)
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(rels))

    def word_text(self, word):
        if not word:
            return "1"
        parts = []
        for x in word:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else name + "^-1")
        return "*".join(parts)

    def __str__(self):
        rels = ", ".join(self.word_text(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


# -- text format ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<sym>[<>|,;\[\]()^*=]))")


class _WordParser:
    def __init__(self, text, names=None):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise SpecSyntaxError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0
        self.names = names

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None, kind=None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value if value is not None else kind
            raise SpecSyntaxError(f"expected {want!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def word(self):
        w = self.factor()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take("*")
                w = w + self.factor()
            elif kind == "name" or val in ("(", "["):
                w = w + self.factor()
            else:
                return free_reduce(w)

    def factor(self):
        w = self.atom()
        while self.peek()[1] == "^":
            self.take("^")
            _, val, _ = self.take(kind="int")
            w = power(w, int(val))
        return w

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "name":
            self.take()
            if val not in self.names:
                raise SpecSyntaxError(f"unknown generator {val!r}", pos)
            return (self.names.index(val) + 1,)
        if kind == "int" and val == "1":
            self.take()
            return ()
        if val == "(":
            self.take("(")
            w = self.word()
            self.take(")")
            return w
        if val == "[":
            self.take("[")
            first = self.word()
            if self.peek()[1] == ";":
                self.take(";")
                _, n, npos = self.take(kind="int")
                if int(n) < 0:
                    raise SpecSyntaxError("iteration count must be non-negative", npos)
                b = self.word()
                self.take("]")
                return iterated_comm(first, b, int(n))
            w = first
            while self.peek()[1] == ",":
                self.take(",")
                w = comm(w, self.word())
            self.take("]")
            return w
        raise SpecSyntaxError(f"unexpected token {val!r}", pos)


def parse_presentation(text):
    """Parse ``< a, b | a^8, [a,b]^2, [a; 2 b], a^2 = b^2 >``."""
    p = _WordParser(text, names=[])
    p.take("<")
    names = []
    while True:
        _, val, pos = p.take(kind="name")
        if val in names:
            raise SpecSyntaxError(f"duplicate generator {val!r}", pos)
        names.append(val)
        if p.peek()[1] == ",":
            p.take(",")
            continue
        break
    p.names = names
    relators = []
    if p.peek()[1] == "|":
        p.take("|")
        if p.peek()[1] != ">":
            while True:
                lhs = p.word()
                if p.peek()[1] == "=":
                    p.take("=")
                    lhs = free_reduce(lhs + invert(p.word()))
                relators.append(lhs)
                if p.peek()[1] == ",":
                    p.take(",")
                    continue
                break
    p.take(">")
    if p.i != len(p.tokens):
        tok = p.peek()
        raise SpecSyntaxError(f"trailing input {tok[1]!r}", tok[2])
    return Presentation(tuple(names), tuple(relators))


# -- enumeration ------------------------------------------------------------------


def _columns(word):
    # generator g -> column 2g, inverse -> 2g + 1
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in word]


class CosetTable:
    """Result of a completed enumeration, renumbered so live cosets are ``0..n-1``."""

    def __init__(self, presentation, subgroup_words, rows, defined):
        self.presentation = presentation
        self.subgroup_words = tuple(subgroup_words)
        self.rows = rows
        self.defined = defined

    @property
    def num_cosets(self):
        return int(self.rows.shape[0])

    def __len__(self):
        return self.num_cosets

    @property
    def complete(self):
        return bool((self.rows >= 0).all())

    def action(self, gen_index):
        return self.rows[:, 2 * gen_index]

    def trace(self, coset, word):
        for c in _columns(word):
            coset = int(self.rows[coset, c])
        return coset

    def check(self):
        """Every relator closes up at every coset and columns are mutually inverse."""
        n = self.num_cosets
        if not self.complete:
            return False
        idx = np.arange(n)
        for g in range(len(self.presentation.generators)):
            if not np.array_equal(self.rows[self.rows[:, 2 * g], 2 * g + 1], idx):
                return False
        for r in self.presentation.relators:
            cur = idx.copy()
            for c in _columns(r):
                cur = self.rows[cur, c]
            if not np.array_equal(cur, idx):
                return False
        for w in self.subgroup_words:
            if self.trace(0, w) != 0:
                return False
        return True


def todd_coxeter(pres, subgroup_words=(), max_cosets=None):
    """Enumerate cosets of the subgroup generated by ``subgroup_words``.

    Relator-table scanning with coincidences processed immediately through
    a union-find forest.  ``max_cosets`` bounds the total number of cosets
    ever defined; exceeding it raises :class:`CapExceeded`.
    """
    max_cosets = coset_cap() if max_cosets is None else max_cosets
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    ncols = 2 * len(pres.generators)
    rels = [_columns(r) for r in pres.relators]
    subs = [_columns(free_reduce(w)) for w in subgroup_words]
    table = [[-1] * ncols]
    parent = [0]

    def define(c, x):
        d = len(table)
        if d >= max_cosets:
            raise CapExceeded("cosets", max_cosets, f"coset enumeration exceeded {max_cosets} cosets")
        table.append([-1] * ncols)
        parent.append(d)
        table[c][x] = d
        table[d][x ^ 1] = c

    def rep(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def merge(k, l, queue):
        k, l = rep(k), rep(l)
        if k == l:
            return
        if l < k:
            k, l = l, k
        parent[l] = k
        queue.append(l)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = table[e]
            for x in range(ncols):
                f = row[x]
                if f < 0:
                    continue
                if table[f][x ^ 1] == e:
                    table[f][x ^ 1] = -1
                e1, f1 = rep(e), rep(f)
                if table[e1][x] >= 0:
                    merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] >= 0:
                    merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def scan_and_fill(c, w):
        f = b = c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    for w in subs:
        if w:
            scan_and_fill(0, w)
    c = 0
    while c < len(table):
        if parent[c] == c:
            for r in rels:
                scan_and_fill(c, r)
                if parent[c] != c:
                    break
            if parent[c] == c:
                for x in range(ncols):
                    if table[c][x] < 0:
                        define(c, x)
        c += 1

    live = [c for c in range(len(table)) if parent[c] == c]
    new = {c: i for i, c in enumerate(live)}
    rows = np.array([[new[rep(table[c][x])] for x in range(ncols)] for c in live], dtype=np.intp)
    return CosetTable(pres, [free_reduce(w) for w in subgroup_words], rows, len(table))


def table_to_group(tbl, name=None):
    """Permutation group generated by the generator columns of a completed table.

    Over the trivial subgroup this is the regular action, so the order equals
    the number of cosets.
    """
    if not tbl.complete:
        raise IncompleteTable("coset table has undefined entries")
    n = tbl.num_cosets
    gens = [Permutation(tbl.action(g), check=False) for g in range(len(tbl.presentation.generators))]
    if n == 1:
        gens = [Permutation.identity(1)] * len(gens)
    return materialize(gens, name=name)


def presented_group(pres, max_cosets=None, name=None):
    return table_to_group(todd_coxeter(pres, (), max_cosets), name=name)


# -- the universal type-A presentation --------------------------------------------


def u_presentation(p, m):
    """Two-generator relators for the universal type-A group with parameters ``(p, m)``."""
    if m < 2:
        raise PreconditionViolated("m-too-small", "the universal group needs m >= 2")
    a, b = (1,), (2,)
    c = [iterated_comm(a, b, i) for i in range(p + 1)]
    rels = []
    for i in range(p):
        for j in range(i + 1, p):
            rels.append(comm(c[i], c[j]))
    tail = c[p]
    for j in range(1, p):
        tail = tail + power(c[j], comb(p, j))
    rels.append(free_reduce(tail))
    rels.append(power(a, p**m))
    for i in range(1, p):
        rels.append(power(c[i], p ** (m - 1)))
    rels.append(power(b, p ** (m - 1)))
    return Presentation(("a0", "b0"), tuple(rels))


def type_b_relators(p, alpha, beta, rho, sigma):
    """Presentation with parameters ``(alpha, beta, rho, sigma)`` over generators a, b."""
    a, b = (1,), (2,)
    c = comm(a, b)
    rels = [
        power(c, p),
        comm(c, a),
        comm(c, b),
        free_reduce(power(a, p**alpha) + invert(power(c, p**rho))),
        free_reduce(power(b, p**beta) + invert(power(c, p**sigma))),
    ]
    return Presentation(("a", "b"), tuple(rels))
