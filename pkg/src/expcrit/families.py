"""Constructors for the classified families of exponent-critical groups.

Every constructor returns a :class:`FiniteGroup` whose ``info["family"]``
records the parameters, and ``info["designated_prime"]`` the prime for which
no witness should exist.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import groups
from .coset_enum import presented_group, type_b_relators
from .core import Permutation, automorphism_order, direct_product, hom_from_images, semidirect_product
from .errors import NoSuchAction, NoSuchOrder, NotAHomomorphism, PreconditionViolated, SearchExhausted
from .modular import acts_irreducibly_mod_p, companion, is_irreducible_poly, mat_order, mat_pow
from .numtheory import factorize, is_prime, p_part, prime_divisors
from .structure import (
    center,
    centralizer,
    is_normal,
    sylow_subgroup,
    derived_subgroup,
    frattini,
    generate,
    is_minimal_nonabelian,
    is_special,
    pgroup_prime,
    quotient,
)


@dataclass(frozen=True)
class FamilyParams:
    tag: str
    params: dict = field(default_factory=dict)

    def __str__(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.tag}({inner})"


@dataclass(frozen=True)
class IrreducibleAction:
    p: int
    m: int
    k: int
    matrix: np.ndarray
    action_order: int
    polynomial: tuple

    def __post_init__(self):
        self.matrix.setflags(write=False)


def _tag(G, tag, designated=None, **params):
    G.info["family"] = FamilyParams(tag, params)
    if designated is not None:
        G.info["designated_prime"] = designated
    return G


def _require_prime(p, name="p"):
    if not is_prime(p):
        raise PreconditionViolated(f"{name}-prime", f"{name} = {p} is not prime")


# -- irreducible actions -------------------------------------------------------------


def admissible_order(p, k, t):
    """``t`` divides ``p^k - 1`` and no ``p^j - 1`` with ``j < k``."""
    return (p**k - 1) % t == 0 and all((p**j - 1) % t for j in range(1, k))


def irreducible_cyclic_action(p, m, k, target_order):
    """Integer matrix mod ``p^m`` of order ``target_order`` acting irreducibly mod ``p``.

    Searches monic degree-``k`` polynomials over F_p in lexicographic order of
    their coefficient vectors ``(c_0, ..., c_{k-1})`` for the first irreducible
    one whose companion matrix has the requested order, then lifts it to
    ``Z/p^m`` and powers off the p-part of the lift's order.
    """
    _require_prime(p)
    if m < 1 or k < 1 or target_order < 1:
        raise ValueError("m, k and target_order must be positive")
    if target_order % p == 0 or not admissible_order(p, k, target_order):
        raise NoSuchOrder(
            f"no irreducible action of order {target_order} on (Z_{p})^{k}: "
            f"need {target_order} | {p}^{k} - 1 and not dividing {p}^j - 1 for j < {k}"
        )
    mod = p**m
    for coeffs in itertools.product(range(p), repeat=k):
        if coeffs[0] == 0 or not is_irreducible_poly(coeffs, p):
            continue
        C = companion(coeffs, p)
        if mat_order(C, p) != target_order:
            continue
        lift = companion(coeffs, p) % p
        t = mat_order(lift, mod)
        M = mat_pow(lift, p_part(t, p), mod)
        if mat_order(M, mod) != target_order or not acts_irreducibly_mod_p(M, p):
            raise SearchExhausted("lifted matrix lost its order or irreducibility")
        return IrreducibleAction(p, m, k, M, target_order, coeffs)
    raise SearchExhausted(f"no irreducible polynomial of degree {k} over F_{p} with order {target_order}")


def _vector_element(G, gens, vec):
    x = 0
    for g, c in zip(gens, vec):
        x = G.mul(x, G.power(g, int(c)))
    return x


def _matrix_images(base, gens, M):
    """Images of ``gens`` under ``v -> M v`` (column convention)."""
    M = np.asarray(M)
    return [_vector_element(base, gens, M[:, i]) for i in range(M.shape[1])]


def minimal_nonabelian_pq(p, k, q, b=1):
    """``(Z_p)^k`` extended by ``Z_{q^b}`` whose generator acts with order ``q``, irreducibly."""
    _require_prime(p)
    _require_prime(q, "q")
    if p == q:
        raise PreconditionViolated("distinct-primes", "p and q must differ")
    if b < 1:
        raise ValueError("b must be positive")
    act = irreducible_cyclic_action(p, 1, k, q)
    base = groups.elementary_abelian(p, k)
    G = semidirect_product(base, q**b, _matrix_images(base, base.gen_ids, act.matrix), name=f"MNA({p}^{k}:{q}^{b})")
    if not is_minimal_nonabelian(G):
        raise PreconditionViolated("minimal-nonabelian", "construction is not minimal non-abelian")
    return _tag(G, "MNA", None, p=p, k=k, q=q, b=b)


# -- cyclic-by-minimal-non-abelian and two-prime families ---------------------------


def family_B(p, a, mna):
    """Cyclic group of order ``p^a`` times a two-prime minimal non-abelian group."""
    _require_prime(p)
    if a < 1:
        raise PreconditionViolated("a-positive")
    primes = prime_divisors(mna.order) if mna.order > 1 else []
    if p in primes:
        raise PreconditionViolated("prime-not-in-complement", f"{p} divides the complement order {mna.order}")
    if len(primes) != 2:
        raise PreconditionViolated("complement-two-primes", f"complement order {mna.order} is not divisible by exactly two primes")
    if not is_minimal_nonabelian(mna):
        raise PreconditionViolated("complement-minimal-nonabelian", "complement is not minimal non-abelian")
    G = direct_product(groups.cyclic(p**a), mna, name=f"C{p**a} x {mna.name or 'H'}")
    return _tag(G, "B", p, p=p, a=a, complement=mna.name)


def family_C1(p, a, q_mna):
    """Cyclic group of order ``p^a`` times a minimal non-abelian q-group."""
    _require_prime(p)
    if a < 1:
        raise PreconditionViolated("a-positive")
    q = pgroup_prime(q_mna)
    if q is None:
        raise PreconditionViolated("complement-q-group", "complement is not a group of prime-power order")
    if q == p:
        raise PreconditionViolated("distinct-primes", f"complement is a {p}-group")
    if not is_minimal_nonabelian(q_mna):
        raise PreconditionViolated("complement-minimal-nonabelian", "complement is not minimal non-abelian")
    G = direct_product(groups.cyclic(p**a), q_mna, name=f"C{p**a} x {q_mna.name or 'Q'}")
    return _tag(G, "C1", p, p=p, a=a, q=q, complement=q_mna.name)


def family_C2(p, m, k, q, n=1):
    """Homocyclic ``(Z_{p^m})^k`` extended by ``Z_{q^n}`` acting through an order-q irreducible action."""
    _require_prime(p)
    _require_prime(q, "q")
    if p == q:
        raise PreconditionViolated("distinct-primes")
    if m < 1 or n < 1:
        raise PreconditionViolated("exponents-positive")
    act = irreducible_cyclic_action(p, m, k, q)
    base = groups.abelian([p**m] * k)
    G = semidirect_product(base, q**n, _matrix_images(base, base.gen_ids, act.matrix), name=f"C{p**m}^{k}:C{q**n}")
    G.info["action"] = act
    return _tag(G, "C2", p, p=p, m=m, k=k, q=q, n=n)


def family_C3(p, m, k, q, n=1):
    """``Z_{p^m} x (Z_p)^k`` extended by ``Z_{q^n}``, trivial on the cyclic factor."""
    if m <= 1:
        raise PreconditionViolated("m-too-small", f"m = {m}: the cyclic factor needs order at least p^2")
    _require_prime(p)
    _require_prime(q, "q")
    if p == q:
        raise PreconditionViolated("distinct-primes")
    if n < 1:
        raise PreconditionViolated("exponents-positive")
    act = irreducible_cyclic_action(p, 1, k, q)
    base = groups.abelian([p**m] + [p] * k)
    c, rest = base.gen_ids[0], base.gen_ids[1:]
    images = [c] + _matrix_images(base, rest, act.matrix)
    G = semidirect_product(base, q**n, images, name=f"(C{p**m} x C{p}^{k}):C{q**n}")
    G.info["action"] = act
    return _tag(G, "C3", p, p=p, m=m, k=k, q=q, n=n)


def pgroup_prime_order(n):
    f = factorize(n) if n > 1 else ()
    return f[0][0] if len(f) == 1 else None


def _extraspecial_action(Q, p, a):
    """Automorphism of the two-generator special group ``Q`` of largest p-power order.

    Scans pairs of images of a fixed generating pair outside the Frattini
    subgroup, keeping those that fix the centre pointwise and act
    irreducibly on ``Q/Q'``.
    """
    q = pgroup_prime(Q)
    F = frattini(Q)
    D = derived_subgroup(Q)
    Z = center(Q)
    gens = _two_generators(Q, F)
    cands = [x for x in range(Q.order) if not F.mask[x]]
    best = None
    for u in cands:
        for v in cands:
            if generate(Q, [u, v]).order != Q.order:
                continue
            try:
                alpha = hom_from_images(Q, Q, [u, v], source_gens=gens)
            except NotAHomomorphism:
                continue
            if not alpha.is_bijective() or any(alpha(z) != z for z in Z.members):
                continue
            o = automorphism_order(alpha)
            if o == 1 or (p**a) % o:
                continue
            if best is not None and o <= best[0]:
                continue
            if not invariant_irreducible(Q, np.arange(Q.order), D, alpha.mapping):
                continue
            best = (o, alpha)
    if best is None:
        raise NoSuchAction(f"no automorphism of {p}-power order dividing {p**a} acts irreducibly on Q/Q' for q = {q}")
    return best[1]


def _two_generators(Q, F):
    for x in range(1, Q.order):
        if F.mask[x]:
            continue
        for y in range(x + 1, Q.order):
            if not F.mask[y] and generate(Q, [x, y]).order == Q.order:
                return (x, y)
    raise PreconditionViolated("two-generated", "group is not 2-generated")


def invariant_irreducible(G, members, N, alpha):
    """Whether ``alpha`` (an id map of ``G``) acts irreducibly on ``H/N``.

    ``members`` are the ids of an ``alpha``-invariant subgroup ``H`` containing
    the normal, ``alpha``-invariant subgroup ``N``.  For each ``x`` in ``H``
    outside ``N`` the smallest invariant subgroup containing ``N`` and ``x``
    must be all of ``H``.
    """
    members = np.asarray(members)
    target = members.size
    done = np.zeros(G.order, dtype=bool)
    for x in members:
        x = int(x)
        if N.mask[x] or done[x]:
            continue
        H = generate(G, N.generators + (x,), start=N.mask)
        grew = True
        while grew:
            grew = False
            for h in H.generators:
                y = int(alpha[h])
                if not H.mask[y]:
                    H = generate(G, H.generators + (y,), start=H.mask)
                    grew = True
        if H.order != target:
            return False
        # every element generating the full module is covered
        done[x] = True
    return True


def conjugation_map(G, y):
    """Id map ``x -> y^-1 x y``."""
    return np.asarray(G.right(y))[np.asarray(G.left(G.inv(y)))]


def family_C4(q, shape, p, a, k=None, n=1, sign="+", action_order=None):
    """Special q-group ``Q`` extended by a non-normal cyclic ``Z_{p^a}``.

    ``shape`` is ``"elementary"`` (``Q = (Z_q)^k``) or ``"extraspecial"``
    (``Q = extraspecial(q, n, sign)``, searched action, ``n = 1`` only).
    """
    _require_prime(p)
    _require_prime(q, "q")
    if p == q:
        raise PreconditionViolated("distinct-primes")
    if a < 1:
        raise PreconditionViolated("a-positive")
    if shape == "elementary":
        if k is None or k < 1:
            raise PreconditionViolated("rank-positive", "elementary shape needs k >= 1")
        if action_order is None:
            feasible = [p**c for c in range(a, 0, -1) if admissible_order(q, k, p**c)]
            if not feasible:
                raise NoSuchAction(f"no element of {p}-power order up to {p**a} acts irreducibly on (Z_{q})^{k}")
            action_order = feasible[0]
        elif (p**a) % action_order or pgroup_prime_order(action_order) != p:
            raise NoSuchAction(f"action order {action_order} is not a non-trivial power of {p} dividing {p**a}")
        try:
            act = irreducible_cyclic_action(q, 1, k, action_order)
        except NoSuchOrder as exc:
            raise NoSuchAction(str(exc)) from exc
        Q = groups.elementary_abelian(q, k)
        images = _matrix_images(Q, Q.gen_ids, act.matrix)
        G = semidirect_product(Q, p**a, images, name=f"C{q}^{k}:C{p**a}")
        G.info["action"] = act
        params = dict(q=q, shape="elementary", k=k, p=p, a=a, action_order=action_order)
    elif shape == "extraspecial":
        if n != 1:
            raise PreconditionViolated("extraspecial-rank", "the automorphism search is limited to n = 1")
        Q = extraspecial(q, n, sign)
        alpha = _extraspecial_action(Q, p, a)
        G = semidirect_product(Q, p**a, alpha, name=f"{Q.name}:C{p**a}")
        params = dict(q=q, shape="extraspecial", n=n, sign=sign, p=p, a=a, action_order=automorphism_order(alpha))
    else:
        raise ValueError(f"unknown shape {shape!r}")
    return _tag(G, "C4", p, **params)


# -- extraspecial groups -------------------------------------------------------------


def _normalize_sign(q, sign):
    s = str(sign).strip().lower()
    if s in ("+", "plus", "p"):
        return "+"
    if s in ("-", "minus", "m"):
        return "-"
    if s.isdigit():
        e = int(s)
        if q % 2 and e == q:
            return "+"
        if q % 2 and e == q * q:
            return "-"
    raise ValueError(f"bad sign {sign!r}: use '+' or '-'")


def central_product(A, B, name=None):
    """Central product of two groups with centres of prime order, identifying the centres."""
    P = direct_product(A, B)
    za = int(center(A).generators[0])
    zb = int(center(B).generators[0])
    pa = A.element(za).images
    pb = B.element(zb).images
    ea = Permutation(np.concatenate([pa, np.arange(A.degree, A.degree + B.degree)]), check=False)
    eb = Permutation(np.concatenate([np.arange(A.degree), pb + A.degree]), check=False)
    x = P.mul(P.id_of(ea), P.inv(P.id_of(eb)))
    return quotient(P, generate(P, [x]), name=name)


def extraspecial(q, n=1, sign="+"):
    """Extraspecial group of order ``q^(1+2n)``.

    For odd ``q`` the sign picks exponent ``q`` (``+``) or ``q^2`` (``-``).
    For ``q = 2`` it picks the central product of dihedral groups of order 8
    (``+``) or one quaternion factor with dihedral ones (``-``).
    """
    _require_prime(q, "q")
    if n < 1:
        raise ValueError("n must be at least 1")
    sign = _normalize_sign(q, sign)
    name = f"{q}^(1+{2 * n}){sign}"
    if q == 2:
        G = groups.dihedral(8) if sign == "+" else groups.dicyclic(8)
        for _ in range(n - 1):
            G = central_product(G, groups.dihedral(8))
    elif sign == "+":
        G = groups.heisenberg(q, n)
    else:
        G = groups.metacyclic_extraspecial(q)
        if n > 1:
            G = central_product(G, groups.heisenberg(q, n - 1))
    G.name = name
    return _tag(G, "EXTRASPECIAL", None, q=q, n=n, sign=sign)


# -- type B p-groups -----------------------------------------------------------------


def typeB_parameters(p, max_sum=None):
    """The printed parameter list ``(alpha, beta, rho, sigma)`` with ``alpha + beta <= max_sum``."""
    if max_sum is None:
        raise ValueError("max_sum is required")
    out = []
    for s in range(2, max_sum + 1):
        for beta in range(1, s):
            alpha = s - beta
            if alpha < beta:
                continue
            for rho, sigma in itertools.product((0, 1), repeat=2):
                if is_typeB_tuple(p, alpha, beta, rho, sigma):
                    out.append((alpha, beta, rho, sigma))
    return out


def is_typeB_tuple(p, alpha, beta, rho, sigma):
    if alpha > beta >= 1:
        return (rho, sigma) in ((0, 1), (1, 1), (1, 0))
    if alpha == beta >= 1:
        if p == 2 and alpha == 1:
            return (rho, sigma) in ((0, 0), (1, 1))
        return (rho, sigma) in ((0, 1), (1, 1))
    return False


def typeB_presentation(p, alpha, beta, rho, sigma, max_cosets=None):
    """Group ``<a, b | [a,b]^p, [a,b,a], [a,b,b], a^(p^alpha) = [a,b]^(p^rho), b^(p^beta) = [a,b]^(p^sigma)>``."""
    _require_prime(p)
    if not is_typeB_tuple(p, alpha, beta, rho, sigma):
        raise PreconditionViolated("invalid-parameters", f"{(alpha, beta, rho, sigma)} is not in the parameter list for p = {p}")
    pres = type_b_relators(p, alpha, beta, rho, sigma)
    G = presented_group(pres, max_cosets=max_cosets, name=f"B_{p}({alpha},{beta},{rho},{sigma})")
    expected = p ** (alpha + beta + 1)
    if G.order != expected:
        raise PreconditionViolated("presented-order", f"presented group has order {G.order}, expected {expected}")
    G.info["presentation"] = pres
    return _tag(G, "TYPEB", p, p=p, alpha=alpha, beta=beta, rho=rho, sigma=sigma)


# -- recognition for the two-prime audit ----------------------------------------------


def sylow_complement_generator(G, Q):
    """Some generator of the cyclic subgroup ``Q`` (its element of largest order)."""
    return int(Q.members[np.argmax(G.orders[Q.members])])


def two_prime_family(G, p):
    """Which of the four two-prime family descriptions ``G`` satisfies, with ``p`` the witness-free prime.

    Returns the list of matching tags among ``C1``, ``C2``, ``C3``, ``C4``.
    """
    primes = prime_divisors(G.order)
    if len(primes) != 2 or p not in primes:
        raise ValueError("need a group of order divisible by exactly two primes including p")
    q = primes[0] if primes[1] == p else primes[1]
    P = sylow_subgroup(G, p)
    Q = sylow_subgroup(G, q)
    tags = []
    P_cyclic = P.exponent == P.order
    Q_cyclic = Q.exponent == Q.order
    P_normal = is_normal(G, P)
    if P_cyclic and P.issubset(center(G)) and is_normal(G, Q):
        Qg, _ = Q.as_group()
        if pgroup_prime(Qg) == q and is_minimal_nonabelian(Qg):
            tags.append("C1")
    if P_normal and P.is_abelian() and Q_cyclic:
        CP = centralizer(G, P)
        if G.order // CP.order == q:
            y = sylow_complement_generator(G, Q)
            alpha = conjugation_map(G, y)
            Pp = _power_in(G, P, p)
            pe = P.exponent
            homocyclic = all(o == pe for o in _cyclic_invariants(G, P, p))
            if homocyclic and not all(alpha[x] == x for x in P.members) and invariant_irreducible(G, P.members, Pp, alpha):
                tags.append("C2")
            C = generate(G, [x for x in P.members if alpha[x] == x])
            comm = generate(G, [G.commutator(int(x), y) for x in P.members])
            if (
                C.exponent == C.order
                and C.order >= p * p
                and comm.order > 1
                and comm.exponent == p
                and C.order * comm.order == P.order
                and invariant_irreducible(G, comm.members, generate(G, []), alpha)
            ):
                tags.append("C3")
    if P_cyclic and not P_normal and is_normal(G, Q):
        Qg, emb = Q.as_group()
        if is_special(Qg):
            x = sylow_complement_generator(G, P)
            alpha = conjugation_map(G, x)
            Qd = _sub_derived(G, Q)
            if all(alpha[z] == z for z in Qd.members) and invariant_irreducible(G, Q.members, Qd, alpha):
                tags.append("C4")
    return tags


def _power_in(G, P, p):
    return generate(G, [G.power(int(x), p) for x in P.members])


def _sub_derived(G, H):
    # [a, g] over a in H and generators g of H generate H'
    return generate(G, [G.commutator(int(a), b) for a in H.members for b in H.generators])


def _log(n, p):
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def _cyclic_invariants(G, P, p):
    """Invariant factor orders of the abelian p-subgroup ``P`` (largest first)."""
    sizes = [P.order]
    cur = P
    while cur.order > 1:
        cur = _power_in(G, cur, p)
        sizes.append(cur.order)
    # ranks[i] = number of cyclic factors of order > p^i
    ranks = [_log(sizes[i] // sizes[i + 1], p) for i in range(len(sizes) - 1)] + [0]
    out = []
    for i in range(len(ranks) - 1):
        out += [p ** (i + 1)] * (ranks[i] - ranks[i + 1])
    return sorted(out, reverse=True)
