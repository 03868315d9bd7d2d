"""Witness search and the exponent-critical decision procedure.

A subgroup ``H`` of ``G`` is a p-witness when it is proper, non-abelian and
``p_part(exp(H)) == p_part(exp(G))``.  ``G`` is exponent-critical exactly when
some prime divisor of ``|G|`` has no p-witness.  Any witness lies in a
maximal subgroup that is itself a witness, so only maximal subgroups are
scanned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAPGroup
from .numtheory import factorize, p_part
from .structure import Subgroup, all_subgroups, maximal_subgroups, pgroup_prime

__all__ = [
    "WitnessReport",
    "AnalysisReport",
    "p_part",
    "find_p_witness",
    "find_p_witness_bruteforce",
    "analyze",
    "is_exponent_critical",
    "classify_pgroup",
]


@dataclass
class WitnessReport:
    prime: int
    group_exponent_p_part: int
    witness: Subgroup | None = None
    witness_exponent: int | None = None

    @property
    def found(self):
        return self.witness is not None

    def as_dict(self):
        return {
            "prime": self.prime,
            "p_part": self.group_exponent_p_part,
            "found": self.found,
            "witness_order": self.witness.order if self.found else None,
            "witness_exponent": self.witness_exponent,
        }


@dataclass
class AnalysisReport:
    order: int
    factorization: dict
    exponent: int
    abelian: bool
    witnesses: list = field(default_factory=list)
    exponent_critical: bool = False
    pgroup_type: str = "not-a-p-group"
    abelian_maximals: int | None = None

    def witness_for(self, p):
        for w in self.witnesses:
            if w.prime == p:
                return w
        raise KeyError(p)

    def as_dict(self):
        return {
            "order": self.order,
            "factorization": {str(p): e for p, e in sorted(self.factorization.items())},
            "exponent": self.exponent,
            "primes": sorted(self.factorization),
            "abelian": self.abelian,
            "witnesses": [w.as_dict() for w in self.witnesses],
            "critical": self.exponent_critical,
            "type": self.pgroup_type,
        }


def _is_witness(H, p, target):
    return H.order < H.parent.order and not H.is_abelian() and p_part(H.exponent, p) == target


def find_p_witness(G, p, maximals=None):
    """First maximal subgroup (in deterministic order) that is a p-witness, or None."""
    if G.order % p:
        raise ValueError(f"{p} does not divide |G| = {G.order}")
    target = p_part(G.exponent, p)
    if maximals is None:
        maximals = maximal_subgroups(G)
    for M in maximals:
        if _is_witness(M, p, target):
            return M
    return None


def find_p_witness_bruteforce(G, p, lattice=None):
    """Reference scan over every proper subgroup from the full lattice."""
    target = p_part(G.exponent, p)
    lattice = all_subgroups(G) if lattice is None else lattice
    for H in lattice.proper():
        if _is_witness(H, p, target):
            return H
    return None


def analyze(G):
    """Run the witness search for every prime and classify p-groups."""
    fact = dict(factorize(G.order)) if G.order > 1 else {}
    abelian = G.is_abelian()
    e = G.exponent
    maximals = None if abelian else maximal_subgroups(G)
    reports = []
    for p in sorted(fact):
        if abelian:
            reports.append(WitnessReport(p, p_part(e, p)))
            continue
        W = find_p_witness(G, p, maximals)
        reports.append(WitnessReport(p, p_part(e, p), W, W.exponent if W is not None else None))
    critical = any(not r.found for r in reports)
    report = AnalysisReport(G.order, fact, e, abelian, reports, critical)
    if len(fact) == 1:
        if abelian:
            report.pgroup_type = "abelian"
        elif not critical:
            report.pgroup_type = "not-critical"
        else:
            n_ab = sum(M.is_abelian() for M in maximals)
            report.abelian_maximals = n_ab
            report.pgroup_type = "typeA" if n_ab == 1 else "typeB" if n_ab >= 2 else "neither"
    elif not fact:
        report.pgroup_type = "abelian"
    return report


def is_exponent_critical(G):
    return analyze(G).exponent_critical


def classify_pgroup(P):
    """``abelian``, ``typeA``, ``typeB`` or ``not-critical`` for a p-group."""
    if P.order > 1 and pgroup_prime(P) is None:
        raise NotAPGroup(f"order {P.order} is not a prime power")
    return analyze(P).pgroup_type
