"""The universal type-A group U(p, m) and its quotients U/N.

Run: python demos/universal_quotients.py [p m]
"""

import sys

from expcrit import analyze
from expcrit.coset_enum import presented_group, u_presentation
from expcrit.dsl import script_N, universal_context
from expcrit.structure import derived_subgroup
from expcrit.universal import quotient_UN, subgroup_D

p, m = (int(sys.argv[1]), int(sys.argv[2])) if len(sys.argv) == 3 else (2, 3)
ctx = universal_context(p, m)
U = ctx.U
print(f"U({p},{m}) has order {U.order} = {p}^{(m - 1) * (p + 1) + 1}, realized on {U.degree} points")
print(f"the two-generator presentation enumerates to {presented_group(u_presentation(p, m)).order} cosets")
print(f"D = {subgroup_D(ctx).order}-element normal subgroup; U/D has order {U.order // p}")

Ns = script_N(p, m)
print(f"{len(Ns)} normal subgroups N qualify; the quotients:")
print(f"{'|N|':>5} {'|U/N|':>6} {'exp':>4} {'|(U/N)`|':>9}  type")
for N in Ns:
    Q = quotient_UN(ctx, N)
    r = analyze(Q)
    print(f"{N.order:>5} {Q.order:>6} {Q.exponent:>4} {derived_subgroup(Q).order:>9}  {r.pgroup_type}")
