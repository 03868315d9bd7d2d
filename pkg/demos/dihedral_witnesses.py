"""Why D16 is exponent-critical and D24 is not.

Run: python demos/dihedral_witnesses.py
"""

from expcrit import analyze, build, maximal_subgroups

for spec in ("dihedral 16", "dihedral 24"):
    G = build(spec)
    print(f"{spec}: order {G.order}, exponent {G.exponent}")
    for M in maximal_subgroups(G):
        kind = "abelian" if M.is_abelian() else "non-abelian"
        print(f"  maximal subgroup of order {M.order:>2}, exponent {M.exponent:>2}, {kind}")
    r = analyze(G)
    for w in r.witnesses:
        if w.found:
            print(f"  p = {w.prime}: witness of order {w.witness.order} and exponent {w.witness_exponent}")
        else:
            print(f"  p = {w.prime}: no witness, the {w.prime}-part {w.group_exponent_p_part} is only reached in abelian subgroups")
    print(f"  exponent-critical: {r.exponent_critical}\n")

# In D16 the elements of order 8 live only in the cyclic maximal subgroup, so the
# non-abelian subgroups (both D8) never reach exponent 8.  In D24 a D8 reaches the
# 2-part 4 and a D12 reaches the 3-part 3, so together they recover exponent 12.
