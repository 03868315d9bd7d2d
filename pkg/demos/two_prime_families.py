"""One instance of each constructed family, with the prime that has no witness.

Run: python demos/two_prime_families.py
"""

from expcrit import analyze, build
from expcrit.audit import FAMILY_SPECS
from expcrit.families import two_prime_family

print(f"{'spec':<48} {'order':>5} {'exp':>4}  missing witness  recognized as")
for spec in FAMILY_SPECS:
    G = build(spec)
    r = analyze(G)
    missing = [w.prime for w in r.witnesses if not w.found]
    p = G.info["designated_prime"]
    tags = two_prime_family(G, p) if len(r.factorization) == 2 else ["B"]
    print(f"{spec:<48} {G.order:>5} {G.exponent:>4}  {str(missing):<15}  {', '.join(tags)}")

# a reducible action is not enough: C2 swapping two copies of C3 leaves witnesses for both primes
G = build('perm "(1 2 3)" "(4 5 6)" "(2 3)(5 6)"')
print("\nreducible control:", "critical" if analyze(G).exponent_critical else "not critical")
