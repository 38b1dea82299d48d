"""Primary decomposition of k-ideals, checked against exhaustive search.

Run: python demos/02_decomposition.py
"""

from kdecomp import associated_primes, boolean, brute_force_decompositions, direct_product, integers_mod
from kdecomp import primary_decomposition
from kdecomp.ideals import radical, zero_ideal

for S in (direct_product(boolean(), boolean()), integers_mod(4)):
    I = zero_ideal(S)
    d = primary_decomposition(I)
    print(f"{S.name}: decomposing {I.labelled()}")
    print("  split tree (element indices):")
    for line in d.provenance.lines():
        print("    " + line)
    for Q, P in zip(d.components, d.radicals):
        print(f"  component {Q.labelled()} with radical {P.labelled()}")
    ap = associated_primes(I)
    for P in ap.primes:
        print(f"  associated prime {P.labelled()}, witnessed by x = {S.label(ap.witnesses[P])}")
    every = brute_force_decompositions(I)
    same = all({radical(Q) for Q in comps} == d.prime_set == ap.prime_set for comps in every)
    print(f"  exhaustive search finds {len(every)} reduced decomposition(s); "
          f"all share the associated primes: {same}\n")
