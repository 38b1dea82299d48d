"""Certificates in N and N[x].

Run: python demos/04_naturals_and_polynomials.py
"""

from kdecomp.natpoly import NatPoly, golan_witness, nat_principal_k_check, nat_sum_not_k_witness, yoked_pair_check

print("The principal ideal <1+x> of N[x] is not subtractive:")
for line in golan_witness().lines():
    print("  " + line)

f, g = NatPoly((2, 9, 5)), NatPoly((5, 3, 11))
print(f"\nNo h in N[x] closes the gap between f = {f} and g = {g}: {yoked_pair_check(f, g)}")
print(f"while {NatPoly((1, 1))} and {NatPoly((2, 3, 1))} differ by {yoked_pair_check(NatPoly((1, 1)), NatPoly((2, 3, 1)))}")

print("\nPrincipal ideals aN are subtractive (checked on a grid):")
for a in (2, 3, 7):
    r = nat_principal_k_check(a, 300)
    print(f"  a={a}: {r['pairs']} pairs, counterexample {r['counterexample']}")

print("\n... but a sum of two of them need not be:")
for a, b in ((2, 3), (3, 5)):
    for line in nat_sum_not_k_witness(a, b).lines():
        print("  " + line)
