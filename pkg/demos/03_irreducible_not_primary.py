"""A k-irreducible k-ideal that is not primary.

In the order-4 semiring below the k-ideals form a chain, so the zero ideal
cannot be split as a meet of two larger k-ideals.  Yet 2*3 = 0 with 3
nonzero and 2 outside the radical {0,3}: the zero ideal is not primary, and
no decomposition into primary k-ideals exists.  Allowing primary components
that are not subtractive repairs existence.

Run: python demos/03_irreducible_not_primary.py
"""

from kdecomp import all_k_ideals, brute_force_decompositions, classify, is_primary, radical
from kdecomp.decomposition import primary_decomposition, theorem29_trace
from kdecomp.enumeration import enumerate_semirings
from kdecomp.errors import TheoremViolation
from kdecomp.ideals import Ideal, k_closure, mask_of, zero_ideal

S = next(T for T in enumerate_semirings(4) if T.name == "4_0007")
print("addition   ", S.add)
print("multiplication", S.mul)
print("k-ideals:", " ".join(str(I) for I in all_k_ideals(S)))

Z = zero_ideal(S)
print("\nzero ideal:", classify(Z).line())
print(f"2*3 = {S.mul[2][3]}, 3 not in {Z}, 2 not in radical {radical(Z)}")

try:
    primary_decomposition(Z)
except TheoremViolation as exc:
    print("\nengine:", exc)
print("decompositions into primary k-ideals:", brute_force_decompositions(Z))

general = brute_force_decompositions(Z, k_only=False)
for comps in general:
    print("with arbitrary primary components:",
          " & ".join(f"{Q} (primary={is_primary(Q)}, radical {radical(Q)})" for Q in comps))

print("\nWhere the usual argument breaks, with a = 2, b = 3:")
t = theorem29_trace(Z, 2, 3)
for line in t.lines():
    print(" ", line)
I, J = Ideal(S, mask_of([0, 2])), Ideal(S, mask_of([0, 3]))
print(f"\n{I} & {J} = {I & J}, but closing first gives {k_closure(I)} & {k_closure(J)} = "
      f"{k_closure(I) & k_closure(J)}")
