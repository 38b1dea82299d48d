"""Small semirings, their ideals, and the two closure operators.

Run: python demos/01_semirings_and_ideals.py
"""

from kdecomp import all_ideals, all_k_ideals, boolean, chain, direct_product, integers_mod, k_closure, radical
from kdecomp.ideals import Ideal, mask_of
from kdecomp.semiring import flags


def show(S):
    f = flags(S)
    print(f"\n{S.name}: order {S.order}, cancellative={f.additively_cancellative} "
          f"yoked={f.yoked} zerosumfree={f.zerosumfree} ring={f.is_ring}")
    for I in all_ideals(S):
        tag = "k-ideal" if I in all_k_ideals(S) else "not subtractive"
        print(f"  {I.labelled():<28} {tag:<16} radical {radical(I).labelled()}")


print("Every ideal below is listed with its radical; labels are the element names.")
for S in (boolean(), integers_mod(4), chain(3), direct_product(boolean(), boolean())):
    show(S)

# An ideal that is not subtractive, and its k-closure.
from kdecomp.enumeration import enumerate_semirings  # noqa: E402

S = next(T for T in enumerate_semirings(4) if T.name == "4_0007")
I = Ideal.of(S, [0, 2])
print(f"\nIn {S.name}, {I} is an ideal, 2 + 3 = {S.add[2][3]} lies in it but 3 does not,")
print(f"so it is not subtractive. Its k-closure is {k_closure(I)}.")
print(f"Closure is idempotent: {k_closure(k_closure(I)) == k_closure(I)}.")
print(f"Radical of {{0}}: {radical(Ideal(S, mask_of([0])))} (3*3 = 0).")
