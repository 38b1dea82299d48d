"""Prime, primary and k-irreducible ideals."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotKIdeal, NotProper, RadicalNotPrime
from .ideals import Ideal, _k_ideal_masks, colon, is_ideal, is_k_ideal, radical


@dataclass(frozen=True)
class IdealClass:
    ideal: Ideal
    is_proper: bool
    is_k_ideal: bool
    is_prime: bool
    is_primary: bool
    radical: Ideal
    is_k_irreducible: bool | None  # None unless a proper k-ideal

    def line(self) -> str:
        irr = "n/a" if self.is_k_irreducible is None else str(self.is_k_irreducible).lower()
        return (
            f"proper={str(self.is_proper).lower()} prime={str(self.is_prime).lower()} "
            f"primary={str(self.is_primary).lower()} radical={self.radical} k_irreducible={irr}"
        )


def prime_witness(I: Ideal):
    """A pair ``(a, b)`` with ``ab`` in I but neither factor in I, or None."""
    S = I.semiring
    for a in S.elements:
        if a in I:
            continue
        for b in S.elements:
            if b not in I and S.mul[a][b] in I:
                return a, b
    return None


def is_prime(I: Ideal) -> bool:
    return I.is_proper and prime_witness(I) is None


def primary_witness(I: Ideal, rad: Ideal | None = None):
    """A pair ``(x, y)`` with ``xy`` in I, ``x`` not in I and ``y`` outside the radical."""
    S = I.semiring
    rad = radical(I) if rad is None else rad
    for x in S.elements:
        if x in I:
            continue
        for y in S.elements:
            if y not in rad and S.mul[x][y] in I:
                return x, y
    return None


def is_primary(I: Ideal) -> bool:
    return I.is_proper and primary_witness(I) is None


def primary_radical(I: Ideal) -> Ideal:
    """Radical of I, checked to be prime whenever I is primary."""
    P = radical(I)
    if is_primary(I):
        w = prime_witness(P)
        if w is not None or not P.is_proper:
            raise RadicalNotPrime(f"radical {P} of primary {I} is not prime", {"ideal": str(I), "pair": w})
    return P


def _require_proper_k(I: Ideal) -> None:
    if not I.is_proper:
        raise NotProper(f"{I} is the whole semiring")
    if not is_k_ideal(I.semiring, I):
        raise NotKIdeal(f"{I} is not a k-ideal")


def irreducibility_split(I: Ideal):
    """Two k-ideals strictly above I meeting exactly in I, or None.

    Among candidate pairs the one minimising ``|J| + |K|`` wins, ties broken
    by the bitsets in increasing order.
    """
    _require_proper_k(I)
    S = I.semiring
    above = [m for m in _k_ideal_masks(S) if m != I.mask and I.mask & ~m == 0]
    best = None
    for i, j in enumerate(above):
        for k in above[i + 1:]:
            if j & k == I.mask:
                key = (bin(j).count("1") + bin(k).count("1"), j, k)
                if best is None or key < best:
                    best = key
    if best is None:
        return None
    return Ideal(S, best[1]), Ideal(S, best[2])


def is_k_irreducible(I: Ideal) -> bool:
    return irreducibility_split(I) is None


def is_k_irreducible_oracle(I: Ideal) -> bool:
    """Literal reading: every pair of k-ideals with ``J & K == I`` has ``I in (J, K)``.

    Deliberately scans all ordered pairs of k-ideals without any pruning so it
    stays an independent check of :func:`is_k_irreducible`.
    """
    _require_proper_k(I)
    S = I.semiring
    ks = _k_ideal_masks(S)
    for J in ks:
        for K in ks:
            if J & K == I.mask and J != I.mask and K != I.mask:
                return False
    return True


def classify(I: Ideal) -> IdealClass:
    S = I.semiring
    k = is_k_ideal(S, I)
    rad = radical(I)
    irr = is_k_irreducible(I) if (k and I.is_proper) else None
    return IdealClass(
        ideal=I,
        is_proper=I.is_proper,
        is_k_ideal=k,
        is_prime=is_prime(I),
        is_primary=is_primary(I),
        radical=rad,
        is_k_irreducible=irr,
    )


@dataclass
class ColonReport:
    Q: Ideal
    x: int
    colon: Ideal
    radical: Ideal
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL " + "; ".join(self.problems)
        return f"(Q:{self.x}) with Q={self.Q}: colon={self.colon} radical={self.radical} {status}"


def colon_is_primary_check(Q: Ideal, x: int) -> ColonReport:
    """Check that ``(Q : x)`` is primary with the same radical as Q when x is not in Q.

    Failures are recorded in the report, never raised.
    """
    S = Q.semiring
    S.check_element(x)
    P = radical(Q)
    C = colon(Q, x)
    CP = radical(C)
    problems = []
    if not is_primary(Q):
        problems.append(f"precondition: {Q} is not primary")
    if x in Q:
        problems.append(f"precondition: {x} lies in {Q}")
    if not problems:
        w = primary_witness(C, CP)
        if not C.is_proper:
            problems.append(f"colon {C} is not proper")
        elif w is not None:
            problems.append(f"colon {C} not primary, witness pair {w}")
        if CP != P:
            problems.append(f"radical {CP} differs from {P}")
    return ColonReport(Q, x, C, CP, not problems, problems)


def primary_colon_failures(Q: Ideal) -> list[str]:
    """Check the four colon-ideal properties of a primary Q against every element.

    Returns human-readable descriptions of every failure (empty when all hold).
    """
    S = Q.semiring
    if not is_primary(Q):
        return [f"{Q} is not primary"]
    P = radical(Q)
    R = S.full_mask
    out = []
    for x in S.elements:
        C = colon(Q, x)
        if not is_ideal(S, C):
            out.append(f"(i) ({Q}:{x}) = {C} is not an ideal")
        if x in Q and C.mask != R:
            out.append(f"(ii) {x} in {Q} but ({Q}:{x}) = {C}")
        if x not in P and C != Q:
            out.append(f"(iii) {x} outside {P} but ({Q}:{x}) = {C}")
        if x not in Q:
            rep = colon_is_primary_check(Q, x)
            if not rep.ok:
                out.append(f"(iv) {rep}")
    return out

