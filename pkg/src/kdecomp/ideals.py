"""Ideals of a finite semiring as bitsets, and the operators on them.

An :class:`Ideal` is a value: a semiring plus an integer whose bit ``i`` is
set when element ``i`` belongs to the ideal.  Set algebra is bitwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CarrierMismatch, ClosureNotKIdeal, InputError, NotAnIdeal, NotKIdeal
from .semiring import FiniteSemiring


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(elements) -> int:
    m = 0
    for a in elements:
        m |= 1 << a
    return m


def format_set(elements) -> str:
    return "{" + ",".join(str(a) for a in sorted(elements)) + "}"


@dataclass(frozen=True, order=False)
class Ideal:
    semiring: FiniteSemiring
    mask: int

    @classmethod
    def of(cls, S: FiniteSemiring, subset) -> "Ideal":
        """Wrap ``subset`` after checking it really is an ideal of ``S``."""
        for a in subset:
            S.check_element(a)
        m = mask_of(subset)
        if not _is_ideal_mask(S, m):
            raise NotAnIdeal(f"{format_set(subset)} is not an ideal of {S.name or 'the semiring'}")
        return cls(S, m)

    @property
    def members(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    @property
    def is_proper(self) -> bool:
        return self.mask != self.semiring.full_mask

    @property
    def is_whole(self) -> bool:
        return self.mask == self.semiring.full_mask

    def __contains__(self, a) -> bool:
        return bool(self.mask >> a & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.members)

    def _same(self, other: "Ideal") -> None:
        if self.semiring != other.semiring:
            raise CarrierMismatch("ideals live in different semirings")

    def __le__(self, other: "Ideal") -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "Ideal") -> bool:
        return other <= self

    def __gt__(self, other: "Ideal") -> bool:
        return other < self

    def __and__(self, other: "Ideal") -> "Ideal":
        return ideal_intersection(self, other)

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __str__(self) -> str:
        return format_set(self.members)

    def __repr__(self) -> str:
        return f"Ideal({self.semiring.name}, {self})"

    def labelled(self) -> str:
        S = self.semiring
        return "{" + ",".join(S.label(a) for a in self.members) + "}"


def _to_mask(S: FiniteSemiring, subset) -> int:
    if isinstance(subset, Ideal):
        if subset.semiring != S:
            raise CarrierMismatch("ideal belongs to another semiring")
        return subset.mask
    subset = list(subset)
    for a in subset:
        S.check_element(a)
    return mask_of(subset)


# -- predicates ----------------------------------------------------------------

def _is_ideal_mask(S: FiniteSemiring, m: int) -> bool:
    if not m & 1:
        return False
    mem = elements_of(m)
    A, M = S.add, S.mul
    for a in mem:
        for b in mem:
            if not m >> A[a][b] & 1:
                return False
        for r in S.elements:
            if not m >> M[r][a] & 1:
                return False
    return True


def _is_subtractive_mask(S: FiniteSemiring, m: int) -> bool:
    mem = elements_of(m)
    A = S.add
    for x in mem:
        row = A[x]
        for y in S.elements:
            if m >> row[y] & 1 and not m >> y & 1:
                return False
    return True


def is_ideal(S: FiniteSemiring, subset) -> bool:
    return _is_ideal_mask(S, _to_mask(S, subset))


def is_k_ideal(S: FiniteSemiring, subset) -> bool:
    """True iff ``subset`` is an ideal and ``x + y, x`` in it force ``y`` in it."""
    m = _to_mask(S, subset)
    return _is_ideal_mask(S, m) and _is_subtractive_mask(S, m)


def require_k_ideal(I: Ideal) -> None:
    if not _is_subtractive_mask(I.semiring, I.mask):
        raise NotKIdeal(f"{I} is not a k-ideal")


# -- generation and lattices -------------------------------------------------

def _add_closure(S: FiniteSemiring, m: int) -> int:
    A = S.add
    while True:
        mem = elements_of(m)
        new = m
        for a in mem:
            for b in mem:
                new |= 1 << A[a][b]
        if new == m:
            return m
        m = new


def generated_ideal(S: FiniteSemiring, gens) -> Ideal:
    """Least ideal containing ``gens``: all finite sums of multiples ``r*g``."""
    gens = list(gens)
    for g in gens:
        S.check_element(g)
    m = 1
    for g in gens:
        for r in S.elements:
            m |= 1 << S.mul[r][g]
    return Ideal(S, _add_closure(S, m))


@lru_cache(maxsize=4096)
def _ideal_masks(S: FiniteSemiring) -> tuple[int, ...]:
    return tuple(m for m in range(1, 1 << S.order, 2) if _is_ideal_mask(S, m))


@lru_cache(maxsize=4096)
def _k_ideal_masks(S: FiniteSemiring) -> tuple[int, ...]:
    return tuple(m for m in _ideal_masks(S) if _is_subtractive_mask(S, m))


def all_ideals(S: FiniteSemiring) -> list[Ideal]:
    return [Ideal(S, m) for m in _ideal_masks(S)]


def all_k_ideals(S: FiniteSemiring) -> list[Ideal]:
    return [Ideal(S, m) for m in _k_ideal_masks(S)]


# -- operators -------------------------------------------------------------------

def k_closure(I: Ideal) -> Ideal:
    """``{x | x + b = c for some b, c in I}``, the least k-ideal containing I.

    The membership domain is the whole semiring.  The result is re-checked.
    """
    S = I.semiring
    mem = I.members
    A = S.add
    m = 0
    for x in S.elements:
        if any(I.mask >> A[x][b] & 1 for b in mem):
            m |= 1 << x
    if not (_is_ideal_mask(S, m) and _is_subtractive_mask(S, m)) or I.mask & ~m:
        raise ClosureNotKIdeal(f"k-closure of {I} gave {format_set(elements_of(m))}", (I.mask, m))
    return Ideal(S, m)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    I._same(J)
    S = I.semiring
    m = 0
    for a in I.members:
        for b in J.members:
            m |= 1 << S.add[a][b]
    return Ideal(S, m)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    I._same(J)
    return Ideal(I.semiring, I.mask & J.mask)


def radical(I: Ideal) -> Ideal:
    """Elements with some positive power in I.

    Checking ``a**n`` with n the order suffices: among ``a**1 .. a**(n+1)``
    two agree, so ``a**n`` already lies on the eventual cycle of powers, and
    once a power enters an ideal every later one stays there.
    """
    S = I.semiring
    n = S.order
    m = 0
    for a in S.elements:
        if I.mask >> S.power(a, n) & 1:
            m |= 1 << a
    assert _is_ideal_mask(S, m) and I.mask & ~m == 0, (I, m)
    return Ideal(S, m)


def colon(Q: Ideal, x: int) -> Ideal:
    """``(Q : x) = {r | r*x in Q}``."""
    S = Q.semiring
    S.check_element(x)
    m = 0
    for r in S.elements:
        if Q.mask >> S.mul[r][x] & 1:
            m |= 1 << r
    assert _is_ideal_mask(S, m), (Q, x, m)
    return Ideal(S, m)


def colon_power_chain(Q: Ideal, a: int, *, chain: bool = False):
    """Stabilisation of ``A_i = (Q : a**i)``.

    Returns ``(m, A_m)`` for the least ``m`` with ``A_m = A_{m+1}``; with
    ``chain=True`` the list ``[A_1, ..., A_{m+1}]`` is appended.
    """
    require_k_ideal(Q)
    S = Q.semiring
    S.check_element(a)
    seq = [colon(Q, a)]
    power = a
    while True:
        power = S.mul[power][a]
        nxt = colon(Q, power)
        if not seq[-1] <= nxt:
            raise AssertionError(f"colon chain not ascending at step {len(seq)}")
        seq.append(nxt)
        if nxt == seq[-2]:
            break
    m = len(seq) - 1
    if chain:
        return m, seq[m - 1], seq
    return m, seq[m - 1]


@lru_cache(maxsize=4096)
def _maximal_k_masks(S: FiniteSemiring) -> tuple[int, ...]:
    proper = [m for m in _k_ideal_masks(S) if m != S.full_mask]
    return tuple(
        m for m in proper if not any(o != m and m & ~o == 0 for o in proper)
    )


def maximal_k_ideals(S: FiniteSemiring) -> list[Ideal]:
    return [Ideal(S, m) for m in _maximal_k_masks(S)]


def jacobson(S: FiniteSemiring, A: Ideal | None = None) -> Ideal:
    """Intersection of the maximal k-ideals containing A (all of them if A is None).

    Equals the whole semiring when no maximal k-ideal contains A.
    """
    if A is not None and A.semiring != S:
        raise CarrierMismatch("ideal belongs to another semiring")
    m = S.full_mask
    for M in _maximal_k_masks(S):
        if A is None or A.mask & ~M == 0:
            m &= M
    return Ideal(S, m)


def whole(S: FiniteSemiring) -> Ideal:
    return Ideal(S, S.full_mask)


def zero_ideal(S: FiniteSemiring) -> Ideal:
    return Ideal(S, 1)


def parse_set(S: FiniteSemiring, text: str) -> list[int]:
    """Parse ``"0,3"`` (or ``"{0,3}"``) into element indices."""
    text = text.strip().strip("{}")
    if not text:
        return []
    try:
        out = [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"bad element list {text!r}") from None
    for a in out:
        S.check_element(a)
    return out
