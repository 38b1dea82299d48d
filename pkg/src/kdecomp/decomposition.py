"""Primary decomposition of k-ideals in finite commutative semirings.

The engine splits a k-ideal into k-irreducible pieces, checks every piece is
primary, then reduces: redundant pieces are dropped and pieces sharing a
radical are merged.  Associated primes are computed independently from the
colon ideals, and a brute-force search over all reduced decompositions serves
as an oracle for uniqueness of the radical set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .classify import is_k_irreducible, is_prime, is_primary, irreducibility_split, primary_witness
from .errors import (
    GroupNotPrimary,
    InputError,
    NotKIdeal,
    NotProper,
    SearchSpaceTooLarge,
    StepFailed,
    TheoremViolation,
)
from .ideals import (
    Ideal,
    _ideal_masks,
    _k_ideal_masks,
    colon,
    colon_power_chain,
    generated_ideal,
    ideal_sum,
    is_k_ideal,
    jacobson,
    k_closure,
    radical,
)

DEFAULT_BUDGET = 1 << 20


@dataclass(frozen=True)
class SplitNode:
    ideal: Ideal
    children: tuple["SplitNode", ...] = ()

    def lines(self, depth=0):
        tag = "irreducible" if not self.children else "split"
        yield "  " * depth + f"{self.ideal} {tag}"
        for c in self.children:
            yield from c.lines(depth + 1)


@dataclass(frozen=True)
class DecompositionResult:
    input: Ideal
    components: tuple[Ideal, ...]
    radicals: tuple[Ideal, ...]
    reduced: bool
    provenance: SplitNode
    irreducible: tuple[Ideal, ...] = ()

    @property
    def prime_set(self) -> frozenset[Ideal]:
        return frozenset(self.radicals)


@dataclass(frozen=True)
class AssociatedPrimes:
    primes: tuple[Ideal, ...]
    witnesses: dict

    @property
    def prime_set(self) -> frozenset[Ideal]:
        return frozenset(self.primes)


def _meet(ideals, S) -> int:
    m = S.full_mask
    for Q in ideals:
        m &= Q.mask
    return m


def _require_proper_k(I: Ideal) -> None:
    if not I.is_proper:
        raise NotProper(f"{I} is the whole semiring")
    if not is_k_ideal(I.semiring, I):
        raise NotKIdeal(f"{I} is not a k-ideal")


def _split_tree(I: Ideal) -> SplitNode:
    pair = irreducibility_split(I)
    if pair is None:
        return SplitNode(I)
    J, K = pair
    return SplitNode(I, (_split_tree(J), _split_tree(K)))


def _leaves(node: SplitNode, out: list) -> None:
    if not node.children:
        if node.ideal not in out:
            out.append(node.ideal)
    for c in node.children:
        _leaves(c, out)


def decompose_irreducible(I: Ideal, *, tree: bool = False):
    """k-irreducible k-ideals whose intersection is I.

    Each non-irreducible node is split by the smallest pair of k-ideals
    strictly above it that meet in it; recursion only ever moves up a finite
    lattice, so it terminates.
    """
    _require_proper_k(I)
    root = _split_tree(I)
    comps: list[Ideal] = []
    _leaves(root, comps)
    assert _meet(comps, I.semiring) == I.mask
    return (comps, root) if tree else comps


def reduce(components) -> list[Ideal]:
    """Drop redundant components, then merge those sharing a radical."""
    comps = list(components)
    if not comps:
        return comps
    S = comps[0].semiring
    target = _meet(comps, S)
    comps = _drop_redundant(comps, S)

    groups: dict[Ideal, list[Ideal]] = {}
    for Q in comps:
        groups.setdefault(radical(Q), []).append(Q)
    merged = []
    for P, qs in groups.items():
        G = Ideal(S, _meet(qs, S))
        w = primary_witness(G)
        if not G.is_proper or w is not None or radical(G) != P:
            raise GroupNotPrimary(
                f"intersection {G} of {[str(q) for q in qs]} is not {P}-primary",
                {"group": [str(q) for q in qs], "meet": str(G), "radical": str(P), "pair": w},
            )
        merged.append(G)
    merged = _drop_redundant(merged, S)
    assert _meet(merged, S) == target
    return merged


def _drop_redundant(comps, S):
    comps = list(comps)
    changed = True
    while changed:
        changed = False
        for j in range(len(comps)):
            others = comps[:j] + comps[j + 1:]
            if others and _meet(others, S) & ~comps[j].mask == 0:
                del comps[j]
                changed = True
                break
    return comps


def is_reduced(components) -> bool:
    comps = list(components)
    if not comps:
        return False
    S = comps[0].semiring
    rads = [radical(Q) for Q in comps]
    if len(set(rads)) != len(rads):
        return False
    for j in range(len(comps)):
        others = comps[:j] + comps[j + 1:]
        if others and _meet(others, S) & ~comps[j].mask == 0:
            return False
    return True


def primary_decomposition(I: Ideal) -> DecompositionResult:
    """Reduced primary decomposition of a proper k-ideal.

    Every k-irreducible piece is re-checked for primality; a failure raises
    :class:`TheoremViolation` carrying the piece and the offending pair.
    """
    comps, root = decompose_irreducible(I, tree=True)
    S = I.semiring
    for Q in comps:
        if not is_k_ideal(S, Q):
            raise TheoremViolation(f"component {Q} of {I} is not a k-ideal", {"input": str(I), "component": str(Q)})
        w = primary_witness(Q)
        if w is not None:
            raise TheoremViolation(
                f"k-irreducible component {Q} of {I} is not primary: {w[0]}*{w[1]} in it",
                {"semiring": S.name, "input": str(I), "component": str(Q), "pair": w},
            )
    red = reduce(comps)
    for Q in red:
        if not is_k_ideal(S, Q):
            raise TheoremViolation(f"reduced component {Q} of {I} is not a k-ideal", {"component": str(Q)})
    rads = tuple(radical(Q) for Q in red)
    for P in rads:
        if not is_prime(P):
            raise TheoremViolation(f"radical {P} of a component of {I} is not prime", {"radical": str(P)})
    return DecompositionResult(I, tuple(red), rads, is_reduced(red), root, tuple(comps))


def associated_primes(I: Ideal) -> AssociatedPrimes:
    """Prime ideals of the form ``radical((I : x))`` with the first witnessing x."""
    _require_proper_k(I)
    S = I.semiring
    found: dict[Ideal, int] = {}
    for x in S.elements:
        P = radical(colon(I, x))
        if P not in found and is_prime(P):
            found[P] = x
    primes = tuple(sorted(found, key=lambda P: P.mask))
    return AssociatedPrimes(primes, {P: found[P] for P in primes})


def primary_ideals_above(I: Ideal, k_only: bool = True) -> list[Ideal]:
    """Primary ideals containing I, restricted to k-ideals unless ``k_only`` is False."""
    S = I.semiring
    masks = _k_ideal_masks(S) if k_only else _ideal_masks(S)
    return [Q for Q in (Ideal(S, m) for m in masks if I.mask & ~m == 0) if is_primary(Q)]


def brute_force_decompositions(
    I: Ideal, max_size: int | None = None, budget: int = DEFAULT_BUDGET, k_only: bool = True
):
    """Every reduced primary decomposition of I, by exhaustive subset search.

    Components are primary k-ideals by default; ``k_only=False`` admits any
    primary ideal.  Subsets are visited by size, then in candidate order.
    """
    _require_proper_k(I)
    S = I.semiring
    cands = primary_ideals_above(I, k_only)
    top = len(cands) if max_size is None else min(max_size, len(cands))
    cost = sum(comb(len(cands), k) for k in range(1, top + 1))
    if cost > budget:
        raise SearchSpaceTooLarge(f"{cost} subsets of {len(cands)} primary ideals exceed budget {budget}")
    out = []
    for k in range(1, top + 1):
        for subset in combinations(cands, k):
            if _meet(subset, S) != I.mask:
                continue
            rads = [radical(Q) for Q in subset]
            if len(set(rads)) != k:
                continue
            if k > 1 and any(_meet(subset[:j] + subset[j + 1:], S) & ~subset[j].mask == 0 for j in range(k)):
                continue
            out.append(subset)
    return out


@dataclass
class UniquenessReport:
    ideal: Ideal
    decompositions: list
    radical_sets: list
    associated: frozenset
    engine: frozenset | None
    ok: bool
    problems: list[str] = field(default_factory=list)


def verify_uniqueness(I: Ideal, budget: int = DEFAULT_BUDGET, k_only: bool = True) -> UniquenessReport:
    """All reduced decompositions share one radical set, equal to the associated primes.

    Also compares against the engine's decomposition.  Disagreements are
    report entries, not exceptions.
    """
    decs = brute_force_decompositions(I, budget=budget, k_only=k_only)
    rsets = [frozenset(radical(Q) for Q in d) for d in decs]
    assoc = associated_primes(I).prime_set
    problems = []
    try:
        engine = primary_decomposition(I).prime_set
    except TheoremViolation as exc:
        engine = None
        problems.append(f"engine failed: {exc}")
    if not decs:
        problems.append("no reduced primary decomposition exists")
    distinct = set(rsets)
    if len(distinct) > 1:
        problems.append(f"{len(distinct)} different radical sets among {len(decs)} decompositions")
    for rs in distinct:
        if rs != assoc:
            problems.append(f"radical set {_fmt(rs)} differs from associated primes {_fmt(assoc)}")
            break
    if engine is not None and engine != assoc:
        problems.append(f"engine radicals {_fmt(engine)} differ from associated primes {_fmt(assoc)}")
    return UniquenessReport(I, decs, rsets, assoc, engine, not problems, problems)


def _fmt(ideals) -> str:
    return "[" + " ".join(str(P) for P in sorted(ideals, key=lambda P: P.mask)) + "]"


TRACE_STEPS = (
    "chain-stabilises",
    "meet-is-Q",
    "closure-meet-is-Q",
    "jac-split",
    "jac-meet",
    "jac-below-top",
    "jac-irreducible",
    "jac-fixed",
    "b-in-jac-J",
    "Q-is-jac-I",
    "power-in-Q",
)


@dataclass
class PrimaryArgumentTrace:
    Q: Ideal
    a: int
    b: int
    m: int
    chain: list
    I: Ideal
    J: Ideal
    I_closure: Ideal
    J_closure: Ideal
    jac_Q: Ideal
    jac_I: Ideal
    jac_J: Ideal
    jac_R: Ideal
    steps: dict
    concluded: bool

    @property
    def failed_steps(self) -> list[str]:
        return [s for s in TRACE_STEPS if not self.steps[s]]

    def lines(self):
        yield f"Q={self.Q} a={self.a} b={self.b} m={self.m}"
        yield "chain " + " ".join(str(A) for A in self.chain)
        yield f"I={self.I} J={self.J} closure(I)={self.I_closure} closure(J)={self.J_closure}"
        yield f"Jac(Q)={self.jac_Q} Jac(I)={self.jac_I} Jac(J)={self.jac_J} Jac(R)={self.jac_R}"
        for s in TRACE_STEPS:
            yield f"  {s}: {'ok' if self.steps[s] else 'FAILED'}"
        yield f"conclusion a^m in Q: {str(self.concluded).lower()}"


def theorem29_trace(Q: Ideal, a: int, b: int, strict: bool = False) -> PrimaryArgumentTrace:
    """Replay, on one instance, the argument that a k-irreducible Q is primary.

    Builds ``I = <a^m> + Q`` and ``J = <b> + Q`` with m the stabilisation
    index of ``(Q : a^i)``, then checks each intermediate identity of the
    Jacobson-radical argument.  Identities that fail are recorded; with
    ``strict=True`` the first failure raises :class:`StepFailed`.
    """
    S = Q.semiring
    S.check_element(a)
    S.check_element(b)
    _require_proper_k(Q)
    if not is_k_irreducible(Q):
        raise InputError(f"{Q} is not k-irreducible")
    if S.mul[a][b] not in Q or b in Q:
        raise InputError(f"need ab in Q and b outside Q (a={a}, b={b}, Q={Q})")

    m, Am, chain = colon_power_chain(Q, a, chain=True)
    am = S.power(a, m)
    I = ideal_sum(generated_ideal(S, [am]), Q)
    J = ideal_sum(generated_ideal(S, [b]), Q)
    Ic, Jc = k_closure(I), k_closure(J)
    jQ, jI, jJ, jR = jacobson(S, Q), jacobson(S, Ic), jacobson(S, Jc), jacobson(S)
    jac_irred = jQ.is_proper and is_k_ideal(S, jQ) and is_k_irreducible(jQ)

    steps = {
        "chain-stabilises": chain[m - 1] == chain[m] and colon(Q, S.power(a, m + 1)) == Am,
        "meet-is-Q": (I & J) == Q,
        "closure-meet-is-Q": (Ic & Jc) == Q,
        "jac-split": jQ == (jI & jJ),
        "jac-meet": jQ == (Q & jR),
        "jac-below-top": jQ != jR,
        "jac-irreducible": jac_irred,
        "jac-fixed": jQ == Q,
        "b-in-jac-J": b in jJ,
        "Q-is-jac-I": Q == jI,
        "power-in-Q": am in Q,
    }
    trace = PrimaryArgumentTrace(Q, a, b, m, chain, I, J, Ic, Jc, jQ, jI, jJ, jR, steps, am in Q)
    if strict:
        for s in TRACE_STEPS:
            if not steps[s]:
                raise StepFailed(s, trace)
    return trace
