"""Exhaustive theorem sweep over one finite semiring.

``verify_semiring`` runs every check on every ideal of a semiring and
collects two kinds of output: *findings*, claims that failed (any finding
makes the CLI exit with status 1), and *notes*, properties recorded for
information only (e.g. individual steps of the irreducible-is-primary
argument that do not hold on a given instance).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .classify import (
    is_k_irreducible,
    is_k_irreducible_oracle,
    is_primary,
    primary_colon_failures,
    prime_witness,
    primary_witness,
)
from .decomposition import (
    associated_primes,
    brute_force_decompositions,
    primary_decomposition,
    theorem29_trace,
)
from .errors import Finding
from .ideals import (
    _ideal_masks,
    _is_subtractive_mask,
    _k_ideal_masks,
    Ideal,
    colon,
    is_k_ideal,
    k_closure,
    radical,
)
from .semiring import FiniteSemiring, flags


@dataclass(frozen=True)
class Issue:
    claim: str
    message: str

    def line(self) -> str:
        return f"[{self.claim}] {self.message}"


@dataclass
class SemiringReport:
    semiring: FiniteSemiring
    flag_bits: str
    counters: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    notes: Counter = field(default_factory=Counter)
    note_examples: dict = field(default_factory=dict)
    decompositions: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings

    def fail(self, claim: str, message: str) -> None:
        self.findings.append(Issue(claim, message))

    def note(self, key: str, example: str) -> None:
        self.notes[key] += 1
        self.note_examples.setdefault(key, example)

    def summary_line(self) -> str:
        c = self.counters
        return (
            f"{self.semiring.name} order={self.semiring.order} flags={self.flag_bits} "
            f"ideals={c['ideals']} k_ideals={c['k_ideals']} k_irreducible={c['k_irreducible']} "
            f"primary={c['primary']} decomposed={c['decomposed']} findings={len(self.findings)}"
        )

    def as_dict(self) -> dict:
        return {
            "semiring": self.semiring.name,
            "order": self.semiring.order,
            "flags": self.flag_bits,
            "counters": dict(self.counters),
            "findings": [{"claim": f.claim, "message": f.message} for f in self.findings],
            "notes": {k: {"count": self.notes[k], "example": self.note_examples[k]} for k in sorted(self.notes)},
        }


def _closure_laws(rep, S, ideals):
    ops = (("k_closure", k_closure), ("radical", radical))
    for name, op in ops:
        image = {m: op(Ideal(S, m)).mask for m in ideals}
        for m, c in image.items():
            if m & ~c:
                rep.fail("closure-law", f"{name} not extensive at {Ideal(S, m)}")
            if image.get(c, op(Ideal(S, c)).mask) != c:
                rep.fail("closure-law", f"{name} not idempotent at {Ideal(S, m)}")
        for m in ideals:
            for o in ideals:
                if m & ~o == 0 and image[m] & ~image[o]:
                    rep.fail("closure-law", f"{name} not monotone on {Ideal(S, m)} <= {Ideal(S, o)}")
    for m in ideals:
        fixed = k_closure(Ideal(S, m)).mask == m
        if fixed != _is_subtractive_mask(S, m):
            rep.fail("closure-law", f"k-closure fixed-point test disagrees with subtractivity at {Ideal(S, m)}")


def _lattice_props(rep, S, ideals, kideals):
    for i, m in enumerate(kideals):
        for o in kideals[i:]:
            if not _is_subtractive_mask(S, m & o):
                rep.fail("k-meet", f"{Ideal(S, m)} & {Ideal(S, o)} is not a k-ideal")
            I, J = Ideal(S, m), Ideal(S, o)
            if radical(I & J) != (radical(I) & radical(J)):
                rep.fail("radical-meet", f"radical of {I} & {J} differs from meet of radicals")
            s = I + J
            if not _is_subtractive_mask(S, s.mask):
                rep.note("k-sum-not-k", f"{I} + {J} = {s}")
    for m in kideals:
        P = radical(Ideal(S, m))
        if not _is_subtractive_mask(S, P.mask):
            rep.note("radical-of-k-not-k", f"radical of {Ideal(S, m)} is {P}")
    for i, m in enumerate(ideals):
        for o in ideals[i:]:
            I, J = Ideal(S, m), Ideal(S, o)
            if radical(I & J) != (radical(I) & radical(J)):
                rep.note("radical-meet-ideal-input", f"{I}, {J}")


def verify_semiring(S: FiniteSemiring, traces: bool = True, keep_decompositions: bool = False) -> SemiringReport:
    rep = SemiringReport(S, flags(S).bits())
    ideals = _ideal_masks(S)
    kideals = _k_ideal_masks(S)
    proper_k = [m for m in kideals if m != S.full_mask]
    c = rep.counters
    c.update(ideals=len(ideals), k_ideals=len(kideals), k_irreducible=0, primary=0,
             decomposed=0, oracle_decompositions=0, traces=0)

    _closure_laws(rep, S, ideals)
    _lattice_props(rep, S, ideals, kideals)

    for m in ideals:
        Q = Ideal(S, m)
        if not is_primary(Q):
            continue
        c["primary"] += 1
        P = radical(Q)
        w = prime_witness(P)
        if w is not None or not P.is_proper:
            rep.fail("primary-radical-prime", f"radical {P} of primary {Q} is not prime, pair {w}")
        for msg in primary_colon_failures(Q):
            rep.fail("primary-colon", msg)

    for m in proper_k:
        I = Ideal(S, m)
        irr = is_k_irreducible(I)
        if irr != is_k_irreducible_oracle(I):
            rep.fail("oracle-irreducible", f"engine and oracle disagree on {I}")
        if irr:
            c["k_irreducible"] += 1
            w = primary_witness(I)
            if w is not None:
                rep.fail("irreducible-primary", f"k-irreducible {I} is not primary: {w[0]}*{w[1]} lies in it, "
                                    f"{w[0]} not in it, {w[1]} outside radical {radical(I)}")
            if traces:
                _trace_all(rep, I)
        _check_decomposition(rep, I, keep_decompositions)
    return rep


def _check_decomposition(rep, I, keep):
    S = I.semiring
    c = rep.counters
    try:
        dec = primary_decomposition(I)
    except Finding as exc:
        rep.fail("decomposition-exists", f"{I}: {exc}")
        dec = None
    if dec is not None:
        c["decomposed"] += 1
        if keep:
            rep.decompositions.append(dec)
        meet = S.full_mask
        for Q in dec.components:
            meet &= Q.mask
            if not is_k_ideal(S, Q) or not is_primary(Q):
                rep.fail("decomposition-exists", f"component {Q} of {I} is not a primary k-ideal")
        if meet != I.mask:
            rep.fail("decomposition-exists", f"components of {I} meet in {Ideal(S, meet)}")
        if not dec.reduced:
            rep.fail("decomposition-exists", f"decomposition of {I} is not reduced")
        # radical((I : x)) is the meet of the radicals of the components missing x
        for x in S.elements:
            lhs = radical(colon(I, x))
            rhs = S.full_mask
            for Q, P in zip(dec.components, dec.radicals):
                if x not in Q:
                    rhs &= P.mask
            if lhs.mask != rhs:
                rep.fail("colon-radical-formula", f"I={I} x={x}: radical of colon {lhs} vs {Ideal(S, rhs)}")

    assoc = associated_primes(I).prime_set
    decs = brute_force_decompositions(I)
    c["oracle_decompositions"] += len(decs)
    rsets = {frozenset(radical(Q) for Q in d) for d in decs}
    if not decs:
        rep.fail("prime-set-unique", f"no reduced decomposition of {I} into primary k-ideals exists")
    if len(rsets) > 1:
        rep.fail("prime-set-unique", f"{I} has {len(rsets)} distinct radical sets")
    if any(rs != assoc for rs in rsets):
        rep.fail("prime-set-unique", f"oracle radical sets of {I} differ from associated primes")
    if dec is not None:
        if dec.prime_set != assoc:
            rep.fail("prime-set-unique", f"engine radicals of {I} differ from associated primes")
        if rsets and dec.prime_set not in rsets:
            rep.fail("oracle-decomposition", f"engine radicals of {I} not among oracle radical sets")
    elif decs:
        rep.fail("oracle-decomposition", f"oracle decomposes {I} but the engine does not")

    # components allowed to be arbitrary primary ideals
    gdecs = brute_force_decompositions(I, k_only=False)
    grsets = {frozenset(radical(Q) for Q in d) for d in gdecs}
    if not gdecs:
        rep.fail("prime-set-unique-general", f"{I} has no reduced primary decomposition at all")
    elif grsets != {assoc}:
        rep.fail("prime-set-unique-general", f"radical sets of general decompositions of {I} differ from associated primes")
    if dec is None and gdecs:
        comps = " & ".join(str(Q) for Q in gdecs[0])
        rep.note("decomposable-only-with-non-k-components", f"{I} = {comps}")


def _trace_all(rep, Q):
    S = Q.semiring
    for a in S.elements:
        for b in S.elements:
            if b in Q or S.mul[a][b] not in Q:
                continue
            t = theorem29_trace(Q, a, b)
            rep.counters["traces"] += 1
            if not t.concluded:
                rep.fail("irreducible-primary-trace", f"Q={Q} a={a} b={b}: a^{t.m} not in Q")
            for s in t.failed_steps:
                rep.note(f"irreducible-primary-step:{s}", f"Q={Q} a={a} b={b}")
