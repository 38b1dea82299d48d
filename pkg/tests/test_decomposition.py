import pytest

from kdecomp.decomposition import (
    TRACE_STEPS,
    associated_primes,
    brute_force_decompositions,
    decompose_irreducible,
    is_reduced,
    primary_decomposition,
    reduce,
    theorem29_trace,
    verify_uniqueness,
)
from kdecomp.errors import InputError, SearchSpaceTooLarge, StepFailed, TheoremViolation
from kdecomp.ideals import Ideal, all_k_ideals, colon, mask_of, maximal_k_ideals, radical, zero_ideal

from conftest import by_label, census_upto, sweep_reports

COUNTEREXAMPLE_NAMES = {"4_0007", "4_0014", "4_0036", "4_0054"}


def Z4set(Z4, *xs):
    return Ideal(Z4, mask_of(xs))


def test_z4_zero(Z4):
    d = primary_decomposition(zero_ideal(Z4))
    assert d.components == (zero_ideal(Z4),)
    assert d.radicals == (Z4set(Z4, 0, 2),)
    assert d.reduced


def test_bxb_zero(BxB, BxB_parts):
    Z = zero_ideal(BxB)
    d = primary_decomposition(Z)
    assert set(d.components) == set(BxB_parts)
    assert d.radicals == d.components
    assert d.reduced and len(d.provenance.children) == 2
    assert set(decompose_irreducible(Z)) == set(BxB_parts)


def test_irreducible_is_its_own_decomposition(C3):
    assert decompose_irreducible(zero_ideal(C3)) == [zero_ideal(C3)]
    I = by_label(C3, 0, 1)
    assert primary_decomposition(I).components == (I,)


def test_maximal_k_ideals_decompose_trivially():
    for S in census_upto(4):
        for M in maximal_k_ideals(S):
            d = primary_decomposition(M)
            assert d.components == (M,)
            assert associated_primes(M).prime_set == {M}


def test_reduce_examples(Z4, BxB_parts):
    b0, zb = BxB_parts
    assert reduce([b0]) == [b0]
    out = reduce([b0, zb, b0])
    assert len(out) == 2 and set(out) == {b0, zb}
    assert reduce([zero_ideal(Z4), Z4set(Z4, 0, 2)]) == [zero_ideal(Z4)]
    assert is_reduced([b0, zb]) and not is_reduced([b0, zb, b0])


def test_associated_primes_examples(Z4, BxB, BxB_parts):
    b0, zb = BxB_parts
    ap = associated_primes(zero_ideal(BxB))
    assert ap.prime_set == {b0, zb}
    for P, x in ap.witnesses.items():
        assert x not in P
    ap = associated_primes(zero_ideal(Z4))
    assert ap.primes == (Z4set(Z4, 0, 2),)
    # first witness in element order; x = 2 would serve equally well
    assert ap.witnesses[Z4set(Z4, 0, 2)] == 1
    assert radical(colon(zero_ideal(Z4), 2)) == Z4set(Z4, 0, 2)


def test_brute_force_examples(BxB, BxB_parts, C3):
    decs = brute_force_decompositions(zero_ideal(BxB))
    assert [set(d) for d in decs] == [set(BxB_parts)]
    I = by_label(C3, 0, 1)
    assert brute_force_decompositions(I) == [(I,)]
    with pytest.raises(SearchSpaceTooLarge):
        brute_force_decompositions(zero_ideal(BxB), budget=1)


def test_primary_input_has_trivial_decomposition():
    for S in census_upto(3):
        for I in all_k_ideals(S):
            if I.is_proper and (I,) in brute_force_decompositions(I):
                assert verify_uniqueness(I).associated == {radical(I)}


def test_verify_uniqueness_examples(Z4, BxB, BxB_parts):
    rep = verify_uniqueness(zero_ideal(BxB))
    assert rep.ok and rep.associated == set(BxB_parts)
    rep = verify_uniqueness(zero_ideal(Z4))
    assert rep.ok and rep.associated == {Z4set(Z4, 0, 2)}


def test_trace_z4(Z4):
    t = theorem29_trace(Z4set(Z4, 0, 2), 2, 3)
    assert t.concluded and t.m == 1
    assert set(t.steps) == set(TRACE_STEPS)
    assert t.steps["meet-is-Q"] and t.steps["power-in-Q"]
    assert list(t.lines())[-1] == "conclusion a^m in Q: true"
    if t.failed_steps:
        with pytest.raises(StepFailed) as info:
            theorem29_trace(Z4set(Z4, 0, 2), 2, 3, strict=True)
        assert info.value.step == t.failed_steps[0]


def test_trace_boolean(B):
    t = theorem29_trace(zero_ideal(B), 0, 1)
    assert t.concluded and t.m == 1


def test_trace_preconditions(B, Z4, counterexample):
    with pytest.raises(InputError):
        theorem29_trace(zero_ideal(B), 1, 1)  # ab not in Q
    with pytest.raises(InputError):
        theorem29_trace(Z4set(Z4, 0, 2), 1, 2)  # b in Q
    t = theorem29_trace(zero_ideal(counterexample), 2, 3)
    assert not t.concluded
    assert "closure-meet-is-Q" in t.failed_steps


def test_counterexample_raises(counterexample):
    S = counterexample
    with pytest.raises(TheoremViolation) as info:
        primary_decomposition(zero_ideal(S))
    assert info.value.witness["component"] == "{0}"
    assert brute_force_decompositions(zero_ideal(S)) == []
    general = brute_force_decompositions(zero_ideal(S), k_only=False)
    assert general == [(Ideal(S, mask_of([0, 2])), Ideal(S, mask_of([0, 3])))]
    rep = verify_uniqueness(zero_ideal(S), k_only=False)
    assert rep.engine is None and "no reduced" not in " ".join(rep.problems)


def test_determinism():
    for S in census_upto(3):
        for I in all_k_ideals(S):
            if I.is_proper:
                assert primary_decomposition(I) == primary_decomposition(I)


def test_sweep_orders_up_to_three_is_clean():
    for n in (2, 3):
        for rep in sweep_reports(n):
            assert rep.ok, [f.line() for f in rep.findings]


def test_order_four_findings_are_exactly_the_counterexamples():
    bad = {rep.semiring.name for rep in sweep_reports(4) if not rep.ok}
    assert bad == COUNTEREXAMPLE_NAMES
    claims = {f.claim for rep in sweep_reports(4) for f in rep.findings}
    assert claims == {"irreducible-primary", "irreducible-primary-trace", "decomposition-exists", "prime-set-unique"}
