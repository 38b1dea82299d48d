from itertools import product

import pytest

from kdecomp.classify import (
    classify,
    colon_is_primary_check,
    irreducibility_split,
    is_k_irreducible,
    is_k_irreducible_oracle,
    is_prime,
    is_primary,
    primary_colon_failures,
    primary_radical,
    primary_witness,
)
from kdecomp.errors import NotKIdeal, NotProper
from kdecomp.ideals import Ideal, all_ideals, all_k_ideals, mask_of, radical, whole, zero_ideal

from conftest import by_label, census_upto


def test_prime_examples(Z4, BxB, BxB_parts):
    b0, zb = BxB_parts
    assert is_prime(b0) and is_prime(zb)
    assert not is_prime(zero_ideal(Z4))
    assert not is_prime(whole(Z4))
    assert is_prime(Ideal(Z4, mask_of([0, 2])))


def test_primary_examples(Z4, BxB, C3):
    Z = zero_ideal(Z4)
    assert is_primary(Z)
    assert primary_radical(Z) == Ideal(Z4, mask_of([0, 2]))
    assert not is_primary(zero_ideal(BxB))
    assert primary_witness(zero_ideal(BxB)) is not None
    assert not is_primary(whole(C3))


def test_k_irreducible_examples(BxB, BxB_parts, C3, Z4):
    assert not is_k_irreducible(zero_ideal(BxB))
    assert set(irreducibility_split(zero_ideal(BxB))) == set(BxB_parts)
    assert is_k_irreducible(by_label(C3, 0, 1))
    assert is_k_irreducible(zero_ideal(C3))
    assert is_k_irreducible(Ideal(Z4, mask_of([0, 2])))


def test_k_irreducible_preconditions(Z4, counterexample):
    with pytest.raises(NotProper):
        is_k_irreducible(whole(Z4))
    with pytest.raises(NotKIdeal):
        is_k_irreducible(Ideal(counterexample, mask_of([0, 2])))
    with pytest.raises(NotKIdeal):
        is_k_irreducible_oracle(Ideal(counterexample, mask_of([0, 2])))


def test_classify_line(Z4, B):
    assert classify(zero_ideal(Z4)).line() == (
        "proper=true prime=false primary=true radical={0,2} k_irreducible=true"
    )
    assert classify(whole(B)).line() == (
        "proper=false prime=false primary=false radical={0,1} k_irreducible=n/a"
    )


def test_counterexample_classification(counterexample):
    c = classify(zero_ideal(counterexample))
    assert c.is_k_irreducible and not c.is_primary
    assert c.radical == Ideal(counterexample, mask_of([0, 3]))


def test_colon_check_examples(B, Z4, counterexample):
    rep = colon_is_primary_check(zero_ideal(Z4), 2)
    assert rep.ok and rep.colon == Ideal(Z4, mask_of([0, 2])) and rep.radical == rep.colon
    rep = colon_is_primary_check(zero_ideal(B), 1)
    assert rep.ok and rep.colon == zero_ideal(B)
    rep = colon_is_primary_check(zero_ideal(Z4), 0)
    assert not rep.ok and "precondition" in str(rep)
    rep = colon_is_primary_check(zero_ideal(counterexample), 3)
    assert not rep.ok


# -- census properties ---------------------------------------------------------

def brute_primary(I):
    S = I.semiring
    rad = radical(I)
    return I.is_proper and all(
        x in I or y in rad
        for x, y in product(S.elements, S.elements)
        if S.mul[x][y] in I
    )


def test_prime_primary_proper_chain():
    for S in census_upto(4):
        for I in all_ideals(S):
            c = classify(I)
            if c.is_prime:
                assert c.is_primary and c.radical == I
            if c.is_primary:
                assert c.is_proper
            assert c.is_primary == brute_primary(I)


def test_radical_of_primary_is_prime():
    for S in census_upto(4):
        for I in all_ideals(S):
            if is_primary(I):
                assert is_prime(primary_radical(I))


def test_colon_properties_of_primary_ideals():
    for S in census_upto(4):
        for Q in all_ideals(S):
            if is_primary(Q):
                assert primary_colon_failures(Q) == []
                P = radical(Q)
                for x in S.elements:
                    if x not in P:
                        assert colon_is_primary_check(Q, x).colon == Q


def test_irreducible_engine_matches_oracle():
    for S in census_upto(4):
        for I in all_k_ideals(S):
            if I.is_proper:
                assert is_k_irreducible(I) == is_k_irreducible_oracle(I)
                split = irreducibility_split(I)
                if split:
                    J, K = split
                    assert I < J and I < K and (J & K) == I
