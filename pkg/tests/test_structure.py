from __future__ import annotations

from math import gcd

import pytest

from cyclosemi.arith import divisor_count, is_prime
from cyclosemi.cyclotomy import cyclotomic_factorization, semigroup_polynomial
from cyclosemi.errors import DomainError
from cyclosemi.polynomials import cyclotomic
from cyclosemi.semigroup import betti_elements, from_generators, naturals
from cyclosemi.structure import (
    Leaf,
    Node,
    build_family_Sek,
    ci_hilbert_form,
    classify_low_length,
    detect_gluings,
    detect_gluings_exhaustive,
    gluing_polynomial_identity,
    is_complete_intersection,
    tree_to_json,
)


def gluing_key(g):
    return (g.part_a, g.part_b, g.a1, g.a2, g.s1.minimal_generators, g.s2.minimal_generators)


def test_detect_gluings_examples():
    (g,) = detect_gluings(from_generators([4, 6, 7]))
    assert (g.part_a, g.part_b, g.a1, g.a2) == ((4, 6), (7,), 2, 7)
    assert g.s1 == from_generators([2, 3]) and g.s2.is_natural
    assert g.glue_point == 14
    (g,) = detect_gluings(from_generators([2, 3]))
    assert (g.a1, g.a2, g.glue_point) == (2, 3, 6) and g.s1.is_natural and g.s2.is_natural
    assert detect_gluings(from_generators([5, 6, 7, 8])) == []
    assert detect_gluings(naturals()) == []


def test_ci_tree_examples():
    tree = is_complete_intersection(from_generators([4, 6, 7]))
    assert tree == Node(2, 7, Node(2, 3, Leaf(), Leaf()), Leaf())
    assert tree.betti() == [12, 14] and tree.generators == (4, 6, 7)
    assert tree_to_json(tree)["betti"] == [12, 14]
    assert is_complete_intersection(from_generators([5, 6, 7, 8])) is None
    assert is_complete_intersection(naturals()) == Leaf()


def test_sharpness_gluing():
    S = from_generators([24, 25, 35, 36])
    tree = is_complete_intersection(S)
    assert tree is not None
    assert sorted(tree.betti()) == sorted(betti_elements(S)) == [60, 72, 175]
    fac = cyclotomic_factorization(semigroup_polynomial(S))
    assert fac.length == 7
    assert fac.length == (divisor_count(12) - 1) * (divisor_count(5) - 1) + 1 + 1


def test_fast_detection_equals_exhaustive(symmetric_corpus, brute_corpus):
    corpus = list(symmetric_corpus) + [S for F in range(1, 14) for S in brute_corpus[F]]
    for S in corpus:
        fast = [gluing_key(g) for g in detect_gluings(S)]
        slow = [gluing_key(g) for g in detect_gluings_exhaustive(S)]
        assert fast == slow, S


def test_gluing_polynomial_identity_everywhere(symmetric_corpus):
    seen = 0
    for S in symmetric_corpus:
        for g in detect_gluings(S, verify=False):
            assert gluing_polynomial_identity(S, g), (S, g.a1, g.a2)
            assert S.embedding_dimension == g.s1.embedding_dimension + g.s2.embedding_dimension
            seen += 1
    assert seen > 100


def test_gluing_reconstructs_generators(symmetric_corpus):
    for S in symmetric_corpus:
        for g in detect_gluings(S):
            assert gcd(g.a1, g.a2) == 1
            rebuilt = sorted([g.a1 * n for n in g.s1.minimal_generators] + [g.a2 * n for n in g.s2.minimal_generators])
            assert tuple(rebuilt) == S.minimal_generators


def test_ci_oracles_agree(symmetric_corpus, brute_corpus):
    corpus = list(symmetric_corpus) + [S for group in brute_corpus.values() for S in group]
    ci_count = 0
    for S in corpus:
        tree = is_complete_intersection(S)
        betti = betti_elements(S)
        assert (tree is not None) == (len(betti) == S.embedding_dimension - 1), S
        if tree is not None:
            ci_count += 1
            # the Betti multiset does not depend on which gluing was followed
            assert tree.betti() == betti, S
            assert tree.generators == S.minimal_generators
    assert ci_count > 150


def test_ci_hilbert_form_and_length(symmetric_corpus):
    for S in symmetric_corpus:
        tree = is_complete_intersection(S)
        if tree is None:
            continue
        P = semigroup_polynomial(S)
        assert ci_hilbert_form(tree) == P
        fac = cyclotomic_factorization(P)
        assert fac.cyclotomic
        betti = tree.betti()
        gens = S.minimal_generators
        expected = sum(divisor_count(b) for b in betti) - sum(divisor_count(n) for n in gens) + 1
        assert fac.length == expected, S
        assert S.embedding_dimension <= fac.length + 1


def test_unverified_search_agrees_with_verified(symmetric_corpus):
    for S in symmetric_corpus:
        assert (is_complete_intersection(S, verify=False) is None) == (is_complete_intersection(S) is None)


# -- family ------------------------------------------------------------------


@pytest.mark.parametrize("e", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_family_smallest_primes(e, k):
    S, cert = build_family_Sek(e, k)
    assert S.embedding_dimension == e
    assert cert.length == e + k - 2
    assert is_complete_intersection(S) is not None
    assert cert.tree.generators == S.minimal_generators
    assert all(is_prime(p) for p in cert.primes) and len(set(cert.primes)) == e


def test_family_examples():
    S, cert = build_family_Sek(2, 1, [2, 3])
    assert S == from_generators([2, 3]) and cert.length == 1
    S, cert = build_family_Sek(2, 2, [2, 3])
    assert S == from_generators([3, 4]) and cert.length == 2
    S, cert = build_family_Sek(3, 1, [2, 3, 5])
    assert S == from_generators([4, 5, 6]) and cert.length == 2
    assert cert.factorization.factors == ((10, 1), (12, 1))


@pytest.mark.parametrize(
    "e,k,primes",
    [(1, 1, None), (2, 0, None), (2, 1, [2, 2]), (2, 1, [2, 4]), (3, 1, [2, 5, 3]), (2, 1, [2, 3, 5])],
)
def test_family_rejects(e, k, primes):
    with pytest.raises(DomainError):
        build_family_Sek(e, k, primes)


# -- classification ------------------------------------------------------------


def test_classification_examples():
    assert str(classify_low_length(from_generators([2, 3]))) == "PQ(2,3)"
    c = classify_low_length(from_generators([3, 4]))
    assert str(c) == "PQ2(3,2)"
    assert semigroup_polynomial(from_generators([3, 4])) == cyclotomic(6) * cyclotomic(12)
    assert str(classify_low_length(from_generators([4, 5, 6]))) == "PQ2QR(5,2,3)"
    assert str(classify_low_length(from_generators([4, 6, 7]))) == "PQ2QR(7,2,3)"


def test_classification_preconditions():
    with pytest.raises(DomainError):
        classify_low_length(from_generators([5, 6, 7, 8]))
    with pytest.raises(DomainError):
        classify_low_length(from_generators([24, 25, 35, 36]))
    with pytest.raises(DomainError):
        classify_low_length(naturals())


def test_classification_over_corpus(cyclotomic_corpus):
    for S, fac in cyclotomic_corpus:
        if fac.length in (1, 2):
            assert classify_low_length(S).tag != "VIOLATION", S
