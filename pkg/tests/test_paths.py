from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from symmetria import paths as P
from symmetria.paths import Partition, Step


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_validate_examples():
    assert P.validate(P.word(P.GRAND_DYCK, "UDDU"))
    assert not P.validate(P.word(P.DYCK, "DU"))
    assert not P.validate(P.word(P.WQ3, [Step.NW_color1]))


@pytest.mark.parametrize("n", range(11))
def test_dyck_and_grand_dyck_counts(n):
    assert len(P.enumerate_words(P.GRAND_DYCK, n)) == comb(2 * n, n)
    assert len(P.enumerate_words(P.DYCK, n)) == catalan(n)


@pytest.mark.parametrize("n", range(9))
def test_bicolored_motzkin_count_is_shifted_catalan(n):
    assert P.count(P.BICOLORED_MOTZKIN, n) == catalan(n + 1)


def test_small_counts():
    assert len(P.enumerate_words(P.GRAND_DYCK, 2)) == 6
    assert len(P.enumerate_words(P.DYCK, 3)) == 5
    assert len(P.enumerate_words(P.PEAKLESS_MOTZKIN, 5)) == 8


def test_uneven_bicolored_grand_motzkin_size_4():
    # exhaustive count against the closed formula sum_k binom(n-k, k)^2
    words = P.enumerate_words(P.UNEVEN_BICOLORED_GRAND_MOTZKIN, 4)
    assert len(words) == 11
    for n in range(11):
        expected = sum(comb(n - k, k) ** 2 for k in range(n // 2 + 1))
        assert P.count(P.UNEVEN_BICOLORED_GRAND_MOTZKIN, n) == expected


@pytest.mark.parametrize("fam", [P.DYCK, P.GRAND_DYCK, P.MOTZKIN, P.BICOLORED_GRAND_MOTZKIN,
                                 P.PEAKLESS_MOTZKIN, P.VALLEY_FREE_MOTZKIN, P.WQ1, P.WQ2, P.WQ3,
                                 P.UNEVEN_BICOLORED_MOTZKIN])
def test_enumeration_is_valid_sorted_and_duplicate_free(fam):
    words = P.enumerate_words(fam, 5)
    assert len(set(words)) == len(words) == P.count(fam, 5)
    assert all(P.validate(w) for w in words)
    keys = [[P.STEP_ORDER[s] for s in w.steps] for w in words]
    assert keys == sorted(keys)


def test_enumeration_cap():
    with pytest.raises(P.EnumerationLimitError):
        P.enumerate_words(P.GRAND_DYCK, 10, cap=1000)


def test_empty_objects():
    assert [w.steps for w in P.enumerate_words(P.GRAND_DYCK, 0)] == [()]
    assert P.enumerate_partitions(P.InSquare(0)) == [Partition(())]
    with pytest.raises(ValueError):
        P.Bargraph(())


def test_partition_modes():
    assert set(P.enumerate_partitions(P.InSquare(1))) == {Partition(()), Partition((1,))}
    expected = {(4,), (1, 1, 1, 1), (3, 3), (2, 2, 2), (3, 1), (2, 1, 1), (2, 2, 1), (3, 2)}
    assert {p.parts for p in P.enumerate_partitions(P.BySemiperimeter(5))} == expected
    assert P.enumerate_partitions(P.BySemiperimeter(2)) == [Partition((1,))]
    for m in range(5):
        for lam in P.enumerate_partitions(P.ByMinSquare(m)):
            assert max(lam.first, lam.conjugate().first) == m


@given(st.lists(st.integers(1, 6), max_size=6))
def test_conjugation_is_an_involution(xs):
    lam = Partition(tuple(sorted(xs, reverse=True)))
    assert lam.conjugate().conjugate() == lam
    assert sum(lam.conjugate().parts) == sum(lam.parts)


def test_bargraphs():
    assert [b.columns for b in P.enumerate_unimodal_centered_bargraphs(2)] == [(1,)]
    assert {b.columns for b in P.enumerate_unimodal_centered_bargraphs(3)} == {(1, 1), (2,)}


@settings(max_examples=40)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 12))
def test_ballot_reflection_count(a, b, n):
    words = P.enumerate_ballot_paths(a, b, n)
    if (n - b + a) % 2:
        assert words == []
        return

    def c(m, k):
        return comb(m, k) if 0 <= k <= m else 0

    assert len(words) == c(n, (n - b + a) // 2) - c(n, (n - b - a - 2) // 2)
    assert [str(w) for w in P.enumerate_ballot_paths(1, 0, 1)] == ["D"]


def test_ballot_dyck_case():
    for n in range(6):
        assert len(P.enumerate_ballot_paths(0, 0, 2 * n)) == catalan(n)
