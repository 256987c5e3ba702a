from math import comb

import pytest

from symmetria import paths as P
from symmetria import statistics as S
from symmetria.paths import Bargraph, Partition


def gd(text):
    return P.word(P.GRAND_DYCK, text)


def test_ds_path_examples():
    assert S.ds_path(gd("UUDD")) == 2
    assert S.ds_path(gd("UDDU")) == 0
    assert S.ds_path(gd("")) == 0


def test_sv_ret_pho_hm_examples():
    assert S.sv(gd("UD")) == 1
    assert S.ret(gd("UD")) == 1
    assert S.ret(gd("UUUDDD")) == 1
    assert S.pho(gd("DU")) == 0
    assert S.pho(gd("UDUD")) == 2
    assert S.hm(gd("UUDD")) == 2
    assert S.hm(gd("UDDU")) == 0
    assert S.hm(gd("DDUU")) == -2


def test_wrong_family():
    with pytest.raises(S.WrongFamilyError):
        S.ds_path(P.word(P.MOTZKIN, "UHD"))


def test_partition_examples():
    lam = Partition((5, 4, 4, 2, 1, 1))
    assert S.ds_square(lam, 6) == 2
    assert S.ds_square(lam, 7) == 3
    assert S.ds_partition(lam) == 2
    assert S.ds_square(Partition(()), 4) == 4
    mu = Partition((4, 4, 3, 2, 1))
    assert S.ds_partition(mu) == 3
    assert S.dsh(mu) == 2
    assert S.ds_partition(Partition((2, 1))) == 2
    assert S.dsh(Partition(())) == 0
    assert S.dsh(Partition((3,))) == 0
    assert S.dsh(Partition((1,))) == 1
    with pytest.raises(ValueError):
        S.ds_square(lam, 4)


def test_bargraph_examples():
    assert S.ds_bargraph(Bargraph((1, 1, 2, 3, 4, 2, 2, 1))) == 2
    assert S.ds_bargraph(Bargraph((2, 3, 2))) == 1
    assert S.ds_bargraph(Bargraph((1, 2))) == 0


@pytest.mark.parametrize("n", range(9))
def test_ds_path_mirror_invariance(n):
    flip = {P.Step.U: P.Step.D, P.Step.D: P.Step.U}
    for w in P.enumerate_words(P.GRAND_DYCK, n):
        mirrored = P.word(P.GRAND_DYCK, tuple(flip[s] for s in reversed(w.steps)))
        assert S.ds_path(mirrored) == S.ds_path(w)
        if mirrored == w:
            assert S.ds_path(w) == n


@pytest.mark.parametrize("n", range(1, 9))
def test_fully_symmetric_dyck_paths(n):
    full = sum(1 for w in P.enumerate_words(P.DYCK, n) if S.ds_path(w) == n)
    assert full == comb(n, n // 2)


def test_ds_square_grows_past_min_square():
    for m in range(5):
        for lam in P.enumerate_partitions(P.ByMinSquare(m)):
            assert S.ds_square(lam, m) == S.ds_partition(lam)
            for n in range(m, m + 3):
                assert S.ds_square(lam, n + 1) == S.ds_square(lam, n) + 1


def test_bargraph_semiperimeter():
    for sp in range(2, 13):
        for b in P.enumerate_unimodal_centered_bargraphs(sp):
            assert S.sp_bargraph(b) == len(b.columns) + max(b.columns) == sp


@pytest.mark.parametrize("n", range(1, 8))
def test_grand_dyck_array_histograms_match_per_word(n):
    words = P.enumerate_words(P.GRAND_DYCK, n)
    got = S.grand_dyck_histograms(n)
    for name, fn in (("ds", S.ds_path), ("sv", S.sv)):
        hist = {}
        for w in words:
            hist[fn(w)] = hist.get(fn(w), 0) + 1
        assert got[name] == dict(sorted(hist.items()))


def test_hm_distribution_is_squared_binomials():
    for n in range(7):
        hist = {}
        for w in P.enumerate_words(P.GRAND_DYCK, n):
            hist[S.hm(w)] = hist.get(S.hm(w), 0) + 1
        assert hist == {n - 2 * k: comb(n, k) ** 2 for k in range(n + 1)}
