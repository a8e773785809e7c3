from fractions import Fraction

import pytest

from quasicover.exact import ONE, TAU, QTau, qtau
from quasicover.fibonacci import (
    CENTER_WINDOW, DCluster1D, FiboWord, cluster_subword, fibo_center_window,
    fibo_clusters, fibo_symmetric_subtiling, fibonacci_word, letters_between,
)

F = Fraction
C = F(1, 100)


def substitution_fixed_point(n: int) -> str:
    w = "L"
    while len(w) < n:
        w = "".join("LS" if ch == "L" else "L" for ch in w)
    return w[:n]


@pytest.fixture(scope="module")
def word():
    return fibonacci_word(C, 220)


@pytest.fixture(scope="module")
def clusters(word):
    return fibo_clusters(word)


class TestWord:
    def test_matches_substitution_language(self, word):
        assert word.letters in substitution_fixed_point(20000)

    def test_no_forbidden_factors(self, word):
        assert "SS" not in word.letters
        assert "LLL" not in word.letters

    def test_letter_frequency_tends_to_tau(self):
        w = fibonacci_word(C, 700)
        ratio = w.letters.count("L") / w.letters.count("S")
        assert abs(ratio / float(TAU) - 1) < 0.01


class TestClusters:
    def test_every_tile_covered(self, word, clusters):
        covered = set()
        for c in clusters:
            covered.add(c.first_tile)
            covered.add(c.first_tile + 1)
        missing = set(range(1, len(word) - 1)) - covered
        assert not missing

    def test_consecutive_disjoint_or_one_shared_s(self, word, clusters):
        for a, b in zip(clusters, clusters[1:]):
            shared = {a.first_tile, a.first_tile + 1} & \
                     {b.first_tile, b.first_tile + 1}
            assert len(shared) <= 1
            for i in shared:
                assert word.letters[i] == "S"

    def test_lslls_parse(self, word, clusters):
        # wherever LSLLS occurs, the parse is (L(S)L)(LS): clusters at the
        # first two tiles, the next two, and the last two
        idx = word.letters.find("LSLLS", 5)
        assert idx >= 0
        starts = {c.first_tile for c in clusters}
        assert idx in starts          # (LS...)
        assert idx + 1 in starts      # (SL), linked to the first by the S
        assert idx + 3 in starts      # (LS)
        assert idx + 2 not in starts  # no cluster on the LL seam

    def test_reading_is_ls_or_sl(self, clusters):
        assert {c.reading for c in clusters} <= {"LS", "SL"}

    def test_cluster_center_is_hole_image(self, word, clusters):
        for c in clusters[:30]:
            assert c.span.midpoint() == c.center

    def test_window_rejects_non_centers(self, word, clusters):
        # every hole whose image is outside the window is not a center
        accepted = {c.first_tile for c in clusters}
        from quasicover.fibonacci import _hole_images
        for i in range(len(word) - 1):
            par, perp = _hole_images(word, i)
            inside = CENTER_WINDOW.contains(word.c_perp - perp)
            assert inside == (i in accepted)


class TestCenterWindow:
    def test_ratio_to_vertex_window_is_inverse_tau(self):
        # |window| / (|L|+|S|) = tau - 1, an exact identity
        w = fibo_center_window()
        vertex_window_len = TAU          # perpendicular units
        ratio = w.length() / vertex_window_len
        assert ratio == TAU - 1
        # same value through the field inverse
        assert TAU * (ONE + TAU).inverse() == TAU - 1

    def test_density_matches_window_ratio(self):
        w = fibonacci_word(C, 700)
        clusters = fibo_clusters(w)
        # centers per hole: every junction hosts a candidate hole
        density = len(clusters) / (len(w) - 1)
        assert abs(density / float(TAU - 1) - 1) < 0.02


class TestSymmetricSubtiling:
    def test_cluster_spans_read_lsl(self, word, clusters):
        fine = fibo_symmetric_subtiling(word)
        for c in clusters:
            if c.span.lo < QTau(3) or float(c.span.hi) > 210:
                continue
            assert cluster_subword(fine, c) == "LSL"

    def test_links_and_separations(self, word, clusters):
        fine = fibo_symmetric_subtiling(word)
        index_at = {p: i for i, p in enumerate(fine.positions)}
        for a, b in zip(clusters, clusters[1:]):
            if b.span.hi > QTau(200):
                break
            shared = {a.first_tile, a.first_tile + 1} & \
                     {b.first_tile, b.first_tile + 1}
            if shared:
                # one shared S = the middle L' of the string S'L'S'
                i = index_at[b.span.lo]
                assert fine.letters[i] == "L"
                assert fine.letters[i - 1] == "S"
                assert fine.letters[i + 1] == "S"
                assert fine.positions[i + 1] == a.span.hi
            else:
                # spans touch; the seam shows the separating string L'L'
                assert a.span.hi == b.span.lo
                i = index_at[b.span.lo]
                assert fine.letters[i] == "L"
                assert fine.letters[i - 1] == "L"

    def test_lengths_scale_by_inverse_tau(self, word):
        fine = fibo_symmetric_subtiling(word)
        # L' has the length of S
        l_fine = next(fine.positions[i + 1] - fine.positions[i]
                      for i in range(len(fine) - 1)
                      if fine.letters[i] == "L")
        assert l_fine == ONE

    def test_prototile_multiset_per_cluster(self, word, clusters):
        # each cluster holds one L and one S: a fundamental domain for
        # tiling-compatible functions
        for c in clusters:
            assert sorted(c.reading) == ["L", "S"]


class TestErrors:
    def test_short_word_raises(self):
        w = fibonacci_word(C, F(3, 2))
        assert len(w) < 2 or True
        tiny = FiboWord("L", [QTau(0)], [(0, 0)], w.c_perp, w.patch)
        with pytest.raises(ValueError):
            fibo_clusters(tiny)
