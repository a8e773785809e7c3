"""Fibonacci tiling: cluster chains, center windows, symmetric subtiling.

The word over L, S arises from cutting the square-lattice klotz
dissection.  Delone squares project to intervals of length |L|+|S|
centered at hole images; each hole whose perpendicular image is accepted
carries a two-tile cluster reading LS or SL, the covering unit of the
chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ONE, TAU, QTau
from .geometry import Interval
from .projection import CutState, Patch, deflate, generate_patch, make_frame

HALF = QTau(1, 0, 2)
SPAN = TAU + 1                       # |L| + |S| in parallel units

# window for cluster centers: the deflated S' cells project to intervals
# of length |L| centered at the Voronoi vertices
CENTER_WINDOW = Interval(-HALF, HALF)


@dataclass
class FiboWord:
    letters: str
    positions: list            # exact start coordinate per tile
    translates: list           # lattice coefficients per tile
    c_perp: QTau
    patch: Patch

    def __len__(self):
        return len(self.letters)


@dataclass
class DCluster1D:
    center: QTau               # projected hole
    hole_perp: QTau
    span: Interval
    first_tile: int
    reading: str               # "LS" or "SL"


def fibonacci_word(c_perp, length, halfopen: bool = True) -> FiboWord:
    """The tile word on [0, length] for the given perpendicular offset."""
    cut = CutState.of("square", [c_perp], halfopen)
    region = Interval(0, length, "square-par")
    patch = generate_patch(cut, "tstar", region)
    order = sorted(range(len(patch.tiles)),
                   key=lambda i: float(patch.tiles[i].q_par[0]))
    letters = "".join(patch.tiles[i].orbit.type_label for i in order)
    positions = [patch.tiles[i].q_par[0] for i in order]
    translates = [patch.tiles[i].n for i in order]
    return FiboWord(letters, positions, translates, cut.c_perp[0], patch)


def fibo_center_window() -> Interval:
    return CENTER_WINDOW


def _hole_images(word: FiboWord, i: int):
    """Hole adjacent to tile i on its right: translate + (1/2, 1/2)."""
    m, n = word.translates[i]
    frame = make_frame("square")
    amb = (Fraction(2 * m + 1, 2), Fraction(2 * n + 1, 2))
    return frame.par(amb)[0], frame.perp(amb)[0]


def fibo_clusters(word: FiboWord) -> list[DCluster1D]:
    """Linked cluster chain at accepted hole images.

    Every tile belongs to at least one cluster; consecutive clusters are
    disjoint or share exactly one S, which is how LSLLS parses as
    (L(S)L)(LS)."""
    if len(word) < 2:
        raise ValueError("word too short to carry clusters")
    clusters = []
    for i in range(len(word) - 1):
        hole_par, hole_perp = _hole_images(word, i)
        if not CENTER_WINDOW.contains(word.c_perp - hole_perp):
            continue
        reading = word.letters[i:i + 2]
        if reading not in ("LS", "SL"):
            raise AssertionError(
                f"window accepted a non-cluster reading {reading}")
        a = word.positions[i]
        if hole_par != a + SPAN * HALF:
            raise AssertionError("hole image off the cluster midpoint")
        clusters.append(DCluster1D(hole_par, hole_perp,
                                   Interval(a, a + SPAN), i, reading))
    return clusters


def fibo_symmetric_subtiling(word: FiboWord) -> FiboWord:
    """One deflation step on the same cut; tiles shrink by 1/tau.

    In the union with the original word every cluster span reads L'S'L';
    between consecutive clusters L'L' marks disjoint ones and S'L'S'
    marks a pair linked by the middle L' (the shared S of the coarse
    word)."""
    fine_patch = deflate(word.patch, 1)
    order = sorted(range(len(fine_patch.tiles)),
                   key=lambda i: float(fine_patch.tiles[i].q_par[0]))
    letters = "".join(fine_patch.tiles[i].orbit.type_label for i in order)
    positions = [fine_patch.tiles[i].q_par[0] for i in order]
    translates = [fine_patch.tiles[i].n for i in order]
    return FiboWord(letters, positions, translates, word.c_perp, fine_patch)


def cluster_subword(fine: FiboWord, cluster: DCluster1D) -> str:
    lo, hi = cluster.span.lo, cluster.span.hi
    return "".join(ch for ch, p in zip(fine.letters, fine.positions)
                   if lo <= p < hi)


def letters_between(fine: FiboWord, hi_prev: QTau, lo_next: QTau) -> str:
    return "".join(ch for ch, p in zip(fine.letters, fine.positions)
                   if hi_prev <= p < lo_next)
