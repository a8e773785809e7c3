"""Hexagonal-lattice strip tiling: V-clusters and their symmetric subtiling.

Cutting the three rectangular klotz cells of the hexagonal lattice gives a
three-letter word A, B, C.  Voronoi hexagons project to intervals of
length |A|+|B|+|C| around accepted lattice images; each accepted image
carries a cluster reading ABC or CBA depending on which side of the
projected hexagon boundary the cut passes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ONE, TAU, QTau
from .geometry import Interval
from .projection import CutState, Patch, generate_patch, make_frame, orbit_table

F = Fraction

LEN = {"A": ONE, "B": TAU, "C": TAU - 1}
SPAN = TAU * 2                         # |V_par| = |A|+|B|+|C|


@dataclass
class A2Word:
    letters: str
    positions: list
    translates: list
    c_perp: QTau
    patch: Patch

    def __len__(self):
        return len(self.letters)


@dataclass
class VCluster1D:
    center: QTau                # projected lattice point
    span: Interval
    reading: str                # "ABC" | "CBA"
    tile_indices: tuple         # indices into the word, left to right


@dataclass
class ClusterLayout:
    reading: str
    slots: tuple                # (letter, orbit_index, translate_vec, shift)
    window: Interval            # cluster-center window for z = c - q_perp


def a2_generate(c_perp, length, halfopen: bool = True) -> A2Word:
    cut = CutState.of("a2", [c_perp], halfopen)
    region = Interval(0, length, "a2-par")
    patch = generate_patch(cut, "t", region)
    # tile shadows carry offsets from their anchors; order by start position
    starts = [patch.tiles[i].q_par[0] + patch.tiles[i].orbit.tile.lo
              for i in range(len(patch.tiles))]
    order = sorted(range(len(patch.tiles)), key=lambda i: float(starts[i]))
    letters = "".join(patch.tiles[i].orbit.type_label for i in order)
    positions = [starts[i] for i in order]
    translates = [patch.tiles[i].n for i in order]
    return A2Word(letters, positions, translates, cut.c_perp[0], patch)


def _small_vectors():
    """Lattice vectors with coefficients in [-2, 2]; enough to anchor any
    cluster member relative to its center."""
    frame = make_frame("a2")
    out = []
    for m in range(-2, 3):
        for n in range(-2, 3):
            amb = tuple(F(m * a + n * b) for a, b in
                        zip(frame.lattice.basis[0], frame.lattice.basis[1]))
            out.append(((m, n), frame.par(amb)[0], frame.perp(amb)[0]))
    return out


def cluster_layouts() -> tuple[ClusterLayout, ClusterLayout]:
    """Member placements and center windows, derived from the tiling data.

    For each reading the three tiles must occupy fixed sub-intervals of the
    projected Voronoi span; the translate realizing each slot is found
    exactly, and the cluster window is the intersection of the member
    windows pulled back to the center."""
    orbits = orbit_table("a2", "t")
    vectors = _small_vectors()
    layouts = []
    for reading in ("ABC", "CBA"):
        offset = -TAU
        slots = []
        window = None
        for letter in reading:
            orbit = next(o for o in orbits if o.type_label == letter)
            want_lo = offset
            vec = next((v for v in vectors
                        if orbit.tile.lo + v[1] == want_lo), None)
            if vec is None:
                raise RuntimeError(f"no translate realizes slot {letter}")
            # member at translate q + v: its window pulls back by +perp(v)
            shifted = Interval(orbit.window.lo + vec[2],
                               orbit.window.hi + vec[2])
            window = shifted if window is None else window.intersect(shifted)
            slots.append((letter, orbit.index, vec[0], vec[1]))
            offset = offset + LEN[letter]
        layouts.append(ClusterLayout(reading, tuple(slots), window))
    return tuple(layouts)


def a2_vclusters(word: A2Word) -> list[VCluster1D]:
    """Clusters at lattice images accepted by the center windows; each
    contains every prototile exactly once and consecutive clusters are
    disjoint or share a single A or C."""
    layouts = cluster_layouts()
    frame = make_frame("a2")
    start_index = {(p, word.letters[i]): i
                   for i, p in enumerate(word.positions)}
    seen = set()
    clusters = []
    for i in range(len(word)):
        for layout in layouts:
            for (letter, oidx, vec, shift) in layout.slots:
                if word.letters[i] != letter:
                    continue
                # member sits at q + v, so the candidate center is t - v
                m, n = word.translates[i]
                dm, dn = vec
                q = (m - dm, n - dn)
                if q in seen:
                    continue
                amb = tuple(F(q[0] * a + q[1] * b) for a, b in
                            zip(frame.lattice.basis[0],
                                frame.lattice.basis[1]))
                q_par = frame.par(amb)[0]
                q_perp = frame.perp(amb)[0]
                z = word.c_perp - q_perp
                lay = next((l for l in layouts if l.window.contains(z)),
                           None)
                if lay is None:
                    seen.add(q)
                    continue
                tiles = _member_indices(word, lay, q_par, start_index)
                if tiles is None:
                    # member outside the generated range: boundary cluster
                    seen.add(q)
                    continue
                seen.add(q)
                clusters.append(VCluster1D(
                    q_par, Interval(q_par - TAU, q_par + TAU),
                    lay.reading, tiles))
    clusters.sort(key=lambda c: float(c.center))
    return clusters


def _member_indices(word, layout, q_par, start_index):
    tiles = []
    offset = q_par - TAU
    for letter, *_ in layout.slots:
        idx = start_index.get((offset, letter))
        if idx is None:
            return None
        tiles.append(idx)
        offset = offset + LEN[letter]
    return tuple(tiles)


# -- inversion-symmetric subdivision ----------------------------------------

# Piece lengths are forced by requiring one palindromic word for both
# readings: (tau-1, 2-tau, 2tau-2, 2-tau, tau-1).  The A and B cells carry
# different cut offsets in the two perpendicular bands the readings live
# in, which is what the partial-height dashed marks express.
_SUBDIV = {
    ("ABC", "A"): (TAU - 1, 2 - TAU),
    ("ABC", "B"): (TAU * 2 - 2, 2 - TAU),
    ("ABC", "C"): (TAU - 1,),
    ("CBA", "C"): (TAU - 1,),
    ("CBA", "B"): (2 - TAU, TAU * 2 - 2),
    ("CBA", "A"): (2 - TAU, TAU - 1),
}


def a2_symmetric_subdivision(word: A2Word, cluster: VCluster1D):
    """Subdivided piece lengths across the cluster, identical for both
    readings and symmetric under inversion."""
    pieces = []
    for idx in cluster.tile_indices:
        letter = word.letters[idx]
        pieces.extend(_SUBDIV[(cluster.reading, letter)])
    return tuple(pieces)


def subdivision_is_palindrome(pieces) -> bool:
    return list(pieces) == list(reversed(pieces))
