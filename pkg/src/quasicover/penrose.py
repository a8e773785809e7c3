"""Rhombus tiling analysis: vertex configurations, jacks and kings,
decagonal covering clusters and the cartwheel comparison.

Vertices of the rhombus tiling are projected holes; their configurations
are coded by triangle overlaps inside the pentagon windows.  The two
configurations whose coding triangles share a single pentagon corner
(one per pentagon size) mark vertices whose whole star belongs to a
single Voronoi cell: around the smaller one the projected cell is the
decagonal covering cluster.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .coding import VertexCatalog, build_catalog, signature_of
from .exact import ONE, TAU, ZERO, QTau, Vec
from .geometry import CLOSED, Polygon, convex_hull
from .lattices import vadd, voronoi_cell, vsub
from .projection import (
    Patch, d10_group, deflate, make_frame, orbit_table,
)

F = Fraction

SMALL_LABELS = ("a", "d")      # shallow holes, small pentagon window
LARGE_LABELS = ("b", "c")      # deep holes, large pentagon window


@dataclass
class VertexConfig:
    index: int                  # 1..8 in the display numbering
    name: str                   # "", "jack" or "king"
    pentagon: str               # "small" | "large"
    canonical_key: tuple
    area: QTau
    star_size: int
    shared_corner_ambient: tuple | None


@dataclass
class ClassifiedVertex:
    position: tuple             # parallel coordinates
    hole_ambient: tuple
    hole_label: str
    config: VertexConfig
    signature: frozenset


@dataclass
class DecagonCluster:
    center: tuple               # q_par of the jack's lattice point
    lattice_ambient: tuple
    polygon: Polygon
    orientation: int            # 0 | 1, the two content orientations
    covered: list               # indices of tiles fully inside
    census: dict                # census of the fully contained tiles
    aligned: bool               # rim follows tiling edges: census is 5+5


@lru_cache(maxsize=None)
def _catalogs():
    return {lab: build_catalog("a4", "t", lab)
            for lab in SMALL_LABELS + LARGE_LABELS}


@lru_cache(maxsize=None)
def config_table() -> dict:
    """Display numbering of the eight configurations, keyed by
    (pentagon family, canonical star key).

    One star shape occurs around both shallow and deep holes; counted per
    family that gives 3 small + 5 large = 8 configurations, matching the
    reference split "1-3 small, 5-8 large" with 4 in the large block.
    The corner-sharing classes are pinned to index 2 (jack) and 6 (king);
    the rest are ordered by descending exact region area."""
    cats = _catalogs()
    merged = {}
    for fam, labels in (("small", SMALL_LABELS), ("large", LARGE_LABELS)):
        for lab in labels:
            for key, cls in cats[lab].classes.items():
                k = (fam, key)
                if k in merged:
                    merged[k].area = merged[k].area + cls.area
                    continue
                merged[k] = VertexConfig(0, "", fam, key, cls.area,
                                         cls.star_size,
                                         cls.shared_corner_ambient)
    small = [c for c in merged.values() if c.pentagon == "small"]
    large = [c for c in merged.values() if c.pentagon == "large"]
    configs = {}

    def number(block, anchor_index, anchor_name, start):
        anchored = [c for c in block if c.shared_corner_ambient is not None]
        if len(anchored) != 1:
            raise RuntimeError("corner-sharing class not unique")
        rest = sorted((c for c in block if c is not anchored[0]),
                      key=lambda c: (-float(c.area), c.canonical_key))
        slots = [i for i in range(start, start + len(block))
                 if i != anchor_index]
        anchored[0].index = anchor_index
        anchored[0].name = anchor_name
        for c, i in zip(rest, slots):
            c.index = i
        for c in block:
            configs[(c.pentagon, c.canonical_key)] = c

    # The corner-sharing class of the large pentagon is the decagon-center
    # configuration: its frequency is 1/tau^3 (one center per thick tile of
    # the once-inflated tiling) and every small-pentagon corner instance
    # shares its lattice point with one.  Those two facts pin the names:
    # jack = decagon centers (index 6), king = the rarer forcing class
    # (index 2, frequency 1/tau^5).
    number(small, 2, "king", 1)
    number(large, 6, "jack", 1 + len(small))
    return configs


def classify_vertices(patch: Patch, margin: float = 2.5):
    """Assign every interior vertex its configuration through the window
    coding, and cross-check against the star actually present in the
    patch.  Returns (classified list, skipped boundary count)."""
    if patch.kind != "t" or patch.frame.name != "a4":
        raise ValueError("vertex classification expects the rhombus tiling")
    frame = patch.frame
    cats = _catalogs()
    configs = config_table()
    orbits = orbit_table("a4", "t", patch.scale_steps)
    if patch.scale_steps:
        raise ValueError("classify the base tiling, not a rescaled copy")
    x0, y0, x1, y1 = patch.interior_region(margin)

    # collect vertices with exact hole identity
    verts = {}
    for ti, tile in enumerate(patch.tiles):
        amb_translate = _ambient_of(frame, tile.n)
        for ci, corner in enumerate(tile.orbit.corners_ambient):
            hole = vadd(amb_translate, corner)
            pos = tile.corners()[ci]
            rec = verts.setdefault(hole, [pos, []])
            rec[1].append((ti, ci))

    labels = _hole_labels()
    out = []
    skipped = 0
    for hole, (pos, incident) in verts.items():
        fx, fy = float(pos[0]), float(pos[1])
        if not (x0 <= fx <= x1 and y0 <= fy <= y1):
            skipped += 1
            continue
        lab = labels[_hole_class(hole)]
        cat = cats[lab]
        zx = patch.c_perp[0] - _perp_q(frame, hole, 0)
        zy = patch.c_perp[1] - _perp_q(frame, hole, 1)
        d = zx.d * zy.d
        zint = (zx.p * zy.d, zx.q * zy.d, zy.p * zx.d, zy.q * zx.d, d)
        sig = signature_of(cat, zint)
        key = cat.signature_to_class.get(sig)
        if key is None:
            raise AssertionError("vertex offset outside every catalog cell")
        # star oracle: tiles actually incident in the patch
        star = {(patch.tiles[ti].orbit.index, ci) for ti, ci in incident}
        if star != set(sig):
            raise AssertionError("window coding disagrees with the star")
        fam = "small" if lab in SMALL_LABELS else "large"
        out.append(ClassifiedVertex(pos, hole, lab, configs[(fam, key)],
                                    sig))
    return out, skipped


def _ambient_of(frame, n):
    amb = tuple(F(0) for _ in range(frame.lattice.ambient_dim))
    for coef, b in zip(n, frame.lattice.basis):
        if coef:
            amb = vadd(amb, tuple(F(coef * x) for x in b))
    return amb


def _perp_q(frame, point, k):
    return frame.perp(point)[k]


@lru_cache(maxsize=None)
def _hole_labels():
    # fifth-based class of 5*(coordinate sum of the fractional part)
    return {1: "a", 2: "b", 3: "c", 4: "d"}


def _hole_class(hole):
    frac = sum(x - (x.numerator // x.denominator) for x in hole)
    return int(frac) % 5


def detect_jacks_kings(patch: Patch, classified=None):
    """Projected lattice points at jack and king configurations; every
    king shares its lattice point with a jack."""
    if classified is None:
        classified, _ = classify_vertices(patch)
    frame = patch.frame
    out = []
    for cv in classified:
        if cv.config.name not in ("jack", "king"):
            continue
        corner = _instance_shared_corner(cv, frame)
        q_amb = vadd(cv.hole_ambient, corner)
        q_par = frame.par(q_amb)
        out.append((q_par, q_amb, cv.config.name, cv))
    return out


def _instance_shared_corner(cv: ClassifiedVertex, frame):
    """Shared pentagon corner of this instance's member windows, as an
    ambient lattice vector relative to the hole."""
    from .coding import corner_candidates
    cat = _catalogs()[cv.hole_label]
    by_key = {e.key: e for e in cat.entries}
    sets = None
    for k in cv.signature:
        vs = {(v.x, v.y) for v in by_key[k].window.vertices}
        sets = vs if sets is None else sets & vs
    specials = corner_candidates("a4", "t", cv.hole_label)
    hits = [c for c in sets if c in specials] if sets else []
    if len(hits) != 1:
        raise AssertionError("configuration does not share a single corner")
    return specials[hits[0]]


@lru_cache(maxsize=None)
def decagon_shape() -> Polygon:
    """Parallel shadow of the Voronoi cell: a regular decagon of unit
    edge (the rhombus edge length)."""
    frame = make_frame("a4")
    cell = voronoi_cell(frame.lattice)
    pts = [Vec(frame.par(v), frame.par_tag) for v in cell.vertices]
    return convex_hull(pts, frame.par_tag)


def decagon_area_identity() -> bool:
    """The decagon decomposes measure-exactly into 5 thick + 5 thin
    rhombi: its content is five of each even when the rim cuts tiles."""
    orbits = orbit_table("a4", "t")
    thick = next(o.tile.area() for o in orbits if o.type_label == "thick")
    thin = next(o.tile.area() for o in orbits if o.type_label == "thin")
    five = QTau(5)
    return decagon_shape().area() == five * thick + five * thin


def decagon_cover(patch: Patch, classified=None, margin: float = 4.0):
    """Decagonal clusters at jack centers plus a coverage report.

    Every cluster fully contains exactly five thick tiles (one per
    orientation of its pentad); the rim follows tiling edges only at the
    aligned subset (the king points), where the full census is 5 + 5.
    Interior tiles are covered in the strong sense: each lies fully
    inside at least one cluster."""
    jacks = [j for j in detect_jacks_kings(patch, classified)
             if j[2] == "jack"]
    shape = decagon_shape()
    orbits = orbit_table("a4", "t")
    thick_ids = {o.index for o in orbits if o.type_label == "thick"}

    buckets = {}
    polys = []
    for ti, tile in enumerate(patch.tiles):
        polys.append(tile.geometry())
        cx = float(tile.q_par[0])
        cy = float(tile.q_par[1])
        buckets.setdefault((int(cx // 2), int(cy // 2)), []).append(ti)

    def nearby(fx, fy):
        for bx in range(int((fx - 2.4) // 2), int((fx + 2.4) // 2) + 1):
            for by in range(int((fy - 2.4) // 2), int((fy + 2.4) // 2) + 1):
                yield from buckets.get((bx, by), ())

    clusters = []
    covered_by = {}
    for q_par, q_amb, _, cv in jacks:
        deca = shape.translate(Vec(q_par, shape.frame))
        fx, fy = float(q_par[0]), float(q_par[1])
        covered = [ti for ti in nearby(fx, fy)
                   if deca.contains_polygon(polys[ti])]
        census = {}
        for ti in covered:
            lab = patch.tiles[ti].orbit.type_label
            census[lab] = census.get(lab, 0) + 1
            covered_by.setdefault(ti, []).append(len(clusters))
        aligned = census.get("thick", 0) == 5 and census.get("thin", 0) == 5
        clusters.append(DecagonCluster(q_par, q_amb, deca,
                                       _content_orientation(patch, cv),
                                       covered, census, aligned))

    x0, y0, x1, y1 = patch.interior_region(margin)
    uncovered = []
    interior_count = 0
    for ti, tile in enumerate(patch.tiles):
        fx, fy = float(tile.q_par[0]), float(tile.q_par[1])
        if not (x0 <= fx <= x1 and y0 <= fy <= y1):
            continue
        interior_count += 1
        if ti not in covered_by:
            uncovered.append(ti)
    report = {
        "clusters": len(clusters),
        "aligned_clusters": sum(c.aligned for c in clusters),
        "interior_tiles": interior_count,
        "uncovered": len(uncovered),
        "coverage": 1.0 if interior_count == 0 else
                    1 - len(uncovered) / interior_count,
        "orientations": len({c.orientation for c in clusters}),
        "area_identity": decagon_area_identity(),
    }
    return clusters, report


def _content_orientation(patch: Patch, cv: ClassifiedVertex) -> int:
    """Which of the two content orientations a cluster carries: the parity
    of the 36-degree step of the shared-corner direction seen from the
    jack's hole vertex."""
    import math
    corner = _instance_shared_corner(cv, patch.frame)
    w_par = patch.frame.par(corner)
    # true angle needs the gram de-skew: y carries 1/sin(2 pi/5)
    sin72 = math.sin(2 * math.pi / 5)
    ang = math.atan2(float(w_par[1]) * sin72, float(w_par[0]))
    k = round(ang / (math.pi / 5))
    if abs(ang - k * math.pi / 5) > 1e-9:
        raise AssertionError("corner direction off the 36-degree grid")
    return k % 2


def fundamental_domain_pair(patch: Patch, clusters):
    """Two aligned decagons of opposite content orientation that jointly
    contain each of the twenty oriented prototile classes exactly once."""
    by_orientation = {}
    for c in clusters:
        if c.aligned:
            by_orientation.setdefault(c.orientation, []).append(c)
    if len(by_orientation) < 2:
        return None
    a_list, b_list = (by_orientation[k] for k in sorted(by_orientation)[:2])
    for c1 in a_list:
        ids1 = {patch.tiles[ti].orbit.index for ti in c1.covered}
        for c2 in b_list:
            ids2 = {patch.tiles[ti].orbit.index for ti in c2.covered}
            if not (ids1 & ids2) and len(ids1 | ids2) == 20:
                return c1, c2
    return None


# -- cartwheel ---------------------------------------------------------------


def _split_to_halves(tile, frame):
    """Robinson halves of a rhombus: split along the diagonal joining the
    single shallow corner to the opposite deep one; halves keep the
    adjacent deep corner as a chirality mark."""
    corners = tile.corners()
    labels = tile.orbit.corner_labels
    if tile.orbit.sign < 0:
        swap = {"a": "d", "b": "c", "c": "b", "d": "a"}
        labels = tuple(swap[l] for l in labels)
    order = list(range(4))
    shallow = next(i for i in order if labels[i] in ("a", "d"))
    opp = (shallow + 2) % 4
    s1 = (shallow + 1) % 4
    s2 = (shallow + 3) % 4
    halves = []
    for deep in (s1, s2):
        tri = Polygon([Vec(corners[shallow], frame.par_tag),
                       Vec(corners[opp], frame.par_tag),
                       Vec(corners[deep], frame.par_tag)], frame.par_tag)
        halves.append((tri, deep))
    return halves


def cluster_content(patch_fine: Patch, center_par, polygon: Polygon):
    """Forced content of the decagon in the deflated tiling: the tiles
    lying fully inside, as type-labelled exact vertex offsets from the
    center.  This is what the covering forces everywhere: twenty whole
    deflated rhombi (the cartwheel core).  The rim slivers beyond them
    belong to the overlap regions shared with neighbouring clusters and
    are not forced, so they are not part of the comparison; the check
    still verifies that the slivers' total measure is the exact decagon
    remainder."""
    pieces = []
    sliver_area = ZERO
    for tile in patch_fine.tiles:
        fx = float(tile.q_par[0]) - float(center_par[0])
        fy = float(tile.q_par[1]) - float(center_par[1])
        if fx * fx + fy * fy > 9.0:
            continue
        poly = tile.geometry()
        inter = poly.intersect(polygon)
        if not isinstance(inter, Polygon):
            continue
        if inter.area() != poly.area():
            sliver_area = sliver_area + inter.area()
            continue
        rel = frozenset(
            ((v.x - center_par[0]).p, (v.x - center_par[0]).q,
             (v.x - center_par[0]).d, (v.y - center_par[1]).p,
             (v.y - center_par[1]).q, (v.y - center_par[1]).d)
            for v in poly.vertices)
        pieces.append((tile.orbit.type_label, True, rel))
    return frozenset(pieces), sliver_area


def _transform_piece_set(pieces, g):
    out = set()
    for label, whole, rel in pieces:
        moved = []
        for (xp, xq, xd, yp, yq, yd) in rel:
            x = QTau(xp, xq, xd)
            y = QTau(yp, yq, yd)
            nx = g[0][0] * x + g[0][1] * y
            ny = g[1][0] * x + g[1][1] * y
            moved.append((nx.p, nx.q, nx.d, ny.p, ny.q, ny.d))
        out.add((label, whole, frozenset(moved)))
    return frozenset(out)


def cartwheel_matches(content_a, content_b) -> bool:
    """Exact congruence of two cluster contents modulo the point group."""
    for g in d10_group().elements:
        if _transform_piece_set(content_b, g.par) == content_a:
            return True
    return False


def cartwheel_check(patch: Patch, cluster: DecagonCluster,
                    patch_fine: Patch, reference=None) -> bool:
    """One deflation step turns every decagonal cluster into the same
    cartwheel core: twenty whole deflated rhombi in forced positions,
    with the exact remaining measure in the shared rim slivers."""
    x0, y0, x1, y1 = patch_fine.interior_region(2.4)
    fx, fy = float(cluster.center[0]), float(cluster.center[1])
    if not (x0 <= fx <= x1 and y0 <= fy <= y1):
        raise ValueError("insufficient neighbourhood data for the cluster")
    content, sliver = cluster_content(patch_fine, cluster.center,
                                      cluster.polygon)
    if reference is None:
        reference = reference_cartwheel()
    ref_content, ref_sliver = reference
    return sliver == ref_sliver and cartwheel_matches(content, ref_content)


@lru_cache(maxsize=None)
def reference_cartwheel():
    """Golden content derived from a canonical jack on a deterministic
    patch; every decagon must reproduce it modulo the point group."""
    from .projection import CutState, generate_patch
    cut = CutState.of("a4", [F(1, 7), F(1, 9)])
    half = 8
    region = Polygon([Vec((QTau(-half), QTau(-half)), "a4-par"),
                      Vec((QTau(half), QTau(-half)), "a4-par"),
                      Vec((QTau(half), QTau(half)), "a4-par"),
                      Vec((QTau(-half), QTau(half)), "a4-par")], "a4-par")
    patch = generate_patch(cut, "t", region)
    classified, _ = classify_vertices(patch, margin=3.0)
    jacks = [j for j in detect_jacks_kings(patch, classified)
             if j[2] == "jack"]
    jacks.sort(key=lambda j: (abs(float(j[0][0])) + abs(float(j[0][1]))))
    q_par = jacks[0][0]
    fine = deflate(patch, 1)
    deca = decagon_shape().translate(Vec(q_par, "a4-par"))
    return cluster_content(fine, q_par, deca)
