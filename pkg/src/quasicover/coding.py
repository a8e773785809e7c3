"""Vertex-configuration coding in the perpendicular windows.

A vertex of either fivefold tiling is classified by where its offset
z = c_perp - vertex_perp lands inside the vertex window (a pentagon for
the rhombus tiling's hole vertices, the decagon for the triangle
tiling's lattice vertices).  Each potentially incident tile contributes
one coding window (the dual boundary's shadow pulled back to the vertex);
the subset of coding windows containing z *is* the star of tiles around
the vertex, and the arrangement cells of the coding windows are the
vertex configurations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exact import ZERO, QTau, Vec
from .geometry import CLOSED, EmptyIntersection, Polygon, convex_hull
from .lattices import hole_orbits, vadd, vneg, voronoi_cell, vsub
from .projection import d10_group, make_frame, orbit_table

F = Fraction


@dataclass
class CodingEntry:
    """One (oriented tile class, vertex corner) incidence."""

    key: tuple               # (orbit_index, corner_index)
    orbit_index: int
    corner_ambient: tuple    # ambient coordinates of the tile corner v
    window: Polygon          # dual window shifted to the vertex frame
    tile_rel: Polygon        # tile shadow relative to the vertex


@dataclass
class ConfigClass:
    index: int               # catalog-internal id; display numbering on top
    canonical_key: tuple
    area: QTau               # total region area inside this vertex window
    member_entries: tuple    # entry keys of one representative region
    shared_corner: tuple | None   # common corner of member windows, exact
    shared_corner_ambient: tuple | None
    star_size: int
    regions: list = field(default_factory=list)


@dataclass
class VertexCatalog:
    kind: str
    vertex_label: str
    window: Polygon          # centered vertex window
    entries: tuple
    classes: dict            # canonical_key -> ConfigClass
    signature_to_class: dict # frozenset(entry keys) -> canonical_key


def _entry_windows(name: str, kind: str, vertex_label: str):
    """Coding windows for one vertex class: every oriented tile class and
    every of its corners in that class contributes window - corner_perp."""
    frame = make_frame(name)
    entries = []
    for o in orbit_table(name, kind):
        labels = o.corner_labels if o.corner_labels else \
            tuple("q" for _ in o.corners_ambient)
        if o.sign < 0 and o.corner_labels:
            # inversion swaps the paired hole classes a<->d, b<->c
            swap = {"a": "d", "b": "c", "c": "b", "d": "a"}
            labels = tuple(swap[l] for l in labels)
        for ci, (v, lab) in enumerate(zip(o.corners_ambient, labels)):
            if lab != vertex_label:
                continue
            vp = frame.perp(v)
            vq = frame.par(v)
            win = o.window.translate(Vec([-vp[0], -vp[1]], o.window.frame))
            rel = o.tile.translate(Vec([-vq[0], -vq[1]], o.tile.frame))
            entries.append(CodingEntry((o.index, ci), o.index, tuple(v),
                                       win, rel))
    return entries


def _vertex_window(name: str, kind: str, vertex_label: str) -> Polygon:
    frame = make_frame(name)
    if kind == "tstar":
        cell = voronoi_cell(frame.lattice)
        pts = [Vec(frame.perp(v), frame.perp_tag) for v in cell.vertices]
        return convex_hull(pts, frame.perp_tag)
    orb = next(o for o in hole_orbits(frame.lattice)
               if o.label == vertex_label)
    pts = [Vec(frame.perp(vsub(v, orb.representative)), frame.perp_tag)
           for v in orb.delone_vertices]
    return convex_hull(pts, frame.perp_tag)


def _arrangement(window: Polygon, entries):
    """Split the vertex window into convex cells with constant coding
    signature.  Returns [(signature frozenset, [cells])]."""
    regions = [(frozenset(), window)]
    for e in entries:
        nxt = []
        for sig, poly in regions:
            inter = poly.intersect(e.window)
            if not isinstance(inter, Polygon):
                nxt.append((sig, poly))
                continue
            nxt.append((sig | {e.key}, inter))
            # outside parts: clip by each edge's complement half plane
            rest = poly
            for a, b in e.window.edges():
                piece = _clip_right(rest, a, b)
                if piece is not None:
                    nxt.append((sig, piece))
                rest = _clip_left(rest, a, b)
                if rest is None:
                    break
        regions = nxt
    merged = {}
    for sig, poly in regions:
        merged.setdefault(sig, []).append(poly)
    return merged


def _clip_right(poly, a, b):
    """Part of poly strictly right of directed line a->b (outside)."""
    from .geometry import _clip, _clean_ring_or_none
    pts = _clip(list(poly.vertices), b, a)   # swap to keep the right side
    ring = _clean_ring_or_none(pts)
    return Polygon(ring, poly.frame, _clean=False) if ring else None


def _clip_left(poly, a, b):
    from .geometry import _clip, _clean_ring_or_none
    pts = _clip(list(poly.vertices), a, b)
    ring = _clean_ring_or_none(pts)
    return Polygon(ring, poly.frame, _clean=False) if ring else None


def _canonical_star_key(entries_by_key, signature) -> tuple:
    """Exact congruence key of the tile star under the full point group."""
    group = d10_group()
    best = None
    polys = [entries_by_key[k].tile_rel for k in signature]
    for g in group.elements:
        imgs = []
        for p in polys:
            q = p.transform(g.par)
            imgs.append(tuple(sorted((v.x.p, v.x.q, v.x.d, v.y.p, v.y.q,
                                      v.y.d) for v in q.vertices)))
        key = tuple(sorted(imgs))
        if best is None or key < best:
            best = key
    return best


def _shared_corner(entries_by_key, signature, special_images):
    """Common vertex of all member windows, when it is a single point and
    the image of a dual-cell vertex (a lattice point seen from a hole, or
    a hole seen from a lattice point)."""
    if not signature:
        return None
    sets = []
    for k in signature:
        sets.append({(v.x, v.y) for v in entries_by_key[k].window.vertices})
    common = set.intersection(*sets)
    special = [c for c in common if c in special_images]
    if len(special) != 1:
        return None
    return special[0]


def corner_candidates(name, kind, vertex_label):
    """Dual-cell vertices adjacent to the vertex class, with their
    perpendicular images: adjacent lattice points for hole vertices,
    adjacent holes for lattice vertices."""
    frame = make_frame(name)
    if kind == "t":
        orb = next(o for o in hole_orbits(frame.lattice)
                   if o.label == vertex_label)
        cands = [vsub(v, orb.representative) for v in orb.delone_vertices]
    else:
        cell = voronoi_cell(frame.lattice)
        cands = list(cell.vertices)
    return {frame.perp(c): tuple(c) for c in cands}


@lru_cache(maxsize=None)
def build_catalog(name: str, kind: str, vertex_label: str) -> VertexCatalog:
    window = _vertex_window(name, kind, vertex_label)
    entries = _entry_windows(name, kind, vertex_label)
    by_key = {e.key: e for e in entries}
    merged = _arrangement(window, entries)
    specials = corner_candidates(name, kind, vertex_label)
    classes = {}
    sig_to_class = {}
    for sig, polys in merged.items():
        if not sig:
            # outside every coding window: no tile would touch the vertex,
            # which cannot happen for an accepted vertex; keep for area
            # bookkeeping only when it is an actual cell of the window
            continue
        area = ZERO
        for p in polys:
            area = area + p.area()
        key = _canonical_star_key(by_key, sig)
        if key not in classes:
            corner = _shared_corner(by_key, sig, specials)
            corner_amb = specials.get(corner) if corner is not None else None
            classes[key] = ConfigClass(len(classes), key, area, tuple(sig),
                                       corner, corner_amb,
                                       len(sig))
        else:
            classes[key].area = classes[key].area + area
        classes[key].regions.append((sig, polys))
        sig_to_class[sig] = key
    return VertexCatalog(kind, vertex_label, window, tuple(entries),
                         classes, sig_to_class)


def signature_of(catalog: VertexCatalog, zint) -> frozenset:
    sig = set()
    for e in catalog.entries:
        if e.window.contains_fast(zint):
            sig.add(e.key)
    return frozenset(sig)
