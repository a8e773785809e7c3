"""Triangle tiling analysis: vertex configurations in the decagon window,
pentagonal covering clusters with their center windows, and the
window-coincidence certificate for the covering.

Tiles are golden triangles anchored at lattice translates; vertices are
projected lattice points coded inside the decagon by rhombus-shaped
windows.  Projected Delone cells are regular pentagons of two sizes
(edge ratio the golden ratio) centered at projected holes; the ones whose
triangles are all present in the tiling are the covering clusters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .coding import build_catalog, corner_candidates, signature_of
from .exact import ONE, TAU, ZERO, QTau, Vec
from .geometry import EmptyIntersection, Polygon, convex_hull
from .lattices import hole_orbits, vadd, voronoi_cell, vsub
from .penrose import _ambient_of, _hole_class, _hole_labels
from .projection import Patch, d10_group, make_frame, orbit_table

F = Fraction

CATALOG = ("a4", "tstar", "q")


@dataclass
class TriangleVertexConfig:
    index: int                 # 1..9
    canonical_key: tuple
    area: QTau
    star_size: int
    cluster_kind: str          # "", "a" (small) or "b" (large)


@dataclass
class PentagonCluster:
    kind: str                  # "a" | "b"
    center: tuple              # parallel coordinates of the hole
    hole_ambient: tuple
    polygon: Polygon
    chirality: int             # +1 | -1 for kind b, 0 for kind a
    tile_indices: tuple        # indices into patch.tiles
    composition: dict


@dataclass
class ClusterWindow:
    kind: str
    chirality: int
    region: Polygon            # exact window for c - hole_perp
    member_windows: tuple      # the rhombus windows whose meet it is


@lru_cache(maxsize=None)
def _catalog():
    return build_catalog(*CATALOG)


@dataclass(frozen=True)
class _Member:
    orbit_index: int
    anchor: tuple              # ambient anchor relative to the reference


@lru_cache(maxsize=None)
def _pentagon_data():
    """Per adjacent hole (30 of them): the projected pentagon and every
    tile placement lying inside it, enumerated geometrically."""
    frame = make_frame("a4")
    labels = _hole_labels()
    orbit_by_label = {o.label: o for o in hole_orbits(frame.lattice)}
    orbits = orbit_table("a4", "tstar")
    specials = corner_candidates(*CATALOG)     # perp image -> ambient hole
    # candidate anchors: lattice vectors with small basis coefficients
    from itertools import product as iproduct
    anchors = []
    for n in iproduct(range(-3, 4), repeat=4):
        amb = [0] * 5
        for coef, b in zip(n, frame.lattice.basis):
            for k in range(5):
                amb[k] += coef * b[k]
        anchors.append((n, tuple(F(x) for x in amb)))
    data = []
    for w_img, amb in specials.items():
        lab = labels[_hole_class(amb)]
        orb = orbit_by_label[lab]
        rel = [vsub(v, orb.representative) for v in orb.delone_vertices]
        pent = convex_hull(
            [Vec(frame.par(vadd(r, amb)), frame.par_tag) for r in rel],
            frame.par_tag)
        px0, py0, px1, py1 = [float(b) for b in pent.bbox()]
        members = []
        for o in orbits:
            tx0, ty0, tx1, ty1 = [float(b) for b in o.tile.bbox()]
            for n, a_amb in anchors:
                apar = frame.par(a_amb)
                fx, fy = float(apar[0]), float(apar[1])
                if (fx + tx0 < px0 - 0.01 or fx + tx1 > px1 + 0.01
                        or fy + ty0 < py0 - 0.01 or fy + ty1 > py1 + 0.01):
                    continue
                placed = o.tile.translate(Vec(apar, o.tile.frame))
                if pent.contains_polygon(placed):
                    members.append((_Member(o.index, a_amb), placed))
        data.append({
            "hole": amb,
            "depth": orb.depth,
            "kind": "a" if orb.depth == "shallow" else "b",
            "pentagon": pent,
            "members": members,
            "w_img": w_img,
        })
    return tuple(data)


def _fillings(members, pentagon):
    """Member subsets that tile the pentagon exactly: pairwise disjoint
    with total area equal to the pentagon's."""
    import itertools
    n = len(members)
    target = pentagon.area()
    # pairwise compatibility once, then bitmask checks per combination
    compat = [[True] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            inter = members[i][1].intersect(members[j][1])
            ok = not isinstance(inter, Polygon)
            compat[i][j] = compat[j][i] = ok
    out = []
    for r in (3, 7):
        if r > n:
            continue
        for combo in itertools.combinations(range(n), r):
            total = ZERO
            for i in combo:
                total = total + members[i][1].area()
            if total != target:
                continue
            if all(compat[i][j] for i, j in
                   itertools.combinations(combo, 2)):
                out.append(frozenset(members[i][0] for i in combo))
    return out


@lru_cache(maxsize=None)
def _filling_table():
    """For each adjacent hole: the exact fillings of its pentagon with
    their center windows (meet of the member windows pulled back to the
    hole)."""
    frame = make_frame("a4")
    orbits = orbit_table("a4", "tstar")
    table = []
    for rec in _pentagon_data():
        fillings = _fillings(rec["members"], rec["pentagon"])
        expect = 1 if rec["kind"] == "a" else 2
        if len(fillings) != expect:
            raise RuntimeError(
                f"{rec['kind']}-pentagon admits {len(fillings)} fillings")
        wins = []
        for fill in fillings:
            region = None
            mem = []
            for m in fill:
                # tile at q + anchor accepted iff
                # (c - hole_perp) + (hole - anchor)_perp in its window
                shift = frame.perp(vsub(rec["hole"], m.anchor))
                w = orbits[m.orbit_index].window.translate(
                    Vec((-shift[0], -shift[1]),
                        orbits[m.orbit_index].window.frame))
                mem.append(w)
                region = w if region is None else region.intersect(w)
                if not isinstance(region, Polygon):
                    raise RuntimeError("empty cluster window")
            wins.append((fill, region, tuple(mem)))
        table.append({**rec, "fillings": wins})
    return tuple(table)


def config_table9() -> dict:
    """Display numbering 1..9 of the vertex configurations.

    Index 2 is the configuration whose coding windows all share a single
    deep-hole image (it marks the large clusters); 4..7 are the four
    configurations inside the small-cluster window, ordered by descending
    area; the rest fill 1, 3, 8, 9 by descending area."""
    cat = _catalog()
    by_key = {e.key: e for e in cat.entries}
    specials = corner_candidates(*CATALOG)
    orbits = orbit_table("a4", "tstar")
    # small fillings expressed as coding-entry keys where every member
    # touches the vertex (the apex view of the small pentagon)
    small_sets = []
    for rec in _filling_table():
        if rec["kind"] != "a":
            continue
        for fill, _region, _mem in rec["fillings"]:
            keys = set()
            for m in fill:
                neg = tuple(-x for x in m.anchor)
                ci = next((i for i, c in
                           enumerate(orbits[m.orbit_index].corners_ambient)
                           if c == neg), None)
                if ci is None:
                    keys = None
                    break
                keys.add((m.orbit_index, ci))
            if keys:
                small_sets.append(frozenset(keys))

    def shares_deep_corner(cls):
        sets = None
        for k in cls.member_entries:
            vs = {(v.x, v.y) for v in by_key[k].window.vertices}
            sets = vs if sets is None else sets & vs
        hits = [specials[c] for c in sets if c in specials] if sets else []
        return any(_hole_class(amb) in (2, 3) for amb in hits)

    def hosts_small_cluster(cls):
        for sig, _polys in cls.regions:
            if any(fill <= sig for fill in small_sets):
                return True
        return False

    configs = {}
    large = [c for c in cat.classes.values() if shares_deep_corner(c)]
    if len(large) != 1:
        raise RuntimeError("large-cluster configuration not unique")
    small = [c for c in cat.classes.values()
             if hosts_small_cluster(c) and c not in large]
    if len(small) != 4:
        raise RuntimeError(f"expected 4 small-cluster classes, "
                           f"got {len(small)}")
    rest = [c for c in cat.classes.values()
            if c not in large and c not in small]
    by_area = lambda cs: sorted(cs, key=lambda c: (-float(c.area),
                                                   c.canonical_key))
    assignment = {}
    assignment[large[0].canonical_key] = (2, "b")
    for idx, c in zip((4, 5, 6, 7), by_area(small)):
        assignment[c.canonical_key] = (idx, "a")
    for idx, c in zip((1, 3, 8, 9), by_area(rest)):
        assignment[c.canonical_key] = (idx, "")
    out = {}
    for key, cls in cat.classes.items():
        idx, kind = assignment[key]
        out[key] = TriangleVertexConfig(idx, key, cls.area, cls.star_size,
                                        kind)
    return out


@dataclass
class ClassifiedTriangleVertex:
    position: tuple
    lattice_ambient: tuple
    config: TriangleVertexConfig
    signature: frozenset


def triangle_vertex_classify(patch: Patch, margin: float = 3.2):
    """Window classification of interior lattice vertices, cross-checked
    against the star of triangles present in the patch."""
    if patch.kind != "tstar" or patch.frame.name != "a4":
        raise ValueError("expects the triangle tiling")
    frame = patch.frame
    cat = _catalog()
    configs = config_table9()
    x0, y0, x1, y1 = patch.interior_region(margin)

    verts = {}
    for ti, tile in enumerate(patch.tiles):
        amb_t = _ambient_of(frame, tile.n)
        for ci, corner in enumerate(tile.orbit.corners_ambient):
            q = vadd(amb_t, corner)
            pos = tile.corners()[ci]
            verts.setdefault(q, [pos, []])[1].append((ti, ci))

    out = []
    skipped = 0
    for q, (pos, incident) in verts.items():
        fx, fy = float(pos[0]), float(pos[1])
        if not (x0 <= fx <= x1 and y0 <= fy <= y1):
            skipped += 1
            continue
        zx = patch.c_perp[0] - frame.perp(q)[0]
        zy = patch.c_perp[1] - frame.perp(q)[1]
        d = zx.d * zy.d
        zint = (zx.p * zy.d, zx.q * zy.d, zy.p * zx.d, zy.q * zx.d, d)
        sig = signature_of(cat, zint)
        key = cat.signature_to_class.get(sig)
        if key is None:
            raise AssertionError("vertex offset outside every catalog cell")
        star = {(patch.tiles[ti].orbit.index, ci) for ti, ci in incident}
        if star != set(sig):
            raise AssertionError("window coding disagrees with the star")
        out.append(ClassifiedTriangleVertex(pos, q, configs[key], sig))
    return out, skipped


def _coeffs_of(amb):
    """Basis coefficients of an ambient lattice vector (partial sums)."""
    acc = 0
    out = []
    for k in range(4):
        acc += amb[k]
        out.append(int(acc))
    return tuple(out)


def detect_pentagon_clusters(patch: Patch, margin: float = 3.2):
    """Pentagonal clusters at holes whose member triangles are all
    present: small ones hold 1 acute + 2 obtuse, large ones 4 + 3 in one
    of two mirror fillings."""
    frame = patch.frame
    table = _filling_table()
    tile_index = {(t.orbit.index, t.n): ti
                  for ti, t in enumerate(patch.tiles)}
    x0, y0, x1, y1 = patch.interior_region(margin)
    seen = set()
    clusters = []
    for tile in patch.tiles:
        q_amb = _ambient_of(frame, tile.n)
        for rec in table:
            hole = vadd(q_amb, rec["hole"])
            if hole in seen:
                continue
            hpar = frame.par(hole)
            fx, fy = float(hpar[0]), float(hpar[1])
            if not (x0 <= fx <= x1 and y0 <= fy <= y1):
                continue
            seen.add(hole)
            for chir, (fill, _region, _mem) in enumerate(rec["fillings"]):
                members = []
                for m in fill:
                    anchor = vadd(q_amb, m.anchor)
                    idx = tile_index.get((m.orbit_index,
                                          _coeffs_of(anchor)))
                    if idx is None:
                        members = None
                        break
                    members.append(idx)
                if members is None:
                    continue
                comp = {}
                for mi in members:
                    lab = patch.tiles[mi].orbit.type_label
                    comp[lab] = comp.get(lab, 0) + 1
                clusters.append(PentagonCluster(
                    rec["kind"], hpar, hole, _pentagon_at(frame, hole),
                    (1 if chir == 0 else -1) if rec["kind"] == "b" else 0,
                    tuple(sorted(members)), comp))
                break
    clusters.sort(key=lambda c: (float(c.center[0]), float(c.center[1])))
    return clusters


def _pentagon_at(frame, hole):
    labels = _hole_labels()
    orb = next(o for o in hole_orbits(frame.lattice)
               if o.label == labels[_hole_class(hole)])
    rel = [vsub(v, orb.representative) for v in orb.delone_vertices]
    return convex_hull(
        [Vec(frame.par(vadd(r, hole)), frame.par_tag) for r in rel],
        frame.par_tag)


def cluster_windows():
    """Exact center windows: w(D^a) is the meet of the small cluster's
    three member windows; w(D^b) comes in two mirror halves, each the
    meet of a chiral filling's seven windows (five already suffice, the
    remaining two are forced)."""
    out = []
    for rec in _filling_table():
        for chir, (fill, region, mem) in enumerate(rec["fillings"]):
            out.append(ClusterWindow(
                rec["kind"],
                (1 if chir == 0 else -1) if rec["kind"] == "b" else 0,
                region, mem))
    # one representative per (kind, chirality), smallest tag first
    rep = {}
    for w in out:
        rep.setdefault((w.kind, w.chirality), w)
    a = rep[("a", 0)]
    b_plus = rep[("b", 1)]
    b_minus = rep[("b", -1)]
    return a, b_plus, b_minus


def window_accepts(patch: Patch, window: ClusterWindow, hole) -> bool:
    frame = patch.frame
    zx = patch.c_perp[0] - frame.perp(hole)[0]
    zy = patch.c_perp[1] - frame.perp(hole)[1]
    d = zx.d * zy.d
    zint = (zx.p * zy.d, zx.q * zy.d, zy.p * zx.d, zy.q * zx.d, d)
    return window.region.contains_fast(zint)


def covering_proof_check():
    """Window-coincidence certificate: each tile type's window, in each
    of its three corner shifts, must coincide modulo the point group with
    a member window of the small or large cluster collections."""
    cat = _catalog()
    group = d10_group()
    a, b_plus, b_minus = cluster_windows()
    collection = list(a.member_windows) + list(b_plus.member_windows) \
        + list(b_minus.member_windows)
    coll_keys = [frozenset(p.key()) for p in collection]
    orbits = orbit_table("a4", "tstar")
    rep = {}
    for o in orbits:
        rep.setdefault(o.type_label, o)
    matrix = {}
    for label, orbit in rep.items():
        entries = [e for e in cat.entries if e.orbit_index == orbit.index]
        if len(entries) != 3:
            raise RuntimeError("tile window must appear in 3 shifts")
        for shift_no, e in enumerate(entries):
            matched = False
            for g in group.elements:
                img = e.window.transform(g.perp)
                if frozenset(img.key()) in coll_keys:
                    matched = True
                    break
            matrix[(label, shift_no)] = matched
    return {
        "matrix": matrix,
        "all_matched": all(matrix.values()),
        "collection_size": len(collection),
    }


def coverage_report(patch: Patch, clusters, margin: float = 4.5):
    """Every interior triangle must lie inside at least one cluster."""
    x0, y0, x1, y1 = patch.interior_region(margin)
    buckets = {}
    for ci, c in enumerate(clusters):
        bx, by = int(float(c.center[0]) // 2), int(float(c.center[1]) // 2)
        buckets.setdefault((bx, by), []).append(ci)
    interior = 0
    uncovered = []
    covered_members = set()
    for c in clusters:
        covered_members.update(c.tile_indices)
    for ti, tile in enumerate(patch.tiles):
        fx, fy = float(tile.q_par[0]), float(tile.q_par[1])
        if not (x0 <= fx <= x1 and y0 <= fy <= y1):
            continue
        interior += 1
        if ti in covered_members:
            continue
        poly = tile.geometry()
        hit = False
        for bx in range(int((fx - 3) // 2), int((fx + 3) // 2) + 1):
            for by in range(int((fy - 3) // 2), int((fy + 3) // 2) + 1):
                for ci in buckets.get((bx, by), ()):
                    if clusters[ci].polygon.contains_polygon(poly):
                        hit = True
                        break
                if hit:
                    break
            if hit:
                break
        if not hit:
            uncovered.append(ti)
    return {
        "interior_tiles": interior,
        "uncovered": len(uncovered),
        "coverage": 1.0 if interior == 0 else 1 - len(uncovered) / interior,
    }


def fundamental_domain_selection(patch: Patch, clusters):
    """Four clusters (small, large and their mirrors) whose member tiles
    realize each of the twenty oriented prototile classes exactly once."""
    small = [c for c in clusters if c.kind == "a"]
    large_p = [c for c in clusters if c.kind == "b" and c.chirality > 0]
    large_m = [c for c in clusters if c.kind == "b" and c.chirality < 0]

    def ids(c):
        return frozenset(patch.tiles[ti].orbit.index
                         for ti in c.tile_indices)

    import itertools
    for lp in large_p[:40]:
        idp = ids(lp)
        if len(idp) != 7:
            continue
        for lm in large_m[:40]:
            idm = ids(lm)
            if len(idm) != 7 or idp & idm:
                continue
            rest = set(range(20)) - idp - idm
            smalls = [c for c in small[:160] if ids(c) <= rest]
            for s1, s2 in itertools.combinations(smalls, 2):
                if ids(s1) | ids(s2) == rest and not (ids(s1) & ids(s2)):
                    return s1, s2, lp, lm
    return None
