"""Frames, cut state and the dualization engine.

A split frame fixes exact linear maps from ambient lattice coordinates to
parallel (position) and perpendicular (window) coordinates, all with
golden-field entries; squared lengths stay in the field through diagonal
gram weights, so no square root is ever materialized.

The engine is one rule used twice: a tile is the parallel shadow of a
boundary, placed at every lattice translate whose perpendicular offset
falls in the window formed by the *dual* boundary's perpendicular shadow.
Taking Voronoi boundaries as windows yields the tiling coded by the
Voronoi cell; taking Delone boundaries as windows yields the dual tiling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import ONE, TAU, ZERO, QTau, Vec
from .geometry import (
    HALF_OPEN, CLOSED, EmptyIntersection, Interval, Polygon, SymOp,
    SymmetryGroup,
)
from .lattices import (
    DualBoundaryPair, LatticeSpec, UnsupportedLattice, dual_boundary_pairs,
    lattice, vneg,
)

TAU_INV = TAU - 1          # 1/tau
F = Fraction


class SingularCut(ValueError):
    """The perpendicular offset hits a window boundary and the half-open
    rule was not enabled."""


class RegionTooSmall(ValueError):
    def __init__(self, required: float):
        super().__init__(f"region must extend at least {required:.3f} "
                         f"past one tile in every direction")
        self.required_margin = required


@dataclass(frozen=True)
class SplitFrame:
    """Exact projection data for one lattice."""

    lattice: LatticeSpec
    par_rows: tuple          # par_dim rows of ambient QTau coefficients
    perp_rows: tuple
    gram_par: tuple          # diagonal weights; len == par_dim
    gram_perp: tuple
    galois_paired: bool      # perp coords = conjugated par coords

    @property
    def name(self) -> str:
        return self.lattice.name

    @property
    def par_dim(self) -> int:
        return len(self.par_rows)

    @property
    def par_tag(self) -> str:
        return f"{self.name}-par"

    @property
    def perp_tag(self) -> str:
        return f"{self.name}-perp"

    @property
    def embed_tag(self) -> str:
        return f"{self.name}-embed"

    def par(self, ambient) -> tuple:
        return tuple(_row_apply(r, ambient) for r in self.par_rows)

    def perp(self, ambient) -> tuple:
        return tuple(_row_apply(r, ambient) for r in self.perp_rows)

    def par_len2(self, coords) -> QTau:
        acc = ZERO
        for g, x in zip(self.gram_par, coords):
            acc = acc + g * x * x
        return acc

    def perp_len2(self, coords) -> QTau:
        acc = ZERO
        for g, x in zip(self.gram_perp, coords):
            acc = acc + g * x * x
        return acc

    def par_shadow(self, ambient_pts, scale: QTau = ONE):
        return self._shadow(ambient_pts, self.par, self.par_tag, scale)

    def perp_shadow(self, ambient_pts, scale: QTau = ONE):
        return self._shadow(ambient_pts, self.perp, self.perp_tag, scale)

    def _shadow(self, pts, proj, tag, scale):
        coords = [tuple(c * scale for c in proj(p)) for p in pts]
        if self.par_dim == 1:
            vals = [c[0] for c in coords]
            return Interval(min(vals), max(vals), tag)
        return Polygon([Vec(c, tag) for c in coords], tag)

    def basis_par(self):
        return [self.par(tuple(F(x) for x in b)) for b in self.lattice.basis]

    def basis_perp(self):
        return [self.perp(tuple(F(x) for x in b))
                for b in self.lattice.basis]


def _row_apply(row, ambient) -> QTau:
    acc = ZERO
    for coeff, x in zip(row, ambient):
        if x:
            acc = acc + coeff * QTau(x.numerator, 0, x.denominator)
    return acc


def _q(a, b=0, d=1):
    return QTau(a, b, d)


@lru_cache(maxsize=None)
def make_frame(name: str) -> SplitFrame:
    """The decomposition used by each lattice, with exact coefficients."""
    spec = lattice(name)
    if name == "square":
        par = ((TAU, ONE),)
        perp = ((ONE - TAU, ONE),)
        # unit direction (tau,1)/sqrt(tau+2): gram = 1/(tau+2) = (3-tau)/5
        return SplitFrame(spec, par, perp,
                          (_q(3, -1, 5),), (_q(2, 1, 5),), True)
    if name == "a2":
        u = (ONE, TAU - 1, -TAU)
        w = (_q(-1, 2), _q(-1, -1), _q(2, -1))   # u x (1,1,1)
        return SplitFrame(spec, (u,), (w,),
                          (_q(1, 0, 4),), (_q(1, 0, 12),), False)
    if name == "a4":
        cx = (_q(1), _q(-1, 1, 2), _q(0, -1, 2), _q(0, -1, 2), _q(-1, 1, 2))
        cy = (_q(0), _q(1), _q(-1, 1), _q(1, -1), _q(-1))
        px = tuple(c.conjugate() for c in cx)
        py = tuple(c.conjugate() for c in cy)
        return SplitFrame(spec, (cx, cy), (px, py),
                          (ONE, _q(2, 1, 4)), (ONE, _q(3, -1, 4)), True)
    if name in ("hyper6p", "hyper6f"):
        return _icosahedral_frame(spec)
    raise UnsupportedLattice(name)


def _icosahedral_frame(spec: LatticeSpec) -> SplitFrame:
    # six fivefold axes; perpendicular images are the Galois conjugates
    rows_par = (
        (_q(0), _q(1), _q(0, 1), _q(-1), _q(0), _q(0, 1)),
        (_q(1), _q(0, 1), _q(0), _q(0, 1), _q(-1), _q(0)),
        (_q(0, 1), _q(0), _q(1), _q(0), _q(0, 1), _q(-1)),
    )
    # listed column-wise below as the six axis vectors:
    # p0=(0,1,t) p1=(1,t,0) p2=(t,0,1) p3=(-1,t,0) p4=(0,-1,t) p5=(t,0,-1)
    rows_perp = tuple(tuple(c.conjugate() for c in row) for row in rows_par)
    g = _q(3, -1, 10)    # 1/(2(tau+2)) = (3-tau)/10
    gp = _q(2, 1, 10)
    return SplitFrame(spec, rows_par, rows_perp, (g, g, g), (gp, gp, gp),
                      True)


# -- tiling orbits ---------------------------------------------------------


@dataclass
class TileOrbit:
    """One oriented prototile class with its absolute window."""

    index: int
    pair_id: int
    sign: int                 # +1 base pair, -1 its inversion
    tag: str
    type_label: str           # thick/thin, acute/obtuse, L/S, A/B/C
    window: object            # Interval or Polygon in perp coordinates
    tile: object              # Interval or Polygon in par coordinates
    corners_par: tuple        # par coords of tile corners (tuples of QTau)
    corner_labels: tuple      # hole labels for rhombus corners, or ()
    corners_ambient: tuple


def _pair_geometry(pair: DualBoundaryPair, sign: int, which: str):
    if sign < 0:
        P = [vneg(v) for v in pair.voronoi_boundary]
        D = [vneg(v) for v in pair.delone_boundary]
    else:
        P = list(pair.voronoi_boundary)
        D = list(pair.delone_boundary)
    if which == "tstar":
        return D, P, ()           # tile ambient, window ambient, labels
    return P, D, pair.voronoi_corner_labels


@lru_cache(maxsize=None)
def orbit_table(name: str, which: str, scale_steps: int = 0):
    """All oriented prototile classes for a lattice and tiling kind,
    optionally rescaled by deflation steps."""
    frame = make_frame(name)
    spec = frame.lattice
    s_par = (TAU_INV ** scale_steps if scale_steps >= 0
             else TAU ** (-scale_steps))
    s_perp = ((-TAU) ** scale_steps if scale_steps >= 0
              else (ONE - TAU) ** (-scale_steps))
    orbits = []
    area_values = {}
    for pair in dual_boundary_pairs(spec):
        signs = (1,) if pair.inversion_symmetric else (1, -1)
        for sign in signs:
            tile_amb, win_amb, labels = _pair_geometry(pair, sign, which)
            tile = frame.par_shadow(tile_amb, s_par)
            window = frame.perp_shadow(win_amb, s_perp)
            corners = tuple(tuple(c * s_par for c in frame.par(p))
                            for p in tile_amb)
            size = (tile.area() if isinstance(tile, Polygon)
                    else tile.length())
            area_values.setdefault(size, []).append(len(orbits))
            orbits.append(TileOrbit(len(orbits), pair.orbit_id, sign,
                                    pair.tag + ("+" if sign > 0 else "-"),
                                    "", window, tile, corners, labels,
                                    tuple(tuple(p) for p in tile_amb)))
    _assign_type_labels(name, which, orbits)
    return tuple(orbits)


def _assign_type_labels(name, which, orbits):
    if name == "square":
        longest = max(o.tile.length() for o in orbits)
        for o in orbits:
            o.type_label = "L" if o.tile.length() == longest else "S"
        return
    if name == "a2":
        if which == "t":
            ranked = sorted({o.tile.length() for o in orbits}, reverse=True)
            by_len = dict(zip(ranked, "BAC"))     # longest, middle, shortest
            for o in orbits:
                o.type_label = by_len[o.tile.length()]
        else:
            for o in orbits:
                o.type_label = o.tag
        return
    # a4: two shapes distinguished by exact area
    areas = sorted({o.tile.area() for o in orbits})
    small, big = areas[0], areas[-1]
    for o in orbits:
        if which == "t":
            o.type_label = "thick" if o.tile.area() == big else "thin"
        else:
            o.type_label = "acute" if o.tile.area() == big else "obtuse"


# -- klotz cells -----------------------------------------------------------


@dataclass
class KlotzCell:
    orbit_id: int
    tag: str
    par_factor: object
    perp_factor: object

    def volume(self) -> QTau:
        a = (self.par_factor.area() if isinstance(self.par_factor, Polygon)
             else self.par_factor.length())
        b = (self.perp_factor.area() if isinstance(self.perp_factor, Polygon)
             else self.perp_factor.length())
        return a * b

    def embed_polygon(self, frame: SplitFrame) -> Polygon:
        """Product rectangle in (par, perp) coordinates; rank-2 lattices."""
        if not isinstance(self.par_factor, Interval):
            raise ValueError("embedding rectangle needs 1D factors")
        a, b = self.par_factor.lo, self.par_factor.hi
        c, d = self.perp_factor.lo, self.perp_factor.hi
        return Polygon([Vec((a, c)), Vec((b, c)), Vec((b, d)), Vec((a, d))],
                       frame.embed_tag)


def klotz_cells(frame: SplitFrame, which: str = "tstar",
                scale_steps: int = 0) -> list[KlotzCell]:
    """Product cells, one per dual-pair class: the perpendicular shadow of
    one boundary times the parallel shadow of its dual."""
    cells = []
    for o in orbit_table(frame.name, which, scale_steps):
        if o.sign < 0:
            continue
        cells.append(KlotzCell(o.pair_id, o.tag, o.tile, o.window))
    return cells


# -- cut state and patches -------------------------------------------------


@dataclass
class CutState:
    frame: SplitFrame
    c_perp: tuple              # QTau per perp coordinate
    halfopen: bool = True

    @classmethod
    def of(cls, name: str, c_perp, halfopen: bool = True) -> "CutState":
        frame = make_frame(name)
        vals = tuple(c if isinstance(c, QTau) else QTau.of(F(c))
                     for c in c_perp)
        if len(vals) != len(frame.perp_rows):
            raise ValueError("offset dimension mismatch")
        return cls(frame, vals, halfopen)


@dataclass
class PlacedTile:
    orbit: TileOrbit
    n: tuple                   # basis coefficients of the lattice translate
    q_par: tuple               # par coords of the translate

    _poly: object = None

    def geometry(self):
        """Tile shadow moved to its translate; Interval or Polygon."""
        if self._poly is None:
            t = self.orbit.tile
            if isinstance(t, Interval):
                self._poly = t.translate(self.q_par[0])
            else:
                self._poly = t.translate(Vec(self.q_par, t.frame))
        return self._poly

    def corners(self):
        return [tuple(c + q for c, q in zip(corner, self.q_par))
                for corner in self.orbit.corners_par]

    def key(self):
        return (self.orbit.index, self.n)


@dataclass
class Patch:
    frame: SplitFrame
    kind: str                  # "t" | "tstar"
    c_perp: tuple
    region: object             # Interval or Polygon in par coordinates
    halfopen: bool
    scale_steps: int
    tiles: list
    singular: bool = False
    census: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.tiles)

    def vertex_map(self):
        """par position -> list of (tile_idx, corner_idx)."""
        out = {}
        for ti, t in enumerate(self.tiles):
            for ci, corner in enumerate(t.corners()):
                out.setdefault(corner, []).append((ti, ci))
        return out

    def interior_region(self, margin: float):
        """Shrink the region by a float margin (conservative, for filters)."""
        if isinstance(self.region, Interval):
            lo, hi = float(self.region.lo), float(self.region.hi)
            return (lo + margin, hi - margin)
        xs = [float(v.x) for v in self.region.vertices]
        ys = [float(v.y) for v in self.region.vertices]
        return (min(xs) + margin, min(ys) + margin,
                max(xs) - margin, max(ys) - margin)

    def tiles_sorted_by_position(self):
        return sorted(range(len(self.tiles)),
                      key=lambda i: [float(c) for c in
                                     self.tiles[i].q_par])


def _zint(cx: QTau, cy: QTau):
    d = cx.d * cy.d
    return (cx.p * cy.d, cx.q * cy.d, cy.p * cx.d, cy.q * cx.d, d)


def _tile_diameter(orbits) -> float:
    best = 0.0
    for o in orbits:
        if isinstance(o.tile, Interval):
            best = max(best, float(o.tile.length()))
        else:
            xs = [float(v.x) for v in o.tile.vertices]
            ys = [float(v.y) for v in o.tile.vertices]
            best = max(best, max(xs) - min(xs), max(ys) - min(ys))
    return best


def generate_patch(cut: CutState, which: str, region,
                   scale_steps: int = 0) -> Patch:
    """Enumerate lattice translates over the region, filter by the exact
    window predicate, and return the placed tiles sorted canonically."""
    frame = cut.frame
    if frame.par_dim == 1:
        return _generate_1d(cut, which, region, scale_steps)
    return _generate_2d(cut, which, region, scale_steps)


def _candidate_grid(frame: SplitFrame, par_lo, par_hi, perp_lo, perp_hi):
    """Integer basis coefficients whose float projections can hit the
    target boxes.  Fourier-Motzkin elimination gives near-tight nested
    coefficient ranges; floats only prune, exact filters decide later."""
    bp = [[float(c) for c in row] for row in
          zip(*[frame.par(tuple(F(x) for x in b))
                for b in frame.lattice.basis])]
    bq = [[float(c) for c in row] for row in
          zip(*[frame.perp(tuple(F(x) for x in b))
                for b in frame.lattice.basis])]
    M = bp + bq                          # (par+perp) x rank, row-major
    rank = len(M[0])
    lows = [x - 1e-7 for x in list(par_lo) + list(perp_lo)]
    highs = [x + 1e-7 for x in list(par_hi) + list(perp_hi)]
    # inequalities  sum a_j n_j <= b
    ineqs = []
    for row, lo, hi in zip(M, lows, highs):
        ineqs.append((list(row), hi))
        ineqs.append(([-a for a in row], -lo))
    systems = [ineqs]
    for k in range(rank - 1, 0, -1):
        cur = systems[0]
        pos = [(r, b) for r, b in cur if r[k] > 1e-12]
        neg = [(r, b) for r, b in cur if r[k] < -1e-12]
        zero = [(r, b) for r, b in cur if abs(r[k]) <= 1e-12]
        new = list(zero)
        for rp, bp_ in pos:
            for rn, bn in neg:
                s, t = rp[k], -rn[k]
                row = [t * a + s * c for a, c in zip(rp, rn)]
                new.append((row, t * bp_ + s * bn))
        systems.insert(0, new)

    out = []

    def bounds(system, k, fixed):
        lo, hi = -1e18, 1e18
        for row, b in system:
            coeff = row[k]
            rest = sum(row[j] * fixed[j] for j in range(k))
            if coeff > 1e-12:
                hi = min(hi, (b - rest) / coeff)
            elif coeff < -1e-12:
                lo = max(lo, (b - rest) / coeff)
            elif rest > b + 1e-6:
                return 1, 0
        return lo, hi

    def rec(k, fixed):
        lo, hi = bounds(systems[k], k, fixed)
        if lo > hi:
            return
        for nk in range(int(np.floor(lo - 1e-9)), int(np.ceil(hi + 1e-9)) + 1):
            nxt = fixed + (nk,)
            if k == rank - 1:
                out.append(nxt)
            else:
                rec(k + 1, nxt)

    rec(0, ())
    return out


@lru_cache(maxsize=None)
def _basis_images(name: str):
    frame = make_frame(name)
    return tuple(frame.basis_par()), tuple(frame.basis_perp())


def _exact_translate(frame: SplitFrame, n):
    bpar, bperp = _basis_images(frame.name)
    par = [ZERO] * frame.par_dim
    perp = [ZERO] * frame.par_dim
    for coef, bp, bq in zip(n, bpar, bperp):
        if coef:
            for k in range(frame.par_dim):
                par[k] = par[k] + bp[k] * coef
                perp[k] = perp[k] + bq[k] * coef
    return tuple(par), tuple(perp)


def _generate_2d(cut: CutState, which, region: Polygon, scale_steps):
    frame = cut.frame
    orbits = orbit_table(frame.name, which, scale_steps)
    diam = _tile_diameter(orbits) + 0.01
    xs = [float(v.x) for v in region.vertices]
    ys = [float(v.y) for v in region.vertices]
    par_lo = (min(xs) - diam, min(ys) - diam)
    par_hi = (max(xs) + diam, max(ys) + diam)
    wlo = [0.0, 0.0]
    whi = [0.0, 0.0]
    for o in orbits:
        x0, y0, x1, y1 = [float(b) for b in o.window.bbox()]
        wlo = [min(wlo[0], x0), min(wlo[1], y0)]
        whi = [max(whi[0], x1), max(whi[1], y1)]
    c = [float(x) for x in cut.c_perp]
    # c - q_perp in window  ->  q_perp in c - window
    perp_lo = (c[0] - whi[0], c[1] - whi[1])
    perp_hi = (c[0] - wlo[0], c[1] - wlo[1])
    # float window prefilter forms
    wboxes = [tuple(float(b) for b in o.window.bbox()) for o in orbits]

    region_bbox = region.bbox()
    orbit_bbox = []
    for o in orbits:
        bb = o.tile.bbox()
        orbit_bbox.append(bb)

    tiles = []
    singular = False
    for n in _candidate_grid(frame, par_lo, par_hi, perp_lo, perp_hi):
        q_par, q_perp = _exact_translate(frame, n)
        zx = cut.c_perp[0] - q_perp[0]
        zy = cut.c_perp[1] - q_perp[1]
        fzx, fzy = float(zx), float(zy)
        zint = None
        for o, (wx0, wy0, wx1, wy1), (tx0, ty0, tx1, ty1) in zip(
                orbits, wboxes, orbit_bbox):
            if not (wx0 - 1e-7 <= fzx <= wx1 + 1e-7
                    and wy0 - 1e-7 <= fzy <= wy1 + 1e-7):
                continue
            if zint is None:
                zint = _zint(zx, zy)
            hit, touched = _window_test(o.window, zint)
            singular = singular or touched
            if not hit:
                continue
            # keep tiles whose bbox can intersect the region
            if (tx1 + q_par[0] < region_bbox[0]
                    or tx0 + q_par[0] > region_bbox[2]
                    or ty1 + q_par[1] < region_bbox[1]
                    or ty0 + q_par[1] > region_bbox[3]):
                continue
            tiles.append(PlacedTile(o, n, q_par))
    if singular and not cut.halfopen:
        raise SingularCut("cut offset lies on a window boundary")
    tiles.sort(key=lambda t: (t.orbit.index, t.n))
    census = {}
    for t in tiles:
        census[t.orbit.type_label] = census.get(t.orbit.type_label, 0) + 1
    return Patch(frame, which, cut.c_perp, region, cut.halfopen,
                 scale_steps, tiles, singular, census)


_OPEN_RULE = "open-fast"   # compiled() marks every edge open for this key


def _window_test(window, zint):
    """Exact membership plus a flag when z sits on the boundary."""
    if window.contains_fast(zint, HALF_OPEN):
        on_boundary = not window.contains_fast(zint, _OPEN_RULE)
        return True, on_boundary
    if window.contains_fast(zint, CLOSED):
        return False, True
    return False, False


def _generate_1d(cut: CutState, which, region: Interval, scale_steps):
    frame = cut.frame
    orbits = orbit_table(frame.name, which, scale_steps)
    diam = _tile_diameter(orbits) + 0.01
    par_lo = (float(region.lo) - diam,)
    par_hi = (float(region.hi) + diam,)
    wlo = min(float(o.window.lo) for o in orbits)
    whi = max(float(o.window.hi) for o in orbits)
    c = float(cut.c_perp[0])
    perp_lo, perp_hi = (c - whi,), (c - wlo,)
    tiles = []
    singular = False
    for n in _candidate_grid(frame, par_lo, par_hi, perp_lo, perp_hi):
        q_par, q_perp = _exact_translate(frame, n)
        z = cut.c_perp[0] - q_perp[0]
        for o in orbits:
            if o.window.contains(z):
                if z == o.window.lo:
                    singular = True
                if (q_par[0] + o.tile.hi < region.lo
                        or q_par[0] + o.tile.lo > region.hi):
                    continue
                tiles.append(PlacedTile(o, n, q_par))
            elif z == o.window.hi:
                singular = True
    if singular and not cut.halfopen:
        raise SingularCut("cut offset lies on a window boundary")
    tiles.sort(key=lambda t: (t.orbit.index, t.n))
    census = {}
    for t in tiles:
        census[t.orbit.type_label] = census.get(t.orbit.type_label, 0) + 1
    return Patch(frame, which, cut.c_perp, region, cut.halfopen,
                 scale_steps, tiles, singular, census)


def deflate(patch: Patch, steps: int) -> Patch:
    """Rescaled tiling on the same cut and region: one deflation step
    shrinks tiles by 1/tau (the boundary data transform by the lattice
    automorphism with eigenvalues tau, 1-tau)."""
    new_steps = patch.scale_steps + steps
    if steps < 0:
        orbits = orbit_table(patch.frame.name, patch.kind, new_steps)
        diam = _tile_diameter(orbits)
        if isinstance(patch.region, Interval):
            size = float(patch.region.length())
        else:
            x0, y0, x1, y1 = [float(b) for b in patch.region.bbox()]
            size = min(x1 - x0, y1 - y0)
        if size < 2 * diam:
            raise RegionTooSmall(2 * diam - size)
    cut = CutState(patch.frame, patch.c_perp, patch.halfopen)
    return generate_patch(cut, patch.kind, patch.region, new_steps)


# -- symmetry groups in the split frames ------------------------------------


def _frame_matrix_group(name: str):
    """Point symmetries as paired exact 2x2 matrices in the split frames."""
    frame = make_frame(name)
    if name != "a4":
        raise UnsupportedLattice("matrix group built for a4 frames only")
    basis = [tuple(F(x) for x in b) for b in frame.lattice.basis]

    def mat_for(perm_sign):
        # perm_sign: ambient index map i -> (j, s) realized on e_i
        def img(v):
            out = [F(0)] * 5
            for i, x in enumerate(v):
                j, s = perm_sign(i)
                out[j] += s * x
            return tuple(out)
        cols_par = [frame.par(img(b)) for b in basis[:2]]
        cols_perp = [frame.perp(img(b)) for b in basis[:2]]
        # solve 2x2 change of basis: columns of original projections
        base_par = [frame.par(b) for b in basis[:2]]
        base_perp = [frame.perp(b) for b in basis[:2]]
        return (_solve_2x2(base_par, cols_par),
                _solve_2x2(base_perp, cols_perp))

    rot = mat_for(lambda i: ((i + 1) % 5, 1))          # e_i -> e_{i+1}
    mir = mat_for(lambda i: ((-i) % 5, 1))             # e_i -> e_{-i}
    inv = mat_for(lambda i: (i, -1))                   # x -> -x
    ops = [SymOp("r5", rot[0], rot[1]), SymOp("m", mir[0], mir[1]),
           SymOp("i", inv[0], inv[1])]
    return SymmetryGroup("D10", ops)


def _solve_2x2(base_cols, image_cols):
    """M with M @ base = image, all 2-vectors of QTau."""
    (a, c), (b, d) = base_cols          # base matrix columns
    det = a * d - b * c
    inv = ((d / det, (b * (-1)) / det), ((c * (-1)) / det, a / det))
    # M = image @ inv
    (p, r), (q, s) = image_cols
    return ((p * inv[0][0] + q * inv[1][0], p * inv[0][1] + q * inv[1][1]),
            (r * inv[0][0] + s * inv[1][0], r * inv[0][1] + s * inv[1][1]))


@lru_cache(maxsize=None)
def d10_group() -> SymmetryGroup:
    g = _frame_matrix_group("a4")
    if len(g) != 20:
        raise RuntimeError(f"D10 closure produced {len(g)} elements")
    return g


@lru_cache(maxsize=None)
def c5_group() -> SymmetryGroup:
    full = d10_group()
    rot = next(op for op in full.elements if op.name == "r5")
    return SymmetryGroup("C5", [rot])
