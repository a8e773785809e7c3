"""Lattice catalog: Voronoi cells, hole orbits and dual boundary pairs.

Everything here lives in ambient integer/rational coordinates (tuples of
Fraction); the projection module turns it into exact golden-field frame
coordinates.  Cells are written down from the standard hole structure of
each lattice and then *verified* by the nearest-point predicate, which is
cheaper and more trustworthy than running a general Voronoi algorithm in
four or six dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .exact import QTau

F = Fraction


class UnsupportedLattice(ValueError):
    pass


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(u, s):
    return tuple(a * s for a in u)


def vdot(u, v):
    return sum(a * b for a, b in zip(u, v))


def norm2(u):
    return vdot(u, u)


def basis_vec(n, i, val=1):
    v = [0] * n
    v[i] = val
    return tuple(F(x) for x in v)


@dataclass(frozen=True)
class LatticeSpec:
    name: str
    ambient_dim: int
    basis: tuple            # generator rows, integer tuples
    edge_scale: QTau = field(default_factory=lambda: QTau(1))
    hole_denom: int = 2

    @property
    def rank(self) -> int:
        return len(self.basis)

    def points_in_coeff_box(self, radius: int):
        """All lattice vectors with basis coefficients in [-radius, radius]."""
        rng = range(-radius, radius + 1)
        for coeffs in product(rng, repeat=self.rank):
            v = tuple(F(0) for _ in range(self.ambient_dim))
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = vadd(v, vscale(tuple(F(x) for x in b), c))
            yield coeffs, v


@dataclass
class HoleOrbit:
    label: str
    representative: tuple
    depth: str                    # shallow | deep | unique
    delone_vertices: list         # ambient vertices of the cell at the rep
    rsquared: Fraction
    inversion_partner: str = ""


@dataclass
class DualBoundaryPair:
    """One translation class of intersecting (Voronoi, Delone) boundaries.

    Classes are listed modulo lattice inversion; `inversion_symmetric`
    says whether -P lands back in the same translation class.  The tiling
    engine expands the sign when it is not.
    """

    orbit_id: int
    voronoi_boundary: list        # P vertices, cyclic when 2D
    delone_boundary: list         # P* vertices
    intersection_point: tuple
    inversion_symmetric: bool
    voronoi_corner_labels: tuple = ()
    tag: str = ""


# -- the named lattices ---------------------------------------------------


def square_lattice(scale: QTau | int = 1) -> LatticeSpec:
    s = scale if isinstance(scale, QTau) else QTau(scale)
    return LatticeSpec("square", 2, ((1, 0), (0, 1)), s, 2)


def a2_lattice() -> LatticeSpec:
    return LatticeSpec("a2", 3, ((1, -1, 0), (0, 1, -1)), QTau(1), 3)


def a4_lattice() -> LatticeSpec:
    return LatticeSpec("a4", 5, ((1, -1, 0, 0, 0), (0, 1, -1, 0, 0),
                                 (0, 0, 1, -1, 0), (0, 0, 0, 1, -1)),
                       QTau(1), 5)


def hyper6p_lattice() -> LatticeSpec:
    return LatticeSpec("hyper6p", 6,
                       tuple(tuple(1 if j == i else 0 for j in range(6))
                             for i in range(6)), QTau(1), 2)


def hyper6f_lattice() -> LatticeSpec:
    # D6: integer vectors with even coordinate sum
    rows = [tuple(1 if j == i else (-1 if j == i + 1 else 0)
                  for j in range(6)) for i in range(5)]
    rows.append(tuple(1 if j >= 4 else 0 for j in range(6)))
    return LatticeSpec("hyper6f", 6, tuple(rows), QTau(1), 2)


_BY_NAME = {
    "square": square_lattice,
    "a2": a2_lattice,
    "a4": a4_lattice,
    "hyper6p": hyper6p_lattice,
    "hyper6f": hyper6f_lattice,
}


def lattice(name: str, **kw) -> LatticeSpec:
    try:
        return _BY_NAME[name](**kw)
    except KeyError:
        raise UnsupportedLattice(name) from None


def in_lattice(spec: LatticeSpec, v) -> bool:
    if any(x.denominator != 1 for x in v):
        return False
    if spec.name in ("a2", "a4"):
        return sum(v) == 0
    if spec.name == "hyper6f":
        return sum(v) % 2 == 0
    return True


# -- hole orbits -----------------------------------------------------------


def _ones(n):
    return tuple(F(1) for _ in range(n))


def hole_orbits(spec: LatticeSpec) -> list[HoleOrbit]:
    if spec.name == "square":
        rep = (F(1, 2), F(1, 2))
        cell = [(F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))]
        return [HoleOrbit("a", rep, "unique", cell, F(1, 2), "a")]

    if spec.name == "a2":
        orbits = []
        for a, label, partner in ((1, "a", "b"), (2, "b", "a")):
            T = tuple(range(a))
            rep = vsub(vscale(_ones(3), F(a, 3)),
                       tuple(F(1) if i in T else F(0) for i in range(3)))
            cell = [vadd(rep, vsub(tuple(F(1) if i in S else F(0)
                                         for i in range(3)),
                                   vscale(_ones(3), F(a, 3))))
                    for S in combinations(range(3), a)]
            orbits.append(HoleOrbit(label, rep, "deep", cell, F(2, 3),
                                    partner))
        return orbits

    if spec.name == "a4":
        labels = {1: ("a", "d"), 2: ("b", "c"), 3: ("c", "b"),
                  4: ("d", "a")}
        orbits = []
        for a in (1, 2, 3, 4):
            T = tuple(range(a))
            eT = tuple(F(1) if i in T else F(0) for i in range(5))
            rep = vsub(vscale(_ones(5), F(a, 5)), eT)
            cell = [vsub(tuple(F(1) if i in S else F(0) for i in range(5)),
                         eT)
                    for S in combinations(range(5), a)]
            depth = "shallow" if a in (1, 4) else "deep"
            lab, partner = labels[a]
            orbits.append(HoleOrbit(lab, rep, depth, cell, F(a * (5 - a), 5),
                                    partner))
        return orbits

    if spec.name == "hyper6p":
        rep = tuple(F(1, 2) for _ in range(6))
        cell = [tuple(F(b) for b in bits) for bits in product((0, 1),
                                                              repeat=6)]
        return [HoleOrbit("a", rep, "unique", cell, F(3, 2), "a")]

    if spec.name == "hyper6f":
        # octahedron holes at odd-sum integer points, half-cube holes at
        # (1/2)^6 points of both glue parities
        e5 = basis_vec(6, 5)
        beta_cell = ([vadd(e5, basis_vec(6, i, s))
                      for i in range(5) for s in (1, -1)]
                     + [tuple(F(0) for _ in range(6)), vscale(e5, 2)])
        half = tuple(F(1, 2) for _ in range(6))
        even_cell = [tuple(F(b) for b in bits)
                     for bits in product((0, 1), repeat=6)
                     if sum(bits) % 2 == 0]
        odd_rep = vsub(half, e5)
        odd_cell = [tuple(F(b) for b in bits[:5]) + (F(bits[5] - 1),)
                    for bits in product((0, 1), repeat=6)
                    if sum(bits) % 2 == 1]
        return [
            HoleOrbit("a", e5, "shallow", beta_cell, F(1), "a"),
            HoleOrbit("b", half, "deep", even_cell, F(3, 2), "b"),
            HoleOrbit("c", odd_rep, "deep", odd_cell, F(3, 2), "c"),
        ]

    raise UnsupportedLattice(spec.name)


# -- Voronoi cells ---------------------------------------------------------


@dataclass
class AmbientCell:
    """Voronoi cell of the origin in ambient rational coordinates."""

    vertices: list
    vertex_orbit: list            # hole-orbit label per vertex
    two_boundaries: list = field(default_factory=list)

    def orbit_census(self):
        census = {}
        for lab in self.vertex_orbit:
            census[lab] = census.get(lab, 0) + 1
        return census


def voronoi_cell(spec: LatticeSpec) -> AmbientCell:
    """Vertices of V(0) = holes adjacent to the origin, with orbit labels.
    For a4 the rhombic 2-boundaries are enumerated as well."""
    orbits = hole_orbits(spec)

    if spec.name == "square":
        verts = [(F(sx, 2), F(sy, 2)) for sx, sy in
                 ((1, 1), (-1, 1), (-1, -1), (1, -1))]
        return AmbientCell(verts, ["a"] * 4)

    if spec.name == "a2":
        verts, labs = [], []
        for orb in orbits:
            for T in combinations(range(3), 1 if orb.label == "a" else 2):
                eT = tuple(F(1) if i in T else F(0) for i in range(3))
                a = 1 if orb.label == "a" else 2
                verts.append(vsub(vscale(_ones(3), F(a, 3)), eT))
                labs.append(orb.label)
        return AmbientCell(verts, labs)

    if spec.name == "a4":
        verts, labs = [], []
        lab_of = {1: "a", 2: "b", 3: "c", 4: "d"}
        for a in (1, 2, 3, 4):
            for T in combinations(range(5), a):
                eT = tuple(F(1) if i in T else F(0) for i in range(5))
                verts.append(vsub(vscale(_ones(5), F(a, 5)), eT))
                labs.append(lab_of[a])
        cell = AmbientCell(verts, labs)
        cell.two_boundaries = _a4_two_boundaries(verts)
        return cell

    if spec.name == "hyper6p":
        verts = [tuple(F(s, 2) for s in signs)
                 for signs in product((1, -1), repeat=6)]
        return AmbientCell(verts, ["a"] * 64)

    if spec.name == "hyper6f":
        # vertices: 12 octahedron centers (+-e_i) and 64 half-cube centers
        verts, labs = [], []
        for i in range(6):
            for s in (1, -1):
                verts.append(basis_vec(6, i, s))
                labs.append("a")
        for signs in product((1, -1), repeat=6):
            verts.append(tuple(F(s, 2) for s in signs))
            labs.append("b" if signs.count(-1) % 2 == 0 else "c")
        return AmbientCell(verts, labs)

    raise UnsupportedLattice(spec.name)


def _a4_two_boundaries(verts):
    """2-faces of the a4 Voronoi cell from facet-pair intersections.
    Facets sit on the 20 root hyperplanes <x, r> = 1."""
    roots = [vsub(basis_vec(5, i), basis_vec(5, j))
             for i in range(5) for j in range(5) if i != j]
    facet_sets = []
    for r in roots:
        on = frozenset(i for i, h in enumerate(verts) if vdot(h, r) == 1)
        facet_sets.append(on)
    faces = set()
    for fa, fb in combinations(facet_sets, 2):
        common = fa & fb
        if len(common) >= 3:
            pts = [verts[i] for i in common]
            if _ambient_rank(pts) == 2:
                faces.add(common)
    return [sorted(f) for f in faces]


def _ambient_rank(pts):
    base = pts[0]
    rows = [list(vsub(p, base)) for p in pts[1:]]
    rank = 0
    ncols = len(base)
    for c in range(ncols):
        sel = next((i for i in range(rank, len(rows)) if rows[i][c] != 0),
                   None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        pivot = rows[rank][c]
        rows[rank] = [x / pivot for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# -- dual boundary pairs ---------------------------------------------------


def dual_boundary_pairs(spec: LatticeSpec) -> list[DualBoundaryPair]:
    if spec.name == "square":
        h = F(1, 2)
        return [
            DualBoundaryPair(0,
                             [(h, -h), (h, h)],
                             [(F(0), F(0)), (F(1), F(0))],
                             (h, F(0)), True, ("a", "a"), "L"),
            DualBoundaryPair(1,
                             [(-h, h), (h, h)],
                             [(F(0), F(0)), (F(0), F(1))],
                             (F(0), h), True, ("a", "a"), "S"),
        ]

    if spec.name == "a2":
        third = F(1, 3)
        ones3 = _ones(3)

        def t1(i):  # (1/3)1 - e_i
            return vsub(vscale(ones3, third), basis_vec(3, i))

        def t2(i):  # e_i - (1/3)1
            return vsub(basis_vec(3, i), vscale(ones3, third))

        pairs = []
        data = [
            # root, adjacent triangle centers
            ((0, 1), (t2(0), t1(1))),
            ((1, 2), (t2(1), t1(2))),
            ((0, 2), (t2(0), t1(2))),
        ]
        for k, ((i, j), (ha, hb)) in enumerate(data):
            root = vsub(basis_vec(3, i), basis_vec(3, j))
            pairs.append(DualBoundaryPair(
                k, [ha, hb], [tuple(F(0) for _ in range(3)), root],
                vscale(root, F(1, 2)), True, ("b", "a"), f"r{i}{j}"))
        return pairs

    if spec.name == "a4":
        pairs = []
        ones5 = _ones(5)
        for oid, S in enumerate(combinations(range(5), 3)):
            q, r, s = S
            comp = [x for x in range(5) if x not in S]
            a, b = comp
            e = lambda i: basis_vec(5, i)
            tri = [tuple(F(0) for _ in range(5)),
                   vsub(e(q), e(s)), vsub(e(r), e(s))]
            h1 = vsub(vscale(ones5, F(1, 5)), e(s))
            h2a = vsub(vsub(vscale(ones5, F(2, 5)), e(a)), e(s))
            h2b = vsub(vsub(vscale(ones5, F(2, 5)), e(b)), e(s))
            h3 = vsub(vsub(vsub(vscale(ones5, F(3, 5)), e(a)), e(b)), e(s))
            m = vscale(vsub(vadd(e(q), e(r)), vscale(e(s), 2)), F(1, 3))
            pairs.append(DualBoundaryPair(
                oid, [h1, h2a, h3, h2b], tri, m, False,
                ("a", "b", "c", "b"), f"S{q}{r}{s}"))
        return pairs

    raise UnsupportedLattice(
        f"dual boundary pairs not available for {spec.name}")


# -- verification predicates ----------------------------------------------


def nearest_lattice_points(spec: LatticeSpec, point, search_radius=2):
    """All lattice vectors achieving the minimal distance to `point`,
    searching the ambient integer box of the given radius around it."""
    best = None
    hits = []
    ranges = []
    for c in point:
        base = c.numerator // c.denominator
        ranges.append(range(base - search_radius,
                            base + search_radius + 2))
    for cand in product(*ranges):
        v = tuple(F(x) for x in cand)
        if not in_lattice(spec, v):
            continue
        d = norm2(vsub(point, v))
        if best is None or d < best:
            best, hits = d, [v]
        elif d == best:
            hits.append(v)
    return best, hits


def is_voronoi_vertex(spec: LatticeSpec, point, expected_equidistant,
                      search_radius=3) -> bool:
    """Nearest-point predicate: equidistant from the expected number of
    lattice points with none closer."""
    best, hits = nearest_lattice_points(spec, point, search_radius)
    return len(hits) == expected_equidistant and all(
        in_lattice(spec, h) for h in hits)
