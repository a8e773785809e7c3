"""Exact convex geometry over QTau scalars.

1D intervals and 2D polygons support full boolean operations and a
half-open boundary convention that makes periodic tilings by translated
cells exact partitions.  Higher-dimensional polytopes (3D/4D/6D) only
enumerate vertices, edges and faces, which is all the cluster-shape
analysis needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exact import ONE, ZERO, FrameMismatch, QTau, Vec


def _sign_pq(p: int, q: int) -> int:
    """Sign of p + q*tau for plain integers."""
    u = 2 * p + q
    if u == 0 and q == 0:
        return 0
    su = (u > 0) - (u < 0)
    sq = (q > 0) - (q < 0)
    if su == sq or su == 0 or sq == 0:
        return su or sq
    w = u * u - 5 * q * q
    return su if w > 0 else sq if w < 0 else 0


def cross2(o: Vec, a: Vec, b: Vec) -> QTau:
    """z-component of (a - o) x (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


@dataclass(frozen=True)
class HalfOpenRule:
    """Boundary points belong to a cell iff an infinitesimal step along the
    priority direction enters it; equivalently an edge is closed iff its
    outward normal is lexicographically negative in the given axis order.

    For windows in perpendicular space the natural order is (0, 1).  For
    cells living in an embedding plane stored as (parallel, perp) the perp
    axis takes priority, i.e. axes=(1, 0).
    """

    axes: tuple[int, ...] = (0, 1)

    def lex_negative(self, normal) -> bool:
        for ax in self.axes:
            s = normal[ax].sign()
            if s:
                return s < 0
        return False


HALF_OPEN = HalfOpenRule()
HALF_OPEN_PERP_FIRST = HalfOpenRule(axes=(1, 0))
CLOSED = "closed"
OPEN = "open"


class EmptyIntersection:
    """Marker for an empty polygon intersection; `touching` records whether
    the inputs met in a lower-dimensional set (point or segment)."""

    def __init__(self, touching: bool = False):
        self.touching = touching

    def __bool__(self):
        return False

    def __repr__(self):
        return f"EmptyIntersection(touching={self.touching})"


class Interval:
    """Closed-below/open-above under the half-open rule; exact endpoints."""

    dim = 1

    def __init__(self, lo, hi, frame: str = ""):
        lo = lo if isinstance(lo, QTau) else QTau.of(lo)
        hi = hi if isinstance(hi, QTau) else QTau.of(hi)
        if hi < lo:
            lo, hi = hi, lo
        self.lo, self.hi = lo, hi
        self.frame = frame

    @property
    def vertices(self):
        return (Vec([self.lo], self.frame), Vec([self.hi], self.frame))

    def length(self) -> QTau:
        return self.hi - self.lo

    def midpoint(self) -> QTau:
        return (self.hi + self.lo) * QTau(1, 0, 2)

    def contains(self, x, rule=HALF_OPEN) -> bool:
        x = x if isinstance(x, QTau) else QTau.of(x)
        if rule == CLOSED:
            return self.lo <= x <= self.hi
        if rule == OPEN:
            return self.lo < x < self.hi
        return self.lo <= x < self.hi

    def intersect(self, other: "Interval"):
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return EmptyIntersection(False)
        if lo == hi:
            return EmptyIntersection(True)
        return Interval(lo, hi, self.frame or other.frame)

    def translate(self, t) -> "Interval":
        t = t if isinstance(t, QTau) else QTau.of(t)
        return Interval(self.lo + t, self.hi + t, self.frame)

    def scale(self, s) -> "Interval":
        s = s if isinstance(s, QTau) else QTau.of(s)
        return Interval(self.lo * s, self.hi * s, self.frame)

    def __eq__(self, other):
        return (isinstance(other, Interval) and self.lo == other.lo
                and self.hi == other.hi)

    def __repr__(self):
        return f"Interval[{self.lo}, {self.hi})"


def convex_hull(points: list[Vec], frame: str = "") -> "Polygon":
    """Andrew's monotone chain with exact predicates."""
    pts = sorted(set((p.x, p.y) for p in points))
    pts = [Vec(p, frame) for p in pts]
    if len(pts) < 3:
        raise ValueError("hull needs 3 non-collinear points")

    def build(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross2(out[-2], out[-1], p).sign() <= 0:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 3:
        raise ValueError("degenerate hull")
    return Polygon(verts, frame=frame or pts[0].frame)


class Polygon:
    """Convex polygon, vertices in counterclockwise order, no collinear
    triples stored."""

    dim = 2

    def __init__(self, vertices, frame: str = "", _clean: bool = True):
        verts = [v if isinstance(v, Vec) else Vec(v, frame) for v in vertices]
        if _clean:
            verts = _clean_ring(verts)
        self.vertices = tuple(verts)
        self.frame = frame
        self._compiled = None

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def area(self) -> QTau:
        acc = ZERO
        v = self.vertices
        for i in range(len(v)):
            a, b = v[i], v[(i + 1) % len(v)]
            acc = acc + (a.x * b.y - b.x * a.y)
        return acc * QTau(1, 0, 2)

    def centroid(self) -> Vec:
        n = QTau(len(self.vertices))
        sx = sy = ZERO
        for v in self.vertices:
            sx, sy = sx + v.x, sy + v.y
        return Vec([sx / n, sy / n], self.frame)

    def translate(self, t: Vec) -> "Polygon":
        return Polygon([v + t for v in self.vertices], self.frame,
                       _clean=False)

    def scale(self, s) -> "Polygon":
        s = s if isinstance(s, QTau) else QTau.of(s)
        verts = [Vec([v.x * s, v.y * s], self.frame) for v in self.vertices]
        if s.sign() < 0:
            verts.reverse()
        return Polygon(verts, self.frame, _clean=False)

    def transform(self, m) -> "Polygon":
        """Apply an exact 2x2 matrix ((a,b),(c,d)); reorients if det < 0."""
        (a, b), (c, d) = m
        verts = [Vec([a * v.x + b * v.y, c * v.x + d * v.y], self.frame)
                 for v in self.vertices]
        if (a * d - b * c).sign() < 0:
            verts.reverse()
        return Polygon(verts, self.frame, _clean=False)

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def contains(self, point: Vec, rule=HALF_OPEN) -> bool:
        if point.frame and self.frame and point.frame != self.frame:
            raise FrameMismatch(f"{self.frame!r} vs {point.frame!r}")
        on_edges = []
        v = self.vertices
        for i in range(len(v)):
            a, b = v[i], v[(i + 1) % len(v)]
            s = cross2(a, b, point).sign()
            if s < 0:
                return False
            if s == 0:
                on_edges.append((a, b))
        if not on_edges:
            return True
        if rule == CLOSED:
            return True
        if rule == OPEN:
            return False
        for a, b in on_edges:
            normal = (b.y - a.y, a.x - b.x)  # outward for CCW
            if not rule.lex_negative(normal):
                return False
        return True

    # -- fast path -----------------------------------------------------

    def compiled(self, rule=HALF_OPEN):
        """Integer-only membership test, shared across many queries."""
        if self._compiled is None:
            self._compiled = {}
        if rule not in self._compiled:
            edges = []
            for a, b in self.edges():
                A = b.y - a.y
                B = a.x - b.x
                C = b.x * a.y - a.x * b.y
                # inside: -(A x + B y + C) >= 0 ... fix orientation so that
                # form >= 0 means inside
                A, B, C = -A, -B, -C
                den = A.d * B.d * C.d
                fa = (A.p * (den // A.d), A.q * (den // A.d))
                fb = (B.p * (den // B.d), B.q * (den // B.d))
                fc = (C.p * (den // C.d), C.q * (den // C.d))
                normal = (b.y - a.y, a.x - b.x)
                closed = (rule == CLOSED or
                          (isinstance(rule, HalfOpenRule)
                           and rule.lex_negative(normal)))
                edges.append((fa, fb, fc, closed))
            self._compiled[rule] = tuple(edges)
        return self._compiled[rule]

    def contains_fast(self, zint, rule=HALF_OPEN) -> bool:
        """zint = (xp, xq, yp, yq, d) with x = (xp+xq*tau)/d etc."""
        xp, xq, yp, yq, d = zint
        for (ap, aq), (bp, bq), (cp, cq), closed in self.compiled(rule):
            up = ap * xp + aq * xq + bp * yp + bq * yq + cp * d
            uq = ap * xq + aq * (xp + xq) + bp * yq + bq * (yp + yq) + cq * d
            s = _sign_pq(up, uq)
            if s < 0 or (s == 0 and not closed):
                return False
        return True

    # -- set operations --------------------------------------------------

    def intersect(self, other: "Polygon"):
        if self.frame and other.frame and self.frame != other.frame:
            raise FrameMismatch(f"{self.frame!r} vs {other.frame!r}")
        pts = list(self.vertices)
        for a, b in other.edges():
            pts = _clip(pts, a, b)
            if not pts:
                return EmptyIntersection(False)
        ring = _clean_ring_or_none(pts)
        if ring is None:
            return EmptyIntersection(True)
        return Polygon(ring, self.frame or other.frame, _clean=False)

    def contains_polygon(self, other: "Polygon") -> bool:
        return all(self.contains(v, CLOSED) for v in other.vertices)

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return set(self.key()) == set(other.key())

    def __hash__(self):
        return hash(frozenset(self.key()))

    def key(self):
        return tuple((v.x, v.y) for v in self.vertices)

    def __repr__(self):
        return f"Polygon[{len(self.vertices)} vertices]"


def _clean_ring(verts):
    ring = _clean_ring_or_none(verts)
    if ring is None:
        raise ValueError("degenerate polygon")
    return ring


def _clean_ring_or_none(verts):
    """Drop duplicate and collinear vertices; None when area is zero.
    Ensures counterclockwise orientation."""
    uniq = []
    for v in verts:
        if not uniq or (v.x, v.y) != (uniq[-1].x, uniq[-1].y):
            uniq.append(v)
    if len(uniq) > 1 and (uniq[0].x, uniq[0].y) == (uniq[-1].x, uniq[-1].y):
        uniq.pop()
    if len(uniq) < 3:
        return None
    acc = ZERO
    for i in range(len(uniq)):
        a, b = uniq[i], uniq[(i + 1) % len(uniq)]
        acc = acc + (a.x * b.y - b.x * a.y)
    s = acc.sign()
    if s == 0:
        return None
    if s < 0:
        uniq.reverse()
    out = []
    n = len(uniq)
    for i in range(n):
        a, b, c = uniq[i - 1], uniq[i], uniq[(i + 1) % n]
        if cross2(a, b, c).sign() != 0:
            out.append(b)
    if len(out) < 3:
        return None
    return out


def _clip(pts, a, b):
    """Keep the part of the ring on the left of directed line a->b."""
    if not pts:
        return pts
    out = []
    n = len(pts)
    sides = [cross2(a, b, p).sign() for p in pts]
    for i in range(n):
        p, sp = pts[i], sides[i]
        q, sq = pts[(i + 1) % n], sides[(i + 1) % n]
        if sp >= 0:
            out.append(p)
        if sp * sq < 0:
            # exact crossing point
            num = cross2(a, b, p)
            den = num - cross2(a, b, q)
            t = num / den
            out.append(Vec([p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t],
                           p.frame))
    return out


# -- symmetry -----------------------------------------------------------


@dataclass(frozen=True)
class SymOp:
    """One point-group element with its paired actions: position space and
    perpendicular space transform differently (a 2pi/5 rotation in one is a
    4pi/5 rotation in the other)."""

    name: str
    par: tuple      # 2x2 QTau matrix, rows
    perp: tuple

    def compose(self, other: "SymOp") -> "SymOp":
        return SymOp(f"{self.name}*{other.name}",
                     _matmul(self.par, other.par),
                     _matmul(self.perp, other.perp))

    def matrix_for_frame(self, frame: str):
        return self.perp if frame.endswith("perp") else self.par


def _matmul(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _mat_eq(m, n):
    return all(m[i][j] == n[i][j] for i in range(2) for j in range(2))


IDENT2 = ((ONE, ZERO), (ZERO, ONE))


class SymmetryGroup:
    """Finite group of paired (parallel, perpendicular) exact matrices."""

    def __init__(self, name: str, generators: list[SymOp], limit: int = 256):
        self.name = name
        elems = [SymOp("e", IDENT2, IDENT2)]
        frontier = list(generators)
        while frontier:
            g = frontier.pop()
            if any(_mat_eq(g.par, h.par) and _mat_eq(g.perp, h.perp)
                   for h in elems):
                continue
            elems.append(g)
            if len(elems) > limit:
                raise ValueError("group closure exceeded limit")
            for h in list(elems):
                frontier.append(g.compose(h))
                frontier.append(h.compose(g))
        self.elements = elems

    def __len__(self):
        return len(self.elements)

    def orbit(self, poly: Polygon) -> list[Polygon]:
        """Images of a polygon, deduplicated by exact vertex-set equality.
        Windows (perp frames) move with the perpendicular matrices."""
        seen = {}
        for g in self.elements:
            img = poly.transform(g.matrix_for_frame(poly.frame))
            seen.setdefault(frozenset(img.key()), img)
        return list(seen.values())


def group_orbit(group: SymmetryGroup, poly: Polygon) -> list[Polygon]:
    return group.orbit(poly)


def congruent(p: Polygon, q: Polygon, group: SymmetryGroup) -> bool:
    """Exact congruence: some group element maps p onto q up to translation
    (vertex sets compared after aligning vertex centroids)."""
    if len(p.vertices) != len(q.vertices):
        return False
    target = set(q.key())
    cq = q.centroid()
    for g in group.elements:
        for m in (g.par, g.perp) if p.frame == "" else \
                 (g.matrix_for_frame(p.frame),):
            img = p.transform(m)
            t = cq - img.centroid()
            if set(img.translate(t).key()) == target:
                return True
    return False


# -- N-dimensional enumeration (3D/4D/6D cluster shapes) -----------------


def exact_solve(rows, rhs):
    """Gaussian elimination over QTau; rows is a list of lists."""
    n = len(rows)
    m = len(rows[0])
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    piv = []
    r = 0
    for c in range(m):
        sel = next((i for i in range(r, n) if aug[i][c].sign() != 0), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c].sign() != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if aug[i][m].sign() != 0:
            return None
    sol = [ZERO] * m
    for i, c in enumerate(piv):
        sol[c] = aug[i][m]
    return sol


def affine_rank(points) -> int:
    """Rank of the difference set, exact."""
    if len(points) < 2:
        return 0
    base = points[0]
    rows = [[x - y for x, y in zip(p, base)] for p in points[1:]]
    m = len(rows[0])
    rank = 0
    for c in range(m):
        sel = next((i for i in range(rank, len(rows))
                    if rows[i][c].sign() != 0), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c].sign() != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def dotn(u, v) -> QTau:
    acc = ZERO
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


class PolytopeND:
    """Vertex-presented convex polytope in dimension >= 3: facet and face
    enumeration against caller-supplied candidate normals, no booleans."""

    def __init__(self, vertices, dim: int, frame: str = ""):
        self.vertices = [tuple(v) for v in vertices]
        self.dim = dim
        self.frame = frame
        self.facets = None

    def enumerate_facets(self, candidate_normals):
        """Supporting-hyperplane scan; normals must cover every facet
        direction (verified afterwards with an Euler check by the caller)."""
        found = {}
        for n in candidate_normals:
            vals = [dotn(n, v) for v in self.vertices]
            mx = vals[0]
            for v in vals[1:]:
                if v > mx:
                    mx = v
            face = frozenset(i for i, v in enumerate(vals) if v == mx)
            if len(face) >= self.dim:
                pts = [self.vertices[i] for i in face]
                if affine_rank(pts) == self.dim - 1:
                    found[face] = n
        self.facets = list(found.keys())
        return self.facets

    def edge_set(self):
        """Edges = vertex pairs lying on >= dim-1 common facets (convexity),
        verified by rank; adequate for the shapes handled here."""
        if self.facets is None:
            raise RuntimeError("facets not enumerated")
        incident = {i: set() for i in range(len(self.vertices))}
        for fi, face in enumerate(self.facets):
            for i in face:
                incident[i].add(fi)
        edges = set()
        for i, j in combinations(range(len(self.vertices)), 2):
            common = incident[i] & incident[j]
            if len(common) >= self.dim - 1:
                edges.add((i, j))
        return edges

    def face_vector(self):
        v = len(self.vertices)
        e = len(self.edge_set())
        f = len(self.facets)
        return v, e, f

    def edge_lengths_squared(self, gram=None):
        """Multiset of squared edge lengths; gram is a diagonal weight list."""
        out = set()
        for i, j in self.edge_set():
            d = [a - b for a, b in zip(self.vertices[i], self.vertices[j])]
            if gram is None:
                out.add(dotn(d, d))
            else:
                acc = ZERO
                for w, x in zip(gram, d):
                    acc = acc + w * x * x
                out.add(acc)
        return out
