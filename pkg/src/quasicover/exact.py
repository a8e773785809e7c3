"""Exact arithmetic over the golden field Q(tau), tau = (1 + sqrt 5)/2.

Every geometric quantity in this package is an element a + b*tau with
rational a, b.  The defining relation tau^2 = tau + 1 keeps products in
the {1, tau} basis, and the Galois map tau -> 1 - tau swaps the two real
embeddings; geometrically it exchanges parallel and perpendicular
coordinates of lattice vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

_TAU_FLOAT = (1 + 5 ** 0.5) / 2


class QTau:
    """a + b*tau stored as integer numerators over one positive denominator."""

    __slots__ = ("p", "q", "d")

    def __init__(self, p: int = 0, q: int = 0, d: int = 1):
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 0:
            p, q, d = -p, -q, -d
        g = gcd(gcd(p, q), d)
        if g > 1:
            p //= g
            q //= g
            d //= g
        self.p = p
        self.q = q
        self.d = d

    # -- construction ------------------------------------------------

    @classmethod
    def of(cls, a, b=0) -> "QTau":
        """Build from rational parts a + b*tau (ints or Fractions)."""
        fa, fb = Fraction(a), Fraction(b)
        den = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
        return cls(fa.numerator * (den // fa.denominator),
                   fb.numerator * (den // fb.denominator), den)

    @property
    def a(self) -> Fraction:
        return Fraction(self.p, self.d)

    @property
    def b(self) -> Fraction:
        return Fraction(self.q, self.d)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QTau(self.p * other.d + other.p * self.d,
                    self.q * other.d + other.q * self.d,
                    self.d * other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QTau(self.p * other.d - other.p * self.d,
                    self.q * other.d - other.q * self.d,
                    self.d * other.d)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QTau(-self.p, -self.q, self.d)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a + b tau)(c + d tau) = (ac + bd) + (ad + bc + bd) tau
        ac = self.p * other.p
        bd = self.q * other.q
        return QTau(ac + bd,
                    self.p * other.q + self.q * other.p + bd,
                    self.d * other.d)

    __rmul__ = __mul__

    def inverse(self) -> "QTau":
        # field norm N(a + b tau) = a^2 + ab - b^2; inverse = conjugate / N
        n = self.p * self.p + self.p * self.q - self.q * self.q
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        # c/d divided by n/d^2  ->  c.num * d / n
        return QTau(c.p * self.d, c.q * self.d, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- order and identity --------------------------------------------

    def sign(self) -> int:
        """Exact sign, no floating point: compare 2a+b against -b*sqrt5."""
        u = 2 * self.p + self.q          # numerator of 2a + b
        v = self.q                       # numerator of b
        if u == 0 and v == 0:
            return 0
        su = (u > 0) - (u < 0)
        sv = (v > 0) - (v < 0)
        if su == sv or su == 0 or sv == 0:
            return su or sv
        # opposite signs: sign decided by u^2 - 5 v^2
        w = u * u - 5 * v * v
        return su if w > 0 else sv if w < 0 else 0

    def conjugate(self) -> "QTau":
        """Galois map tau -> 1 - tau:  a + b tau -> (a + b) - b tau."""
        return QTau(self.p + self.q, -self.q, self.d)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.p == other.p and self.q == other.q and self.d == other.d

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __hash__(self):
        return hash((self.p, self.q, self.d))

    def __bool__(self):
        return self.p != 0 or self.q != 0

    # -- output ----------------------------------------------------------

    def __float__(self):
        return (self.p + self.q * _TAU_FLOAT) / self.d

    def __repr__(self):
        return f"QTau({self})"

    def __str__(self):
        return format_qtau(self)


def _coerce(x):
    if isinstance(x, QTau):
        return x
    if isinstance(x, int):
        return QTau(x, 0, 1)
    if isinstance(x, Fraction):
        return QTau(x.numerator, 0, x.denominator)
    return None


ZERO = QTau(0)
ONE = QTau(1)
TAU = QTau(0, 1)            # the golden ratio
TAU_INV = QTau(-1, 1)       # 1/tau = tau - 1
SQRT5 = QTau(-1, 2)         # 2 tau - 1


def qtau(a, b=0) -> QTau:
    """Shorthand constructor accepting ints, Fractions or 'p/q' strings."""
    if isinstance(a, str):
        a = Fraction(a)
    if isinstance(b, str):
        b = Fraction(b)
    return QTau.of(a, b)


def format_qtau(x: QTau) -> str:
    """Render as 'a+bτ' with bare fractions, e.g. '1/2+3/4τ' or '-2'."""
    a, b = x.a, x.b
    if b == 0:
        return str(a)
    bs = f"{b}τ" if abs(b) != 1 else ("τ" if b > 0 else "-τ")
    if a == 0:
        return bs
    return f"{a}+{bs}" if b > 0 else f"{a}{bs}"


def parse_qtau(s: str) -> QTau:
    """Inverse of format_qtau."""
    s = s.strip().replace("tau", "τ")
    if "τ" not in s:
        return QTau.of(Fraction(s))
    head, _, _ = s.partition("τ")
    # split head into rational part and tau coefficient
    # the tau coefficient starts at the last '+' or '-' that is not inside a fraction
    idx = None
    for i in range(len(head) - 1, 0, -1):
        if head[i] in "+-" and head[i - 1] not in "+-/":
            idx = i
            break
    if idx is None:
        a_str, b_str = "0", head
    else:
        a_str, b_str = head[:idx], head[idx:]
    if b_str in ("", "+"):
        b = Fraction(1)
    elif b_str == "-":
        b = Fraction(-1)
    else:
        b = Fraction(b_str)
    a = Fraction(a_str) if a_str not in ("", "+") else Fraction(0)
    return QTau.of(a, b)


class Vec:
    """Small exact vector; coordinates are QTau, tagged with a frame name.

    Binary operations require matching frames (an empty tag matches any).
    """

    __slots__ = ("coords", "frame")

    def __init__(self, coords, frame: str = ""):
        self.coords = tuple(c if isinstance(c, QTau) else QTau.of(c)
                            for c in coords)
        self.frame = frame

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def x(self) -> QTau:
        return self.coords[0]

    @property
    def y(self) -> QTau:
        return self.coords[1]

    def _join(self, other) -> str:
        if self.frame and other.frame and self.frame != other.frame:
            raise FrameMismatch(f"{self.frame!r} vs {other.frame!r}")
        return self.frame or other.frame

    def __add__(self, other: "Vec") -> "Vec":
        return Vec([a + b for a, b in zip(self.coords, other.coords)],
                   self._join(other))

    def __sub__(self, other: "Vec") -> "Vec":
        return Vec([a - b for a, b in zip(self.coords, other.coords)],
                   self._join(other))

    def __neg__(self) -> "Vec":
        return Vec([-a for a in self.coords], self.frame)

    def scale(self, s) -> "Vec":
        s = s if isinstance(s, QTau) else QTau.of(s)
        return Vec([a * s for a in self.coords], self.frame)

    __mul__ = scale
    __rmul__ = scale

    def dot(self, other: "Vec") -> QTau:
        self._join(other)
        acc = ZERO
        for a, b in zip(self.coords, other.coords):
            acc = acc + a * b
        return acc

    def __eq__(self, other):
        return (isinstance(other, Vec) and self.coords == other.coords
                and (not self.frame or not other.frame
                     or self.frame == other.frame))

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return f"Vec({', '.join(map(str, self.coords))})"


class FrameMismatch(ValueError):
    """Raised when geometry from different coordinate frames is mixed."""
