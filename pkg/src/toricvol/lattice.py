"""Exact integer and rational primitives for plane lattice geometry.

Everything works over Python ints and ``fractions.Fraction``; there is no
floating point anywhere in this package. Vectors and points are plain tuples,
polygons are immutable and carry their exact shoelace area.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from operator import index
from typing import Iterable, Sequence

Vec = tuple[int, int]
Point = tuple[Fraction, Fraction]


def cross(u: Sequence[int], v: Sequence[int]) -> int:
    """2x2 determinant u1*v2 - u2*v1 of two plane vectors."""
    if len(u) != 2 or len(v) != 2:
        raise ValueError("cross product needs two plane vectors")
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    """Pairing of a character (exponent vector) with a ray."""
    return u[0] * v[0] + u[1] * v[1]


def is_primitive(v: Sequence[int]) -> bool:
    return gcd(*(abs(c) for c in v)) == 1


def det_n(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix.

    Fraction-free Bareiss elimination: every intermediate division is exact,
    so arbitrary-precision entries are handled without rounding.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, a row of length {len(row)}")
    a = [[index(x) for x in row] for row in matrix]  # rejects non-integer entries
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def signed_simplex_volume(columns: Sequence[Sequence[int]]) -> Fraction:
    """Signed volume of the n-simplex spanned by the given vectors and 0.

    The i-th input vector becomes the i-th *column* of the matrix, so row
    ``l`` holds the l-th coordinate of every vector; the result is
    det/n!. Orientation-sensitive: swapping two vectors flips the sign.
    """
    n = len(columns)
    for col in columns:
        if len(col) != n:
            raise ValueError(f"need {n} vectors of length {n}, got one of length {len(col)}")
    matrix = [[columns[j][i] for j in range(n)] for i in range(n)]
    return Fraction(det_n(matrix), factorial(n))


def shoelace(vertices: Sequence[Point]) -> Fraction:
    """Signed shoelace area of a vertex cycle (positive when counterclockwise)."""
    if len(vertices) < 3:
        return Fraction(0)
    twice = Fraction(0)
    for i, (x0, y0) in enumerate(vertices):
        x1, y1 = vertices[(i + 1) % len(vertices)]
        twice += x0 * y1 - x1 * y0
    return twice / 2


@dataclass(frozen=True)
class Polygon:
    """Convex polygon: counterclockwise vertices, no collinear interior ones.

    Degenerate hulls (a point or a segment) are legal and carry area 0.
    """

    vertices: tuple[Point, ...]
    area: Fraction

    def __post_init__(self):
        computed = shoelace(self.vertices)
        if computed < 0:
            raise ValueError("vertices are not in counterclockwise order")
        if computed != self.area:
            raise ValueError(f"cached area {self.area} != shoelace area {computed}")


def _as_point(p: Sequence) -> Point:
    if len(p) != 2:
        raise ValueError(f"not a plane point: {p!r}")
    return (Fraction(p[0]), Fraction(p[1]))


def convex_hull_2d(points: Iterable[Sequence]) -> Polygon:
    """Convex hull by monotone chain over exact rationals.

    Collinear boundary points are dropped, so the vertex list is minimal.
    """
    pts = sorted({_as_point(p) for p in points})
    if not pts:
        raise ValueError("convex hull of an empty point set")
    if len(pts) == 1:
        return Polygon((pts[0],), Fraction(0))

    def turn(o: Point, a: Point, b: Point) -> Fraction:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq: list[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and turn(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        # all points collinear: keep the two extremes
        hull = [pts[0], pts[-1]]
        return Polygon(tuple(hull), Fraction(0))
    return Polygon(tuple(hull), shoelace(hull))


def polygon_area(p: Polygon) -> Fraction:
    """Nonnegative area of a Polygon (the cached exact shoelace value)."""
    return p.area
