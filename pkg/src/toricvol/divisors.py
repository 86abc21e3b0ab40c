"""Torus-invariant divisors: local equations, polytopes, positivity, sections.

Sign convention, used everywhere downstream: the local equation h_j of the
divisor on the chart of cone j is the unique character with
<h_j, ray> = -d_ray on both rays of the cone. With this convention the
divisor polytope of a globally generated divisor is exactly the convex hull
of the cocycle characters h_j, and the transition cocycle of the line bundle
is f_ab = h_b - h_a in exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import index

from .fan import Fan2D, chart_dual_basis
from .lattice import Polygon, Vec, convex_hull_2d, dot

Cocycle = tuple[Vec, ...]  # one character exponent per maximal cone


class NotGloballyGenerated(ValueError):
    def __init__(self, cone: int, ray: int):
        self.cone = cone
        self.ray = ray
        super().__init__(
            f"divisor is not globally generated: local equation of cone {cone} "
            f"violates the inequality of ray {ray}")


class NotAmple(ValueError):
    pass


@dataclass(frozen=True)
class TorusDivisor:
    """Integer coefficient per ray: the divisor sum(d_i * D_i)."""

    fan: Fan2D
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.fan.n_rays:
            raise ValueError(
                f"{len(self.coeffs)} coefficients for {self.fan.n_rays} rays")


def divisor(fan: Fan2D, coeffs) -> TorusDivisor:
    return TorusDivisor(fan, tuple(index(c) for c in coeffs))


def cartier_data(D: TorusDivisor) -> Cocycle:
    """Local equation h_j per cone: h_j = -d_j*m - d_{j+1}*m' in the dual basis."""
    fan = D.fan
    n = fan.n_rays
    out = []
    for j in range(n):
        m, mp = chart_dual_basis(fan, j)
        dj, dk = D.coeffs[j], D.coeffs[(j + 1) % n]
        out.append((-dj * m[0] - dk * mp[0], -dj * m[1] - dk * mp[1]))
    return tuple(out)


def cech_cocycle(cocycle: Cocycle, a: int, b: int) -> Vec:
    """Transition character f_ab = h_b / h_a, as an exponent vector."""
    ha, hb = cocycle[a], cocycle[b]
    return (hb[0] - ha[0], hb[1] - ha[1])


def generation_violations(D: TorusDivisor) -> list[tuple[int, int]]:
    """(cone, ray) pairs where the cone's local equation breaks the ray inequality."""
    fan = D.fan
    h = cartier_data(D)
    out = []
    for j in range(fan.n_rays):
        for i, ray in enumerate(fan.rays):
            if dot(h[j], ray) < -D.coeffs[i]:
                out.append((j, i))
    return out


def is_globally_generated(D: TorusDivisor) -> bool:
    return not generation_violations(D)


def ampleness_violations(D: TorusDivisor) -> list[tuple[int, int]]:
    """(cone, ray) pairs with non-strict inequality at a ray off the cone."""
    fan = D.fan
    n = fan.n_rays
    h = cartier_data(D)
    out = []
    for j in range(n):
        faces = {j, (j + 1) % n}
        for i, ray in enumerate(fan.rays):
            if i in faces:
                continue
            if dot(h[j], ray) <= -D.coeffs[i]:
                out.append((j, i))
    return out


def is_ample(D: TorusDivisor) -> bool:
    return not ampleness_violations(D)


def divisor_polytope(D: TorusDivisor) -> Polygon:
    """Convex hull of the cocycle characters.

    Equals the half-plane intersection {h : <h,ray> >= -d_ray} precisely when
    D is globally generated, so that is demanded up front.
    """
    bad = generation_violations(D)
    if bad:
        raise NotGloballyGenerated(*bad[0])
    return convex_hull_2d(cartier_data(D))


def section_lattice_points(D: TorusDivisor, m: int = 1) -> list[Vec]:
    """All characters h with <h, ray_i> >= -m*d_i for every ray, sorted.

    These are the lattice points of m times the divisor polytope. Candidates
    come from the integer bounding box of the scaled cocycle characters,
    which contains the polytope for any divisor on a complete fan.
    """
    if m < 1:
        raise ValueError(f"level must be a positive integer, got {m}")
    fan = D.fan
    h = cartier_data(D)
    xs = [m * e[0] for e in h]
    ys = [m * e[1] for e in h]
    rays = fan.rays
    bounds = [-m * d for d in D.coeffs]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if all(x * r[0] + y * r[1] >= b for r, b in zip(rays, bounds)):
                out.append((x, y))
    return out


def scaled_section_hull(D: TorusDivisor, m: int) -> Polygon:
    """Convex hull of the level-m section characters, scaled back by 1/m."""
    pts = section_lattice_points(D, m)
    if not pts:
        raise ValueError(f"no sections at level {m}")
    s = Fraction(1, m)
    return convex_hull_2d([(s * x, s * y) for x, y in pts])
