"""Smooth complete fans in the plane and their orbit bookkeeping.

A fan is stored as its cyclically ordered primitive rays; maximal cone ``j``
is spanned by ``rays[j]`` and ``rays[(j+1) % n]``, so the cone list is
implicit. Validity means: every ray primitive, every consecutive cross
product exactly 1 (smooth and positively oriented), and winding number
exactly 1 (complete). The winding count assumes each turn is
counterclockwise by less than a half turn, which the cross condition
guarantees, so it is only evaluated once the cross checks pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import index
from typing import Sequence

from .lattice import Vec, cross, is_primitive


@dataclass(frozen=True)
class FanViolation:
    kind: str  # "too-few-rays" | "non-primitive" | "bad-cross" | "bad-winding"
    index: int | None
    message: str

    def __str__(self) -> str:
        return self.message


class FanValidationError(ValueError):
    def __init__(self, violations: Sequence[FanViolation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def _half(v: Vec) -> int:
    # 0 on the open upper half plane plus the positive x-axis, 1 otherwise
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_less(u: Vec, v: Vec) -> bool:
    # strict comparison of direction angles measured from the positive x-axis
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu < hv
    return cross(u, v) > 0


def _winding(rays: Sequence[Vec]) -> int:
    n = len(rays)
    return sum(1 for j in range(n) if _angle_less(rays[(j + 1) % n], rays[j]))


def fan_violations(rays: Sequence[Sequence[int]]) -> list[FanViolation]:
    """All axioms violated by a candidate ray list, each with its index."""
    out: list[FanViolation] = []
    clean: list[Vec] = []
    for i, r in enumerate(rays):
        try:
            clean.append(tuple(index(c) for c in r))
        except TypeError:
            out.append(FanViolation(
                "non-primitive", i, f"ray {i} = {r!r} has non-integer coordinates"))
    if out:
        return out
    rays = clean
    n = len(rays)
    if n < 3:
        out.append(FanViolation("too-few-rays", None, f"{n} rays, a complete fan needs at least 3"))
    for i, r in enumerate(rays):
        if len(r) != 2 or not is_primitive(r):
            out.append(FanViolation("non-primitive", i, f"ray {i} = {r} is not primitive"))
    if out:
        return out
    crosses_ok = True
    for j in range(n):
        c = cross(rays[j], rays[(j + 1) % n])
        if c != 1:
            crosses_ok = False
            out.append(FanViolation(
                "bad-cross", j,
                f"cross(ray {j}, ray {(j + 1) % n}) = {c}, expected 1"))
    if crosses_ok:
        w = _winding(rays)
        if w != 1:
            out.append(FanViolation("bad-winding", None, f"winding number {w}, expected 1"))
    return out


@dataclass(frozen=True)
class Fan2D:
    """Validated smooth complete fan; constructing an invalid one raises."""

    rays: tuple[Vec, ...]

    def __post_init__(self):
        violations = fan_violations(self.rays)
        if violations:
            raise FanValidationError(violations)

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    n_cones = n_rays

    def cone(self, j: int) -> tuple[Vec, Vec]:
        """The two spanning rays of maximal cone j, in counterclockwise order."""
        n = len(self.rays)
        return self.rays[j % n], self.rays[(j + 1) % n]


def validate_fan(rays: Sequence[Sequence[int]]) -> Fan2D:
    """Build a Fan2D, raising FanValidationError with the full violation list."""
    violations = fan_violations(rays)
    if violations:
        raise FanValidationError(violations)
    return Fan2D(tuple(tuple(index(c) for c in r) for r in rays))


def hirzebruch_fan(l: int) -> Fan2D:
    """The fan with rays (1,0), (0,1), (-1,l), (0,-1) for l >= 1.

    Ray 1 and ray 2 carry the two independent divisor classes; cone j is
    spanned by rays j and j+1. l = 1 is the blowup of the projective plane.
    """
    if index(l) < 1:
        raise ValueError(f"parameter must be a positive integer, got {l}")
    return validate_fan([(1, 0), (0, 1), (-1, l), (0, -1)])


def projective_plane_fan() -> Fan2D:
    return validate_fan([(1, 0), (0, 1), (-1, -1)])


def chart_dual_basis(fan: Fan2D, j: int) -> tuple[Vec, Vec]:
    """Exponents (m, m') of the chart coordinates of cone j.

    m pairs to 1 with the cone's first ray and to 0 with the second; m' the
    other way around. Unique because the cone is unimodular: for column
    matrix A = [u v] with det 1, the inverse rows are (v2,-v1), (-u2,u1).
    """
    u, v = fan.cone(j)
    return (v[1], -v[0]), (-u[1], u[0])


def star_subdivide(fan: Fan2D, j: int) -> Fan2D:
    """Insert the primitive ray u+v inside cone j (blowup of its fixed point)."""
    n = fan.n_rays
    j %= n
    u, v = fan.cone(j)
    new_ray = (u[0] + v[0], u[1] + v[1])
    rays = list(fan.rays)
    rays.insert(j + 1, new_ray)
    return validate_fan(rays)


@dataclass(frozen=True)
class OrbitDecomposition:
    """Assignment of every torus orbit to a chart whose closure contains it.

    The 2n+1 orbits are the dense one, one per ray, one fixed point per
    maximal cone. A fixed point lies only in its own cone's chart, so that
    assignment is forced and left implicit (cone j owns fixed point j). The
    ray assignments must satisfy the face condition: ray i lies only in the
    charts of the two cones having it as a face, i.e. cones i-1 and i. The
    dense orbit lies in every chart.
    """

    fan: Fan2D
    generic_owner: int
    ray_owner: tuple[int, ...]

    def __post_init__(self):
        n = self.fan.n_rays
        if not 0 <= self.generic_owner < n:
            raise ValueError(f"generic orbit assigned to nonexistent cone {self.generic_owner}")
        if len(self.ray_owner) != n:
            raise ValueError(f"need one owner per ray, got {len(self.ray_owner)} for {n} rays")
        for i, j in enumerate(self.ray_owner):
            if j not in (i, (i - 1) % n):
                raise ValueError(
                    f"ray {i} assigned to cone {j}, which does not have it as a face")

    def cone_owner(self, j: int) -> int:
        return j % self.fan.n_rays


def standard_decomposition(fan: Fan2D, variant: str = "default") -> OrbitDecomposition:
    """Named orbit decompositions.

    "default": cone j owns its first ray, cone 0 owns the dense orbit.
    "successor": cone j owns its second ray instead.
    "generic-at=K": like default but the dense orbit goes to cone K.
    """
    n = fan.n_rays
    generic = 0
    if variant == "default":
        owners = tuple(range(n))
    elif variant == "successor":
        owners = tuple((i - 1) % n for i in range(n))
    elif variant.startswith("generic-at="):
        try:
            generic = int(variant.split("=", 1)[1])
        except ValueError:
            raise ValueError(f"bad decomposition variant {variant!r}") from None
        owners = tuple(range(n))
    else:
        raise ValueError(f"unknown decomposition variant {variant!r}")
    return OrbitDecomposition(fan, generic, owners)
