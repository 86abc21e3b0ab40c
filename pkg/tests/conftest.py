"""Shared deterministic samplers for fan and divisor instances."""

import random
from fractions import Fraction

from toricvol import (
    MonomialFn,
    TorusDivisor,
    divisor,
    enumerate_tflags,
    is_ample,
    projective_plane_fan,
    star_subdivide,
)


def random_smooth_fan(rng: random.Random, max_subdivisions: int = 5):
    """Iterated star subdivisions of the projective-plane fan."""
    fan = projective_plane_fan()
    for _ in range(rng.randint(0, max_subdivisions)):
        fan = star_subdivide(fan, rng.randrange(fan.n_rays))
    return fan


def sample_ample_divisor(rng: random.Random, fan, bound: int = 6, tries: int = 400):
    """Rejection-sample an ample divisor with small coefficients, or None."""
    for _ in range(tries):
        D = divisor(fan, [rng.randint(-bound, bound) for _ in range(fan.n_rays)])
        if is_ample(D):
            return D
    return None


def random_ample_instance(rng: random.Random, max_subdivisions: int = 5) -> TorusDivisor:
    """A random smooth complete fan with an ample divisor on it.

    Fans admitting no small ample divisor (deep chains of blowups of one
    point) are re-drawn; the result is still a uniform-ish draw over easy
    fans, which is all the property suites need.
    """
    while True:
        fan = random_smooth_fan(rng, max_subdivisions)
        D = sample_ample_divisor(rng, fan)
        if D is not None:
            return D


def random_monomial(rng: random.Random, span: int = 10) -> MonomialFn:
    coeff = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    if rng.random() < 0.5:
        coeff = -coeff
    return MonomialFn(coeff, (rng.randint(-span, span), rng.randint(-span, span)))


def random_flag(rng: random.Random, fan):
    return rng.choice(enumerate_tflags(fan))


def hirzebruch_grid():
    """The 100-instance family: l in 1..4, a in 1..5, b in la+1..la+5."""
    for l in range(1, 5):
        for a in range(1, 6):
            for extra in range(1, 6):
                yield l, a, l * a + extra
