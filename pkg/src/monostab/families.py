"""The ideal families used by the reproduction suite, plus random ideals."""

from __future__ import annotations

import random

from .core import MonomialIdeal, Ring, from_exps

XYZ = Ring(("x", "y", "z"))
XYZU = Ring(("x", "y", "z", "u"))


def example_1_3() -> MonomialIdeal:
    return XYZ.ideal("x^2*y^2, x^2*z^2, y^2*z^2")


def theorem_1_4(c: int) -> MonomialIdeal:
    if c < 1:
        raise ValueError(f"c must be a positive integer, got {c}")
    return XYZ.ideal(f"x^{2*c+2}, x*y^{2*c}*z, y^{2*c+2}*z")


def hibi(t: int) -> MonomialIdeal:
    """(x^t, x*y^(t-2)*z, y^(t-1)*z), whose depth index is t."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    return XYZ.ideal([{"x": t}, {"x": 1, "y": t - 2, "z": 1}, {"y": t - 1, "z": 1}])


def example_2_1() -> MonomialIdeal:
    return XYZU.ideal("x*y, y*z, z*u")


def example_2_2() -> MonomialIdeal:
    return XYZU.ideal("x^2*z, u*y*z, u^3")


def theorem_2_3(c: int) -> tuple:
    """The pair (I, J) with astab(I) - dstab(I) = dstab(J) - astab(J) = c."""
    if c < 1:
        raise ValueError(f"c must be a positive integer, got {c}")
    I = XYZU.ideal([{"x": c + 1, "z": c}, {"u": 2 * c - 1, "y": 1, "z": 1}, {"u": 2 * c + 1}])
    J = XYZU.ideal([{"x": c, "y": c - 1}, {"y": c - 1, "x": c - 1, "z": 1}, {"z": c, "u": c}])
    return I, J


def random_ideal(ring: Ring, rng: random.Random, max_gens: int = 4, max_exp: int = 3) -> MonomialIdeal:
    """A random proper nonzero monomial ideal with at most ``max_gens`` generators."""
    while True:
        k = rng.randint(1, max_gens)
        gens = []
        for _ in range(k):
            e = tuple(rng.randint(0, max_exp) for _ in range(ring.n))
            if any(e):
                gens.append(e)
        if gens:
            return from_exps(ring, gens)
