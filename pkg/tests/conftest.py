import itertools

from hypothesis import strategies as st

from monostab.core import Ring, from_exps

R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))
R4 = Ring(("x", "y", "z", "u"))


def exps_strategy(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def ideals(draw, ring=R3, max_gens=4, max_exp=3, allow_unit=False):
    gens = draw(st.lists(exps_strategy(ring.n, max_exp), min_size=1, max_size=max_gens))
    if not allow_unit:
        gens = [g for g in gens if any(g)] or [tuple([1] + [0] * (ring.n - 1))]
    return from_exps(ring, gens)


def box(tops):
    return itertools.product(*(range(t + 1) for t in tops))
