"""Exact stability indices of powers of monomial ideals.

Typical use::

    from monostab import Ring, profile

    R = Ring(("x", "y", "z"))
    I = R.ideal("x^2*y^2, x^2*z^2, y^2*z^2")
    rep = profile(I, 5, with_closure=True)
    rep.astab_observed, rep.astabbar_observed   # (2, 1)
"""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    Monomial,
    MonomialIdeal,
    Ring,
    colon_ideal,
    colon_monomial,
    contains,
    equals,
    factor_gcd,
    intersect,
    minimalize,
    multiply,
    power,
    radical,
    subset,
)
from .decomposition import (  # noqa: E402
    IrreducibleComponent,
    PrimeSupport,
    ass_witness,
    associated_primes,
    height,
    irreducible_decomposition,
    minimal_primes,
    potential_ass,
)
from .resolution import betti_table, depth, koszul_betti_oracle, lcm_lattice  # noqa: E402
from .closure import NewtonSystem, integral_closure, np_member  # noqa: E402
from .stability import (  # noqa: E402
    StabilityReport,
    depth_monotonicity,
    dim2_check,
    dim3_astab_eq_dstab_check,
    profile,
    strong_persistence,
)
from .errors import ParseError, ResourceLimitError, UsageError  # noqa: E402
