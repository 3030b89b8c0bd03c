"""Monomials and monomial ideals over a small polynomial ring.

Ideals are stored by their minimal generators, as exponent tuples, in
lexicographic order. Every constructor path goes through
:func:`minimalize`, so two ideals are equal exactly when their generator
tuples are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import ExponentOverflowError, UsageError

MAX_EXPONENT = 2**63 - 1
MAX_VARIABLES = 16

_VAR_NAME = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")

Exps = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    """Polynomial ring K[variables]; only the variable list matters."""

    variables: tuple

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if not 1 <= len(names) <= MAX_VARIABLES:
            raise UsageError(f"a ring needs 1..{MAX_VARIABLES} variables, got {len(names)}")
        for name in names:
            if not isinstance(name, str) or not _VAR_NAME.match(name):
                raise UsageError(f"bad variable name {name!r}")
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")

    @classmethod
    def parse(cls, text: str) -> "Ring":
        """Build a ring from ``"x,y,z"``."""
        return cls(tuple(v.strip() for v in text.split(",")))

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UsageError(f"unknown variable {name!r}") from None

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def var(self, name: str, power: int = 1) -> "Monomial":
        exps = [0] * self.n
        exps[self.index(name)] = power
        return Monomial(self, tuple(exps))

    def monomial(self, spec) -> "Monomial":
        """Monomial from an exponent sequence, a dict, or text like ``x^2*y``."""
        if isinstance(spec, Monomial):
            _same_ring(self, spec.ring)
            return spec
        if isinstance(spec, str):
            from .parsing import parse_monomial

            return parse_monomial(self, spec)
        if isinstance(spec, dict):
            exps = [0] * self.n
            for name, e in spec.items():
                exps[self.index(name)] = e
            return Monomial(self, tuple(exps))
        return Monomial(self, tuple(spec))

    def ideal(self, gens) -> "MonomialIdeal":
        """Ideal from text (``"x*y, y^2"``) or an iterable of monomial specs."""
        if isinstance(gens, str):
            from .parsing import parse_ideal

            return parse_ideal(self, gens)
        return minimalize([self.monomial(g) for g in gens], ring=self)

    def unit_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, ((0,) * self.n,))

    def zero_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, ())

    def __str__(self):
        return ",".join(self.variables)


def _same_ring(a: Ring, b: Ring):
    if a != b:
        raise UsageError(f"ring mismatch: [{a}] vs [{b}]")


def _check_exps(exps, what):
    for e in exps:
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent overflow in {what}: {e} exceeds 2^63-1")


def format_exps(ring: Ring, exps: Sequence[int]) -> str:
    parts = []
    for name, e in zip(ring.variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Monomial:
    ring: Ring
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.ring.n:
            raise UsageError(
                f"monomial has {len(exps)} exponents but the ring has {self.ring.n} variables"
            )
        if any(e < 0 for e in exps):
            raise UsageError(f"negative exponent in {exps}")
        _check_exps(exps, "monomial")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset:
        return frozenset(self.ring.variables[i] for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        _same_ring(self.ring, other.ring)
        return divides(self.exponents, other.exponents)

    def gcd(self, other: "Monomial") -> "Monomial":
        _same_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(map(min, self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(map(max, self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        _same_ring(self.ring, other.ring)
        exps = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        _check_exps(exps, f"{self} * {other}")
        return Monomial(self.ring, exps)

    def __pow__(self, k: int) -> "Monomial":
        exps = tuple(e * k for e in self.exponents)
        _check_exps(exps, f"({self})^{k}")
        return Monomial(self.ring, exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact quotient; ``other`` must divide ``self``."""
        _same_ring(self.ring, other.ring)
        if not divides(other.exponents, self.exponents):
            raise UsageError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self):
        return format_exps(self.ring, self.exponents)


def divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimal_exps(exps: Iterable[Exps]) -> tuple:
    # Sorting by degree first means a divisor is always seen before its multiples.
    cands = sorted(set(exps), key=lambda e: (sum(e), e))
    kept: list = []
    for e in cands:
        for k in kept:
            if divides(k, e):
                break
        else:
            kept.append(e)
    kept.sort()
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators (exponent tuples).

    Build instances with :func:`minimalize` or :meth:`Ring.ideal`; the raw
    constructor trusts its input to already be canonical.
    """

    ring: Ring
    gens: tuple

    @property
    def n(self) -> int:
        return self.ring.n

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def generators(self) -> list:
        return [Monomial(self.ring, g) for g in self.gens]

    def max_exponents(self) -> Exps:
        """Componentwise maximum over generators (the lcm of all of them)."""
        if not self.gens:
            return (0,) * self.n
        return tuple(map(max, *self.gens)) if len(self.gens) > 1 else self.gens[0]

    def contains_exps(self, exps: Exps) -> bool:
        for g in self.gens:
            if divides(g, exps):
                return True
        return False

    def __contains__(self, m) -> bool:
        if isinstance(m, Monomial):
            _same_ring(self.ring, m.ring)
            return self.contains_exps(m.exponents)
        return self.contains_exps(tuple(m))

    # operator sugar; the module-level functions are the reference surface
    def __mul__(self, other):
        if isinstance(other, Monomial):
            other = principal(other)
        return multiply(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __pow__(self, k: int):
        return power(self, k)

    def __le__(self, other):
        return subset(self, other)

    def colon(self, other):
        if isinstance(other, Monomial):
            return colon_monomial(self, other)
        return colon_ideal(self, other)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_exps(self.ring, g) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal[{self.ring}]{self}"


def _ring_of(monos: Sequence[Monomial], ring: Ring | None) -> Ring:
    if ring is None:
        if not monos:
            raise UsageError("cannot infer the ring of an empty generator list")
        ring = monos[0].ring
    for m in monos:
        _same_ring(ring, m.ring)
    return ring


def minimalize(gens: Iterable[Monomial], ring: Ring | None = None) -> MonomialIdeal:
    """Canonical ideal generated by ``gens`` (minimal antichain, lex sorted)."""
    monos = list(gens)
    ring = _ring_of(monos, ring)
    return MonomialIdeal(ring, _minimal_exps(m.exponents for m in monos))


def from_exps(ring: Ring, exps: Iterable[Exps]) -> MonomialIdeal:
    """Like :func:`minimalize` but for raw exponent tuples."""
    exps = [tuple(e) for e in exps]
    for e in exps:
        if len(e) != ring.n or any(x < 0 for x in e):
            raise UsageError(f"bad exponent vector {e} for ring [{ring}]")
    return MonomialIdeal(ring, _minimal_exps(exps))


def principal(m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(m.ring, (m.exponents,))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I.ring, J.ring)
    return MonomialIdeal(I.ring, _minimal_exps(I.gens + J.gens))


def _product_exps(a: Exps, b: Exps, ring: Ring) -> Exps:
    e = tuple(x + y for x, y in zip(a, b))
    for x in e:
        if x > MAX_EXPONENT:
            raise ExponentOverflowError(
                f"exponent overflow in product {format_exps(ring, a)} * {format_exps(ring, b)}"
            )
    return e


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I.ring, J.ring)
    prods = [_product_exps(a, b, I.ring) for a in I.gens for b in J.gens]
    return MonomialIdeal(I.ring, _minimal_exps(prods))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by repeated multiplication, minimalizing after every step."""
    if k < 0:
        raise UsageError(f"power exponent must be >= 0, got {k}")
    result = I.ring.unit_ideal()
    for _ in range(k):
        result = multiply(result, I)
    return result


def _colon_exps(gens, m: Exps):
    return (tuple(g_i - min(g_i, m_i) for g_i, m_i in zip(g, m)) for g in gens)


def colon_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """I : m, generated by g / gcd(g, m)."""
    _same_ring(I.ring, m.ring)
    return MonomialIdeal(I.ring, _minimal_exps(_colon_exps(I.gens, m.exponents)))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J as the intersection of I : m over the generators m of J."""
    _same_ring(I.ring, J.ring)
    if J.is_zero():
        raise UsageError("colon by the zero ideal is undefined here")
    parts = [MonomialIdeal(I.ring, _minimal_exps(_colon_exps(I.gens, m))) for m in J.gens]
    return reduce(intersect, parts)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I.ring, J.ring)
    lcms = [tuple(map(max, a, b)) for a in I.gens for b in J.gens]
    return MonomialIdeal(I.ring, _minimal_exps(lcms))


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    return m in I


def subset(J: MonomialIdeal, I: MonomialIdeal) -> bool:
    """True iff J is contained in I."""
    _same_ring(I.ring, J.ring)
    return all(I.contains_exps(g) for g in J.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I.ring, J.ring)
    return I.gens == J.gens


def gcd_exps(gens) -> Exps:
    return tuple(map(min, *gens)) if len(gens) > 1 else tuple(gens[0])


def factor_gcd(I: MonomialIdeal) -> tuple:
    """Split I = f * J with f the gcd of the generators of I.

    Returns ``(f, J)`` where the generators of J have gcd 1.
    """
    if I.is_zero():
        raise UsageError("factor_gcd of the zero ideal")
    f = gcd_exps(I.gens)
    rest = [tuple(a - b for a, b in zip(g, f)) for g in I.gens]
    return Monomial(I.ring, f), MonomialIdeal(I.ring, _minimal_exps(rest))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, _minimal_exps(tuple(min(e, 1) for e in g) for g in I.gens))
