"""Process-wide size guards, adjustable from the CLI flags."""

from dataclasses import dataclass


@dataclass
class Limits:
    max_lattice: int = 200_000  # lcm lattice elements
    max_chains: int = 50_000  # order-complex chains per ideal
    max_box: int = 10**7  # lattice points scanned for one closure


LIMITS = Limits()
