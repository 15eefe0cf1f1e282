"""Integer utilities: extended gcd, linear congruences and the gcd/lcm inequalities.

Throughout, ``gcd(0, n) == n`` (the :func:`math.gcd` convention), so congruences
with a zero coefficient have ``n`` solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import List, Optional, Tuple

DEFAULT_SOLUTION_CAP = 10**6


def egcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)`` and ``g >= 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def units(n: int) -> List[int]:
    """Residues in [1, n) coprime to ``n`` (``[0]`` for the trivial ring n = 1)."""
    if n == 1:
        return [0]
    return [w for w in range(1, n) if gcd(w, n) == 1]


def is_prime(n: int) -> bool:
    """Trial division; only used to validate the small primes campaigns run on."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class CongruenceSolution:
    """Solutions of ``a*k = c (mod n)``.

    ``solutions`` is None when ``n`` exceeds the listing cap; ``count`` is exact
    regardless.
    """

    a: int
    c: int
    n: int
    solvable: bool
    count: int
    solutions: Optional[Tuple[int, ...]]

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "c": self.c,
            "n": self.n,
            "solvable": self.solvable,
            "count": self.count,
            "solutions": None if self.solutions is None else list(self.solutions),
        }


def solve_linear_congruence(
    a: int, c: int, n: int, cap: int = DEFAULT_SOLUTION_CAP
) -> CongruenceSolution:
    """Solve ``a*k = c (mod n)`` for ``k`` in ``[0, n)``.

    Solvable iff ``d = gcd(a, n)`` divides ``c``; then there are exactly ``d``
    solutions, spaced ``n // d`` apart, built from a particular solution found
    with the extended Euclidean algorithm.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    a %= n
    c %= n
    d = gcd(a, n)
    if c % d:
        return CongruenceSolution(a, c, n, False, 0, () if n <= cap else None)
    step = n // d
    # a/d is invertible mod n/d; its inverse comes from egcd
    _, inv, _ = egcd(a // d, step)
    k0 = (c // d) * inv % step
    sols = None
    if n <= cap:
        sols = tuple(k0 + t * step for t in range(d))
        for k in sols:
            if (a * k - c) % n:
                raise AssertionError(f"bad congruence solution k={k} for {a}k={c} mod {n}")
    return CongruenceSolution(a, c, n, True, d, sols)


def check_gcd_lcm_inequality(x1: int, x2: int) -> bool:
    """``x1 + x2 <= lcm(x1, x2) + gcd(x1, x2)``; equality iff one divides the other."""
    if x1 < 1 or x2 < 1:
        raise ValueError("arguments must be positive integers")
    return x1 + x2 <= lcm(x1, x2) + gcd(x1, x2)


def check_gcd_triple_inequality(x1: int, x2: int, x3: int) -> bool:
    """``gcd(x1, x2) + gcd(x3, x2) <= x2 + gcd(x1, x3)``."""
    if min(x1, x2, x3) < 1:
        raise ValueError("arguments must be positive integers")
    return gcd(x1, x2) + gcd(x3, x2) <= x2 + gcd(x1, x3)


def gcd_of_neighbors(x1: int) -> int:
    """``gcd(x1 - 1, x1 + 1)``: 2 for odd ``x1``, 1 for even."""
    if x1 < 1:
        raise ValueError("x1 must be a natural number")
    return gcd(x1 - 1, x1 + 1)
