"""Automorphisms of D_l, Z_n and Z_n x Z_n, plus a brute-force oracle.

Dihedral convention: ``DihedralAut(u, v, l)`` is the map

    r -> r^u,   s -> r^v s,   hence   r^k -> r^(uk),   r^k s -> r^(uk + v) s,

with ``gcd(u, l) = 1`` and ``0 <= v < l``. The identity is ``(1, 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Callable, Dict, List, Mapping, Tuple, Union

from .groups import (
    Cyclic,
    Dihedral,
    DihedralElement,
    Element,
    GroupError,
    GroupHandle,
    TwoCyclic,
    UnsupportedGroupError,
)
from .numtheory import units

CONVENTION_NOTE = "convention: (u,v) denotes r -> r^u, s -> r^v s (u multiplies rotations, v shifts reflections)"

BRUTE_FORCE_MAX_ORDER = 200


class AutomorphismError(GroupError):
    pass


@dataclass(frozen=True)
class DihedralAut:
    u: int
    v: int
    l: int

    def __post_init__(self) -> None:
        if self.l < 3:
            raise UnsupportedGroupError(f"Aut(D_l) needs l >= 3, got l={self.l}")
        if not (1 <= self.u < self.l) or gcd(self.u, self.l) != 1:
            raise AutomorphismError(f"u={self.u} is not a unit in [1, {self.l})")
        if not 0 <= self.v < self.l:
            raise AutomorphismError(f"v={self.v} is outside [0, {self.l})")

    def __call__(self, x: DihedralElement) -> DihedralElement:
        if x.refl:
            return DihedralElement((self.u * x.k + self.v) % self.l, True)
        return DihedralElement(self.u * x.k % self.l, False)

    @property
    def is_identity(self) -> bool:
        return self.u == 1 and self.v == 0

    def params(self) -> dict:
        return {"u": self.u, "v": self.v}

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


@dataclass(frozen=True)
class CyclicAut:
    """``x -> w x`` on Z_n."""

    w: int
    n: int

    def __post_init__(self) -> None:
        if gcd(self.w, self.n) != 1 or not 0 <= self.w < max(self.n, 1):
            raise AutomorphismError(f"w={self.w} is not a unit modulo {self.n}")

    def __call__(self, x: int) -> int:
        return self.w * x % self.n

    @property
    def is_identity(self) -> bool:
        return self.w == 1 % self.n

    def params(self) -> dict:
        return {"u": self.w, "v": None}

    def __str__(self) -> str:
        return f"x->{self.w}x"


@dataclass(frozen=True)
class MatrixAut:
    """``(a, b) -> M (a, b)^T`` on Z_n x Z_n, with ``det M`` a unit mod n."""

    matrix: Tuple[Tuple[int, int], Tuple[int, int]]
    n: int

    def __post_init__(self) -> None:
        (a, b), (c, d) = self.matrix
        if any(not 0 <= t < self.n for t in (a, b, c, d)):
            raise AutomorphismError(f"matrix entries must be reduced mod {self.n}")
        if gcd((a * d - b * c) % self.n, self.n) != 1:
            raise AutomorphismError(f"matrix {self.matrix} is not invertible mod {self.n}")

    def __call__(self, x: Tuple[int, int]) -> Tuple[int, int]:
        (a, b), (c, d) = self.matrix
        n = self.n
        return ((a * x[0] + b * x[1]) % n, (c * x[0] + d * x[1]) % n)

    @property
    def is_identity(self) -> bool:
        return self.matrix == ((1 % self.n, 0), (0, 1 % self.n))

    def params(self) -> dict:
        return {"u": [list(row) for row in self.matrix], "v": None}

    def __str__(self) -> str:
        (a, b), (c, d) = self.matrix
        return f"[[{a},{b}],[{c},{d}]]"


Automorphism = Union[DihedralAut, CyclicAut, MatrixAut]
AutLike = Union[Automorphism, Mapping[Element, Element], Callable[[Element], Element]]


def enumerate_dihedral_auts(l: int) -> List[DihedralAut]:
    """All ``l * phi(l)`` automorphisms of D_l, sorted by ``(u, v)``."""
    if l < 3:
        raise UnsupportedGroupError(f"Aut(D_l) needs l >= 3, got l={l}")
    return [DihedralAut(u, v, l) for u in units(l) for v in range(l)]


def apply(aut: AutLike, x: Element) -> Element:
    if isinstance(aut, Mapping):
        return aut[x]
    return aut(x)


def compose(a1: DihedralAut, a2: DihedralAut) -> DihedralAut:
    """Parameters of ``a1 o a2`` (``a2`` applied first)."""
    if a1.l != a2.l:
        raise AutomorphismError(f"cannot compose automorphisms of D:{a1.l} and D:{a2.l}")
    l = a1.l
    return DihedralAut(a1.u * a2.u % l, (a1.u * a2.v + a1.v) % l, l)


def check_compatible(g: GroupHandle, aut: AutLike) -> None:
    """Raise unless ``aut`` is parametrised for the group ``g``."""
    if isinstance(aut, DihedralAut):
        ok = isinstance(g, Dihedral) and g.l == aut.l
    elif isinstance(aut, CyclicAut):
        ok = isinstance(g, Cyclic) and g.n == aut.n
    elif isinstance(aut, MatrixAut):
        ok = isinstance(g, TwoCyclic) and g.m == g.n == aut.n
    else:
        return
    if not ok:
        raise AutomorphismError(f"automorphism {aut} does not act on {g.name}")


def is_involutive(g: GroupHandle, aut: AutLike) -> bool:
    """Whether ``aut o aut`` is the identity map of ``g``."""
    if isinstance(aut, DihedralAut):
        return compose(aut, aut).is_identity
    return all(apply(aut, apply(aut, x)) == x for x in g.generators())


def enumerate_abelian_auts(g: GroupHandle) -> List[Union[CyclicAut, MatrixAut]]:
    """Units mod n for Z_n; invertible 2x2 matrices mod n for Z_n x Z_n."""
    if isinstance(g, Cyclic):
        return [CyclicAut(w, g.n) for w in units(g.n)]
    if isinstance(g, TwoCyclic) and g.m == g.n:
        n = g.n
        out = []
        for a, b, c, d in product(range(n), repeat=4):
            if gcd((a * d - b * c) % n, n) == 1:
                out.append(MatrixAut(((a, b), (c, d)), n))
        return out
    raise UnsupportedGroupError(f"no automorphism enumeration for {g.name}")


def automorphisms(g: GroupHandle) -> List[Automorphism]:
    if isinstance(g, Dihedral):
        return enumerate_dihedral_auts(g.l)
    return enumerate_abelian_auts(g)


def _extend(g: GroupHandle, gens: List[Element], images: Tuple[Element, ...]) -> Dict | None:
    """Extend generator images along the Cayley graph.

    Returns the element map if it is a well-defined bijective homomorphism.
    Consistency of ``f(x g) = f(x) f(g)`` on every edge is equivalent to being
    a homomorphism, since every element is a word in the generators.
    """
    f = {g.identity(): g.identity()}
    frontier = [g.identity()]
    while frontier:
        nxt = []
        for x in frontier:
            fx = f[x]
            for gen, img in zip(gens, images):
                y = g._mul(x, gen)
                fy = g._mul(fx, img)
                seen = f.get(y)
                if seen is None:
                    f[y] = fy
                    nxt.append(y)
                elif seen != fy:
                    return None
        frontier = nxt
    if len(f) != g.order or len(set(f.values())) != g.order:
        return None
    return f


def brute_force_auts(g: GroupHandle) -> List[Dict[Element, Element]]:
    """Every automorphism of ``g`` as an element dictionary.

    Tries each assignment of generator images that preserves element orders
    and keeps the ones that extend to a bijective homomorphism.
    """
    if g.order > BRUTE_FORCE_MAX_ORDER:
        raise UnsupportedGroupError(
            f"brute-force automorphism search is capped at order {BRUTE_FORCE_MAX_ORDER}"
        )
    gens = g.generators()
    elems = g.elements()
    orders = {x: g.element_order(x) for x in elems}
    candidates = [[x for x in elems if orders[x] == orders[gen]] for gen in gens]
    maps = []
    for images in product(*candidates):
        f = _extend(g, gens, images)
        if f is not None:
            maps.append(f)
    return maps


def aut_from_literal(g: GroupHandle, literal: str) -> Automorphism:
    """Parse an automorphism literal for ``g``.

    ``"u,v"`` for D_l, ``"w"`` for Z_n and ``"a,b,c,d"`` (row-major matrix)
    for Z_n x Z_n.
    """
    try:
        parts = [int(p) for p in literal.split(",")]
    except ValueError:
        raise AutomorphismError(f"malformed automorphism literal {literal!r}") from None
    if isinstance(g, Dihedral):
        if len(parts) != 2:
            raise AutomorphismError(f"automorphism literal {literal!r} for {g.name} must be 'u,v'")
        u, v = parts
        if gcd(u, g.l) != 1:
            raise AutomorphismError(f"u={u} in {literal!r} is not coprime to l={g.l}")
        return DihedralAut(u % g.l, v % g.l, g.l)
    if isinstance(g, Cyclic):
        if len(parts) != 1:
            raise AutomorphismError(f"automorphism literal {literal!r} for {g.name} must be 'w'")
        return CyclicAut(parts[0] % g.n, g.n)
    if isinstance(g, TwoCyclic) and g.m == g.n:
        if len(parts) != 4:
            raise AutomorphismError(f"automorphism literal {literal!r} for {g.name} must be 'a,b,c,d'")
        a, b, c, d = (p % g.n for p in parts)
        return MatrixAut(((a, b), (c, d)), g.n)
    raise UnsupportedGroupError(f"no automorphisms supported for {g.name}")


def identity_aut(g: GroupHandle) -> Automorphism:
    if isinstance(g, Dihedral):
        return DihedralAut(1, 0, g.l)
    if isinstance(g, Cyclic):
        return CyclicAut(1 % g.n, g.n)
    if isinstance(g, TwoCyclic) and g.m == g.n:
        one = 1 % g.n
        return MatrixAut(((one, 0), (0, one)), g.n)
    raise UnsupportedGroupError(f"no automorphisms supported for {g.name}")
