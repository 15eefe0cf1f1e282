"""Exact arithmetic for the three group families used here: D_l, Z_n and Z_m x Z_n.

Elements are plain hashable values:

* dihedral: :class:`DihedralElement` ``(k, refl)`` standing for ``r^k`` or ``r^k s``,
* cyclic: an ``int`` residue in ``[0, n)``,
* two-cyclic: a ``(a, b)`` tuple of residues.

Every group lists its elements in a fixed canonical order (see
:meth:`GroupHandle.elements`), and class listings and reports follow it.
"""

from __future__ import annotations

import re
from typing import Hashable, List, NamedTuple, Tuple

Element = Hashable


class GroupError(ValueError):
    """Base class for invalid group usage."""


class UnsupportedGroupError(GroupError):
    pass


class MembershipError(GroupError):
    """An element was passed to a group it does not belong to."""


class DihedralElement(NamedTuple):
    k: int
    refl: bool = False

    def __str__(self) -> str:
        if self.k == 0:
            rot = "" if self.refl else "e"
        elif self.k == 1:
            rot = "r"
        else:
            rot = f"r^{self.k}"
        return rot + ("s" if self.refl else "")


class GroupHandle:
    """A finite group given by its carrier, multiplication, inverse and identity."""

    order: int
    name: str

    def identity(self) -> Element:
        raise NotImplementedError

    def contains(self, x: Element) -> bool:
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    def _inv(self, x):
        raise NotImplementedError

    def elements(self) -> List[Element]:
        raise NotImplementedError

    def index(self, x: Element) -> int:
        """Position of ``x`` in :meth:`elements`."""
        raise NotImplementedError

    def generators(self) -> List[Element]:
        raise NotImplementedError

    @property
    def is_abelian(self) -> bool:
        return not isinstance(self, Dihedral)

    def _check(self, x: Element) -> None:
        if not self.contains(x):
            raise MembershipError(f"{x!r} is not an element of {self.name}")

    def mul(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        return self._mul(x, y)

    def inv(self, x: Element) -> Element:
        self._check(x)
        return self._inv(x)

    def power(self, x: Element, t: int) -> Element:
        self._check(x)
        result = self.identity()
        for _ in range(t):
            result = self._mul(result, x)
        return result

    def element_order(self, x: Element) -> int:
        self._check(x)
        e = self.identity()
        y, t = x, 1
        while y != e:
            y = self._mul(y, x)
            t += 1
        return t

    def conjugacy_classes(self) -> List[Tuple[Element, ...]]:
        """Orbits of ``x -> y x y^-1``, by brute force over all pairs.

        Classes are listed in canonical element order, and so are the
        elements inside each class.
        """
        elems = self.elements()
        seen = set()
        classes = []
        for x in elems:
            if x in seen:
                continue
            orbit = {self._mul(self._mul(y, x), self._inv(y)) for y in elems}
            seen |= orbit
            classes.append(tuple(sorted(orbit, key=self.index)))
        return classes

    def format(self, x: Element) -> str:
        return str(x)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)


class Dihedral(GroupHandle):
    """D_l of order 2l, with ``s r s = r^-1``. Only ``l >= 3`` is supported."""

    def __init__(self, l: int) -> None:
        if l < 3:
            raise UnsupportedGroupError(f"dihedral groups need l >= 3, got l={l}")
        self.l = l
        self.order = 2 * l
        self.name = f"D:{l}"

    def identity(self) -> DihedralElement:
        return DihedralElement(0, False)

    def contains(self, x) -> bool:
        return isinstance(x, DihedralElement) and 0 <= x.k < self.l

    def _mul(self, x, y):
        # r^i s^a * r^j s^b = r^(i + (-1)^a j) s^(a+b)
        if x.refl:
            return DihedralElement((x.k - y.k) % self.l, not y.refl)
        return DihedralElement((x.k + y.k) % self.l, y.refl)

    def _inv(self, x):
        if x.refl:
            return x
        return DihedralElement(-x.k % self.l, False)

    def elements(self) -> List[DihedralElement]:
        """Rotations ``r^0 .. r^(l-1)``, then reflections ``s .. r^(l-1) s``."""
        return [DihedralElement(k, False) for k in range(self.l)] + [
            DihedralElement(k, True) for k in range(self.l)
        ]

    def index(self, x) -> int:
        return x.k + self.l * x.refl

    def generators(self) -> List[DihedralElement]:
        return [DihedralElement(1, False), DihedralElement(0, True)]

    def element_order(self, x) -> int:
        self._check(x)
        if x.refl:
            return 2
        t = 1
        k = x.k
        while k:
            k = (k + x.k) % self.l
            t += 1
        return t


class Cyclic(GroupHandle):
    """Z_n written additively."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise UnsupportedGroupError(f"cyclic groups need n >= 1, got n={n}")
        self.n = n
        self.order = n
        self.name = f"Z:{n}"

    def identity(self) -> int:
        return 0

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n

    def _mul(self, x, y):
        return (x + y) % self.n

    def _inv(self, x):
        return -x % self.n

    def elements(self) -> List[int]:
        return list(range(self.n))

    def index(self, x) -> int:
        return x

    def generators(self) -> List[int]:
        return [1 % self.n]


class TwoCyclic(GroupHandle):
    """Z_m x Z_n with elements ``(a, b)``, ordered lexicographically."""

    def __init__(self, m: int, n: int) -> None:
        if m < 1 or n < 1:
            raise UnsupportedGroupError(f"Z:{m}xZ:{n} has a non-positive factor")
        self.m = m
        self.n = n
        self.order = m * n
        self.name = f"Z:{m}xZ:{n}"

    def identity(self) -> Tuple[int, int]:
        return (0, 0)

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and 0 <= x[0] < self.m
            and 0 <= x[1] < self.n
        )

    def _mul(self, x, y):
        return ((x[0] + y[0]) % self.m, (x[1] + y[1]) % self.n)

    def _inv(self, x):
        return (-x[0] % self.m, -x[1] % self.n)

    def elements(self) -> List[Tuple[int, int]]:
        return [(a, b) for a in range(self.m) for b in range(self.n)]

    def index(self, x) -> int:
        return x[0] * self.n + x[1]

    def generators(self) -> List[Tuple[int, int]]:
        return [(1 % self.m, 0), (0, 1 % self.n)]


_GROUP_RE = re.compile(r"^(?:D:(\d+)|Z:(\d+)|Z:(\d+)xZ:(\d+))$")


def parse_group(literal: str) -> GroupHandle:
    """Parse ``"D:<l>"``, ``"Z:<n>"`` or ``"Z:<m>xZ:<n>"``."""
    m = _GROUP_RE.match(literal.strip())
    if not m:
        raise GroupError(f"malformed group literal {literal!r}; expected D:<l>, Z:<n> or Z:<m>xZ:<n>")
    d, z, z1, z2 = m.groups()
    if d is not None:
        return Dihedral(int(d))
    if z is not None:
        return Cyclic(int(z))
    return TwoCyclic(int(z1), int(z2))
