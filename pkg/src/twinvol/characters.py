"""Character tables, degree sums and (twisted) Frobenius-Schur indicators.

Character values are floating point. Anything the theory forces to be an
integer is rounded and the rounding residual is checked against
``INTEGRALITY_TOL``; a breach means the table is wrong, so it raises.

The twisted indicator of an irreducible character ``chi`` with respect to an
automorphism ``sigma`` is ``(1/|G|) sum_g chi(g sigma(g))``. With
``sigma = id`` it is the classical indicator ``(1/|G|) sum_g chi(g^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import cos, pi
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from .automorphisms import AutLike, apply, check_compatible, is_involutive
from .groups import Cyclic, Dihedral, Element, GroupHandle, TwoCyclic, UnsupportedGroupError

INTEGRALITY_TOL = 1e-6
ORTHOGONALITY_TOL = 1e-9


class NumericalIntegrityError(ArithmeticError):
    pass


@dataclass
class CharacterTable:
    group: GroupHandle
    classes: List[Tuple[Element, ...]]
    labels: List[str]
    chars: np.ndarray  # (irreducible, class)
    class_of: Dict[Element, int] = field(repr=False)

    @property
    def degrees(self) -> List[int]:
        return [int(round(c.real)) for c in self.chars[:, self.class_of[self.group.identity()]]]

    @property
    def class_sizes(self) -> np.ndarray:
        return np.array([len(c) for c in self.classes])

    def value(self, irrep: int, x: Element) -> complex:
        return self.chars[irrep, self.class_of[x]]

    def inner_products(self) -> np.ndarray:
        """Gram matrix ``<chi_i, chi_j>``; the identity for a correct table."""
        weighted = self.chars * self.class_sizes
        return weighted @ self.chars.conj().T / self.group.order

    def check(self) -> None:
        if len(self.labels) != len(self.classes):
            raise NumericalIntegrityError("irreducible count differs from class count")
        if sum(d * d for d in self.degrees) != self.group.order:
            raise NumericalIntegrityError("sum of squared degrees differs from |G|")
        gram = self.inner_products()
        if np.max(np.abs(gram - np.eye(len(self.labels)))) > ORTHOGONALITY_TOL:
            raise NumericalIntegrityError(f"row orthogonality fails for {self.group.name}")


def _class_index(classes) -> Dict[Element, int]:
    return {x: i for i, cls in enumerate(classes) for x in cls}


def dihedral_character_table(l: int) -> CharacterTable:
    """Real character table of D_l.

    Linear characters: trivial and sign (-1 on reflections); for even l also
    the two with ``r -> -1``. Two-dimensional ``rho_j``: ``2 cos(2 pi j m / l)``
    on ``r^m`` and 0 on reflections, for ``1 <= j < l/2``.
    """
    g = Dihedral(l)
    classes = g.conjugacy_classes()
    reps = [c[0] for c in classes]

    def sgn(x):
        return -1.0 if x.refl else 1.0

    def alt(x):
        return -1.0 if x.k % 2 else 1.0

    linear = [("triv", lambda x: 1.0), ("sign", sgn)]
    if l % 2 == 0:
        linear += [("alt", alt), ("alt_sign", lambda x: alt(x) * sgn(x))]
    labels, rows = [], []
    for name, f in linear:
        labels.append(name)
        rows.append([f(x) for x in reps])
    for j in range(1, (l - 1) // 2 + 1):
        labels.append(f"rho_{j}")
        rows.append([0.0 if x.refl else 2 * cos(2 * pi * j * x.k / l) for x in reps])
    return CharacterTable(g, classes, labels, np.array(rows, dtype=float), _class_index(classes))


def abelian_character_table(g: GroupHandle) -> CharacterTable:
    """Characters ``x -> exp(2 pi i <j, x>)`` indexed like the elements."""
    elems = g.elements()
    classes = [(x,) for x in elems]
    if isinstance(g, Cyclic):
        phase = np.array([[j * x / g.n for x in elems] for j in elems])
        labels = [f"chi_{j}" for j in elems]
    elif isinstance(g, TwoCyclic):
        phase = np.array(
            [[j[0] * x[0] / g.m + j[1] * x[1] / g.n for x in elems] for j in elems]
        )
        labels = [f"chi_{j[0]}_{j[1]}" for j in elems]
    else:
        raise UnsupportedGroupError(f"{g.name} is not abelian")
    return CharacterTable(g, classes, labels, np.exp(2j * pi * phase), _class_index(classes))


def character_table(g: GroupHandle) -> CharacterTable:
    if isinstance(g, Dihedral):
        return dihedral_character_table(g.l)
    return abelian_character_table(g)


def degree_sum(g: GroupHandle) -> int:
    """Sum of the degrees of the irreducible complex representations."""
    if isinstance(g, Dihedral):
        return g.l + 2 if g.l % 2 == 0 else g.l + 1
    if isinstance(g, (Cyclic, TwoCyclic)):
        return g.order
    raise UnsupportedGroupError(f"no degree sum for {g!r}")


class IndicatorValue(NamedTuple):
    value: Optional[int]  # None when sigma^2 != id
    raw: complex
    integral: bool

    def as_json(self):
        if self.integral:
            return self.value
        if abs(self.raw.imag) < INTEGRALITY_TOL:
            return round(self.raw.real, 12)
        return {"re": round(self.raw.real, 12), "im": round(self.raw.imag, 12)}


def _indicator_sum(table: CharacterTable, irrep: int, sigma: Optional[AutLike]) -> complex:
    g = table.group
    idx = []
    for x in g.elements():
        y = x if sigma is None else apply(sigma, x)
        idx.append(table.class_of[g._mul(x, y)])
    return complex(table.chars[irrep, idx].sum()) / g.order


def _round_indicator(raw: complex, what: str) -> int:
    value = int(round(raw.real))
    if abs(raw - value) > INTEGRALITY_TOL or value not in (-1, 0, 1):
        raise NumericalIntegrityError(f"{what}: raw sum {raw!r} is not in {{-1, 0, 1}}")
    return value


def fs_indicator(table: CharacterTable, irrep: int) -> int:
    raw = _indicator_sum(table, irrep, None)
    return _round_indicator(raw, f"indicator of {table.labels[irrep]}")


def twisted_fs_indicator(table: CharacterTable, irrep: int, sigma: AutLike) -> IndicatorValue:
    """Twisted indicator; integral (and in {-1, 0, 1}) only when ``sigma^2 = id``."""
    check_compatible(table.group, sigma)
    raw = _indicator_sum(table, irrep, sigma)
    if is_involutive(table.group, sigma):
        what = f"twisted indicator of {table.labels[irrep]} under {sigma}"
        return IndicatorValue(_round_indicator(raw, what), raw, True)
    return IndicatorValue(None, raw, False)


def twisted_degree_sum(table: CharacterTable, sigma: AutLike) -> complex:
    """``sum_chi eps_sigma(chi) deg(chi)``, from the raw indicator sums."""
    return sum(
        _indicator_sum(table, i, sigma) * d for i, d in enumerate(table.degrees)
    )


def real_degree_sum_check(g: GroupHandle) -> Tuple[int, int]:
    """(sum of degrees of real-type irreducibles, number of x with x^2 = e)."""
    table = character_table(g)
    real = sum(d for i, d in enumerate(table.degrees) if fs_indicator(table, i) == 1)
    e = g.identity()
    involutions = sum(1 for x in g.elements() if g._mul(x, x) == e)
    return real, involutions


def indicator_report(table: CharacterTable, auts) -> List[dict]:
    """One row per irreducible: degree, classical indicator and twisted values."""
    rows = []
    for i, (label, deg) in enumerate(zip(table.labels, table.degrees)):
        twisted = []
        for sigma in auts:
            val = twisted_fs_indicator(table, i, sigma)
            twisted.append({**sigma.params(), "value": val.as_json(), "integral": val.integral})
        rows.append({"irrep": label, "degree": deg, "epsilon": fs_indicator(table, i), "twisted": twisted})
    return rows
