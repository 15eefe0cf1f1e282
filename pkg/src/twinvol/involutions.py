"""Twisted involutions ``S_sigma = {x : sigma(x) = x^-1}`` and their counts.

For ``sigma = (u, v)`` on D_l the count has a closed form: a rotation ``r^k``
lies in ``S_sigma`` iff ``(u + 1) k = 0 (mod l)`` and a reflection ``r^k s``
iff ``(u - 1) k = -v (mod l)``, so

    m_sigma = gcd(u + 1, l) + (gcd(u - 1, l) if gcd(u - 1, l) | v else 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, NamedTuple, Optional

from .automorphisms import (
    AutLike,
    DihedralAut,
    apply,
    check_compatible,
    enumerate_dihedral_auts,
)
from .characters import degree_sum
from .groups import Dihedral, DihedralElement, Element, GroupHandle, UnsupportedGroupError
from .numtheory import solve_linear_congruence

RECORD_FIELDS = ("group", "u", "v", "m_brute", "m_closed", "rot", "refl", "T", "ineq_holds", "equality")


class ClosedFormCount(NamedTuple):
    total: int
    rotation_part: int
    reflection_part: int


def twisted_involution_set(g: GroupHandle, sigma: AutLike) -> List[Element]:
    """Elements ``x`` of ``g`` with ``sigma(x) == x^-1``, in canonical order."""
    check_compatible(g, sigma)
    inv = g._inv
    return [x for x in g.elements() if apply(sigma, x) == inv(x)]


def twisted_involution_count(g: GroupHandle, sigma: AutLike) -> int:
    return len(twisted_involution_set(g, sigma))


def _check_params(l: int, u: int, v: int) -> None:
    if l < 3:
        raise UnsupportedGroupError(f"closed form needs l >= 3, got l={l}")
    if not 1 <= u < l or gcd(u, l) != 1 or not 0 <= v < l:
        raise ValueError(f"(u={u}, v={v}) is not an automorphism of D:{l}")


def count_closed_form(l: int, u: int, v: int) -> ClosedFormCount:
    _check_params(l, u, v)
    rot = gcd(u + 1, l)
    d1 = gcd(u - 1, l)
    refl = d1 if v % d1 == 0 else 0
    return ClosedFormCount(rot + refl, rot, refl)


def closed_form_set(l: int, u: int, v: int) -> List[DihedralElement]:
    """``S_sigma`` read off the solutions of the two linear congruences."""
    _check_params(l, u, v)
    rots = solve_linear_congruence(u + 1, 0, l).solutions
    refls = solve_linear_congruence(u - 1, -v, l).solutions
    return [DihedralElement(k, False) for k in rots] + [DihedralElement(k, True) for k in refls]


def identity_involution_count(l: int) -> int:
    if l < 3:
        raise UnsupportedGroupError(f"l must be >= 3, got {l}")
    return l + 2 if l % 2 == 0 else l + 1


def max_twisted_count(l: int) -> int:
    return max(count_closed_form(l, a.u, a.v).total for a in enumerate_dihedral_auts(l))


@dataclass(frozen=True)
class InvolutionRecord:
    """Per-automorphism verdict. ``m_closed``/``rot``/``refl`` are None off D_l."""

    group: str
    u: object
    v: Optional[int]
    m_brute: Optional[int]
    m_closed: Optional[int]
    rot: Optional[int]
    refl: Optional[int]
    T: int
    identity_count: Optional[int] = None

    @property
    def m(self) -> int:
        return self.m_closed if self.m_closed is not None else self.m_brute

    @property
    def agrees(self) -> bool:
        return self.m_brute is None or self.m_closed is None or self.m_brute == self.m_closed

    @property
    def ineq_holds(self) -> bool:
        return all(c <= self.T for c in (self.m_brute, self.m_closed) if c is not None)

    @property
    def equality(self) -> bool:
        return self.m == self.T

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "u": self.u,
            "v": self.v,
            "m_brute": self.m_brute,
            "m_closed": self.m_closed,
            "rot": self.rot,
            "refl": self.refl,
            "T": self.T,
            "ineq_holds": self.ineq_holds,
            "equality": self.equality,
        }


def make_record(g: GroupHandle, sigma, *, brute: bool = True, closed: bool = True) -> InvolutionRecord:
    """Build the record for one automorphism.

    The closed form only exists for D_l; abelian groups always use brute force.
    """
    check_compatible(g, sigma)
    T = degree_sum(g)
    params = sigma.params() if hasattr(sigma, "params") else {"u": None, "v": None}
    m_closed = rot = refl = None
    m_e = None
    if isinstance(g, Dihedral) and isinstance(sigma, DihedralAut):
        m_e = identity_involution_count(g.l)
        if closed:
            m_closed, rot, refl = count_closed_form(g.l, sigma.u, sigma.v)
    else:
        brute = True
    m_brute = twisted_involution_count(g, sigma) if brute else None
    if m_closed is None and m_brute is None:
        raise ValueError("record needs at least one counting route")
    return InvolutionRecord(g.name, params["u"], params["v"], m_brute, m_closed, rot, refl, T, m_e)
