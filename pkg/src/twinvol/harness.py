"""Verification campaigns and report writers.

Campaigns never raise on a failed check: each failure becomes a counterexample
string in the report, so one pass lists every problem. Records are sorted by a
fixed key and the written files leave out timing, so identical configs give
byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Sequence, TextIO, Tuple

from . import __version__
from .automorphisms import (
    DihedralAut,
    automorphisms,
    enumerate_dihedral_auts,
    is_involutive,
)
from .characters import (
    INTEGRALITY_TOL,
    NumericalIntegrityError,
    character_table,
    degree_sum,
    fs_indicator,
    real_degree_sum_check,
    twisted_degree_sum,
    twisted_fs_indicator,
)
from .groups import Cyclic, Dihedral, TwoCyclic
from .involutions import (
    InvolutionRecord,
    closed_form_set,
    identity_involution_count,
    make_record,
    twisted_involution_count,
    twisted_involution_set,
)
from .numtheory import is_prime, units

MAX_CLOSED_FORM_L = 1000
MAX_BRUTE_L = 60
MAX_TWISTED_L = 20
MAX_ORDER_P = 313
MAX_SMALL_ORDER_P = 31


class Family(str, Enum):
    DIHEDRAL = "dihedral"
    ORDER_P = "order-p"
    ORDER_P_SQUARED = "order-p2"
    ORDER_2P = "order-2p"
    ORDERS = "orders"  # all three order classes
    TABLE1 = "table1"
    INDICATORS = "indicators"


ORDER_CLASSES = {
    Family.ORDER_P: ("p",),
    Family.ORDER_P_SQUARED: ("p^2",),
    Family.ORDER_2P: ("2p",),
    Family.ORDERS: ("p", "p^2", "2p"),
}


@dataclass
class CampaignConfig:
    family: Family
    max_l: int = 60
    primes: Tuple[int, ...] = (2, 3, 5, 7)
    brute_cap: int = MAX_BRUTE_L
    two_cyclic_max_p: Optional[int] = None
    jobs: int = 1
    output: Optional[Path] = None
    fmt: str = "json"

    def validate(self) -> None:
        if self.jobs < 1:
            raise ValueError("parallelism must be a positive integer")
        if self.family is Family.DIHEDRAL:
            if not 3 <= self.max_l <= MAX_CLOSED_FORM_L:
                raise ValueError(f"max_l must lie in [3, {MAX_CLOSED_FORM_L}], got {self.max_l}")
            if self.brute_cap > MAX_BRUTE_L:
                raise ValueError(f"brute-force cap may not exceed {MAX_BRUTE_L}")
        if self.family is Family.INDICATORS and not 3 <= self.max_l <= MAX_TWISTED_L:
            raise ValueError(f"indicator sweeps need 3 <= max_l <= {MAX_TWISTED_L}, got {self.max_l}")
        if self.family in ORDER_CLASSES:
            for p in self.primes:
                if not is_prime(p):
                    raise ValueError(f"{p} is not prime")
                limit = MAX_ORDER_P if ORDER_CLASSES[self.family] == ("p",) else MAX_SMALL_ORDER_P
                if p > limit:
                    raise ValueError(f"prime {p} exceeds the supported bound {limit}")

    def echo(self) -> dict:
        """Config fields that shape the result (not output location or worker count)."""
        out = {"family": self.family.value}
        if self.family in (Family.DIHEDRAL, Family.INDICATORS):
            out["max_l"] = self.max_l
        if self.family is Family.DIHEDRAL:
            out["brute_cap"] = self.brute_cap
        if self.family in ORDER_CLASSES:
            out["primes"] = list(self.primes)
            out["two_cyclic_max_p"] = self.two_cyclic_max_p
        return out


@dataclass
class CampaignReport:
    config: CampaignConfig
    records: list
    counterexamples: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def summary(self) -> dict:
        return {
            "cases": len(self.records),
            "violations": len(self.counterexamples),
            "equality_cases": sum(1 for r in self.records if getattr(r, "equality", False)),
        }

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _timed(run: Callable[[CampaignConfig], CampaignReport]):
    def wrapper(cfg: CampaignConfig) -> CampaignReport:
        cfg.validate()
        start = time.perf_counter()
        report = run(cfg)
        report.wall_time = time.perf_counter() - start
        return report

    wrapper.__name__ = run.__name__
    wrapper.__doc__ = run.__doc__
    return wrapper


def _map(fn, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# -- dihedral ---------------------------------------------------------------


def _dihedral_case(args: Tuple[int, int]) -> Tuple[List[InvolutionRecord], List[str]]:
    l, brute_cap = args
    g = Dihedral(l)
    T = degree_sum(g)
    m_e = identity_involution_count(l)
    name = g.name
    brute = l <= brute_cap
    records, bad = [], []
    for u in units(l):
        rot = gcd(u + 1, l)
        d1 = gcd(u - 1, l)
        for v in range(l):
            refl = d1 if v % d1 == 0 else 0
            m_brute = twisted_involution_count(g, DihedralAut(u, v, l)) if brute else None
            rec = InvolutionRecord(name, u, v, m_brute, rot + refl, rot, refl, T, m_e)
            if not rec.agrees:
                bad.append(f"{name} ({u},{v}): brute force {m_brute} != closed form {rec.m_closed}")
            if not rec.ineq_holds:
                bad.append(f"{name} ({u},{v}): m={rec.m} exceeds T={T}")
            records.append(rec)
    if m_e != T:
        bad.append(f"{name}: identity count {m_e} != degree sum {T}")
    if records[0].m != m_e:
        bad.append(f"{name}: m at (1,0) is {records[0].m}, expected {m_e}")
    top = max(r.m for r in records)
    if top != m_e:
        bad.append(f"{name}: max over automorphisms {top} != m_e {m_e}")
    return records, bad


@_timed
def run_dihedral_campaign(cfg: CampaignConfig) -> CampaignReport:
    """Check ``m_sigma <= T(D_l)`` for every automorphism, for ``3 <= l <= max_l``.

    Counts come from the closed form; for ``l <= brute_cap`` they are also
    recomputed by brute force and compared.
    """
    results = _map(_dihedral_case, [(l, cfg.brute_cap) for l in range(3, cfg.max_l + 1)], cfg.jobs)
    records, bad = [], []
    for recs, b in results:
        records.extend(recs)
        bad.extend(b)
    cap = min(cfg.brute_cap, cfg.max_l)
    notes = [f"brute-force cross-check for l <= {cap}" if cap >= 3 else "no brute-force cross-check"]
    return CampaignReport(cfg, records, bad, notes)


# -- groups of order p, p^2, 2p ---------------------------------------------


def _groups_for_prime(p: int, classes: Iterable[str], two_cyclic_max_p: Optional[int]):
    out, notes = [], []
    for cls in classes:
        if cls == "p":
            out.append(Cyclic(p))
        elif cls == "p^2":
            out.append(Cyclic(p * p))
            if two_cyclic_max_p is None or p <= two_cyclic_max_p:
                out.append(TwoCyclic(p, p))
            else:
                notes.append(f"Z:{p}xZ:{p} skipped (two-cyclic cap p <= {two_cyclic_max_p})")
        elif cls == "2p":
            out.append(Cyclic(2 * p))
            if p == 2:
                # the non-cyclic group of order 4 is the Klein group
                if two_cyclic_max_p is None or p <= two_cyclic_max_p:
                    out.append(TwoCyclic(2, 2))
                notes.append("order 4: the dihedral case D_2 is Z:2xZ:2")
            else:
                out.append(Dihedral(p))
    seen, unique = set(), []
    for g in out:
        if g.name not in seen:
            seen.add(g.name)
            unique.append(g)
    return unique, notes


def _order_case(args) -> Tuple[List[InvolutionRecord], List[str], List[str]]:
    p, classes, two_cyclic_max_p = args
    groups, notes = _groups_for_prime(p, classes, two_cyclic_max_p)
    records, bad = [], []
    for g in groups:
        T = degree_sum(g)
        if g.is_abelian:
            n_classes = len(g.conjugacy_classes())
            if not T == g.order == n_classes:
                bad.append(f"{g.name}: T={T}, |G|={g.order}, classes={n_classes} should coincide")
        for sigma in automorphisms(g):
            rec = make_record(g, sigma, brute=True)
            if not rec.agrees:
                bad.append(f"{g.name} {sigma}: brute force {rec.m_brute} != closed form {rec.m_closed}")
            if not rec.ineq_holds:
                bad.append(f"{g.name} {sigma}: m={rec.m} exceeds T={T}")
            records.append(rec)
    return records, bad, notes


@_timed
def run_order_class_campaign(cfg: CampaignConfig) -> CampaignReport:
    """Check ``T(G) >= m_alpha`` over all automorphisms of every group of order p, p^2, 2p."""
    classes = ORDER_CLASSES[cfg.family]
    primes = sorted(set(cfg.primes))
    results = _map(_order_case, [(p, classes, cfg.two_cyclic_max_p) for p in primes], cfg.jobs)
    records, bad, notes = [], [], []
    for recs, b, n in results:
        records.extend(recs)
        bad.extend(b)
        notes.extend(n)
    if cfg.two_cyclic_max_p is not None:
        notes.append(f"two-cyclic groups capped at p <= {cfg.two_cyclic_max_p}")
    return CampaignReport(cfg, records, bad, notes)


# -- D_3 table ---------------------------------------------------------------

# label, u, v, reference set, reference count; sigma_4 sends s to sr = r^2 s
# and sigma_5 sends s to sr^2 = rs
D3_REFERENCE_ROWS = [
    ("e", 1, 0, {"s", "rs", "r^2s", "e"}, 4),
    ("sigma_1", 1, 1, {"e"}, 1),
    ("sigma_2", 1, 2, {"e"}, 1),
    ("sigma_3", 2, 0, {"e", "r", "r^2", "s"}, 4),
    ("sigma_4", 2, 2, {"e", "r", "r^2", "r^2s"}, 4),
    ("sigma_5", 2, 1, {"e", "r", "r^2", "rs"}, 4),
]


@dataclass(frozen=True)
class Table1Row:
    label: str
    image_r: str
    image_s: str
    elements: Tuple[str, ...]
    record: InvolutionRecord

    @property
    def equality(self) -> bool:
        return self.record.equality

    def to_dict(self) -> dict:
        return {"label": self.label, "image_r": self.image_r, "image_s": self.image_s,
                "S": list(self.elements), **self.record.to_dict()}


@_timed
def run_table1(cfg: CampaignConfig) -> CampaignReport:
    """The six automorphisms of D_3 with their twisted involution sets."""
    g = Dihedral(3)
    rows, bad, notes = [], [], []
    for label, u, v, ref_set, ref_m in D3_REFERENCE_ROWS:
        sigma = DihedralAut(u, v, 3)
        brute = twisted_involution_set(g, sigma)
        congruence = closed_form_set(3, u, v)
        rec = make_record(g, sigma)
        names = tuple(str(x) for x in brute)
        if sorted(brute, key=g.index) != sorted(congruence, key=g.index):
            bad.append(f"{label}: brute-force set {names} != congruence set {[str(x) for x in congruence]}")
        if rec.m != ref_m or rec.m_brute != ref_m:
            bad.append(f"{label}: m={rec.m} (brute {rec.m_brute}), reference {ref_m}")
        if set(names) != ref_set:
            notes.append(
                f"{label}: reference set {sorted(ref_set)} differs from computed {list(names)}; sizes agree"
            )
        image_r, image_s = sigma(g.generators()[0]), sigma(g.generators()[1])
        rows.append(Table1Row(label, str(image_r), str(image_s), names, rec))
    return CampaignReport(cfg, rows, bad, notes)


# -- indicators --------------------------------------------------------------


def _indicator_case(l: int) -> Tuple[list, List[str]]:
    g = Dihedral(l)
    name = g.name
    rows, bad = [], []
    try:
        table = character_table(g)
        table.check()
        eps = [fs_indicator(table, i) for i in range(len(table.labels))]
    except NumericalIntegrityError as exc:
        return rows, [f"{name}: {exc}"]
    if any(e != 1 for e in eps):
        bad.append(f"{name}: classical indicators {eps} are not all 1")
    real, involutions = real_degree_sum_check(g)
    T = degree_sum(g)
    rows.append({"group": name, "kind": "classical", "u": 1, "v": 0, "lhs": real, "rhs": involutions,
                 "indicators": eps, "ok": real == involutions == T})
    if not real == involutions == T:
        bad.append(f"{name}: real degree sum {real}, involutions {involutions}, T {T} should coincide")
    for sigma in enumerate_dihedral_auts(l):
        m = twisted_involution_count(g, sigma)
        raw_sum = twisted_degree_sum(table, sigma)
        if is_involutive(g, sigma):
            try:
                vals = [twisted_fs_indicator(table, i, sigma).value for i in range(len(table.labels))]
            except NumericalIntegrityError as exc:
                bad.append(f"{name} {sigma}: {exc}")
                continue
            lhs = sum(e * d for e, d in zip(vals, table.degrees))
            ok = lhs == m
            rows.append({"group": name, "kind": "twisted", "u": sigma.u, "v": sigma.v, "lhs": lhs, "rhs": m,
                         "indicators": vals, "ok": ok})
            if not ok:
                bad.append(f"{name} {sigma}: sum eps*deg = {lhs} != m = {m}, indicators {vals}")
        else:
            ok = abs(raw_sum - m) < INTEGRALITY_TOL
            rows.append({"group": name, "kind": "twisted-raw", "u": sigma.u, "v": sigma.v,
                         "lhs": round(raw_sum.real, 9), "rhs": m, "indicators": None, "ok": ok})
            if not ok:
                bad.append(f"{name} {sigma}: raw twisted sum {raw_sum} != m = {m}")
    return rows, bad


@_timed
def run_indicator_campaign(cfg: CampaignConfig) -> CampaignReport:
    """Classical and twisted indicator identities on D_l for ``3 <= l <= max_l``.

    For involutive ``sigma`` each twisted indicator must be -1, 0 or 1 and
    ``sum eps_sigma(chi) deg(chi) = m_sigma``; other ``sigma`` are checked on
    the raw sums only.
    """
    results = _map(_indicator_case, list(range(3, cfg.max_l + 1)), cfg.jobs)
    rows, bad = [], []
    for r, b in results:
        rows.extend(r)
        bad.extend(b)
    return CampaignReport(cfg, rows, bad, [])


RUNNERS = {
    Family.DIHEDRAL: run_dihedral_campaign,
    Family.ORDER_P: run_order_class_campaign,
    Family.ORDER_P_SQUARED: run_order_class_campaign,
    Family.ORDER_2P: run_order_class_campaign,
    Family.ORDERS: run_order_class_campaign,
    Family.TABLE1: run_table1,
    Family.INDICATORS: run_indicator_campaign,
}


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    return RUNNERS[cfg.family](cfg)


# -- writers -----------------------------------------------------------------

CSV_FIELDS = ("group", "u", "v", "m_closed", "m_brute", "rot", "refl", "T", "ineq_holds", "equality")
INDICATOR_FIELDS = ("group", "kind", "u", "v", "lhs", "rhs", "ok")


def _record_dict(rec) -> dict:
    return rec if isinstance(rec, dict) else rec.to_dict()


def write_json(report: CampaignReport, fh: TextIO) -> None:
    """Stream the report as JSON, one record per line."""
    head = {
        "tool": "twinvol",
        "version": __version__,
        "config": report.config.echo(),
        "summary": report.summary,
        "counterexamples": report.counterexamples,
        "notes": report.notes,
    }
    fh.write(json.dumps(head, indent=1)[:-2])
    fh.write(',\n "records": [')
    sep = "\n  "
    dumps = json.JSONEncoder(separators=(",", ":")).encode
    for rec in report.records:
        fh.write(sep)
        fh.write(dumps(_record_dict(rec)))
        sep = ",\n  "
    fh.write("\n ]\n}\n")


def csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return json.dumps(value, separators=(",", ":"))
    return value


def write_csv(report: CampaignReport, fh: TextIO) -> None:
    fields = INDICATOR_FIELDS if report.config.family is Family.INDICATORS else CSV_FIELDS
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(fields)
    for rec in report.records:
        d = _record_dict(rec)
        writer.writerow([csv_cell(d[f]) for f in fields])


def render_text(report: CampaignReport, max_rows: int = 200) -> str:
    out = io.StringIO()
    s = report.summary
    out.write(f"campaign: {report.config.family.value}  {json.dumps(report.config.echo())}\n")
    records = report.records
    if len(records) <= max_rows:
        for rec in records:
            d = _record_dict(rec)
            out.write("  " + "  ".join(f"{k}={csv_cell(v)}" for k, v in d.items()) + "\n")
    else:
        out.write(f"  ({len(records)} records; use --format json or csv for the full list)\n")
    for note in report.notes:
        out.write(f"note: {note}\n")
    for bad in report.counterexamples:
        out.write(f"VIOLATION: {bad}\n")
    out.write(
        f"cases={s['cases']} violations={s['violations']} equality_cases={s['equality_cases']} "
        f"wall_time={report.wall_time:.2f}s\n"
    )
    return out.getvalue()


def write_report(report: CampaignReport, path: Path, fmt: str) -> None:
    with open(path, "w", newline="") as fh:
        if fmt == "json":
            write_json(report, fh)
        elif fmt == "csv":
            write_csv(report, fh)
        else:
            fh.write(render_text(report))
