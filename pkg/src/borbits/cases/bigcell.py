"""Coefficient rigidity for big-cell representatives when w0 = -1.

For a quasi-spherical class meeting the big cell, every representative in
wdot_0 U has its non-simple coefficients determined by the simple ones, and
adjacent equal-length simple pairs allow only finitely many coefficient
pairs (both forced through a quadratic discriminant, or both zero).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

import numpy as np

from .. import bruhat, conjclass
from ..conjclass import ConjClass
from ..matgroup import MatrixGroup


@dataclass
class PairReport:
    alpha: tuple
    beta: tuple
    equal_length: bool
    pairs_seen: list
    ok: bool
    note: str = ""


@dataclass
class ScanReport:
    group: str
    n_big_cell_reps: int
    functional_ok: bool
    pair_reports: list[PairReport] = dfield(default_factory=list)
    vacuous: bool = False

    @property
    def ok(self) -> bool:
        return self.functional_ok and all(p.ok for p in self.pair_reports)


def big_cell_representatives(G: MatrixGroup, cls: ConjClass) -> list[np.ndarray]:
    """Class elements of the exact form wdot_0 * v with v upper unipotent."""
    W = G.weyl
    w0 = W.longest()
    loc = bruhat._locator(G)
    cells = loc.cells_for_codes(cls.codes)
    out = []
    for code in cls.codes[cells == loc.index_of[w0]]:
        g = G.unpack(np.array([code]))[0]
        u, w, t, v = bruhat.bruhat_factor(G, g)
        if (u == G.identity()).all() and (t == G.identity()).all():
            out.append(g)
    return out


def coefficient_scan(G: MatrixGroup, cls: ConjClass) -> ScanReport:
    """Check Lemma-style coefficient determination on one class."""
    W = G.weyl
    w0 = W.longest()
    if W.rank_one_minus(w0) != G.rs.rank:
        raise ValueError("scan applies to types where the longest element is -1")
    conjclass.analyze_class(G, cls)
    if cls.z != w0:
        raise ValueError("scan applies to classes whose maximal cell is the big cell")
    reps = big_cell_representatives(G, cls)
    if not reps:
        return ScanReport(group=repr(G), n_big_cell_reps=0, functional_ok=True, vacuous=True)
    rs = G.rs
    simples = list(rs.simple_roots)
    vectors = []
    for g in reps:
        v = G.mul(G.inv(G.weyl_rep(w0)), g)
        coeffs = dict(G.decompose_unipotent(v))
        vectors.append(coeffs)
    by_simple: dict[tuple, set] = {}
    for coeffs in vectors:
        key = tuple(coeffs[a] for a in simples)
        full = tuple(coeffs[g] for g in rs.positive_roots)
        by_simple.setdefault(key, set()).add(full)
    functional_ok = all(len(v) == 1 for v in by_simple.values())
    pair_reports = []
    for i, a in enumerate(simples):
        for b in simples[i + 1 :]:
            if rs.pairing(a, b) == 0:
                continue  # not adjacent
            equal = rs.inner(a, a) == rs.inner(b, b)
            seen = sorted({(c[a], c[b]) for c in vectors})
            if equal:
                ok = _equal_length_dichotomy(seen)
                note = "equal-length pair: both zero or both forced by the discriminant"
            else:
                # unequal lengths: the dependent coefficients are functions of
                # the simple pair (subsumed by the functional check); record it
                ab = rs.add(a, b)
                dep = [g for g in rs.positive_roots if g in (ab, rs.add(a, ab), rs.add(b, ab))]
                table: dict[tuple, set] = {}
                for c in vectors:
                    table.setdefault((c[a], c[b]), set()).add(tuple(c.get(g, 0) for g in dep))
                ok = all(len(v) == 1 for v in table.values())
                note = "unequal-length pair: dependent coefficients are a function of the pair"
            pair_reports.append(PairReport(a, b, equal, seen, ok, note))
    return ScanReport(
        group=repr(G),
        n_big_cell_reps=len(reps),
        functional_ok=functional_ok,
        pair_reports=pair_reports,
    )


def _equal_length_dichotomy(pairs_seen) -> bool:
    """Either both coefficients vanish, or both come from <= 2 forced values."""
    nonzero = [(x, y) for x, y in pairs_seen if x != 0 and y != 0]
    half_zero = [(x, y) for x, y in pairs_seen if (x == 0) != (y == 0)]
    if half_zero:
        return False
    return len({x for x, _ in nonzero}) <= 2 and len({y for _, y in nonzero}) <= 2


def scan_group(G: MatrixGroup, budget: int = 10**7) -> list[ScanReport]:
    """Coefficient scan over every quasi-spherical big-cell class of G."""
    from .. import sphericity

    W = G.weyl
    w0 = W.longest()
    out = []
    for cls in conjclass.conjugacy_classes(G, budget):
        conjclass.analyze_class(G, cls)
        if cls.z != w0:
            continue
        if not sphericity.is_quasi_spherical(G, cls):
            continue
        out.append(coefficient_scan(G, cls))
    return out
