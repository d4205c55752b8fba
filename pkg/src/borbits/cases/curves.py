"""Families in the centralizer of a maximal representative, and flag coverage.

For x = wdot t v in its class's top cell (an involution w), each positive
root contributes centralizer elements of a prescribed shape depending on how
w moves it.  The existence statements are decided by brute-force search over
the finite field; the flag probe measures how much of each cell's coordinate
space the centralizer reaches.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import bruhat
from ..matgroup import MatrixGroup
from ..weyl import WeylElement


@dataclass
class CurveVerdict:
    gamma: tuple
    case: str
    ok: bool
    failures: int
    tested: int


def _setup(G: MatrixGroup, x: np.ndarray):
    u, w, t, v = bruhat.bruhat_factor(G, x)
    if not (u == G.identity()).all():
        raise ValueError("representative must have trivial U^w part")
    if not G.weyl.is_involution(w):
        raise ValueError("maximal cell is not an involution")
    return w


def _centralizes(G: MatrixGroup, g: np.ndarray, x: np.ndarray) -> bool:
    return bool((G.mul(g, x) == G.mul(x, g)).all())


def curve_check(G: MatrixGroup, x: np.ndarray, gamma) -> CurveVerdict:
    """Existence of centralizer elements of the stated shape for one root."""
    F = G.field
    W = G.weyl
    rs = G.rs
    w = _setup(G, x)
    pi = W.fixed_simple_set(w)
    phi1 = W.phi_one(w)
    phi_pi = W.phi_pi(pi)
    if gamma in pi:
        failures = 0
        for c in F.units():
            if not _centralizes(G, G.x(rs.negative(gamma), c), x):
                failures += 1
        return CurveVerdict(gamma, "fixed-simple", failures == 0, failures, F.q - 1)
    if gamma in phi1 and gamma in rs.simple_roots:
        # x_g(c) n_g b centralizes x for all but finitely many c, with b in
        # the Borel of the subgroup attached to the -1 eigenspace roots
        phi1_pos = [g for g in rs.positive_roots if g in phi1]
        b1 = [
            G.mul(tt, uu)
            for tt in G.torus_iter()
            for uu in G.unipotent_iter(roots=phi1_pos)
        ]
        ng = G.n_of(gamma)
        failures = 0
        for c in F.units():
            head = G.mul(G.x(gamma, c), ng)
            if not any(_centralizes(G, G.mul(head, b), x) for b in b1):
                failures += 1
        return CurveVerdict(gamma, "minus-one-simple", failures <= 2, failures, F.q - 1)
    phi2_plus = set(rs.positive_roots) - phi1 - phi_pi
    if gamma in phi2_plus:
        wg = w.act(gamma)
        nu = rs.add(gamma, wg)
        if rs.is_root(nu) and rs.height(nu) < 0:
            case = "w-image-sum-negative-root"
        elif all(v % 2 == 0 for v in nu) and rs.is_root(tuple(v // 2 for v in nu)) \
                and rs.height(nu) < 0:
            case = "w-image-sum-twice-negative-root"
        else:
            case = "w-image-sum-not-a-root"
        inv_set = W.inversion_set(w)
        uw_elements = list(G.unipotent_iter(roots=sorted(inv_set, key=rs.pos_index)))
        failures = 0
        for c in F.elements():
            head = G.x(wg, c)
            if not any(_centralizes(G, G.mul(head, u), x) for u in uw_elements):
                failures += 1
        return CurveVerdict(gamma, case, failures == 0, failures, F.q)
    raise ValueError(f"root {gamma} is not covered by the case analysis for this w")


def applicable_roots(G: MatrixGroup, x: np.ndarray) -> list:
    """Positive roots the case analysis covers for this representative."""
    W = G.weyl
    rs = G.rs
    w = _setup(G, x)
    pi = W.fixed_simple_set(w)
    phi1 = W.phi_one(w)
    phi2_plus = set(rs.positive_roots) - phi1 - W.phi_pi(pi)
    out = []
    for g in rs.positive_roots:
        if g in pi or (g in phi1 and g in rs.simple_roots) or g in phi2_plus:
            out.append(g)
    return out


@dataclass
class CoverageReport:
    cells: dict  # WeylElement -> (covered, total)

    def fraction(self, w: WeylElement) -> float:
        covered, total = self.cells[w]
        return covered / total


def flag_dominance_probe(G: MatrixGroup, x: np.ndarray, budget: int = 10**6) -> CoverageReport:
    """Per-cell coverage of flag coordinates by the centralizer of x."""
    if G.order() > budget:
        raise ValueError("group too large for the flag probe")
    codes = G.enumerate_elements()
    mats = G.unpack(codes)
    gx = G.right_mul(mats, x)
    xg = G.left_mul(x, mats)
    cent = mats[(gx == xg).all(axis=(1, 2))]
    W = G.weyl
    reached: dict[WeylElement, set] = {w: set() for w in W.elements()}
    for g in cent:
        u, w, t, v = bruhat.bruhat_factor(G, g)
        coeffs = dict(G.decompose_unipotent(u))
        key = tuple(coeffs.get(r, 0) for r in sorted(W.inversion_set(w), key=G.rs.pos_index))
        reached[w].add(key)
    cells = {
        w: (len(reached[w]), G.field.q ** W.length(w)) for w in W.elements()
    }
    return CoverageReport(cells)
