"""Conjugacy classes of G(F_q): enumeration, dimension, cell data, B-orbits.

Classes are computed as closures under conjugation by the group generators,
walking packed element codes with vectorized matrix arithmetic.  The class
dimension is the algebraic one, read off from the fixed space of the adjoint
action; cell data comes from the Bruhat module.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction
from itertools import product

import numpy as np

from . import bruhat, linalg
from .matgroup import MatrixGroup
from .weyl import WeylElement


@dataclass
class ConjClass:
    group: MatrixGroup
    rep: np.ndarray
    codes: np.ndarray  # sorted packed codes of all elements
    size: int
    dim: int = -1
    phi_image: frozenset = dfield(default_factory=frozenset)
    z: WeylElement | None = None

    def __repr__(self):
        return f"ConjClass(size={self.size}, dim={self.dim})"


def conjugation_generators(G: MatrixGroup):
    gens = G.generators()
    return [(g, G.inv(g)) for g in gens]


def conjugacy_classes(G: MatrixGroup, budget: int = 10**7) -> list[ConjClass]:
    """Partition of G(F_q) into conjugacy classes, deterministic order."""
    if G.order() > budget:
        raise ValueError(
            f"class materialization budget exceeded: |G| = {G.order()} > {budget}"
        )
    universe = G.enumerate_elements()
    labels = np.full(len(universe), -1, dtype=np.int64)
    pairs = conjugation_generators(G)
    out = []
    chunk = 1 << 16
    for seed_idx in range(len(universe)):
        if labels[seed_idx] != -1:
            continue
        label = len(out)
        labels[seed_idx] = label
        frontier = universe[seed_idx : seed_idx + 1]
        members = [frontier]
        while frontier.size:
            produced = []
            mats = G.unpack(frontier)
            for start in range(0, len(mats), chunk):
                sl = mats[start : start + chunk]
                for g, gi in pairs:
                    produced.append(G.pack(G.right_mul(G.left_mul(g, sl), gi)))
            codes = np.unique(np.concatenate(produced))
            idx = np.searchsorted(universe, codes)
            assert (universe[idx] == codes).all(), "conjugate escaped the group"
            fresh = codes[labels[idx] == -1]
            labels[np.searchsorted(universe, fresh)] = label
            members.append(fresh)
            frontier = fresh
        codes = np.sort(np.concatenate(members))
        rep = G.unpack(codes[:1])[0]
        out.append(ConjClass(G, rep, codes, len(codes)))
    assert sum(c.size for c in out) == len(universe)
    for c in out:
        assert len(universe) % c.size == 0, "class size does not divide |G|"
    return out


def class_dimension(G: MatrixGroup, x: np.ndarray) -> int:
    return G.class_dimension(x)


def phi_image(G: MatrixGroup, cls: ConjClass) -> frozenset:
    """Set of Weyl elements whose Bruhat cell meets the class."""
    if cls.phi_image:
        return cls.phi_image
    loc = bruhat._locator(G)
    cells = loc.cells_for_codes(cls.codes)
    cls.phi_image = frozenset(loc.weyl_elements[int(k)] for k in np.unique(cells))
    return cls.phi_image


def z_of_class(G: MatrixGroup, cls: ConjClass) -> WeylElement:
    """The unique Bruhat-order maximum of the phi image."""
    if cls.z is not None:
        return cls.z
    W = G.weyl
    phi = phi_image(G, cls)
    maxima = [
        w
        for w in phi
        if not any(v != w and W.bruhat_leq(w, v) for v in phi)
    ]
    if len(maxima) != 1:
        raise ValueError(
            f"phi image has {len(maxima)} maximal cells; rational-point artifact"
        )
    z = maxima[0]
    assert all(W.bruhat_leq(v, z) for v in phi), "maximum is not comparable to all cells"
    cls.z = z
    return z


def analyze_class(G: MatrixGroup, cls: ConjClass) -> ConjClass:
    if cls.dim < 0:
        cls.dim = class_dimension(G, cls.rep)
    phi_image(G, cls)
    z_of_class(G, cls)
    return cls


# -- B-orbits ------------------------------------------------------------------


def borel_generators(G: MatrixGroup):
    gens = list(G.torus_generators())
    ts = [1] if G.field.k == 1 else [1, G.field.primitive_root()]
    for g in G.rs.positive_roots:
        for t in ts:
            gens.append(G.x(g, t))
    return [(g, G.inv(g)) for g in gens]


def b_orbits(G: MatrixGroup, cls: ConjClass, budget: int = 10**9) -> list[np.ndarray]:
    """Partition of the class into B(F_q)-orbits (sorted code arrays)."""
    borel_size = (G.field.q - 1) ** G.rs.rank * G.field.q ** len(G.rs.positive_roots)
    if cls.size * borel_size > budget:
        raise ValueError(
            f"B-orbit budget exceeded: |O|*|B| = {cls.size * borel_size} > {budget}"
        )
    universe = cls.codes
    labels = np.full(len(universe), -1, dtype=np.int64)
    pairs = borel_generators(G)
    orbits = []
    chunk = 1 << 14
    for seed_idx in range(len(universe)):
        if labels[seed_idx] != -1:
            continue
        label = len(orbits)
        labels[seed_idx] = label
        frontier = universe[seed_idx : seed_idx + 1]
        members = [frontier]
        while frontier.size:
            produced = []
            mats = G.unpack(frontier)
            for start in range(0, len(mats), chunk):
                sl = mats[start : start + chunk]
                for g, gi in pairs:
                    produced.append(G.pack(G.right_mul(G.left_mul(g, sl), gi)))
            codes = np.unique(np.concatenate(produced))
            idx = np.searchsorted(universe, codes)
            assert (universe[idx] == codes).all(), "B-conjugate left the class"
            fresh = codes[labels[idx] == -1]
            labels[np.searchsorted(universe, fresh)] = label
            members.append(fresh)
            frontier = fresh
        orbits.append(np.sort(np.concatenate(members)))
    assert sum(len(o) for o in orbits) == cls.size
    return orbits


def maximal_b_orbits(G: MatrixGroup, cls: ConjClass, budget: int = 10**9):
    """The B-orbits lying inside the cell of z."""
    z = z_of_class(G, cls)
    orbits = b_orbits(G, cls, budget)
    out = []
    for orb in orbits:
        rep = G.unpack(orb[:1])[0]
        if bruhat.bruhat_cell(G, rep) == z:
            out.append(orb)
    return out


# -- centralizers and maximal representatives ------------------------------------


def centralizer_in_B(G: MatrixGroup, x: np.ndarray) -> list[np.ndarray]:
    out = []
    for b in G.borel_iter():
        if (G.mul(b, x) == G.mul(x, b)).all():
            out.append(b)
    return out


def max_cell_representative(G: MatrixGroup, cls: ConjClass) -> np.ndarray | None:
    """A class element of the form wdot * t * v (trivial U^w part) in cell z.

    Every maximal B-orbit contains one: conjugating u*wdot*t*v by u keeps the
    class and kills the U^w factor.
    """
    z = z_of_class(G, cls)
    loc = bruhat._locator(G)
    cells = loc.cells_for_codes(cls.codes)
    zidx = loc.index_of[z]
    in_cell = cls.codes[cells == zidx]
    for code in in_cell:
        g = G.unpack(np.array([code]))[0]
        u, w, t, v = bruhat.bruhat_factor(G, g)
        if (u == G.identity()).all():
            return g
        x = G.mul(G.inv(u), g, u)
        uu, ww, tt, vv = bruhat.bruhat_factor(G, x)
        if (uu == G.identity()).all():
            return x
    return None


def _int_kernel(m: np.ndarray) -> list[np.ndarray]:
    """Basis of the integer kernel of an integer matrix, via column reduction."""
    m = np.array(m, dtype=object)
    rows, cols = m.shape
    u = np.eye(cols, dtype=object)
    row = 0
    col = 0
    while row < rows and col < cols:
        active = [j for j in range(col, cols) if m[row, j] != 0]
        if not active:
            row += 1
            continue
        # euclid over the active columns until one nonzero remains
        while len(active) > 1:
            active.sort(key=lambda j: abs(m[row, j]))
            j0 = active[0]
            for j in active[1:]:
                f = m[row, j] // m[row, j0]
                m[:, j] -= f * m[:, j0]
                u[:, j] -= f * u[:, j0]
            active = [j for j in active if m[row, j] != 0]
        j0 = active[0]
        if j0 != col:
            m[:, [col, j0]] = m[:, [j0, col]]
            u[:, [col, j0]] = u[:, [j0, col]]
        row += 1
        col += 1
    out = []
    for j in range(cols):
        if not m[:, j].any():
            out.append(np.array([int(x) for x in u[:, j]], dtype=np.int64))
    return out


def torus_weyl_action(G: MatrixGroup, w: WeylElement) -> np.ndarray:
    """Integer matrix of the w-action on the torus parameter lattice."""
    E = np.array(G.cochar_exponents(), dtype=object)
    rep = G.weyl_rep(w)
    s = [int(np.argmax(rep[:, j] != 0)) for j in range(G.d)]
    Ep = np.zeros_like(E)
    for k in range(G.d):
        Ep[s[k]] = E[k]
    # solve E @ A = Ep exactly
    Ef = [[Fraction(int(v)) for v in row] for row in E]
    Epf = [[Fraction(int(v)) for v in row] for row in Ep]
    n = len(Ef[0])
    # normal equations with exact arithmetic
    gram = [[sum(Ef[r][i] * Ef[r][j] for r in range(len(Ef))) for j in range(n)] for i in range(n)]
    rhs = [[sum(Ef[r][i] * Epf[r][j] for r in range(len(Ef))) for j in range(n)] for i in range(n)]
    A = _solve_fraction(gram, rhs)
    out = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            assert A[i][j].denominator == 1
            out[i, j] = int(A[i][j])
    return out


def _solve_fraction(a, b):
    """Solve a @ x = b for square fraction matrices."""
    n = len(a)
    a = [row[:] for row in a]
    b = [row[:] for row in b]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        b[col] = [x / f for x in b[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = [x - f * y for x, y in zip(b[r], b[col])]
    return b


def torus_fixed_points(G: MatrixGroup, w: WeylElement) -> list[np.ndarray]:
    """All torus elements commuting with the representatives of w."""
    rep = G.weyl_rep(w)
    return [t for t in G.torus_iter() if (G.mul(rep, t) == G.mul(t, rep)).all()]


def torus_fixed_identity_component(G: MatrixGroup, w: WeylElement) -> list[np.ndarray]:
    """Points of the identity component of the w-fixed subtorus.

    The component is the subtorus whose cocharacter lattice is the integer
    kernel of (A_w - 1); its F_q points are generated by those cocharacters.
    """
    A = torus_weyl_action(G, w)
    n = A.shape[0]
    kernel = _int_kernel(A - np.eye(n, dtype=np.int64))
    F = G.field
    points = set()
    mats = {}
    for vals in product(list(F.units()), repeat=len(kernel)):
        params = [1] * n
        for lam, s in zip(kernel, vals):
            for i in range(n):
                params[i] = F.mul(params[i], F.pow(s, int(lam[i]) % (F.q - 1)))
        t = G.torus_diag(tuple(params))
        code = t.tobytes()
        if code not in points:
            points.add(code)
            mats[code] = t
    return list(mats.values())


@dataclass
class SandwichReport:
    ok: bool
    w: WeylElement
    lower_centralizes: bool
    bx_inside_upper: bool
    bx_size: int
    lower_size: int
    upper_size: int


def sandwich_check(G: MatrixGroup, x: np.ndarray) -> SandwichReport:
    """Check (T^w)^0 U_w <= B_x <= T^w U_w for x = wdot t v in its cell.

    x must have trivial U^w part for the group's fixed representative; the
    torus part is absorbed into the representative.
    """
    u, w, t, v = bruhat.bruhat_factor(G, x)
    if not (u == G.identity()).all():
        raise ValueError("representative must lie in wdot T U; conjugate by its u part first")
    if not G.weyl.is_involution(w):
        raise ValueError("cell of the representative is not an involution")
    F = G.field
    inv_set = G.weyl.inversion_set(w)
    uw_roots = [g for g in G.rs.positive_roots if g not in inv_set]
    tw = torus_fixed_points(G, w)
    tw0 = torus_fixed_identity_component(G, w)
    uw_elements = list(G.unipotent_iter(roots=uw_roots))
    lower_ok = True
    for s in tw0:
        for uu in uw_elements:
            g = G.mul(s, uu)
            if not (G.mul(g, x) == G.mul(x, g)).all():
                lower_ok = False
                break
        if not lower_ok:
            break
    upper = set()
    for s in tw:
        for uu in uw_elements:
            upper.add(G.mul(s, uu).tobytes())
    bx = centralizer_in_B(G, x)
    bx_ok = all(b.tobytes() in upper for b in bx)
    return SandwichReport(
        ok=lower_ok and bx_ok,
        w=w,
        lower_centralizes=lower_ok,
        bx_inside_upper=bx_ok,
        bx_size=len(bx),
        lower_size=len(tw0) * len(uw_elements),
        upper_size=len(upper),
    )


# -- structural checks on maximal representatives --------------------------------


def check_simple_ascent(G: MatrixGroup, x: np.ndarray) -> bool:
    """For simple a with w s_a > w: w fixes a, v avoids X_a, X_{+-a} commute
    with the middle factor."""
    u, w, t, v = bruhat.bruhat_factor(G, x)
    W = G.weyl
    lw = W.length(w)
    mid = G.mul(G.weyl_rep(w), t)
    for i, a in enumerate(G.rs.simple_roots):
        ws = W.mul(w, W.simple_reflections[i])
        if W.length(ws) <= lw:
            continue
        if w.act(a) != a:
            return False
        coeffs = dict(G.decompose_unipotent(v))
        if coeffs.get(a, 0) != 0:
            return False
        for root in (a, G.rs.negative(a)):
            xa = G.x(root, 1)
            if not (G.mul(xa, mid) == G.mul(mid, xa)).all():
                return False
    return True


def check_phi1_support(G: MatrixGroup, x: np.ndarray) -> bool:
    """v part of a maximal representative is supported on Phi_1."""
    u, w, t, v = bruhat.bruhat_factor(G, x)
    if not (u == G.identity()).all():
        raise ValueError("expected trivial U^w part")
    phi1 = G.weyl.phi_one(w)
    return all(c == 0 or g in phi1 for g, c in G.decompose_unipotent(v))


def check_pi_centralizer(G: MatrixGroup, x: np.ndarray) -> bool:
    """X_{-a} for a in Pi centralizes a maximal representative."""
    u, w, t, v = bruhat.bruhat_factor(G, x)
    pi = G.weyl.fixed_simple_set(w)
    for a in pi:
        na = G.rs.negative(a)
        for c in G.field.units():
            g = G.x(na, c)
            if not (G.mul(g, x) == G.mul(x, g)).all():
                return False
    return True


def torus_square_classes(G: MatrixGroup):
    """Packed codes of the squares subgroup of T(F_q)."""
    out = set()
    for t in G.torus_iter():
        out.add(G.mul(t, t).tobytes())
    return out


def check_bigcell_meeting(G: MatrixGroup, cls: ConjClass, budget: int = 10**9) -> bool:
    """Maximal B-orbits with a square torus factor meet wdot_0 U.

    Only meaningful when z is the longest element acting as -1.
    """
    z = z_of_class(G, cls)
    W = G.weyl
    if z != W.longest() or W.rank_one_minus(z) != G.rs.rank:
        raise ValueError("check applies to big-cell classes with w0 = -1")
    squares = torus_square_classes(G)
    for orb in maximal_b_orbits(G, cls, budget):
        has_square = False
        has_plain = False
        for code in orb:
            g = G.unpack(np.array([code]))[0]
            u, w, t, v = bruhat.bruhat_factor(G, g)
            if t.tobytes() in squares:
                has_square = True
            if (u == G.identity()).all() and (t == G.identity()).all():
                has_plain = True
                break
        if has_square and not has_plain:
            return False
    return True
