"""Chevalley basis structure constants and the commutator formula.

The antisymmetric table N[g,h] (for root pairs with g+h a root) is fixed by
choosing +(p+1) on extraspecial pairs in the height-lex root order and
propagating through the standard bilinear identities.  The coefficients of
the commutator formula

    x_g(a) x_h(b) = x_h(b) x_g(a) * prod x_{ig+jh}(c_ij a^i b^j)

are then extracted inside the adjoint representation over the integers,
which keeps them automatically consistent with every matrix realization
built from the same table.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import numpy as np

from .rootsys import Root, RootSystem


class StructureConstants:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._tbl: dict[tuple[Root, Root], int] = {}
        self._build_table()
        self._ad_cache: dict[Root, np.ndarray] = {}
        self._cc_cache: dict[tuple[Root, Root], list] = {}
        self.dim = len(rs.roots) + rs.rank

    # -- the N table -------------------------------------------------------

    def _order(self, g: Root) -> int:
        return self.rs.pos_index(g)

    def _build_table(self):
        rs = self.rs
        for eps in rs.positive_roots:
            if rs.height(eps) < 2:
                continue
            pairs = []
            for g in rs.positive_roots:
                h = rs.sub(eps, g)
                if rs.is_positive(h) and self._order(g) < self._order(h):
                    pairs.append((g, h))
            pairs.sort(key=lambda p: self._order(p[0]))
            g1, h1 = pairs[0]  # extraspecial pair: minimal first member
            self._tbl[(g1, h1)] = rs.string_down(h1, g1) + 1
            for a, b in pairs[1:]:
                val = self._derive(g1, h1, a, b)
                expect = rs.string_down(b, a) + 1
                assert abs(val) == expect, (eps, a, b, val, expect)
                self._tbl[(a, b)] = val

    def _derive(self, g1: Root, h1: Root, a: Root, b: Root) -> int:
        """Solve the four-root identity on (g1, h1, -a, -b) for N[a,b]."""
        rs = self.rs
        eps = rs.add(g1, h1)
        total = Fraction(0)
        x, y = h1, rs.negative(a)
        if rs.is_root(rs.add(x, y)):
            s = rs.add(x, y)
            total += Fraction(self.n(x, y) * self.n(g1, rs.negative(b)), rs.inner(s, s))
        x, y = rs.negative(a), g1
        if rs.is_root(rs.add(x, y)):
            s = rs.add(x, y)
            total += Fraction(self.n(x, y) * self.n(h1, rs.negative(b)), rs.inner(s, s))
        val = total * rs.inner(eps, eps) / self._tbl[(g1, h1)]
        assert val.denominator == 1
        return int(val)

    def n(self, g: Root, h: Root) -> int:
        """Structure constant N[g,h]; zero when g+h is not a root."""
        rs = self.rs
        if not rs.is_root(rs.add(g, h)):
            return 0
        gp, hp = rs.height(g) > 0, rs.height(h) > 0
        if gp and hp:
            if self._order(g) < self._order(h):
                return self._tbl[(g, h)]
            return -self._tbl[(h, g)]
        if not gp and not hp:
            return -self.n(rs.negative(g), rs.negative(h))
        if not gp:  # normalize to first-positive
            return -self.n(h, g)
        # g positive, h negative
        z = rs.negative(rs.add(g, h))
        if rs.height(rs.add(g, h)) > 0:
            # N[g,h]/(z,z) = N[h,z]/(g,g) with h, z both negative
            val = Fraction(rs.inner(z, z) * self.n(h, z), rs.inner(g, g))
        else:
            # N[g,h]/(z,z) = N[z,g]/(h,h) with z, g both positive
            val = Fraction(rs.inner(z, z) * self.n(z, g), rs.inner(h, h))
        assert val.denominator == 1
        return int(val)

    def max_commutator_coefficient(self) -> int:
        out = 0
        for g in self.rs.roots:
            for h in self.rs.roots:
                if g != h and g != self.rs.negative(h):
                    for _, _, c in self.commutator_coeffs(g, h):
                        out = max(out, abs(c))
        return out

    # -- adjoint representation over the integers ---------------------------

    def _idx(self, g: Root) -> int:
        return self.rs.root_index(g)

    def h_coords(self, g: Root) -> tuple[int, ...]:
        return self.rs.coroot_coords(g)

    def ad(self, g: Root) -> np.ndarray:
        """Matrix of ad(e_g) on the basis (e_roots..., h_1..h_n)."""
        if g in self._ad_cache:
            return self._ad_cache[g]
        rs = self.rs
        nroots = len(rs.roots)
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for d in rs.roots:
            if d == rs.negative(g):
                for j, c in enumerate(self.h_coords(g)):
                    m[nroots + j, self._idx(d)] = c
            elif d != g and rs.is_root(rs.add(g, d)):
                m[self._idx(rs.add(g, d)), self._idx(d)] = self.n(g, d)
        for j, aj in enumerate(rs.simple_roots):
            # [e_g, h_j] = -<g, alpha_j^vee> e_g
            m[self._idx(g), nroots + j] = -rs.pairing(g, aj)
        self._ad_cache[g] = m
        return m

    def ad_exp(self, g: Root, t: int) -> np.ndarray:
        """exp(t * ad(e_g)) as an integer matrix."""
        m = self.ad(g)
        out = np.eye(self.dim, dtype=np.int64)
        term = np.eye(self.dim, dtype=np.int64)
        k = 1
        while True:
            term = term @ m
            if not term.any():
                break
            div = factorial(k)
            assert (term % div == 0).all(), "adjoint divided power not integral"
            out = out + (t**k) * (term // div)
            k += 1
        return out

    def validate_jacobi(self):
        """ad is a Lie algebra homomorphism on the root part of the basis."""
        rs = self.rs
        nroots = len(rs.roots)
        for g in rs.roots:
            adg = self.ad(g)
            for h in rs.roots:
                adh = self.ad(h)
                lhs = adg @ adh - adh @ adg
                if h == rs.negative(g):
                    rhs = np.zeros_like(lhs)
                    for j, c in enumerate(self.h_coords(g)):
                        if c:
                            rhs += c * self._ad_h(j)
                elif rs.is_root(rs.add(g, h)):
                    rhs = self.n(g, h) * self.ad(rs.add(g, h))
                else:
                    rhs = np.zeros_like(lhs)
                assert (lhs == rhs).all(), (g, h)

    def _ad_h(self, j: int) -> np.ndarray:
        rs = self.rs
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for d in rs.roots:
            m[self._idx(d), self._idx(d)] = rs.pairing(d, rs.simple_roots[j])
        return m

    # -- commutator formula --------------------------------------------------

    def dependent_roots(self, g: Root, h: Root) -> list[tuple[int, int, Root]]:
        """(i, j, ig+jh) with i,j > 0 and ig+jh a root, sorted by grade i+j."""
        rs = self.rs
        out = []
        for i in range(1, 4):
            for j in range(1, 4):
                r = tuple(i * x + j * y for x, y in zip(g, h))
                if rs.is_root(r):
                    out.append((i, j, r))
        out.sort(key=lambda t: (t[0] + t[1], t[0]))
        return out

    def commutator_coeffs(self, g: Root, h: Root) -> list[tuple[int, int, int]]:
        """Integer coefficients c_ij of the reordering formula for (g, h)."""
        key = (g, h)
        if key in self._cc_cache:
            return self._cc_cache[key]
        rs = self.rs
        if not _independent(g, h):
            raise ValueError("commutator formula needs linearly independent roots")
        deps = self.dependent_roots(g, h)
        coeffs = self._peel(g, h, 1, 1, deps)
        # cross-check with a second scalar pair
        check = self._peel(g, h, 1, 2, deps)
        for (i, j, _), c, c2 in zip(deps, coeffs, check):
            assert c2 == c * (2**j), "commutator coefficient extraction inconsistent"
        out = [(i, j, c) for (i, j, _), c in zip(deps, coeffs)]
        self._cc_cache[key] = out
        return out

    def _peel(self, g: Root, h: Root, a: int, b: int, deps) -> list[int]:
        p = (
            self.ad_exp(g, -a)
            @ self.ad_exp(h, -b)
            @ self.ad_exp(g, a)
            @ self.ad_exp(h, b)
        )
        nroots = len(self.rs.roots)
        out = []
        for i, j, mu in deps:
            col = self._idx(self.rs.negative(mu))
            hc = self.h_coords(mu)
            jj = next(k for k, c in enumerate(hc) if c)
            val = p[nroots + jj, col]
            assert val % hc[jj] == 0
            t = int(val // hc[jj])
            out.append(t)
            p = self.ad_exp(mu, -t) @ p
        assert (p == np.eye(self.dim, dtype=np.int64)).all(), "peeling did not close"
        return out

    def commutator_expand(self, field, g: Root, a: int, h: Root, b: int):
        """Right-hand factors of the reordering identity over a field.

        Returns [(root, coeff)] so that x_g(a) x_h(b) equals
        x_h(b) x_g(a) times the product of x_root(coeff) in list order.
        """
        out = []
        for (i, j, c), (ii, jj, mu) in zip(
            self.commutator_coeffs(g, h), self.dependent_roots(g, h)
        ):
            val = field.mul(
                field.of_int(c), field.mul(field.pow(a, i), field.pow(b, j))
            )
            out.append((mu, val))
        return out


def _independent(g: Root, h: Root) -> bool:
    for i in range(len(g)):
        for j in range(len(g)):
            if g[i] * h[j] != g[j] * h[i]:
                return True
    return False


def n_alpha_recipe(g: Root) -> tuple[tuple[Root, int], ...]:
    """Word in root-subgroup generators whose product represents s_g."""
    neg = tuple(-x for x in g)
    return ((g, 1), (neg, -1), (g, 1))


def build_structure_constants(rs: RootSystem) -> StructureConstants:
    return StructureConstants(rs)
