"""Weyl groups acting on root systems.

Elements are stored as integer matrices in the simple-root basis (column j
is the coordinate vector of the image of the j-th simple root), so equality,
composition and the action on roots are exact integer operations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from .rootsys import Root, RootSystem


class WeylElement:
    """Orthogonal transformation permuting the roots; immutable."""

    __slots__ = ("m", "_hash", "group")

    def __init__(self, group: "WeylGroup", m: tuple[tuple[int, ...], ...]):
        self.group = group
        self.m = m
        self._hash = hash(m)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.m == other.m

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.mul(self, other)

    def act(self, g: Root) -> Root:
        m = self.m
        n = len(m)
        return tuple(sum(m[i][j] * g[j] for j in range(n)) for i in range(n))

    def inverse(self) -> "WeylElement":
        return self.group.inverse(self)

    @property
    def images(self) -> tuple[Root, ...]:
        n = len(self.m)
        return tuple(tuple(self.m[i][j] for i in range(n)) for j in range(n))

    def __repr__(self):
        word = self.group.reduced_word(self)
        return "W[e]" if not word else "W[s" + " s".join(str(i + 1) for i in word) + "]"


class PhiAlphaData:
    """The two root families attached to a positive root moved by an involution."""

    __slots__ = ("base", "plus_set", "minus_set")

    def __init__(self, base: Root, plus_set: frozenset, minus_set: frozenset):
        self.base = base
        self.plus_set = plus_set
        self.minus_set = minus_set


class WeylGroup:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        self.identity = WeylElement(self, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
        self.simple_reflections = tuple(
            self._matrix_from_images(tuple(rs.reflect(a, s) for a in rs.simple_roots))
            for s in rs.simple_roots
        )
        self._bruhat_memo: dict = {}
        self._elements: tuple[WeylElement, ...] | None = None

    # -- construction helpers -------------------------------------------

    def _matrix_from_images(self, images: tuple[Root, ...]) -> WeylElement:
        n = self.rs.rank
        m = tuple(tuple(images[j][i] for j in range(n)) for i in range(n))
        return WeylElement(self, m)

    def from_word(self, word) -> WeylElement:
        w = self.identity
        for i in word:
            w = self.mul(w, self.simple_reflections[i])
        return w

    # -- group operations -------------------------------------------------

    def mul(self, w1: WeylElement, w2: WeylElement) -> WeylElement:
        n = self.rs.rank
        a, b = w1.m, w2.m
        m = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return WeylElement(self, m)

    def inverse(self, w: WeylElement) -> WeylElement:
        # integer matrix with determinant +-1; invert exactly
        m = np.array(w.m, dtype=np.int64)
        inv = np.linalg.inv(m.astype(float))
        mi = np.rint(inv).astype(np.int64)
        assert (mi @ m == np.eye(self.rs.rank, dtype=np.int64)).all()
        return WeylElement(self, tuple(tuple(int(x) for x in row) for row in mi))

    # -- lengths and order --------------------------------------------------

    def inversion_set(self, w: WeylElement) -> frozenset:
        wi = self.inverse(w)
        return frozenset(
            g for g in self.rs.positive_roots if self.rs.height(wi.act(g)) < 0
        )

    def length(self, w: WeylElement) -> int:
        return len(self.inversion_set(w))

    def descent(self, w: WeylElement) -> int | None:
        """Smallest i with l(s_i w) < l(w), or None for the identity."""
        wi = self.inverse(w)
        for i, a in enumerate(self.rs.simple_roots):
            if self.rs.height(wi.act(a)) < 0:
                return i
        return None

    def reduced_word(self, w: WeylElement) -> tuple[int, ...]:
        word = []
        while True:
            i = self.descent(w)
            if i is None:
                return tuple(word)
            word.append(i)
            w = self.mul(self.simple_reflections[i], w)

    def reflection(self, g: Root) -> WeylElement:
        return self._matrix_from_images(
            tuple(self.rs.reflect(a, g) for a in self.rs.simple_roots)
        )

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        key = (v, w)
        memo = self._bruhat_memo
        if key in memo:
            return memo[key]
        lv, lw = self.length(v), self.length(w)
        if lv > lw:
            out = False
        elif v == w:
            out = True
        elif lw == 0:
            out = False
        else:
            i = self.descent(self.inverse(w))  # l(w s_i) < l(w)
            s = self.simple_reflections[i]
            ws = self.mul(w, s)
            if self.length(self.mul(v, s)) < lv:
                out = self.bruhat_leq(self.mul(v, s), ws)
            else:
                out = self.bruhat_leq(v, ws)
        memo[key] = out
        return out

    def is_involution(self, w: WeylElement) -> bool:
        return self.mul(w, w) == self.identity

    def rank_one_minus(self, w: WeylElement) -> int:
        """Rank of 1 - w in the reflection representation, over the rationals."""
        n = self.rs.rank
        a = [[Fraction(int(i == j) - w.m[i][j]) for j in range(n)] for i in range(n)]
        rank = 0
        row = 0
        for col in range(n):
            piv = next((r for r in range(row, n) if a[r][col] != 0), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            for r in range(row + 1, n):
                f = a[r][col] / a[row][col]
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[row])]
            row += 1
            rank += 1
        return rank

    # -- enumeration -----------------------------------------------------

    def order(self) -> int:
        n = self.rs.rank
        t = self.rs.type_tag
        fact = 1
        for i in range(2, n + 1):
            fact *= i
        if t == "A":
            return fact * (n + 1)
        if t in ("B", "C"):
            return 2**n * fact
        if t == "D":
            return 2 ** (n - 1) * fact
        if t == "E":
            return {6: 51840, 7: 2903040, 8: 696729600}[n]
        return 1152 if t == "F" else 12

    def elements(self) -> tuple[WeylElement, ...]:
        if self._elements is None:
            if self.order() > 400000:
                raise ValueError("Weyl group too large to enumerate")
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for s in self.simple_reflections:
                        ws = self.mul(w, s)
                        if ws not in seen:
                            seen.add(ws)
                            nxt.append(ws)
                frontier = nxt
            self._elements = tuple(sorted(seen, key=lambda w: (self.length(w), w.m)))
            assert len(self._elements) == self.order()
        return self._elements

    def longest(self) -> WeylElement:
        return self.longest_parabolic(frozenset(self.rs.simple_roots))

    def longest_parabolic(self, pi) -> WeylElement:
        """Longest element of the parabolic subgroup generated by pi."""
        pi = frozenset(pi)
        if not pi <= set(self.rs.simple_roots):
            raise ValueError("expected a subset of the simple roots")
        w = self.identity
        while True:
            for i, a in enumerate(self.rs.simple_roots):
                if a in pi and self.rs.height(w.act(a)) > 0:
                    w = self.mul(w, self.simple_reflections[i])
                    break
            else:
                return w

    # -- combinatorial sets used by the sphericity analysis ----------------

    def theta(self, g: Root) -> Root:
        """The automorphism -w0 of the root system."""
        return self.rs.negative(self.longest().act(g))

    def fixed_simple_set(self, w: WeylElement) -> frozenset:
        return frozenset(a for a in self.rs.simple_roots if w.act(a) == a)

    def phi_one(self, w: WeylElement) -> frozenset:
        """Roots in the -1 eigenspace of an involution."""
        if not self.is_involution(w):
            raise ValueError("phi_one is defined for involutions only")
        neg = self.rs.negative
        return frozenset(g for g in self.rs.roots if w.act(g) == neg(g))

    def phi_pi(self, pi) -> frozenset:
        """Root subsystem generated by a set of simple roots: support inside pi."""
        idx = {i for i, a in enumerate(self.rs.simple_roots) if a in pi}
        return frozenset(
            g
            for g in self.rs.roots
            if all(c == 0 or i in idx for i, c in enumerate(g))
        )

    def phi_two(self, w: WeylElement) -> frozenset:
        """Roots moved to something other than plus or minus themselves."""
        neg = self.rs.negative
        return frozenset(
            g for g in self.rs.roots if w.act(g) != g and w.act(g) != neg(g)
        )

    def phi_alpha(self, w: WeylElement, alpha: Root) -> PhiAlphaData:
        """Families (j*alpha + Ker(1+w)) inside the positive/negative roots."""
        if not self.is_involution(w):
            raise ValueError("phi_alpha expects an involution")
        pi = self.fixed_simple_set(w)
        phi2_plus = (
            set(self.rs.positive_roots) - self.phi_one(w) - self.phi_pi(pi)
        )
        if alpha not in phi2_plus:
            raise ValueError("alpha must be a positive root moved off its line by w")
        base = tuple(map(int, np.add(alpha, w.act(alpha))))  # (1+w)alpha, nonzero
        plus, minus = set(), set()
        for g in self.rs.roots:
            img = tuple(map(int, np.add(g, w.act(g))))  # (1+w)g
            j = _positive_ratio(img, base)
            if j is None:
                continue
            if self.rs.height(g) > 0:
                plus.add(g)
            else:
                minus.add(g)
        return PhiAlphaData(alpha, frozenset(plus), frozenset(minus))

    def standard_involutions(self):
        """All pairs (pi, w) with w = w0 w_pi an involution fixing exactly pi.

        These are the Weyl elements that can arise as the maximal cell of a
        conjugacy class meeting only involution cells.
        """
        w0 = self.longest()
        out = []
        for r in range(self.rs.rank + 1):
            for pi_tuple in combinations(self.rs.simple_roots, r):
                pi = frozenset(pi_tuple)
                w = self.mul(w0, self.longest_parabolic(pi))
                if self.fixed_simple_set(w) == pi:
                    assert self.is_involution(w)
                    out.append((pi, w))
        return out

    def orthogonal_reflection_decomposition(self, w: WeylElement):
        """Express an involution as reflections in mutually orthogonal roots.

        Backtracking search over the roots sent to their negatives; every
        involution admits such a decomposition.
        """
        if not self.is_involution(w):
            raise ValueError("expected an involution")
        phi1_pos = sorted(
            (g for g in self.rs.positive_roots if w.act(g) == self.rs.negative(g)),
            key=lambda g: (self.rs.height(g), g),
        )

        def search(cur: WeylElement, pool: list[Root], chosen: list[Root]):
            if cur == self.identity:
                return tuple(chosen)
            for k, g in enumerate(pool):
                rest = [
                    h for h in pool[k + 1 :] if self.rs.inner(g, h) == 0
                ]
                found = search(self.mul(self.reflection(g), cur), rest, chosen + [g])
                if found is not None:
                    return found
            return None

        out = search(w, phi1_pos, [])
        if out is None:
            raise AssertionError("orthogonal decomposition failed")
        return out


def _positive_ratio(u: tuple, v: tuple) -> int | None:
    """j > 0 integer with u = j*v, if it exists."""
    j = None
    for a, b in zip(u, v):
        if b == 0:
            if a != 0:
                return None
            continue
        if a % b != 0:
            return None
        q = a // b
        if j is None:
            j = q
        elif j != q:
            return None
    return j if (j is not None and j > 0) else None
