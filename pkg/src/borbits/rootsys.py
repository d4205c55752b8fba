"""Irreducible root systems with exact integer arithmetic.

Roots are integer coordinate tuples in the simple-root basis, with the
Bourbaki numbering of simple roots.  The bilinear form is normalized so
that short roots have squared length 2 (simply-laced systems count as
all-short).  Positive roots carry a fixed height-then-lexicographic
ordering that downstream code treats as immutable.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

Root = tuple[int, ...]

RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# classical positive-root counts, used as a construction sanity check
def _positive_count(type_tag: str, n: int) -> int:
    if type_tag == "A":
        return n * (n + 1) // 2
    if type_tag in ("B", "C"):
        return n * n
    if type_tag == "D":
        return n * (n - 1)
    if type_tag == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    return 24 if type_tag == "F" else 6


def _cartan_and_lengths(type_tag: str, n: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix ``c[i][j] = <alpha_i, alpha_j^vee>`` and half squared lengths."""
    c = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def join(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    d = [1] * n
    if type_tag == "A":
        for i in range(n - 1):
            join(i, i + 1)
    elif type_tag == "B":
        # alpha_n short, the rest long
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 2, n - 1, cij=-2, cji=-1)
        d = [2] * (n - 1) + [1]
    elif type_tag == "C":
        # alpha_n long, the rest short
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 2, n - 1, cij=-1, cji=-2)
        d = [1] * (n - 1) + [2]
    elif type_tag == "D":
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 3, n - 1)
    elif type_tag == "E":
        # Bourbaki: chain 1-3-4-5-...-n with 2 attached to 4
        for i, j in zip([0] + list(range(2, n - 1)), [2] + list(range(3, n))):
            join(i, j)
        join(1, 3)
    elif type_tag == "F":
        join(0, 1)
        join(1, 2, cij=-2, cji=-1)
        join(2, 3)
        d = [2, 2, 1, 1]
    elif type_tag == "G":
        # alpha_1 short, alpha_2 long
        join(0, 1, cij=-1, cji=-3)
        d = [1, 3]
    return c, d


class RootSystem:
    """Root datum of an irreducible type, immutable after construction."""

    def __init__(self, type_tag: str, rank: int):
        if type_tag not in RANK_RANGE:
            raise ValueError(f"unknown type {type_tag!r}")
        lo, hi = RANK_RANGE[type_tag]
        if rank < lo or (hi is not None and rank > hi):
            raise ValueError(f"invalid rank {rank} for type {type_tag}")
        self.type_tag = type_tag
        self.rank = rank
        cartan, d = _cartan_and_lengths(type_tag, rank)
        self.cartan = tuple(tuple(row) for row in cartan)
        self.d = tuple(d)
        # gram[i][j] = (alpha_i, alpha_j) = d_j * cartan[i][j]
        self.gram = tuple(
            tuple(d[j] * cartan[i][j] for j in range(rank)) for i in range(rank)
        )
        for i in range(rank):
            for j in range(rank):
                assert self.gram[i][j] == self.gram[j][i], "gram not symmetric"
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(int(i == j) for j in range(rank)) for i in range(rank)
        )
        self.positive_roots = self._close_positive()
        assert len(self.positive_roots) == _positive_count(type_tag, rank)
        self.roots: tuple[Root, ...] = self.positive_roots + tuple(
            self.negative(g) for g in self.positive_roots
        )
        self._root_set = frozenset(self.roots)
        self._pos_index = {g: i for i, g in enumerate(self.positive_roots)}
        self._root_index = {g: i for i, g in enumerate(self.roots)}

    # -- construction -------------------------------------------------

    def _close_positive(self) -> tuple[Root, ...]:
        found = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for g in frontier:
                for a in self.simple_roots:
                    # alpha-string through g: g + a is a root iff q = r - <g,a^vee> > 0,
                    # where r counts how far the string descends.  All roots of
                    # smaller height are already known, so membership is decidable.
                    r = 0
                    cur = self.sub(g, a)
                    while cur in found or self.negative(cur) in found:
                        r += 1
                        cur = self.sub(cur, a)
                    if r - self.pairing(g, a) > 0:
                        s = self.add(g, a)
                        if s not in found:
                            found.add(s)
                            nxt.append(s)
            frontier = nxt
        return tuple(sorted(found, key=lambda g: (self.height(g), g)))

    # -- elementwise vector helpers ------------------------------------

    @staticmethod
    def add(g: Root, h: Root) -> Root:
        return tuple(x + y for x, y in zip(g, h))

    @staticmethod
    def sub(g: Root, h: Root) -> Root:
        return tuple(x - y for x, y in zip(g, h))

    @staticmethod
    def negative(g: Root) -> Root:
        return tuple(-x for x in g)

    @staticmethod
    def height(g: Root) -> int:
        return sum(g)

    # -- root queries ---------------------------------------------------

    def is_root(self, g: Root) -> bool:
        return g in self._root_set

    def is_positive(self, g: Root) -> bool:
        return self.height(g) > 0 and g in self._root_set

    def inner(self, g: Root, h: Root) -> int:
        return sum(
            g[i] * h[j] * self.gram[i][j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def pairing(self, g: Root, h: Root) -> int:
        """Cartan pairing <g, h^vee> = 2(g,h)/(h,h); integer for roots."""
        num = 2 * self.inner(g, h)
        den = self.inner(h, h)
        assert num % den == 0
        return num // den

    def reflect(self, g: Root, h: Root) -> Root:
        """Image of g under the reflection in h."""
        if not (self.is_root(g) and self.is_root(h)):
            raise ValueError("reflect expects two roots of the system")
        out = self.sub(g, tuple(self.pairing(g, h) * x for x in h))
        assert out in self._root_set
        return out

    def is_long(self, g: Root) -> bool:
        return self.inner(g, g) > 2

    def is_short(self, g: Root) -> bool:
        return self.inner(g, g) == 2

    def pos_index(self, g: Root) -> int:
        return self._pos_index[g]

    def root_index(self, g: Root) -> int:
        return self._root_index[g]

    def coroot_coords(self, g: Root) -> tuple[int, ...]:
        """Coordinates of g^vee in the simple-coroot basis."""
        gg = self.inner(g, g)
        out = []
        for i in range(self.rank):
            num = 2 * g[i] * self.d[i]
            assert num % gg == 0
            out.append(num // gg)
        return tuple(out)

    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def string_down(self, g: Root, h: Root) -> int:
        """Largest p with g - p*h a root (the descending part of the h-string)."""
        p = 0
        cur = self.sub(g, h)
        while cur in self._root_set:
            p += 1
            cur = self.sub(cur, h)
        return p

    def gram_matrix(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    def __repr__(self):
        return f"RootSystem({self.type_tag}{self.rank})"


@lru_cache(maxsize=None)
def build_root_system(type_tag: str, rank: int) -> RootSystem:
    return RootSystem(type_tag, rank)
