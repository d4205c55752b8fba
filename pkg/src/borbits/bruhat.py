"""Bruhat cell membership and the u * wdot * t * v factorization.

Cell location uses the lower-left rank pattern of the matrix relative to the
upper-triangular Borel: greedy elimination with bottom-most pivots reduces
any invertible matrix to a monomial form whose support permutation labels
the double coset.  Since the Borel is the upper-triangular part of the group
and Weyl representatives are monomial, the ambient verdict restricted to the
embedded Weyl group is the group-level answer.
"""

from __future__ import annotations

import numpy as np

from .matgroup import MatrixGroup
from .weyl import WeylElement


def bruhat_permutation(G: MatrixGroup, g: np.ndarray) -> tuple[int, ...]:
    """Support permutation sigma (col -> row) of the monomial form of g."""
    F = G.field
    m = np.array(g, dtype=np.int64)
    d = m.shape[0]
    sigma = [0] * d
    for j in range(d):
        rows = np.nonzero(m[:, j])[0]
        if rows.size == 0:
            raise ValueError("singular matrix has no Bruhat cell")
        i = int(rows[-1])
        sigma[j] = i
        piv_inv = F.inv(int(m[i, j]))
        coef = F.arr_mul(m[:, j], piv_inv)
        coef[i] = 0
        m = F.arr_add(m, F.arr_mul(F.arr_mul(coef[:, None], m[i, :][None, :]), F.neg(1)))
        rowvals = F.arr_mul(m[i, :], piv_inv)
        rowvals[: j + 1] = 0
        m = F.arr_add(m, F.arr_mul(F.arr_mul(m[:, j][:, None], rowvals[None, :]), F.neg(1)))
    return tuple(sigma)


def bruhat_permutation_batch(G: MatrixGroup, mats: np.ndarray) -> np.ndarray:
    """Vectorized support permutations for a stack of matrices (prime fields)."""
    F = G.field
    assert F.k == 1, "batched cell location runs over prime fields"
    p = F.p
    m = np.array(mats, dtype=np.int64)
    nb, d, _ = m.shape
    inv_table = np.array([0] + [pow(a, p - 2, p) for a in range(1, p)], dtype=np.int64)
    sigma = np.zeros((nb, d), dtype=np.int64)
    rows = np.arange(d, dtype=np.int64)
    batch = np.arange(nb)
    for j in range(d):
        col = m[:, :, j]
        i = ((col != 0) * (rows + 1)).argmax(axis=1)
        sigma[:, j] = i
        piv = m[batch, i, j]
        piv_inv = inv_table[piv]
        pivrow = m[batch, i, :]  # (nb, d)
        coef = (col * piv_inv[:, None]) % p
        coef[batch, i] = 0
        m = (m - coef[:, :, None] * pivrow[:, None, :]) % p
        rowvals = (m[batch, i, :] * piv_inv[:, None]) % p
        rowvals[:, : j + 1] = 0
        m = (m - m[:, :, j][:, :, None] * rowvals[:, None, :]) % p
    return sigma


class CellLocator:
    """Maps group elements to Weyl group elements via monomial supports."""

    def __init__(self, G: MatrixGroup):
        self.G = G
        self.weyl_elements = G.weyl.elements()
        self.index_of = {w: k for k, w in enumerate(self.weyl_elements)}
        self._sig_to_w: dict[tuple[int, ...], WeylElement] = {}
        for w in self.weyl_elements:
            rep = G.weyl_rep(w)
            sig = tuple(int(np.argmax(rep[:, j] != 0)) for j in range(G.d))
            assert (np.count_nonzero(rep, axis=0) == 1).all(), "Weyl rep not monomial"
            assert sig not in self._sig_to_w, "Weyl embedding not injective"
            self._sig_to_w[sig] = w
        d = G.d
        self._sig_pack = np.array([d**j for j in range(d)], dtype=np.int64)
        self._packed_map = {
            int(np.dot(np.array(s), self._sig_pack)): self.index_of[w]
            for s, w in self._sig_to_w.items()
        }

    def cell(self, g: np.ndarray) -> WeylElement:
        sig = bruhat_permutation(self.G, g)
        try:
            return self._sig_to_w[sig]
        except KeyError:
            raise AssertionError(
                "rank pattern matches no Weyl element; basis ordering is broken"
            ) from None

    def cells_batch(self, mats: np.ndarray) -> np.ndarray:
        """Indices into weyl_elements for a stack of matrices."""
        sig = bruhat_permutation_batch(self.G, mats)
        packed = sig @ self._sig_pack
        out = np.empty(len(packed), dtype=np.int64)
        for k, val in enumerate(packed):
            out[k] = self._packed_map[int(val)]
        return out

    def cells_for_codes(self, codes: np.ndarray, chunk: int = 1 << 16) -> np.ndarray:
        out = np.empty(len(codes), dtype=np.int64)
        for start in range(0, len(codes), chunk):
            sl = codes[start : start + chunk]
            out[start : start + len(sl)] = self.cells_batch(self.G.unpack(sl))
        return out


def bruhat_cell(G: MatrixGroup, g: np.ndarray) -> WeylElement:
    return _locator(G).cell(g)


def _locator(G: MatrixGroup) -> CellLocator:
    if not hasattr(G, "_cell_locator"):
        G._cell_locator = CellLocator(G)
    return G._cell_locator


def bruhat_factor(G: MatrixGroup, g: np.ndarray):
    """Factor g = u * wdot * t * v with u in U^w, t diagonal, v unipotent.

    wdot is the group's fixed representative of the cell of g; u is the
    unique U^w part for that choice.
    """
    F = G.field
    w = bruhat_cell(G, g)
    wrep = G.weyl_rep(w)
    h = G.mul(G.inv(wrep), g)
    d = G.d
    lower = np.eye(d, dtype=np.int64)
    r = np.array(h, dtype=np.int64)
    for j in range(d):
        piv = int(r[j, j])
        assert piv != 0, "LU pivot vanished inside a Bruhat cell"
        piv_inv = F.inv(piv)
        for i in range(j + 1, d):
            if r[i, j]:
                f = F.mul(int(r[i, j]), piv_inv)
                r[i] = F.arr_add(r[i], F.arr_mul(r[j], F.neg(f)))
                lower[i] = F.arr_add(lower[i], F.arr_mul(lower[j], F.neg(f)))
    l = G.inv(lower)  # h = l @ r with l unit lower triangular
    u = G.mul(wrep, l, G.inv(wrep))
    t = np.diag(np.diag(r))
    v = G.mul(G.inv(t), r)
    assert G.is_upper_unipotent(u), "u part not upper unipotent"
    assert (G.mul(u, wrep, t, v) == np.asarray(g, dtype=np.int64)).all()
    inv_set = G.weyl.inversion_set(w)
    for root, c in G.decompose_unipotent(u):
        assert c == 0 or root in inv_set, "u part supported outside the inversion set"
    return u, w, t, v


def cell_census(G: MatrixGroup, codes: np.ndarray) -> dict[WeylElement, int]:
    """Counts of elements (packed codes) per Bruhat cell."""
    loc = _locator(G)
    cells = loc.cells_for_codes(np.asarray(codes, dtype=np.int64))
    out = {}
    for k, cnt in zip(*np.unique(cells, return_counts=True)):
        out[loc.weyl_elements[int(k)]] = int(cnt)
    return out
