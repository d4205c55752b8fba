"""Exact linear algebra over F_q on integer-encoded matrices."""

from __future__ import annotations

import numpy as np

from .gfq import Field


def identity(field: Field, d: int) -> np.ndarray:
    return np.eye(d, dtype=np.int64)


def mat_mul(field: Field, *mats) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        out = field.mat_mul(out, m)
    return out


def mat_pow(field: Field, a: np.ndarray, e: int) -> np.ndarray:
    out = identity(field, a.shape[0])
    base = a
    while e:
        if e & 1:
            out = field.mat_mul(out, base)
        base = field.mat_mul(base, base)
        e >>= 1
    return out


def _eliminate(field: Field, a: np.ndarray, collect_inverse: bool = False):
    """Gauss-Jordan reduce a copy of a; returns (echelon, rank, inv, pivot cols)."""
    a = a.copy()
    rows, cols = a.shape
    inv = identity(field, rows) if collect_inverse else None
    piv_cols = []
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if a[r, col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
            if collect_inverse:
                inv[[rank, piv]] = inv[[piv, rank]]
        f = field.inv(int(a[rank, col]))
        a[rank] = field.arr_mul(a[rank], f)
        if collect_inverse:
            inv[rank] = field.arr_mul(inv[rank], f)
        for r in range(rows):
            if r != rank and a[r, col] != 0:
                c = field.neg(int(a[r, col]))
                a[r] = field.arr_add(a[r], field.arr_mul(a[rank], c))
                if collect_inverse:
                    inv[r] = field.arr_add(inv[r], field.arr_mul(inv[rank], c))
        piv_cols.append(col)
        rank += 1
        if rank == rows:
            break
    return a, rank, inv, piv_cols


def rank(field: Field, a: np.ndarray) -> int:
    return _eliminate(field, np.asarray(a, dtype=np.int64))[1]


def nullity(field: Field, a: np.ndarray) -> int:
    return a.shape[1] - rank(field, a)


def mat_inv(field: Field, a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    _, rk, inv, _ = _eliminate(field, a, collect_inverse=True)
    if rk != a.shape[0]:
        raise ValueError("matrix is singular")
    return inv


def mat_eq(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and (a == b).all()


def _hessenberg(field: Field, a: np.ndarray) -> np.ndarray:
    a = a.copy()
    n = a.shape[0]
    for j in range(n - 2):
        piv = next((r for r in range(j + 1, n) if a[r, j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            a[[j + 1, piv]] = a[[piv, j + 1]]
            a[:, [j + 1, piv]] = a[:, [piv, j + 1]]
        d = field.inv(int(a[j + 1, j]))
        for r in range(j + 2, n):
            if a[r, j] != 0:
                f = field.mul(int(a[r, j]), d)
                a[r] = field.arr_add(a[r], field.arr_mul(a[j + 1], field.neg(f)))
                a[:, j + 1] = field.arr_add(a[:, j + 1], field.arr_mul(a[:, r], f))
    return a


def char_poly(field: Field, a: np.ndarray) -> tuple[int, ...]:
    """Coefficients of det(xI - a), constant term first, monic."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    h = _hessenberg(field, a)
    polys = [np.array([1], dtype=np.int64)]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        term = np.zeros(k + 1, dtype=np.int64)
        term[1:] = prev  # x * p_{k-1}
        term[:-1] = field.arr_add(
            term[:-1], field.arr_mul(prev, field.neg(int(h[k - 1, k - 1])))
        )
        run = 1  # product of subdiagonal entries below row m
        for m in range(k - 1, 0, -1):
            run = field.mul(run, int(h[m, m - 1]))
            coeff = field.neg(field.mul(int(h[m - 1, k - 1]), run))
            if coeff:
                pm = polys[m - 1]
                term[: len(pm)] = field.arr_add(term[: len(pm)], field.arr_mul(pm, coeff))
        polys.append(term)
    return tuple(int(c) for c in polys[n])


def is_unipotent(field: Field, u: np.ndarray) -> bool:
    n = u.shape[0]
    m = field.arr_add(u, field.arr_mul(identity(field, n), field.neg(1)))
    cur = m
    for _ in range(n):
        if not cur.any():
            return True
        cur = field.mat_mul(cur, m)
    return not cur.any()


def jordan_partition(field: Field, u: np.ndarray) -> tuple[int, ...]:
    """Jordan block sizes of a unipotent matrix, descending."""
    u = np.asarray(u, dtype=np.int64)
    n = u.shape[0]
    if not is_unipotent(field, u):
        raise ValueError("matrix is not unipotent")
    m = field.arr_add(u, field.arr_mul(identity(field, n), field.neg(1)))
    nulls = [0]
    cur = identity(field, n)
    while nulls[-1] < n:
        cur = field.mat_mul(cur, m)
        nulls.append(nullity(field, cur))
    cols = [nulls[k] - nulls[k - 1] for k in range(1, len(nulls))]
    # cols is the conjugate partition: cols[s-1] counts blocks of size >= s
    sizes: list[int] = []
    for s in range(len(cols), 0, -1):
        extra = cols[s - 1] - (cols[s] if s < len(cols) else 0)
        sizes.extend([s] * extra)
    sizes.sort(reverse=True)
    assert sum(sizes) == n
    return tuple(sizes)


class BasisSolver:
    """Express vectors in the row span of a fixed full-rank basis matrix."""

    def __init__(self, field: Field, basis: np.ndarray):
        self.field = field
        self.basis = np.asarray(basis, dtype=np.int64)
        m, _ = self.basis.shape
        _, rk, _, piv_cols = _eliminate(field, self.basis)
        if rk != m:
            raise ValueError("basis rows are linearly dependent")
        self.piv = np.array(piv_cols)
        self.inv = mat_inv(field, self.basis[:, self.piv])

    def coords(self, vecs: np.ndarray) -> np.ndarray:
        """Coordinates x with x @ basis == vecs; caller guarantees membership."""
        vecs = np.asarray(vecs, dtype=np.int64)
        return self.field.mat_mul(vecs[..., self.piv], self.inv)
