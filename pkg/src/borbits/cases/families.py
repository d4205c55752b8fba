"""Big-cell matrix families in Sp_{2n} and SO_{2n+1}.

The symplectic family x(D, A) parametrizes big-cell representatives by a
fixed invertible diagonal D and a varying diagonal A; distinct multisets of
D^{-1}A entries give distinct characteristic polynomials.  The odd orthogonal
witnesses x(V, lambda) use the unipotent V with all entries 2 above the
diagonal and the alternating-column matrix W: the four witnesses pair
gamma != 0 with W -/+ 2I and gamma = 0 with W +/- 2I according to the parity
of n, and all have class dimension n^2 + n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import bruhat, linalg
from ..gfq import Field
from ..matgroup import MatrixGroup, build_group


def sp_family(n: int, D: list[int], A: list[int], field: Field, group: MatrixGroup | None = None):
    """The matrix (0 D; -D^{-1} -D^{-1}A) in Sp_{2n}, checked to sit in the big cell.

    D and A are diagonals (field encodings), D invertible.  Returns the
    matrix in split coordinates together with its internal-coordinate form.
    """
    if n < 2:
        raise ValueError("symplectic family needs n >= 2")
    if len(D) != n or len(A) != n:
        raise ValueError("need n diagonal entries for D and A")
    if any(v == 0 for v in D):
        raise ValueError("D must be invertible")
    F = field
    G = group if group is not None else build_group("C", n, F)
    m = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        di_inv = F.inv(D[i])
        m[i, n + i] = D[i]
        m[n + i, i] = F.neg(di_inv)
        m[n + i, n + i] = F.neg(F.mul(di_inv, A[i]))
    form = G.form_nat
    assert (F.mat_mul(F.mat_mul(m.T, form), m) == form).all(), "x(D,A) not symplectic"
    internal = G.from_natural(m)
    w = bruhat.bruhat_cell(G, internal)
    assert w == G.weyl.longest(), "x(D,A) escaped the big cell"
    return m, internal


def sp_char_poly_count(n: int, field: Field) -> tuple[int, int]:
    """(#distinct char polys of x(I, A), #multisets of diagonals) over the field."""
    from itertools import product

    F = field
    G = build_group("C", n, F)
    D = [1] * n
    polys = set()
    multisets = set()
    for A in product(range(F.q), repeat=n):
        m, _ = sp_family(n, D, list(A), F, group=G)
        polys.add(linalg.char_poly(F, m))
        multisets.add(tuple(sorted(A)))
    return len(polys), len(multisets)


@dataclass
class Witness:
    name: str
    natural: np.ndarray
    internal: np.ndarray
    in_big_cell: bool
    dim_class: int
    unipotent: bool
    jordan: tuple[int, ...] | None
    char_poly: tuple[int, ...]


def _pattern_matrices(n: int, field: Field):
    F = field
    V = np.zeros((n, n), dtype=np.int64)
    Wcol = np.zeros((n, n), dtype=np.int64)
    two = F.of_int(2)
    for i in range(n):
        V[i, i] = 1
        for j in range(n):
            if j > i:
                V[i, j] = two
            Wcol[i, j] = two if j % 2 == 0 else F.neg(two)
    return V, Wcol


def _x_of(G: MatrixGroup, n: int, V, gamma, M):
    """Assemble the product w0dot * v1 * v2 in split coordinates.

    v1 = diag(1, V, V^{-T}) and v2 is the Borel unipotent with first row
    (1, 0, gamma^T) and middle block (-gamma, I, A) where A = V^{-1} M; the
    symmetric part of A must be -gamma gamma^T / 2.
    """
    F = G.field
    d = 2 * n + 1
    Vinv = linalg.mat_inv(F, V)
    A = F.mat_mul(Vinv, M)
    gg = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            gg[i, j] = F.neg(F.mul(gamma[i], gamma[j]))
    assert (F.arr_add(A, A.T) == gg).all(), "symmetric part constraint violated"
    v1 = np.zeros((d, d), dtype=np.int64)
    v1[0, 0] = 1
    v1[1 : n + 1, 1 : n + 1] = V
    v1[n + 1 :, n + 1 :] = Vinv.T
    v2 = np.eye(d, dtype=np.int64)
    for i in range(n):
        v2[0, n + 1 + i] = gamma[i]
        v2[1 + i, 0] = F.neg(gamma[i])
    v2[1 : n + 1, n + 1 :] = A
    x = F.mat_mul(F.mat_mul(_paper_w0(G, n), v1), v2)
    form = G.form_nat
    assert (F.mat_mul(F.mat_mul(x.T, form), x) == form).all(), "witness not orthogonal"
    return x


def _paper_w0(G: MatrixGroup, n: int) -> np.ndarray:
    d = 2 * n + 1
    w0 = np.zeros((d, d), dtype=np.int64)
    w0[0, 0] = G.field.of_int((-1) ** n)
    for i in range(n):
        w0[1 + i, n + 1 + i] = 1
        w0[n + 1 + i, 1 + i] = 1
    return w0


def so_witnesses(n: int, field: Field) -> list[Witness]:
    """The big-cell witnesses of SO_{2n+1}: two per parity of n.

    Requires a square root of 2 (n even) or of -2 (n odd) in the field;
    raises otherwise, suggesting a quadratic extension.
    """
    if n not in (3, 4):
        raise ValueError("witnesses implemented for n in {3, 4}")
    F = field
    G = build_group("B", n, F)
    V, Wcol = _pattern_matrices(n, F)
    eye = np.eye(n, dtype=np.int64)
    two = F.of_int(2)
    m_minus = F.arr_add(Wcol, F.arr_mul(eye, F.neg(two)))  # W - 2I
    m_plus = F.arr_add(Wcol, F.arr_mul(eye, two))  # W + 2I
    alt = [F.of_int((-1) ** i) for i in range(n)]
    out = []
    if n % 2 == 0:
        if not F.sqrt_exists(two):
            raise ValueError("need a square root of 2; extend the field")
        zeta = F.sqrt(two)
        gamma1 = [F.mul(F.mul(two, zeta), a) for a in alt]
        specs = [("x1", gamma1, m_minus), ("x2", [0] * n, m_plus)]
    else:
        neg_two = F.neg(two)
        if not F.sqrt_exists(neg_two):
            raise ValueError("need a square root of -2; extend the field")
        xi = F.sqrt(neg_two)
        gamma3 = [F.mul(F.mul(F.neg(two), xi), a) for a in alt]
        specs = [("x3", gamma3, m_plus), ("x4", [0] * n, m_minus)]
    w0_paper = _paper_w0(G, n)
    for name, gamma, M in specs:
        x = _x_of(G, n, V, gamma, M)
        v = G.from_natural(F.mat_mul(linalg.mat_inv(F, w0_paper), x))
        in_cell = G.is_upper_unipotent(v)
        internal = G.from_natural(x)
        dim = G.class_dimension(internal)
        uni = linalg.is_unipotent(F, x)
        jordan = linalg.jordan_partition(F, x) if uni else None
        out.append(
            Witness(
                name=name,
                natural=x,
                internal=internal,
                in_big_cell=in_cell,
                dim_class=dim,
                unipotent=uni,
                jordan=jordan,
                char_poly=linalg.char_poly(F, x),
            )
        )
    return out


def block_witness_reference(n: int, field: Field) -> np.ndarray:
    """The block-diagonal comparison element diag(1, -A, -A^{-T}).

    A is unipotent upper bidiagonal with alternating (1,0,1,...) pattern on
    the first off-diagonal, starting with 1.
    """
    F = field
    A = np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        if i % 2 == 0:
            A[i, i + 1] = 1
    d = 2 * n + 1
    out = np.zeros((d, d), dtype=np.int64)
    out[0, 0] = 1
    Ai = linalg.mat_inv(F, A)
    out[1 : n + 1, 1 : n + 1] = F.arr_mul(A, F.neg(1))
    out[n + 1 :, n + 1 :] = F.arr_mul(Ai.T, F.neg(1))
    return out
