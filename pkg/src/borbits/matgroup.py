"""Matrix Chevalley groups over F_q with Borel data.

Types A (SL_{n+1}), C (Sp_{2n}), B (SO_{2n+1}), D (SO_{2n}) in their natural
representations and G_2 in its 7-dimensional one.  Root-subgroup matrices are
built from simple-root generators by bracket recursion against the structure
constant table, so the commutator formula holds with the same coefficients in
every realization.  Internally the basis is sorted by weight, which makes the
Borel subgroup exactly the upper-triangular members; conversions to the
split/bilinear-form coordinates of the classical groups are provided.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import linalg
from .chevalley import StructureConstants, build_structure_constants
from .gfq import Field
from .rootsys import Root, RootSystem, build_root_system
from .weyl import WeylElement, WeylGroup

MATRIX_TYPES = ("A", "B", "C", "D", "G")


def order_formula(type_tag: str, n: int, q: int) -> int:
    if type_tag == "A":
        out = q ** (n * (n + 1) // 2)
        for i in range(2, n + 2):
            out *= q**i - 1
        return out
    if type_tag in ("B", "C"):
        out = q ** (n * n)
        for i in range(1, n + 1):
            out *= q ** (2 * i) - 1
        return out
    if type_tag == "D":
        out = q ** (n * (n - 1)) * (q**n - 1)
        for i in range(1, n):
            out *= q ** (2 * i) - 1
        return out
    if type_tag == "G":
        return q**6 * (q**6 - 1) * (q**2 - 1)
    raise ValueError(f"no matrix construction for type {type_tag}")


def _frac_zeros(d: int) -> np.ndarray:
    m = np.empty((d, d), dtype=object)
    m[:] = Fraction(0)
    return m


def _frac_entries(d: int, entries) -> np.ndarray:
    m = _frac_zeros(d)
    for i, j, v in entries:
        m[i, j] = Fraction(v)
    return m


def _natural_data(type_tag: str, n: int):
    """Simple-root generator matrices, basis permutation and bilinear form.

    Returns (d, pairs, nat_of_int, form) with pairs[i] = (e_i, f_i) in the
    natural coordinates of the classical group.
    """
    if type_tag == "A":
        d = n + 1
        pairs = [
            (_frac_entries(d, [(i, i + 1, 1)]), _frac_entries(d, [(i + 1, i, 1)]))
            for i in range(n)
        ]
        return d, pairs, list(range(d)), None
    if type_tag == "C":
        d = 2 * n
        pairs = []
        for i in range(n - 1):
            e = _frac_entries(d, [(i, i + 1, 1), (n + i + 1, n + i, -1)])
            f = _frac_entries(d, [(i + 1, i, 1), (n + i, n + i + 1, -1)])
            pairs.append((e, f))
        pairs.append(
            (_frac_entries(d, [(n - 1, 2 * n - 1, 1)]), _frac_entries(d, [(2 * n - 1, n - 1, 1)]))
        )
        form = np.zeros((d, d), dtype=np.int64)
        for i in range(n):
            form[i, n + i] = 1
            form[n + i, i] = -1
        nat_of_int = list(range(n)) + [3 * n - 1 - k for k in range(n, 2 * n)]
        return d, pairs, nat_of_int, form
    if type_tag == "B":
        d = 2 * n + 1
        pairs = []
        for i in range(1, n):
            e = _frac_entries(d, [(i, i + 1, 1), (n + i + 1, n + i, -1)])
            f = _frac_entries(d, [(i + 1, i, 1), (n + i, n + i + 1, -1)])
            pairs.append((e, f))
        e = _frac_entries(d, [(n, 0, 1), (0, 2 * n, -1)])
        f = _frac_entries(d, [(0, n, 2), (2 * n, 0, -2)])
        pairs.append((e, f))
        form = np.zeros((d, d), dtype=np.int64)
        form[0, 0] = 1
        for i in range(1, n + 1):
            form[i, n + i] = 1
            form[n + i, i] = 1
        nat_of_int = list(range(1, n + 1)) + [0] + [3 * n + 1 - k for k in range(n + 1, 2 * n + 1)]
        return d, pairs, nat_of_int, form
    if type_tag == "D":
        d = 2 * n
        pairs = []
        for i in range(n - 1):
            e = _frac_entries(d, [(i, i + 1, 1), (n + i + 1, n + i, -1)])
            f = _frac_entries(d, [(i + 1, i, 1), (n + i, n + i + 1, -1)])
            pairs.append((e, f))
        e = _frac_entries(d, [(n - 2, 2 * n - 1, 1), (n - 1, 2 * n - 2, -1)])
        f = _frac_entries(d, [(2 * n - 1, n - 2, 1), (2 * n - 2, n - 1, -1)])
        pairs.append((e, f))
        form = np.zeros((d, d), dtype=np.int64)
        for i in range(n):
            form[i, n + i] = 1
            form[n + i, i] = 1
        nat_of_int = list(range(n)) + [3 * n - 1 - k for k in range(n, 2 * n)]
        return d, pairs, nat_of_int, form
    if type_tag == "G":
        d = 7
        e_a = _frac_entries(d, [(0, 1, 1), (2, 3, 2), (3, 4, 1), (5, 6, 1)])
        f_a = _frac_entries(d, [(1, 0, 1), (3, 2, 1), (4, 3, 2), (6, 5, 1)])
        e_b = _frac_entries(d, [(1, 2, 1), (4, 5, 1)])
        f_b = _frac_entries(d, [(2, 1, 1), (5, 4, 1)])
        return d, [(e_a, f_a), (e_b, f_b)], list(range(d)), None
    raise ValueError(f"no matrix construction for type {type_tag}")


class MatrixGroup:
    def __init__(self, type_tag: str, rank: int, field: Field):
        from .gfq import is_good_odd

        if type_tag not in MATRIX_TYPES:
            raise ValueError(f"no matrix construction for type {type_tag}")
        if not is_good_odd(type_tag, field.p, rank):
            raise ValueError(
                f"characteristic {field.p} is not good and odd for type {type_tag}{rank}"
            )
        self.rs: RootSystem = build_root_system(type_tag, rank)
        self.field = field
        self.sc: StructureConstants = build_structure_constants(self.rs)
        self.weyl = WeylGroup(self.rs)
        d, pairs, nat_of_int, form = _natural_data(type_tag, rank)
        self.d = d
        self.nat_of_int = np.array(nat_of_int)
        if form is not None:
            form = np.vectorize(lambda v: field.of_int(int(v)))(form).astype(np.int64)
        self.form_nat = form
        self._build_root_vectors(pairs)
        self._weyl_reps: dict[WeylElement, np.ndarray] = {}
        self._elements: np.ndarray | None = None  # sorted packed codes
        self._lie_solver: linalg.BasisSolver | None = None
        self._pack_powers: np.ndarray | None = None

    # -- construction -------------------------------------------------------

    def _to_internal(self, m_nat: np.ndarray) -> np.ndarray:
        d = self.d
        out = np.empty((d, d), dtype=object)
        nat = self.nat_of_int
        for i in range(d):
            for j in range(d):
                out[i, j] = m_nat[nat[i], nat[j]]
        return out

    def to_natural(self, g: np.ndarray) -> np.ndarray:
        out = np.zeros_like(g)
        nat = self.nat_of_int
        out[np.ix_(nat, nat)] = g
        return out

    def from_natural(self, g: np.ndarray) -> np.ndarray:
        nat = self.nat_of_int
        return np.asarray(g)[np.ix_(nat, nat)]

    def _build_root_vectors(self, pairs):
        rs, sc = self.rs, self.sc
        e: dict[Root, np.ndarray] = {}
        for i, (em, fm) in enumerate(pairs):
            a = rs.simple_roots[i]
            e[a] = self._to_internal(em)
            e[rs.negative(a)] = self._to_internal(fm)
        for g in rs.positive_roots:
            if rs.height(g) < 2:
                continue
            i, a = next(
                (i, a)
                for i, a in enumerate(rs.simple_roots)
                if rs.is_positive(rs.sub(g, a))
            )
            b = rs.sub(g, a)
            e[g] = (e[a] @ e[b] - e[b] @ e[a]) / Fraction(sc.n(a, b))
            na, nb, ng = rs.negative(a), rs.negative(b), rs.negative(g)
            e[ng] = (e[na] @ e[nb] - e[nb] @ e[na]) / Fraction(sc.n(na, nb))
        self._e_frac = e
        self._h_frac = {
            a: e[a] @ e[rs.negative(a)] - e[rs.negative(a)] @ e[a]
            for a in rs.simple_roots
        }
        # divided powers reduced into the field
        eye = _frac_zeros(self.d)
        for i in range(self.d):
            eye[i, i] = Fraction(1)
        self._powers: dict[Root, list[np.ndarray]] = {}
        for g, m in e.items():
            out = []
            cur = eye
            k = 0
            while True:
                k += 1
                cur = cur @ m / Fraction(k)
                if not cur.any():
                    break
                assert k <= 3, "unexpected nilpotency depth"
                out.append(self._reduce(cur))
            self._powers[g] = out
        for g in rs.positive_roots:
            assert (np.tril(self._powers[g][0], -1) == 0).all(), (
                "positive root vector not upper triangular",
                g,
            )

    def _reduce(self, m_frac: np.ndarray) -> np.ndarray:
        F = self.field
        d = self.d
        out = np.zeros((d, d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                v = m_frac[i, j]
                if v:
                    out[i, j] = F.mul(F.of_int(v.numerator), F.inv(F.of_int(v.denominator)))
        return out

    def verify_chevalley_basis(self):
        """Brackets of the realized root vectors match the structure constants."""
        rs, sc = self.rs, self.sc
        e = self._e_frac
        hs = self._h_frac
        for g in rs.roots:
            for h in rs.roots:
                br = e[g] @ e[h] - e[h] @ e[g]
                if h == rs.negative(g):
                    want = _frac_zeros(self.d)
                    for j, c in enumerate(sc.h_coords(g)):
                        if c:
                            want = want + c * hs[rs.simple_roots[j]]
                elif rs.is_root(rs.add(g, h)):
                    want = sc.n(g, h) * e[rs.add(g, h)]
                else:
                    want = _frac_zeros(self.d)
                assert (br == want).all(), (g, h)

    # -- basic elements ------------------------------------------------------

    def identity(self) -> np.ndarray:
        return np.eye(self.d, dtype=np.int64)

    @property
    def form_int(self) -> np.ndarray | None:
        """Invariant bilinear form in internal coordinates, field-encoded."""
        if not hasattr(self, "_form_int"):
            if self.form_nat is not None:
                self._form_int = self.from_natural(self.form_nat)
            elif self.rs.type_tag == "G":
                self._form_int = self._solve_invariant_form()
            else:
                self._form_int = None
        return self._form_int

    def _solve_invariant_form(self) -> np.ndarray:
        """Symmetric matrix killed by all simple root vectors, scaled integral."""
        d = self.d
        gens = []
        for a in self.rs.simple_roots:
            gens.append(self._e_frac[a])
            gens.append(self._e_frac[self.rs.negative(a)])
        # unknowns: symmetric F via pairs (i, j), i <= j
        idx = {(i, j): k for k, (i, j) in enumerate(
            (i, j) for i in range(d) for j in range(i, d))}
        rows = []
        for X in gens:
            for i in range(d):
                for j in range(d):
                    row = [Fraction(0)] * len(idx)
                    for k in range(d):
                        if X[k, i]:
                            a, b = min(k, j), max(k, j)
                            row[idx[(a, b)]] += X[k, i]
                        if X[k, j]:
                            a, b = min(i, k), max(i, k)
                            row[idx[(a, b)]] += X[k, j]
                    if any(row):
                        rows.append(row)
        sol = _fraction_nullspace(rows, len(idx))
        assert len(sol) == 1, "invariant form is not unique up to scale"
        vec = sol[0]
        den = 1
        for v in vec:
            den = den * v.denominator // _gcd(den, v.denominator)
        ints = [int(v * den) for v in vec]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        ints = [v // g for v in ints]
        F = self.field
        out = np.zeros((d, d), dtype=np.int64)
        for (i, j), k in idx.items():
            out[i, j] = out[j, i] = F.of_int(ints[k])
        return out

    def x(self, g: Root, t: int) -> np.ndarray:
        """Root subgroup element x_g(t)."""
        F = self.field
        out = self.identity()
        tk = 1
        for mk in self._powers[g]:
            tk = F.mul(tk, t)
            if tk:
                out = F.arr_add(out, F.arr_mul(mk, tk))
        return out

    def mul(self, *mats) -> np.ndarray:
        return linalg.mat_mul(self.field, *mats)

    def inv(self, g: np.ndarray) -> np.ndarray:
        return linalg.mat_inv(self.field, g)

    def n_of(self, g: Root, t: int = 1) -> np.ndarray:
        """Weyl representative n_g(t) = x_g(t) x_{-g}(-1/t) x_g(t)."""
        F = self.field
        ti = F.inv(t)
        return self.mul(
            self.x(g, t), self.x(self.rs.negative(g), F.neg(ti)), self.x(g, t)
        )

    def h_of(self, g: Root, t: int) -> np.ndarray:
        return self.mul(self.n_of(g, t), self.inv(self.n_of(g, 1)))

    def weyl_rep(self, w: WeylElement) -> np.ndarray:
        """Fixed representative of w: the n_alpha product over the reduced word."""
        if w in self._weyl_reps:
            return self._weyl_reps[w]
        out = self.identity()
        for i in self.weyl.reduced_word(w):
            out = self.mul(out, self.n_of(self.rs.simple_roots[i]))
        self._weyl_reps[w] = out
        return out

    # -- torus and Borel -------------------------------------------------------

    def torus_diag(self, params: tuple[int, ...]) -> np.ndarray:
        """Torus element from unit parameters, one per simple coordinate."""
        F = self.field
        t = self.rs.type_tag
        n = self.rs.rank
        if t == "A":
            prod = 1
            for v in params:
                prod = F.mul(prod, v)
            diag = list(params) + [F.inv(prod)]
        elif t in ("C", "D"):
            diag = list(params) + [F.inv(v) for v in reversed(params)]
        elif t == "B":
            diag = list(params) + [1] + [F.inv(v) for v in reversed(params)]
        else:  # G: params are the values of the two simple characters
            u, v = params
            top = [F.mul(F.mul(u, u), v), F.mul(u, v), u]
            diag = top + [1] + [F.inv(x) for x in reversed(top)]
        out = np.zeros((self.d, self.d), dtype=np.int64)
        for i, v in enumerate(diag):
            out[i, i] = v
        return out

    def torus_iter(self):
        from itertools import product

        units = list(self.field.units())
        for params in product(units, repeat=self.rs.rank):
            yield self.torus_diag(params)

    def cochar_exponents(self) -> list[list[int]]:
        """Integer exponents of each diagonal position in the torus parameters."""
        t = self.rs.type_tag
        n = self.rs.rank
        unit = lambda i: [int(j == i) for j in range(n)]
        neg = lambda v: [-x for x in v]
        if t == "A":
            return [unit(i) for i in range(n)] + [[-1] * n]
        if t in ("C", "D"):
            return [unit(i) for i in range(n)] + [neg(unit(n - 1 - k)) for k in range(n)]
        if t == "B":
            return (
                [unit(i) for i in range(n)]
                + [[0] * n]
                + [neg(unit(n - 1 - k)) for k in range(n)]
            )
        top = [[2, 1], [1, 1], [1, 0]]
        return top + [[0, 0]] + [neg(v) for v in reversed(top)]

    def torus_generators(self) -> list[np.ndarray]:
        g = self.field.primitive_root()
        out = []
        for i in range(self.rs.rank):
            params = tuple(g if j == i else 1 for j in range(self.rs.rank))
            out.append(self.torus_diag(params))
        return out

    def generators(self) -> list[np.ndarray]:
        out = []
        for a in self.rs.simple_roots:
            for g in (a, self.rs.negative(a)):
                if self.field.k == 1:
                    out.append(self.x(g, 1))
                else:
                    gen = self.field.primitive_root()
                    out.append(self.x(g, 1))
                    out.append(self.x(g, gen))
        out.extend(self.torus_generators())
        return out

    def unipotent_iter(self, roots=None, negative=False):
        """All products of root subgroup elements over the given positive roots."""
        from itertools import product

        if roots is None:
            roots = self.rs.positive_roots
        roots = list(roots)
        if negative:
            roots = [self.rs.negative(g) for g in roots]
        for coeffs in product(range(self.field.q), repeat=len(roots)):
            out = self.identity()
            for g, c in zip(roots, coeffs):
                if c:
                    out = self.mul(out, self.x(g, c))
            yield out

    def borel_iter(self):
        us = list(self.unipotent_iter())
        for t in self.torus_iter():
            for u in us:
                yield self.field.mat_mul(t, u)

    def is_upper_unipotent(self, g: np.ndarray) -> bool:
        return (np.tril(g, -1) == 0).all() and (np.diag(g) == 1).all()

    def is_in_borel(self, g: np.ndarray) -> bool:
        return bool((np.tril(g, -1) == 0).all())

    # -- unipotent coordinates ---------------------------------------------------

    def _read_positions(self):
        if not hasattr(self, "_read_pos"):
            pos = {}
            for g in self.rs.roots:
                m1 = self._powers[g][0]
                idx = np.argwhere(m1 != 0)[0]
                pos[g] = (int(idx[0]), int(idx[1]), int(m1[idx[0], idx[1]]))
            self._read_pos = pos
        return self._read_pos

    def decompose_unipotent(self, u: np.ndarray, negative: bool = False):
        """Coefficients (root, c) with u equal to the ordered product of x_root(c).

        Positive part follows the fixed height-lex order; the negative part
        mirrors it.
        """
        F = self.field
        roots = list(self.rs.positive_roots)
        if negative:
            if not (np.triu(u, 1) == 0).all() or not (np.diag(u) == 1).all():
                raise ValueError("not lower unipotent")
            roots = [self.rs.negative(g) for g in roots]
        else:
            if not self.is_upper_unipotent(u):
                raise ValueError("not upper unipotent")
        pos = self._read_positions()
        out = []
        cur = u
        for g in roots:
            i, j, base = pos[g]
            c = F.mul(int(cur[i, j]), F.inv(base))
            out.append((g, c))
            if c:
                cur = F.mat_mul(self.x(g, F.neg(c)), cur)
        assert (cur == self.identity()).all(), "unipotent decomposition did not close"
        return out

    def compose(self, coeffs) -> np.ndarray:
        out = self.identity()
        for g, c in coeffs:
            if c:
                out = self.mul(out, self.x(g, c))
        return out

    def decompose_in_order(self, u: np.ndarray, roots) -> dict[Root, int] | None:
        """Coefficients of u as an ordered product over the given roots.

        Returns None when u does not lie in the stated product set.  Each
        peel step requires the current root not to be a sum of two or more
        of the remaining ones (with multiplicities), so that its matrix
        entry is uncontaminated; violations raise instead of mis-reading.
        """
        F = self.field
        roots = list(roots)
        pos = self._read_positions()
        out: dict[Root, int] = {}
        cur = np.array(u, dtype=np.int64)
        for idx, g in enumerate(roots):
            if _sum_expressible(g, roots[idx + 1 :]):
                raise ValueError(f"reading order unsafe at {g}")
            i, j, base = pos[g]
            c = F.mul(int(cur[i, j]), F.inv(base))
            out[g] = c
            if c:
                cur = F.mat_mul(self.x(g, F.neg(c)), cur)
        if not (cur == self.identity()).all():
            return None
        return out

    # -- adjoint action -----------------------------------------------------------

    @property
    def dim_group(self) -> int:
        return len(self.rs.roots) + self.rs.rank

    def _lie_basis(self):
        if self._lie_solver is None:
            mats = [self._reduce(self._e_frac[g]) for g in self.rs.roots]
            mats += [self._reduce(self._h_frac[a]) for a in self.rs.simple_roots]
            basis = np.stack([m.reshape(-1) for m in mats])
            self._lie_solver = linalg.BasisSolver(self.field, basis)
            self._lie_mats = mats
        return self._lie_solver, self._lie_mats

    def adjoint_action(self, g: np.ndarray) -> np.ndarray:
        """Matrix of Ad(g) on the Chevalley basis of the Lie algebra."""
        solver, mats = self._lie_basis()
        gi = self.inv(g)
        conj = np.stack(
            [self.mul(g, m, gi).reshape(-1) for m in mats]
        )
        return solver.coords(conj)

    def class_dimension(self, x: np.ndarray) -> int:
        """dim G minus the fixed-space dimension of Ad(x)."""
        ad = self.adjoint_action(x)
        d = ad.shape[0]
        fixed = linalg.nullity(
            self.field, self.field.arr_add(ad, self.field.arr_mul(np.eye(d, dtype=np.int64), self.field.neg(1)))
        )
        return self.dim_group - fixed

    # -- packing and enumeration ----------------------------------------------------

    def _powers_vec(self) -> np.ndarray:
        if self._pack_powers is None:
            q = self.field.q
            n = self.d * self.d
            if q**n > 2**62:
                raise ValueError("matrices too large to pack for enumeration")
            self._pack_powers = (q ** np.arange(n, dtype=object)).astype(np.int64)
        return self._pack_powers

    def pack(self, mats: np.ndarray) -> np.ndarray:
        mats = np.asarray(mats, dtype=np.int64)
        flat = mats.reshape(-1, self.d * self.d)
        return flat @ self._powers_vec()

    def unpack(self, codes: np.ndarray) -> np.ndarray:
        q = self.field.q
        n = self.d * self.d
        codes = np.asarray(codes, dtype=np.int64)
        out = np.empty((len(codes), n), dtype=np.int64)
        cur = codes.copy()
        for i in range(n):
            out[:, i] = cur % q
            cur //= q
        return out.reshape(-1, self.d, self.d)

    def order(self) -> int:
        return order_formula(self.rs.type_tag, self.rs.rank, self.field.q)

    def right_mul(self, mats: np.ndarray, g: np.ndarray) -> np.ndarray:
        return self.field.mat_mul(mats, g)

    def left_mul(self, g: np.ndarray, mats: np.ndarray) -> np.ndarray:
        if self.field.k == 1:
            return (g @ mats) % self.field.p
        swapped = self.field.mat_mul(mats.transpose(0, 2, 1), g.T)
        return swapped.transpose(0, 2, 1)

    def enumerate_elements(self, budget: int = 10**8) -> np.ndarray:
        """Sorted packed codes of all group elements, by generator closure."""
        if self._elements is not None:
            return self._elements
        expected = self.order()
        if expected > budget:
            raise ValueError(
                f"enumeration budget exceeded: |G| = {expected} > {budget}"
            )
        gens = self.generators()
        visited = self.pack(self.identity()[None])
        frontier = visited.copy()
        chunk = 1 << 18
        while frontier.size:
            mats = self.unpack(frontier)
            produced = []
            for start in range(0, len(mats), chunk):
                sl = mats[start : start + chunk]
                for g in gens:
                    produced.append(self.pack(self.right_mul(sl, g)))
            codes = np.unique(np.concatenate(produced))
            idx = np.searchsorted(visited, codes)
            idx[idx == len(visited)] = 0
            new = codes[visited[idx] != codes]
            if new.size:
                visited = np.sort(np.concatenate([visited, new]))
            frontier = new
        if len(visited) != expected:
            raise AssertionError(
                f"enumvisited {len(visited)} elements, expected {expected}"
            )
        self._elements = visited
        return visited

    def __repr__(self):
        names = {"A": "SL", "B": "SO", "C": "Sp", "D": "SO", "G": "G2"}
        t, n, q = self.rs.type_tag, self.rs.rank, self.field.q
        if t == "G":
            return f"G2({q})"
        size = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t]
        return f"{names[t]}{size}({q})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _sum_expressible(target: Root, pool, _total: int = 0) -> bool:
    """Whether target = sum of pool roots with multiplicities, >= 2 terms."""
    if all(v == 0 for v in target):
        return _total >= 2
    if not pool:
        return False
    head, rest = pool[0], pool[1:]
    cur = target
    m = 0
    while True:
        if _sum_expressible(cur, rest, _total + m):
            return True
        cur = tuple(a - b for a, b in zip(cur, head))
        m += 1
        # heights strictly accumulate, so depth is bounded
        if m > 12:
            return False


def _fraction_nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the solution space of a homogeneous fraction system."""
    a = [row[:] for row in rows]
    piv_of_col: dict[int, int] = {}
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        f = a[r][col]
        a[r] = [x / f for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                g = a[i][col]
                a[i] = [x - g * y for x, y in zip(a[i], a[r])]
        piv_of_col[col] = r
        r += 1
    out = []
    free = [c for c in range(ncols) if c not in piv_of_col]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for col, row in piv_of_col.items():
            vec[col] = -a[row][fc]
        out.append(vec)
    return out


def build_group(type_tag: str, rank: int, field: Field) -> MatrixGroup:
    return MatrixGroup(type_tag, rank, field)
