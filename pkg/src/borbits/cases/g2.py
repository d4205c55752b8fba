"""The G_2 case analysis: explicit conjugation chains over small fields.

Every chain starts from a representative whose centralizer has prescribed
type, conjugates by stated root-subgroup elements, kills coefficients one by
one (searching the field for the suitable scalar), and certifies that the
final element sits in a Bruhat cell whose Weyl element is not an involution.
Together the chains rule out quasi-sphericity for every class the explicit
analysis covers.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

import numpy as np

from .. import bruhat, linalg
from ..gfq import Field, make_field
from ..matgroup import MatrixGroup, build_group

A = (1, 0)  # short simple root
B = (0, 1)  # long simple root


def _neg(r):
    return tuple(-x for x in r)


@dataclass
class StepVerdict:
    chain: str
    step: str
    ok: bool
    q: int
    detail: dict = dfield(default_factory=dict)


class ChainError(AssertionError):
    pass


class _Chain:
    def __init__(self, G: MatrixGroup, name: str, verdicts: list):
        self.G = G
        self.name = name
        self.verdicts = verdicts

    def record(self, step: str, ok: bool, **detail):
        self.verdicts.append(StepVerdict(self.name, step, ok, self.G.field.q, detail))
        if not ok:
            raise ChainError(f"{self.name}: {step}")

    def lower_form(self, x, s, roots):
        """Coefficients of x in s * prod X_root, or None."""
        G = self.G
        y = G.mul(G.inv(s), x)
        return G.decompose_in_order(y, roots)

    def conjugate(self, g, x):
        G = self.G
        return G.mul(g, x, G.inv(g))

    def kill(self, x, s, lever, after_roots, step):
        """Conjugate by a suitable lever element so x lands in the stated form."""
        G = self.G
        for h in G.field.elements():
            g = G.x(lever, h)
            x2 = self.conjugate(g, x)
            coeffs = self.lower_form(x2, s, after_roots)
            if coeffs is not None:
                self.record(step, True, h=h, coeffs={str(k): v for k, v in coeffs.items()})
                return x2, coeffs
        self.record(step, False, lever=str(lever))

    def cell_is(self, x, word_roots, step, involution_expected=False):
        G = self.G
        W = G.weyl
        expect = W.identity
        for r in word_roots:
            expect = W.mul(expect, W.reflection(r))
        got = bruhat.bruhat_cell(G, x)
        ok = got == expect and W.is_involution(expect) == involution_expected
        self.record(
            step,
            ok,
            cell=str(got),
            expected=str(expect),
            involution=W.is_involution(got),
        )
        return got


def _torus_with_characters(G: MatrixGroup, u: int, v: int) -> np.ndarray:
    """Torus element with alpha-value u and beta-value v."""
    return G.torus_diag((u, v))


def _char_value(F: Field, root, u, v):
    return F.mul(F.pow(u, root[0] % (F.q - 1)), F.pow(v, root[1] % (F.q - 1)))


def _check_centralizer_type(ch: _Chain, s, fixed_roots, u, v):
    """The roots with trivial character on s are exactly the stated ones."""
    G = ch.G
    F = G.field
    fixed = {r for r in G.rs.positive_roots if _char_value(F, r, u, v) == 1}
    ch.record(
        "centralizer type",
        fixed == set(fixed_roots),
        fixed=sorted(map(str, fixed)),
    )
    # sanity: s really commutes with the stated root subgroups
    for r in fixed_roots:
        for g in (r, _neg(r)):
            xg = G.x(g, 1)
            assert (G.mul(xg, s) == G.mul(s, xg)).all()


def _subregular(G: MatrixGroup, verdicts):
    ch = _Chain(G, "subregular", verdicts)
    u = G.mul(G.x(B, 1), G.x((3, 1), 1))
    w0rep = G.weyl_rep(G.weyl.longest())
    y = ch.conjugate(w0rep, u)
    coeffs = ch.lower_form(y, G.identity(), [_neg(B), _neg((3, 1))])
    ch.record(
        "conjugate by w0 lands in X_{-b} X_{-3a-b} with both coefficients nonzero",
        coeffs is not None and coeffs[_neg(B)] != 0 and coeffs[_neg((3, 1))] != 0,
        coeffs=None if coeffs is None else {str(k): v for k, v in coeffs.items()},
    )
    ch.cell_is(y, [B, (3, 1)], "lies in the cell of s_b s_{3a+b}")


def _h1(G: MatrixGroup, verdicts):
    # centralizer <T, X_{+-b}>: alpha-value of order > 3
    F = G.field
    u = next(t for t in F.units() if F.pow(t, 2) != 1 and F.pow(t, 3) != 1)
    ch = _Chain(G, "H1", verdicts)
    s = _torus_with_characters(G, u, 1)
    _check_centralizer_type(ch, s, [B], u, 1)
    g = G.mul(G.x(_neg(A), 1), G.x(_neg((1, 1)), 1))
    s1 = ch.conjugate(g, s)
    order = [_neg(A), _neg((1, 1)), _neg((2, 1)), _neg((3, 1)), _neg((3, 2))]
    c = ch.lower_form(s1, s, order)
    ch.record(
        "s1 has the five-root lower form with a, b nonzero",
        c is not None and c[_neg(A)] != 0 and c[_neg((1, 1))] != 0,
    )
    s2, _ = ch.kill(s1, s, _neg((2, 1)), [_neg(A), _neg((1, 1)), _neg((3, 1)), _neg((3, 2))],
                    "suitable X_{-2a-b} removes the -2a-b term")
    s3, _ = ch.kill(s2, s, _neg((3, 1)), [_neg(A), _neg((1, 1)), _neg((3, 2))],
                    "suitable X_{-3a-b} removes the -3a-b term")
    s4, c4 = ch.kill(s3, s, _neg((3, 2)), [_neg(A), _neg((1, 1))],
                     "suitable X_{-3a-2b} removes the -3a-2b term")
    ch.record("s4 keeps a, b nonzero", c4[_neg(A)] != 0 and c4[_neg((1, 1))] != 0)
    ch.cell_is(s4, [A, (1, 1)], "s4 lies in the cell of s_a s_{a+b}")


def _h2(G: MatrixGroup, verdicts):
    F = G.field
    v = next(t for t in F.units() if F.pow(t, 2) != 1)
    ch = _Chain(G, "H2", verdicts)
    s = _torus_with_characters(G, 1, v)
    _check_centralizer_type(ch, s, [A], 1, v)
    g = G.mul(G.x(_neg((3, 1)), 1), G.x(_neg(B), 1))
    s1 = ch.conjugate(g, s)
    c = ch.lower_form(s1, s, [_neg(B), _neg((3, 1)), _neg((3, 2))])
    ch.record(
        "s1 = s x_{-b}(a) x_{-3a-b}(b) x_{-3a-2b}(c) with a, b nonzero",
        c is not None and c[_neg(B)] != 0 and c[_neg((3, 1))] != 0,
    )
    s2, _ = ch.kill(s1, s, _neg((3, 2)), [_neg(B), _neg((3, 1))],
                    "suitable X_{-3a-2b} removes the -3a-2b term")
    ch.cell_is(s2, [B, (3, 1)], "s2 lies in the cell of s_b s_{3a+b}")


def _h3_mixed(G: MatrixGroup, verdicts):
    # centralizer <T, X_{+-b}, X_{+-(3a+b)}, X_{+-(3a+2b)}>: alpha-value a
    # primitive cube root of unity
    F = G.field
    zeta = next((t for t in F.units() if t != 1 and F.pow(t, 3) == 1), None)
    assert zeta is not None, "field must contain a primitive cube root of unity"
    ch = _Chain(G, "H3", verdicts)
    s = _torus_with_characters(G, zeta, 1)
    _check_centralizer_type(ch, s, [B, (3, 1), (3, 2)], zeta, 1)
    x = G.mul(s, G.x(_neg(B), 1))
    x1 = ch.conjugate(G.x(_neg(A), 1), x)
    order = [_neg(B), _neg((1, 1)), _neg((2, 1)), _neg((3, 1)), _neg((3, 2)), _neg(A)]
    c = ch.lower_form(x1, s, order)
    ch.record(
        "x1 has the stated six-root form with f nonzero",
        c is not None and c[_neg(A)] != 0,
    )
    x1b, _ = ch.kill(x1, s, _neg((1, 1)),
                     [_neg(B), _neg((2, 1)), _neg((3, 1)), _neg((3, 2)), _neg(A)],
                     "suitable X_{-a-b} removes the -a-b term")
    x1c, _ = ch.kill(x1b, s, _neg((2, 1)),
                     [_neg(B), _neg((3, 1)), _neg((3, 2)), _neg(A)],
                     "suitable X_{-2a-b} removes the -2a-b term")
    x2, c2 = ch.kill(x1c, s, _neg((3, 1)), [_neg(B), _neg((3, 1)), _neg(A)],
                     "suitable X_{-3a-b} removes the -3a-2b term")
    b1 = c2[_neg((3, 1))]
    if b1 == 0:
        ch.cell_is(x2, [B, A], "b1 = 0: x2 lies in the cell of s_b s_a")
    else:
        ch.cell_is(x2, [B, (3, 1)], "b1 != 0: x2 lies in the cell of s_b s_{3a+b}")


def _h4(G: MatrixGroup, verdicts):
    F = G.field
    minus1 = F.neg(1)
    ch = _Chain(G, "H4-y", verdicts)
    s = _torus_with_characters(G, minus1, 1)
    _check_centralizer_type(ch, s, [B, (2, 1)], minus1, 1)
    y = G.mul(s, G.x(_neg(B), 1))
    y1 = ch.conjugate(G.x(_neg((3, 1)), 1), y)
    c = ch.lower_form(y1, s, [_neg((3, 1)), _neg(B), _neg((3, 2))])
    ch.record(
        "y1 = s x_{-3a-b}(a) x_{-b}(1) x_{-3a-2b}(b) with a nonzero",
        c is not None and c[_neg((3, 1))] != 0 and c[_neg(B)] != 0,
    )
    y2, _ = ch.kill(y1, s, _neg((3, 2)), [_neg((3, 1)), _neg(B)],
                    "suitable X_{-3a-2b} removes the -3a-2b term")
    ch.cell_is(y2, [(3, 1), B], "y2 lies in the cell of s_{3a+b} s_b")

    ch = _Chain(G, "H4-z", verdicts)
    z = G.mul(s, G.x(_neg((2, 1)), 1))
    z1 = ch.conjugate(G.x(_neg(A), 1), z)
    c = ch.lower_form(z1, s, [_neg(A), _neg((2, 1)), _neg((3, 1))])
    ch.record(
        "z1 = s x_{-a}(a) x_{-2a-b}(1) x_{-3a-b}(c) with a nonzero",
        c is not None and c[_neg(A)] != 0,
    )
    z2, c2 = ch.kill(z1, s, _neg((1, 1)),
                     [_neg(A), _neg((1, 1)), _neg((3, 1)), _neg((3, 2))],
                     "suitable X_{-a-b} trades -2a-b for -a-b")
    ch.record("z2 has d nonzero", c2[_neg((1, 1))] != 0)
    z3a, _ = ch.kill(z2, s, _neg((2, 1)), [_neg(A), _neg((1, 1)), _neg((3, 2))],
                     "suitable X_{-2a-b} removes the -3a-b term")
    z3, c3 = ch.kill(z3a, s, _neg((3, 2)), [_neg(A), _neg((1, 1))],
                     "suitable X_{-3a-2b} removes the -3a-2b term")
    ch.record("z3 keeps both coefficients nonzero",
              c3[_neg(A)] != 0 and c3[_neg((1, 1))] != 0)
    ch.cell_is(z3, [A, (1, 1)], "z3 lies in the cell of s_a s_{a+b}")


def g2_trace(q: int) -> list[StepVerdict]:
    """Run every displayed conjugation chain over F_q (good odd q <= 25).

    The mixed-centralizer chain needs a primitive cube root of unity; when
    F_q lacks one the chain runs over the quadratic extension, which is
    recorded in its verdicts.
    """
    from ..gfq import is_prime

    p, k = _split_prime_power(q)
    if p in (2, 3) or q > 25:
        raise ValueError("need a good odd q at most 25 for the G_2 chains")
    F = make_field(p, k)
    G = build_group("G", 2, F)
    verdicts: list[StepVerdict] = []
    for chain in (_subregular, _h1, _h2, _h4):
        try:
            chain(G, verdicts)
        except ChainError:
            pass  # the failing verdict is already recorded
    if (q - 1) % 3 == 0:
        G3 = G
    else:
        # no cube root of unity over F_q; the quadratic extension always has one
        G3 = build_group("G", 2, make_field(p, 2 * k))
    try:
        _h3_mixed(G3, verdicts)
    except ChainError:
        pass
    return verdicts


def _split_prime_power(q: int) -> tuple[int, int]:
    from ..gfq import is_prime

    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise ValueError("q must be a prime power")
            if not is_prime(p):
                raise ValueError("q must be a prime power")
            return p, k
    raise ValueError("invalid q")
