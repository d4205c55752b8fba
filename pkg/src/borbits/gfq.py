"""Arithmetic in F_p and small extensions F_{p^k}, odd characteristic only.

Elements are encoded as integers: the residue polynomial c_0 + c_1 X + ...
packs to sum(c_i * p^i), which is also the wire encoding.  Prime fields use
direct modular arithmetic (including on numpy arrays); extension fields use
multiplication/inverse tables built from a fixed irreducible modulus.
"""

from __future__ import annotations

import numpy as np

BAD_PRIMES = {"A": (), "B": (2,), "C": (2,), "D": (2,), "G": (2, 3), "F": (2, 3), "E": (2, 3)}

_TABLE_LIMIT = 4096  # build dense q x q op tables only for small extensions


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def is_good_odd(type_tag: str, p: int, rank: int | None = None) -> bool:
    """Good odd characteristic gate; E_8 additionally excludes 5."""
    bad = set(BAD_PRIMES[type_tag])
    if type_tag == "E" and rank == 8:
        bad.add(5)
    return p % 2 == 1 and p not in bad


def _poly_mul_mod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by the monic modulus
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    out = prod[:k]
    return out + [0] * (k - len(out))


def _smallest_irreducible(p: int, k: int) -> list[int]:
    """Monic irreducible of degree k over F_p with the smallest encoding."""
    for enc in range(p**k):
        coeffs = _decode(enc, p, k) + [1]
        if _is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")


def _decode(enc: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(enc % p)
        enc //= p
    return out


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Check irreducibility via x^(p^d) fixed-point counts (d < deg)."""
    k = len(coeffs) - 1
    if k == 1:
        return True
    # x^(p^k) == x mod f and gcd condition; for small sizes brute force roots
    # of every proper divisor degree via the Frobenius power trick.
    x = [0, 1] + [0] * (k - 2)
    cur = x[:]
    for d in range(1, k):
        cur = _poly_pow(cur, p, coeffs, p)
        if k % d == 0 and cur == x:
            return False
    cur = _poly_pow(cur, p, coeffs, p)
    return cur == x


def _poly_pow(a: list[int], e: int, modulus: list[int], p: int) -> list[int]:
    out = [1] + [0] * (len(modulus) - 2)
    base = a[:]
    while e:
        if e & 1:
            out = _poly_mul_mod(out, base, modulus, p)
        base = _poly_mul_mod(base, base, modulus, p)
        e >>= 1
    return out


class Field:
    """F_{p^k} with integer-encoded elements."""

    def __init__(self, p: int, k: int = 1):
        if p % 2 == 0 or not is_prime(p):
            raise ValueError("characteristic must be an odd prime")
        if k < 1 or p**k > 2**20:
            raise ValueError("field size out of supported range")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = None if k == 1 else _smallest_irreducible(p, k)
        self._mul_table = None
        self._add_table = None
        self._inv_table = None
        if k > 1:
            if self.q <= _TABLE_LIMIT:
                self._build_tables()
            self._pow_cache = {}

    # -- scalar ops ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return int(self._add_table[a, b])
        p, k = self.p, self.k
        return _encode([(x + y) % p for x, y in zip(_decode(a, p, k), _decode(b, p, k))], p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p, k = self.p, self.k
        return _encode([(-x) % p for x in _decode(a, p, k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        p, k = self.p, self.k
        return _encode(_poly_mul_mod(_decode(a, p, k), _decode(b, p, k), self.modulus, p), p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return int(self._inv_table[a])
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.q - 1
        if self.k == 1:
            return pow(a, e, self.p)
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def of_int(self, n: int) -> int:
        """Image of an integer in the prime field."""
        return n % self.p

    def sqrt_exists(self, a: int) -> bool:
        return a == 0 or self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a: int) -> int:
        """Some square root of a; raises if a is a non-square."""
        for x in range(self.q):
            if self.mul(x, x) == a:
                return x
        raise ValueError("element is not a square")

    def primitive_root(self) -> int:
        for g in range(2, self.q):
            if self._order(g) == self.q - 1:
                return g
        raise AssertionError("no generator found")

    def _order(self, a: int) -> int:
        k, cur = 1, a
        while cur != 1:
            cur = self.mul(cur, a)
            k += 1
        return k

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    # -- array ops (prime fields run vectorized; extensions use tables) ----

    def _need_tables(self):
        if self._mul_table is None:
            raise ValueError("extension field too large for vectorized ops")

    def arr_add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        self._need_tables()
        return self._add_table[a, b]

    def arr_neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        self._need_tables()
        return self._neg_table[a]

    def arr_mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        self._need_tables()
        return self._mul_table[a, b]

    def mat_mul(self, A, B):
        """Matrix product of encoded matrices (supports a stacked first factor)."""
        if self.k == 1:
            return (A @ B) % self.p
        A = np.asarray(A)
        B = np.asarray(B)
        out = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
        for t in range(A.shape[-1]):
            out = self.arr_add(out, self.arr_mul(A[..., t, None], B[t]))
        return out

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        digits = np.zeros((q, k), dtype=np.int64)
        enc = np.arange(q)
        for i in range(k):
            digits[:, i] = enc % p
            enc = enc // p
        powers = p ** np.arange(k)
        self._add_table = (((digits[:, None, :] + digits[None, :, :]) % p) @ powers)
        self._neg_table = (((-digits) % p) @ powers)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            da = _decode(a, p, k)
            for b in range(a, q):
                v = _encode(_poly_mul_mod(da, _decode(b, p, k), self.modulus, p), p)
                mul[a, b] = v
                mul[b, a] = v
        self._mul_table = mul
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = next(x for x in range(1, q) if mul[a, x] == 1)
        self._inv_table = inv

    def __repr__(self):
        return f"F{self.q}" if self.k > 1 else f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))


def _encode(coeffs: list[int], p: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * p + c
    return out


def make_field(p: int, k: int = 1) -> Field:
    return Field(p, k)
