"""Exact arithmetic in small finite fields GF(p^m), q = p^m <= 1024.

Elements are plain integers 0 .. q-1.  The integer n encodes the residue
polynomial c_0 + c_1 t + ... + c_{m-1} t^{m-1} through its base-p digits
(c_0 = n % p, c_1 = (n // p) % p, ...).  Multiplication goes through
log/antilog tables over a distinguished primitive element, so it is O(1)
per operation and vectorizes over numpy arrays.

The default modulus for each (p, m) comes from a frozen table of primitive
polynomials (t itself generates the unit group), so every derived artifact
is reproducible bit for bit.  A user-supplied monic irreducible modulus is
accepted as an override.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

MAX_Q = 1024

# Lexicographically smallest monic primitive polynomial per (p, m).
# Coefficient tuples are low-degree-first and include the leading 1.
_DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (2, 7): (1, 0, 0, 0, 0, 0, 1, 1),
    (2, 8): (1, 0, 0, 0, 1, 1, 1, 0, 1),
    (2, 9): (1, 0, 0, 0, 0, 1, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 0, 2, 1),
    (3, 4): (2, 0, 0, 1, 1),
    (3, 5): (1, 0, 0, 0, 2, 1),
    (3, 6): (2, 0, 0, 0, 0, 1, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 0, 1, 1),
    (5, 4): (2, 0, 2, 1, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 1, 1, 1),
    (11, 2): (2, 4, 1),
    (13, 2): (2, 1, 1),
    (17, 2): (3, 1, 1),
    (19, 2): (2, 1, 1),
    (23, 2): (5, 2, 1),
    (29, 2): (2, 5, 1),
    (31, 2): (3, 2, 1),
}


class FieldError(ValueError):
    """Invalid field construction or field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    dm = len(mod) - 1
    while len(res) - 1 >= dm:
        lead = res[-1]
        if lead:
            shift = len(res) - 1 - dm
            for i in range(dm + 1):
                res[shift + i] = (res[shift + i] - lead * mod[i]) % p
        res.pop()
    return _poly_trim(res)


def _poly_divides(d: Sequence[int], f: Sequence[int], p: int) -> bool:
    r = [c % p for c in f]
    dd = len(d) - 1
    inv_lead = pow(d[-1], p - 2, p)
    while len(r) - 1 >= dd and any(r):
        lead = (r[-1] * inv_lead) % p
        if lead:
            shift = len(r) - 1 - dd
            for i in range(dd + 1):
                r[shift + i] = (r[shift + i] - lead * d[i]) % p
        r.pop()
    return not any(r)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    import itertools

    m = len(f) - 1
    if m == 1:
        return True
    if f[0] == 0:
        return False
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if _poly_divides(g, f, p):
                return False
    return True


class GF:
    """The finite field GF(p^m) with element indices 0 .. q-1.

    All arithmetic methods accept and return plain ints; the v-prefixed
    variants operate elementwise on numpy integer arrays.
    """

    def __init__(self, p: int, m: int = 1, modulus: Iterable[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree m = {m} must be >= 1")
        q = p**m
        if q > MAX_Q:
            raise FieldError(f"q = {q} exceeds the supported cap {MAX_Q}")
        self.p = p
        self.m = m
        self.q = q

        if modulus is not None:
            mod = [int(c) % p for c in modulus]
            if len(mod) != m + 1 or mod[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            if not _is_irreducible(mod, p):
                raise FieldError(f"modulus {mod} is reducible over GF({p})")
        elif m == 1:
            mod = [0, 1]
        else:
            mod = list(_DEFAULT_MODULI[(p, m)])
        self.modulus = tuple(mod)

        self._build_tables()

    # -- construction ---------------------------------------------------

    def _index(self, digits: Sequence[int]) -> int:
        n = 0
        for k, c in enumerate(digits):
            n += (c % self.p) * self.p**k
        return n

    def _mul_slow(self, a: int, b: int) -> int:
        da = [(a // self.p**k) % self.p for k in range(self.m)]
        db = [(b // self.p**k) % self.p for k in range(self.m)]
        return self._index(_poly_mulmod(da, db, self.modulus, self.p) + [0] * self.m)

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        # pick the distinguished primitive element
        if q == 2:
            g = 1
        elif m == 1:
            g = next(x for x in range(2, p) if self._order(x) == q - 1)
        else:
            # the class of t; primitive for the frozen moduli, else search
            g = p
            if self.modulus != _DEFAULT_MODULI.get((p, m)) and self._order(g) != q - 1:
                g = next(x for x in range(2, q) if self._order(x) == q - 1)
        self.g = g

        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            if log[x] != -1:
                raise FieldError(f"g = {g} does not generate the unit group")
            log[x] = k
            x = self._mul_slow(x, g)
        if x != 1:
            raise FieldError(f"g = {g} does not generate the unit group")
        exp[q - 1 :] = exp[: q - 1]
        self.exp = exp
        self.log = log

        la, lb = np.meshgrid(log, log, indexing="ij")
        mul = exp[(la + lb) % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.mul_table = mul.astype(np.int16)

        idx = np.arange(q)
        self.neg_table = np.array([self._neg_slow(int(a)) for a in idx], dtype=np.int16)
        inv = np.zeros(q, dtype=np.int16)
        inv[exp[: q - 1]] = exp[(q - 1 - log[exp[: q - 1]]) % (q - 1)]
        self.inv_table = inv

    def _order(self, x: int) -> int:
        k, y = 1, x
        while y != 1:
            y = self._mul_slow(y, x)
            k += 1
            if k > self.q:
                return 0
        return k

    def _neg_slow(self, a: int) -> int:
        return self._index([(-d) % self.p for d in (a // self.p**k % self.p for k in range(self.m))])

    # -- scalar operations ----------------------------------------------

    def _check(self, *els: int) -> None:
        for a in els:
            if not 0 <= a < self.q:
                raise FieldError(f"{a} is not an element index of GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        n, pw = 0, 1
        for _ in range(self.m):
            n += ((a % self.p + b % self.p) % self.p) * pw
            a //= self.p
            b //= self.p
            pw *= self.p
        return n

    def neg(self, a: int) -> int:
        self._check(a)
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e with negative e meaning (a^-1)^(-e); a**0 == 1."""
        self._check(a)
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 raised to a negative power")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def units(self) -> list[int]:
        """The q-1 nonzero elements in the fixed order g^0, g^1, ..."""
        return [int(x) for x in self.exp[: self.q - 1]]

    def dlog(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("discrete log of zero")
        return int(self.log[a])

    # -- vectorized operations ------------------------------------------

    def vadd(self, A, B):
        if self.p == 2:
            return np.bitwise_xor(A, B)
        if self.m == 1:
            C = A + B
            return np.where(C >= self.p, C - self.p, C).astype(np.int16)
        C = np.zeros(np.broadcast(A, B).shape, dtype=np.int16)
        pw = 1
        for _ in range(self.m):
            da = (A // pw) % self.p
            db = (B // pw) % self.p
            C += ((da + db) % self.p).astype(np.int16) * pw
            pw *= self.p
        return C

    def vneg(self, A):
        return self.neg_table[A]

    def vsub(self, A, B):
        return self.vadd(A, self.neg_table[B])

    def vmul(self, A, B):
        return self.mul_table[A, B]

    def vscale(self, c: int, A):
        return self.mul_table[c][A]

    def vsum(self, A, axis=0):
        """Field sum along an axis (digitwise base-p accumulation)."""
        A = np.asarray(A)
        if self.p == 2:
            return np.bitwise_xor.reduce(A, axis=axis).astype(np.int16)
        if self.m == 1:
            return (np.sum(A, axis=axis, dtype=np.int64) % self.p).astype(np.int16)
        out = None
        pw = 1
        for _ in range(self.m):
            d = (np.sum((A // pw) % self.p, axis=axis, dtype=np.int64) % self.p) * pw
            out = d if out is None else out + d
            pw *= self.p
        return out.astype(np.int16)

    # -- misc -------------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digit vector of an element index."""
        self._check(a)
        return tuple((a // self.p**k) % self.p for k in range(self.m))

    def element(self, digits: Sequence[int]) -> int:
        return self._index(digits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF)
            and (self.p, self.m, self.modulus, self.g) == (other.p, other.m, other.modulus, other.g)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus, self.g))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"


def make_field(p: int, m: int = 1, modulus: Iterable[int] | None = None) -> GF:
    """Validated field constructor; omitted modulus uses the frozen table."""
    return GF(p, m, modulus)
