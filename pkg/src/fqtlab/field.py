"""Finite fields F_q with q = p^e and exact element arithmetic.

Field elements are plain ints in [0, q).  For a prime field the int is the
residue mod p.  For an extension field the base-p digits of the int are the
coordinates in the power basis 1, x, ..., x^(e-1) of F_p[x]/(modulus), so
integer order on codes agrees with comparing coordinate vectors from the
highest basis index down.  That ordering convention is relied on everywhere
else in the package.
"""

from __future__ import annotations


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


# ---------------------------------------------------------------------------
# Minimal F_p[x] arithmetic on little-endian int lists, used only to validate
# and search for extension moduli.  Dense Poly objects cannot be used here
# because they are built on top of FiniteField.

def _fp_trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _fp_trim(a)
    inv_lb = pow(b[-1], p - 2, p) if p > 2 else b[-1]
    q = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db]
        if c:
            f = (c * inv_lb) % p
            q[i] = f
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - f * bj) % p
    return _fp_trim(q), _fp_trim(a)


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p) if p > 2 else 1
        a = [(c * inv) % p for c in a]
    return a


def _fp_powmod(a, k, m, p):
    r = [1]
    a = _fp_divmod(a, m, p)[1]
    while k:
        if k & 1:
            r = _fp_divmod(_fp_mul(r, a, p), m, p)[1]
        a = _fp_divmod(_fp_mul(a, a, p), m, p)[1]
        k >>= 1
    return r


def _fp_is_irreducible(f, p):
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    # x^(p^k) mod f for k = 1..n, via repeated p-th powering
    x = [0, 1]
    h = list(x)
    powers = {}
    for k in range(1, n + 1):
        h = _fp_powmod(h, p, f, p)
        powers[k] = list(h)
    hx = list(powers[n])
    # x^(p^n) must reduce to x
    if _fp_trim([(c - d) % p for c, d in
                 zip(hx + [0] * len(x), x + [0] * len(hx))]):
        return False
    for r in prime_factors(n):
        g = powers[n // r]
        diff = [(c - d) % p for c, d in
                zip(g + [0] * len(x), x + [0] * len(g))]
        if len(_fp_gcd(diff, f, p)) - 1 > 0:
            return False
    return True


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e over F_p in canonical order.

    Candidates x^e + c, with the lower coefficient vector c scanned in
    ascending base-p code order, which matches comparing coefficient tuples
    from the highest index down.
    """
    for code in range(p ** e):
        vec = []
        k = code
        for _ in range(e):
            vec.append(k % p)
            k //= p
        vec.append(1)
        if _fp_is_irreducible(vec, p):
            return tuple(vec)
    raise AssertionError("no irreducible of degree %d over F_%d" % (e, p))


_EXT_TABLE_LIMIT = 256


class FiniteField:
    """The field F_q, q = p^e, with element codes 0..q-1.

    For e > 1 a monic irreducible modulus over F_p of degree e is required;
    when omitted the canonically least one is chosen.  Extension fields are
    table-backed and limited to q <= 256, which covers desk-scale use.
    """

    __slots__ = ("p", "e", "q", "modulus", "_add", "_mul", "_inv", "_neg")

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError("p must be prime, got %r" % (p,))
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p ** e
        if e == 1:
            if modulus is not None:
                raise ValueError("modulus only applies to extension fields")
            self.modulus = None
            self._add = self._mul = self._inv = self._neg = None
            return
        if self.q > _EXT_TABLE_LIMIT:
            raise ValueError(
                "extension fields are supported up to q = %d" % _EXT_TABLE_LIMIT)
        if modulus is None:
            modulus = default_modulus(p, e)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if any(not (0 <= c < p) for c in modulus):
            raise ValueError("modulus coefficients must be reduced mod p")
        if not _fp_is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible over F_%d" % p)
        self.modulus = modulus
        self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits) -> int:
        a = 0
        for c in reversed(list(digits)):
            a = a * self.p + c
        return a

    def _build_tables(self):
        p, q, mod = self.p, self.q, list(self.modulus)
        vecs = [self._digits(a) for a in range(q)]
        self._neg = tuple(self._encode([(-c) % p for c in v]) for v in vecs)
        add = []
        mul = []
        for a in range(q):
            va = vecs[a]
            add.append(tuple(
                self._encode([(x + y) % p for x, y in zip(va, vecs[b])])
                for b in range(q)))
            row = []
            for b in range(q):
                prod = _fp_divmod(_fp_mul(va, vecs[b], p), mod, p)[1]
                prod = prod + [0] * (self.e - len(prod))
                row.append(self._encode(prod))
            mul.append(tuple(row))
        self._add = tuple(add)
        self._mul = tuple(mul)
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = tuple(inv)

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.e == 1:
            return pow(a, self.p - 2, self.p) if self.p > 2 else a
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def pth_root(self, a: int) -> int:
        # a = b^p has the unique root b = a^(p^(e-1)); Frobenius is bijective.
        return self.pow(a, self.q // self.p)

    # -- structure ------------------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        if not (0 <= a < self.q):
            raise ValueError("element code out of range")
        return tuple(self._digits(a))

    def from_coords(self, coords) -> int:
        coords = list(coords)
        if len(coords) != self.e or any(not (0 <= c < self.p) for c in coords):
            raise ValueError("bad coordinate vector %r" % (coords,))
        return self._encode(coords)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and self.p == other.p and self.e == other.e
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return "FiniteField(%d)" % self.p
        return "FiniteField(%d, %d, modulus=%r)" % (self.p, self.e, self.modulus)
