"""Dense univariate polynomials over a finite field, in the variable t.

Coefficients are stored little-endian as a tuple of field element codes with
no trailing zeros, so equal polynomials compare and hash equal.  The zero
polynomial has degree NEG_INF, a sentinel that is below every integer and
absorbing under degree arithmetic.

Canonical order: first by degree, then coefficient tuples compared from the
highest index down.  Equivalently, polynomials of a fixed field are ordered
by their index sum(code(c_i) * q^i), which `index`/`from_index` expose; all
enumeration in the package walks indices ascending.

Over GF(2) the heavy operations transparently run on bit-packed ints (one
bit per coefficient), which keeps degree-few-hundred work instant.
"""

from __future__ import annotations

import json
import re

from .errors import NotCoprime, PolyParseError
from .field import FiniteField

NEG_INF = float("-inf")

_PACK_MIN_LEN = 24  # below this, schoolbook is not worth the packing round-trip


def _pack2(coeffs) -> int:
    n = 0
    for i, c in enumerate(coeffs):
        if c:
            n |= 1 << i
    return n


def _mul2(x: int, y: int) -> int:
    if x.bit_count() < y.bit_count():
        x, y = y, x
    r = 0
    while y:
        low = y & -y
        r ^= x << (low.bit_length() - 1)
        y ^= low
    return r


def _divmod2(a: int, b: int) -> tuple[int, int]:
    q = 0
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        shift = da - db
        a ^= b << shift
        q |= 1 << shift
        da = a.bit_length()
    return q, a


class Poly:
    """Immutable dense polynomial over a FiniteField."""

    __slots__ = ("field", "coeffs", "_pk")

    def __init__(self, field: FiniteField, coeffs=()):
        cs = [int(c) for c in coeffs]
        q = field.q
        for c in cs:
            if not (0 <= c < q):
                raise ValueError("coefficient code %r out of range for q=%d" % (c, q))
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self._pk = None

    @classmethod
    def _make(cls, field, coeffs: tuple) -> "Poly":
        # trusted constructor: coeffs already normalized
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        obj._pk = None
        return obj

    @classmethod
    def _from_list(cls, field, cs: list) -> "Poly":
        while cs and cs[-1] == 0:
            cs.pop()
        return cls._make(field, tuple(cs))

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls._make(field, ())

    @classmethod
    def one(cls, field) -> "Poly":
        return cls._make(field, (1,))

    @classmethod
    def gen(cls, field) -> "Poly":
        """The polynomial t."""
        return cls._make(field, (0, 1))

    @classmethod
    def constant(cls, field, c: int) -> "Poly":
        if not (0 <= c < field.q):
            raise ValueError("constant code out of range")
        return cls._make(field, (c,) if c else ())

    @classmethod
    def from_index(cls, field, k: int) -> "Poly":
        if k < 0:
            raise ValueError("index must be nonnegative")
        cs = []
        q = field.q
        while k:
            cs.append(k % q)
            k //= q
        return cls._make(field, tuple(cs))

    def index(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.q + c
        return k

    # -- basic queries ----------------------------------------------------------

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ordering, hashing -------------------------------------------------------

    def sort_key(self):
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def _check_same_field(self, other):
        if self.field != other.field:
            raise ValueError("mixed-field polynomial operation")

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __lt__(self, other):
        self._check_same_field(other)
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        self._check_same_field(other)
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    # -- arithmetic ----------------------------------------------------------------

    def _packed(self) -> int:
        pk = self._pk
        if pk is None:
            pk = _pack2(self.coeffs)
            self._pk = pk
        return pk

    @classmethod
    def _from_packed(cls, field, n: int) -> "Poly":
        cs = []
        while n:
            cs.append(n & 1)
            n >>= 1
        return cls._make(field, tuple(cs))

    def __add__(self, other):
        self._check_same_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly._from_list(F, out)

    def __neg__(self):
        F = self.field
        return Poly._make(F, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        self._check_same_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = F.sub(out[i], c)
        return Poly._from_list(F, out)

    def _schoolbook_mul(self, other) -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly._from_list(F, out)

    def __mul__(self, other):
        self._check_same_field(other)
        F = self.field
        if F.q == 2 and len(self.coeffs) + len(other.coeffs) >= _PACK_MIN_LEN:
            return Poly._from_packed(F, _mul2(self._packed(), other._packed()))
        return self._schoolbook_mul(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        r = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def __divmod__(self, other):
        self._check_same_field(other)
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if F.q == 2 and len(self.coeffs) >= _PACK_MIN_LEN:
            q, r = _divmod2(self._packed(), other._packed())
            return Poly._from_packed(F, q), Poly._from_packed(F, r)
        a = list(self.coeffs)
        bc = other.coeffs
        db = len(bc) - 1
        if len(a) - 1 < db:
            return Poly.zero(F), self
        inv_lb = F.inv(bc[-1])
        quot = [0] * (len(a) - db)
        for i in range(len(a) - db - 1, -1, -1):
            c = a[i + db]
            if c:
                f = F.mul(c, inv_lb)
                quot[i] = f
                for j, bj in enumerate(bc):
                    if bj:
                        a[i + j] = F.sub(a[i + j], F.mul(f, bj))
        return Poly._from_list(F, quot), Poly._from_list(F, a)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def powmod(self, k: int, modulus: "Poly") -> "Poly":
        """self^k mod modulus by square-and-multiply."""
        if k < 0:
            raise ValueError("negative exponent")
        r = Poly.one(self.field) % modulus
        base = self % modulus
        while k:
            if k & 1:
                r = (r * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return r

    def shifted(self, k: int) -> "Poly":
        """self * t^k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return Poly._make(self.field, (0,) * k + self.coeffs)

    # -- calculus, evaluation ---------------------------------------------------

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(self.coeffs[i], i % F.p))
        return Poly._from_list(F, out)

    def evaluate(self, c: int) -> int:
        F = self.field
        r = 0
        for a in reversed(self.coeffs):
            r = F.add(F.mul(r, c), a)
        return r

    def monic(self) -> "Poly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        F = self.field
        inv = F.inv(self.coeffs[-1])
        return Poly._make(F, tuple(F.mul(c, inv) for c in self.coeffs))

    def scaled(self, c: int) -> "Poly":
        F = self.field
        if c == 0:
            return Poly.zero(F)
        if c == 1:
            return self
        return Poly._make(F, tuple(F.mul(a, c) for a in self.coeffs))

    def __repr__(self):
        return "Poly(%s)" % format_poly(self)

    def __str__(self):
        return format_poly(self)


# -- enumeration ------------------------------------------------------------------


def polys_up_to(field, d: int):
    """All polynomials of degree <= d in canonical order (includes 0)."""
    for k in range(field.q ** (d + 1)):
        yield Poly.from_index(field, k)


def monic_polys_of_degree(field, d: int):
    """All monic polynomials of degree exactly d, in canonical order."""
    if d < 0:
        return
    base = field.q ** d
    for k in range(base):
        yield Poly.from_index(field, base + k)


# -- gcd machinery ------------------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: Poly, b: Poly):
    """(g, u, v) with g = u*a + v*b and g monic (or zero)."""
    F = a.field
    r0, r1 = a, b
    u0, u1 = Poly.one(F), Poly.zero(F)
    v0, v1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    inv = F.inv(r0.lc)
    return r0.scaled(inv), u0.scaled(inv), v0.scaled(inv)


def crt(residues, moduli) -> Poly:
    """Unique R with R = residues[i] mod moduli[i] and deg R < deg(prod).

    Moduli must be nonzero and pairwise coprime; a shared factor raises
    NotCoprime naming the offending pair of indices.
    """
    residues = list(residues)
    moduli = list(moduli)
    if len(residues) != len(moduli):
        raise ValueError("residue/modulus count mismatch")
    if not moduli:
        raise ValueError("need at least one modulus")
    for m in moduli:
        if m.is_zero():
            raise ZeroDivisionError("zero modulus")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if poly_gcd(moduli[i], moduli[j]).deg > 0:
                raise NotCoprime(
                    "moduli %d and %d share a nonconstant factor" % (i, j),
                    (i, j))
    F = moduli[0].field
    total = Poly.one(F)
    for m in moduli:
        total = total * m
    acc = Poly.zero(F)
    for r, m in zip(residues, moduli):
        if m.is_constant():
            continue  # every residue is congruent mod a unit
        cof = total // m
        g, u, _ = poly_xgcd(cof % m, m)
        if g.deg != 0:
            raise NotCoprime("modulus shares a factor with the others", (0, 0))
        acc = (acc + (r % m) * u * cof) % total
    return acc


# -- text formats ----------------------------------------------------------------
#
# Human form: "t^3+2*t+1"; over extension fields coefficients print as
# bracketed coordinate vectors, e.g. "[1,1]*t^2+[0,1]".  Compact form is a
# JSON array of little-endian coefficients, "[1,2,0,1]"; over extension
# fields each entry is itself a coordinate vector.  Both round-trip exactly.


def format_poly_compact(a: Poly) -> str:
    F = a.field
    if F.e == 1:
        entries = list(a.coeffs)
    else:
        entries = [list(F.coords(c)) for c in a.coeffs]
    return json.dumps(entries, separators=(",", ":"))


def _format_coeff(F, c: int) -> str:
    if F.e == 1:
        return str(c)
    return json.dumps(list(F.coords(c)), separators=(",", ":"))


def format_poly(a: Poly) -> str:
    F = a.field
    if a.is_zero():
        return "0"
    parts = []
    for i in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(_format_coeff(F, c))
        else:
            tpow = "t" if i == 1 else "t^%d" % i
            if c == 1:
                parts.append(tpow)
            else:
                parts.append("%s*%s" % (_format_coeff(F, c), tpow))
    return "+".join(parts)


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\[[0-9,\s]*\]|\d+)\s*\*?\s*)?"
    r"(?:t(?:\^(?P<pow>\d+))?)?$")


def _coeff_code(field, text):
    if text.startswith("["):
        vec = json.loads(text)
        if not (isinstance(vec, list) and len(vec) == field.e
                and all(isinstance(v, int) and 0 <= v < field.p for v in vec)):
            raise PolyParseError("bad coefficient vector %r" % text)
        return field.from_coords(vec)
    c = int(text)
    if not 0 <= c < field.p:
        raise PolyParseError("coefficient %r out of range" % text)
    return c


def parse_poly(field, text: str) -> Poly:
    """Parse either text format; compact form is detected as valid JSON."""
    text = text.strip()
    if not text:
        raise PolyParseError("empty polynomial literal")
    try:
        entries = json.loads(text)
    except ValueError:
        entries = None
    if isinstance(entries, list):
        if field.e > 1 and entries and all(isinstance(v, int) for v in entries):
            # bare bracketed constant in human notation, e.g. "[1,1]" over F4
            return _parse_human(field, text)
        cs = []
        for entry in entries:
            if field.e == 1:
                if not (isinstance(entry, int) and 0 <= entry < field.p):
                    raise PolyParseError("expected coefficient in 0..%d, got %r"
                                         % (field.p - 1, entry))
                cs.append(entry)
            else:
                if not (isinstance(entry, list) and len(entry) == field.e
                        and all(isinstance(v, int) and 0 <= v < field.p for v in entry)):
                    raise PolyParseError("expected %d-vector coefficient, got %r"
                                         % (field.e, entry))
                cs.append(field.from_coords(entry))
        return Poly(field, cs)
    return _parse_human(field, text)


def _parse_human(field, text: str) -> Poly:
    if text == "0":
        return Poly.zero(field)
    # split into signed terms, keeping bracketed vectors intact
    terms = []
    sign = 1
    depth = 0
    cur = ""
    for idx, ch in enumerate(text.replace(" ", "")):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in "+-" and depth == 0:
            if cur:
                terms.append((sign, cur))
                sign = -1 if ch == "-" else 1
                cur = ""
            elif idx == 0:
                sign = -1 if ch == "-" else 1
            else:
                raise PolyParseError("cannot parse %r" % text)
        else:
            cur += ch
    if depth != 0 or not cur:
        raise PolyParseError("cannot parse %r" % text)
    terms.append((sign, cur))
    F = field
    out = {}
    for sgn, term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and "t" not in term):
            raise PolyParseError("cannot parse term %r" % term)
        coeff_txt = m.group("coeff")
        has_t = "t" in term
        power = int(m.group("pow")) if m.group("pow") else (1 if has_t else 0)
        try:
            code = _coeff_code(F, coeff_txt) if coeff_txt is not None else 1
        except (ValueError, PolyParseError) as exc:
            raise PolyParseError("cannot parse term %r" % term) from exc
        if sgn < 0:
            code = F.neg(code)
        out[power] = F.add(out.get(power, 0), code)
    cs = [0] * (max(out) + 1)
    for i, c in out.items():
        cs[i] = c
    return Poly(field, cs)
