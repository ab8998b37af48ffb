"""Finite tables of maps f: { A : deg A <= D } -> F_q[t], plus the two desk
checks that matter for them: congruence preservation and degree growth.

A table's domain is exactly the q^(D+1) polynomials of degree <= D, including
zero and the constants.  Lookups outside the domain raise; nothing is ever
defaulted.  Tables serialize to a stable JSON form with compact polynomial
literals and canonically sorted entries, so equal tables produce identical
bytes.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, TableDomainError
from .field import FiniteField
from .irreducibles import degree_sum, enumerate_monic_irreducibles
from .poly import NEG_INF, Poly, format_poly_compact, parse_poly, polys_up_to

DEFAULT_ENUM_BUDGET = 1 << 20


class FuncTable:
    """Immutable-by-convention map from all A with deg A <= D to F_q[t]."""

    __slots__ = ("field", "D", "_values")

    def __init__(self, field: FiniteField, D: int, values: dict):
        if D < 0:
            raise ValueError("D must be >= 0")
        size = field.q ** (D + 1)
        if len(values) != size:
            raise ValueError(
                "table must cover the full domain: expected %d entries, got %d"
                % (size, len(values)))
        for a, v in values.items():
            if a.field != field or v.field != field:
                raise ValueError("table entries from a different field")
            if not (a.deg is NEG_INF or a.deg <= D):
                raise ValueError("key %s outside degree bound %d" % (a, D))
        self.field = field
        self.D = D
        self._values = dict(values)

    @classmethod
    def from_function(cls, field, D, fn, budget: int = DEFAULT_ENUM_BUDGET):
        size = field.q ** (D + 1)
        if size > budget:
            raise BudgetExceeded("domain size %d exceeds budget %d" % (size, budget))
        return cls(field, D, {a: fn(a) for a in polys_up_to(field, D)})

    @classmethod
    def from_polymap(cls, field, D, coeffs, budget: int = DEFAULT_ENUM_BUDGET):
        """Table of A -> sum coeffs[j] * A^j for coeffs in F_q[t]."""
        coeffs = tuple(coeffs)

        def fn(a):
            out = Poly.zero(field)
            for c in reversed(coeffs):
                out = out * a + c
            return out

        return cls.from_function(field, D, fn, budget=budget)

    def lookup(self, a: Poly) -> Poly:
        try:
            return self._values[a]
        except KeyError:
            raise TableDomainError("input %s outside table domain (D=%d)"
                                   % (a, self.D)) from None

    def domain(self):
        return polys_up_to(self.field, self.D)

    def items(self):
        for a in self.domain():
            yield a, self._values[a]

    def with_value(self, a: Poly, v: Poly) -> "FuncTable":
        """A copy with one entry overwritten (for corruption experiments)."""
        if a not in self._values:
            raise TableDomainError("input %s outside table domain" % a)
        vals = dict(self._values)
        vals[a] = v
        return FuncTable(self.field, self.D, vals)

    def restrict(self, D2: int) -> "FuncTable":
        if not (0 <= D2 <= self.D):
            raise ValueError("restriction degree must satisfy 0 <= D2 <= D")
        vals = {a: self._values[a] for a in polys_up_to(self.field, D2)}
        return FuncTable(self.field, D2, vals)

    def __eq__(self, other):
        if not isinstance(other, FuncTable):
            return NotImplemented
        return (self.field == other.field and self.D == other.D
                and self._values == other._values)

    def __repr__(self):
        return "FuncTable(q=%d, D=%d)" % (self.field.q, self.D)

    # -- serialization ------------------------------------------------------

    def to_obj(self) -> dict:
        field_obj = {"p": self.field.p, "e": self.field.e,
                     "modulus": list(self.field.modulus) if self.field.modulus else None}
        values = [[format_poly_compact(a), format_poly_compact(v)]
                  for a, v in self.items()]
        return {"field": field_obj, "D": self.D, "values": values}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_obj(cls, obj) -> "FuncTable":
        fo = obj["field"]
        field = FiniteField(fo["p"], fo["e"],
                            tuple(fo["modulus"]) if fo.get("modulus") else None)
        vals = {}
        for a_txt, v_txt in obj["values"]:
            vals[parse_poly(field, a_txt)] = parse_poly(field, v_txt)
        return cls(field, obj["D"], vals)

    @classmethod
    def from_json(cls, text: str) -> "FuncTable":
        return cls.from_obj(json.loads(text))

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_json())

    @classmethod
    def load(cls, path) -> "FuncTable":
        with open(path) as fh:
            return cls.from_json(fh.read())


# -- congruence check -------------------------------------------------------


@dataclass(frozen=True)
class P3Violation:
    """f(a) and f(base) differ mod p even though a = base mod p."""
    modulus: Poly
    a: Poly
    base: Poly


@dataclass(frozen=True)
class P3Report:
    ok: bool
    violations: tuple[P3Violation, ...]
    violation_count: int
    irreducibles_checked: int
    truncated: bool


def _p3_scan_modulus(table: FuncTable, p: Poly) -> list[P3Violation]:
    seen = {}  # residue-class index -> (base input, reduced base value)
    out = []
    for a, v in table.items():
        key = (a % p).index()
        rv = v % p
        hit = seen.get(key)
        if hit is None:
            seen[key] = (a, rv)
        elif rv != hit[1]:
            out.append(P3Violation(modulus=p, a=a, base=hit[0]))
    return out


def verify_p3(table: FuncTable, max_violations: int = 100,
              threads: int = 1) -> P3Report:
    """Check f(a) = f(b) mod P whenever a = b mod P, over every monic
    irreducible P of degree <= D.

    Each residue class is compared against its canonically least member, so
    a class is clean iff all pairs within it agree.  Violations are collected
    exhaustively (up to max_violations retained) rather than fail-fast.
    """
    mods = []
    for d in range(1, table.D + 1):
        mods.extend(enumerate_monic_irreducibles(table.field, d))
    if threads > 1 and len(mods) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda p: _p3_scan_modulus(table, p), mods))
    else:
        chunks = [_p3_scan_modulus(table, p) for p in mods]
    violations = [v for chunk in chunks for v in chunk]
    violations.sort(key=lambda v: (v.modulus.sort_key(), v.a.sort_key(),
                                   v.base.sort_key()))
    count = len(violations)
    return P3Report(ok=count == 0,
                    violations=tuple(violations[:max_violations]),
                    violation_count=count,
                    irreducibles_checked=len(mods),
                    truncated=count > max_violations)


# -- growth profile -----------------------------------------------------------


@dataclass(frozen=True)
class GrowthRow:
    """Max value degree in one input-degree stratum against three caps.

    The caps are q^n/(27*q*n), (1-eps)*dsum(n), and q^n - 1.  The first is
    exceeded when max_deg reaches it (the interesting regime is strictly
    below), the other two when max_deg goes strictly over.
    """
    n: int
    max_deg: object  # int or NEG_INF
    qn_over_27qn: Fraction | None
    one_minus_eps_dsum: Fraction | None
    qn_minus_one: int
    exceeds_qn_over_27qn: bool | None
    exceeds_one_minus_eps_dsum: bool | None
    exceeds_qn_minus_one: bool


@dataclass(frozen=True)
class GrowthProfile:
    D: int
    epsilon: Fraction
    rows: tuple[GrowthRow, ...]


def growth_profile(table: FuncTable,
                   epsilon: Fraction = Fraction(1, 2)) -> GrowthProfile:
    q = table.field.q
    maxima = {n: NEG_INF for n in range(table.D + 1)}
    for a, v in table.items():
        n = 0 if a.is_zero() else a.deg
        if v.deg > maxima[n]:
            maxima[n] = v.deg
    rows = []
    for n in range(table.D + 1):
        md = maxima[n]
        window = q ** n - 1
        if n == 0:
            cap1 = cap2 = None
            ex1 = ex2 = None
        else:
            cap1 = Fraction(q ** n, 27 * q * n)
            cap2 = (1 - epsilon) * degree_sum(q, n)
            ex1 = md >= cap1
            ex2 = md > cap2
        rows.append(GrowthRow(
            n=n, max_deg=md,
            qn_over_27qn=cap1, one_minus_eps_dsum=cap2, qn_minus_one=window,
            exceeds_qn_over_27qn=ex1, exceeds_one_minus_eps_dsum=ex2,
            exceeds_qn_minus_one=md > window))
    return GrowthProfile(D=table.D, epsilon=epsilon, rows=tuple(rows))
