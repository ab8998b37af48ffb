"""A congruence-preserving table with forced fast degree growth.

The construction walks inputs in canonical order.  Constants map to zero.
For an input B of degree n, every monic irreducible P of degree <= n already
constrains the value mod P: it must agree with the value at B mod P, which
was assigned earlier.  The CRT lift R of those residues has degree below
dsum(n) = deg(prod P), and the value is then set to R + prod P, pinning
deg g(B) = dsum(n), inside [q^n, 2*q^n).

Every step is recorded in a trace so the whole table can be re-derived and
audited entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded
from .functable import FuncTable, verify_p3
from .irreducibles import enumerate_monic_irreducibles, irreducible_product
from .poly import Poly, crt, polys_up_to

DEFAULT_DEGREE_BUDGET = 1 << 14


@dataclass(frozen=True)
class TraceRow:
    """One constructed entry: value = crt_value + modulus."""
    b: Poly
    residue_pairs: tuple[tuple[Poly, Poly], ...]  # (P, B mod P)
    crt_value: Poly
    modulus: Poly
    value: Poly


@dataclass(frozen=True)
class ConstructionTrace:
    D: int
    rows: tuple[TraceRow, ...]


@dataclass(frozen=True)
class CertifyReport:
    ok: bool
    congruence_ok: bool
    congruence_violations: tuple
    window_ok: bool
    window_failures: tuple[Poly, ...]
    trace_ok: bool
    trace_failures: tuple[str, ...]


def build_counterexample(field, D: int,
                         budget: int = DEFAULT_DEGREE_BUDGET
                         ) -> tuple[FuncTable, ConstructionTrace]:
    if D < 1:
        raise ValueError("D must be >= 1")
    if field.q ** D > budget:
        raise BudgetExceeded(
            "construction at D=%d materializes degree ~%d > budget %d"
            % (D, 2 * field.q ** D, budget))
    values: dict[Poly, Poly] = {}
    zero = Poly.zero(field)
    for a in polys_up_to(field, 0):
        values[a] = zero
    rows = []
    irreds: list[Poly] = []
    for n in range(1, D + 1):
        irreds.extend(enumerate_monic_irreducibles(field, n))
        modulus = irreducible_product(field, n)
        base = field.q ** n
        for k in range(base, base * field.q):
            b = Poly.from_index(field, k)
            pairs = tuple((p, b % p) for p in irreds)
            residues = [values[rp] % p for p, rp in pairs]
            r = crt(residues, irreds)
            value = r + modulus
            values[b] = value
            rows.append(TraceRow(b=b, residue_pairs=pairs, crt_value=r,
                                 modulus=modulus, value=value))
    table = FuncTable(field, D, values)
    return table, ConstructionTrace(D=D, rows=tuple(rows))


def certify_counterexample(table: FuncTable, trace: ConstructionTrace,
                           threads: int = 1) -> CertifyReport:
    """Re-derive and audit a constructed table.

    Three independent gates: the congruence check over all monic irreducibles
    of degree <= D, the degree window q^n <= deg g(B) < 2*q^n for every B of
    degree n >= 1, and row-by-row trace consistency (recomputed moduli and
    residue pairs, CRT degree bound, value assembly, and the value's
    congruences against earlier entries).
    """
    field, q = table.field, table.field.q
    p3 = verify_p3(table, threads=threads)

    window_failures = []
    for a, v in table.items():
        n = a.deg
        if isinstance(n, int) and n >= 1:
            if not (q ** n <= v.deg < 2 * q ** n):
                window_failures.append(a)

    trace_failures = []
    expected_rows = q ** (table.D + 1) - q
    if trace.D != table.D:
        trace_failures.append("trace D=%d does not match table D=%d"
                              % (trace.D, table.D))
    if len(trace.rows) != expected_rows:
        trace_failures.append("trace has %d rows, expected %d"
                              % (len(trace.rows), expected_rows))
    irreds: list[Poly] = []
    level = 0
    seen = iter(polys_up_to(field, table.D))
    for _ in range(q):  # skip degree-<=0 inputs, which carry no rows
        next(seen)
    for row in trace.rows:
        b = row.b
        expected_b = next(seen, None)
        if expected_b != b:
            trace_failures.append("row for %s out of construction order" % b)
        n = b.deg
        while level < n:
            level += 1
            irreds.extend(enumerate_monic_irreducibles(field, level))
        if row.modulus != irreducible_product(field, n):
            trace_failures.append("row %s: modulus mismatch" % b)
            continue
        if [p for p, _ in row.residue_pairs] != irreds:
            trace_failures.append("row %s: irreducible list mismatch" % b)
            continue
        bad = False
        for p, rp in row.residue_pairs:
            if rp != b % p:
                trace_failures.append("row %s: residue of input mod %s wrong"
                                      % (b, p))
                bad = True
                break
            if (row.value - table.lookup(rp)) % p:
                trace_failures.append("row %s: value not congruent to value "
                                      "at %s mod %s" % (b, rp, p))
                bad = True
                break
        if bad:
            continue
        if not row.crt_value.deg < row.modulus.deg:
            trace_failures.append("row %s: CRT lift too large" % b)
        if row.crt_value + row.modulus != row.value:
            trace_failures.append("row %s: value is not lift + modulus" % b)
        if table.lookup(b) != row.value:
            trace_failures.append("row %s: table disagrees with trace" % b)

    ok = p3.ok and not window_failures and not trace_failures
    return CertifyReport(ok=ok,
                         congruence_ok=p3.ok,
                         congruence_violations=p3.violations,
                         window_ok=not window_failures,
                         window_failures=tuple(window_failures),
                         trace_ok=not trace_failures,
                         trace_failures=tuple(trace_failures))
