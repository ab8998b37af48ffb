"""Algebraic relations certifying that a tabulated map is (or is not) given
by a polynomial.

Three solvers feed one another here.  find_relation looks for a nonzero
Q(X, Y) = sum c_ijk t^i X^j Y^k vanishing at every (A, f(A)) in a table;
its Y-slices yield a linear degree bound deg f(A) <= C3*deg A + C4.
find_linear_relation looks for A[X]-coefficient pairs (P, Q), not both zero,
with P(x)*y + Q(x) = 0 at sample points (x, y); recover_polymap divides -Q/P
exactly in K[X] to expose the underlying polynomial map.  fit_polynomial
interpolates and cross-validates directly.  check_vanishing_lemma audits the
three hypotheses that force such a table to be identically zero, and
schedule_check evaluates the pigeonhole counting that makes the linear
ansatz exist at scale.

All solving reduces to kernel vectors of F_q-linear systems; every returned
object is re-verified by direct evaluation, never trusted from the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, ExactDivisionError
from .functable import FuncTable, verify_p3
from .irreducibles import irreducible_product
from .linalg import kernel_vector
from .poly import NEG_INF, Poly, polys_up_to
from .ratfunc import (RatFunc, kpoly, kpoly_divmod, kpoly_eval,
                      kpoly_from_polys, kpoly_neg, lagrange_interpolate)

DEFAULT_MATRIX_BUDGET = 1 << 22


@dataclass(frozen=True)
class TriDegreeBounds:
    """Exponent box for Q(X, Y): 0 <= i <= i_max (t), j <= j_max (X),
    k <= k_max (Y)."""
    i_max: int
    j_max: int
    k_max: int

    def __post_init__(self):
        if min(self.i_max, self.j_max, self.k_max) < 0:
            raise ValueError("degree bounds must be >= 0")

    @property
    def unknowns(self) -> int:
        return (self.i_max + 1) * (self.j_max + 1) * (self.k_max + 1)

    def column(self, i: int, j: int, k: int) -> int:
        return ((i * (self.j_max + 1)) + j) * (self.k_max + 1) + k

    def triples(self):
        for i in range(self.i_max + 1):
            for j in range(self.j_max + 1):
                for k in range(self.k_max + 1):
                    yield i, j, k

    @classmethod
    def counting_schedule(cls, q: int, M: int) -> "TriDegreeBounds":
        """The box q^M/3 by q^M/(3M) by 9qM used by the counting argument."""
        if M < 2:
            raise ValueError("M must be >= 2")
        return cls(i_max=q ** M // 3, j_max=q ** M // (3 * M), k_max=9 * q * M)


@dataclass(frozen=True)
class RelationQ:
    """Nonzero Q with Q(A, f(A)) = 0 on a table; coefficient codes are laid
    out per TriDegreeBounds.column order."""
    bounds: TriDegreeBounds
    coeffs: tuple[int, ...]

    def coefficient(self, i: int, j: int, k: int) -> int:
        return self.coeffs[self.bounds.column(i, j, k)]

    def evaluate(self, field, x: Poly, y: Poly) -> Poly:
        """Direct evaluation, independent of any solver state."""
        t = Poly.gen(field)
        xp = _powers(x, self.bounds.j_max)
        yp = _powers(y, self.bounds.k_max)
        tp = _powers(t, self.bounds.i_max)
        acc = Poly.zero(field)
        for i, j, k in self.bounds.triples():
            c = self.coefficient(i, j, k)
            if c:
                acc = acc + (tp[i] * xp[j] * yp[k]).scaled(c)
        return acc

    def y_slices(self, field) -> list[list[Poly]]:
        """P_k(X) coefficients: slices[k][j] in F_q[t], trailing zeros kept."""
        out = []
        for k in range(self.bounds.k_max + 1):
            slice_k = []
            for j in range(self.bounds.j_max + 1):
                cs = [self.coefficient(i, j, k)
                      for i in range(self.bounds.i_max + 1)]
                slice_k.append(Poly(field, cs))
            out.append(slice_k)
        return out


def _powers(x: Poly, n: int) -> list[Poly]:
    out = [Poly.one(x.field)]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def find_relation(table: FuncTable, bounds: TriDegreeBounds,
                  budget: int = DEFAULT_MATRIX_BUDGET):
    """First canonical nonzero Q vanishing on the whole table, or None.

    One F_q equation per (input, t-power) pair; the kernel is computed over
    columns ordered by (i, j, k).  The returned relation is re-checked by
    direct evaluation on every table entry.
    """
    field = table.field
    ncols = bounds.unknowns
    rows = []
    nrows = 0
    for a, v in table.items():
        xp = _powers(a, bounds.j_max)
        yp = _powers(v, bounds.k_max)
        base = [[xp[j] * yp[k] for k in range(bounds.k_max + 1)]
                for j in range(bounds.j_max + 1)]
        height = 0
        for j in range(bounds.j_max + 1):
            for k in range(bounds.k_max + 1):
                d = base[j][k].deg
                if d is not NEG_INF:
                    height = max(height, d + bounds.i_max + 1)
        nrows += height
        if nrows * ncols > budget:
            raise BudgetExceeded(
                "relation system exceeds %d matrix entries" % budget)
        for r in range(height):
            row = [0] * ncols
            for i, j, k in bounds.triples():
                # coefficient of t^r in t^i * base is base[r - i]
                if 0 <= r - i:
                    c = base[j][k].coefficient(r - i)
                    if c:
                        row[bounds.column(i, j, k)] = c
            rows.append(row)
    vec = kernel_vector(field, rows, ncols)
    if vec is None:
        return None
    rel = RelationQ(bounds=bounds, coeffs=tuple(vec))
    for a, v in table.items():
        if not rel.evaluate(field, a, v).is_zero():
            raise AssertionError("solver returned a non-vanishing relation")
    return rel


# -- counting check -----------------------------------------------------------


@dataclass(frozen=True)
class UnknownCountReport:
    q: int
    M: int
    bounds: TriDegreeBounds
    unknowns: int
    equations: int
    degenerate: bool
    exceeds: bool | None


def unknown_count_check(q: int, M: int) -> UnknownCountReport:
    """Counting behind the existence of a relation: unknowns in the standard
    box versus q^(M+1) inputs times q^M coefficient constraints each.

    For small M the middle range collapses (j_max = 0); the counts are still
    reported but the comparison is not asserted.
    """
    if M < 2:
        raise ValueError("M must be >= 2 for the counting ranges")
    bounds = TriDegreeBounds.counting_schedule(q, M)
    unknowns = bounds.unknowns
    equations = q ** (2 * M + 1)
    degenerate = bounds.j_max == 0
    exceeds = None if degenerate else unknowns > equations
    return UnknownCountReport(q=q, M=M, bounds=bounds, unknowns=unknowns,
                              equations=equations, degenerate=degenerate,
                              exceeds=exceeds)


# -- degree bounds from a relation ---------------------------------------------


@dataclass(frozen=True)
class DegreeBoundCert:
    """deg f(A) <= c3 * deg A + c4 for nonzero A, read off a relation's
    Y-slices: c3 is the top X-degree across slices, c4 the top t-degree."""
    c3: int
    c4: int
    y_degree: int


def degree_bound_from_relation(rel: RelationQ, field) -> DegreeBoundCert:
    slices = rel.y_slices(field)
    y_degree = max((k for k, s in enumerate(slices)
                    if any(not c.is_zero() for c in s)), default=-1)
    if y_degree < 1:
        raise ValueError("relation must involve Y to bound growth")
    c3 = 0
    c4 = 0
    for s in slices[:y_degree + 1]:
        for j, c in enumerate(s):
            if not c.is_zero():
                c3 = max(c3, j)
                c4 = max(c4, c.deg)
    return DegreeBoundCert(c3=c3, c4=c4, y_degree=y_degree)


@dataclass(frozen=True)
class DegreeBoundReport:
    cert: DegreeBoundCert
    ok: bool
    violations: tuple[Poly, ...]


def check_degree_bound(table: FuncTable, cert: DegreeBoundCert) -> DegreeBoundReport:
    bad = []
    for a, v in table.items():
        if a.is_zero():
            continue
        if v.deg > cert.c3 * a.deg + cert.c4:
            bad.append(a)
    return DegreeBoundReport(cert=cert, ok=not bad, violations=tuple(bad))


# -- linear ansatz -----------------------------------------------------------


@dataclass(frozen=True)
class LinearCaps:
    """Degree caps for the pair (P, Q) in A[X]: X-degrees and coefficient
    t-degrees."""
    p_deg_x: int
    p_coeff_deg: int
    q_deg_x: int
    q_coeff_deg: int

    def __post_init__(self):
        if min(self.p_deg_x, self.p_coeff_deg,
               self.q_deg_x, self.q_coeff_deg) < 0:
            raise ValueError("caps must be >= 0")


@dataclass(frozen=True)
class LinearAnsatz:
    """(P, Q) in A[X] x A[X], not both zero, with P(x)y + Q(x) = 0 on the
    samples it was solved from."""
    p_coeffs: tuple[Poly, ...]
    q_coeffs: tuple[Poly, ...]
    caps: LinearCaps

    def residual(self, x: Poly, y: Poly) -> Poly:
        field = x.field
        acc = Poly.zero(field)
        xp = _powers(x, max(len(self.p_coeffs), len(self.q_coeffs)) - 1)
        for j, c in enumerate(self.p_coeffs):
            acc = acc + c * xp[j] * y
        for j, c in enumerate(self.q_coeffs):
            acc = acc + c * xp[j]
        return acc


def find_linear_relation(samples, caps: LinearCaps,
                         budget: int = DEFAULT_MATRIX_BUDGET):
    """First canonical (P, Q) pair vanishing on the samples, or None.

    Samples are (x, y) pairs with pairwise distinct x.  Columns: P's
    coefficient unknowns by (X-power, t-power), then Q's.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("need at least one sample")
    field = samples[0][0].field
    xs = [x for x, _ in samples]
    if len({x.index() for x in xs}) != len(xs):
        raise ValueError("sample inputs must be pairwise distinct")
    p_cols = (caps.p_deg_x + 1) * (caps.p_coeff_deg + 1)
    q_cols = (caps.q_deg_x + 1) * (caps.q_coeff_deg + 1)
    ncols = p_cols + q_cols

    def p_col(j, i):
        return j * (caps.p_coeff_deg + 1) + i

    def q_col(j, i):
        return p_cols + j * (caps.q_coeff_deg + 1) + i

    rows = []
    nrows = 0
    for x, y in samples:
        xp = _powers(x, max(caps.p_deg_x, caps.q_deg_x))
        pbase = [xp[j] * y for j in range(caps.p_deg_x + 1)]
        qbase = [xp[j] for j in range(caps.q_deg_x + 1)]
        height = 0
        for b in pbase:
            if b.deg is not NEG_INF:
                height = max(height, b.deg + caps.p_coeff_deg + 1)
        for b in qbase:
            if b.deg is not NEG_INF:
                height = max(height, b.deg + caps.q_coeff_deg + 1)
        nrows += height
        if nrows * ncols > budget:
            raise BudgetExceeded(
                "linear ansatz system exceeds %d matrix entries" % budget)
        for r in range(height):
            row = [0] * ncols
            for j in range(caps.p_deg_x + 1):
                for i in range(caps.p_coeff_deg + 1):
                    if r - i >= 0:
                        c = pbase[j].coefficient(r - i)
                        if c:
                            row[p_col(j, i)] = c
            for j in range(caps.q_deg_x + 1):
                for i in range(caps.q_coeff_deg + 1):
                    if r - i >= 0:
                        c = qbase[j].coefficient(r - i)
                        if c:
                            row[q_col(j, i)] = c
            rows.append(row)
    vec = kernel_vector(field, rows, ncols)
    if vec is None:
        return None
    p_coeffs = []
    for j in range(caps.p_deg_x + 1):
        cs = [vec[p_col(j, i)] for i in range(caps.p_coeff_deg + 1)]
        p_coeffs.append(Poly(field, cs))
    q_coeffs = []
    for j in range(caps.q_deg_x + 1):
        cs = [vec[q_col(j, i)] for i in range(caps.q_coeff_deg + 1)]
        q_coeffs.append(Poly(field, cs))
    while p_coeffs and p_coeffs[-1].is_zero():
        p_coeffs.pop()
    while q_coeffs and q_coeffs[-1].is_zero():
        q_coeffs.pop()
    ansatz = LinearAnsatz(p_coeffs=tuple(p_coeffs), q_coeffs=tuple(q_coeffs),
                          caps=caps)
    for x, y in samples:
        if not ansatz.residual(x, y).is_zero():
            raise AssertionError("solver returned a non-vanishing ansatz")
    return ansatz


def recover_polymap(ansatz: LinearAnsatz) -> tuple[RatFunc, ...]:
    """F = -Q/P by exact division in K[X]; a remainder means the ansatz does
    not certify a polynomial map."""
    if not ansatz.p_coeffs:
        raise ValueError("cannot recover a map from P = 0")
    p = kpoly_from_polys(ansatz.p_coeffs)
    q = kpoly_from_polys(ansatz.q_coeffs)
    quot, rem = kpoly_divmod(kpoly_neg(q), p)
    if rem:
        raise ExactDivisionError("-Q is not divisible by P in K[X]")
    return quot


# -- direct interpolation -----------------------------------------------------


@dataclass(frozen=True)
class FitReport:
    coeffs: tuple[RatFunc, ...]
    degree_cap: int
    holdout_ok: bool
    mismatches: tuple[Poly, ...]
    values_in_ring: bool


def fit_polynomial(points, B: int, max_mismatches: int = 10) -> FitReport:
    """Interpolate degree <= B through the first B+1 points, then judge it.

    Reports whether the interpolant matches every remaining point and whether
    all its values on the given inputs land in F_q[t] rather than properly
    in K.
    """
    points = list(points)
    if len(points) < B + 1:
        raise ValueError("need at least B+1 points")
    coeffs = lagrange_interpolate(points[:B + 1])
    mism = []
    in_ring = True
    for x, y in points:
        val = kpoly_eval(coeffs, RatFunc.from_poly(x))
        if not val.is_poly():
            in_ring = False
        if val != RatFunc.from_poly(y) and len(mism) < max_mismatches:
            mism.append(x)
    return FitReport(coeffs=coeffs, degree_cap=B, holdout_ok=not mism,
                     mismatches=tuple(mism), values_in_ring=in_ring)


# -- vanishing criterion --------------------------------------------------------


@dataclass(frozen=True)
class VanishingReport:
    """Audit of: (a) congruence preservation, (b) deg f(A) <= q^deg A - 1
    above the floor C1, (c) f = 0 at degrees <= C1.  When all three hold the
    table must be identically zero; any nonzero entry is reported with the
    product of irreducibles that must divide it."""
    c1: int
    congruence_ok: bool
    congruence_violations: tuple
    degree_cap_ok: bool
    degree_cap_witnesses: tuple[Poly, ...]
    zero_floor_ok: bool
    zero_floor_witnesses: tuple[Poly, ...]
    hypotheses_ok: bool
    all_zero: bool
    counterexample: Poly | None
    counterexample_value: Poly | None
    divisibility_witness: Poly | None
    witness_divides: bool | None

    @property
    def ok(self) -> bool:
        return self.hypotheses_ok and self.all_zero


def check_vanishing_lemma(table: FuncTable, c1: int,
                          threads: int = 1) -> VanishingReport:
    if not (0 <= c1 <= table.D):
        raise ValueError("need 0 <= C1 <= D")
    field, q = table.field, table.field.q
    p3 = verify_p3(table, threads=threads)
    cap_bad = []
    floor_bad = []
    first_nonzero = None
    for a, v in table.items():
        n = 0 if a.is_zero() else a.deg
        if n <= c1:
            if not v.is_zero():
                floor_bad.append(a)
        elif not (v.deg <= q ** n - 1):
            cap_bad.append(a)
        if first_nonzero is None and not v.is_zero():
            first_nonzero = a
    hyp_ok = p3.ok and not cap_bad and not floor_bad
    if first_nonzero is None:
        return VanishingReport(
            c1=c1, congruence_ok=p3.ok, congruence_violations=p3.violations,
            degree_cap_ok=not cap_bad, degree_cap_witnesses=tuple(cap_bad),
            zero_floor_ok=not floor_bad, zero_floor_witnesses=tuple(floor_bad),
            hypotheses_ok=hyp_ok, all_zero=True,
            counterexample=None, counterexample_value=None,
            divisibility_witness=None, witness_divides=None)
    n = 0 if first_nonzero.is_zero() else first_nonzero.deg
    witness = irreducible_product(field, n)
    value = table.lookup(first_nonzero)
    divides = (value % witness).is_zero() if witness.deg > 0 else True
    return VanishingReport(
        c1=c1, congruence_ok=p3.ok, congruence_violations=p3.violations,
        degree_cap_ok=not cap_bad, degree_cap_witnesses=tuple(cap_bad),
        zero_floor_ok=not floor_bad, zero_floor_witnesses=tuple(floor_bad),
        hypotheses_ok=hyp_ok, all_zero=False,
        counterexample=first_nonzero, counterexample_value=value,
        divisibility_witness=witness, witness_divides=divides)


# -- pigeonhole schedule ---------------------------------------------------------


@dataclass(frozen=True)
class ScheduleReport:
    """Parameters (N, D2) derived from (D1, eps, delta, C5, C6), plus the two
    exponents the pigeonhole compares: distinct value tuples on U^0..U^N
    versus available (P, Q) pairs."""
    N: int
    D2: int
    tuple_exponent: int
    choice_exponent: Fraction
    counting_ok: bool


def schedule_check(D1: int, epsilon: Fraction, delta: int,
                   C5: int, C6: int) -> ScheduleReport:
    if D1 <= 0 or delta <= 0:
        raise ValueError("D1 and delta must be positive")
    epsilon = Fraction(epsilon)
    if not (0 < epsilon < 2):
        raise ValueError("epsilon must lie in (0, 2)")
    n_plus_1 = math.floor(Fraction((2 - epsilon) * D1, delta))
    if n_plus_1 < 2:
        raise ValueError("schedule degenerates: (2-eps)*D1/delta < 2")
    N = n_plus_1 - 1
    D2 = math.ceil(Fraction(delta, epsilon) * N * (N + 1))
    tuple_exponent = D1 * N * (N + 1) // 2 + D2 * (N + 1) + N + 1
    choice_exponent = Fraction(D1 * D2 + (D1 - C5) * (D2 - C6), delta)
    return ScheduleReport(N=N, D2=D2, tuple_exponent=tuple_exponent,
                          choice_exponent=choice_exponent,
                          counting_ok=choice_exponent > tuple_exponent)


def linear_growth_fit(samples) -> tuple[int, int]:
    """Smallest slope C5, then offset C6, with deg y <= C5*n + C6 over the
    samples ((x_n, y_n) indexed by position n)."""
    degs = [(n, y.deg) for n, (_, y) in enumerate(samples)
            if y.deg is not NEG_INF]
    if not degs:
        return 0, 0
    c5 = 0
    for n, d in degs:
        if n > 0:
            c5 = max(c5, math.ceil(Fraction(d - degs[0][1], n)))
    c5 = max(c5, 0)
    c6 = max(d - c5 * n for n, d in degs)
    return c5, max(c6, 0)


# -- end-to-end workflow -----------------------------------------------------------


@dataclass(frozen=True)
class PipelineReport:
    steps: tuple[tuple[str, bool, str], ...]
    relation: RelationQ | None
    cert: DegreeBoundCert | None
    ansatz: LinearAnsatz | None
    recovered: tuple[RatFunc, ...] | None
    reproduces_table: bool
    ok: bool


def run_pipeline(table: FuncTable, bounds: TriDegreeBounds, u: Poly, N: int,
                 caps: LinearCaps | None = None) -> PipelineReport:
    """Relation -> degree bound -> linear ansatz on powers of u -> exact
    division -> full-table cross-check."""
    steps = []
    rel = cert = ansatz = recovered = None
    reproduces = False

    rel = find_relation(table, bounds)
    steps.append(("find_relation", rel is not None,
                  "found" if rel else "no nonzero relation in the box"))
    if rel is not None:
        try:
            cert = degree_bound_from_relation(rel, table.field)
            rep = check_degree_bound(table, cert)
            steps.append(("degree_bound", rep.ok,
                          "C3=%d C4=%d, %d violations"
                          % (cert.c3, cert.c4, len(rep.violations))))
        except ValueError as exc:
            steps.append(("degree_bound", False, str(exc)))
            cert = None
    if cert is not None and steps[-1][1]:
        if u.deg * N > table.D:
            steps.append(("linear_relation", False,
                          "powers of u up to N leave the table domain"))
        else:
            if caps is None:
                caps = LinearCaps(p_deg_x=0, p_coeff_deg=0,
                                  q_deg_x=cert.c3, q_coeff_deg=cert.c4)
            samples = [(u ** n, table.lookup(u ** n)) for n in range(N + 1)]
            ansatz = find_linear_relation(samples, caps)
            steps.append(("linear_relation", ansatz is not None,
                          "found" if ansatz else "trivial kernel under caps"))
    if ansatz is not None:
        try:
            recovered = recover_polymap(ansatz)
            steps.append(("recover", True, "exact division"))
        except (ValueError, ExactDivisionError) as exc:
            steps.append(("recover", False, str(exc)))
    if recovered is not None:
        reproduces = all(
            kpoly_eval(recovered, RatFunc.from_poly(a)) == RatFunc.from_poly(v)
            for a, v in table.items())
        steps.append(("reproduce_table", reproduces,
                      "matches all %d entries" % (table.field.q ** (table.D + 1))
                      if reproduces else "some entry disagrees"))
    ok = bool(steps) and all(s[1] for s in steps)
    return PipelineReport(steps=tuple(steps), relation=rel, cert=cert,
                          ansatz=ansatz, recovered=recovered,
                          reproduces_table=reproduces, ok=ok)
