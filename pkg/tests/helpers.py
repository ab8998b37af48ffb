"""Shared builders for the test suite."""

from fqtlab import (FuncTable, crt, enumerate_monic_irreducibles,
                    irreducible_product)
from fqtlab.poly import Poly, polys_up_to


def forced_table(field, D, c1, rng):
    """A table that honestly satisfies all three vanishing hypotheses.

    Entries of degree <= c1 are zero.  Above that, each entry is drawn from
    the set of values that are simultaneously congruence-consistent with the
    rows already placed (one congruence per irreducible of degree <= n) and
    inside the degree cap q^n - 1.  The draw uses rng, though the admissible
    set turns out to be a singleton; the point is that the construction
    never assumes the conclusion.
    """
    q = field.q
    values = {}
    for a in polys_up_to(field, D):
        n = 0 if a.is_zero() else a.deg
        if n <= c1:
            values[a] = Poly.zero(field)
            continue
        modulus = irreducible_product(field, n)
        residues, mods = [], []
        for d in range(1, n + 1):
            for p in enumerate_monic_irreducibles(field, d):
                residues.append(values[a % p] % p)
                mods.append(p)
        r = crt(residues, mods)
        # candidates r + modulus*h: any h != 0 overshoots the cap already at
        # constant h, so scanning constants finds every admissible value
        admissible = [c for c in (r + modulus.scaled(h) for h in range(q))
                      if c.is_zero() or c.deg <= q ** n - 1]
        values[a] = rng.choice(admissible)
    return FuncTable(field, D, values)
