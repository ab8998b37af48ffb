"""Dense kernel computations over F_q.

Rows arrive as coefficient lists.  Over GF(2) each row lives in a single
Python int, one bit per column, and row operations are XORs; other fields
use plain lists with field arithmetic.  Elimination maintains reduced row
echelon form, so the pivot/free column split, and with it the canonical
kernel basis, is independent of row order.  Kernel basis vectors are emitted
one per free column, ascending; "first" always means the vector whose free
column index is least.
"""

from __future__ import annotations


def _rref_gf2(rows, ncols):
    pivots = []  # (row_int, pivot_col), pivot cols strictly increasing later
    for r in rows:
        r &= (1 << ncols) - 1
        for pr, pc in pivots:
            if (r >> pc) & 1:
                r ^= pr
        if not r:
            continue
        pc = (r & -r).bit_length() - 1
        for i, (pr, c) in enumerate(pivots):
            if (pr >> pc) & 1:
                pivots[i] = (pr ^ r, c)
        pivots.append((r, pc))
    pivots.sort(key=lambda t: t[1])
    return pivots


def _rref_generic(field, rows, ncols):
    pivots = []  # (row_list, pivot_col)
    for r in rows:
        r = list(r)
        for pr, pc in pivots:
            c = r[pc]
            if c:
                for j in range(ncols):
                    if pr[j]:
                        r[j] = field.sub(r[j], field.mul(c, pr[j]))
        pc = next((j for j in range(ncols) if r[j]), None)
        if pc is None:
            continue
        inv = field.inv(r[pc])
        if inv != 1:
            r = [field.mul(x, inv) for x in r]
        for i, (pr, c) in enumerate(pivots):
            f = pr[pc]
            if f:
                pivots[i] = ([field.sub(pr[j], field.mul(f, r[j]))
                              for j in range(ncols)], c)
        pivots.append((r, pc))
    pivots.sort(key=lambda t: t[1])
    return pivots


def kernel_basis(field, rows, ncols: int) -> list[tuple[int, ...]]:
    """Canonical kernel basis of the system rows * x = 0, one vector per
    free column in ascending column order."""
    if ncols < 0:
        raise ValueError("ncols must be >= 0")
    if ncols == 0:
        return []
    out = []
    if field.q == 2:
        packed = []
        for r in rows:
            if isinstance(r, int):
                packed.append(r)
            else:
                n = 0
                for j, c in enumerate(r):
                    if c:
                        n |= 1 << j
                packed.append(n)
        pivots = _rref_gf2(packed, ncols)
        pivot_cols = {pc for _, pc in pivots}
        for j in range(ncols):
            if j in pivot_cols:
                continue
            vec = [0] * ncols
            vec[j] = 1
            for pr, pc in pivots:
                if (pr >> j) & 1:
                    vec[pc] = 1
            out.append(tuple(vec))
        return out
    pivots = _rref_generic(field, rows, ncols)
    pivot_cols = {pc for _, pc in pivots}
    for j in range(ncols):
        if j in pivot_cols:
            continue
        vec = [0] * ncols
        vec[j] = 1
        for pr, pc in pivots:
            if pr[j]:
                vec[pc] = field.neg(pr[j])
        out.append(tuple(vec))
    return out


def kernel_vector(field, rows, ncols: int):
    """First canonical kernel basis vector, or None for a trivial kernel."""
    basis = kernel_basis(field, rows, ncols)
    return basis[0] if basis else None


def matrix_rank(field, rows, ncols: int) -> int:
    if field.q == 2:
        packed = []
        for r in rows:
            if isinstance(r, int):
                packed.append(r)
            else:
                n = 0
                for j, c in enumerate(r):
                    if c:
                        n |= 1 << j
                packed.append(n)
        return len(_rref_gf2(packed, ncols))
    return len(_rref_generic(field, rows, ncols))
