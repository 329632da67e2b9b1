"""Exact product and grading tables for the null-basis algebra G(4,1).

The 32 canonical basis blades are geometric products of distinct generators
e0 < e1 < e2 < e3 < einf, encoded as bitmasks with weights e0=1, e1=2, e2=4,
e3=8, einf=16.  Because e0 and einf are null and pair to e0.einf = -1, these
blades are not grade-homogeneous, so all structure constants are computed in
an orthonormal model first and mapped back:

    e0 = (em - ep) / 2,    einf = em + ep,    ei -> ei,

where ep^2 = +1 and em^2 = -1 realize the (4,1) signature.  In that model a
blade product is a single blade with a reorder/metric sign and the true grade
is the popcount, which makes the product, outer, contraction and grade tables
below straightforward to build.  Every table entry is an exact Fraction.
"""

from __future__ import annotations

from fractions import Fraction

# Generator indices; 4 stands for the infinity generator.
E0, E1, E2, E3, EINF = 0, 1, 2, 3, 4
GENERATORS = (E0, E1, E2, E3, EINF)
DIM = 32
INDEX_NAMES = {E0: "0", E1: "1", E2: "2", E3: "3", EINF: "∞"}

_ONE = Fraction(1)
_HALF = Fraction(1, 2)

# Orthonormal bit layout: ep=1, e1=2, e2=4, e3=8, em=16 (em squares to -1).
_EP_BIT = 1
_EM_BIT = 16

_VECTOR_IMAGES = {
    E0: {_EM_BIT: _HALF, _EP_BIT: -_HALF},
    E1: {2: _ONE},
    E2: {4: _ONE},
    E3: {8: _ONE},
    EINF: {_EM_BIT: _ONE, _EP_BIT: _ONE},
}


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_of(mask: int):
    return tuple(i for i in GENERATORS if mask & (1 << i))


def _ortho_blade_mul(a: int, b: int):
    """Product of two orthonormal blades: (result mask, sign in {-1, 0, +1})."""
    sign = 1
    t = a >> 1
    while t:
        if (t & b).bit_count() & 1:
            sign = -sign
        t >>= 1
    if a & b & _EM_BIT:
        sign = -sign
    return a ^ b, sign


def _ortho_mul(x: dict, y: dict, keep=None) -> dict:
    out = {}
    for ma, ca in x.items():
        for mb, cb in y.items():
            if keep is not None and not keep(ma, mb):
                continue
            mask, sign = _ortho_blade_mul(ma, mb)
            if sign:
                val = out.get(mask, 0) + sign * ca * cb
                if val:
                    out[mask] = val
                else:
                    out.pop(mask, None)
    return out


def _invert_matrix(matrix):
    """Exact inverse of a square Fraction matrix by Gauss-Jordan."""
    n = len(matrix)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _build_tables():
    # Null blade -> orthonormal coordinates.
    to_ortho = []
    for mask in range(DIM):
        acc = {0: _ONE}
        for i in indices_of(mask):
            acc = _ortho_mul(acc, _VECTOR_IMAGES[i])
        to_ortho.append(acc)

    forward = [[to_ortho[col].get(row, Fraction(0)) for col in range(DIM)] for row in range(DIM)]
    backward = _invert_matrix(forward)
    to_null = []
    for omask in range(DIM):
        to_null.append({row: backward[row][omask] for row in range(DIM) if backward[row][omask]})

    def back(ortho: dict) -> dict:
        out = {}
        for omask, coeff in ortho.items():
            for nmask, factor in to_null[omask].items():
                val = out.get(nmask, 0) + coeff * factor
                if val:
                    out[nmask] = val
                else:
                    out.pop(nmask, None)
        return out

    def pair_table(keep):
        table = []
        for a in range(DIM):
            row = []
            for b in range(DIM):
                row.append(tuple(back(_ortho_mul(to_ortho[a], to_ortho[b], keep)).items()))
            table.append(row)
        return table

    gp = pair_table(None)
    outer = pair_table(lambda ma, mb: not (ma & mb))
    lcont = pair_table(lambda ma, mb: not (ma & ~mb))

    grade_split = []
    for mask in range(DIM):
        parts = {}
        for omask, coeff in to_ortho[mask].items():
            parts.setdefault(omask.bit_count(), {})[omask] = coeff
        grade_split.append({k: tuple(back(part).items()) for k, part in sorted(parts.items())})

    reversion = []
    involution = []
    for mask in range(DIM):
        rev = {}
        inv = {}
        for k, expansion in grade_split[mask].items():
            rsign = -1 if (k * (k - 1) // 2) & 1 else 1
            isign = -1 if k & 1 else 1
            for nmask, coeff in expansion:
                rev[nmask] = rev.get(nmask, 0) + rsign * coeff
                inv[nmask] = inv.get(nmask, 0) + isign * coeff
        reversion.append(tuple((m, c) for m, c in rev.items() if c))
        involution.append(tuple((m, c) for m, c in inv.items() if c))

    return gp, outer, lcont, grade_split, reversion, involution


GP_TABLE, OUTER_TABLE, LCONT_TABLE, GRADE_SPLIT, REVERSION_TABLE, INVOLUTION_TABLE = _build_tables()

# Grades that each canonical blade can contribute to.
BLADE_GRADES = tuple(tuple(GRADE_SPLIT[mask]) for mask in range(DIM))
