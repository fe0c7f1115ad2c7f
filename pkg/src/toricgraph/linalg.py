"""Dense Gaussian elimination over GF(q) on integer-encoded numpy matrices."""
from __future__ import annotations

import numpy as np

from .field import FieldSpec


def row_reduce(matrix, field: FieldSpec, full: bool = True):
    """Return ``(R, pivots)``: a row echelon form and its pivot columns.

    With ``full`` the form is reduced (pivots equal 1, zero above and below)
    and ``R`` keeps only the nonzero rows.  The input is not modified.
    """
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = field.vmul(a[r], field.inv(lead))
        targets = np.flatnonzero(a[:, c]) if full else r + 1 + np.flatnonzero(a[r + 1:, c])
        targets = targets[targets != r]
        if targets.size:
            factors = a[targets, c][:, None]
            a[targets] = field.vsub(a[targets], field.vmul(factors, a[r][None, :]))
        pivots.append(c)
        r += 1
    if full:
        a = a[:r]
    return a, pivots


def rank(matrix, field: FieldSpec) -> int:
    """Rank over GF(q).  Repeated rows are dropped before elimination."""
    a = np.asarray(matrix, dtype=np.int64)
    if a.size == 0:
        return 0
    a = np.unique(a, axis=0)
    # orient so that the eliminated dimension is the smaller one
    if a.shape[0] > a.shape[1]:
        a = a.T
    _, pivots = row_reduce(a, field, full=False)
    return len(pivots)
