"""Exact sparse Gaussian elimination over the scalar field.

Rows and vectors are dicts ``column -> Scalar`` with no zero entries.
Pivots are chosen column by column (lowest index first); among candidate rows
the entry with the fewest terms wins, ties broken by row position.  The
choice is deterministic, and small pivots keep intermediate expressions short.
"""

from __future__ import annotations

from typing import Dict, Hashable, List, Sequence, Tuple

from .scalars import ONE, ZERO, Scalar

Row = Dict[int, Scalar]

__all__ = ["rref", "kernel", "kernel_with_free", "rank", "express_in_basis"]


def _sub_scaled(target: Row, c: Scalar, src: Row) -> None:
    """target -= c * src, dropping zeros."""
    for k, v in src.items():
        t = target.get(k)
        if t is None:
            target[k] = -(c * v)
        else:
            t = t - c * v
            if t.is_zero():
                del target[k]
            else:
                target[k] = t


def rref(rows: Sequence[Row], ncols: int) -> Dict[int, Row]:
    """Reduced row echelon form; returns pivot column -> normalized row."""
    active: List[Row] = [dict(r) for r in rows if r]
    pivots: Dict[int, Row] = {}
    for col in range(ncols):
        best = None
        for idx, r in enumerate(active):
            c = r.get(col)
            if c is not None:
                key = (c.nterms(), idx)
                if best is None or key < best[0]:
                    best = (key, idx)
        if best is None:
            continue
        prow = active.pop(best[1])
        p = prow[col]
        if not p.is_one():
            inv = p.inverse()
            prow = {k: v * inv for k, v in prow.items()}
        prow[col] = ONE
        for r in active:
            c = r.get(col)
            if c is not None:
                _sub_scaled(r, c, prow)
        for r in pivots.values():
            c = r.get(col)
            if c is not None:
                _sub_scaled(r, c, prow)
        active = [r for r in active if r]
        pivots[col] = prow
        if not active:
            break
    return pivots


def rank(rows: Sequence[Row], ncols: int) -> int:
    return len(rref(rows, ncols))


def kernel(rows: Sequence[Row], ncols: int) -> List[Row]:
    """Basis of the right null space; vector k has a 1 at the k-th free column
    and zeros at the other free columns."""
    return kernel_with_free(rows, ncols)[0]


def kernel_with_free(rows: Sequence[Row], ncols: int) -> Tuple[List[Row], List[int]]:
    """Kernel basis together with its free columns, in matching order."""
    piv = rref(rows, ncols)
    out = []
    free = []
    for f in range(ncols):
        if f in piv:
            continue
        vec = {f: ONE}
        for pc, prow in piv.items():
            c = prow.get(f)
            if c is not None:
                vec[pc] = -c
        out.append(vec)
        free.append(f)
    return out, free


def express_in_basis(vec: Dict[Hashable, Scalar], basis: Sequence[Dict[Hashable, Scalar]],
                     free: Sequence[Hashable]) -> Tuple[List[Scalar], Dict[Hashable, Scalar]]:
    """Coordinates of vec in a basis that is the identity on the ``free`` keys,
    together with the residual vec - sum(coords * basis)."""
    coords = [vec.get(f, ZERO) for f in free]
    resid = dict(vec)
    for c, b in zip(coords, basis):
        if c.is_zero():
            continue
        for k, v in b.items():
            t = resid.get(k)
            t = -(c * v) if t is None else t - c * v
            if t.is_zero():
                resid.pop(k, None)
            else:
                resid[k] = t
    return coords, resid
