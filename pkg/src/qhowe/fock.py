"""Basis states of tensor powers of the Fock space, slices and the polarization form.

A tensor state is a tuple of ``r`` occupation tuples, one per tensor factor,
each of length ``n``.  Read as a matrix, rows are tensor factors and columns
are Fock slots.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .combinatorics import Epsilon, Weight
from .scalars import ONE, ZERO, LaurentPoly, Scalar, q_factorial

__all__ = [
    "BasisState",
    "TensorState",
    "Slice",
    "SparseVec",
    "is_valid",
    "degree",
    "enumerate_slice",
    "state_weight",
    "transpose_view",
    "from_matrix",
    "norm",
    "pairing",
    "gram",
    "slice_count_oracle",
]

BasisState = Tuple[int, ...]
TensorState = Tuple[BasisState, ...]


def is_valid(m: Sequence[int], eps: Epsilon) -> bool:
    return all(x >= 0 and (b == 0 or x <= 1) for x, b in zip(m, eps.bits))


def degree(x: TensorState) -> int:
    return sum(sum(row) for row in x)


def state_weight(x: TensorState) -> Weight:
    n = len(x[0]) if x else 0
    return Weight(len(x), tuple(sum(row[j] for row in x) for j in range(n)))


def transpose_view(x: TensorState) -> Tuple[Tuple[int, ...], ...]:
    """The r x n occupation matrix; its columns are the per-slot states."""
    return tuple(tuple(row) for row in x)


def from_matrix(rows: Sequence[Sequence[int]]) -> TensorState:
    return tuple(tuple(int(a) for a in row) for row in rows)


def columns(x: TensorState) -> Tuple[Tuple[int, ...], ...]:
    return tuple(zip(*x))


class SparseVec(dict):
    """Map TensorState -> Scalar with no stored zeros."""

    def add_term(self, state, coeff: Scalar) -> None:
        if coeff.is_zero():
            return
        cur = self.get(state)
        if cur is None:
            self[state] = coeff
        else:
            s = cur + coeff
            if s.is_zero():
                del self[state]
            else:
                self[state] = s

    def axpy(self, a: Scalar, other: "SparseVec") -> None:
        """self += a * other."""
        if a.is_zero():
            return
        if a.is_one():
            for k, c in other.items():
                self.add_term(k, c)
        else:
            for k, c in other.items():
                self.add_term(k, a * c)

    def scaled(self, a: Scalar) -> "SparseVec":
        if a.is_zero():
            return SparseVec()
        return SparseVec({k: a * c for k, c in self.items()})

    def __add__(self, other: "SparseVec") -> "SparseVec":
        out = SparseVec(self)
        out.axpy(ONE, other)
        return out

    def __sub__(self, other: "SparseVec") -> "SparseVec":
        out = SparseVec(self)
        out.axpy(-ONE, other)
        return out

    def is_zero(self) -> bool:
        return not self

    @classmethod
    def basis(cls, state) -> "SparseVec":
        return cls({state: ONE})


# ---------------------------------------------------------------------------
# enumeration


def _column_fillings(total: int, r: int, fermionic: bool) -> List[Tuple[int, ...]]:
    """All ways to place `total` quanta in one slot across r factors."""
    if fermionic:
        if total > r:
            return []
        out = []
        for rows in itertools.combinations(range(r), total):
            col = [0] * r
            for s in rows:
                col[s] = 1
            out.append(tuple(col))
        return out
    out = []
    for bars in itertools.combinations(range(total + r - 1), r - 1):
        prev = -1
        col = []
        for b in bars:
            col.append(b - prev - 1)
            prev = b
        col.append(total + r - 1 - prev - 1)
        out.append(tuple(col))
    return out


def _column_sums(d: int, eps: Epsilon, r: int) -> Iterator[Tuple[int, ...]]:
    caps = [r if b else d for b in eps.bits]

    def rec(j, left):
        if j == eps.n - 1:
            if left <= caps[j]:
                yield (left,)
            return
        for c in range(min(left, caps[j]) + 1):
            for rest in rec(j + 1, left - c):
                yield (c,) + rest

    yield from rec(0, d)


def _states_for_colsums(colsums: Sequence[int], eps: Epsilon, r: int) -> List[TensorState]:
    per_col = [_column_fillings(c, r, b == 1) for c, b in zip(colsums, eps.bits)]
    out = []
    for cols in itertools.product(*per_col):
        out.append(tuple(tuple(col[s] for col in cols) for s in range(r)))
    return out


@dataclass
class Slice:
    eps: Epsilon
    r: int
    d: int
    weight: Optional[Weight]
    states: List[TensorState]
    index: Dict[TensorState, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {x: k for k, x in enumerate(self.states)}

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)


_SLICE_CACHE: Dict[tuple, Slice] = {}
_SLICE_LOCK = threading.Lock()


def enumerate_slice(eps: Epsilon, r: int, d: int, w: Optional[Weight] = None) -> Slice:
    """All states of total degree d (and weight w, if given), sorted."""
    if d < 0 or r < 1:
        raise ValueError("enumerate_slice needs d >= 0 and r >= 1")
    key = (eps, r, d, w)
    hit = _SLICE_CACHE.get(key)
    if hit is not None:
        return hit
    if w is not None:
        if w.s != r or len(w.m) != eps.n or sum(w.m) != d:
            states = []
        else:
            if any(c < 0 or (b and c > r) for c, b in zip(w.m, eps.bits)):
                states = []
            else:
                states = _states_for_colsums(w.m, eps, r)
    else:
        states = []
        for cs in _column_sums(d, eps, r):
            states.extend(_states_for_colsums(cs, eps, r))
    states.sort()
    sl = Slice(eps, r, d, w, states)
    with _SLICE_LOCK:
        return _SLICE_CACHE.setdefault(key, sl)


def weights_in_degree(eps: Epsilon, r: int, d: int) -> List[Weight]:
    return [Weight(r, cs) for cs in sorted(_column_sums(d, eps, r))]


def slice_count_oracle(eps: Epsilon, r: int, d: int) -> int:
    """Coefficient of t^d in ((1+t)^n1 / (1-t)^n0)^r, by power-series convolution."""
    series = [1] + [0] * d
    for _ in range(r):
        for _ in range(eps.n1):
            series = [series[k] + (series[k - 1] if k else 0) for k in range(d + 1)]
        for _ in range(eps.n0):
            acc = 0
            new = []
            for k in range(d + 1):
                acc += series[k]
                new.append(acc)
            series = new
    return series[d]


# ---------------------------------------------------------------------------
# polarization form

_NORM_CACHE: Dict[int, Scalar] = {}


def _slot_norm(m: int) -> Scalar:
    s = _NORM_CACHE.get(m)
    if s is None:
        s = Scalar(q_factorial(m) * LaurentPoly.monomial(m * (m - 1)))
        _NORM_CACHE[m] = s
    return s


def norm(x: TensorState) -> Scalar:
    """(x, x) for a basis state, taken factorwise."""
    out = ONE
    for row in x:
        for m in row:
            if m > 1:
                out = out * _slot_norm(m)
    return out


def _shape(states: Iterable[TensorState]):
    shapes = {(len(x), len(x[0]) if x else 0) for x in states}
    return shapes


def pairing(u: Dict[TensorState, Scalar], w: Dict[TensorState, Scalar]) -> Scalar:
    shapes = _shape(u) | _shape(w)
    if len(shapes) > 1:
        raise ValueError(f"pairing of vectors from different configurations: {sorted(shapes)}")
    if len(u) > len(w):
        u, w = w, u
    out = ZERO
    for x, c in u.items():
        d = w.get(x)
        if d is not None:
            out = out + c * d * norm(x)
    return out


def gram(sl: Slice) -> List[List[Scalar]]:
    k = len(sl.states)
    mat = [[ZERO] * k for _ in range(k)]
    for a, x in enumerate(sl.states):
        mat[a][a] = norm(x)
    return mat
