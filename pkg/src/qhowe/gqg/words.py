"""Formal linear combinations of generator words and their evaluation.

A word is a tuple of symbols read as an operator product, so the rightmost
symbol acts first.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Tuple, Union

from ..fock import SparseVec, TensorState
from ..scalars import ONE, Scalar
from .operators import LinOp

Word = Tuple[str, ...]

__all__ = ["WordExpr", "Word", "evaluate", "bracket", "word"]


class WordExpr:
    """Scalar-linear combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Dict[Word, Scalar], None] = None):
        self.terms: Dict[Word, Scalar] = {}
        for w, c in (terms or {}).items():
            if not c.is_zero():
                self.terms[tuple(w)] = c

    @classmethod
    def gen(cls, *syms: str) -> "WordExpr":
        return cls({tuple(syms): ONE})

    @classmethod
    def scalar(cls, c: Scalar) -> "WordExpr":
        return cls({(): c})

    def __add__(self, other: "WordExpr") -> "WordExpr":
        d = dict(self.terms)
        for w, c in other.terms.items():
            d[w] = d[w] + c if w in d else c
        return WordExpr(d)

    def __neg__(self) -> "WordExpr":
        return WordExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "WordExpr") -> "WordExpr":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, WordExpr):
            d: Dict[Word, Scalar] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    d[w] = d[w] + c if w in d else c
            return WordExpr(d)
        if isinstance(other, Scalar):
            return WordExpr({w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return WordExpr({w: other * c for w, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int) -> "WordExpr":
        out = WordExpr.scalar(ONE)
        for _ in range(k):
            out = out * self
        return out

    def map_symbols(self, f: Callable[[str], str]) -> "WordExpr":
        return WordExpr({tuple(f(s) for s in w): c for w, c in self.terms.items()})

    def symbols(self) -> List[str]:
        return sorted({s for w in self.terms for s in w})

    def degree_profile(self, shift: Callable[[str], int]) -> int:
        """Largest positive partial degree shift along any word, applied right to left."""
        best = 0
        for w in self.terms:
            acc = 0
            for s in reversed(w):
                acc += shift(s)
                best = max(best, acc)
        return best

    def total_shift(self, shift: Callable[[str], int]) -> int:
        vals = {sum(shift(s) for s in w) for w in self.terms}
        return max(vals) if vals else 0

    def __eq__(self, other):
        return isinstance(other, WordExpr) and self.terms == other.terms

    def __repr__(self):
        parts = []
        for w, c in sorted(self.terms.items()):
            parts.append(f"({c})*{' '.join(w) or '1'}")
        return " + ".join(parts) or "0"


def word(text: str) -> WordExpr:
    """'e0 e1 e2' -> the single word e0*e1*e2."""
    return WordExpr.gen(*text.split())


def bracket(u: WordExpr, v: WordExpr, t: Scalar = ONE) -> WordExpr:
    """[u, v]_t = uv - t vu."""
    return u * v - (t * (v * u) if not t.is_one() else v * u)


def evaluate(expr: WordExpr, ops: Callable[[str], LinOp], state: TensorState) -> SparseVec:
    """Apply expr to a basis state, sharing common word suffixes."""
    cache: Dict[Word, SparseVec] = {(): SparseVec({state: ONE})}

    def get(suffix: Word) -> SparseVec:
        hit = cache.get(suffix)
        if hit is not None:
            return hit
        inner = get(suffix[1:])
        vec = ops(suffix[0]).apply(inner) if inner else SparseVec()
        cache[suffix] = vec
        return vec

    out = SparseVec()
    for w, c in expr.terms.items():
        v = get(w)
        if v:
            out.axpy(c, v)
    return out
