"""Module configurations, sparse operators and the oscillator generator actions."""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..combinatorics import Epsilon, Weight
from ..fock import SparseVec, TensorState
from ..scalars import (
    I_UNIT,
    ONE,
    V,
    Scalar,
    q_sub_pow,
    quantum_int,
)

__all__ = [
    "ConfigError",
    "ModuleConfig",
    "LinOp",
    "GQGModule",
    "block_generator",
    "tensor_extend",
    "psi_twist",
    "parse_symbol",
    "qint",
]


class ConfigError(ValueError):
    """An inconsistent module configuration."""


_COMPAT = {
    ("D", "W"): 1,
    ("D", "W2"): 0,
    ("C", "W"): 0,
    ("C", "W2"): 1,
}


@dataclass(frozen=True)
class ModuleConfig:
    """One oscillator module family and the number of tensor blocks.

    ``psi`` selects the twist f_0 -> -f_0, k_0 -> -k_0 on each block; ``None``
    picks the default (on for type D on a single Fock space, off otherwise).
    """

    X: str
    eps: Epsilon
    kind: str
    ell: int
    psi: Optional[bool] = None

    def __post_init__(self):
        if self.X not in ("C", "D"):
            raise ConfigError(f"type must be C or D, got {self.X!r}")
        if self.kind not in ("W", "W2"):
            raise ConfigError(f"module must be W or W2, got {self.kind!r}")
        if not isinstance(self.eps, Epsilon):
            object.__setattr__(self, "eps", Epsilon.parse(str(self.eps)))
        need = _COMPAT[(self.X, self.kind)]
        if self.eps[1] != need:
            raise ConfigError(
                f"type {self.X} on module {self.kind} requires epsilon_1 = {need}, "
                f"got epsilon = {self.eps}"
            )
        if self.ell < 1:
            raise ConfigError("ell must be at least 1")
        if self.psi is None:
            object.__setattr__(self, "psi", self.X == "D" and self.kind == "W")
        if self.psi and self.X != "D":
            raise ConfigError("the psi twist is defined for type D only")

    @property
    def n(self) -> int:
        return self.eps.n

    @property
    def r(self) -> int:
        """Number of Fock tensor factors."""
        return self.ell if self.kind == "W" else 2 * self.ell

    @property
    def block_size(self) -> int:
        return 1 if self.kind == "W" else 2

    @property
    def branch_const(self) -> Scalar:
        """c with k_{delta_j} = c * q_j^{m_j} on each Fock factor."""
        if self.X == "D" and self.kind == "W" and not self.psi:
            return I_UNIT * V
        if self.X == "D" and self.kind == "W2" and self.psi:
            raise ConfigError("no branch constant in Q(i)(v) for the twisted two-factor D module")
        return V

    @property
    def family(self) -> str:
        return "O" if self.kind == "W" else "Sp"

    def label(self) -> str:
        tw = "+psi" if self.psi else ""
        return f"{self.X}/{self.kind}{tw} eps={self.eps} ell={self.ell}"

    def to_dict(self) -> dict:
        return {"type": self.X, "epsilon": str(self.eps), "module": self.kind,
                "ell": self.ell, "psi_twist": bool(self.psi)}


def psi_twist(cfg: ModuleConfig) -> ModuleConfig:
    if cfg.X != "D":
        raise ConfigError("the psi twist is defined for type D only")
    return replace(cfg, psi=not cfg.psi)


# ---------------------------------------------------------------------------
# symbols:  e<i>, f<i>, k<i>, K<i> (k_{alpha_i}^{-1}), d<j>, D<j> (k_{delta_j}^{+-1}),
#           s<j> (sigma_j)

_SYM_RE = re.compile(r"([efkKdDs])(\d+)")


@lru_cache(maxsize=None)
def parse_symbol(sym: str) -> Tuple[str, int]:
    m = _SYM_RE.fullmatch(sym)
    if m is None:
        raise ValueError(f"unknown generator symbol {sym!r}")
    return m.group(1), int(m.group(2))


@lru_cache(maxsize=None)
def qint(m: int) -> Scalar:
    if m == 1:
        return ONE
    return Scalar(quantum_int(m))


# ---------------------------------------------------------------------------
# sparse linear operators


class LinOp:
    """A linear operator given on basis states, memoized per state.

    ``deg_shift`` is the (lo, hi) range of degree changes; ``weight_shift``
    the change of weight if the operator is homogeneous.
    """

    __slots__ = ("name", "_fn", "_memo", "deg_shift", "weight_shift", "diagonal")

    def __init__(self, name: str, fn: Callable[[TensorState], Dict[TensorState, Scalar]],
                 deg_shift=(0, 0), weight_shift: Optional[Tuple[int, ...]] = None,
                 diagonal: bool = False):
        self.name = name
        self._fn = fn
        self._memo: Dict[TensorState, Dict[TensorState, Scalar]] = {}
        self.deg_shift = tuple(deg_shift)
        self.weight_shift = weight_shift
        self.diagonal = diagonal

    def image(self, x: TensorState) -> Dict[TensorState, Scalar]:
        out = self._memo.get(x)
        if out is None:
            out = self._fn(x)
            self._memo[x] = out
        return out

    def apply(self, vec: Dict[TensorState, Scalar]) -> SparseVec:
        out = SparseVec()
        for x, c in vec.items():
            img = self.image(x)
            if not img:
                continue
            if c is ONE:
                for y, d in img.items():
                    out.add_term(y, d)
            else:
                for y, d in img.items():
                    out.add_term(y, c * d)
        return out

    __call__ = apply

    def clear(self):
        self._memo.clear()

    # -- algebra of operators ------------------------------------------------
    def __matmul__(self, other: "LinOp") -> "LinOp":
        a, b = self, other

        def fn(x):
            return dict(a.apply(b.image(x)))

        ws = None
        if a.weight_shift is not None and b.weight_shift is not None:
            ws = tuple(p + q for p, q in zip(a.weight_shift, b.weight_shift))
        return LinOp(f"{a.name}*{b.name}", fn,
                     (a.deg_shift[0] + b.deg_shift[0], a.deg_shift[1] + b.deg_shift[1]),
                     ws, a.diagonal and b.diagonal)

    def __add__(self, other: "LinOp") -> "LinOp":
        return LinOp.combine([(ONE, self), (ONE, other)], f"({self.name}+{other.name})")

    def __sub__(self, other: "LinOp") -> "LinOp":
        return LinOp.combine([(ONE, self), (-ONE, other)], f"({self.name}-{other.name})")

    def __neg__(self) -> "LinOp":
        return LinOp.combine([(-ONE, self)], f"-{self.name}")

    def scaled(self, c: Scalar) -> "LinOp":
        return LinOp.combine([(c, self)], f"({c})*{self.name}")

    @staticmethod
    def combine(terms: Sequence[Tuple[Scalar, "LinOp"]], name: str) -> "LinOp":
        terms = [(c, op) for c, op in terms if not c.is_zero()]

        def fn(x):
            out = SparseVec()
            for c, op in terms:
                for y, d in op.image(x).items():
                    out.add_term(y, c * d)
            return dict(out)

        if terms:
            lo = min(op.deg_shift[0] for _, op in terms)
            hi = max(op.deg_shift[1] for _, op in terms)
            shifts = {op.weight_shift for _, op in terms}
            ws = shifts.pop() if len(shifts) == 1 else None
            diag = all(op.diagonal for _, op in terms)
        else:
            lo = hi = 0
            ws = None
            diag = True
        return LinOp(name, fn, (lo, hi), ws, diag)

    @staticmethod
    def identity(n: int) -> "LinOp":
        return LinOp("1", lambda x: {x: ONE}, (0, 0), (0,) * n, True)

    def rows_on(self, states: Sequence[TensorState]) -> Dict[TensorState, Dict[int, Scalar]]:
        """Matrix on the given input states as output-state -> {column: entry}."""
        rows: Dict[TensorState, Dict[int, Scalar]] = {}
        for col, x in enumerate(states):
            for y, c in self.image(x).items():
                rows.setdefault(y, {})[col] = c
        return rows


# ---------------------------------------------------------------------------
# generator actions

Block = Tuple[Tuple[int, ...], ...]


class GQGModule:
    """Generator actions of the generalized quantum group on W^{(x) r}."""

    def __init__(self, cfg: ModuleConfig):
        self.cfg = cfg
        self.eps = cfg.eps
        self.n = cfg.n
        self.par = cfg.eps.bits
        self._ops: Dict[str, LinOp] = {}
        self._qp: Dict[Tuple[int, int], Scalar] = {}

    # -- scalar helpers --------------------------------------------------------
    def qp(self, j: int, e: int) -> Scalar:
        """q_j ** e for 1-based slot j."""
        key = (j, e)
        s = self._qp.get(key)
        if s is None:
            s = q_sub_pow(self.par[j - 1], e)
            self._qp[key] = s
        return s

    def valid_slot(self, j: int, value: int) -> bool:
        return value >= 0 and (self.par[j - 1] == 0 or value <= 1)

    @property
    def nodes(self) -> List[int]:
        return list(range(self.n))

    # -- type A on one Fock factor (i >= 1) ----------------------------------
    def _row_e(self, i: int, row):
        b = row[i]
        if b < 1 or not self.valid_slot(i, row[i - 1] + 1):
            return None
        new = list(row)
        new[i - 1] += 1
        new[i] -= 1
        return tuple(new), qint(b)

    def _row_f(self, i: int, row):
        a = row[i - 1]
        if a < 1 or not self.valid_slot(i + 1, row[i] + 1):
            return None
        new = list(row)
        new[i - 1] -= 1
        new[i] += 1
        return tuple(new), qint(a)

    def _row_k(self, i: int, row, sign: int = 1) -> Scalar:
        return self.qp(i, sign * row[i - 1]) * self.qp(i + 1, -sign * row[i])

    # -- block level -----------------------------------------------------------
    def block_e(self, i: int, B: Block) -> List[Tuple[Block, Scalar]]:
        if i >= 1:
            return self._coproduct_e(i, B)
        X, kind = self.cfg.X, self.cfg.kind
        if kind == "W":
            m = B[0]
            if X == "D":
                if m[0] >= 1 and m[1] >= 1:
                    new = (m[0] - 1, m[1] - 1) + m[2:]
                    return [((new,), qint(m[1]))]
                return []
            if m[0] >= 2:
                c = qint(m[0]) * qint(m[0] - 1) / (qint(2) * qint(2))
                return [(((m[0] - 2,) + m[1:],), c)]
            return []
        m, mp = B
        if X == "D":
            out = []
            if m[1] >= 1 and mp[0] >= 1:
                out.append(((_sub(m, 1), _sub(mp, 0)), qint(m[1]) * qint(mp[0])))
            if m[0] >= 1 and mp[1] >= 1:
                c = -(self.qp(1, -mp[0]) * self.qp(2, -m[1]) * Scalar.qpow(-1)
                      * qint(m[0]) * qint(mp[1]))
                out.append(((_sub(m, 0), _sub(mp, 1)), c))
            return out
        if m[0] >= 1 and mp[0] >= 1:
            return [((_sub(m, 0), _sub(mp, 0)), qint(m[0]) * qint(mp[0]))]
        return []

    def block_f(self, i: int, B: Block) -> List[Tuple[Block, Scalar]]:
        if i >= 1:
            return self._coproduct_f(i, B)
        X, kind = self.cfg.X, self.cfg.kind
        sign = -ONE if self.cfg.psi else ONE
        if kind == "W":
            m = B[0]
            if X == "D":
                if self.valid_slot(1, m[0] + 1) and self.valid_slot(2, m[1] + 1):
                    return [(((m[0] + 1, m[1] + 1) + m[2:],), sign)]
                return []
            return [(((m[0] + 2,) + m[1:],), -sign)]
        m, mp = B
        if X == "D":
            out = []
            if self.valid_slot(2, m[1] + 1) and self.valid_slot(1, mp[0] + 1):
                c = -(self.qp(1, m[0]) * self.qp(2, mp[1]) * Scalar.qpow(1))
                out.append(((_add(m, 1), _add(mp, 0)), c * sign))
            if self.valid_slot(1, m[0] + 1) and self.valid_slot(2, mp[1] + 1):
                out.append(((_add(m, 0), _add(mp, 1)), sign))
            return out
        if self.valid_slot(1, m[0] + 1) and self.valid_slot(1, mp[0] + 1):
            return [((_add(m, 0), _add(mp, 0)), -sign)]
        return []

    def block_k(self, i: int, B: Block, sign: int = 1) -> Scalar:
        """Eigenvalue of k_{alpha_i}^{sign} on a block."""
        if i >= 1:
            out = ONE
            for row in B:
                out = out * self._row_k(i, row, sign)
            return out
        X, kind = self.cfg.X, self.cfg.kind
        if kind == "W":
            m = B[0]
            if X == "D":
                val = self.qp(1, sign * (1 - m[0])) * self.qp(2, -sign * m[1])
            else:
                val = self.qp(1, sign * (-2 * m[0] - 1))
        else:
            m, mp = B
            if X == "D":
                val = (self.qp(1, -sign * (m[0] + mp[0])) * self.qp(2, -sign * (m[1] + mp[1]))
                       * Scalar.qpow(-2 * sign))
            else:
                val = Scalar.qpow(-2 * sign) * self.qp(1, -sign * 2 * (m[0] + mp[0]))
        if self.cfg.psi:
            val = -val
        return val

    def block_kdelta(self, j: int, B: Block, sign: int = 1) -> Scalar:
        c = self.cfg.branch_const
        out = ONE
        for row in B:
            out = out * (c if sign > 0 else c.inverse()) * self.qp(j, sign * row[j - 1])
        return out

    def _coproduct_e(self, i: int, B: Block):
        out = []
        pref = ONE
        for s, row in enumerate(B):
            hit = self._row_e(i, row)
            if hit is not None:
                out.append((B[:s] + (hit[0],) + B[s + 1:], pref * hit[1]))
            pref = pref * self._row_k(i, row)
        return out

    def _coproduct_f(self, i: int, B: Block):
        out = []
        suf = ONE
        for s in range(len(B) - 1, -1, -1):
            row = B[s]
            hit = self._row_f(i, row)
            if hit is not None:
                out.append((B[:s] + (hit[0],) + B[s + 1:], hit[1] * suf))
            suf = suf * self._row_k(i, row, -1)
        out.reverse()
        return out

    # -- extension over blocks -------------------------------------------------
    def blocks_of(self, x: TensorState) -> List[Block]:
        b = self.cfg.block_size
        return [tuple(x[k:k + b]) for k in range(0, len(x), b)]

    def ext_e(self, i: int, x: TensorState) -> Dict[TensorState, Scalar]:
        blocks = self.blocks_of(x)
        out = SparseVec()
        pref = ONE
        b = self.cfg.block_size
        for s, B in enumerate(blocks):
            for nb, c in self.block_e(i, B):
                y = x[:s * b] + nb + x[(s + 1) * b:]
                out.add_term(y, pref * c)
            pref = pref * self.block_k(i, B)
        return dict(out)

    def ext_f(self, i: int, x: TensorState) -> Dict[TensorState, Scalar]:
        blocks = self.blocks_of(x)
        out = SparseVec()
        suf = ONE
        b = self.cfg.block_size
        for s in range(len(blocks) - 1, -1, -1):
            B = blocks[s]
            for nb, c in self.block_f(i, B):
                y = x[:s * b] + nb + x[(s + 1) * b:]
                out.add_term(y, c * suf)
            suf = suf * self.block_k(i, B, -1)
        return dict(out)

    def ext_k(self, i: int, x: TensorState, sign: int = 1) -> Scalar:
        out = ONE
        for B in self.blocks_of(x):
            out = out * self.block_k(i, B, sign)
        return out

    def ext_kdelta(self, j: int, x: TensorState, sign: int = 1) -> Scalar:
        out = ONE
        for B in self.blocks_of(x):
            out = out * self.block_kdelta(j, B, sign)
        return out

    def sigma(self, j: int, x: TensorState) -> Scalar:
        if self.par[j - 1] == 0:
            return ONE
        occ = sum(row[j - 1] for row in x)
        return -ONE if occ % 2 else ONE

    # -- operators -------------------------------------------------------------
    def root(self, i: int) -> Tuple[int, ...]:
        return Weight.simple_root(self.cfg.X, self.n, i).m

    def op(self, sym: str) -> LinOp:
        hit = self._ops.get(sym)
        if hit is not None:
            return hit
        kind, idx = parse_symbol(sym)
        n = self.n
        if kind in "efkK" and not 0 <= idx < n:
            raise ValueError(f"node {idx} out of range for n = {n}")
        if kind in "dDs" and not 1 <= idx <= n:
            raise ValueError(f"slot {idx} out of range for n = {n}")
        zero = (0,) * n
        if kind == "e":
            dshift = -2 if idx == 0 else 0
            op = LinOp(sym, lambda x, i=idx: self.ext_e(i, x), (dshift, dshift), self.root(idx))
        elif kind == "f":
            dshift = 2 if idx == 0 else 0
            neg = tuple(-a for a in self.root(idx))
            op = LinOp(sym, lambda x, i=idx: self.ext_f(i, x), (dshift, dshift), neg)
        elif kind in "kK":
            s = 1 if kind == "k" else -1
            op = LinOp(sym, lambda x, i=idx, s=s: {x: self.ext_k(i, x, s)}, (0, 0), zero, True)
        elif kind in "dD":
            s = 1 if kind == "d" else -1
            op = LinOp(sym, lambda x, j=idx, s=s: {x: self.ext_kdelta(j, x, s)}, (0, 0), zero, True)
        else:
            op = LinOp(sym, lambda x, j=idx: {x: self.sigma(j, x)}, (0, 0), zero, True)
        self._ops[sym] = op
        return op

    def touched_slots(self, sym: str) -> Tuple[int, ...]:
        """1-based Fock slots an operator reads or changes."""
        kind, idx = parse_symbol(sym)
        if kind in "dDs":
            return (idx,)
        if idx == 0:
            return (1, 2) if self.cfg.X == "D" else (1,)
        return (idx, idx + 1)


def _sub(m, j):
    return m[:j] + (m[j] - 1,) + m[j + 1:]


def _add(m, j):
    return m[:j] + (m[j] + 1,) + m[j + 1:]


def block_generator(cfg: ModuleConfig, sym: str) -> LinOp:
    """The generator on a single block (one factor, or one pair for W2)."""
    mod = GQGModule(replace(cfg, ell=1))
    return mod.op(sym)


def tensor_extend(cfg: ModuleConfig, sym: str) -> LinOp:
    """The generator on all ell blocks via the coproduct."""
    return GQGModule(cfg).op(sym)
