"""Joint highest weight vectors, multiplicity tables, completeness scans and the
iquantum action on multiplicity spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .combinatorics import (
    GroupSpec,
    Partition,
    Weight,
    associated,
    dim_G,
    enumerate_PG,
    lambda_weight,
)
from .fock import SparseVec, TensorState, enumerate_slice, pairing, weights_in_degree
from .gqg.operators import GQGModule, ModuleConfig
from .gqg.words import evaluate
from .iqg import IqgParams, IqgSystem, _check_family, iqg_generators
from .linalg import express_in_basis, kernel_with_free, rank
from .report import vec_json
from .scalars import ZERO, Scalar

__all__ = [
    "DecompRow",
    "ScanResult",
    "StabilityViolation",
    "group_of",
    "hwv_space",
    "decompose",
    "decompose_degree",
    "full_kernel_scan",
    "b_stability",
    "endo_dim",
    "expected_endo_dim",
    "hwv_gram_rank",
]


class StabilityViolation(ArithmeticError):
    """An iquantum generator maps a multiplicity space outside itself."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


def group_of(cfg: ModuleConfig) -> GroupSpec:
    return GroupSpec(cfg.family, cfg.ell)


def _hwv(cfg: ModuleConfig, w: Weight, mod: GQGModule) -> Tuple[List[SparseVec], List[TensorState]]:
    """Kernel basis on the weight slice and the states at its free columns."""
    d = sum(w.m)
    sl = enumerate_slice(cfg.eps, cfg.r, d, w)
    if not sl.states:
        return [], []
    rows: Dict[Tuple[int, TensorState], Dict[int, Scalar]] = {}
    for i in range(cfg.n):
        op = mod.op(f"e{i}")
        for col, x in enumerate(sl.states):
            for y, c in op.image(x).items():
                rows.setdefault((i, y), {})[col] = c
    ordered = [rows[k] for k in sorted(rows)]
    basis, free = kernel_with_free(ordered, len(sl.states))
    vecs = [SparseVec({sl.states[k]: c for k, c in sorted(b.items())}) for b in basis]
    return vecs, [sl.states[f] for f in free]


def hwv_space(cfg: ModuleConfig, w: Weight, mod: Optional[GQGModule] = None) -> List[SparseVec]:
    """Basis of the joint kernel of all e_i on the weight-w slice."""
    return _hwv(cfg, w, mod or GQGModule(cfg))[0]


@dataclass
class DecompRow:
    lam: Partition
    weight: Weight
    multiplicity: int
    classical_dim: int
    endo_dim: Optional[int] = None

    @property
    def match(self) -> bool:
        return self.multiplicity == self.classical_dim

    def to_dict(self) -> dict:
        d = {"lambda": str(self.lam), "weight": list(self.weight.m),
             "multiplicity": self.multiplicity, "classical_dim": self.classical_dim,
             "match": self.match}
        if self.endo_dim is not None:
            d["endo_dim"] = self.endo_dim
        return d


def decompose_degree(cfg: ModuleConfig, d: int, mod: Optional[GQGModule] = None) -> List[DecompRow]:
    """Rows for the admissible lambda with |lambda| = d."""
    mod = mod or GQGModule(cfg)
    G = group_of(cfg)
    rows = []
    for lam in enumerate_PG(G, cfg.eps, d):
        w = lambda_weight(lam, cfg.eps, G)
        rows.append(DecompRow(lam, w, len(hwv_space(cfg, w, mod)), dim_G(lam, G)))
    return rows


def decompose(cfg: ModuleConfig, d_max: int, mod: Optional[GQGModule] = None) -> List[DecompRow]:
    """Multiplicity of every admissible lambda with |lambda| <= d_max against dim V_G(lambda)."""
    mod = mod or GQGModule(cfg)
    return [row for d in range(d_max + 1) for row in decompose_degree(cfg, d, mod)]


@dataclass
class ScanResult:
    degree: int
    total: int
    expected: int
    histogram: Dict[Tuple[int, ...], int] = field(default_factory=dict)
    unexpected: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total == self.expected and not self.unexpected

    def to_dict(self) -> dict:
        return {"degree": self.degree, "total": self.total, "expected": self.expected,
                "histogram": [{"weight": list(w), "dim": k} for w, k in sorted(self.histogram.items())],
                "unexpected": [list(w) for w in self.unexpected]}


def full_kernel_scan(cfg: ModuleConfig, d: int, mod: Optional[GQGModule] = None) -> ScanResult:
    """Joint kernel of the e_i over every weight of degree d, against the prediction."""
    mod = mod or GQGModule(cfg)
    G = group_of(cfg)
    predicted = {lambda_weight(lam, cfg.eps, G).m: dim_G(lam, G)
                 for lam in enumerate_PG(G, cfg.eps, d)}
    hist = {}
    for w in weights_in_degree(cfg.eps, cfg.r, d):
        k = len(hwv_space(cfg, w, mod))
        if k:
            hist[w.m] = k
    total = sum(hist.values())
    unexpected = sorted(m for m in hist if m not in predicted)
    return ScanResult(d, total, sum(predicted.values()), hist, unexpected)


def _restricted_matrices(cfg: ModuleConfig, params: IqgParams, lam: Partition,
                         system: IqgSystem) -> Tuple[List[SparseVec], Dict[str, List[List[Scalar]]]]:
    G = group_of(cfg)
    w = lambda_weight(lam, cfg.eps, G)
    basis, free = _hwv(cfg, w, system.mod)
    mats: Dict[str, List[List[Scalar]]] = {}
    for name, expr in iqg_generators(params):
        cols = []
        for k, b in enumerate(basis):
            img = SparseVec()
            for x, c in b.items():
                img.axpy(c, evaluate(expr, system.op, x))
            coords, resid = express_in_basis(img, basis, free)
            if resid:
                raise StabilityViolation(
                    f"{name} maps the multiplicity space of {lam} outside itself",
                    {"generator": name, "lambda": str(lam), "basis_index": k,
                     "residual": vec_json(resid)})
            cols.append(coords)
        m = len(basis)
        mats[name] = [[cols[c][r] for c in range(m)] for r in range(m)]
    return basis, mats


def b_stability(cfg: ModuleConfig, params: IqgParams, lam: Partition,
                system: Optional[IqgSystem] = None) -> Dict[str, List[List[Scalar]]]:
    """Restricted matrices of the iquantum generators on the multiplicity space of lambda."""
    _check_family(cfg, params)
    system = system or IqgSystem(cfg)
    return _restricted_matrices(cfg, params, lam, system)[1]


def endo_dim(cfg: ModuleConfig, params: IqgParams, lam: Partition,
             system: Optional[IqgSystem] = None) -> int:
    """Dimension of the commutant of the restricted iquantum action."""
    mats = b_stability(cfg, params, lam, system)
    if not mats:
        return 0
    m = len(next(iter(mats.values())))
    if m == 0:
        return 0
    # unknown X[a][b] at column a*m + b; rows encode (X A - A X)[a][c] = 0
    rows = []
    for A in mats.values():
        for a in range(m):
            for c in range(m):
                row: Dict[int, Scalar] = {}
                for b in range(m):
                    if not A[b][c].is_zero():
                        k = a * m + b
                        row[k] = row.get(k, ZERO) + A[b][c]
                    if not A[a][b].is_zero():
                        k = b * m + c
                        row[k] = row.get(k, ZERO) - A[a][b]
                row = {k: v for k, v in row.items() if not v.is_zero()}
                if row:
                    rows.append(row)
    return m * m - rank(rows, m * m)


def hwv_gram_rank(cfg: ModuleConfig, w: Weight, mod: Optional[GQGModule] = None) -> Tuple[int, int]:
    """(dimension, rank of the polarization Gram matrix) of a highest weight space."""
    basis = hwv_space(cfg, w, mod)
    rows = [{b: pairing(u, v) for b, v in enumerate(basis) if not pairing(u, v).is_zero()}
            for u in basis]
    return len(basis), rank(rows, len(basis))


def expected_endo_dim(lam: Partition, G: GroupSpec) -> int:
    """2 when V_G(lambda) splits on restriction (O_ell, ell even, lambda with ell/2 rows), else 1."""
    if G.family == "Sp":
        return 1
    if lam.conjugate()[1] > G.ell // 2:
        lam = associated(lam, G.ell)
    return 2 if G.ell % 2 == 0 and len(lam) == G.ell // 2 else 1
