"""The sl_r action through the row/column transpose, iquantum generators of types AI and AII,
parameter admissibility, and commutation with the generalized quantum group."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .fock import SparseVec, TensorState, enumerate_slice
from .gqg.operators import ConfigError, GQGModule, LinOp, ModuleConfig, qint
from .gqg.words import WordExpr, evaluate
from .report import CheckItem, TruncationUnsafe, state_json, vec_json
from .scalars import ONE, Q, ZERO, PoleAtOne, Scalar, eval_at_one

__all__ = [
    "SlModule",
    "IqgParams",
    "sl_generators",
    "build_Bi",
    "b_expr",
    "validate_params",
    "commutant_check",
    "type_a_commutant_check",
    "IqgSystem",
]


# ---------------------------------------------------------------------------
# sl_r on W^{(x) ell}: rows of the occupation matrix are the sl_r indices,
# columns (Fock slots) are the tensor factors of the coproduct, in order 1..n.


class SlModule:
    """Generators e_j, f_j, k_j^{+-1} (j = 1..r-1) of U(sl_r) acting on tensor states."""

    def __init__(self, cfg: ModuleConfig):
        self.cfg = cfg
        self.r = cfg.r
        self.n = cfg.n
        self.par = cfg.eps.bits
        self._ops: Dict[str, LinOp] = {}

    def _ok(self, t: int, value: int) -> bool:
        return value >= 0 and (self.par[t] == 0 or value <= 1)

    def _kcol(self, j: int, x: TensorState, t: int, sign: int) -> Scalar:
        return Scalar.qpow(sign * (x[j - 1][t] - x[j][t]))

    @staticmethod
    def _move(x: TensorState, t: int, src: int, dst: int) -> TensorState:
        rows = [list(row) for row in x]
        rows[src][t] -= 1
        rows[dst][t] += 1
        return tuple(tuple(row) for row in rows)

    def ext_e(self, j: int, x: TensorState) -> Dict[TensorState, Scalar]:
        out = SparseVec()
        pref = ONE
        for t in range(self.n):
            b = x[j][t]
            if b >= 1 and self._ok(t, x[j - 1][t] + 1):
                out.add_term(self._move(x, t, j, j - 1), pref * qint(b))
            pref = pref * self._kcol(j, x, t, 1)
        return dict(out)

    def ext_f(self, j: int, x: TensorState) -> Dict[TensorState, Scalar]:
        out = SparseVec()
        suf = ONE
        for t in range(self.n - 1, -1, -1):
            a = x[j - 1][t]
            if a >= 1 and self._ok(t, x[j][t] + 1):
                out.add_term(self._move(x, t, j - 1, j), qint(a) * suf)
            suf = suf * self._kcol(j, x, t, -1)
        return dict(out)

    def ext_k(self, j: int, x: TensorState, sign: int = 1) -> Scalar:
        return Scalar.qpow(sign * (sum(x[j - 1]) - sum(x[j])))

    def op(self, sym: str) -> LinOp:
        hit = self._ops.get(sym)
        if hit is not None:
            return hit
        kind, j = sym[0], int(sym[1:])
        if not 1 <= j < self.r:
            raise ValueError(f"sl node {j} out of range for r = {self.r}")
        zero = (0,) * self.n
        if kind == "e":
            op = LinOp("sl" + sym, lambda x, j=j: self.ext_e(j, x), (0, 0), zero)
        elif kind == "f":
            op = LinOp("sl" + sym, lambda x, j=j: self.ext_f(j, x), (0, 0), zero)
        elif kind in "kK":
            s = 1 if kind == "k" else -1
            op = LinOp("sl" + sym, lambda x, j=j, s=s: {x: self.ext_k(j, x, s)}, (0, 0), zero, True)
        else:
            raise ValueError(f"unknown sl symbol {sym!r}")
        self._ops[sym] = op
        return op


def sl_generators(cfg: ModuleConfig) -> Dict[str, LinOp]:
    sl = SlModule(cfg)
    out = {}
    for j in range(1, cfg.r):
        for s in "efkK":
            out[f"{s}{j}"] = sl.op(f"{s}{j}")
    return out


# ---------------------------------------------------------------------------
# parameters


@dataclass
class IqgParams:
    """Family AI (so_ell inside sl_ell) or AII (sp_2ell inside sl_2ell) with its parameters."""

    family: str
    ell: int
    varsigma: Dict[int, Scalar] = field(default_factory=dict)
    kappa: Dict[int, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in ("AI", "AII"):
            raise ConfigError(f"family must be AI or AII, got {self.family!r}")
        if self.ell < 1:
            raise ConfigError("ell must be at least 1")
        for i in list(self.varsigma) + list(self.kappa):
            if i not in self.white:
                raise ConfigError(f"node {i} is not a B-node of {self.family} at ell = {self.ell}")
        default = Q.inverse() * -ONE if self.family == "AI" else -Q
        for i in self.white:
            self.varsigma.setdefault(i, default)
            self.kappa.setdefault(i, ZERO)

    @classmethod
    def default(cls, family: str, ell: int) -> "IqgParams":
        return cls(family, ell)

    @classmethod
    def for_module(cls, cfg: ModuleConfig, varsigma: Optional[Scalar] = None,
                   kappa: Optional[Scalar] = None) -> "IqgParams":
        fam = "AI" if cfg.kind == "W" else "AII"
        p = cls(fam, cfg.ell)
        for i in p.white:
            if varsigma is not None:
                p.varsigma[i] = varsigma
            if kappa is not None:
                p.kappa[i] = kappa
        return p

    @property
    def r(self) -> int:
        return self.ell if self.family == "AI" else 2 * self.ell

    @property
    def white(self) -> List[int]:
        """Nodes carrying a B_i generator."""
        if self.family == "AI":
            return list(range(1, self.ell))
        return list(range(2, 2 * self.ell - 1, 2))

    @property
    def black(self) -> List[int]:
        if self.family == "AI":
            return []
        return list(range(1, 2 * self.ell, 2))

    def to_dict(self) -> dict:
        return {"family": self.family, "ell": self.ell,
                "varsigma": {str(i): str(c) for i, c in sorted(self.varsigma.items())},
                "kappa": {str(i): str(c) for i, c in sorted(self.kappa.items())}}


def _cartan(r: int, i: int, j: int) -> int:
    """(alpha_i | alpha_j) for sl_r."""
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def _root(r: int, i: int) -> List[int]:
    v = [0] * r
    v[i - 1], v[i] = 1, -1
    return v


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _w_black(r: int, black: Sequence[int], vec: Sequence[int]) -> List[int]:
    """The longest element of the black parabolic subgroup; the black nodes are
    pairwise orthogonal here, so it is the product of their reflections."""
    v = list(vec)
    for j in black:
        a = _root(r, j)
        c = _dot(v, a)
        v = [x - c * y for x, y in zip(v, a)]
    return v


def _is_signed_q_power(c: Scalar) -> Optional[Tuple[int, int]]:
    """(sign, e) with c = sign * q^e, or None."""
    if not c.is_poly() or not c.num.is_monomial():
        return None
    (exp, coeff), = c.num._t.items()
    if exp % 2 or coeff not in (1, -1):
        return None
    return int(coeff), exp // 2


def validate_params(params: IqgParams) -> List[CheckItem]:
    """Admissibility of (varsigma, kappa) for tau = id, plus specializability."""
    r, white, black = params.r, params.white, params.black
    rho2 = [0] * r  # 2 rho_black
    for j in black:
        rho2 = [x + y for x, y in zip(rho2, _root(r, j))]
    items = []
    for i in white:
        s, k = params.varsigma[i], params.kappa[i]
        ai = _root(r, i)
        form_ok = _is_signed_q_power(s)
        items.append(CheckItem(f"varsigma_form[{i}]", "pass" if form_ok else "fail",
                               values={"varsigma": str(s)}))
        k_ok = k.is_poly() and all(Fraction(c).denominator == 1 and not hasattr(c, "im")
                                   for c in k.num._t.values())
        items.append(CheckItem(f"kappa_form[{i}]", "pass" if k_ok else "fail",
                               values={"kappa": str(k)}))
        # (1) with tau = id the condition reads varsigma_i = varsigma_i
        items.append(CheckItem(f"cond1[{i}]", "pass"))
        # (2) varsigma_i^2 = (-1)^{(2rho|a_i)} q^{-(a_i | 2rho + w(a_i))}
        w_ai = _w_black(r, black, ai)
        sgn = -ONE if _dot(rho2, ai) % 2 else ONE
        target = sgn * Scalar.qpow(-_dot(ai, [x + y for x, y in zip(rho2, w_ai)]))
        ok2 = s * s == target
        items.append(CheckItem(f"cond2[{i}]", "pass" if ok2 else "fail",
                               values={"lhs": str(s * s), "rhs": str(target)}))
        # (3) kappa bar-invariant
        ok3 = k.bar() == k
        items.append(CheckItem(f"cond3[{i}]", "pass" if ok3 else "fail"))
        # (4) kappa_i = 0 unless the orthogonality and parity conditions hold
        allowed = all(_cartan(r, i, j) == 0 for j in black)
        if allowed:
            for kk in white:
                if all(_cartan(r, kk, j) == 0 for j in black) and _cartan(r, i, kk) % 2:
                    allowed = False
        ok4 = allowed or k.is_zero()
        items.append(CheckItem(f"cond4[{i}]", "pass" if ok4 else "fail"))
        # specializability: varsigma in A with value -1 at v = 1
        try:
            val = eval_at_one(s)
            ok5 = val == -1
        except PoleAtOne:
            ok5 = False
        items.append(CheckItem(f"specializable[{i}]", "pass" if ok5 else "fail"))
    return items


# ---------------------------------------------------------------------------
# iquantum generators as word expressions over "x"-prefixed sl symbols


def _x(sym: str) -> WordExpr:
    return WordExpr.gen("x" + sym)


def t_black_e(i: int) -> WordExpr:
    """T_{w_black}(e_i) for AII in closed form."""
    qi = Q.inverse()
    inner = _x(f"e{i-1}") * _x(f"e{i}") - qi * (_x(f"e{i}") * _x(f"e{i-1}"))
    return _x(f"e{i+1}") * inner - qi * (inner * _x(f"e{i+1}"))


def b_expr(params: IqgParams, i: int) -> WordExpr:
    if i not in params.white:
        raise ValueError(f"node {i} is not a B-node of {params.family} at ell = {params.ell}")
    s, k = params.varsigma[i], params.kappa[i]
    kinv = _x(f"K{i}")
    if params.family == "AI":
        out = _x(f"f{i}") + s * (_x(f"e{i}") * kinv)
        if not k.is_zero():
            out = out + k * kinv
        return out
    return _x(f"f{i}") + s * (t_black_e(i) * kinv)


class IqgSystem:
    """Both actions on one configuration, with a shared symbol dispatcher.

    Plain symbols (e0, f1, k2, ...) are generalized quantum group generators;
    symbols prefixed with ``x`` are sl_r generators.
    """

    def __init__(self, cfg: ModuleConfig, mod: Optional[GQGModule] = None):
        self.cfg = cfg
        self.mod = mod or GQGModule(cfg)
        self.sl = SlModule(cfg)

    def op(self, sym: str) -> LinOp:
        if sym[0] == "x":
            return self.sl.op(sym[1:])
        return self.mod.op(sym)

    def as_linop(self, expr: WordExpr, name: str) -> LinOp:
        return LinOp(name, lambda x: dict(evaluate(expr, self.op, x)), (0, 0), (0,) * self.cfg.n)


def build_Bi(cfg: ModuleConfig, params: IqgParams, i: int,
             system: Optional[IqgSystem] = None) -> LinOp:
    _check_family(cfg, params)
    system = system or IqgSystem(cfg)
    return system.as_linop(b_expr(params, i), f"B{i}")


def _check_family(cfg: ModuleConfig, params: IqgParams) -> None:
    want = "AI" if cfg.kind == "W" else "AII"
    if params.family != want:
        raise ConfigError(f"module {cfg.kind} pairs with family {want}, got {params.family}")
    if params.ell != cfg.ell:
        raise ConfigError(f"parameter ell = {params.ell} does not match module ell = {cfg.ell}")


def iqg_generators(params: IqgParams) -> List[Tuple[str, WordExpr]]:
    gens = [(f"B{i}", b_expr(params, i)) for i in params.white]
    for j in params.black:
        for s in "efk":
            gens.append((f"sl{s}{j}", _x(f"{s}{j}")))
    return gens


def _gqg_generators(cfg: ModuleConfig, include_zero: bool = True) -> List[str]:
    nodes = range(0 if include_zero else 1, cfg.n)
    return [f"{s}{i}" for i in nodes for s in "efk"]


def _commutator_items(system: IqgSystem, xs: Sequence[str], ys: Sequence[Tuple[str, WordExpr]],
                      D: int) -> List[CheckItem]:
    if D < 2:
        raise TruncationUnsafe("commutant checks need degree cutoff at least 2")
    cfg = system.cfg
    states = [x for d in range(D - 1) for x in enumerate_slice(cfg.eps, cfg.r, d).states]
    items = []
    for xsym in xs:
        xe = WordExpr.gen(xsym)
        for yname, ye in ys:
            expr = xe * ye - ye * xe
            bad = None
            for st in states:
                res = evaluate(expr, system.op, st)
                if res:
                    bad = (st, res)
                    break
            name = f"[{xsym},{yname}]"
            if bad is None:
                items.append(CheckItem(name, "pass", values={"states": len(states)}))
            else:
                st, res = bad
                items.append(CheckItem(name, "fail", witness={
                    "x": xsym, "y": yname, "state": state_json(st), "residual": vec_json(res)}))
    return items


def type_a_commutant_check(cfg: ModuleConfig, D: int = 5,
                           system: Optional[IqgSystem] = None) -> List[CheckItem]:
    """The sl_r generators commute with e_i, f_i, k_i for i >= 1."""
    system = system or IqgSystem(cfg)
    ys = [(f"sl{s}{j}", _x(f"{s}{j}")) for j in range(1, cfg.r) for s in "efk"]
    return _commutator_items(system, _gqg_generators(cfg, include_zero=False), ys, D)


def commutant_check(cfg: ModuleConfig, params: IqgParams, D: int = 5,
                    system: Optional[IqgSystem] = None) -> List[CheckItem]:
    """Every generalized quantum group generator commutes with every iquantum generator."""
    _check_family(cfg, params)
    system = system or IqgSystem(cfg)
    return _commutator_items(system, _gqg_generators(cfg), iqg_generators(params), D)
