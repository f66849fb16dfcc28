"""Adjointness of the generator actions under the polarization form."""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from ..fock import degree, enumerate_slice, gram, norm
from ..report import CheckItem, state_json
from ..scalars import ONE, Q, Scalar, q_sub_pow
from .operators import GQGModule, ModuleConfig, qint
from .words import WordExpr, evaluate

__all__ = ["eta_image", "eta_adjoint_check", "eta_symbols", "gram_check", "default_eta"]

ETAS = ("eta_D", "eta_C", "eta'_C")


def default_eta(cfg: ModuleConfig) -> str:
    if cfg.X == "D":
        return "eta_D"
    return "eta_C" if cfg.kind == "W" else "eta'_C"


def eta_image(eta: str, cfg: ModuleConfig, sym: str) -> WordExpr:
    """The anti-involution applied to a generator, as a word expression."""
    if eta not in ETAS:
        raise ValueError(f"unknown anti-involution {eta!r}")
    kind, i = sym[0], int(sym[1:])
    if kind in "kKdD":
        return WordExpr.gen(sym)
    eps = cfg.eps
    if i >= 1:
        if kind == "e":
            return q_sub_pow(eps[i], -1) * WordExpr.gen(f"f{i}", f"k{i}")
        return q_sub_pow(eps[i], 1) * WordExpr.gen(f"K{i}", f"e{i}")
    if eta == "eta_D":
        e1 = eps[1]
        sgn = -ONE if e1 == 0 else ONE  # (-1)^{eps_1 + 1}
        if kind == "e":
            return (sgn * q_sub_pow(e1, -1 if e1 else 1)) * WordExpr.gen("f0", "k0")
        return (sgn * q_sub_pow(e1, 1 if e1 else -1)) * WordExpr.gen("K0", "e0")
    if eta == "eta_C":
        b2 = qint(2) * qint(2)
        if kind == "e":
            return (-b2.inverse()) * WordExpr.gen("f0", "k0")
        return (-b2) * WordExpr.gen("K0", "e0")
    if kind == "e":
        return (-(Q * Q)) * WordExpr.gen("f0", "k0")
    return (-(Q ** -2)) * WordExpr.gen("K0", "e0")


def eta_symbols(cfg: ModuleConfig) -> List[str]:
    return [f"{s}{i}" for i in range(cfg.n) for s in "efkK"]


def eta_adjoint_check(cfg: ModuleConfig, eta: Optional[str] = None, D: int = 5,
                      mod: Optional[GQGModule] = None,
                      symbols: Optional[List[str]] = None) -> List[CheckItem]:
    """(x v, w) = (v, eta(x) w) for every generator x and basis states v, w of degree <= D."""
    eta = eta or default_eta(cfg)
    mod = mod or GQGModule(cfg)
    states = [x for d in range(D + 1) for x in enumerate_slice(cfg.eps, cfg.r, d).states]
    items = []
    for sym in symbols or eta_symbols(cfg):
        lhs: Dict[Tuple, Scalar] = {}
        for v in states:
            for w, c in mod.op(sym).image(v).items():
                if degree(w) <= D:
                    lhs[(v, w)] = c * norm(w)
        rhs: Dict[Tuple, Scalar] = {}
        image = eta_image(eta, cfg, sym)
        for w in states:
            for v, c in evaluate(image, mod.op, w).items():
                if degree(v) <= D:
                    rhs[(v, w)] = c * norm(v)
        bad = None
        for key in sorted(set(lhs) | set(rhs)):
            a, b = lhs.get(key), rhs.get(key)
            if a is None or b is None or a != b:
                bad = key
                break
        name = f"adjoint[{eta},{sym}]"
        if bad is None:
            items.append(CheckItem(name, "pass", values={"pairs": len(lhs)}))
        else:
            v, w = bad
            items.append(CheckItem(name, "fail", witness={
                "v": state_json(v), "w": state_json(w),
                "lhs": str(lhs.get(bad, "0*v^0")), "rhs": str(rhs.get(bad, "0*v^0"))}))
    return items


def gram_check(cfg: ModuleConfig, D: int = 5) -> List[CheckItem]:
    items = []
    for d in range(D + 1):
        sl = enumerate_slice(cfg.eps, cfg.r, d)
        g = gram(sl)
        ok = True
        for a in range(len(sl)):
            for b in range(len(sl)):
                if (a == b) == g[a][b].is_zero():
                    ok = False
        items.append(CheckItem(f"gram[d={d}]", "pass" if ok else "fail",
                               values={"size": len(sl)}))
    return items
