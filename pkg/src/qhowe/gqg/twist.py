"""Sigma operators, the tau images of the Chevalley generators, and the q -> 1 limit check."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..fock import degree, enumerate_slice
from ..report import CheckItem, TruncationUnsafe, state_json
from ..scalars import ONE, Q, PoleAtOne, Scalar, eval_at_one
from .operators import GQGModule, LinOp, ModuleConfig
from .relations import odd_nodes

__all__ = ["sigma_monomial", "tau_sigma_ops", "tau_case", "classical_limit_check"]


def sigma_monomial(mod: GQGModule, slots) -> LinOp:
    """Product of sigma_j over the given slots, with multiplicity taken mod 2."""
    odd = sorted(j for j in set(slots) if list(slots).count(j) % 2)
    name = "".join(f"s{j}" for j in odd) or "1"

    def fn(x):
        c = ONE
        for j in odd:
            c = c * mod.sigma(j, x)
        return {x: c}

    return LinOp(name, fn, (0, 0), (0,) * mod.n, True)


def tau_case(eps, i: int) -> Tuple[int, int, int]:
    """(case number, exponent of varsigma on E, exponent on F) for a node i >= 1.

    Cases 1..4 follow the parities (eps_i, eps_{i+1}) = (0,0), (0,1), (1,1), (1,0).
    """
    a, b = eps[i], eps[i + 1]
    start = next(s for s, e in eps.blocks() if s <= i <= e)
    prev_end = start - 1  # i_{k-1}
    if (a, b) == (0, 0):
        return 1, 0, 0
    if (a, b) == (0, 1):
        return 2, 0, 1
    if (a, b) == (1, 1):
        return 3, i - prev_end, i - prev_end - 1
    return 4, i - prev_end, i - prev_end - 1


def tau_sigma_ops(mod: GQGModule) -> Dict[str, LinOp]:
    """sigma_j together with tau(E_i), tau(F_i), tau(K_i) and tau(K_i)^{-1}.

    Keys are ``s<j>``, ``E<i>``, ``F<i>``, ``K<i>``, ``Ki<i>``.
    """
    cfg, eps, n = mod.cfg, mod.eps, mod.n
    ops: Dict[str, LinOp] = {}
    for j in range(1, n + 1):
        ops[f"s{j}"] = mod.op(f"s{j}")
    for i in range(n):
        e, f, k, kinv = (mod.op(f"{s}{i}") for s in "efkK")
        if i == 0 and cfg.X == "C":
            sgn = -ONE if eps[1] else ONE
            ops["E0"] = e.scaled(sgn)
            ops["F0"], ops["K0"], ops["Ki0"] = f, k, kinv
            continue
        node = 1 if i == 0 else i
        case, pe, pf = tau_case(eps, node)
        vs = [node, node + 1]
        low = list(range(1, node + 1))
        if case == 1:
            te, tf, sign_f = [], [], ONE
        elif case == 2:
            te, tf, sign_f = low, low + vs, ONE
        elif case == 3:
            te, tf, sign_f = vs * pe, vs * pf, -ONE
        else:
            te, tf = low + vs * pe, low + vs * pf
            sign_f = -ONE if pe % 2 else ONE
        vsig = sigma_monomial(mod, vs if case != 1 else [])
        ops[f"E{i}"] = e @ sigma_monomial(mod, te)
        tf_op = f @ sigma_monomial(mod, tf)
        ops[f"F{i}"] = tf_op if sign_f.is_one() else tf_op.scaled(sign_f)
        ops[f"K{i}"] = k @ vsig
        ops[f"Ki{i}"] = kinv @ vsig
    return ops


def _limit(c: Scalar):
    return eval_at_one(c)


def _is_half_integer(x) -> bool:
    if hasattr(x, "im"):
        if x.im != 0:
            return False
        x = x.re
    x = Fraction(x)
    return x.denominator in (1, 2)


def classical_limit_check(cfg: ModuleConfig, D: int = 4,
                          mod: Optional[GQGModule] = None) -> List[CheckItem]:
    """Regularity at v = 1 of the tau images and the osp super-commutator relations."""
    if D < 2:
        raise TruncationUnsafe("the classical limit check needs degree cutoff at least 2")
    mod = mod or GQGModule(cfg)
    ops = tau_sigma_ops(mod)
    n, eps = cfg.n, cfg.eps
    states = {d: enumerate_slice(eps, cfg.r, d).states for d in range(D + 1)}
    items: List[CheckItem] = []

    # (a) regularity of every matrix entry, and the limit matrices
    limit: Dict[str, Dict] = {}
    for i in range(n):
        for key in (f"E{i}", f"F{i}", f"K{i}", f"Ki{i}"):
            op = ops[key]
            mat = {}
            bad = None
            for d in range(D + 1):
                for x in states[d]:
                    for y, c in op.image(x).items():
                        if degree(y) > D:
                            continue
                        try:
                            val = _limit(c)
                        except PoleAtOne:
                            bad = (x, y, c)
                            break
                        if val != 0:
                            mat[(y, x)] = val
                    if bad:
                        break
                if bad:
                    break
            limit[key] = mat
            if bad:
                x, y, c = bad
                items.append(CheckItem(f"regular[{key}]", "fail", witness={
                    "state": state_json(x), "target": state_json(y), "entry": str(c)}))
            else:
                items.append(CheckItem(f"regular[{key}]", "pass", values={"entries": len(mat)}))
    if any(it.status == "fail" for it in items):
        return items

    # (b) H_i diagonal with integer or half-integer entries
    H: Dict[int, Dict] = {}
    for i in range(n):
        den = (Q * Q - Q ** -2) if (cfg.X == "C" and i == 0) else (Q - Q.inverse())
        dinv = den.inverse()
        diag, bad = {}, None
        for d in range(D + 1):
            for x in states[d]:
                kx = ops[f"K{i}"].image(x)
                kix = ops[f"Ki{i}"].image(x)
                if set(kx) != {x} or set(kix) != {x}:
                    bad = (x, "not diagonal")
                    break
                try:
                    h = _limit((kx[x] - kix[x]) * dinv)
                except PoleAtOne:
                    bad = (x, "pole")
                    break
                if not _is_half_integer(h):
                    bad = (x, str(h))
                    break
                diag[x] = h
            if bad:
                break
        H[i] = diag
        if bad:
            items.append(CheckItem(f"cartan[H{i}]", "fail",
                                   witness={"state": state_json(bad[0]), "reason": bad[1]}))
        else:
            items.append(CheckItem(f"cartan[H{i}]", "pass"))
    if any(it.status == "fail" for it in items):
        return items

    # (c) super-commutators of the limit matrices
    odd = set(odd_nodes(cfg.X, eps))
    p = {i: 1 if i in odd else 0 for i in range(n)}
    shift = {f"E{i}": (-2 if i == 0 else 0) for i in range(n)}
    shift.update({f"F{i}": (2 if i == 0 else 0) for i in range(n)})

    def apply(key, vec):
        out: Dict = {}
        mat = limit[key]
        for x, c in vec.items():
            for y in _targets(key, x):
                val = mat.get((y, x))
                if val is not None:
                    out[y] = out.get(y, 0) + val * c
        return {y: c for y, c in out.items() if c != 0}

    targets: Dict[str, Dict] = {}
    for key, mat in limit.items():
        t: Dict = {}
        for (y, x) in mat:
            t.setdefault(x, []).append(y)
        targets[key] = t

    def _targets(key, x):
        return targets[key].get(x, ())

    def word(keys, x):
        vec = {x: 1}
        for key in reversed(keys):
            vec = apply(key, vec)
        return vec

    for i in range(n):
        for j in range(n):
            profile = max(0, shift[f"F{j}"], shift[f"E{i}"], shift[f"F{j}"] + shift[f"E{i}"])
            top = D - profile
            sgn = -1 if (p[i] and p[j]) else 1
            esign = -1 if eps[max(i, 1)] else 1
            bad = None
            for d in range(top + 1):
                for x in states[d]:
                    lhs = dict(word([f"E{i}", f"F{j}"], x))
                    for y, c in word([f"F{j}", f"E{i}"], x).items():
                        lhs[y] = lhs.get(y, 0) - sgn * c
                    if i == j:
                        lhs[x] = lhs.get(x, 0) - esign * H[i][x]
                    resid = {y: c for y, c in lhs.items() if c != 0}
                    if resid:
                        bad = (x, resid)
                        break
                if bad:
                    break
            name = f"supercomm[E{i},F{j}]"
            if bad:
                x, resid = bad
                items.append(CheckItem(name, "fail", witness={
                    "state": state_json(x),
                    "residual": [{"state": state_json(y), "coeff": str(c)}
                                 for y, c in sorted(resid.items())[:6]]}))
            else:
                items.append(CheckItem(name, "pass", values={"max_input_degree": top}))

    for i in sorted(odd):
        for key in (f"E{i}", f"F{i}"):
            top = D - (2 if key == "F0" else 0)
            bad = None
            for d in range(top + 1):
                for x in states[d]:
                    if word([key, key], x):
                        bad = x
                        break
                if bad:
                    break
            name = f"nilpotent[{key}]"
            items.append(CheckItem(name, "fail", witness={"state": state_json(bad)})
                         if bad else CheckItem(name, "pass"))
    return items
