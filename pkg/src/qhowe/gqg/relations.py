"""Defining relations of the generalized quantum groups and their verification."""

from __future__ import annotations

import itertools
from typing import List, Optional, Sequence, Tuple

from ..combinatorics import Epsilon, Weight, form
from ..fock import TensorState, _states_for_colsums, degree
from ..report import CheckItem, TruncationUnsafe, state_json, vec_json
from ..scalars import ONE, Q, bq, q_sub
from .operators import ConfigError, GQGModule, ModuleConfig, parse_symbol, qint
from .words import WordExpr, bracket, evaluate

__all__ = ["relation_catalog", "verify_relations", "verify_relation", "deg_shift",
           "supported_states", "SERRE_MODES"]

SERRE_MODES = ("even-node", "literal")

Relation = Tuple[str, WordExpr]


def E(i: int) -> WordExpr:
    return WordExpr.gen(f"e{i}")


def F(i: int) -> WordExpr:
    return WordExpr.gen(f"f{i}")


def _to_f(expr: WordExpr) -> WordExpr:
    return expr.map_symbols(lambda s: "f" + s[1:] if s[0] == "e" else s)


def _pair(name: str, expr: WordExpr) -> List[Relation]:
    return [(name + "[e]", expr), (name + "[f]", _to_f(expr))]


def odd_nodes(X: str, eps: Epsilon) -> List[int]:
    n = eps.n
    out = []
    for i in range(n):
        a = Weight.simple_root(X, n, i).m
        if form(a, a, eps) == 0:
            out.append(i)
    return out


def relation_catalog(X: str, eps: Epsilon, serre: str = "even-node",
                     include_delta: bool = True) -> List[Relation]:
    """Every defining relation as a word expression that must act as zero.

    ``serre`` chooses the guard for the cubic Serre relations between
    adjacent nodes i, j >= 1: ``"even-node"`` requires eps_i = eps_{i+1}
    (node i even), ``"literal"`` requires eps_i = eps_j.
    """
    if serre not in SERRE_MODES:
        raise ValueError(f"serre mode must be one of {SERRE_MODES}")
    n = eps.n
    nodes = range(n)
    root = {i: Weight.simple_root(X, n, i).m for i in nodes}
    sign = lambda k: -1 if eps[k] else 1  # (-1)^{eps_k}
    q2 = qint(2)
    rels: List[Relation] = []

    # Cartan part
    for j in nodes:
        rels.append((f"kinv[{j}]", WordExpr.gen(f"k{j}", f"K{j}") - WordExpr.scalar(ONE)))
    mus = [(f"k{j}", f"K{j}", root[j]) for j in nodes]
    if include_delta:
        for j in range(1, n + 1):
            dj = tuple(1 if t == j - 1 else 0 for t in range(n))
            mus.append((f"d{j}", f"D{j}", dj))
    for ks, kinv, mu in mus:
        for i in nodes:
            c = bq(mu, root[i], eps.bits)
            rels.append((f"kconj[{ks},e{i}]",
                         WordExpr.gen(ks, f"e{i}", kinv) - c * E(i)))
            rels.append((f"kconj[{ks},f{i}]",
                         WordExpr.gen(ks, f"f{i}", kinv) - c.inverse() * F(i)))

    # e-f commutators
    for i in nodes:
        for j in nodes:
            expr = E(i) * F(j) - F(j) * E(i)
            if i == j:
                den = Q * Q - Q ** -2 if (X == "C" and i == 0) else Q - Q.inverse()
                cart = WordExpr.gen(f"k{i}") - WordExpr.gen(f"K{i}")
                expr = expr - den.inverse() * cart
            rels.append((f"comm[e{i},f{j}]", expr))

    # commuting pairs
    for i, j in itertools.combinations(nodes, 2):
        if form(root[i], root[j], eps) == 0:
            rels.extend(_pair(f"commute[{i},{j}]", E(i) * E(j) - E(j) * E(i)))

    # odd nilpotency
    for i in odd_nodes(X, eps):
        rels.extend(_pair(f"nil[{i}]", E(i) * E(i)))

    # cubic Serre between adjacent nodes i, j >= 1
    for i in range(1, n):
        for j in (i - 1, i + 1):
            if not 1 <= j <= n - 1:
                continue
            guard = eps[i] == eps[i + 1] if serre == "even-node" else eps[i] == eps[j]
            if not guard:
                continue
            expr = (E(i) * E(i) * E(j) - (sign(i) * q2) * (E(i) * E(j) * E(i))
                    + E(j) * E(i) * E(i))
            rels.extend(_pair(f"serre[{i},{j}]", expr))

    # quartic relations at a parity change
    for i in range(2, n - 1):
        if eps[i] != eps[i + 1]:
            a, b, c = E(i - 1), E(i), E(i + 1)
            expr = (b * a * b * c - b * c * b * a + (sign(i) * q2) * (b * a * c * b)
                    - a * b * c * b + c * b * a * b)
            rels.extend(_pair(f"quartic[{i}]", expr))

    e0, e1, e2, e3 = E(0), E(1), E(2), E(3)
    if X == "D":
        if eps[1] == eps[2]:
            expr = e0 * e0 * e2 - (sign(2) * q2) * (e0 * e2 * e0) + e2 * e0 * e0
            rels.extend(_pair("serre[0,2]", expr))
        if eps[2] == eps[3]:
            expr = e2 * e2 * e0 - (sign(2) * q2) * (e2 * e0 * e2) + e0 * e2 * e2
            rels.extend(_pair("serre[2,0]", expr))
        if eps[1] != eps[2]:
            expr = (e0 * e1 * e2 - e1 * e0 * e2
                    + (sign(2) * q2) * (e1 * e2 * e0 - e0 * e2 * e1)
                    + e2 * e0 * e1 - e2 * e1 * e0)
            rels.extend(_pair("cubic[0,1,2]", expr))
        if eps[2] != eps[3]:
            expr = (e0 * e2 * e3 * e2 - e3 * e2 * e0 * e2 + (sign(3) * q2) * (e2 * e3 * e0 * e2)
                    - e2 * e0 * e2 * e3 + e2 * e3 * e2 * e0)
            rels.extend(_pair("quartic[0,2,3]", expr))
    else:
        qq = Q * Q + Q ** -2
        rels.extend(_pair("serre[0,1]", e0 * e0 * e1 - qq * (e0 * e1 * e0) + e1 * e0 * e0))
        if eps[1] == eps[2]:
            q3 = qint(3)
            expr = (e1 * e1 * e1 * e0 - q3 * (e1 * e1 * e0 * e1)
                    + q3 * (e1 * e0 * e1 * e1) - e0 * e1 * e1 * e1)
            rels.extend(_pair("serre[1,0]", expr))
        qs = {k: q_sub(eps[k]) for k in range(1, n + 1)}
        if eps[1] != eps[2] and eps[2] != eps[3]:
            inner = bracket(e2, e1, qs[2])
            expr = bracket(bracket(bracket(inner, e0, qs[1] * qs[1]), inner), e1)
            rels.extend(_pair("bracket5[0,1,2]", expr))
        if eps[1] != eps[2] and eps[2] == eps[3]:
            t = bracket(bracket(e3, e2, qs[3]), e1, qs[2])
            t = bracket(t, e0, qs[1] * qs[1])
            t = bracket(t, e1, qs[1])
            t = bracket(t, e2, qs[2])
            expr = bracket(t, e1)
            rels.extend(_pair("bracket8[0,1,2,3]", expr))
    return rels


def deg_shift(sym: str) -> int:
    kind, idx = parse_symbol(sym)
    if idx == 0 and kind == "e":
        return -2
    if idx == 0 and kind == "f":
        return 2
    return 0


def supported_states(cfg: ModuleConfig, d: int, slots: Optional[Sequence[int]] = None) -> List[TensorState]:
    """Degree-d states with zero occupation outside the given 1-based slots."""
    eps, r, n = cfg.eps, cfg.r, cfg.n
    active = sorted(set(slots)) if slots is not None else list(range(1, n + 1))
    caps = [r if eps[j] else d for j in active]
    out: List[TensorState] = []

    def rec(k, left, acc):
        if k == len(active):
            if left == 0:
                cs = [0] * n
                for j, c in zip(active, acc):
                    cs[j - 1] = c
                out.extend(_states_for_colsums(cs, eps, r))
            return
        for c in range(min(left, caps[k]) + 1):
            rec(k + 1, left - c, acc + [c])

    rec(0, d, [])
    out.sort()
    return out


def verify_relation(mod: GQGModule, name: str, expr: WordExpr, D: int,
                    reduce_support: bool = True) -> CheckItem:
    shift = expr.degree_profile(deg_shift)
    top = D - shift
    if top < 0:
        raise TruncationUnsafe(f"relation {name} needs degree cutoff at least {shift}")
    slots = None
    if reduce_support:
        slots = sorted({j for s in expr.symbols() for j in mod.touched_slots(s)})
    checked = 0
    for d in range(top + 1):
        for x in supported_states(mod.cfg, d, slots):
            res = evaluate(expr, mod.op, x)
            checked += 1
            if res:
                return CheckItem(name, "fail",
                                 witness={"state": state_json(x), "degree": d,
                                          "residual": vec_json(res)},
                                 values={"max_input_degree": top})
    return CheckItem(name, "pass", values={"max_input_degree": top, "states": checked})


def verify_relations(cfg: ModuleConfig, D: int, catalog: Optional[List[Relation]] = None,
                     serre: str = "even-node", reduce_support: bool = True,
                     mod: Optional[GQGModule] = None) -> List[CheckItem]:
    if D < 0:
        raise ValueError("degree cutoff must be nonnegative")
    mod = mod or GQGModule(cfg)
    if catalog is None:
        try:
            cfg.branch_const
            inc = True
        except ConfigError:
            inc = False
        catalog = relation_catalog(cfg.X, cfg.eps, serre, include_delta=inc)
    items = []
    testable = 0
    for name, expr in catalog:
        try:
            items.append(verify_relation(mod, name, expr, D, reduce_support))
            testable += 1
        except TruncationUnsafe as exc:
            items.append(CheckItem(name, "skip", values={"reason": str(exc)}))
    if catalog and testable == 0:
        raise TruncationUnsafe(f"no relation is testable at cutoff {D}")
    return items
