"""One test per acceptance criterion."""

import pytest

from qhowe.cli import main
from qhowe.combinatorics import Epsilon, Partition
from qhowe.duality import b_stability, decompose, endo_dim, full_kernel_scan
from qhowe.gqg import ModuleConfig, classical_limit_check, eta_adjoint_check, gram_check, verify_relations
from qhowe.gqg.operators import qint
from qhowe.gqg.relations import E
from qhowe.iqg import IqgParams, IqgSystem, commutant_check, type_a_commutant_check
from qhowe.report import Report
from qhowe.scalars import Q

EPSILONS = ["0000", "1111", "0110", "1001", "0011"]
FAMILIES = {0: [("D", "W2"), ("C", "W")], 1: [("D", "W"), ("C", "W2")]}
RELATION_CONFIGS = [(X, eps, kind, ell) for eps in EPSILONS for X, kind in FAMILIES[int(eps[0])]
                    for ell in (1, 2)]

COMMUTANT_CONFIGS = [("D", "1100", "W"), ("C", "0011", "W"), ("C", "1001", "W2"), ("D", "0110", "W2")]
DECOMPOSE_CONFIGS = [("C", "1111", "W2", 1, 4), ("D", "1111", "W", 2, 4),
                     ("D", "1100", "W", 3, 3), ("C", "0011", "W", 2, 3)]


def cfg(X, eps, kind, ell, psi=None):
    return ModuleConfig(X, Epsilon.parse(eps), kind, ell, psi)


def failed(items):
    return [it.name for it in items if it.status == "fail"]


@pytest.mark.parametrize("X,eps,kind,ell", RELATION_CONFIGS)
def test_criterion_1_relation_suites(X, eps, kind, ell):
    items = verify_relations(cfg(X, eps, kind, ell), 6)
    assert not failed(items)
    assert sum(it.status == "pass" for it in items) >= 100


def test_criterion_2_negative_control():
    c = cfg("D", "1100", "W", 2)
    wrong = E(1) * E(1) * E(2) - qint(2) * (E(1) * E(2) * E(1)) + E(2) * E(1) * E(1)
    [item] = verify_relations(c, 4, [("serre[1,2][e]", wrong)])
    assert item.status == "fail"
    assert item.witness["state"] and item.witness["residual"]


@pytest.mark.parametrize("X,eps,kind", [
    ("D", "1001", "W"), ("D", "0110", "W2"), ("C", "0011", "W"), ("C", "1100", "W2")])
@pytest.mark.parametrize("ell", [1, 2])
def test_criterion_3_polarization(X, eps, kind, ell):
    c = cfg(X, eps, kind, ell)
    items = eta_adjoint_check(c, D=5) + gram_check(c, 5)
    assert items and not failed(items)


@pytest.mark.parametrize("X,eps,kind", COMMUTANT_CONFIGS)
def test_criterion_4_type_a_commutant(X, eps, kind):
    c = cfg(X, eps, kind, 2)
    assert c.r == (2 if kind == "W" else 4)
    items = type_a_commutant_check(c, D=5)
    assert items and not failed(items)


@pytest.mark.parametrize("X,eps,kind", COMMUTANT_CONFIGS)
def test_criterion_5_iquantum_commutant_iff(X, eps, kind):
    c = cfg(X, eps, kind, 2)
    system = IqgSystem(c)
    good = -Q.inverse() if kind == "W" else -Q
    params = IqgParams.for_module(c, varsigma=good)
    assert not failed(commutant_check(c, params, D=5, system=system))
    flipped = IqgParams.for_module(c, varsigma=-good)
    assert failed(commutant_check(c, flipped, D=5, system=system))


@pytest.mark.parametrize("X,eps,kind,ell,d", DECOMPOSE_CONFIGS)
def test_criterion_6_multiplicities(X, eps, kind, ell, d):
    rows = decompose(cfg(X, eps, kind, ell), d)
    assert rows and all(r.match for r in rows)


@pytest.mark.parametrize("X,eps,kind,ell,d", DECOMPOSE_CONFIGS)
def test_criterion_7_completeness(X, eps, kind, ell, d):
    c = cfg(X, eps, kind, ell)
    for k in range(d + 1):
        res = full_kernel_scan(c, k)
        assert res.ok, res.to_dict()


@pytest.mark.parametrize("X,eps,kind", [(X, eps, kind) for eps in EPSILONS
                                        for X, kind in FAMILIES[int(eps[0])]])
def test_criterion_8_classical_limit(X, eps, kind):
    c = cfg(X, eps, kind, 1, psi=True if X == "D" else None)
    items = classical_limit_check(c, D=4)
    assert not failed(items)
    assert any(it.name.startswith("supercomm") for it in items)


@pytest.mark.parametrize("X,eps,kind,ell,lam,expected", [
    ("D", "1100", "W", 3, "1", 1),
    ("C", "1111", "W2", 2, "1", 1),
    ("D", "1111", "W", 4, "1,1", 2),
])
def test_criterion_9_endomorphisms(X, eps, kind, ell, lam, expected):
    c = cfg(X, eps, kind, ell)
    params = IqgParams.for_module(c)
    system = IqgSystem(c)
    mats = b_stability(c, params, Partition.parse(lam), system)
    assert mats
    assert endo_dim(c, params, Partition.parse(lam), system) == expected


@pytest.mark.parametrize("argv", [
    ["relations", "--type", "C", "--epsilon", "0110", "--module", "W", "--ell", "2", "--max-degree", "4"],
    ["polarization", "--type", "D", "--epsilon", "0110", "--module", "W2", "--ell", "1"],
    ["commutant", "--type", "C", "--epsilon", "1001", "--module", "W2", "--ell", "2", "--max-degree", "4"],
    ["decompose", "--type", "D", "--epsilon", "1100", "--module", "W", "--ell", "3", "--max-degree", "3"],
    ["scan", "--type", "C", "--epsilon", "0011", "--module", "W", "--ell", "2", "--max-degree", "3"],
    ["classical-limit", "--type", "D", "--epsilon", "1001", "--module", "W", "--ell", "1"],
    ["endo", "--type", "C", "--epsilon", "1111", "--module", "W2", "--ell", "2", "--lambda", "1"],
])
def test_criterion_10_determinism(argv, tmp_path):
    bodies = []
    for jobs in (1, 4):
        out = tmp_path / f"report{jobs}.json"
        assert main([*argv, "--jobs", str(jobs), "--output", str(out)]) == 0
        bodies.append(Report.from_json(out.read_text()).body_json())
    assert bodies[0] == bodies[1]
