import pytest

from qhowe.combinatorics import Epsilon, GroupSpec, Partition, Weight, dim_G, lambda_weight
from qhowe.duality import (
    StabilityViolation,
    b_stability,
    decompose,
    endo_dim,
    expected_endo_dim,
    full_kernel_scan,
    group_of,
    hwv_gram_rank,
    hwv_space,
)
from qhowe.gqg import GQGModule, ModuleConfig
from qhowe.iqg import IqgParams
from qhowe.scalars import Q


def cfg(X, eps, kind, ell):
    return ModuleConfig(X, Epsilon.parse(eps), kind, ell)


def P(text):
    return Partition.parse(text)


def test_vacuum_is_highest_weight():
    c = cfg("D", "1111", "W", 2)
    [v] = hwv_space(c, Weight(2, (0, 0, 0, 0)))
    assert list(v) == [((0, 0, 0, 0), (0, 0, 0, 0))]


def test_hwv_killed_by_raising():
    c = cfg("C", "0011", "W", 2)
    mod = GQGModule(c)
    for w in (Weight(2, (1, 0, 0, 0)), Weight(2, (2, 0, 0, 0)), Weight(2, (1, 1, 0, 0))):
        for vec in hwv_space(c, w, mod):
            for i in range(4):
                out = {}
                for x, a in vec.items():
                    for y, b in mod.op(f"e{i}").image(x).items():
                        out[y] = out.get(y, 0) + a * b
                assert all(s.is_zero() for s in out.values())


def test_decompose_rows_o2():
    rows = decompose(cfg("D", "1111", "W", 2), 2)
    got = [(str(r.lam), r.multiplicity, r.classical_dim) for r in rows]
    assert got == [("()", 1, 1), ("(1)", 2, 2), ("(2)", 2, 2), ("(1,1)", 1, 1)]
    assert all(r.match for r in rows)
    assert rows[1].to_dict()["weight"] == [1, 0, 0, 0]


def test_decompose_sp2():
    rows = decompose(cfg("C", "1111", "W2", 1), 3)
    assert [(str(r.lam), r.multiplicity) for r in rows] == [("()", 1), ("(1)", 2), ("(2)", 3), ("(3)", 4)]


@pytest.mark.parametrize("X,eps,kind,ell,d", [
    ("D", "1100", "W", 2, 2), ("C", "0011", "W", 2, 2), ("C", "1001", "W2", 1, 3)])
def test_scan_matches_decompose(X, eps, kind, ell, d):
    c = cfg(X, eps, kind, ell)
    res = full_kernel_scan(c, d)
    assert res.ok
    weights = {r.weight.m: r.multiplicity for r in decompose(c, d) if sum(r.weight.m) == d}
    assert res.histogram == {m: k for m, k in weights.items() if k}


def test_scan_detects_wrong_prediction(monkeypatch):
    import qhowe.duality as duality

    c = cfg("D", "1111", "W", 2)
    monkeypatch.setattr(duality, "dim_G", lambda lam, G: 1)
    res = full_kernel_scan(c, 1)
    assert not res.ok and res.total == 2 and res.expected == 1


def test_hwv_gram_nondegenerate():
    c = cfg("D", "1100", "W", 3)
    for lam in (P("1"), P("2"), P("1,1")):
        w = lambda_weight(lam, c.eps, group_of(c))
        dim, rk = hwv_gram_rank(c, w)
        assert dim == rk == dim_G(lam, group_of(c))


@pytest.mark.parametrize("X,eps,kind,ell,lam,expected", [
    ("D", "1100", "W", 3, "1", 1),
    ("D", "1100", "W", 3, "", 1),
    ("C", "1111", "W2", 2, "1", 1),
    ("C", "1111", "W2", 1, "2", 1),
])
def test_endo_dim(X, eps, kind, ell, lam, expected):
    c = cfg(X, eps, kind, ell)
    params = IqgParams.for_module(c)
    assert endo_dim(c, params, P(lam)) == expected
    assert expected_endo_dim(P(lam), group_of(c)) == expected


def test_b_stability_matrices():
    c = cfg("D", "1100", "W", 3)
    mats = b_stability(c, IqgParams.for_module(c), P("1"))
    assert sorted(mats) == ["B1", "B2"]
    assert all(len(m) == 3 and all(len(row) == 3 for row in m) for m in mats.values())


def test_stability_violation_reported():
    # with the sign of varsigma flipped, B_1 no longer commutes with e_0
    c = cfg("D", "1100", "W", 3)
    flipped = IqgParams.for_module(c, varsigma=Q.inverse())
    with pytest.raises(StabilityViolation) as info:
        b_stability(c, flipped, P("2"))
    assert info.value.witness["generator"] == "B1"
    assert info.value.witness["residual"]


def test_expected_endo_dim_rule():
    O4, O3, Sp4 = GroupSpec("O", 4), GroupSpec("O", 3), GroupSpec("Sp", 2)
    assert expected_endo_dim(P("1,1"), O4) == 2
    assert expected_endo_dim(P("2,1"), O4) == 2
    assert expected_endo_dim(P("1"), O4) == 1
    assert expected_endo_dim(P("1,1,1"), O4) == 1
    assert expected_endo_dim(P("1"), O3) == 1
    assert expected_endo_dim(P("1,1"), Sp4) == 1
