import pytest

from qhowe.combinatorics import Epsilon, Weight
from qhowe.fock import enumerate_slice
from qhowe.gqg import (
    ConfigError,
    GQGModule,
    ModuleConfig,
    block_generator,
    classical_limit_check,
    eta_adjoint_check,
    gram_check,
    psi_twist,
    relation_catalog,
    tau_sigma_ops,
    tensor_extend,
    verify_relations,
)
from qhowe.gqg import twist
from qhowe.gqg.operators import qint
from qhowe.gqg.relations import E, F
from qhowe.report import TruncationUnsafe
from qhowe.scalars import ONE, Q


def cfg(X, eps, kind, ell=1, psi=None):
    return ModuleConfig(X, Epsilon.parse(eps), kind, ell, psi)


def statuses(items):
    return {it.name: it.status for it in items}


def test_config_compatibility():
    with pytest.raises(ConfigError):
        cfg("D", "0111", "W")
    with pytest.raises(ConfigError):
        cfg("C", "1000", "W")
    with pytest.raises(ConfigError):
        cfg("C", "0000", "W", psi=True)
    assert cfg("D", "1111", "W").r == 1
    assert cfg("C", "1111", "W2", 2).r == 4


def test_psi_defaults_and_involution():
    c = cfg("D", "1111", "W", 2)
    assert c.psi and not cfg("D", "0110", "W2").psi
    assert psi_twist(psi_twist(c)) == c
    with pytest.raises(ConfigError):
        cfg("D", "0110", "W2", psi=True).branch_const


def test_block_generator_examples():
    e0 = block_generator(cfg("D", "1111", "W"), "e0")
    assert e0.image(((1, 1, 0, 0),)) == {((0, 0, 0, 0),): ONE}
    c0 = block_generator(cfg("C", "0000", "W"), "e0")
    assert c0.image(((2, 0, 0, 0),)) == {((0, 0, 0, 0),): qint(2).inverse()}
    f0 = block_generator(cfg("D", "1111", "W"), "f0")
    assert f0.image(((1, 1, 0, 0),)) == {}


def test_tensor_extend_two_factors():
    c = cfg("D", "1111", "W", 2)
    img = tensor_extend(c, "e1").image(((0, 1, 0, 0), (0, 1, 0, 0)))
    # e (x) 1 + k (x) e, with k_1 = q_2^{-1} = -q on the first factor
    assert img == {((1, 0, 0, 0), (0, 1, 0, 0)): ONE, ((0, 1, 0, 0), (1, 0, 0, 0)): -Q}


@pytest.mark.parametrize("X,eps,kind,psi", [
    ("D", "1111", "W", None), ("D", "1111", "W", False), ("D", "0110", "W2", None),
    ("C", "0011", "W", None), ("C", "1001", "W2", None)])
def test_cartan_product_of_delta_parts(X, eps, kind, psi):
    c = cfg(X, eps, kind, 2, psi)
    mod = GQGModule(c)
    for d in range(4):
        for x in enumerate_slice(c.eps, c.r, d).states:
            for i in range(c.n):
                prod = ONE
                for j, a in enumerate(Weight.simple_root(X, c.n, i).m):
                    sym = ("d" if a > 0 else "D") + str(j + 1)
                    for _ in range(abs(a)):
                        prod = prod * mod.op(sym).image(x)[x]
                assert mod.op(f"k{i}").image(x)[x] == prod


def test_cartan_group_like():
    c = cfg("C", "0101", "W", 2)
    one, two = GQGModule(cfg("C", "0101", "W", 1)), GQGModule(c)
    for x in enumerate_slice(c.eps, 2, 3).states:
        for i in range(4):
            a = one.op(f"k{i}").image((x[0],))[(x[0],)]
            b = one.op(f"k{i}").image((x[1],))[(x[1],)]
            assert two.op(f"k{i}").image(x)[x] == a * b


def test_sigma_squares_and_conjugation():
    c = cfg("D", "1010", "W", 2)
    mod = GQGModule(c)
    for x in enumerate_slice(c.eps, 2, 3).states:
        for j in range(1, 5):
            s = mod.sigma(j, x)
            assert s * s == ONE
            for i in range(4):
                root = Weight.simple_root("D", 4, i).m
                sign = -ONE if c.eps[j] and root[j - 1] % 2 else ONE
                for y, coef in mod.op(f"e{i}").image(x).items():
                    assert mod.sigma(j, y) * coef * s == sign * coef


def test_tau_is_identity_for_even_parity():
    c = cfg("D", "0000", "W2")
    mod = GQGModule(c)
    ops = tau_sigma_ops(mod)
    for x in enumerate_slice(c.eps, 2, 3).states:
        for i in range(4):
            for s, key in (("e", "E"), ("f", "F"), ("k", "K")):
                assert ops[f"{key}{i}"].image(x) == mod.op(f"{s}{i}").image(x)


def test_relations_small():
    items = verify_relations(cfg("C", "0011", "W"), 4)
    assert all(it.status in ("pass", "skip") for it in items)
    assert sum(it.status == "pass" for it in items) > 50


def test_reduced_support_equivalent():
    c = cfg("D", "1001", "W")
    a = verify_relations(c, 4, reduce_support=True)
    b = verify_relations(c, 4, reduce_support=False)
    assert statuses(a) == statuses(b)


def test_mutated_serre_relation_fails():
    c = cfg("D", "1100", "W", 2)
    good = [(n, x) for n, x in relation_catalog("D", c.eps) if n == "serre[1,2][e]"]
    assert statuses(verify_relations(c, 3, good)) == {"serre[1,2][e]": "pass"}
    q2 = qint(2)
    wrong = E(1) * E(1) * E(2) - q2 * (E(1) * E(2) * E(1)) + E(2) * E(1) * E(1)
    [item] = verify_relations(c, 3, [("serre[1,2][e]", wrong)])
    assert item.status == "fail"
    assert item.witness["state"] and item.witness["residual"]


def test_truncation_unsafe():
    with pytest.raises(TruncationUnsafe):
        verify_relations(cfg("D", "1111", "W"), 3, [("x", E(0) * F(0) * F(0))])


def test_twisted_two_factor_d_drops_delta_relations():
    c = cfg("D", "0110", "W2", psi=True)
    names = statuses(verify_relations(c, 3))
    assert not any(n.startswith("kconj[d") for n in names)


@pytest.mark.parametrize("X,eps,kind,ell", [
    ("D", "1111", "W", 1), ("D", "0110", "W2", 1), ("C", "0011", "W", 2), ("C", "1001", "W2", 1)])
def test_eta_adjoint(X, eps, kind, ell):
    items = eta_adjoint_check(cfg(X, eps, kind, ell), D=4)
    assert items and all(it.status == "pass" for it in items)


def test_eta_wrong_involution_fails():
    items = eta_adjoint_check(cfg("C", "0011", "W"), eta="eta'_C", D=3)
    assert any(it.status == "fail" for it in items)


def test_gram_nondegenerate():
    assert all(it.status == "pass" for it in gram_check(cfg("C", "1100", "W2"), 3))


@pytest.mark.parametrize("X,eps,kind,psi", [
    ("D", "1111", "W", None), ("D", "1111", "W", False), ("D", "0110", "W2", None),
    ("C", "0011", "W", None), ("C", "1001", "W2", None)])
def test_classical_limit(X, eps, kind, psi):
    items = classical_limit_check(cfg(X, eps, kind, 1, psi), D=4)
    assert all(it.status == "pass" for it in items)
    assert any(it.name.startswith("supercomm") for it in items)


def test_classical_limit_detects_missing_sigma(monkeypatch):
    def raw(mod):
        ops = {f"s{j}": mod.op(f"s{j}") for j in range(1, mod.n + 1)}
        for i in range(mod.n):
            for s, key in (("e", "E"), ("f", "F"), ("k", "K"), ("K", "Ki")):
                ops[f"{key}{i}"] = mod.op(f"{s}{i}")
        return ops

    monkeypatch.setattr(twist, "tau_sigma_ops", raw)
    items = classical_limit_check(cfg("D", "1111", "W"), D=4)
    assert any(it.status == "fail" for it in items)


def test_classical_limit_needs_cutoff():
    with pytest.raises(TruncationUnsafe):
        classical_limit_check(cfg("C", "0000", "W"), D=1)


def test_literal_serre_guard_fails_on_mixed_parity():
    items = verify_relations(cfg("D", "1100", "W"), 4, serre="literal")
    assert sorted(failed for failed, s in statuses(items).items() if s == "fail") == [
        "serre[2,1][e]", "serre[2,1][f]"]
