import pytest
from hypothesis import given, strategies as st

from qhowe.combinatorics import (
    Epsilon,
    GroupSpec,
    NotInPG,
    Partition,
    ShapeNotExhausted,
    Weight,
    associated,
    dim_G,
    enumerate_PG,
    form,
    in_PG,
    in_PG_eps,
    lambda_weight,
    omega_lambda,
    partitions_of,
)

O2, O3, O4 = GroupSpec("O", 2), GroupSpec("O", 3), GroupSpec("O", 4)
SP2, SP4 = GroupSpec("Sp", 1), GroupSpec("Sp", 2)


def P(text):
    return Partition.parse(text)


partitions = st.lists(st.integers(0, 6), max_size=6).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def test_epsilon_basics():
    e = Epsilon.parse("0110")
    assert (e.n, e.n0, e.n1) == (4, 2, 2)
    assert e[2] == 1 and e[4] == 0
    assert e.blocks() == [(1, 1), (2, 3), (4, 4)]
    with pytest.raises(ValueError):
        Epsilon.parse("011")
    with pytest.raises(ValueError):
        Epsilon.parse("01a0")


def test_roots_and_form():
    e = Epsilon.parse("1100")
    assert Weight.simple_root("D", 4, 0).m == (-1, -1, 0, 0)
    assert Weight.simple_root("C", 4, 0).m == (-2, 0, 0, 0)
    a1 = Weight.simple_root("D", 4, 1).m
    a2 = Weight.simple_root("D", 4, 2).m
    assert form(a1, a1, e) == -2
    assert form(a2, a2, e) == 0  # odd node at a parity change
    assert Weight.big_lambda(e).m == (-1, -1, 1, 1)


@given(partitions)
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_in_PG_examples():
    assert in_PG_eps(P(""), O2, Epsilon.parse("0000"))
    assert in_PG(P("1,1"), O2)
    assert not in_PG(P("2,2"), O2)
    assert in_PG(P("3,3"), SP4) and not in_PG(P("1,1,1"), SP4)
    # hook condition: lambda_{n0+1} <= n1
    assert not in_PG_eps(P("3,3,3"), GroupSpec("O", 6), Epsilon.parse("0011"))
    assert in_PG_eps(P("3,3,3"), GroupSpec("O", 6), Epsilon.parse("0111"))


def test_omega_lambda_peeling():
    assert omega_lambda(P(""), Epsilon.parse("0000")) == (0, 0, 0, 0)
    assert omega_lambda(P("3,1"), Epsilon.parse("0100")) == (3, 1, 0, 0)
    assert omega_lambda(P("2,1"), Epsilon.parse("1111")) == (2, 1, 0, 0)
    assert omega_lambda(P("1,1"), Epsilon.parse("1100")) == (2, 0, 0, 0)
    with pytest.raises(ShapeNotExhausted):
        omega_lambda(P("5"), Epsilon.parse("1111"))


def test_lambda_weight():
    w = lambda_weight(P("1"), Epsilon.parse("1111"), O2)
    assert w == Weight(2, (1, 0, 0, 0))
    assert lambda_weight(P("1"), Epsilon.parse("1111"), SP4).s == 4
    with pytest.raises(NotInPG):
        lambda_weight(P("2,2"), Epsilon.parse("1111"), O2)


@pytest.mark.parametrize("G,lam,dim", [
    (O2, "1", 2), (O2, "3", 2), (O2, "1,1", 1),
    (O3, "1", 3), (O3, "2", 5), (O3, "1,1", 3), (O3, "1,1,1", 1),
    (O4, "1", 4), (O4, "2", 9), (O4, "1,1", 6), (O4, "1,1,1", 4),
    (SP2, "1", 2), (SP2, "3", 4), (SP4, "1", 4), (SP4, "1,1", 5), (SP4, "2", 10),
])
def test_classical_dimensions(G, lam, dim):
    # oracle: standard tables for SO(3), SO(4) = SL2 x SL2, SL2 and Sp4
    assert dim_G(P(lam), G) == dim


def test_associated_partition():
    assert associated(P("1"), 3) == P("1,1")
    assert associated(P("1,1"), 3) == P("1")
    assert associated(P(""), 2) == P("1,1")


@given(st.integers(0, 12))
def test_partitions_of_count(d):
    # oracle: Euler's pentagonal recurrence
    p = [1]
    for m in range(1, d + 1):
        total, k = 0, 1
        while True:
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g > m:
                    break
                total += (-1) ** (k + 1) * p[m - g]
            if k * (3 * k - 1) // 2 > m:
                break
            k += 1
        p.append(total)
    parts = partitions_of(d)
    assert len(parts) == p[d]
    assert len(set(parts)) == len(parts)
    assert all(lam.size == d for lam in parts)


def test_enumerate_PG_order():
    assert [str(x) for x in enumerate_PG(O2, Epsilon.parse("1111"), 2)] == ["(2)", "(1,1)"]
    assert [str(x) for x in enumerate_PG(SP2, Epsilon.parse("1111"), 2)] == ["(2)"]
