"""Parity sequences, weights, partitions and classical dimension formulas."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

__all__ = [
    "Epsilon",
    "Weight",
    "Partition",
    "GroupSpec",
    "ShapeNotExhausted",
    "NotInPG",
    "in_PG_eps",
    "omega_lambda",
    "lambda_weight",
    "dim_G",
    "enumerate_PG",
    "partitions_of",
]


class ShapeNotExhausted(ValueError):
    """Boxes remain after the peeling rule consumed every slot."""


class NotInPG(ValueError):
    """The partition does not index a summand for this group and parity."""


@dataclass(frozen=True)
class Epsilon:
    bits: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"parity bits must be 0 or 1, got {self.bits!r}")
        if len(bits) < 4:
            raise ValueError(f"parity sequence needs n >= 4 entries, got {len(bits)}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> "Epsilon":
        text = text.strip()
        if not text or any(ch not in "01" for ch in text):
            raise ValueError(f"epsilon must be a string of 0/1 characters, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def n0(self) -> int:
        return self.bits.count(0)

    @property
    def n1(self) -> int:
        return self.bits.count(1)

    def __getitem__(self, i: int) -> int:
        """1-based access, matching slot labels."""
        return self.bits[i - 1]

    def __str__(self):
        return "".join(map(str, self.bits))

    def signs(self) -> Tuple[int, ...]:
        return tuple(-1 if b else 1 for b in self.bits)

    def blocks(self) -> List[Tuple[int, int]]:
        """Maximal runs of constant parity as 1-based inclusive (start, end) pairs."""
        out = []
        start = 1
        for i in range(2, self.n + 1):
            if self[i] != self[i - 1]:
                out.append((start, i - 1))
                start = i
        out.append((start, self.n))
        return out


@dataclass(frozen=True)
class Weight:
    """The weight (s/2)*Lambda + sum_i m_i delta_i."""

    s: int
    m: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))

    def __add__(self, other: "Weight") -> "Weight":
        if len(self.m) != len(other.m):
            raise ValueError("weights of different rank")
        return Weight(self.s + other.s, tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + Weight(-other.s, tuple(-b for b in other.m))

    def flatten(self, eps: Epsilon) -> Tuple[Fraction, ...]:
        """Coordinates in the delta basis (Lambda expanded)."""
        return tuple(Fraction(self.s, 2) * sg + mi for sg, mi in zip(eps.signs(), self.m))

    @staticmethod
    def zero(n: int) -> "Weight":
        return Weight(0, (0,) * n)

    @staticmethod
    def delta(n: int, j: int) -> "Weight":
        m = [0] * n
        m[j - 1] = 1
        return Weight(0, tuple(m))

    @staticmethod
    def big_lambda(eps: Epsilon) -> "Weight":
        return Weight(0, eps.signs())

    @staticmethod
    def simple_root(X: str, n: int, i: int) -> "Weight":
        m = [0] * n
        if i == 0:
            if X == "D":
                m[0] = m[1] = -1
            elif X == "C":
                m[0] = -2
            else:
                raise ValueError(f"unknown type {X!r}")
        else:
            if not 1 <= i < n:
                raise ValueError(f"simple root index {i} out of range")
            m[i - 1] = 1
            m[i] = -1
        return Weight(0, tuple(m))


def form(mu: Sequence, nu: Sequence, eps: Epsilon):
    """(mu|nu) with (delta_i|delta_j) = (-1)^{eps_i} delta_ij, on delta coordinates."""
    return sum(a * b * sg for a, b, sg in zip(mu, nu, eps.signs()))


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be nonnegative")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "()", "empty"):
            return cls(())
        return cls(tuple(int(x) for x in text.split(",")))

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class GroupSpec:
    family: str
    ell: int

    def __post_init__(self):
        if self.family not in ("O", "Sp"):
            raise ValueError(f"group family must be O or Sp, got {self.family!r}")
        if self.ell < 1:
            raise ValueError("ell must be positive")

    def __str__(self):
        return f"O_{self.ell}" if self.family == "O" else f"Sp_{2 * self.ell}"


def in_PG(lam: Partition, G: GroupSpec) -> bool:
    if G.family == "Sp":
        return len(lam) <= G.ell
    c = lam.conjugate()
    return c[1] + c[2] <= G.ell


def in_PG_eps(lam: Partition, G: GroupSpec, eps: Epsilon) -> bool:
    return in_PG(lam, G) and lam[eps.n0 + 1] <= eps.n1


def omega_lambda(lam: Partition, eps: Epsilon) -> Tuple[int, ...]:
    rows = list(lam.parts)
    out = []
    for b in eps.bits:
        if b == 0:
            out.append(rows.pop(0) if rows else 0)
        else:
            out.append(len(rows))
            rows = [r - 1 for r in rows if r > 1]
    if rows:
        raise ShapeNotExhausted(f"{lam} does not fit the hook for epsilon {eps}")
    return tuple(out)


def lambda_weight(lam: Partition, eps: Epsilon, G: GroupSpec) -> Weight:
    if not in_PG_eps(lam, G, eps):
        raise NotInPG(f"{lam} is not in P({G}) for epsilon {eps}")
    s = G.ell if G.family == "O" else 2 * G.ell
    return Weight(s, omega_lambda(lam, eps))


def associated(lam: Partition, ell: int) -> Partition:
    c = list(lam.conjugate().parts) or [0]
    c[0] = ell - c[0]
    c = sorted((x for x in c if x > 0), reverse=True)
    return Partition(tuple(c)).conjugate()


def _weyl(lam: Sequence[int], rho: Sequence[Fraction], short_or_long: bool) -> int:
    """Weyl dimension with roots e_i +- e_j, plus e_i (or 2e_i) when the flag is set."""
    k = len(rho)
    lam = list(lam) + [0] * (k - len(lam))
    l = [Fraction(a) + r for a, r in zip(lam, rho)]
    num = Fraction(1)
    den = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
        if short_or_long:
            num *= l[i]
            den *= rho[i]
    d = num / den
    if d.denominator != 1 or d <= 0:
        raise ArithmeticError(f"Weyl formula produced {d}")
    return int(d)


def dim_sp(lam: Partition, ell: int) -> int:
    rho = [Fraction(ell - i) for i in range(ell)]
    return _weyl(lam.parts, rho, True)


def dim_so(lam: Partition, ell: int) -> int:
    k = ell // 2
    if len(lam) > k:
        raise ValueError(f"{lam} has more than {k} parts for so_{ell}")
    if ell % 2:
        rho = [Fraction(2 * (k - i) - 1, 2) for i in range(k)]
        return _weyl(lam.parts, rho, True)
    rho = [Fraction(k - 1 - i) for i in range(k)]
    return _weyl(lam.parts, rho, False)


@lru_cache(maxsize=None)
def dim_G(lam: Partition, G: GroupSpec) -> int:
    if not in_PG(lam, G):
        raise NotInPG(f"{lam} is not in P({G})")
    if G.family == "Sp":
        return dim_sp(lam, G.ell)
    ell = G.ell
    if lam.conjugate()[1] > ell // 2:
        lam = associated(lam, ell)
    d = dim_so(lam, ell)
    if ell % 2 == 0 and len(lam) == ell // 2:
        d *= 2
    return d


def partitions_of(d: int, max_part: int = None) -> List[Partition]:
    """Partitions of d, largest first part first."""
    if max_part is None:
        max_part = d
    if d == 0:
        return [Partition(())]
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions_of(d - first, first):
            out.append(Partition((first,) + rest.parts))
    return out


def enumerate_PG(G: GroupSpec, eps: Epsilon, d: int) -> List[Partition]:
    return [lam for lam in partitions_of(d) if in_PG_eps(lam, G, eps)]
