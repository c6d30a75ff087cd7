"""Exact closed-form counts of paths by number of flaws.

Everything here is exact: rationals are :class:`fractions.Fraction`, integers
are Python ``int``.  The partition-indexed sums ``H_g`` and ``E_g`` are
rational by construction and are checked to be integral before being returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .paths import BoundarySpec
from .report import CheckReport

PARTITION_CAP = 60


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out with a non-unit denominator."""


@dataclass(frozen=True, order=True)
class Partition:
    """An integer partition as ``((part, multiplicity), ...)`` with parts increasing."""

    multiplicities: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        parts = [i for i, _ in self.multiplicities]
        if parts != sorted(set(parts)) or any(i < 1 or m < 1 for i, m in self.multiplicities):
            raise ValueError(f"malformed partition multiplicities {self.multiplicities!r}")

    @classmethod
    def from_parts(cls, parts) -> Partition:
        counts: dict[int, int] = {}
        for part in parts:
            counts[part] = counts.get(part, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @property
    def weight(self) -> int:
        return sum(i * m for i, m in self.multiplicities)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.multiplicities)

    @property
    def parts(self) -> tuple[int, ...]:
        """Weakly increasing sequence of parts."""
        return tuple(i for i, m in self.multiplicities for _ in range(m))

    def __str__(self) -> str:
        return "<" + " ".join(f"{i}^{m}" for i, m in self.multiplicities) + ">"


def _decreasing_partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _decreasing_partitions(n - first, first):
            yield (first, *rest)


def partitions_of(g: int, cap: int = PARTITION_CAP) -> list[Partition]:
    """All partitions of ``g``, largest part decreasing, then reverse-lexicographic.

    For ``g = 4`` the order is <4>, <1 3>, <2^2>, <1^2 2>, <1^4>.
    """
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    if g > cap:
        raise ValueError(f"g = {g} exceeds the partition cap {cap}")
    return [Partition.from_parts(parts) for parts in _decreasing_partitions(g, g)]


@lru_cache(maxsize=None)
def rational_catalan(i: int, a: int, b: int) -> Fraction:
    """``binom(i(a+b), ia) / (i(a+b))``; for ``i = 1`` the rational Catalan number."""
    if i < 1:
        raise ValueError(f"i must be positive, got {i}")
    n = i * (a + b)
    return Fraction(math.comb(n, i * a), n)


def c_lambda(lam: Partition, a: int, b: int) -> Fraction:
    value = Fraction(1)
    for i, m in lam.multiplicities:
        value *= rational_catalan(i, a, b) ** m / math.factorial(m)
    return value


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} = {value} is not an integer")
    return value.numerator


@lru_cache(maxsize=None)
def H(g: int, a: int, b: int) -> int:
    """Sum of ``c_lambda`` over all partitions of ``g``; equals ``|N_0(g)|``.

    ``H(0) = 1`` by convention, the companion of ``E(0) = 1``.
    """
    if g < 0:
        raise ValueError(f"g must be non-negative, got {g}")
    if g == 0:
        return 1
    total = sum((c_lambda(lam, a, b) for lam in partitions_of(g)), Fraction(0))
    return _integral(total, f"H({g}; a={a}, b={b})")


@lru_cache(maxsize=None)
def E(g: int, a: int, b: int) -> int:
    """Signed sum ``sum (-1)^(g - l(lambda)) c_lambda``; ``E(0) = 1``."""
    if g < 0:
        raise ValueError(f"g must be non-negative, got {g}")
    if g == 0:
        return 1
    total = Fraction(0)
    for lam in partitions_of(g):
        term = c_lambda(lam, a, b)
        total += term if (g - lam.length) % 2 == 0 else -term
    return _integral(total, f"E({g}; a={a}, b={b})")


def mu(j: int, g: int, a: int, b: int) -> int:
    """Common value of ``|N_k(g)|`` on the ``j``-th block ``j(a+b) <= k < (j+1)(a+b)``."""
    if not 0 <= j < g:
        raise ValueError(f"block index j = {j} out of range 0..{g - 1}")
    return sum((-1) ** i * E(i, a, b) * H(g - i, a, b) for i in range(j + 1))


def count_flawed(k: int, spec: BoundarySpec) -> int:
    """Number of paths in ``N(g)`` with exactly ``k`` flaws."""
    if not 0 <= k < spec.length:
        raise ValueError(f"k = {k} out of range 0..{spec.length - 1}")
    return mu(k // (spec.a + spec.b), spec.g, spec.a, spec.b)


def catalan(i: int) -> int:
    if i < 0:
        raise ValueError(f"i must be non-negative, got {i}")
    return math.comb(2 * i, i) // (i + 1)


def mu_unit_slope(j: int, g: int) -> int:
    """Block value for ``a = b = 1`` as a Catalan convolution."""
    if not 0 <= j < g:
        raise ValueError(f"block index j = {j} out of range 0..{g - 1}")
    return sum(catalan(k - j - 1) * catalan(g - k + j) for k in range(j + 1, g + 1))


def recurrence_check(g: int, a: int, b: int) -> CheckReport:
    """Check ``mu_{j-1}(g) - mu_0(g-j) * mu_{j-1}(j) == mu_j(g)`` for ``0 < j < g``."""
    if g < 2:
        raise ValueError(f"the recurrence needs g >= 2, got {g}")
    report = CheckReport("recurrence", {"a": a, "b": b, "g": g})
    for j in range(1, g):
        lhs = mu(j - 1, g, a, b) - mu(0, g - j, a, b) * mu(j - 1, j, a, b)
        rhs = mu(j, g, a, b)
        report.check(lhs == rhs, {"j": j, "lhs": lhs, "rhs": rhs})
    return report


def symfunc_identity_check(g: int, a: int, b: int) -> CheckReport:
    """Check ``sum_{i=0}^{g} (-1)^i E_i H_{g-i} == 0``."""
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    total = sum((-1) ** i * E(i, a, b) * H(g - i, a, b) for i in range(g + 1))
    report = CheckReport("identity", {"a": a, "b": b, "g": g})
    report.check(total == 0, {"sum": total})
    return report


@dataclass
class FormulaSummary:
    """Intermediate quantities of the closed form for one ``(a, b, g)``."""

    spec: BoundarySpec
    c: dict[int, Fraction] = field(default_factory=dict)
    H: dict[int, int] = field(default_factory=dict)
    E: dict[int, int] = field(default_factory=dict)
    mu: list[int] = field(default_factory=list)


def summarize(spec: BoundarySpec) -> FormulaSummary:
    a, b, g = spec.a, spec.b, spec.g
    out = FormulaSummary(spec)
    for i in range(1, g + 1):
        out.c[i] = rational_catalan(i, a, b)
    for i in range(g + 1):
        out.H[i] = H(i, a, b)
        out.E[i] = E(i, a, b)
    out.mu = [mu(j, g, a, b) for j in range(g)]
    return out
