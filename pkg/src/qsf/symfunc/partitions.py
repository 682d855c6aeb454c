"""Integer partitions in the fixed reverse-lexicographic order used for every basis."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", ""):
            return cls(())
        try:
            return cls(int(x) for x in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition string {text!r}: {exc}") from None

    @property
    def parts(self) -> tuple:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition._trusted(tuple(sum(1 for p in self if p > i) for i in range(self[0])))

    def n_stat(self) -> int:
        """sum_i (i-1) * lambda_i (1-indexed rows)."""
        return sum(i * p for i, p in enumerate(self))

    def n_prime_stat(self) -> int:
        return self.conjugate().n_stat()

    def multiplicities(self) -> Counter:
        return Counter(self)

    def cells(self):
        """Cells (column, row), both 0-indexed."""
        for r, length in enumerate(self):
            for c in range(length):
                yield c, r

    def __str__(self):
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self):
        return f"Partition({tuple(self)})"


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple:
    """All partitions of ``d`` in reverse lexicographic order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition._trusted(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(d, d, [])
    return tuple(out)


@lru_cache(maxsize=None)
def partition_index(d: int) -> dict:
    return {lam: i for i, lam in enumerate(partitions_of(d))}


def dominance_leq(lam, mu) -> bool:
    """True iff ``lam`` is dominated by ``mu`` (partial sums of lam <= those of mu)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance compares partitions of equal size: {lam} vs {mu}")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


@lru_cache(maxsize=None)
def z_value(lam) -> int:
    """z_lambda = prod_i i^{m_i} m_i!."""
    out = 1
    for part, mult in Counter(lam).items():
        out *= part**mult * factorial(mult)
    return out


def union(lam, mu) -> Partition:
    """Multiset union of parts, i.e. the index of p_lam * p_mu."""
    if not lam:
        return mu if isinstance(mu, Partition) else Partition._trusted(tuple(mu))
    if not mu:
        return lam if isinstance(lam, Partition) else Partition._trusted(tuple(lam))
    return Partition._trusted(tuple(sorted(lam + mu, reverse=True)))
