"""Partitions, irreducible characters of S_n and the decomposition of A."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod

from .perm import Permutation, involution_count
from .report import Check
from .signs import character_of_Vj

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, reverse-lexicographic: (n) first, (1,...,1) last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n, n))


def odd_parts(p: Partition) -> int:
    return sum(1 for x in p if x % 2)


def count_partitions_with_odd_parts(n: int, m: int) -> int:
    """Number of partitions of n having exactly m odd parts (0 when parities clash)."""
    if m < 0 or m > n or (n - m) % 2:
        return 0
    return sum(1 for p in _partitions(n, n) if odd_parts(p) == m)


def format_partition(p: Partition) -> str:
    """``(2, 1, 1)`` -> ``"4=2+1+1"``."""
    return f"{sum(p)}=" + "+".join(map(str, p)) if p else "0="


def centralizer_order(cycle_type: Partition) -> int:
    return prod(c**m * factorial(m) for c, m in Counter(cycle_type).items())


def class_size(cycle_type: Partition) -> int:
    return factorial(sum(cycle_type)) // centralizer_order(cycle_type)


def class_representative(cycle_type: Partition) -> Permutation:
    """Cycles on consecutive integers, longest first: (3, 2, 1) -> (1 2 3)(4 5)."""
    n = sum(cycle_type)
    cycles = []
    start = 1
    for c in sorted(cycle_type, reverse=True):
        cycles.append(tuple(range(start, start + c)))
        start += c
    return Permutation.from_cycles(n, cycles)


def _beta_set(shape: Partition) -> tuple[int, ...]:
    l = len(shape)
    return tuple(shape[i] + l - 1 - i for i in range(l))


def _shape_from_beta(beta: tuple[int, ...]) -> Partition:
    b = sorted(beta, reverse=True)
    l = len(b)
    return tuple(x for x in (b[i] - (l - 1 - i) for i in range(l)) if x > 0)


@lru_cache(maxsize=None)
def _mn(shape: Partition, parts: Partition) -> int:
    if not parts:
        return 1 if not shape else 0
    r, rest = parts[0], parts[1:]
    beta = _beta_set(shape)
    occupied = set(beta)
    total = 0
    for b in beta:
        # removing a border strip of size r = sliding bead b down to b - r
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for x in beta if t < x < b)
        new_beta = tuple(t if x == b else x for x in beta)
        total += (-1) ** height * _mn(_shape_from_beta(new_beta), rest)
    return total


def irreducible_character(lam: Partition, mu: Partition) -> int:
    """chi_lam(mu) by the Murnaghan-Nakayama rule."""
    lam = tuple(x for x in lam if x)
    mu = tuple(sorted((x for x in mu if x), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} partition different integers")
    return _mn(lam, mu)


def degree(lam: Partition) -> int:
    return irreducible_character(lam, (1,) * sum(lam))


def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    ps = partitions_of(n)
    return {lam: {mu: irreducible_character(lam, mu) for mu in ps} for lam in ps}


def model_character(n: int, j: int) -> dict[Partition, int]:
    """chi_{V_j} as a class function."""
    return {mu: character_of_Vj(n, j, class_representative(mu)) for mu in partitions_of(n)}


def inner_product(n: int, f: dict[Partition, int], g: dict[Partition, int]) -> int:
    """<f, g> for integer class functions; raises if the result is not integral."""
    total = sum(class_size(mu) * f[mu] * g[mu] for mu in partitions_of(n))
    q, r = divmod(total, factorial(n))
    if r:
        raise ArithmeticError(f"non-integral inner product {total}/{factorial(n)}")
    return q


@dataclass
class MultiplicityTable:
    n: int
    rows: dict[Partition, dict[int, int]]

    @property
    def js(self) -> list[int]:
        return list(range(self.n // 2 + 1))

    def row_sum(self, lam: Partition) -> int:
        return sum(self.rows[lam].values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "columns": self.js,
            "rows": [
                {
                    "partition": format_partition(lam),
                    "multiplicities": [row[j] for j in self.js],
                    "row_sum": sum(row.values()),
                }
                for lam, row in self.rows.items()
            ],
        }

    def to_text(self) -> str:
        labels = [format_partition(lam) for lam in self.rows]
        w = max(len(s) for s in labels + ["lambda"])
        head = f"{'lambda':<{w}} | " + " ".join(f"j={j}" for j in self.js) + " | sum"
        lines = [head, "-" * len(head)]
        for label, (lam, row) in zip(labels, self.rows.items()):
            cells = " ".join(f"{row[j]:>{len(f'j={j}')}}" for j in self.js)
            lines.append(f"{label:<{w}} | {cells} | {sum(row.values()):>3}")
        return "\n".join(lines)


def model_multiplicities(n: int) -> MultiplicityTable:
    """<chi_{V_j}, chi_lam> for every irreducible lam and every j."""
    if n < 1:
        raise ValueError("n must be at least 1")
    chars = {j: model_character(n, j) for j in range(n // 2 + 1)}
    rows = {}
    for lam in partitions_of(n):
        chi = {mu: irreducible_character(lam, mu) for mu in partitions_of(n)}
        rows[lam] = {j: inner_product(n, chars[j], chi) for j in chars}
    return MultiplicityTable(n, rows)


@dataclass
class TheoremReport:
    n: int
    table: MultiplicityTable
    end_dimensions: dict[int, int]
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_main_theorem(n: int, full_orbits_up_to: int = 8) -> TheoremReport:
    """Multiplicity-one for A plus the two counting identities behind it.

    End-algebra dimensions use the full orbit enumeration for
    n <= ``full_orbits_up_to`` and the centralizer slice above that.
    Failures are recorded in the report, never raised.
    """
    from .intertwiners import end_dimension, end_dimension_sliced

    table = model_multiplicities(n)
    entries = [m for row in table.rows.values() for m in row.values()]
    values = sorted(set(entries))
    sums = [table.row_sum(lam) for lam in table.rows]
    dim_end = end_dimension if n <= full_orbits_up_to else end_dimension_sliced
    ends = {j: dim_end(n, j) for j in range(n // 2 + 1)}
    p_n = len(partitions_of(n))
    n_inv = sum(involution_count(n, j) for j in range(n // 2 + 1))
    sum_deg = sum(degree(lam) for lam in partitions_of(n))
    checks = [
        Check("multiplicities in {0,1}", set(values) <= {0, 1}, values, [0, 1]),
        Check("row sums equal 1", all(s == 1 for s in sums), sorted(set(sums)), [1]),
        Check("sum_j dim End(V_j) = p(n)", sum(ends.values()) == p_n, sum(ends.values()), p_n),
        Check("sum_j dim V_j = sum of degrees", n_inv == sum_deg, n_inv, sum_deg),
    ]
    return TheoremReport(n, table, ends, checks)
