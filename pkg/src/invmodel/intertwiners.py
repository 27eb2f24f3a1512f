"""G-maps V_j -> V_k computed from the matrix-entry equations.

A G-map T satisfies ``S(s, kappa) T[tau, kappa] = S(s, tau) T[s.tau, s.kappa]``
for every group element s, so T is determined by one entry per orbit of
simultaneous conjugation on X_j x X_k. Walking an orbit with the adjacent
transpositions and carrying the relative sign either gives a consistent
sign labelling (one free parameter) or runs into a contradiction (the
entries on that orbit are forced to vanish).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .linalg import nullity
from .perm import (
    Involution,
    Permutation,
    _enumerate,
    adjacent_transpositions,
    all_permutations,
    random_permutation,
)
from .signs import SignedBasisMap


@dataclass
class SignedOrbit:
    j: int
    k: int
    representative: tuple[Involution, Involution]
    members: dict[tuple[int, int], int]
    consistent: bool

    @property
    def size(self) -> int:
        return len(self.members)

    def numerical_partition(self) -> tuple[int, ...]:
        from .pairs import characteristic_partition

        return characteristic_partition(*self.representative).numerical

    def to_json(self) -> dict:
        return {
            "representative": [str(self.representative[0]), str(self.representative[1])],
            "size": self.size,
            "consistent": self.consistent,
            "numerical_partition": list(self.numerical_partition()),
        }


@dataclass
class IntertwinerMatrix:
    """A map V_j -> V_k; ``entries[(tau, kappa)]`` is the coefficient of kappa in T(tau)."""

    n: int
    j: int
    k: int
    entries: dict[tuple[Involution, Involution], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[Involution, Involution]) -> int:
        return self.entries.get(key, 0)

    def to_array(self):
        """Rows indexed by X_k, columns by X_j (the matrix acting on column vectors)."""
        import numpy as np

        src = _enumerate(self.n, self.j)
        dst = _enumerate(self.n, self.k)
        si = {t: i for i, t in enumerate(src)}
        di = {t: i for i, t in enumerate(dst)}
        m = np.zeros((len(dst), len(src)), dtype=np.int64)
        for (tau, kappa), c in self.entries.items():
            m[di[kappa], si[tau]] = c
        return m

    @classmethod
    def identity(cls, n: int, j: int) -> IntertwinerMatrix:
        return cls(n, j, j, {(t, t): 1 for t in _enumerate(n, j)})


@lru_cache(maxsize=None)
def _generator_maps(n: int, j: int) -> tuple[SignedBasisMap, ...]:
    return tuple(SignedBasisMap.of(s, j) for s in adjacent_transpositions(n))


def enumerate_signed_orbits(n: int, j: int, k: int) -> list[SignedOrbit]:
    """Orbits of X_j x X_k under simultaneous conjugation, with propagated signs.

    Orbits come out in order of their representatives, each of which is the
    lexicographically least pair of its orbit and carries sign +1.
    """
    xj = _enumerate(n, j)
    xk = _enumerate(n, k)
    gens = list(zip(_generator_maps(n, j), _generator_maps(n, k)))
    nk = len(xk)
    label = [0] * (len(xj) * nk)
    orbits = []
    for start in range(len(label)):
        if label[start]:
            continue
        label[start] = 1
        members = [start]
        queue = deque([start])
        consistent = True
        while queue:
            p = queue.popleft()
            a, b = divmod(p, nk)
            sp = label[p]
            for gj, gk in gens:
                q = gj.targets[a] * nk + gk.targets[b]
                sq = sp * gj.signs[a] * gk.signs[b]
                if not label[q]:
                    label[q] = sq
                    members.append(q)
                    queue.append(q)
                elif label[q] != sq:
                    consistent = False
        a0, b0 = divmod(start, nk)
        orbits.append(
            SignedOrbit(
                j,
                k,
                (xj[a0], xk[b0]),
                {divmod(p, nk): label[p] for p in members},
                consistent,
            )
        )
    return orbits


def hom_basis(n: int, j: int, k: int) -> list[IntertwinerMatrix]:
    """A basis of Hom_G(V_j, V_k): one signed indicator per consistent orbit."""
    xj = _enumerate(n, j)
    xk = _enumerate(n, k)
    basis = []
    for orb in enumerate_signed_orbits(n, j, k):
        if orb.consistent:
            entries = {(xj[a], xk[b]): s for (a, b), s in orb.members.items()}
            basis.append(IntertwinerMatrix(n, j, k, entries))
    return basis


def _check_j(n: int, j: int) -> None:
    if not 0 <= j <= n // 2:
        raise ValueError(f"length j={j} out of range 0..{n // 2}")


def end_dimension(n: int, j: int) -> int:
    """dim End_G(V_j) as the number of consistent orbits on X_j x X_j."""
    _check_j(n, j)
    return sum(1 for o in enumerate_signed_orbits(n, j, j) if o.consistent)


def _centralizer_generators(n: int, j: int) -> list[Permutation]:
    # Centralizer of (1 2)(3 4)...(2j-1 2j): swap inside the first pair,
    # swap adjacent pairs, and permute the fixed points adjacently.
    gens = []
    if j >= 1:
        gens.append(Permutation.from_cycles(n, [(1, 2)]))
    for i in range(1, j):
        a, b = 2 * i - 1, 2 * i + 1
        gens.append(Permutation.from_cycles(n, [(a, b), (a + 1, b + 1)]))
    for x in range(2 * j + 1, n):
        gens.append(Permutation.from_cycles(n, [(x, x + 1)]))
    return gens


def end_dimension_sliced(n: int, j: int) -> int:
    """dim End_G(V_j) counted on the slice {tau0} x X_j.

    G-orbits on X_j x X_j correspond to orbits of the centralizer of a fixed
    tau0 on X_j, and the sign test restricts the same way, so only |X_j|
    pairs are visited instead of |X_j|^2. Used where the full enumeration is
    too slow (n > 8).
    """
    _check_j(n, j)
    xj = _enumerate(n, j)
    index = {t: i for i, t in enumerate(xj)}
    tau0 = Involution(n, [(2 * i - 1, 2 * i) for i in range(1, j + 1)])
    t0 = index[tau0]
    maps = []
    for g in _centralizer_generators(n, j):
        m = SignedBasisMap.of(g, j)
        assert m.targets[t0] == t0
        maps.append((m.targets, m.signs, m.signs[t0]))
    label = [0] * len(xj)
    count = 0
    for start in range(len(xj)):
        if label[start]:
            continue
        label[start] = 1
        queue = deque([start])
        consistent = True
        while queue:
            p = queue.popleft()
            for targets, signs, s0 in maps:
                q = targets[p]
                sq = label[p] * signs[p] * s0
                if not label[q]:
                    label[q] = sq
                    queue.append(q)
                elif label[q] != sq:
                    consistent = False
        count += consistent
    return count


def verify_equivariance(T: IntertwinerMatrix, samples: int = 100, seed: int = 0) -> bool:
    """Check the entry equations for every adjacent transposition and random group elements."""
    n = T.n
    rng = random.Random(seed)
    elements = adjacent_transpositions(n) + [random_permutation(n, rng) for _ in range(samples)]
    xj = _enumerate(n, T.j)
    xk = _enumerate(n, T.k)
    for sigma in elements:
        mj = SignedBasisMap.of(sigma, T.j)
        mk = SignedBasisMap.of(sigma, T.k)
        for a, tau in enumerate(xj):
            for b, kappa in enumerate(xk):
                lhs = mk.signs[b] * T[tau, kappa]
                rhs = mj.signs[a] * T[xj[mj.targets[a]], xk[mk.targets[b]]]
                if lhs != rhs:
                    return False
    return True


def dense_hom_dimension(n: int, j: int, k: int) -> int:
    """dim Hom_G(V_j, V_k) as the nullity of the entry equations over all of S_n.

    Independent of the orbit walk: one unknown per (tau, kappa), one equation
    per group element and pair, solved by exact elimination. Small n only.
    """
    _check_j(n, j)
    _check_j(n, k)
    nj = len(_enumerate(n, j))
    nk = len(_enumerate(n, k))
    rows = set()
    for sigma in all_permutations(n):
        mj = SignedBasisMap.of(sigma, j)
        mk = SignedBasisMap.of(sigma, k)
        for a in range(nj):
            for b in range(nk):
                # S(s,kappa) x[a,b] - S(s,tau) x[s.a, s.b] = 0
                c1 = a * nk + b
                c2 = mj.targets[a] * nk + mk.targets[b]
                v1 = mk.signs[b]
                v2 = -mj.signs[a]
                if c1 == c2:
                    if v1 + v2:
                        rows.add(((c1, 1),))
                    continue
                if c1 > c2:
                    c1, c2, v1, v2 = c2, c1, v2, v1
                if v1 < 0:
                    v1, v2 = -v1, -v2
                rows.add(((c1, v1), (c2, v2)))
    return nullity([dict(r) for r in rows], nj * nk)
