"""Structure of a pair of involutions under simultaneous conjugation.

The transpositions of tau and kappa are edges of a graph on {1..n} in which
every vertex has at most one tau-edge and one kappa-edge. Its connected
components (the characteristic partition) are therefore points, alternating
paths or alternating cycles, and each kind has a normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .perm import Involution, Permutation, _check_degree
from .signs import sign

SINGLETON = "Singleton"
CASE_I = "CaseI"
CASE_II = "CaseII"
CASE_III = "CaseIII"


class UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return sorted(tuple(sorted(g)) for g in out.values())


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def numerical(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)


@dataclass(frozen=True)
class BlockCase:
    """Case tag of one block plus the renumbering p_1, p_2, ... realising it.

    ``tau_longer`` only matters for Case I: it records whether tau (rather
    than kappa) carries the extra transposition. In the normal form the
    longer involution owns the edges (p_1 p_2), (p_3 p_4), ...
    """

    tag: str
    order: tuple[int, ...]
    tau_longer: bool = True

    @property
    def key(self) -> tuple:
        return (len(self.order), self.tag, self.tau_longer if self.tag == CASE_I else True)

    def to_json(self) -> dict:
        d = {"tag": self.tag, "order": list(self.order)}
        if self.tag == CASE_I:
            d["longer"] = "tau" if self.tau_longer else "kappa"
        return d


@dataclass(frozen=True)
class WitnessI:
    """A sigma commuting with both involutions with S(sigma,tau) S(sigma,kappa) = -1."""

    sigma: Permutation


@dataclass(frozen=True)
class ConjugatorII:
    """An involution in the Young subgroup of the blocks conjugating tau to kappa."""

    lam: Involution


@dataclass(frozen=True)
class PairProfile:
    tau: Involution
    kappa: Involution
    partition: SetPartition
    cases: tuple[BlockCase, ...]
    status: WitnessI | ConjugatorII

    @property
    def numerical(self) -> tuple[int, ...]:
        return self.partition.numerical

    @property
    def has_witness(self) -> bool:
        return isinstance(self.status, WitnessI)

    def to_json(self) -> dict:
        if isinstance(self.status, WitnessI):
            status = {"type": "witness", "element": str(self.status.sigma)}
        else:
            status = {"type": "conjugator", "element": str(self.status.lam)}
        return {
            "blocks": [list(b) for b in self.partition.blocks],
            "cases": [c.to_json() for c in self.cases],
            "numerical": list(self.numerical),
            "status": status,
        }


def characteristic_partition(tau: Involution, kappa: Involution) -> SetPartition:
    """Connected components of the graph whose edges are the pairs of tau and kappa."""
    _check_degree(tau, kappa)
    uf = UnionFind(range(1, tau.n + 1))
    for a, b in tau.pairs + kappa.pairs:
        uf.union(a, b)
    return SetPartition(tau.n, tuple(uf.groups()))


def _walk(start: int, first: Involution, second: Involution, limit: int) -> list[int]:
    # alternate first, second, first, ... until the walk stops or closes up
    order = [start]
    current, invs = start, (first, second)
    step = 0
    while len(order) < limit:
        nxt = invs[step % 2](current)
        if nxt == current or nxt == start:
            break
        order.append(nxt)
        current = nxt
        step += 1
    return order


def classify_block(tau: Involution, kappa: Involution, block: Sequence[int]) -> BlockCase:
    """Case of a block of the characteristic partition, with its normal-form order.

    ``tau`` and ``kappa`` may be the full involutions; only their action on
    ``block`` is looked at.
    """
    block = tuple(sorted(block))
    m = len(block)
    if m == 1:
        return BlockCase(SINGLETON, block)
    members = set(block)
    for x in block:
        if tau(x) not in members or kappa(x) not in members:
            raise ValueError(f"{block} is not invariant under the pair")
    tau_fixed = [x for x in block if tau(x) == x]
    kappa_fixed = [x for x in block if kappa(x) == x]

    if not tau_fixed and not kappa_fixed:
        order = _walk(block[0], tau, kappa, m)
        if len(order) != m:
            raise ValueError(f"{block} is not connected under the pair")
        return BlockCase(CASE_III, tuple(order))

    if m % 2 == 1:
        # lengths equal; exactly one endpoint fixed by kappa
        if len(kappa_fixed) != 1 or len(tau_fixed) != 1:
            raise ValueError(f"{block} is not connected under the pair")
        order = _walk(kappa_fixed[0], tau, kappa, m)
        tag, longer = CASE_II, True
    else:
        if kappa_fixed and not tau_fixed and len(kappa_fixed) == 2:
            order = _walk(min(kappa_fixed), tau, kappa, m)
            longer = True
        elif tau_fixed and not kappa_fixed and len(tau_fixed) == 2:
            order = _walk(min(tau_fixed), kappa, tau, m)
            longer = False
        else:
            raise ValueError(f"{block} is not connected under the pair")
        tag = CASE_I
    if len(order) != m:
        raise ValueError(f"{block} is not connected under the pair")
    return BlockCase(tag, tuple(order), longer)


def _reversal(order: Sequence[int], cyclic: bool) -> list[tuple[int, int]]:
    # path: p_i <-> p_{m+1-i}; cycle: p_i <-> p_{m+2-i} with indices mod m
    m = len(order)
    pairs = []
    for i in range(1, m + 1):
        partner = (m + 2 - i) if cyclic else (m + 1 - i)
        if cyclic:
            partner = (partner - 1) % m + 1
        if i < partner:
            pairs.append((order[i - 1], order[partner - 1]))
    return pairs


def profile(tau: Involution, kappa: Involution) -> PairProfile:
    part = characteristic_partition(tau, kappa)
    cases = tuple(classify_block(tau, kappa, b) for b in part.blocks)
    n = tau.n
    # blocks are sorted by minimum, so the first Case I block holds the smallest element
    case_i = [c for c in cases if c.tag == CASE_I]
    if case_i:
        sigma = Involution(n, _reversal(case_i[0].order, cyclic=False)).as_permutation()
        status: WitnessI | ConjugatorII = WitnessI(sigma)
    else:
        pairs = []
        for c in cases:
            if c.tag == CASE_II:
                pairs += _reversal(c.order, cyclic=False)
            elif c.tag == CASE_III:
                pairs += _reversal(c.order, cyclic=True)
        status = ConjugatorII(Involution(n, pairs))
    return PairProfile(tau, kappa, part, cases, status)


def dichotomy(tau: Involution, kappa: Involution) -> PairProfile:
    """Classify (tau, kappa): either a sign-reversing commuting witness or an involutive conjugator."""
    return profile(tau, kappa)


def validate_profile(p: PairProfile) -> bool:
    """Check the returned witness or conjugator by direct computation."""
    from .perm import commutes, conjugate

    tau, kappa = p.tau, p.kappa
    if isinstance(p.status, WitnessI):
        s = p.status.sigma
        return commutes(s, tau) and commutes(s, kappa) and sign(s, tau) * sign(s, kappa) == -1
    lam = p.status.lam
    if conjugate(lam.as_permutation(), tau) != kappa:
        return False
    # inside the Young subgroup: each transposition stays within one block
    return all(p.partition.block_of(a) == p.partition.block_of(b) for a, b in lam.pairs)


def simultaneous_conjugator(
    pair1: tuple[Involution, Involution], pair2: tuple[Involution, Involution]
) -> Optional[Permutation]:
    """A sigma with sigma pair1 sigma^-1 == pair2, or None if the pairs lie in different orbits."""
    _check_degree(pair1[0], pair2[0])
    _check_degree(pair1[1], pair2[1])
    p1 = profile(*pair1)
    p2 = profile(*pair2)
    c1 = sorted(p1.cases, key=lambda c: (c.key, c.order))
    c2 = sorted(p2.cases, key=lambda c: (c.key, c.order))
    if [c.key for c in c1] != [c.key for c in c2]:
        return None
    n = pair1[0].n
    images = [0] * n
    for a, b in zip(c1, c2):
        for x, y in zip(a.order, b.order):
            images[x - 1] = y
    return Permutation(n, images)
