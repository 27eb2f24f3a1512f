"""Exit criteria. Every comparison here is exact; runtimes are bounded where stated."""

import itertools
import random
import time
from collections import deque

import numpy as np

from invmodel.characters import (
    count_partitions_with_odd_parts,
    degree,
    inner_product,
    model_character,
    model_multiplicities,
    partitions_of,
)
from invmodel.intertwiners import dense_hom_dimension, end_dimension, hom_basis
from invmodel.pairs import (
    WitnessI,
    characteristic_partition,
    dichotomy,
    simultaneous_conjugator,
)
from invmodel.perm import (
    adjacent_transpositions,
    all_involutions,
    all_permutations,
    compose,
    conjugate,
    enumerate_involutions,
    random_permutation,
)
from invmodel.signs import SignedBasisMap, cocycle_check, sign


def test_1_main_theorem(criterion):
    criterion("1. every irreducible occurs exactly once in A, n = 1..10 (< 60 s)")
    t0 = time.perf_counter()
    for n in range(1, 11):
        table = model_multiplicities(n)
        assert len(table.rows) == len(partitions_of(n))
        for lam, row in table.rows.items():
            assert set(row.values()) <= {0, 1}, (n, lam, row)
            assert sum(row.values()) == 1, (n, lam, row)
    assert time.perf_counter() - t0 < 60


def test_2_dimension_proposition(criterion):
    criterion("2. dim End_G(V_j) = #partitions with n-2j odd parts and sums to p(n), n = 1..8 (< 60 s)")
    t0 = time.perf_counter()
    for n in range(1, 9):
        dims = []
        for j in range(n // 2 + 1):
            d = end_dimension(n, j)
            assert d == count_partitions_with_odd_parts(n, n - 2 * j), (n, j, d)
            dims.append(d)
        assert sum(dims) == len(partitions_of(n))
    assert time.perf_counter() - t0 < 60


def test_3_involutions_equal_sum_of_degrees(criterion):
    criterion("3. sum_j |X_j| = sum_lambda f^lambda, n = 1..10 (< 30 s)")
    t0 = time.perf_counter()
    for n in range(1, 11):
        n_inv = sum(len(enumerate_involutions(n, j)) for j in range(n // 2 + 1))
        assert n_inv == sum(degree(lam) for lam in partitions_of(n)), n
    assert time.perf_counter() - t0 < 30


def test_4_cocycle(criterion):
    criterion("4. cocycle identity: exhaustive n <= 4, 10000 seeded triples for n = 5..10, zero failures")
    failures = 0
    for n in range(1, 5):
        perms = list(all_permutations(n))
        for s1, s2, t in itertools.product(perms, perms, all_involutions(n)):
            failures += not cocycle_check(s1, s2, t)
    rng = random.Random(4)
    for n in range(5, 11):
        invs = all_involutions(n)
        for _ in range(10000):
            s1, s2 = random_permutation(n, rng), random_permutation(n, rng)
            tau = rng.choice(invs)
            lhs = sign(compose(s1, s2), tau)
            rhs = sign(s1, conjugate(s2, tau)) * sign(s2, tau)
            failures += lhs != rhs
    assert failures == 0


def _homomorphism_failures(n, pairs):
    maps = {}

    def pi(s, j):
        if (s, j) not in maps:
            maps[s, j] = SignedBasisMap.of(s, j)
        return maps[s, j]

    failures = 0
    for s1, s2 in pairs:
        prod = compose(s1, s2)
        for j in range(n // 2 + 1):
            a, b, c = pi(s1, j), pi(s2, j), pi(prod, j)
            # apply s2 then s1, entry by entry
            for i in range(len(b.targets)):
                t = b.targets[i]
                if c.targets[i] != a.targets[t] or c.signs[i] != a.signs[t] * b.signs[i]:
                    failures += 1
                    break
    return failures


def test_5_representation_axiom(criterion):
    criterion("5. pi_j(s1 s2) = pi_j(s1) pi_j(s2): exhaustive n <= 5, 1000 seeded pairs n = 6..8, zero failures")
    failures = 0
    for n in range(1, 6):
        perms = list(all_permutations(n))
        failures += _homomorphism_failures(n, itertools.product(perms, perms))
    rng = random.Random(5)
    for n in range(6, 9):
        pairs = [(random_permutation(n, rng), random_permutation(n, rng)) for _ in range(1000)]
        failures += _homomorphism_failures(n, pairs)
    assert failures == 0


def test_6_disjointness(criterion):
    criterion("6. Hom_G(V_j, V_k) = 0 for j != k (n <= 7) and <chi_j, chi_k> = 0 (n <= 8)")
    for n in range(1, 8):
        for j, k in itertools.permutations(range(n // 2 + 1), 2):
            assert hom_basis(n, j, k) == [], (n, j, k)
    for n in range(1, 9):
        chars = {j: model_character(n, j) for j in range(n // 2 + 1)}
        for j, k in itertools.permutations(chars, 2):
            assert inner_product(n, chars[j], chars[k]) == 0, (n, j, k)


def test_7_commutativity(criterion):
    criterion("7. every basis element of End_G(V_j) is symmetric and all products commute, n <= 7")
    for n in range(1, 8):
        for j in range(n // 2 + 1):
            mats = [T.to_array() for T in hom_basis(n, j, j)]
            assert mats
            for m in mats:
                assert np.array_equal(m, m.T), (n, j)
            for x, y in itertools.combinations(mats, 2):
                assert np.array_equal(x @ y, y @ x), (n, j)


def _exhaustive_sign_reversal(n):
    """Pairs (tau, kappa) admitting a commuting sigma with sign product -1, by scanning all of S_n."""
    invs = all_involutions(n)
    found = set()
    for sigma in all_permutations(n):
        fixed = [(t, sign(sigma, t)) for t in invs if conjugate(sigma, t) == t]
        for (t, st), (k, sk) in itertools.product(fixed, fixed):
            if st * sk == -1:
                found.add((t, k))
    return found


def test_8_dichotomy(criterion):
    criterion("8. dichotomy branch matches exhaustive search and witnesses validate, all pairs n <= 6")
    mismatches = 0
    for n in range(1, 7):
        oracle = _exhaustive_sign_reversal(n)
        invs = all_involutions(n)
        for tau, kappa in itertools.product(invs, invs):
            prof = dichotomy(tau, kappa)
            if prof.has_witness != ((tau, kappa) in oracle):
                mismatches += 1
                continue
            part = characteristic_partition(tau, kappa)
            if isinstance(prof.status, WitnessI):
                s = prof.status.sigma
                ok = (
                    conjugate(s, tau) == tau
                    and conjugate(s, kappa) == kappa
                    and sign(s, tau) * sign(s, kappa) == -1
                )
            else:
                lam = prof.status.lam.as_permutation()
                ok = (
                    compose(lam, lam).is_identity()
                    and conjugate(lam, tau) == kappa
                    and all(part.block_of(x) == part.block_of(lam(x)) for x in range(1, n + 1))
                )
            mismatches += not ok
    assert mismatches == 0


def test_9_oracle_equivalence(criterion):
    criterion("9. end_dimension = nullity of the full entry equations (n <= 6); sum m^2 = end_dimension (n <= 8)")
    for n in range(1, 7):
        for j in range(n // 2 + 1):
            assert dense_hom_dimension(n, j, j) == end_dimension(n, j), (n, j)
    for n in range(1, 9):
        table = model_multiplicities(n)
        for j in range(n // 2 + 1):
            squares = sum(row[j] ** 2 for row in table.rows.values())
            assert squares == end_dimension(n, j), (n, j)


def _pair_orbit(pair):
    n = pair[0].n
    gens = adjacent_transpositions(n)
    seen = {pair}
    queue = deque([pair])
    while queue:
        t, k = queue.popleft()
        for g in gens:
            q = (conjugate(g, t), conjugate(g, k))
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def test_10_connected_pairs_single_orbit(criterion):
    criterion("10. connected equal-length pairs form one orbit and every conjugator verifies, n <= 6")
    for n in range(1, 7):
        invs = all_involutions(n)
        connected = [
            (t, k)
            for t, k in itertools.product(invs, invs)
            if t.length == k.length and len(characteristic_partition(t, k).blocks) == 1
        ]
        assert connected
        assert set(connected) <= _pair_orbit(connected[0])
        for p1, p2 in itertools.product(connected, connected):
            s = simultaneous_conjugator(p1, p2)
            assert s is not None
            assert (conjugate(s, p1[0]), conjugate(s, p1[1])) == p2
