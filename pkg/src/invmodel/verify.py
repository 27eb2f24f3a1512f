"""Verification suites run by ``invmodel verify``.

Each suite returns one :class:`Check`. Exhaustive variants are used below
the stated caps and seeded random sampling above them.
"""

from __future__ import annotations

import itertools
import random
import time
from typing import Callable

from .characters import (
    count_partitions_with_odd_parts,
    inner_product,
    model_character,
    verify_main_theorem,
)
from .intertwiners import end_dimension, end_dimension_sliced, hom_basis
from .pairs import dichotomy, validate_profile
from .perm import (
    Permutation,
    _enumerate,
    all_involutions,
    all_permutations,
    compose,
    random_permutation,
)
from .report import Check
from .signs import SignedBasisMap, cocycle_check

EXHAUSTIVE_COCYCLE = 4
EXHAUSTIVE_HOMOMORPHISM = 5
EXHAUSTIVE_DICHOTOMY = 6
INTERTWINER_CAP = 7
FULL_ORBITS_CAP = 8


def _timed(fn: Callable[[], Check]) -> Check:
    t0 = time.perf_counter()
    check = fn()
    check.elapsed_ms = (time.perf_counter() - t0) * 1000
    return check


def check_cocycle(n: int, rng: random.Random, samples: int = 10000) -> Check:
    invs = all_involutions(n)
    if n <= EXHAUSTIVE_COCYCLE:
        perms = list(all_permutations(n))
        triples = itertools.product(perms, perms, invs)
        total = len(perms) ** 2 * len(invs)
        mode = "exhaustive"
    else:
        triples = (
            (random_permutation(n, rng), random_permutation(n, rng), rng.choice(invs))
            for _ in range(samples)
        )
        total = samples
        mode = f"{samples} random"
    failures = sum(1 for s1, s2, t in triples if not cocycle_check(s1, s2, t))
    return Check(f"cocycle identity ({mode}, {total} triples)", failures == 0, failures, 0)


def homomorphism_failures(n: int, pairs, js=None) -> int:
    js = range(n // 2 + 1) if js is None else js
    cache: dict[tuple[Permutation, int], SignedBasisMap] = {}

    def pi(s: Permutation, j: int) -> SignedBasisMap:
        key = (s, j)
        if key not in cache:
            cache[key] = SignedBasisMap.of(s, j)
        return cache[key]

    failures = 0
    for s1, s2 in pairs:
        prod = compose(s1, s2)
        for j in js:
            if pi(prod, j) != pi(s1, j) @ pi(s2, j):
                failures += 1
    return failures


def check_homomorphism(n: int, rng: random.Random, samples: int = 1000) -> Check:
    if n <= EXHAUSTIVE_HOMOMORPHISM:
        perms = list(all_permutations(n))
        pairs = list(itertools.product(perms, perms))
        mode = "exhaustive"
    else:
        pairs = [(random_permutation(n, rng), random_permutation(n, rng)) for _ in range(samples)]
        mode = f"{samples} random"
    failures = homomorphism_failures(n, pairs)
    return Check(f"pi_j(s1 s2) = pi_j(s1) pi_j(s2) ({mode}, {len(pairs)} pairs)", failures == 0, failures, 0)


def sign_reversing_pairs(n: int) -> set[tuple[int, int]]:
    """Index pairs (a, b) into all_involutions(n) that admit a commuting sigma with sign product -1.

    Exhaustive over the whole group: for each sigma, every pair of involutions
    it fixes is tested.
    """
    invs = all_involutions(n)
    index = {t: i for i, t in enumerate(invs)}
    found = set()
    for sigma in all_permutations(n):
        fixed = []
        for j in range(n // 2 + 1):
            m = SignedBasisMap.of(sigma, j)
            basis = _enumerate(n, j)
            for i, (t, s) in enumerate(zip(m.targets, m.signs)):
                if t == i:
                    fixed.append((index[basis[i]], s))
        for (a, sa), (b, sb) in itertools.product(fixed, fixed):
            if sa * sb == -1:
                found.add((a, b))
    return found


def check_dichotomy(n: int, rng: random.Random, samples: int = 500) -> Check:
    invs = all_involutions(n)
    if n <= EXHAUSTIVE_DICHOTOMY:
        oracle = sign_reversing_pairs(n)
        mismatches = 0
        for (a, t), (b, k) in itertools.product(enumerate(invs), enumerate(invs)):
            prof = dichotomy(t, k)
            if prof.has_witness != ((a, b) in oracle) or not validate_profile(prof):
                mismatches += 1
        total = len(invs) ** 2
        name = f"dichotomy vs exhaustive search ({total} pairs)"
    else:
        mismatches = 0
        for _ in range(samples):
            prof = dichotomy(rng.choice(invs), rng.choice(invs))
            if not validate_profile(prof):
                mismatches += 1
        name = f"dichotomy witnesses validate ({samples} random pairs)"
    return Check(name, mismatches == 0, mismatches, 0)


def check_disjointness(n: int) -> Check:
    js = range(n // 2 + 1)
    nonempty = [(j, k) for j in js for k in js if j != k and hom_basis(n, j, k)]
    chars = {j: model_character(n, j) for j in js}
    nonorth = [(j, k) for j in js for k in js if j != k and inner_product(n, chars[j], chars[k])]
    return Check(
        "Hom_G(V_j, V_k) = 0 and <chi_j, chi_k> = 0 for j != k",
        not nonempty and not nonorth,
        [list(p) for p in nonempty + nonorth],
        [],
    )


def _matmul(a: dict, b: dict) -> dict:
    # sparse square matrices as {(row, col): value}; a @ b
    by_row: dict = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    out: dict = {}
    for (r, c), v in a.items():
        for c2, w in by_row.get(c, ()):
            out[(r, c2)] = out.get((r, c2), 0) + v * w
    return {k: v for k, v in out.items() if v}


def check_symmetric_commutative(n: int) -> Check:
    bad = []
    for j in range(n // 2 + 1):
        mats = [{(kap, tau): v for (tau, kap), v in T.entries.items()} for T in hom_basis(n, j, j)]
        for m in mats:
            if any(m.get((c, r)) != v for (r, c), v in m.items()):
                bad.append(f"j={j}: asymmetric")
        for x, y in itertools.combinations(mats, 2):
            if _matmul(x, y) != _matmul(y, x):
                bad.append(f"j={j}: non-commuting pair")
    return Check("End_G(V_j) symmetric and commutative", not bad, bad, [])


def check_dimensions(n: int) -> Check:
    dim = end_dimension if n <= FULL_ORBITS_CAP else end_dimension_sliced
    observed = [dim(n, j) for j in range(n // 2 + 1)]
    expected = [count_partitions_with_odd_parts(n, n - 2 * j) for j in range(n // 2 + 1)]
    return Check("dim End_G(V_j) = #partitions with n-2j odd parts", observed == expected, observed, expected)


def run_all(n: int, seed: int = 0) -> tuple[list[Check], list[str], object]:
    """Every suite applicable at degree n; returns (checks, skipped, theorem report)."""
    rng = random.Random(seed)
    checks = [
        _timed(lambda: check_cocycle(n, rng)),
        _timed(lambda: check_homomorphism(n, rng, 1000 if n <= FULL_ORBITS_CAP else 20)),
        _timed(lambda: check_dichotomy(n, rng)),
    ]
    skipped = []
    if n <= INTERTWINER_CAP:
        checks.append(_timed(lambda: check_disjointness(n)))
        checks.append(_timed(lambda: check_symmetric_commutative(n)))
    else:
        skipped.append(f"intertwiner bases (disjointness, symmetry, commutativity) above n={INTERTWINER_CAP}")
    checks.append(_timed(lambda: check_dimensions(n)))
    t0 = time.perf_counter()
    report = verify_main_theorem(n, FULL_ORBITS_CAP)
    per = (time.perf_counter() - t0) * 1000 / len(report.checks)
    for c in report.checks:
        c.elapsed_ms = per
    checks.extend(report.checks)
    return checks, skipped, report
