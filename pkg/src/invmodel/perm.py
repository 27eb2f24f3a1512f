"""Permutations of {1..n}, involutions in canonical form, and the classes X_j.

Everything here is 1-based at the interface: ``Permutation(3, (2, 3, 1))``
sends 1 to 2, 2 to 3 and 3 to 1.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images."""

    __slots__ = ("n", "images", "_hash")

    def __init__(self, n: int, images: Sequence[int] | None = None, check: bool = True):
        if n < 0:
            raise ValueError(f"degree must be non-negative, got {n}")
        if images is None:
            images = range(1, n + 1)
        images = tuple(images)
        if check:
            if len(images) != n:
                raise ValueError(f"expected {n} images, got {len(images)}")
            if sorted(images) != list(range(1, n + 1)):
                raise ValueError(f"{images} is not a permutation of 1..{n}")
        self.n = n
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(n, range(1, n + 1), check=False)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice in cycle notation")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a - 1] = b
        return cls(n, images, check=False)

    @classmethod
    def parse(cls, n: int, text: str) -> Permutation:
        return cls.from_cycles(n, parse_cycles(text))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.n == other.n and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(self.n, inv, check=False)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start - 1]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.n - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation({self.n}, {self.images})"


class Involution:
    """An involution as its canonical list of disjoint transpositions.

    Pairs are sorted internally (a < b) and ordered by first element, so two
    equal involutions always have identical ``pairs``.
    """

    __slots__ = ("n", "pairs", "_hash")

    def __init__(self, n: int, pairs: Iterable[Sequence[int]] = (), check: bool = True):
        if check:
            canon = tuple(sorted(tuple(sorted(p)) for p in pairs))
            points = [x for p in canon for x in p]
            if any(len(p) != 2 for p in canon):
                raise ValueError("every transposition needs exactly two points")
            if len(set(points)) != len(points):
                raise ValueError(f"transpositions {canon} are not disjoint")
            if any(not 1 <= x <= n for x in points):
                raise ValueError(f"transposition point outside 1..{n}")
            if any(a == b for a, b in canon):
                raise ValueError("a transposition needs two distinct points")
        else:
            canon = tuple(pairs)
        self.n = n
        self.pairs: tuple[tuple[int, int], ...] = canon
        self._hash = hash((n, canon))

    @classmethod
    def identity(cls, n: int) -> Involution:
        return cls(n, (), check=False)

    @classmethod
    def parse(cls, n: int, text: str) -> Involution:
        cycs = parse_cycles(text)
        if any(len(c) not in (1, 2) for c in cycs):
            raise ValueError(f"{text!r} is not a product of disjoint transpositions")
        return cls(n, [c for c in cycs if len(c) == 2])

    @classmethod
    def from_permutation(cls, sigma: Permutation) -> Involution:
        cycs = sigma.cycles()
        if any(len(c) != 2 for c in cycs):
            raise ValueError(f"{sigma} is not an involution")
        return cls(sigma.n, cycs, check=False)

    @property
    def length(self) -> int:
        return len(self.pairs)

    def support(self) -> set[int]:
        return {x for p in self.pairs for x in p}

    def as_permutation(self) -> Permutation:
        images = list(range(1, self.n + 1))
        for a, b in self.pairs:
            images[a - 1] = b
            images[b - 1] = a
        return Permutation(self.n, images, check=False)

    def __call__(self, i: int) -> int:
        for a, b in self.pairs:
            if i == a:
                return b
            if i == b:
                return a
        return i

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Involution):
            return NotImplemented
        return self.n == other.n and self.pairs == other.pairs

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Involution) -> bool:
        return self.pairs < other.pairs

    def __str__(self) -> str:
        if not self.pairs:
            return "()"
        return "".join(f"({a} {b})" for a, b in self.pairs)

    def __repr__(self) -> str:
        return f"Involution({self.n}, {self.pairs})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty cycle string; write the identity as ()")
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        if tokens:
            cycles.append(tuple(int(t) for t in tokens))
    return cycles


def _check_degree(a, b) -> None:
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation i -> a(b(i))."""
    _check_degree(a, b)
    ai = a.images
    return Permutation(a.n, [ai[x - 1] for x in b.images], check=False)


def conjugate(sigma: Permutation, tau: Involution) -> Involution:
    """sigma tau sigma^-1, re-canonicalised."""
    _check_degree(sigma, tau)
    im = sigma.images
    pairs = []
    for a, b in tau.pairs:
        x, y = im[a - 1], im[b - 1]
        pairs.append((x, y) if x < y else (y, x))
    pairs.sort()
    return Involution(tau.n, pairs, check=False)


def involution_count(n: int, j: int) -> int:
    if not 0 <= j <= n // 2:
        return 0
    return factorial(n) // (2**j * factorial(j) * factorial(n - 2 * j))


def _matchings(points: tuple[int, ...], j: int) -> Iterator[tuple[tuple[int, int], ...]]:
    # points[i] with i skipped is left fixed; only leading points may be skipped
    # while enough remain to place j pairs.
    if j == 0:
        yield ()
        return
    for i, a in enumerate(points):
        if len(points) - i < 2 * j:
            break
        rest_after = points[i + 1 :]
        for k, b in enumerate(rest_after):
            remaining = rest_after[:k] + rest_after[k + 1 :]
            for tail in _matchings(remaining, j - 1):
                yield ((a, b),) + tail


@lru_cache(maxsize=None)
def _enumerate(n: int, j: int) -> tuple[Involution, ...]:
    out = [Involution(n, m, check=False) for m in _matchings(tuple(range(1, n + 1)), j)]
    out.sort()
    return tuple(out)


def enumerate_involutions(n: int, j: int) -> list[Involution]:
    """All involutions of degree n with exactly j transpositions, lex ordered."""
    if not 0 <= j <= n // 2:
        raise ValueError(f"length j={j} out of range 0..{n // 2}")
    return list(_enumerate(n, j))


def all_involutions(n: int) -> list[Involution]:
    return [t for j in range(n // 2 + 1) for t in _enumerate(n, j)]


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(n, images, check=False)


def adjacent_transpositions(n: int) -> list[Permutation]:
    return [Permutation.from_cycles(n, [(i, i + 1)]) for i in range(1, n)]


def random_permutation(n: int, rng) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(n, images, check=False)


def commutes(sigma: Permutation, tau: Involution) -> bool:
    return conjugate(sigma, tau) == tau


def centralizer_pair(tau: Involution, kappa: Involution) -> list[Permutation]:
    """Every sigma fixing both tau and kappa under conjugation.

    Exhaustive over all n! permutations; meant as an oracle for n <= 8.
    """
    _check_degree(tau, kappa)
    return [s for s in all_permutations(tau.n) if commutes(s, tau) and commutes(s, kappa)]
