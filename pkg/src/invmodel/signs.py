"""The sign S(sigma, tau), the signed action on V_j and the algebra A = sum_j V_j."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .perm import (
    Involution,
    Permutation,
    _check_degree,
    _enumerate,
    compose,
    conjugate,
)


def sign(sigma: Permutation, tau: Involution) -> int:
    """(-1) ** #{canonical pairs (a, b) of tau with sigma(a) > sigma(b)}."""
    _check_degree(sigma, tau)
    im = sigma.images
    s = 1
    for a, b in tau.pairs:
        if im[a - 1] > im[b - 1]:
            s = -s
    return s


def cocycle_check(sigma1: Permutation, sigma2: Permutation, tau: Involution) -> bool:
    """Whether S(s1 s2, tau) == S(s1, s2 tau s2^-1) * S(s2, tau)."""
    _check_degree(sigma1, sigma2)
    lhs = sign(compose(sigma1, sigma2), tau)
    rhs = sign(sigma1, conjugate(sigma2, tau)) * sign(sigma2, tau)
    return lhs == rhs


@lru_cache(maxsize=None)
def basis_index(n: int, j: int) -> dict[Involution, int]:
    return {t: i for i, t in enumerate(_enumerate(n, j))}


@dataclass(frozen=True)
class SignedBasisMap:
    """pi_j(sigma) as a signed permutation of the basis X_j.

    Row ``i`` sends basis element ``i`` to ``signs[i] * basis[targets[i]]``.
    """

    n: int
    j: int
    targets: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def of(cls, sigma: Permutation, j: int) -> SignedBasisMap:
        n = sigma.n
        basis = _enumerate(n, j)
        index = basis_index(n, j)
        targets = []
        signs = []
        for tau in basis:
            targets.append(index[conjugate(sigma, tau)])
            signs.append(sign(sigma, tau))
        return cls(n, j, tuple(targets), tuple(signs))

    @property
    def basis(self) -> tuple[Involution, ...]:
        return _enumerate(self.n, self.j)

    @property
    def entries(self) -> dict[Involution, tuple[Involution, int]]:
        b = self.basis
        return {b[i]: (b[t], s) for i, (t, s) in enumerate(zip(self.targets, self.signs))}

    def then(self, other: SignedBasisMap) -> SignedBasisMap:
        """The map ``other . self`` (apply self first)."""
        if (self.n, self.j) != (other.n, other.j):
            raise ValueError("basis maps live on different spaces")
        targets = tuple(other.targets[t] for t in self.targets)
        signs = tuple(other.signs[t] * s for t, s in zip(self.targets, self.signs))
        return SignedBasisMap(self.n, self.j, targets, signs)

    def __matmul__(self, other: SignedBasisMap) -> SignedBasisMap:
        # matrix-product order: (A @ B) applies B first
        return other.then(self)

    def trace(self) -> int:
        return sum(s for i, (t, s) in enumerate(zip(self.targets, self.signs)) if t == i)

    def to_array(self):
        import numpy as np

        size = len(self.targets)
        m = np.zeros((size, size), dtype=np.int64)
        for i, (t, s) in enumerate(zip(self.targets, self.signs)):
            m[t, i] = s
        return m


def signed_basis_map(sigma: Permutation, j: int) -> SignedBasisMap:
    return SignedBasisMap.of(sigma, j)


class ModelVector:
    """An integer combination of involutions of a fixed degree n."""

    __slots__ = ("n", "coefficients")

    def __init__(self, n: int, coefficients: Mapping[Involution, int] | None = None):
        self.n = n
        coeffs = {}
        for tau, c in (coefficients or {}).items():
            if tau.n != n:
                raise ValueError(f"involution {tau} has degree {tau.n}, expected {n}")
            if c:
                coeffs[tau] = coeffs.get(tau, 0) + c
        self.coefficients: dict[Involution, int] = {t: c for t, c in coeffs.items() if c}

    @classmethod
    def basis(cls, tau: Involution) -> ModelVector:
        return cls(tau.n, {tau: 1})

    @classmethod
    def unit(cls, n: int) -> ModelVector:
        return cls(n, {Involution.identity(n): 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModelVector):
            return NotImplemented
        return self.n == other.n and self.coefficients == other.coefficients

    def __add__(self, other: ModelVector) -> ModelVector:
        _check_degree(self, other)
        out = dict(self.coefficients)
        for t, c in other.coefficients.items():
            out[t] = out.get(t, 0) + c
        return ModelVector(self.n, out)

    def __neg__(self) -> ModelVector:
        return ModelVector(self.n, {t: -c for t, c in self.coefficients.items()})

    def __sub__(self, other: ModelVector) -> ModelVector:
        return self + (-other)

    def __rmul__(self, scalar: int) -> ModelVector:
        return ModelVector(self.n, {t: scalar * c for t, c in self.coefficients.items()})

    def __mul__(self, other: ModelVector) -> ModelVector:
        return model_product(self, other)

    def grades(self) -> set[int]:
        return {t.length for t in self.coefficients}

    def __str__(self) -> str:
        return format_vector(self)

    def __repr__(self) -> str:
        return f"ModelVector({self.n}, {format_vector(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"involution": str(t), "coefficient": c}
            for t, c in sorted(self.coefficients.items(), key=lambda tc: (tc[0].length, tc[0].pairs))
        ]

    @classmethod
    def from_json(cls, n: int, data: str | Iterable[dict]) -> ModelVector:
        if isinstance(data, str):
            data = json.loads(data)
        out: dict[Involution, int] = {}
        for item in data:
            tau = Involution.parse(n, item["involution"])
            out[tau] = out.get(tau, 0) + int(item["coefficient"])
        return cls(n, out)


def act(sigma: Permutation, v: ModelVector) -> ModelVector:
    """Linear extension of tau -> S(sigma, tau) * sigma tau sigma^-1."""
    _check_degree(sigma, v)
    return ModelVector(v.n, {conjugate(sigma, t): sign(sigma, t) * c for t, c in v.coefficients.items()})


def model_product(a: ModelVector, b: ModelVector) -> ModelVector:
    """Product in A: disjoint transpositions multiply by union, overlaps give zero."""
    _check_degree(a, b)
    out: dict[Involution, int] = {}
    for t, c in a.coefficients.items():
        ts = t.support()
        for k, d in b.coefficients.items():
            if ts.isdisjoint(k.support()):
                prod = Involution(a.n, sorted(t.pairs + k.pairs), check=False)
                out[prod] = out.get(prod, 0) + c * d
    return ModelVector(a.n, out)


def character_of_Vj(n: int, j: int, class_rep: Permutation) -> int:
    """Trace of pi_j(class_rep): signs summed over the involutions it fixes."""
    if not 0 <= j <= n // 2:
        raise ValueError(f"length j={j} out of range 0..{n // 2}")
    if class_rep.n != n:
        raise ValueError(f"degree mismatch: {class_rep.n} vs {n}")
    im = class_rep.images
    total = 0
    for tau in _enumerate(n, j):
        s = 1
        for a, b in tau.pairs:
            x, y = im[a - 1], im[b - 1]
            # tau is fixed iff every pair lands on a pair of tau
            if tau(x) != y:
                break
            if x > y:
                s = -s
        else:
            total += s
    return total


MINUS = "−"
_TERM_RE = re.compile(r"\s*([+\-−])?\s*(\d+)\s*[·*]\s*((?:\(\s*[\d\s,]*\))+)")


def format_vector(v: ModelVector) -> str:
    if not v.coefficients:
        return "0"
    terms = []
    for t, c in sorted(v.coefficients.items(), key=lambda tc: (tc[0].length, tc[0].pairs)):
        terms.append(f"{'+' if c > 0 else MINUS}{abs(c)}·{t}")
    return " ".join(terms)


def parse_vector(n: int, text: str) -> ModelVector:
    """Inverse of :func:`format_vector`; accepts ``-`` and ``*`` as ASCII stand-ins."""
    text = text.strip()
    if text == "0":
        return ModelVector(n)
    out: dict[Involution, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse model vector at {text[pos:]!r}")
        sgn = -1 if m.group(1) in ("-", MINUS) else 1
        tau = Involution.parse(n, m.group(3))
        out[tau] = out.get(tau, 0) + sgn * int(m.group(2))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return ModelVector(n, out)
