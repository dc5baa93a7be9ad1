"""Minimal binomial generators of the toric ideal I_H via factorization fibers.

A degree d is a Betti element when the graph on its factorizations, with an
edge between two factorizations whose supports meet, is disconnected.  Each
Betti element with c components contributes c - 1 minimal generators, so
mu(I_H) is a purely combinatorial count and does not depend on the field.

Only degrees d <= Fr(H) + n_{e-1} + n_e need scanning: if d exceeds
Fr(H) + n_i + n_j, two factorizations supported on x_i and x_j are bridged by
x_i x_j times any factorization of d - n_i - n_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .algebra import Binomial, Monomial
from .errors import PreconditionError
from .semigroup import NumericalSemigroup, apery_set, contains, frobenius

Factorization = tuple[int, ...]


@dataclass(frozen=True)
class FactorizationFiber:
    degree: int
    factorizations: tuple[Factorization, ...]

    def __len__(self) -> int:
        return len(self.factorizations)


@dataclass(frozen=True)
class BettiElement:
    degree: int
    components: tuple[tuple[Factorization, ...], ...]

    @property
    def multiplicity(self) -> int:
        return len(self.components) - 1


@dataclass(frozen=True)
class MinimalGeneratingSet:
    binomials: tuple[Binomial, ...]
    degrees: tuple[int, ...]

    @property
    def mu(self) -> int:
        return len(self.binomials)

    @property
    def by_degree(self) -> dict[int, tuple[Binomial, ...]]:
        out: dict[int, list[Binomial]] = {}
        for d, b in zip(self.degrees, self.binomials):
            out.setdefault(d, []).append(b)
        return {d: tuple(bs) for d, bs in out.items()}


@dataclass(frozen=True)
class AlphaData:
    """Minimal pure-power exponents and one representation for each of them.

    ``alphas[i] * n_i == sum(representations[i][j] * n_j)`` with
    ``representations[i][i] == 0``.
    """

    alphas: tuple[int, ...]
    representations: tuple[Factorization, ...]


class UnionFind:
    """Disjoint sets over 0..n-1 with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def _enumerate(gens: tuple[int, ...], d: int) -> Iterator[Factorization]:
    e = len(gens)
    exps = [0] * e

    def rec(k: int, rest: int) -> Iterator[Factorization]:
        n = gens[k]
        if k == 0:
            if rest % n == 0:
                exps[0] = rest // n
                yield tuple(exps)
            return
        for a in range(rest // n + 1):
            exps[k] = a
            yield from rec(k - 1, rest - a * n)
        exps[k] = 0

    yield from rec(e - 1, d)


def factorizations(H: NumericalSemigroup, d: int) -> FactorizationFiber:
    """All nonnegative a with sum a_i n_i = d, in lexicographic order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if not contains(H, d):
        return FactorizationFiber(d, ())
    return FactorizationFiber(d, tuple(sorted(_enumerate(H.generators, d))))


def fiber_components(fiber: FactorizationFiber) -> tuple[tuple[Factorization, ...], ...]:
    """Connected components under 'supports intersect'.

    Each component is sorted, and components are ordered by their smallest
    member, so the first component holds the global lexicographic minimum.
    """
    facts = fiber.factorizations
    if not facts:
        return ()
    uf = UnionFind(len(facts))
    for i in range(len(facts[0])):
        holders = [k for k, a in enumerate(facts) if a[i]]
        for k in holders[1:]:
            uf.union(holders[0], k)
    comps = [tuple(sorted(facts[k] for k in g)) for g in uf.groups()]
    return tuple(sorted(comps))


def scan_bound(H: NumericalSemigroup) -> int:
    """Largest degree that can be a Betti element: Fr + n_{e-1} + n_e."""
    g = H.generators
    if len(g) < 2:
        return -1
    return frobenius(H) + g[-2] + g[-1]


def betti_at(H: NumericalSemigroup, d: int) -> BettiElement | None:
    comps = fiber_components(factorizations(H, d))
    if len(comps) < 2:
        return None
    return BettiElement(d, comps)


def candidate_degrees(H: NumericalSemigroup) -> tuple[int, ...]:
    """{w + n_i : w in Ap(H, n_1)}, a superset of the Betti elements."""
    ap = apery_set(H)
    return tuple(sorted({w + n for w in ap.entries for n in H.generators}))


def betti_elements(
    H: NumericalSemigroup,
    method: Literal["full", "candidates"] = "full",
) -> tuple[BettiElement, ...]:
    """Betti elements in increasing degree order.

    ``method="full"`` scans every degree up to :func:`scan_bound`;
    ``"candidates"`` only inspects :func:`candidate_degrees`.
    """
    if method == "full":
        degrees: range | tuple[int, ...] = range(1, scan_bound(H) + 1)
    elif method == "candidates":
        degrees = candidate_degrees(H) if H.embedding_dim > 1 else ()
    else:
        raise ValueError(f"unknown method {method!r}")
    out = []
    for d in degrees:
        b = betti_at(H, d)
        if b is not None:
            out.append(b)
    return tuple(out)


def minimal_generating_set(
    H: NumericalSemigroup, betti: tuple[BettiElement, ...] | None = None
) -> MinimalGeneratingSet:
    """One binomial per extra fiber component, star-rooted at the lex-min component.

    The representative of a component is its lexicographically smallest
    factorization.
    """
    if betti is None:
        betti = betti_elements(H)
    binomials, degrees = [], []
    for b in betti:
        root = Monomial(b.components[0][0])
        for comp in b.components[1:]:
            binomials.append(Binomial.from_monomials(root, Monomial(comp[0]), H))
            degrees.append(b.degree)
    return MinimalGeneratingSet(tuple(binomials), tuple(degrees))


def mu(H: NumericalSemigroup) -> int:
    return sum(b.multiplicity for b in betti_elements(H))


def alpha_data(H: NumericalSemigroup) -> AlphaData:
    gens = H.generators
    if len(gens) < 2:
        raise PreconditionError("alpha data needs at least two generators")
    alphas, reps = [], []
    for i, n in enumerate(gens):
        alpha = 1
        while True:
            free = [a for a in factorizations(H, alpha * n).factorizations if a[i] == 0]
            if free:
                alphas.append(alpha)
                reps.append(free[0])
                break
            alpha += 1
    return AlphaData(tuple(alphas), tuple(reps))


def is_complete_intersection(H: NumericalSemigroup) -> bool:
    return mu(H) == H.embedding_dim - 1


def pure_power_differences(
    H: NumericalSemigroup, betti: tuple[BettiElement, ...] | None = None
) -> tuple[Binomial, ...]:
    """Binomials x_p^a - x_q^b that occur in some minimal generating set.

    These exist exactly when a Betti element has two fiber components that
    each contain a pure power.
    """
    if betti is None:
        betti = betti_elements(H)
    out = []
    for b in betti:
        pures = []
        for comp in b.components:
            pure = [a for a in comp if sum(1 for x in a if x) == 1]
            if pure:
                pures.append(Monomial(pure[0]))
        for k, u in enumerate(pures):
            for v in pures[k + 1:]:
                out.append(Binomial.from_monomials(u, v, H))
    return tuple(out)
