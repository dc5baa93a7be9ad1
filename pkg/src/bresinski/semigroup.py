"""Numerical semigroups: membership, Apery sets, Frobenius number, gaps, symmetry.

Membership is answered from the Apery table of the smallest generator, which
is computed once per semigroup by a shortest-path relaxation on Z/m.  The
trivial semigroup <1> (all nonnegative integers) is allowed: its Frobenius
number is -1 and it is symmetric vacuously.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import EmptyInput, InconsistentSymmetry, NonCoprime, NotInSemigroup, ZeroGenerator


@dataclass(frozen=True)
class AperySet:
    modulus: int
    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, r: int) -> int:
        return self.entries[r]


@dataclass(frozen=True)
class GapProfile:
    frobenius: int
    gaps: tuple[int, ...]
    pseudo_frobenius: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.gaps)


def _apery_entries(generators: Sequence[int], m: int) -> tuple[int, ...]:
    # Dijkstra on residues mod m; arc r -> (r + n) % m has weight n.
    dist = [-1] * m
    best = {0: 0}
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] >= 0:
            continue
        dist[r] = d
        for n in generators:
            s = (r + n) % m
            if dist[s] < 0 and (s not in best or d + n < best[s]):
                best[s] = d + n
                heapq.heappush(heap, (d + n, s))
    return tuple(dist)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generating system.

    Build instances with :func:`make_semigroup`, which removes redundant
    generators; the constructor itself only validates.
    """

    generators: tuple[int, ...]
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        gens = self.generators
        if not gens:
            raise EmptyInput("a semigroup needs at least one generator")
        if any(n <= 0 for n in gens):
            raise ZeroGenerator(f"generators must be positive: {gens}")
        if any(a >= b for a, b in zip(gens, gens[1:])):
            raise ValueError(f"generators must be strictly increasing: {gens}")
        if reduce(math.gcd, gens) != 1:
            raise NonCoprime(f"gcd{gens} = {reduce(math.gcd, gens)}")
        if not self._checked and _minimal_system(gens) != gens:
            raise ValueError(f"{gens} is not a minimal generating system")

    @property
    def embedding_dim(self) -> int:
        return len(self.generators)

    @property
    def total_weight(self) -> int:
        return sum(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @cached_property
    def _apery(self) -> tuple[int, ...]:
        return _apery_entries(self.generators, self.generators[0])

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def _minimal_system(values: Iterable[int]) -> tuple[int, ...]:
    """Drop every value that is a sum of smaller kept values."""
    vals = sorted(set(values))
    if not vals:
        return ()
    top = vals[-1]
    reachable = bytearray(top + 1)
    reachable[0] = 1
    kept: list[int] = []
    for v in vals:
        if reachable[v]:
            continue
        kept.append(v)
        for x in range(v, top + 1):
            if reachable[x - v]:
                reachable[x] = 1
    return tuple(kept)


def make_semigroup(raw: Iterable[int]) -> NumericalSemigroup:
    """Normalize a raw generator list into a :class:`NumericalSemigroup`.

    >>> make_semigroup([2, 4, 3]).generators
    (2, 3)
    """
    vals = [int(v) for v in raw]
    if not vals:
        raise EmptyInput("empty generator list")
    if any(v == 0 for v in vals):
        raise ZeroGenerator("0 is not allowed as a generator")
    if any(v < 0 for v in vals):
        raise ZeroGenerator(f"generators must be positive: {vals}")
    g = reduce(math.gcd, vals)
    if g != 1:
        raise NonCoprime(f"gcd of {vals} is {g}")
    return NumericalSemigroup(_minimal_system(vals), _checked=True)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse the text format ``"5,6,7,8"`` (whitespace tolerant)."""
    parts = [p.strip() for p in text.strip().split(",")]
    if not parts or parts == [""]:
        raise EmptyInput("empty generator list")
    try:
        vals = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"cannot parse generator list {text!r}") from exc
    return make_semigroup(vals)


def contains(H: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    ap = H._apery
    return n >= ap[n % len(ap)]


def apery_set(H: NumericalSemigroup, m: int | None = None) -> AperySet:
    if m is None or m == H.multiplicity:
        m = H.multiplicity
        return AperySet(m, H._apery)
    if m <= 0 or not contains(H, m):
        raise NotInSemigroup(f"{m} is not a positive element of {H}")
    return AperySet(m, _apery_entries(H.generators, m))


def frobenius(H: NumericalSemigroup) -> int:
    return max(H._apery) - H.multiplicity


def gap_profile(H: NumericalSemigroup) -> GapProfile:
    fr = frobenius(H)
    gaps = tuple(n for n in range(1, fr + 1) if not contains(H, n))
    if fr < 0:
        # Trivial semigroup: -1 is the only integer x with x + H_+ inside H.
        return GapProfile(fr, (), (-1,))
    pf = tuple(x for x in gaps if all(contains(H, x + n) for n in H.generators))
    return GapProfile(fr, gaps, pf)


def symmetry_tests(H: NumericalSemigroup) -> dict[str, bool]:
    """Four independent characterisations of symmetry."""
    fr = frobenius(H)
    prof = gap_profile(H)
    ap = sorted(H._apery)
    m = H.multiplicity
    return {
        "mirror": all(contains(H, n) != contains(H, fr - n) for n in range(0, fr + 1)),
        "genus": 2 * prof.genus == fr + 1,
        "pseudo_frobenius": prof.pseudo_frobenius == (fr,),
        "apery_pairing": all(ap[i] + ap[m - 1 - i] == fr + m for i in range(m)),
    }


def is_symmetric(H: NumericalSemigroup) -> bool:
    tests = symmetry_tests(H)
    verdicts = set(tests.values())
    if len(verdicts) != 1:
        raise InconsistentSymmetry(f"symmetry tests disagree on {H}: {tests}")
    return verdicts.pop()


def geq_h(H: NumericalSemigroup, a: int, b: int) -> bool:
    """The order a >=_H b, i.e. a - b lies in H."""
    return contains(H, a - b)
