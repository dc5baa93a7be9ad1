"""Exact monomial, binomial and polynomial arithmetic over the integers.

Variables are x1..xe; a monomial is its exponent tuple.  Grading comes from a
semigroup (deg x_i = n_i).  Determinants are by cofactor expansion and the
Pfaffian is the explicit three-term formula for 4x4 matrices, which is all
the Gorenstein-structure checks need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .errors import ArityMismatch, NotSkew, NotSquare


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, arity: int) -> Monomial:
        return cls((0,) * arity)

    @classmethod
    def var(cls, i: int, arity: int, power: int = 1) -> Monomial:
        """x_{i+1}^power (``i`` is 0-based)."""
        exps = [0] * arity
        exps[i] = power
        return cls(tuple(exps))

    @property
    def arity(self) -> int:
        return len(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        """0-based indices of the variables dividing this monomial."""
        return frozenset(i for i, a in enumerate(self.exponents) if a)

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def is_pure_power(self) -> bool:
        return len(self.support) == 1

    def __mul__(self, other: Monomial) -> Monomial:
        _same_arity(self.arity, other.arity)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def permuted(self, perm: Sequence[int]) -> Monomial:
        """Rename variables: new variable k is old variable ``perm[k]``."""
        return Monomial(tuple(self.exponents[p] for p in perm))

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.exponents):
            if a == 1:
                parts.append(f"x{i + 1}")
            elif a > 1:
                parts.append(f"x{i + 1}^{a}")
        return "*".join(parts) if parts else "1"


def _same_arity(a: int, b: int) -> None:
    if a != b:
        raise ArityMismatch(f"arity {a} != {b}")


def weighted_degree(m: Monomial, weights: Any) -> int:
    """Sum of exponent_i * n_i; ``weights`` may be a semigroup or a sequence."""
    gens = getattr(weights, "generators", weights)
    _same_arity(m.arity, len(gens))
    return sum(a * n for a, n in zip(m.exponents, gens))


@dataclass(frozen=True)
class Binomial:
    """plus - minus, with coprime monomials and plus lexicographically larger."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self) -> None:
        _same_arity(self.plus.arity, self.minus.arity)
        if self.plus == self.minus:
            raise ValueError("a binomial needs two distinct monomials")
        if self.plus.support & self.minus.support:
            raise ValueError(f"monomials {self.plus} and {self.minus} share a variable")
        if self.plus.exponents < self.minus.exponents:
            raise ValueError("plus must be the lexicographically larger monomial")

    @classmethod
    def from_monomials(cls, u: Monomial, v: Monomial, weights: Any = None) -> Binomial:
        """Canonically oriented binomial through u and v.

        If ``weights`` is given the two weighted degrees must agree.
        """
        if weights is not None and weighted_degree(u, weights) != weighted_degree(v, weights):
            raise ValueError(f"{u} and {v} have different weighted degrees")
        return cls(u, v) if u.exponents > v.exponents else cls(v, u)

    def orientation(self, u: Monomial) -> int:
        """+1 if u - (other) equals this binomial, -1 if it equals its negative."""
        if u == self.plus:
            return 1
        if u == self.minus:
            return -1
        raise ValueError(f"{u} is not a term of {self}")

    @property
    def arity(self) -> int:
        return self.plus.arity

    def degree(self, weights: Any) -> int:
        return weighted_degree(self.plus, weights)

    def is_pure_power_difference(self) -> bool:
        return self.plus.is_pure_power() and self.minus.is_pure_power()

    def to_polynomial(self) -> Polynomial:
        return Polynomial({self.plus: 1, self.minus: -1})

    def __str__(self) -> str:
        return f"{self.plus} - {self.minus}"


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, arity: int | None = None):
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            if arity is None:
                arity = mono.arity
            _same_arity(arity, mono.arity)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        if arity is None:
            raise ValueError("arity required for the zero polynomial")
        self.arity = arity
        self._hash: int | None = None

    @classmethod
    def zero(cls, arity: int) -> Polynomial:
        return cls({}, arity)

    @classmethod
    def constant(cls, c: int, arity: int) -> Polynomial:
        return cls({Monomial.one(arity): c}, arity)

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> Polynomial:
        return cls({m: c}, m.arity)

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _coerce(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial.constant(other, self.arity)
        _same_arity(self.arity, other.arity)
        return other

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out, self.arity)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()}, self.arity)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out, self.arity)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        result = Polynomial.constant(1, self.arity)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.arity)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    def permuted(self, perm: Sequence[int]) -> Polynomial:
        return Polynomial({m.permuted(perm): c for m, c in self._terms.items()}, self.arity)

    def is_homogeneous(self, weights: Sequence[int]) -> bool:
        return len({weighted_degree(m, weights) for m in self._terms}) <= 1

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, m in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[m]
            body = str(m)
            if body == "1":
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            if i == 0:
                out.append(("-" if c < 0 else "") + text)
            else:
                out.append(("- " if c < 0 else "+ ") + text)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


@dataclass(frozen=True)
class SignedMonomial:
    """A matrix entry: +m, -m, or zero (sign 0, no monomial)."""

    sign: int
    monomial: Monomial | None = None

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"bad sign {self.sign}")
        if (self.sign == 0) != (self.monomial is None):
            raise ValueError("zero entries carry no monomial, nonzero entries need one")

    @classmethod
    def zero(cls) -> SignedMonomial:
        return cls(0, None)

    def __neg__(self) -> SignedMonomial:
        return SignedMonomial(-self.sign, self.monomial)

    def is_zero(self) -> bool:
        return self.sign == 0

    def to_polynomial(self, arity: int) -> Polynomial:
        if self.monomial is None:
            return Polynomial.zero(arity)
        return Polynomial.monomial(self.monomial, self.sign)

    def __str__(self) -> str:
        if self.monomial is None:
            return "0"
        return ("-" if self.sign < 0 else "") + str(self.monomial)


Matrix = Sequence[Sequence[Polynomial]]


def _check_square(M: Matrix) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise NotSquare(f"matrix with {n} rows is not square")
    return n


def check_skew(M: Matrix) -> None:
    n = _check_square(M)
    for i in range(n):
        if not M[i][i].is_zero():
            raise NotSkew(f"nonzero diagonal entry at ({i + 1},{i + 1})")
        for j in range(i + 1, n):
            if M[j][i] != -M[i][j]:
                raise NotSkew(f"m[{j + 1}][{i + 1}] != -m[{i + 1}][{j + 1}]")


def pfaffian4(M: Matrix) -> Polynomial:
    """m12*m34 - m13*m24 + m14*m23 for a 4x4 skew-symmetric matrix."""
    if len(M) != 4:
        raise NotSquare("pfaffian4 needs a 4x4 matrix")
    check_skew(M)
    return M[0][1] * M[2][3] - M[0][2] * M[1][3] + M[0][3] * M[1][2]


def det(M: Matrix, arity: int | None = None) -> Polynomial:
    """Exact determinant by cofactor expansion along the first row (n <= 7)."""
    n = _check_square(M)
    if n > 7:
        raise ValueError("cofactor expansion is limited to n <= 7")
    if n == 0:
        if arity is None:
            raise ValueError("arity required for the empty matrix")
        return Polynomial.constant(1, arity)
    arity = M[0][0].arity
    return _det(M, list(range(n)), arity)


def _det(M: Matrix, cols: list[int], arity: int) -> Polynomial:
    row = len(M) - len(cols)
    if len(cols) == 1:
        return M[row][cols[0]]
    total = Polynomial.zero(arity)
    for k, c in enumerate(cols):
        entry = M[row][c]
        if entry.is_zero():
            continue
        minor = _det(M, cols[:k] + cols[k + 1:], arity)
        total = total + entry * minor if k % 2 == 0 else total - entry * minor
    return total


def principal_minor(M: Matrix, i: int) -> list[list[Polynomial]]:
    """Delete row and column ``i`` (0-based)."""
    return [[x for c, x in enumerate(row) if c != i] for r, row in enumerate(M) if r != i]


def pfaffian(M: Matrix) -> Polynomial:
    """Pfaffian of an even skew-symmetric matrix by expansion along row 1.

    Used only as a cross-check of :func:`pfaffian4`.
    """
    n = _check_square(M)
    check_skew(M)
    if n % 2:
        raise ValueError("odd-order skew matrices have zero Pfaffian; refusing")
    if n == 0:
        raise ValueError("arity required for the empty matrix")
    arity = M[0][0].arity
    return _pf(M, list(range(n)), arity)


def _pf(M: Matrix, idx: list[int], arity: int) -> Polynomial:
    if not idx:
        return Polynomial.constant(1, arity)
    first, rest = idx[0], idx[1:]
    total = Polynomial.zero(arity)
    for k, j in enumerate(rest):
        if M[first][j].is_zero():
            continue
        term = M[first][j] * _pf(M, rest[:k] + rest[k + 1:], arity)
        total = total + term if k % 2 == 0 else total - term
    return total
