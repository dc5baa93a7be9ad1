"""Pfaffian structure of symmetric, non-complete-intersection <n1,n2,n3,n4>.

For such semigroups I_H has five minimal generators: four pure-power-led
binomials f_p = x_p^alpha_p - q_p and one mixed binomial f_5 = q_5 - q_6.
After renaming variables the q's follow a fixed support pattern and the
relation matrix is the 5x5 skew-symmetric matrix

    [  0        -x3^a43   0        -x2^a32   -x4^a24 ]
    [  x3^a43    0        x4^a14   0         -x1^a31 ]
    [  0        -x4^a14   0        -x1^a21   -x2^a42 ]
    [  x2^a32    0        x1^a21   0         -x3^a13 ]
    [  x4^a24    x1^a31   x2^a42   x3^a13    0       ]

whose 4x4 principal Pfaffians give back the f_i (up to sign).  This module
rebuilds that matrix for a given semigroup and checks every structural
property of it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any

from .algebra import Monomial, Polynomial, SignedMonomial, det, pfaffian4, principal_minor, weighted_degree
from .errors import FrameImpossible, NoTemplateMatch, NotSkew, NotSymmetric, PreconditionError
from .semigroup import NumericalSemigroup, contains, frobenius, is_symmetric
from .toric import BettiElement, alpha_data, betti_elements, pure_power_differences

SCHEMA_VERSION = 1

# 0-based supports of q_1..q_4 in the template: {x3,x4}, {x1,x4}, {x1,x2}, {x2,x3}.
TEMPLATE_SUPPORTS = (frozenset({2, 3}), frozenset({0, 3}), frozenset({0, 1}), frozenset({1, 2}))


class FrameOutcome(enum.Enum):
    COMPLETE_INTERSECTION = "complete_intersection"
    PURE_POWER_PAIR = "pure_power_pair"


@dataclass(frozen=True)
class FrameEntry:
    """One generator written as lead - tail."""

    lead: Monomial
    tail: Monomial
    degree: int

    @property
    def poly(self) -> Polynomial:
        return Polynomial({self.lead: 1, self.tail: -1})

    def permuted(self, perm: tuple[int, ...]) -> FrameEntry:
        return FrameEntry(self.lead.permuted(perm), self.tail.permuted(perm), self.degree)

    def __str__(self) -> str:
        return f"{self.lead} - {self.tail}"


@dataclass(frozen=True)
class GeneratorFrame:
    """f_1..f_4 pure-power-led (f_p leads with x_p^alpha_p), f_5 mixed."""

    weights: tuple[int, ...]
    alphas: tuple[int, ...]
    entries: tuple[FrameEntry, ...]

    @property
    def q_monomials(self) -> tuple[Monomial, ...]:
        """q_1..q_4 followed by the two monomials of f_5."""
        f5 = self.entries[4]
        return tuple(e.tail for e in self.entries[:4]) + (f5.lead, f5.tail)


@dataclass(frozen=True)
class TemplateData:
    """A frame renamed into template position plus the eight exponents.

    ``permutation[k]`` is the 0-based original variable that becomes x_{k+1}.
    ``exponents`` is keyed by the two-digit labels "13", "14", ... so that
    exponents["13"] is the exponent of x3 in q_1.
    """

    permutation: tuple[int, ...]
    weights: tuple[int, ...]
    alphas: tuple[int, ...]
    exponents: dict[str, int]
    frame: GeneratorFrame
    frobenius: int

    @property
    def printed_alpha1_relation(self) -> bool:
        """Whether alpha_1 = a24 + a21 also holds (only a31 + a21 is forced)."""
        return self.alphas[0] == self.exponents["24"] + self.exponents["21"]


@dataclass(frozen=True)
class SkewMatrix5:
    entries: tuple[tuple[SignedMonomial, ...], ...]
    weights: tuple[int, ...]
    f_degrees: tuple[int, ...]
    e_degrees: tuple[int, ...]

    def polynomial_matrix(self) -> list[list[Polynomial]]:
        return [[m.to_polynomial(4) for m in row] for row in self.entries]

    def nonzero_count(self) -> int:
        return sum(not m.is_zero() for row in self.entries for m in row)

    def rows_as_text(self) -> list[list[str]]:
        return [[str(m) for m in row] for row in self.entries]


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    witness: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"pass": self.passed, "witness": self.witness}


@dataclass
class StructureReport:
    generators: tuple[int, ...]
    frobenius: int
    symmetric: bool
    mu: int | None = None
    classification: str = "not_symmetric"
    frame: list[str] = field(default_factory=list)
    permutation: list[int] | None = None
    template_weights: list[int] | None = None
    matrix: list[list[str]] | None = None
    pfaffian_signs: list[int] | None = None
    f_degrees: list[int] | None = None
    e_degrees: list[int] | None = None
    printed_alpha1_relation: bool | None = None
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[tuple[str, str | None]]:
        return [(name, c.witness) for name, c in self.checks.items() if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "generators": list(self.generators),
            "frobenius": self.frobenius,
            "symmetric": self.symmetric,
            "mu": self.mu,
            "classification": self.classification,
            "frame": self.frame,
            "permutation": self.permutation,
            "template_generators": self.template_weights,
            "matrix": self.matrix,
            "pfaffian_signs": self.pfaffian_signs,
            "degrees": {"f": self.f_degrees, "e": self.e_degrees},
            "printed_alpha1_relation": self.printed_alpha1_relation,
            "checks": {name: c.to_dict() for name, c in self.checks.items()},
        }


def _require_four(H: NumericalSemigroup) -> None:
    if H.embedding_dim != 4:
        raise PreconditionError(f"{H} has embedding dimension {H.embedding_dim}, expected 4")


def canonical_frame(
    H: NumericalSemigroup, betti: tuple[BettiElement, ...] | None = None
) -> GeneratorFrame | FrameOutcome:
    """Order the minimal generators as f_1..f_4 (pure-power-led) and f_5.

    Returns a :class:`FrameOutcome` instead when H is a complete intersection
    or when I_H has a minimal generator x_p^a - x_q^b.
    """
    _require_four(H)
    if not is_symmetric(H):
        raise NotSymmetric(f"{H} is not symmetric")
    if betti is None:
        betti = betti_elements(H)
    mu = sum(b.multiplicity for b in betti)
    if mu == 3:
        return FrameOutcome.COMPLETE_INTERSECTION
    if pure_power_differences(H, betti):
        return FrameOutcome.PURE_POWER_PAIR
    if mu != 5:
        raise FrameImpossible(f"{H}: mu = {mu}, expected 3 or 5")

    by_degree = {b.degree: b for b in betti}
    alphas = alpha_data(H).alphas
    used: set[tuple[int, int]] = set()
    entries = []
    for p, (alpha, n) in enumerate(zip(alphas, H.generators)):
        d = alpha * n
        pure = Monomial.var(p, 4, alpha)
        b = by_degree.get(d)
        if b is None:
            raise FrameImpossible(f"{H}: degree {d} of x{p + 1}^{alpha} is not a Betti element")
        k = next((k for k, comp in enumerate(b.components) if pure.exponents in comp), None)
        if k is None:
            raise FrameImpossible(f"{H}: x{p + 1}^{alpha} missing from its fiber")
        # Star generators pair the root component 0 with every other one.
        other = 0 if k != 0 else 1
        used.add((d, max(k, other)))
        entries.append(FrameEntry(pure, Monomial(b.components[other][0]), d))

    rest = [(b.degree, k) for b in betti for k in range(1, len(b.components)) if (b.degree, k) not in used]
    if len(rest) != 1:
        raise FrameImpossible(f"{H}: {len(rest)} generators left after the pure-power ones")
    d, k = rest[0]
    b = by_degree[d]
    u, v = Monomial(b.components[0][0]), Monomial(b.components[k][0])
    lead, tail = (u, v) if u.exponents > v.exponents else (v, u)
    entries.append(FrameEntry(lead, tail, d))
    return GeneratorFrame(H.generators, alphas, tuple(entries))


def _rename(frame: GeneratorFrame, perm: tuple[int, ...]) -> GeneratorFrame:
    """New variable k is old variable perm[k]; f_k follows its lead variable."""
    weights = tuple(frame.weights[p] for p in perm)
    alphas = tuple(frame.alphas[p] for p in perm)
    entries = [frame.entries[p].permuted(perm) for p in perm]
    f5 = frame.entries[4].permuted(perm)
    # Orient f_5 = q_5 - q_6 with x1 dividing q_5.
    if f5.lead.exponents[0] == 0:
        f5 = FrameEntry(f5.tail, f5.lead, f5.degree)
    entries.append(f5)
    return GeneratorFrame(weights, alphas, tuple(entries))


def normalize_to_template(frame: GeneratorFrame, frobenius_number: int | None = None) -> TemplateData:
    """Find the first variable permutation putting ``frame`` in template form."""
    supports = [e.tail.support for e in frame.entries[:4]]
    for perm in permutations(range(4)):
        renamed = _rename(frame, perm)
        q = [e.tail for e in renamed.entries[:4]]
        if [m.support for m in q] != list(TEMPLATE_SUPPORTS):
            continue
        x = {
            f"{i + 1}{j + 1}": q[i].exponents[j]
            for i in range(4)
            for j in range(4)
            if j in TEMPLATE_SUPPORTS[i]
        }
        a = renamed.alphas
        if (
            a[0] == x["31"] + x["21"]
            and a[1] == x["32"] + x["42"]
            and a[2] == x["13"] + x["43"]
            and a[3] == x["24"] + x["14"]
        ):
            if frobenius_number is None:
                frobenius_number = frobenius(NumericalSemigroup(tuple(sorted(frame.weights))))
            return TemplateData(perm, renamed.weights, a, x, renamed, frobenius_number)
    pretty = ", ".join("{" + ",".join(f"x{i + 1}" for i in sorted(s)) + "}" for s in supports)
    raise NoTemplateMatch(f"no permutation matches; supports of q_1..q_4 are {pretty}")


def build_matrix(template: TemplateData) -> SkewMatrix5:
    x = template.exponents

    def v(i: int, a: int, sign: int = 1) -> SignedMonomial:
        return SignedMonomial(sign, Monomial.var(i - 1, 4, a))

    z = SignedMonomial.zero()
    upper = {
        (0, 1): v(3, x["43"], -1),
        (0, 2): z,
        (0, 3): v(2, x["32"], -1),
        (0, 4): v(4, x["24"], -1),
        (1, 2): v(4, x["14"]),
        (1, 3): z,
        (1, 4): v(1, x["31"], -1),
        (2, 3): v(1, x["21"], -1),
        (2, 4): v(2, x["42"], -1),
        (3, 4): v(3, x["13"], -1),
    }
    rows = [[z] * 5 for _ in range(5)]
    for (i, j), m in upper.items():
        rows[i][j] = m
        rows[j][i] = -m
    f_deg = tuple(e.degree for e in template.frame.entries)
    total = template.frobenius + sum(template.weights)
    e_deg = tuple(total - d for d in f_deg)
    return SkewMatrix5(tuple(tuple(r) for r in rows), template.weights, f_deg, e_deg)


def pfaffian_complement(M: SkewMatrix5, i: int, f: Polynomial | None = None) -> tuple[Polynomial, int | None]:
    """Pf(M(i)) for 1-based ``i``; the sign s with Pf(M(i)) = s*f when f is given."""
    pf = pfaffian4(principal_minor(M.polynomial_matrix(), i - 1))
    sign = None
    if f is not None:
        if pf == f:
            sign = 1
        elif pf == -f:
            sign = -1
    return pf, sign


def check_pure_power_corollary(H: NumericalSemigroup, betti: tuple[BettiElement, ...] | None = None) -> bool:
    """(some minimal generator is x_p^a - x_q^b) implies H is a complete intersection."""
    _require_four(H)
    if betti is None:
        betti = betti_elements(H)
    if not pure_power_differences(H, betti):
        return True
    return sum(b.multiplicity for b in betti) == H.embedding_dim - 1


def _matrix_checks(template: TemplateData, M: SkewMatrix5, report: StructureReport) -> None:
    checks = report.checks
    P = M.polynomial_matrix()
    f = [e.poly for e in template.frame.entries]
    weights = template.weights

    skew_bad = [
        (i + 1, j + 1) for i in range(5) for j in range(5) if P[j][i] != -P[i][j] or (i == j and P[i][i])
    ]
    checks["skew_symmetric"] = CheckResult(not skew_bad, f"asymmetric at {skew_bad[0]}" if skew_bad else None)

    expected_zero = {(0, 2), (2, 0), (1, 3), (3, 1)} | {(i, i) for i in range(5)}
    zero_bad = []
    for i in range(5):
        for j in range(5):
            m = M.entries[i][j]
            if (i, j) in expected_zero:
                if not m.is_zero():
                    zero_bad.append(f"m{i + 1}{j + 1}={m} should be 0")
            elif m.is_zero() or m.monomial is None or not m.monomial.is_pure_power():
                zero_bad.append(f"m{i + 1}{j + 1}={m} is not a pure power")
    if M.nonzero_count() != 16:
        zero_bad.append(f"{M.nonzero_count()} nonzero entries")
    checks["zero_pattern"] = CheckResult(not zero_bad, zero_bad[0] if zero_bad else None)

    signs, pf_bad, det_bad = [], [], []
    for i in range(1, 6):
        try:
            pf, s = pfaffian_complement(M, i, f[i - 1])
        except NotSkew as exc:
            pf, s = None, None
            pf_bad.append(f"M({i}) is not skew: {exc}")
        signs.append(s if s is not None else 0)
        if pf is not None and s is None:
            pf_bad.append(f"Pf(M({i})) = {pf}, f{i} = {f[i - 1]}")
        d = det(principal_minor(P, i - 1))
        if d != f[i - 1] * f[i - 1]:
            det_bad.append(f"Det(M({i})) = {d} != ({f[i - 1]})^2")
    report.pfaffian_signs = signs
    checks["pfaffians"] = CheckResult(not pf_bad, pf_bad[0] if pf_bad else None)
    checks["determinants"] = CheckResult(not det_bad, det_bad[0] if det_bad else None)

    row_bad = []
    for i in range(5):
        s = Polynomial.zero(4)
        for j in range(5):
            s = s + P[i][j] * f[j]
        if s:
            row_bad.append(f"row {i + 1}: sum m_ij f_j = {s}")
    checks["row_relations"] = CheckResult(not row_bad, row_bad[0] if row_bad else None)

    qs = template.frame.q_monomials
    sups = [q.support for q in qs]
    sup_bad = None
    if any(len(s) != 2 for s in sups):
        sup_bad = "some q has a support of size != 2: " + ", ".join(map(str, qs))
    elif len(set(sups)) != 6:
        sup_bad = "q supports repeat: " + ", ".join(map(str, qs))
    checks["q_supports"] = CheckResult(sup_bad is None, sup_bad)

    H = NumericalSemigroup(tuple(sorted(weights)))
    total = template.frobenius + sum(weights)
    deg_bad = []
    for i in range(5):
        realized = {
            weighted_degree(M.entries[i][j].monomial, weights) + M.f_degrees[j]
            for j in range(5)
            if M.entries[i][j].monomial is not None
        }
        # The row relation is homogeneous of degree deg e_i.
        if len(realized) != 1:
            deg_bad.append(f"row {i + 1} is not homogeneous: degrees {sorted(realized)}")
        elif M.f_degrees[i] + min(realized) != total:
            deg_bad.append(f"deg f{i + 1} + deg e{i + 1} = {M.f_degrees[i] + min(realized)} != Fr + N = {total}")
        for j in range(5):
            if not M.entries[i][j].is_zero() and not contains(H, M.e_degrees[i] - M.f_degrees[j]):
                deg_bad.append(f"deg e{i + 1} - deg f{j + 1} not in H")
    checks["degrees"] = CheckResult(not deg_bad, deg_bad[0] if deg_bad else None)


def verify_structure(H: NumericalSemigroup) -> StructureReport:
    """Run the whole pipeline on a 4-generated semigroup and collect checks."""
    _require_four(H)
    fr = frobenius(H)
    sym = is_symmetric(H)
    report = StructureReport(H.generators, fr, sym)
    if not sym:
        return report

    betti = betti_elements(H)
    mu = sum(b.multiplicity for b in betti)
    report.mu = mu
    checks = report.checks
    checks["mu_3_or_5"] = CheckResult(mu in (3, 5), None if mu in (3, 5) else f"mu = {mu}")
    checks["mu_odd"] = CheckResult(mu % 2 == 1, None if mu % 2 else f"mu = {mu}")
    corollary = check_pure_power_corollary(H, betti)
    checks["pure_power_corollary"] = CheckResult(
        corollary, None if corollary else "pure-power difference generator in a non-CI ideal"
    )
    if mu == 3:
        report.classification = "complete_intersection"
        return report
    report.classification = "anomalous"
    if mu != 5:
        return report

    try:
        frame = canonical_frame(H, betti)
    except FrameImpossible as exc:
        checks["frame"] = CheckResult(False, str(exc))
        return report
    if isinstance(frame, FrameOutcome):
        checks["frame"] = CheckResult(False, f"frame outcome {frame.value} with mu = 5")
        return report
    report.frame = [str(e) for e in frame.entries]
    f5 = frame.entries[4]
    mixed = len(f5.lead.support) == 2 and len(f5.tail.support) == 2
    checks["frame"] = CheckResult(mixed, None if mixed else f"f5 = {f5} is not of the form xi^a*xj^b - xk^c*xl^d")

    try:
        template = normalize_to_template(frame, fr)
    except NoTemplateMatch as exc:
        checks["template"] = CheckResult(False, str(exc))
        return report
    checks["template"] = CheckResult(True)
    report.permutation = [p + 1 for p in template.permutation]
    report.template_weights = list(template.weights)
    report.printed_alpha1_relation = template.printed_alpha1_relation

    M = build_matrix(template)
    report.matrix = M.rows_as_text()
    report.f_degrees = list(M.f_degrees)
    report.e_degrees = list(M.e_degrees)
    _matrix_checks(template, M, report)
    if report.ok:
        report.classification = "pfaffian_5"
    return report
