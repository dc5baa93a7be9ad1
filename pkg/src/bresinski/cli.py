"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from .corpus import CorpusSpec, verify_corpus
from .errors import PreconditionError, SemigroupError
from .semigroup import NumericalSemigroup, apery_set, gap_profile, is_symmetric, parse_semigroup
from .structure import SCHEMA_VERSION, verify_structure
from .toric import alpha_data, betti_elements, minimal_generating_set

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def info_report(H: NumericalSemigroup) -> dict[str, Any]:
    prof = gap_profile(H)
    return {
        "schema": SCHEMA_VERSION,
        "generators": list(H.generators),
        "frobenius": prof.frobenius,
        "gaps": list(prof.gaps),
        "genus": prof.genus,
        "pseudo_frobenius": list(prof.pseudo_frobenius),
        "apery": {"modulus": H.multiplicity, "entries": list(apery_set(H).entries)},
        "symmetric": is_symmetric(H),
    }


def ideal_report(H: NumericalSemigroup) -> dict[str, Any]:
    betti = betti_elements(H)
    gens = minimal_generating_set(H, betti)
    out: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "generators": list(H.generators),
        "mu": gens.mu,
        "betti": [b.degree for b in betti],
        "betti_elements": [
            {"degree": b.degree, "multiplicity": b.multiplicity, "components": [list(map(list, c)) for c in b.components]}
            for b in betti
        ],
        "binomials": [str(b) for b in gens.binomials],
        "complete_intersection": gens.mu == H.embedding_dim - 1,
    }
    if H.embedding_dim > 1:
        alpha = alpha_data(H)
        out["alpha"] = {"alphas": list(alpha.alphas), "representations": [list(r) for r in alpha.representations]}
    return out


def _text(report: dict[str, Any]) -> str:
    lines = []
    for key, value in report.items():
        if key == "schema":
            continue
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {json.dumps(v)}" for k, v in value.items())
        else:
            lines.append(f"{key}: {json.dumps(value) if not isinstance(value, str) else value}")
    return "\n".join(lines)


def _emit(reports: list[dict[str, Any]], as_json: bool) -> None:
    if as_json:
        payload: Any = reports[0] if len(reports) == 1 else reports
        print(json.dumps(payload, indent=2))
    else:
        print("\n\n".join(_text(r) for r in reports))


def _load(args: argparse.Namespace) -> list[NumericalSemigroup]:
    texts: list[str] = []
    if args.generators:
        texts.append(args.generators)
    if args.file:
        for line in Path(args.file).read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                texts.append(line)
    if not texts:
        raise SemigroupError("give a generator list or --file")
    return [parse_semigroup(t) for t in texts]


def cmd_info(args: argparse.Namespace) -> int:
    _emit([info_report(H) for H in _load(args)], args.json)
    return EXIT_OK


def cmd_ideal(args: argparse.Namespace) -> int:
    _emit([ideal_report(H) for H in _load(args)], args.json)
    return EXIT_OK


def cmd_structure(args: argparse.Namespace) -> int:
    reports = [verify_structure(H) for H in _load(args)]
    _emit([r.to_dict() for r in reports], args.json)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    spec = CorpusSpec(args.max_gen, args.max_frobenius, args.jobs, args.oracle)
    report = verify_corpus(spec)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(_text(report.to_dict()))
        print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.holds else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bresinski",
        description="Invariants, toric ideals and Pfaffian structure of 4-generated numerical semigroups.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in [
        ("info", cmd_info, "Frobenius number, gaps, Apery set, symmetry"),
        ("ideal", cmd_ideal, "Betti elements, minimal binomial generators, alpha data"),
        ("structure", cmd_structure, "full Pfaffian structure report"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("generators", nargs="?", help='comma-separated generators, e.g. "5,6,7,8"')
        p.add_argument("--file", help="file with one generator list per line")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="sweep every 4-generated semigroup up to a bound")
    p.add_argument("--max-gen", type=int, required=True)
    p.add_argument("--max-frobenius", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle", action="store_true", help="also run the linear-algebra and candidate-scan cross-checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (SemigroupError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
