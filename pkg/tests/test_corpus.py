import json
import math
from itertools import combinations

import pytest

from bresinski.corpus import CorpusSpec, check_member, enumerate_semigroups, oracle_failures, verify_corpus
from bresinski.semigroup import make_semigroup
from oracles import brute_contains, brute_frobenius


def test_enumeration_is_exhaustive_and_minimal():
    spec = CorpusSpec(max_generator=12)
    got = [H.generators for H in enumerate_semigroups(spec)]
    expected = []
    for q in combinations(range(1, 13), 4):
        if math.gcd(*q) != 1:
            continue
        if all(not brute_contains(q[:i] + q[i + 1:], q[i]) for i in range(4)):
            expected.append(q)
    assert got == expected
    assert len(set(got)) == len(got)


def test_enumeration_examples():
    gens = [H.generators for H in enumerate_semigroups(CorpusSpec(max_generator=8))]
    assert (5, 6, 7, 8) in gens
    assert (2, 3, 4, 5) not in gens
    assert all(math.gcd(*g) == 1 for g in gens)
    assert list(enumerate_semigroups(CorpusSpec(max_generator=3))) == []


def test_max_frobenius_filter():
    everything = [H.generators for H in enumerate_semigroups(CorpusSpec(max_generator=12))]
    gens = [H.generators for H in enumerate_semigroups(CorpusSpec(max_generator=12, max_frobenius=9))]
    assert (5, 6, 7, 8) in gens
    assert gens == [g for g in everything if brute_frobenius(g)[0] <= 9]
    assert len(gens) < len(everything)


@pytest.mark.parametrize("bad", [dict(max_generator=0), dict(max_generator=5, jobs=0), dict(max_generator=5, max_frobenius=-1)])
def test_spec_validation(bad):
    with pytest.raises(ValueError):
        CorpusSpec(**bad)


def test_sweep_small():
    report = verify_corpus(CorpusSpec(max_generator=8, oracle=True))
    assert report.holds
    assert report.counts["pfaffian_5"] >= 1
    assert report.counts["oracle_checked"] == report.counts["total"]
    assert check_member(make_semigroup([5, 6, 7, 8])).classification == "pfaffian_5"


def test_sweep_empty():
    report = verify_corpus(CorpusSpec(max_generator=3))
    assert report.counts["total"] == 0 and report.holds


def test_oracle_failures_clean():
    assert oracle_failures(make_semigroup([5, 6, 7, 8])) == []


def test_parallel_equals_sequential():
    seq = verify_corpus(CorpusSpec(max_generator=13))
    par = verify_corpus(CorpusSpec(max_generator=13, jobs=2))
    assert json.dumps(seq.to_dict(), sort_keys=True) == json.dumps(par.to_dict(), sort_keys=True)


def test_report_is_deterministic():
    a = verify_corpus(CorpusSpec(max_generator=12)).to_dict()
    b = verify_corpus(CorpusSpec(max_generator=12)).to_dict()
    assert json.dumps(a) == json.dumps(b)
    assert a["verdict"] == "theorem holds on corpus"
