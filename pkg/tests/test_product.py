import pytest

from wadgelab.errors import SeedInvalid
from wadgelab.product import (ProductGraph, admissible_seeds, coverage, coverage_many, coverage_report)
from wadgelab.sequences import from_delta
from wadgelab.unfoldings import enumerate_unfoldings, enumerated_coverage

from conftest import corpus_pairs


def test_identity_pair_full():
    rep = coverage_report((0, 1, 3, 6), (0, 1, 3, 6), 0)
    assert rep.full and rep.interval == (0, 11)
    assert str(rep) == "coverage m=0,1,3,6 n=0,1,3,6 l=0 forbid=- hi=11 -> [0,11]"


def test_inequivalent_pair_proper():
    m, n = from_delta((1, 2, 3, 4, 5, 6)), from_delta((1, 3, 5, 7, 9, 11))
    rep = coverage_report(m, n, 0)
    assert rep.hi_m == 2 * m[6] - 1
    assert rep.proper


def test_seed_invalid():
    with pytest.raises(SeedInvalid):
        coverage((0, 1, 2), (0, 1, 2), 1)


def test_forbid_monotone():
    for m, n in corpus_pairs("sentinel")[:12]:
        for l in admissible_seeds(m, n):
            full = coverage(m, n, l)
            for t in range(1, 6):
                assert coverage(m, n, l, t) <= full


def test_coverage_is_interval_from_zero():
    for m, n in corpus_pairs("sentinel"):
        for l in admissible_seeds(m, n):
            cov = coverage(m, n, l)
            if cov:
                assert min(cov) == 0 and cov == frozenset(range(max(cov) + 1))


@pytest.mark.parametrize("K", [2, 3, 5, 7])
def test_bounded_bfs_matches_full_stream(K):
    """Depth-bounded search against the union over the unrestricted enumeration stream."""
    for m, n in [((0, 1, 3), (0, 2, 5)), ((0, 1, 2, 3), (0, 1, 3))]:
        for l in admissible_seeds(m, n):
            union = set()
            for x in enumerate_unfoldings(m, n, l, K):
                union |= x.ran_f
            assert frozenset(union) == coverage(m, n, l, max_steps=K - 1)
            assert enumerated_coverage(m, n, l, K) == frozenset(union)


def test_isolated_seed_has_empty_coverage():
    pg = ProductGraph((0, 1, 3), (0, 1, 3))
    assert all(pg.neighbours(s) for s in [(0, 0), (1, 1)])
    assert coverage((0, 1, 3), (0, 1, 3), 0, 1) == frozenset({0})


def test_workers_do_not_change_results():
    jobs = [(m, n, l) for m, n in corpus_pairs("sentinel") for l in admissible_seeds(m, n)]
    one = coverage_many(jobs, workers=1)
    many = coverage_many(jobs, workers=4)
    assert [r.vertices for r in one] == [r.vertices for r in many]
