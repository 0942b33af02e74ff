import itertools
import json
from collections import Counter

import numpy as np
import pytest

from rigs.model import WeightSpec, build_weights
from rigs.sampler import BipartiteSample, project, sample_bipartite


def _weights(n, values):
    return build_weights(WeightSpec(n=n, kind="explicit", values=values))


def test_zero_probability_gives_empty():
    b = sample_bipartite(_weights(5, (0.0,)), 123)
    assert b.members(0).size == 0


def test_unit_probability_gives_full():
    b = sample_bipartite(_weights(3, (1.0,)), 9)
    assert list(b.members(0)) == [0, 1, 2]


def test_determinism():
    w = _weights(100, (0.1, 0.5, 0.9))
    b1 = sample_bipartite(w, 77)
    b2 = sample_bipartite(w, 77)
    assert (b1.flat == b2.flat).all() and (b1.offsets == b2.offsets).all()
    b3 = sample_bipartite(w, 78)
    assert not ((b3.flat.shape == b1.flat.shape) and (b3.flat == b1.flat).all())


def test_member_lists_sorted_distinct_in_range():
    w = build_weights(WeightSpec(n=500, kind="powerlaw", c=1.5, m=20, tau=0.6))
    b = sample_bipartite(w, 4)
    for i in range(b.m):
        mem = b.members(i)
        assert (np.diff(mem) > 0).all()
        if mem.size:
            assert 0 <= mem[0] and mem[-1] < 500


def test_binomial_marginal_mean():
    # |members| ~ Binomial(3, 0.5): empirical mean 1.5 +- 0.02 over 1e5 seeds
    w = _weights(3, (0.5, 0.5))
    total = 0
    trials = 10**5
    for s in range(trials):
        total += sample_bipartite(w, s).offsets[1]
    assert abs(total / trials - 1.5) < 0.02


def test_membership_law_equals_bernoulli_product():
    # the sparse sampler must reproduce the full product law, not just the
    # count marginal: check all 8 membership patterns at n=3, p=0.6
    w = _weights(3, (0.6,))
    freq = Counter()
    trials = 50000
    for s in range(trials):
        freq[tuple(sample_bipartite(w, s).members(0))] += 1
    for pattern in [()] + [
        t for r in (1, 2, 3) for t in itertools.combinations(range(3), r)
    ]:
        expect = 0.6 ** len(pattern) * 0.4 ** (3 - len(pattern))
        assert freq[pattern] / trials == pytest.approx(expect, abs=0.01)


def test_expected_total_memberships():
    # E[total] = n * sum(p_i); 3-standard-error band over 1e4 trials
    w = _weights(40, (0.05, 0.2, 0.4))
    trials = 10**4
    tot = sum(sample_bipartite(w, s).total_memberships for s in range(trials))
    mean = tot / trials
    expect = 40 * (0.05 + 0.2 + 0.4)
    var = 40 * sum(p * (1 - p) for p in (0.05, 0.2, 0.4))
    assert abs(mean - expect) < 3 * (var / trials) ** 0.5


def test_project_single_clique():
    b = BipartiteSample.from_json({"n": 3, "seed": 0, "attrs": [[0, 1, 2]]})
    assert project(b).edges == ((0, 1), (0, 2), (1, 2))


def test_project_overlapping_cliques():
    b = BipartiteSample.from_json({"n": 3, "seed": 0, "attrs": [[0, 1], [1, 2]]})
    assert project(b).edges == ((0, 1), (1, 2))


def test_project_empty():
    b = BipartiteSample.from_json({"n": 3, "seed": 0, "attrs": [[], [], []]})
    assert project(b).edges == ()


def test_edgelist_format():
    b = BipartiteSample.from_json({"n": 3, "seed": 0, "attrs": [[0, 1], [1, 2]]})
    assert project(b).to_edgelist() == "0 1\n1 2\n"


def test_sample_json_roundtrip():
    w = _weights(20, (0.3, 0.8))
    b = sample_bipartite(w, 5)
    b2 = BipartiteSample.from_json(json.loads(b.dumps()))
    assert b2.n == b.n and b2.seed == b.seed
    assert (b2.flat == b.flat).all() and (b2.offsets == b.offsets).all()


def test_sample_json_validation():
    with pytest.raises(ValueError):
        BipartiteSample.from_json({"n": 3, "seed": 0, "attrs": [[1, 1]]})
    with pytest.raises(ValueError):
        BipartiteSample.from_json({"n": 3, "seed": 0, "attrs": [[0, 3]]})
