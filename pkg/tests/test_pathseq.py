import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import fasthamilton.pathseq as pathseq_mod
from fasthamilton.errors import InvalidArgumentError
from fasthamilton.pathseq import ArrayPathSeq, PathSeq


def test_singleton():
    p = PathSeq([7])
    assert p.start() == 7 and p.end() == 7 and len(p) == 1


def test_pred_succ():
    p = PathSeq([3, 1, 2])
    assert p.pred(2) == 1
    assert p.pred(1) == 3
    assert p.pred(3) is None
    assert p.succ(3) == 1
    assert p.succ(2) is None


def test_duplicate_rejected():
    with pytest.raises(InvalidArgumentError):
        PathSeq([1, 2, 1])
    with pytest.raises(InvalidArgumentError):
        PathSeq([])


def test_split_before():
    p = PathSeq(list("abcd"))
    left, right = p.split_before("c")
    assert left.to_list() == ["a", "b"]
    assert right.to_list() == ["c", "d"]
    p = PathSeq(list("ab"))
    left, right = p.split_before("b")
    assert left.to_list() == ["a"] and right.to_list() == ["b"]


def test_split_at_start_rejected():
    p = PathSeq([1, 2])
    with pytest.raises(InvalidArgumentError):
        p.split_before(1)


def test_concat():
    a = PathSeq(["a"])
    b = PathSeq(["b"])
    c = a.concat(b)
    assert c.to_list() == ["a", "b"]
    d = PathSeq(["x", "y"]).concat(PathSeq(["z"]))
    assert d.to_list() == ["x", "y", "z"]
    assert d.pred("z") == "y"


def test_consumed_inputs_unusable():
    a = PathSeq([1, 2])
    b = PathSeq([3])
    a.concat(b)
    with pytest.raises(InvalidArgumentError):
        b.concat(PathSeq([4]))
    with pytest.raises(InvalidArgumentError):
        a.split_before(2)


def test_reversed_and_contains():
    p = PathSeq(["a", "b", "c"])
    assert p.to_list_reversed() == ["c", "b", "a"]
    assert "b" in p
    assert "x" not in p


def test_concat_length_additive():
    p1 = PathSeq(range(10))
    p2 = PathSeq(range(10, 17))
    assert len(p1.concat(p2)) == 17


def test_rank_and_half():
    p = PathSeq([10, 11, 12])
    assert [p.rank(v) for v in (10, 11, 12)] == [1, 2, 3]
    # first-half boundary is ceil(3/2) = 2
    assert p.half(10) and p.half(11) and not p.half(12)


def test_split_concat_inverse():
    vs = list(range(40))
    for v in vs[1:]:
        p = PathSeq(vs)
        left, right = p.split_before(v)
        assert left.concat(right).to_list() == vs


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 10**6), min_size=1, max_size=80, unique=True),
       st.integers(1, 79))
def test_split_matches_array_oracle(vs, cut):
    if cut >= len(vs):
        cut = len(vs) - 1
    if cut == 0:
        return
    ours = PathSeq(vs)
    ref = ArrayPathSeq(vs)
    v = vs[cut]
    l1, r1 = ours.split_before(v)
    l2, r2 = ref.split_before(v)
    assert l1.to_list() == l2.to_list()
    assert r1.to_list() == r2.to_list()


def run_fuzz(ops, universe, seed, audit=False):
    """Random op stream against the array-backed reference implementation."""
    old = pathseq_mod.DEBUG_AUDIT
    pathseq_mod.DEBUG_AUDIT = audit
    try:
        rng = random.Random(seed)
        pool = []  # list of (PathSeq, ArrayPathSeq) with disjoint vertex sets
        free = list(range(universe))
        mutations = 0
        for _ in range(ops):
            r = rng.random()
            if (r < 0.04 and free) or not pool:
                k = rng.randint(1, min(12, len(free)))
                vs = [free.pop() for _ in range(k)]
                rng.shuffle(vs)
                pool.append((PathSeq(vs), ArrayPathSeq(vs)))
                mutations += 1
            elif r < 0.08 and len(pool) >= 2:
                (p1, a1) = pool.pop(rng.randrange(len(pool)))
                (p2, a2) = pool.pop(rng.randrange(len(pool)))
                pool.append((p1.concat(p2), a1.concat(a2)))
                mutations += 1
            elif r < 0.12 and any(len(a) > 1 for _, a in pool):
                i = rng.choice([i for i, (_, a) in enumerate(pool) if len(a) > 1])
                p, a = pool.pop(i)
                v = a.to_list()[rng.randrange(1, len(a))]
                pl, pr = p.split_before(v)
                al, ar = a.split_before(v)
                pool.extend([(pl, al), (pr, ar)])
                mutations += 1
            else:
                p, a = pool[rng.randrange(len(pool))]
                vs = a.to_list()
                v = rng.choice(vs)
                assert len(p) == len(a)
                assert p.start() == a.start() and p.end() == a.end()
                assert p.pred(v) == a.pred(v)
                assert p.succ(v) == a.succ(v)
                assert p.rank(v) == a.rank(v)
                assert p.half(v) == a.half(v)
                probe = rng.randrange(universe)
                assert (probe in p) == (probe in a)
        for p, a in pool:
            assert p.to_list() == a.to_list()
            assert p.to_list_reversed() == a.to_list_reversed()
            p._audit()
        return mutations
    finally:
        pathseq_mod.DEBUG_AUDIT = old


def test_fuzz_small():
    run_fuzz(20000, 64, 1, audit=True)


def test_height_bound_large():
    old = pathseq_mod.DEBUG_AUDIT
    pathseq_mod.DEBUG_AUDIT = True
    try:
        p = PathSeq(range(5000))
        for v in (4000, 3000, 2000, 1000):
            l, r = p.split_before(v)
            p = r.concat(l)
        p._audit()
        assert sorted(p.to_list()) == list(range(5000))
    finally:
        pathseq_mod.DEBUG_AUDIT = old
