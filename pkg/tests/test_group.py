import itertools

import numpy as np
import pytest

from zdb.errors import CyclicGroupHasNoSupport, DuplicateFieldOrder, EmptySupport, RepeatedPrime
from zdb.group import (
    GroupSpec,
    enumerate_support_class,
    group_add,
    group_neg,
    support_mask,
    support_of,
    support_set,
)


@pytest.fixture
def g37():
    return GroupSpec.product([3, 7])


def test_cyclic_add_neg():
    g = GroupSpec.cyclic(7)
    assert group_add(g, 5, 4) == 2
    assert group_neg(g, 3) == 4
    assert group_neg(g, 0) == 0


def test_product_add_neg(g37):
    a, b = g37.encode((1, 2)), g37.encode((2, 6))
    assert g37.decode(group_add(g37, a, b)) == (0, 1)
    assert g37.decode(group_neg(g37, a)) == (2, 5)
    assert group_neg(g37, 0) == 0


def test_identity(g37):
    for a in range(g37.n):
        assert group_add(g37, a, 0) == a


def test_supports(g37):
    assert support_set(support_of(g37, g37.encode((0, 5)))) == {2}
    assert support_set(support_of(g37, g37.encode((1, 1)))) == {1, 2}
    assert support_of(g37, 0) == 0
    with pytest.raises(CyclicGroupHasNoSupport):
        support_of(GroupSpec.cyclic(5), 1)


def test_enumerate_support_class(g37):
    cls = enumerate_support_class(g37, support_mask({1}))
    assert [g37.decode(x) for x in cls] == [(1, 0), (2, 0)]
    assert len(enumerate_support_class(g37, support_mask({1, 2}))) == 12
    g47 = GroupSpec.product([4, 7])
    assert len(enumerate_support_class(g47, support_mask({1, 2}))) == 18
    with pytest.raises(EmptySupport):
        enumerate_support_class(g37, 0)


@pytest.mark.parametrize("qs", [[3, 7], [4, 7], [9, 4, 5], [8]])
def test_encoding_bijection_and_support_sizes(qs):
    g = GroupSpec.product(qs)
    ranges = [range(q) for q in qs]
    seen = set()
    for coords in itertools.product(*ranges):
        idx = g.encode(coords)
        assert g.decode(idx) == coords
        seen.add(idx)
    assert seen == set(range(g.n))
    total = 1  # the empty support holds only 0
    for mask in range(1, 1 << len(qs)):
        size = len(enumerate_support_class(g, mask))
        assert size == np.prod([qs[i] - 1 for i in range(len(qs)) if mask >> i & 1])
        total += size
    assert total == g.n


@pytest.mark.parametrize("g", [GroupSpec.cyclic(12), GroupSpec.product([4, 3]), GroupSpec.product([9, 2])])
def test_group_axioms_exhaustive(g):
    els = range(g.n)
    for a in els:
        assert g.neg(g.neg(a)) == a
        assert g.add(a, g.neg(a)) == 0
        for b in els:
            assert g.add(a, b) == g.add(b, a)
    for a, b, c in itertools.product(els, repeat=3):
        assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))


@pytest.mark.parametrize("g", [GroupSpec.cyclic(10), GroupSpec.product([4, 9]), GroupSpec.product([25, 8])])
def test_vectorized_paths_agree_with_scalar(g):
    els = g.elements()
    for a in range(g.n):
        expect = [g.add(int(x), a) for x in range(g.n)]
        assert g.translate(a).tolist() == expect
    assert g.neg(els).tolist() == [g.neg(int(x)) for x in els]


def test_product_rejections():
    with pytest.raises(DuplicateFieldOrder):
        GroupSpec.product([7, 7])
    with pytest.raises(RepeatedPrime):
        GroupSpec.product([3, 9])
    g = GroupSpec.product([3, 9], allow_repeated_primes=True)
    assert g.n == 27
