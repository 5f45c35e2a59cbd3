import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdb.applications import cross_coverage
from zdb.core import (
    NotZdb,
    ZdbFunction,
    ZdbParams,
    densify,
    from_labels,
    relabel,
    verify_pdf,
    verify_zdb,
    within_class_coverage,
)
from zdb.cyclotomic import construct_coset_zdb
from zdb.errors import NotABijection
from zdb.group import GroupSpec

from oracles import cyclic_agreements, cyclic_is_zdb, within_class_differences


def test_constant_function():
    p = verify_zdb(from_labels([0, 0, 0, 0]))
    assert p == ZdbParams(4, 1, 4, (4,))


def test_identity_labeling():
    f = from_labels([0, 1, 2, 3])
    p = verify_zdb(f)
    assert p == ZdbParams(4, 4, 0, (1, 1, 1, 1))
    assert verify_pdf(f, p)


def test_non_zdb_witness():
    f = from_labels([0, 0, 1, 1])
    assert cyclic_agreements([0, 0, 1, 1])[1:3] == [2, 0]
    result = verify_zdb(f)
    assert isinstance(result, NotZdb) and not result
    assert (result.shift_a, result.count_a, result.shift_b, result.count_b) == (1, 2, 2, 0)
    assert not verify_pdf(f, ZdbParams(4, 2, 1, (2, 2)))


def test_pdf_coset_m3():
    f = construct_coset_zdb(3)
    cover = within_class_differences(f.labels.tolist())
    assert cover[1:] == [2] * 6
    assert verify_pdf(f, verify_zdb(f))


def test_relabel_preserves_params():
    f = construct_coset_zdb(3)
    p = verify_zdb(f)
    assert np.array_equal(relabel(f, [0, 1, 2]).labels, f.labels)
    swapped = relabel(f, {1: 2, 2: 1})
    assert swapped.labels.tolist() == [0, 2, 2, 1, 2, 1, 1]
    assert verify_zdb(swapped) == p
    with pytest.raises(NotABijection):
        relabel(f, [0, 0, 1])


def test_densify_first_occurrence():
    assert densify([5, 5, 2, 9, 2]).tolist() == [0, 0, 1, 2, 1]
    assert ZdbFunction(GroupSpec.cyclic(3), [4, 7, 4]).labels.tolist() == [0, 1, 0]


def test_product_group_verifier_matches_scalar_oracle():
    g = GroupSpec.product([4, 3])
    rng = np.random.default_rng(3)
    labels = rng.integers(0, 3, g.n)
    f = ZdbFunction(g, labels)
    counts = [sum(f.labels[g.add(x, a)] == f.labels[x] for x in range(g.n)) for a in range(1, g.n)]
    result = verify_zdb(f)
    if len(set(counts)) == 1:
        assert result.lam == counts[0]
    else:
        assert isinstance(result, NotZdb)
        assert counts[result.shift_b - 1] == result.count_b


tables = st.integers(2, 40).flatmap(
    lambda n: st.lists(st.integers(0, 4), min_size=n, max_size=n))


@settings(max_examples=300, deadline=None)
@given(tables)
def test_verifiers_agree_with_brute_force(labels):
    f = from_labels(labels)
    ok, lam = cyclic_is_zdb(f.labels.tolist())
    result = verify_zdb(f)
    assert ok == (not isinstance(result, NotZdb))
    cover = within_class_coverage(f)
    assert cover[1:].tolist() == within_class_differences(f.labels.tolist())[1:]
    if ok:
        assert result.lam == lam
        assert verify_pdf(f, result)
        assert result.counting_identity_holds()
    else:
        # the partition side must also see non-constant coverage
        assert len(set(cover[1:].tolist())) > 1


@settings(max_examples=100, deadline=None)
@given(tables, st.randoms())
def test_relabel_invariance(labels, rnd):
    f = from_labels(labels)
    perm = list(range(f.ell_bar))
    rnd.shuffle(perm)
    a, b = verify_zdb(f), verify_zdb(relabel(f, perm))
    assert a == b


@settings(max_examples=100, deadline=None)
@given(tables)
def test_pairing_identity(labels):
    f = from_labels(labels)
    within = within_class_coverage(f)
    sets = [np.flatnonzero(f.labels == i).tolist() for i in range(f.ell_bar)]
    cross = cross_coverage(f.n, sets)
    assert np.all(within[1:] + cross[1:] == f.n)
