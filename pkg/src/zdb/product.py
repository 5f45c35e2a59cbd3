"""ZDB functions on (GF(q_1) x ... x GF(q_k), +) from generalized cyclotomy.

Each nonzero element lies in exactly one support class A_I (the elements
whose nonzero coordinates are exactly I). A_I is a multiplicative group and
D_I = <(g_i^{f_i})_{i in I}> is a subgroup of order e, where q_i - 1 = e f_i.
The function labels {0} and then each coset alpha D_I, giving an
(n, (n + e - 1)/e, e - 1) ZDB function with preimage sizes {1, e, ..., e}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import algebra
from .core import ZdbFunction
from .errors import BadExponent
from .group import GroupSpec


@dataclass(frozen=True)
class ProductFamilyParams:
    q_list: tuple
    e: int
    f_list: tuple
    n: int

    @property
    def ell_bar(self) -> int:
        return (self.n - 1) // self.e + 1

    @property
    def lam(self) -> int:
        return self.e - 1

    @property
    def tau(self) -> tuple:
        return (1,) + (self.e,) * (self.ell_bar - 1)


def product_params(q_list: Sequence[int], e: int) -> ProductFamilyParams:
    q_list = tuple(int(q) for q in q_list)
    for q in q_list:
        algebra.factor_prime_power(q)
    if e <= 1:
        raise BadExponent(f"e must exceed 1, got {e}")
    bad = [q for q in q_list if (q - 1) % e]
    if bad:
        raise BadExponent(f"e={e} does not divide q-1 for q in {bad}")
    n = 1
    for q in q_list:
        n *= q
    return ProductFamilyParams(q_list, e, tuple((q - 1) // e for q in q_list), n)


def _subgroup_logs(g: GroupSpec, e: int) -> list[np.ndarray]:
    """Per coordinate, the discrete logs of the order-e subgroup <g_i^{f_i}>."""
    return [np.arange(e, dtype=np.int64) * ((s.q - 1) // e) for s in g.fields]


def _coset_of(g: GroupSpec, x: int, support: int, sub_logs) -> np.ndarray:
    """Indices of x * D_I for x in A_I, as an array of length e."""
    e = len(sub_logs[0])
    out = np.zeros(e, dtype=np.int64)
    for i, (s, r) in enumerate(zip(g.fields, g.radices)):
        if not support >> i & 1:
            continue
        exp, log = algebra.log_tables(s)
        xi = (x // r) % s.q
        out += exp[(log[xi] + sub_logs[i]) % (s.q - 1)] * r
    return out


def subgroup_generator(g: GroupSpec, support: int, e: int) -> int:
    """Index of (g_i^{f_i})_{i in I}, zero outside I."""
    coords = []
    for i, s in enumerate(g.fields):
        if support >> i & 1:
            coords.append(algebra.pow_mod_order(s, s.generator, (s.q - 1) // e))
        else:
            coords.append(0)
    return g.encode(coords)


def coset_decompose(g: GroupSpec, support: int, e: int) -> list[list[int]]:
    """Split A_I into cosets of D_I, each listed ascending.

    Representatives are chosen greedily: sweep A_I in index order and open a
    new coset at every element not yet covered. The cosets come out ordered
    by their minimum element.
    """
    product_params(g.q_list, e)
    members = g.enumerate_support_class(support)
    sub_logs = _subgroup_logs(g, e)
    covered = set()
    cosets = []
    for x in members:
        if x in covered:
            continue
        coset = sorted(int(y) for y in _coset_of(g, x, support, sub_logs))
        covered.update(coset)
        cosets.append(coset)
    return cosets


def construct_product(q_list: Sequence[int], e: int, allow_repeated_primes: bool = False) -> ZdbFunction:
    params = product_params(q_list, e)
    g = GroupSpec.product(params.q_list, allow_repeated_primes=allow_repeated_primes)
    labels = np.full(g.n, -1, dtype=np.int64)
    labels[0] = 0
    masks = g.support_masks()
    sub_logs = _subgroup_logs(g, e)
    next_label = 1
    for support in range(1, 1 << g.k):
        for x in np.flatnonzero(masks == support):
            if labels[x] >= 0:
                continue
            labels[_coset_of(g, int(x), support, sub_logs)] = next_label
            next_label += 1
    assert next_label == params.ell_bar
    family = {"family": "product", "q": list(params.q_list), "e": e}
    if allow_repeated_primes:
        family["allow_repeated_primes"] = True
    return ZdbFunction(g, labels, family)
