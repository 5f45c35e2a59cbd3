"""Finite abelian groups: Z_n and (GF(q_1) x ... x GF(q_k), +).

Elements are dense indices in [0, n). For product groups the index is the
mixed-radix encoding of (x_1, ..., x_k) with x_1 least significant, so index
0 is always the identity. All arithmetic accepts plain ints or integer numpy
arrays of indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Sequence, Tuple

import numpy as np

from . import algebra
from .algebra import FieldSpec
from .errors import (
    CyclicGroupHasNoSupport,
    DuplicateFieldOrder,
    EmptySupport,
    RepeatedPrime,
)


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    n: int
    fields: Tuple[FieldSpec, ...] = ()
    allow_repeated_primes: bool = field(default=False, compare=False)

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        if n < 2:
            raise ValueError("group order must be at least 2")
        return cls(kind="cyclic", n=n)

    @classmethod
    def product(cls, q_list: Sequence[int], allow_repeated_primes: bool = False) -> "GroupSpec":
        q_list = [int(q) for q in q_list]
        if not q_list:
            raise ValueError("need at least one field order")
        if len(set(q_list)) != len(q_list):
            raise DuplicateFieldOrder(f"field orders must be distinct, got {q_list}")
        specs = tuple(algebra.build_field(q) for q in q_list)
        primes = [s.p for s in specs]
        if len(set(primes)) != len(primes) and not allow_repeated_primes:
            raise RepeatedPrime(
                f"field orders {q_list} share a characteristic; "
                "pass allow_repeated_primes=True to construct anyway"
            )
        return cls(kind="product", n=prod(q_list), fields=specs,
                   allow_repeated_primes=allow_repeated_primes)

    @property
    def q_list(self) -> list[int]:
        return [s.q for s in self.fields]

    @property
    def k(self) -> int:
        return len(self.fields)

    @cached_property
    def radices(self) -> Tuple[int, ...]:
        out, r = [], 1
        for s in self.fields:
            out.append(r)
            r *= s.q
        return tuple(out)

    def __repr__(self) -> str:
        if self.kind == "cyclic":
            return f"Z_{self.n}"
        return " x ".join(f"GF({q})" for q in self.q_list)

    # -- encoding ---------------------------------------------------------

    def encode(self, coords: Sequence[int]) -> int:
        if self.kind == "cyclic":
            (x,) = coords
            return int(x) % self.n
        if len(coords) != self.k:
            raise ValueError(f"expected {self.k} coordinates")
        for x, s in zip(coords, self.fields):
            if not 0 <= x < s.q:
                raise ValueError(f"coordinate {x} out of range for GF({s.q})")
        return sum(int(x) * r for x, r in zip(coords, self.radices))

    def decode(self, index: int) -> Tuple[int, ...]:
        if self.kind == "cyclic":
            return (int(index),)
        return tuple((int(index) // r) % s.q for r, s in zip(self.radices, self.fields))

    def _coords(self, a):
        return [(a // r) % s.q for r, s in zip(self.radices, self.fields)]

    def _join(self, coords):
        out = 0
        for x, r in zip(coords, self.radices):
            out = out + x * r
        return out

    # -- arithmetic -------------------------------------------------------

    def add(self, a, b):
        if self.kind == "cyclic":
            return (a + b) % self.n
        ca, cb = self._coords(a), self._coords(b)
        return self._join([algebra.field_add(s, x, y) for s, x, y in zip(self.fields, ca, cb)])

    def neg(self, a):
        if self.kind == "cyclic":
            return (-a) % self.n
        return self._join([algebra.field_neg(s, x) for s, x in zip(self.fields, self._coords(a))])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @cached_property
    def _translation_data(self):
        idx = self.elements()
        coords = self._coords(idx)
        tables = []
        for s in self.fields:
            if s.q > 4096:
                tables.append(None)
                continue
            x = np.arange(s.q, dtype=np.int64)
            tables.append(algebra.field_add(s, x[:, None], x[None, :]))
        return coords, tables

    def translate(self, a: int) -> np.ndarray:
        """Index of x + a for every element x, in index order."""
        if self.kind == "cyclic":
            return (self.elements() + a) % self.n
        coords, tables = self._translation_data
        out = np.zeros(self.n, dtype=np.int64)
        for s, r, x, tab, ai in zip(self.fields, self.radices, coords, tables, self.decode(a)):
            if tab is None:
                out += algebra.field_add(s, x, ai) * r
            else:
                out += tab[x, ai] * r
        return out

    def elements(self) -> np.ndarray:
        return np.arange(self.n, dtype=np.int64)

    # -- supports (product groups only) ------------------------------------

    def support_of(self, a: int) -> int:
        """Bitmask of nonzero coordinates; bit i-1 stands for coordinate i."""
        if self.kind != "product":
            raise CyclicGroupHasNoSupport("supports are defined for product groups only")
        mask = 0
        for i, x in enumerate(self.decode(a)):
            if x:
                mask |= 1 << i
        return mask

    def support_masks(self) -> np.ndarray:
        """Support bitmask of every element, indexed by element."""
        if self.kind != "product":
            raise CyclicGroupHasNoSupport("supports are defined for product groups only")
        idx = self.elements()
        mask = np.zeros(self.n, dtype=np.int64)
        for i, x in enumerate(self._coords(idx)):
            mask |= (x != 0).astype(np.int64) << i
        return mask

    def enumerate_support_class(self, support: int) -> list[int]:
        """All elements whose support is exactly `support`, ascending."""
        if self.kind != "product":
            raise CyclicGroupHasNoSupport("supports are defined for product groups only")
        if support == 0:
            raise EmptySupport("support class of the empty set is not a multiplicative group")
        if support >= 1 << self.k:
            raise ValueError(f"support {support:#b} refers to coordinates beyond k={self.k}")
        return np.flatnonzero(self.support_masks() == support).tolist()


def support_set(mask: int) -> set[int]:
    """Bitmask -> set of 1-based coordinate numbers."""
    return {i + 1 for i in range(mask.bit_length()) if mask >> i & 1}


def support_mask(coords) -> int:
    """Set of 1-based coordinate numbers -> bitmask."""
    return sum(1 << (i - 1) for i in set(coords))


def group_add(g: GroupSpec, a, b):
    return g.add(a, b)


def group_neg(g: GroupSpec, a):
    return g.neg(a)


def support_of(g: GroupSpec, a: int) -> int:
    return g.support_of(a)


def enumerate_support_class(g: GroupSpec, support: int) -> list[int]:
    return g.enumerate_support_class(support)
