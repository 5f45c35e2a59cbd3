"""Function tables on finite abelian groups and the exhaustive ZDB verifier.

A function f: G -> labels is ZDB with parameter lambda when, for every nonzero
shift a, exactly lambda points x satisfy f(x + a) == f(x). Two independent
counts are provided: `verify_zdb` works shift by shift over the whole group,
`verify_pdf` works class by class over the preimage partition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import NotABijection
from .group import GroupSpec


def densify(labels: Sequence[int]) -> np.ndarray:
    """Relabel to 0..k-1 in order of first occurrence."""
    labels = np.asarray(labels, dtype=np.int64)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[inverse.reshape(-1)]


@dataclass(frozen=True, eq=False)
class ZdbFunction:
    group: GroupSpec
    labels: np.ndarray
    family: Dict[str, Any] = field(default_factory=lambda: {"family": "external"})

    def __post_init__(self):
        labels = np.array(self.labels, dtype=np.int64)
        if labels.shape != (self.group.n,):
            raise ValueError(f"expected {self.group.n} labels, got shape {labels.shape}")
        if labels.min() < 0:
            raise ValueError("labels must be non-negative")
        if labels.max() + 1 != len(np.unique(labels)):
            labels = densify(labels)
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def ell_bar(self) -> int:
        return int(self.labels.max()) + 1

    def histogram(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.ell_bar)

    def classes(self) -> list[np.ndarray]:
        """Preimage sets in label order."""
        order = np.argsort(self.labels, kind="stable")
        bounds = np.cumsum(self.histogram())[:-1]
        return np.split(order, bounds)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZdbFunction):
            return NotImplemented
        return (self.group == other.group and self.family == other.family
                and np.array_equal(self.labels, other.labels))


@dataclass(frozen=True)
class ZdbParams:
    n: int
    ell_bar: int
    lam: int
    tau: Tuple[int, ...]

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.n, self.ell_bar, self.lam)

    def counting_identity_holds(self) -> bool:
        return sum(t * (t - 1) for t in self.tau) == self.lam * (self.n - 1)


@dataclass(frozen=True)
class NotZdb:
    """Verification failure: two shifts with different agreement counts."""

    shift_a: int
    count_a: int
    shift_b: int
    count_b: int

    def __bool__(self) -> bool:
        return False


def translation_table(g: GroupSpec, a: int) -> np.ndarray:
    """Index of x + a for every x."""
    return g.translate(a)


def iter_shift_agreements(f: ZdbFunction) -> Iterator[Tuple[int, int]]:
    """Yield (a, |{x : f(x + a) == f(x)}|) for a = 1, ..., n - 1."""
    g, lab = f.group, f.labels
    n = g.n
    if g.kind == "cyclic":
        doubled = np.concatenate([lab, lab])
        for a in range(1, n):
            yield a, int(np.count_nonzero(doubled[a:a + n] == lab))
    else:
        for a in range(1, n):
            yield a, int(np.count_nonzero(lab[translation_table(g, a)] == lab))


def shift_agreements(f: ZdbFunction) -> np.ndarray:
    """c[a] for every a, with c[0] == n."""
    counts = np.empty(f.n, dtype=np.int64)
    counts[0] = f.n
    for a, c in iter_shift_agreements(f):
        counts[a] = c
    return counts


def verify_zdb(f: ZdbFunction) -> Union[ZdbParams, NotZdb]:
    """Count agreements for every nonzero shift; stop at the first mismatch.

    The witness pairs shift 1 with the smallest shift whose count differs.
    """
    lam = None
    for a, c in iter_shift_agreements(f):
        if lam is None:
            lam = c
        elif c != lam:
            return NotZdb(1, lam, a, c)
    tau = tuple(sorted(int(t) for t in f.histogram()))
    return ZdbParams(n=f.n, ell_bar=f.ell_bar, lam=lam, tau=tau)


def within_class_coverage(f: ZdbFunction, chunk: int = 2048) -> np.ndarray:
    """For each d, the number of ordered pairs (a, a') in one class with a - a' == d."""
    g = f.group
    cover = np.zeros(g.n, dtype=np.int64)
    for cls in f.classes():
        neg = g.neg(cls)
        for start in range(0, len(cls), chunk):
            rows = cls[start:start + chunk]
            diffs = g.add(rows[:, None], neg[None, :])
            cover += np.bincount(diffs.ravel(), minlength=g.n)
    # drop the a == a' pairs
    cover[0] -= g.n
    return cover


def verify_pdf(f: ZdbFunction, params: ZdbParams) -> bool:
    cover = within_class_coverage(f)
    return bool(np.all(cover[1:] == params.lam))


def relabel(f: ZdbFunction, permutation: Union[Sequence[int], Mapping[int, int]]) -> ZdbFunction:
    k = f.ell_bar
    if isinstance(permutation, Mapping):
        perm = [permutation.get(i, i) for i in range(k)]
    else:
        perm = list(permutation)
    if sorted(perm) != list(range(k)):
        raise NotABijection(f"{perm} is not a permutation of 0..{k - 1}")
    table = np.asarray(perm, dtype=np.int64)[f.labels]
    return ZdbFunction(f.group, table, dict(f.family))


def from_labels(labels: Sequence[int], group: Optional[GroupSpec] = None, **family) -> ZdbFunction:
    """Wrap an external table (on Z_n unless a group is given), densifying labels."""
    labels = densify(labels)
    group = group or GroupSpec.cyclic(len(labels))
    return ZdbFunction(group, labels, {"family": "external", **family})
