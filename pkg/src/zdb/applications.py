"""Constant composition codes and difference systems of sets from ZDB functions.

Bounds are evaluated exactly: the code-size bound as a Fraction, the DSS
bound with an integer square root rounded up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence, Tuple

import numpy as np

from .core import ZdbFunction, ZdbParams, shift_agreements, translation_table
from .errors import CompositionMismatch, DegenerateDss, NonCyclicGroup, OverlappingSets
from .group import GroupSpec

BRUTE_FORCE_MAX_M = 512


# -- constant composition codes -------------------------------------------

def ccc_bound(n: int, d: int, composition: Sequence[int]) -> Optional[Fraction]:
    """Upper bound nd / (nd - n^2 + sum w_i^2) on the size of a CCC.

    Returns None when the denominator is not positive and the bound does not
    apply.
    """
    if sum(composition) != n:
        raise CompositionMismatch(f"composition {list(composition)} does not sum to n={n}")
    denom = n * d - n * n + sum(w * w for w in composition)
    if denom <= 0:
        return None
    return Fraction(n * d, denom)


@dataclass
class CccCode:
    n: int
    M: int
    d: int
    composition: Tuple[int, ...]
    alphabet_size: int
    bound: Optional[Fraction] = None
    source: Optional[ZdbFunction] = field(default=None, repr=False)
    _codewords: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def codewords(self) -> np.ndarray:
        """M x n matrix; row i is f translated by the i-th group element."""
        if self._codewords is None:
            f = self.source
            g = f.group
            words = np.empty((g.n, g.n), dtype=np.int32)
            for i in range(g.n):
                words[i] = f.labels[translation_table(g, i)]
            self._codewords = words
        return self._codewords

    @property
    def optimal(self) -> bool:
        return self.bound is not None and self.bound == self.M

    @property
    def vacuous_distance(self) -> bool:
        return self.M == 1

    def detached(self) -> "CccCode":
        """Copy holding an explicit codeword matrix and no generating function."""
        return CccCode(self.n, self.M, self.d, self.composition, self.alphabet_size,
                       self.bound, None, np.array(self.codewords))

    def summary(self) -> str:
        comp = ",".join(str(w) for w in self.composition)
        return f"({self.n},{self.M},{self.d},[{comp}])_{self.alphabet_size}"


def build_ccc(f: ZdbFunction, params: ZdbParams) -> CccCode:
    n = f.n
    d = n - params.lam
    composition = tuple(int(w) for w in f.histogram())
    return CccCode(n=n, M=n, d=d, composition=composition, alphabet_size=f.ell_bar,
                   bound=ccc_bound(n, d, composition), source=f)


@dataclass(frozen=True)
class Check:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def pairwise_distances(words: np.ndarray) -> np.ndarray:
    """Full Hamming distance matrix."""
    M = len(words)
    out = np.zeros((M, M), dtype=np.int64)
    for i in range(M):
        out[i] = np.count_nonzero(words != words[i], axis=1)
    return out


def _check_composition(words: np.ndarray, code: CccCode) -> Optional[str]:
    comp = np.asarray(code.composition)
    for i, w in enumerate(words):
        if np.any(w < 0) or np.any(w >= code.alphabet_size):
            return f"codeword {i} uses a symbol outside the alphabet"
        if not np.array_equal(np.bincount(w, minlength=code.alphabet_size), comp):
            return f"codeword {i} has the wrong composition"
    return None


def verify_ccc(code: CccCode, brute_force: Optional[bool] = None) -> Check:
    """Check lengths, composition, distinctness and the declared distance.

    Codes with a generating function use the translation identity
    d(c_i, c_j) = n - |{x : f(x + a_j - a_i) = f(x)}|, which needs only the
    agreement count per shift. Other codes, or brute_force=True, compare
    every pair of codewords.
    """
    if code.M == 1:
        if code.d != code.n:
            return Check(False, f"single codeword: declared d={code.d}, expected {code.n}")
    if brute_force is None:
        brute_force = code.source is None
    if not brute_force:
        f = code.source
        if code.M != f.n or code.n != f.n:
            return Check(False, "size or length does not match the generating group")
        comp = tuple(int(w) for w in f.histogram())
        if comp != tuple(code.composition):
            return Check(False, "composition of the generating function differs")
        if code.M == 1:
            return Check(True)
        agree = shift_agreements(f)[1:]
        if agree.max() == code.n:
            a = int(np.argmax(agree)) + 1
            return Check(False, f"codewords 0 and {a} coincide")
        actual = code.n - int(agree.max())
        if actual != code.d:
            return Check(False, f"minimum distance {actual} != declared {code.d}")
        return Check(True)

    words = np.asarray(code.codewords)
    if words.shape != (code.M, code.n):
        return Check(False, f"codeword matrix has shape {words.shape}, expected {(code.M, code.n)}")
    if code.M > BRUTE_FORCE_MAX_M:
        raise ValueError(f"brute-force check limited to M <= {BRUTE_FORCE_MAX_M}")
    reason = _check_composition(words, code)
    if reason:
        return Check(False, reason)
    if code.M == 1:
        return Check(True)
    dist = pairwise_distances(words)
    iu = np.triu_indices(code.M, 1)
    pair_d = dist[iu]
    if pair_d.min() == 0:
        k = int(np.argmin(pair_d))
        return Check(False, f"codewords {iu[0][k]} and {iu[1][k]} coincide")
    if pair_d.min() != code.d:
        k = int(np.argmin(pair_d))
        return Check(False, f"codewords {iu[0][k]} and {iu[1][k]} at distance "
                            f"{pair_d.min()} != declared {code.d}")
    return Check(True)


# -- difference systems of sets -------------------------------------------

def ceil_sqrt(x: int) -> int:
    s = isqrt(x)
    return s if s * s == x else s + 1


def dss_bound(n: int, ell: int, rho: int) -> int:
    """Lower bound on r = sum |D_i|: sqrt(SQUARE(rho(n-1) + ceil(rho(n-1)/(ell-1))))."""
    if ell < 2:
        raise DegenerateDss(f"a DSS needs at least two sets, got {ell}")
    if n < 2 or rho < 1:
        raise ValueError("need n >= 2 and rho >= 1")
    t = rho * (n - 1)
    return ceil_sqrt(t + -(-t // (ell - 1)))


@dataclass
class Dss:
    n: int
    sets: Tuple[Tuple[int, ...], ...]
    rho: int
    perfect: bool = False
    optimal: bool = False
    bound: Optional[int] = None
    lemma_condition: Optional[bool] = None
    crt_map: Optional[list] = None

    @property
    def r(self) -> int:
        return sum(len(s) for s in self.sets)

    @property
    def tau(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    def summary(self) -> str:
        tau = ",".join(str(t) for t in sorted(self.tau))
        return f"({self.n},{{{tau}}},{self.rho})"


@dataclass(frozen=True)
class DssReport:
    valid: bool
    perfect: bool
    coverage: np.ndarray = field(repr=False)

    def __bool__(self) -> bool:
        return self.valid


def cross_coverage(n: int, sets: Sequence[Sequence[int]]) -> np.ndarray:
    """cover[x] = #{(b, b') : b in D_i, b' in D_j, i != j, b - b' == x mod n}."""
    owner = np.full(n, -1, dtype=np.int64)
    for i, s in enumerate(sets):
        s = np.asarray(s, dtype=np.int64) % n
        if len(np.unique(s)) != len(s) or np.any(owner[s] >= 0):
            raise OverlappingSets(f"set {i} overlaps an earlier set or repeats an element")
        owner[s] = i
    cover = np.zeros(n, dtype=np.int64)
    doubled = np.concatenate([owner, owner])
    placed = owner >= 0
    # b' = b - x ranges over every residue as b does
    for x in range(1, n):
        shifted = doubled[n - x:2 * n - x]
        cover[x] = np.count_nonzero(placed & (shifted >= 0) & (shifted != owner))
    return cover


def verify_dss(dss: Dss) -> DssReport:
    cover = cross_coverage(dss.n, dss.sets)
    nz = cover[1:]
    valid = bool(np.all(nz >= dss.rho))
    perfect = valid and bool(np.all(nz == dss.rho))
    dss.perfect = perfect
    return DssReport(valid, perfect, cover)


def crt_reindex(g: GroupSpec) -> np.ndarray:
    """For a product of prime fields, cyclic index z -> product-group index.

    z corresponds to (z mod p_1, ..., z mod p_k); this is an additive
    isomorphism Z_n -> GF(p_1) x ... x GF(p_k) when the p_i are distinct.
    """
    if g.kind == "cyclic":
        return g.elements()
    if any(s.m != 1 for s in g.fields) or len({s.p for s in g.fields}) != g.k:
        raise NonCyclicGroup(f"{g!r} is not cyclic")
    z = g.elements()
    return g._join([z % s.p for s in g.fields])


def build_dss(f: ZdbFunction, params: ZdbParams) -> Dss:
    g = f.group
    crt = None
    labels = f.labels
    if g.kind == "product":
        to_product = crt_reindex(g)
        labels = labels[to_product]
        crt = to_product.tolist()
    n = g.n
    ell = int(labels.max()) + 1
    sets = tuple(tuple(np.flatnonzero(labels == i).tolist()) for i in range(ell))
    rho = n - params.lam
    dss = Dss(n=n, sets=sets, rho=rho, crt_map=crt)
    verify_dss(dss)
    if ell >= 2 and rho >= 1:
        dss.bound = dss_bound(n, ell, rho)
        dss.optimal = dss.perfect and dss.r == dss.bound
    dss.lemma_condition = ell * params.lam <= n
    return dss
