"""ZDB functions on Z_{2^m - 1} from 2-cyclotomic cosets, m prime.

`construct_coset_zdb` maps x to the leader of its coset {x 2^j mod n};
`construct_pair_coset_zdb` maps x to the leader of B u (-B) where B is the
coset of x. Labels are the leaders densified in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import require_prime
from .core import ZdbFunction
from .errors import EvenPrimeNotAllowed
from .group import GroupSpec


@dataclass(frozen=True)
class CosetTable:
    m: int
    n: int
    leaders: tuple
    leader_of: np.ndarray

    def cosets(self) -> list[list[int]]:
        return [np.flatnonzero(self.leader_of == ld).tolist() for ld in self.leaders]


@dataclass(frozen=True)
class PairedCosetTable(CosetTable):
    pass


def orbit_leaders(m: int) -> np.ndarray:
    """min over j of x 2^j mod (2^m - 1), by scanning the whole orbit."""
    n = 2**m - 1
    x = np.arange(n, dtype=np.int64)
    leader = x.copy()
    y = x.copy()
    for _ in range(m - 1):
        y = (2 * y) % n
        np.minimum(leader, y, out=leader)
    return leader


def build_coset_table(m: int) -> CosetTable:
    require_prime(m)
    leader_of = orbit_leaders(m)
    leader_of.setflags(write=False)
    return CosetTable(m, 2**m - 1, tuple(int(v) for v in np.unique(leader_of)), leader_of)


def build_paired_table(m: int) -> PairedCosetTable:
    require_prime(m)
    if m == 2:
        raise EvenPrimeNotAllowed("m must be an odd prime")
    n = 2**m - 1
    base = orbit_leaders(m)
    # The class leader is the smaller of the leaders of B and -B.
    leader_of = np.minimum(base, base[(-np.arange(n)) % n])
    leader_of.setflags(write=False)
    return PairedCosetTable(m, n, tuple(int(v) for v in np.unique(leader_of)), leader_of)


def _dense_by_leader(table: CosetTable) -> np.ndarray:
    return np.searchsorted(np.asarray(table.leaders), table.leader_of)


def construct_coset_zdb(m: int) -> ZdbFunction:
    table = build_coset_table(m)
    return ZdbFunction(GroupSpec.cyclic(table.n), _dense_by_leader(table), {"family": "coset", "m": m})


def construct_pair_coset_zdb(m: int) -> ZdbFunction:
    table = build_paired_table(m)
    return ZdbFunction(GroupSpec.cyclic(table.n), _dense_by_leader(table),
                       {"family": "pair_coset", "m": m})


def coset_params(m: int) -> tuple:
    """Predicted (n, ell_bar, lambda) of the coset-leader family."""
    return (2**m - 1, (2**m + m - 2) // m, m - 1)


def pair_coset_params(m: int) -> tuple:
    return (2**m - 1, (2**(m - 1) + m - 1) // m, 2 * m - 1)
