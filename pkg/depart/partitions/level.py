import logging
from typing import Dict, List, Tuple

from depart.errors import PreconditionError
from depart.instance import DepotConfig
from depart.metric import Point, is_collinear
from depart.util.numeric_util import TOLERANCE
from .base_partition import PartitionScheme

log = logging.getLogger(__name__)

LAMBDA = 0.75

# (index of the disk center, disk radius)
Disk = Tuple[int, float]


class LevelTable:
    def __init__(self, depot_config: DepotConfig, lambda_: float = LAMBDA):
        """Dyadic level structure of collinear depots.

        Depots are re-indexed 0..2^k with k the smallest integer such that 2^k + 1 >= m; indices past m - 1
        are virtual copies of the last depot. Index i is in level l if i is an odd multiple of 2^l
        (l < k); index 2^k is the only member of level k and index 0 the only member of level k + 1.

        :param depot_config:
                Depots in line order: d(x_i, x_j) + d(x_j, x_k) = d(x_i, x_k) for all i < j < k
        :param lambda_:
                Disk scaling constant in (1/2, 1)
        :raises:
            PreconditionError: if the depots are not collinear in index order or `lambda_` is out of range
        """
        if not 0.5 < lambda_ < 1.0:
            raise PreconditionError('Lambda must be in (1/2, 1), not {}.'.format(lambda_))
        if min(lambda_ - 0.5, 1.0 - lambda_) < 0.01:
            log.warning('Lambda %g is at the edge of (1/2, 1); level disks degenerate.', lambda_)
        if not is_collinear(depot_config.space, depot_config.depots):
            raise PreconditionError('Level partition needs depots on a line in index order: '
                                    'd(x_i, x_j) + d(x_j, x_k) = d(x_i, x_k) for all i < j < k.')

        m = depot_config.m
        k = 0
        while 2 ** k + 1 < m:
            k += 1

        self.depot_config = depot_config
        self.lambda_ = lambda_
        self.k = k
        self.size = 2 ** k + 1
        # Padding copies of the last real depot fill indices m..2^k.
        self.nodes = [depot_config.depots[min(i, m - 1)] for i in range(self.size)]
        self.duplicate_map = {i: m - 1 for i in range(m, self.size)}

        self.levels: List[List[int]] = []
        for level in range(k):
            step = 2 ** level
            self.levels.append([step * (2 * t + 1) for t in range(2 ** (k - level - 1))])
        self.levels.append([2 ** k])
        self.levels.append([0])
        self.level_of = {i: level for level, indices in enumerate(self.levels) for i in indices}

        self.disks: Dict[int, List[Disk]] = {i: self._disks(i) for i in range(self.size)}
        log.debug('Level table: k=%d, %d padding copies, levels %s', k, len(self.duplicate_map), self.levels)

    def _distance(self, i: int, j: int) -> float:
        return self.depot_config.space.dist(self.nodes[i], self.nodes[j])

    def _disks(self, i: int) -> List[Disk]:
        if i == 0:
            return []
        if i == 2 ** self.k:
            return [(i, self.lambda_ * self._distance(0, i))]
        step = 2 ** self.level_of[i]
        left, right = i - step, i + step
        return [
            (left, self._distance(left, i) + self.lambda_ * self._distance(right, i)),
            (right, self._distance(right, i) + self.lambda_ * self._distance(left, i)),
        ]

    def server_of(self, index: int) -> int:
        """0-based real server of a construction index."""
        return self.duplicate_map.get(index, index)

    def __str__(self):
        return 'k={}, lambda={:g}, levels={}'.format(self.k, self.lambda_, self.levels)

    def __repr__(self):
        return '<LevelTable {}>'.format(self.__str__())


class LevelPartition(PartitionScheme):
    kind = 'level'

    def __init__(self, depot_config: DepotConfig, *, lambda_: float = LAMBDA):
        """Level partition of collinear depots.

        A point belongs to the first index i, scanning levels from 0 upwards and indices increasingly
        within a level, whose region tau_i contains it. tau_0 is the whole space, so the scan always ends.
        """
        super().__init__(depot_config)
        self.table = LevelTable(depot_config, lambda_)

    def in_tau(self, index: int, p: Point) -> bool:
        """Closed-disk membership of `p` in tau_index."""
        space = self.space
        return all(
            space.dist(p, self.table.nodes[center]) <= radius + TOLERANCE
            for center, radius in self.table.disks[index]
        )

    def level_index(self, p: Point) -> int:
        """0-based construction index (padding copies included) of the region containing `p`."""
        self.space.ensure_contains(p)
        for indices in self.table.levels:
            for i in indices:
                if self.in_tau(i, p):
                    return i
        raise AssertionError('tau_0 covers the whole space')

    def level_regions(self) -> Dict[int, List[int]]:
        """Indices of every level."""
        return {level: list(indices) for level, indices in enumerate(self.table.levels)}

    def _assign(self, p: Point) -> int:
        return self.table.server_of(self.level_index(p)) + 1


def level_build(depot_config: DepotConfig, lambda_: float = LAMBDA) -> LevelTable:
    return LevelTable(depot_config, lambda_)


def level_assign(scheme: LevelPartition, p: Point) -> int:
    return scheme.assign(p)
