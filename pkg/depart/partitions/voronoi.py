import numpy as np

from depart.metric import Point
from depart.util.numeric_util import TOLERANCE
from .base_partition import PartitionScheme


class VoronoiPartition(PartitionScheme):
    """Every point belongs to its nearest depot; distances within the tolerance count as ties,
    which go to the lowest server index."""

    kind = 'voronoi'

    def _assign(self, p: Point) -> int:
        distances = self.space.distance_matrix([p], self.depot_config.depots)[0]
        return int(np.flatnonzero(distances <= distances.min() + TOLERANCE)[0]) + 1


def voronoi_assign(scheme: VoronoiPartition, p: Point) -> int:
    return scheme.assign(p)
