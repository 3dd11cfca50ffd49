from depart.instance import DepotConfig
from .base_partition import PartitionScheme, assign_all
from .level import LAMBDA, LevelPartition, LevelTable, level_assign, level_build
from .local import RADIUS_DIVISOR, LocalPartition, local_assign
from .voronoi import VoronoiPartition, voronoi_assign

__all__ = [
    'PartitionKind', 'PartitionScheme', 'VoronoiPartition', 'LevelPartition', 'LevelTable', 'LocalPartition',
    'build_partition', 'assign_all', 'voronoi_assign', 'level_build', 'level_assign', 'local_assign',
]


class PartitionKind:
    """Static partition schemes.

    * `VORONOI` - nearest depot, for any depot configuration.
    * `LEVEL` - dyadic disk intersections, for depots on a line.
    * `LOCAL` - small balls around depots 1..m-1, for bounded-ratio depot configurations.
    """

    VORONOI = 'voronoi'
    LEVEL = 'level'
    LOCAL = 'local'

    ALL = (VORONOI, LEVEL, LOCAL)


def build_partition(
        kind: str,
        depot_config: DepotConfig,
        *,
        lambda_: float = LAMBDA,
        radius_divisor: float = RADIUS_DIVISOR
) -> PartitionScheme:
    if kind == PartitionKind.VORONOI:
        return VoronoiPartition(depot_config)
    elif kind == PartitionKind.LEVEL:
        return LevelPartition(depot_config, lambda_=lambda_)
    elif kind == PartitionKind.LOCAL:
        return LocalPartition(depot_config, radius_divisor=radius_divisor)
    raise ValueError('Unknown partition scheme {!r}. Possible values: {}.'.format(kind, ', '.join(PartitionKind.ALL)))
