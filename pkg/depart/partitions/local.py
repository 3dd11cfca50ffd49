from depart.errors import PreconditionError
from depart.instance import DepotConfig
from depart.metric import Point
from .base_partition import PartitionScheme

RADIUS_DIVISOR = 4.0


class LocalPartition(PartitionScheme):
    kind = 'local'

    def __init__(self, depot_config: DepotConfig, *, radius_divisor: float = RADIUS_DIVISOR):
        """Open balls of radius (min pairwise depot distance) / 4 around depots 1..m-1; everything else
        belongs to server m.

        :param depot_config:
                At least two depots
        :param radius_divisor:
                Divisor of the minimum pairwise depot distance
        """
        if depot_config.m < 2:
            raise PreconditionError('Local partition needs at least 2 depots, got {}.'.format(depot_config.m))
        if radius_divisor <= 0:
            raise PreconditionError('Radius divisor must be positive, not {}.'.format(radius_divisor))
        super().__init__(depot_config)
        self.radius = depot_config.min_distance() / radius_divisor

    def _assign(self, p: Point) -> int:
        distances = self.space.distance_matrix([p], self.depot_config.depots[:-1])[0]
        for i, distance in enumerate(distances, start=1):
            # Strict, no tolerance: a point exactly on the sphere is outside the ball.
            if distance < self.radius:
                return i
        return self.m

    def in_ball(self, server: int, p: Point) -> bool:
        return server < self.m and self.space.dist(p, self.depot_config.depot(server)) < self.radius


def local_assign(scheme: LocalPartition, p: Point) -> int:
    return scheme.assign(p)
