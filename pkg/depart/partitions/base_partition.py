from abc import ABC, abstractmethod
from typing import List, Tuple

from depart.instance import DepotConfig, OfflineInstance
from depart.metric import Point


class PartitionScheme(ABC):
    kind: str

    def __init__(self, depot_config: DepotConfig):
        """Static partition of the metric space into one region per server.

        The region of a point depends on the depot locations only, never on the requests.
        """
        self.depot_config = depot_config

    @property
    def m(self) -> int:
        return self.depot_config.m

    @property
    def space(self):
        return self.depot_config.space

    def assign(self, p: Point) -> int:
        """1-based server whose region contains `p`."""
        self.space.ensure_contains(p)
        return self._assign(p)

    @abstractmethod
    def _assign(self, p: Point) -> int:
        pass

    def assignment(self, instance: OfflineInstance) -> Tuple[int, ...]:
        """1-based server of every request of `instance`, in request order."""
        self._ensure_same_depots(instance)
        return tuple(self.assign(p) for p in instance.requests)

    def assign_all(self, instance: OfflineInstance) -> List[List[Point]]:
        """Request sets S_1, ..., S_m (`result[0]` is S_1). Every request lands in exactly one set."""
        sets: List[List[Point]] = [[] for _ in range(self.m)]
        for p, server in zip(instance.requests, self.assignment(instance)):
            sets[server - 1].append(p)
        return sets

    def _ensure_same_depots(self, instance):
        if instance.depot_config != self.depot_config:
            raise ValueError('The partition was built for different depots than the ones of {}.'.format(instance))

    def __str__(self):
        return '{} partition of {}'.format(self.kind, self.depot_config)

    def __repr__(self):
        return '<{} {}>'.format(self.__class__.__name__, self.__str__())


def assign_all(scheme: PartitionScheme, instance: OfflineInstance) -> List[List[Point]]:
    return scheme.assign_all(instance)
