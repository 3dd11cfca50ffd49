from typing import List, Sequence

from .metric import Point


class Tour:
    def __init__(self, depot: Point, requests: Sequence[Point], order: Sequence[int], length: float):
        """Closed route of a single server that starts and ends at its depot.

        :param depot:
                Depot the tour is anchored at
        :param requests:
                Request locations the tour was computed for
        :param order:
                Visit order as 0-based positions into `requests`; a permutation of `range(len(requests))`
        :param length:
                d(depot, first) + sum of consecutive distances + d(last, depot); 0 for an empty tour
        """
        self.depot = depot
        self.requests = list(requests)
        self.order = tuple(int(i) for i in order)
        self.length = float(length)

    @property
    def stops(self) -> List[Point]:
        """Request locations in visit order."""
        return [self.requests[i] for i in self.order]

    def reversed(self) -> 'Tour':
        return Tour(self.depot, self.requests, self.order[::-1], self.length)

    def __len__(self):
        return len(self.order)

    def __eq__(self, other):
        return (
                isinstance(other, Tour)
                and self.depot == other.depot
                and self.requests == other.requests
                and self.order == other.order
                and self.length == other.length
        )

    def __str__(self):
        return '{} -> {} -> {}: {:g}'.format(self.depot, ' -> '.join(map(str, self.stops)) or '.', self.depot,
                                             self.length)

    def __repr__(self):
        return '<Tour {}>'.format(self.__str__())
