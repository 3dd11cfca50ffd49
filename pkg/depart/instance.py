from abc import ABC, abstractmethod
from typing import List, Optional, Sequence, Tuple

from .errors import ValidationError
from .metric import MetricSpace, Point, validate_metric
from .util.numeric_util import TOLERANCE


class DepotConfig:
    def __init__(self, space: MetricSpace, depots: Sequence[Point]):
        """Depot locations x_1, ..., x_m of the servers.

        Servers are numbered from 1 in every report and file; `depots[0]` is the depot of server 1.

        :param space:
                Ambient metric space. See :py:mod:`~depart.metric`
        :param depots:
                Pairwise distinct depot locations, at least one
        """
        depots = list(depots)
        if not depots:
            raise ValidationError('At least one depot is required.')
        for depot in depots:
            space.ensure_contains(depot)

        distances = space.distance_matrix(depots)
        for i in range(len(depots)):
            for j in range(i + 1, len(depots)):
                if distances[i, j] <= TOLERANCE:
                    raise ValidationError('Depots {} and {} coincide at {}.'.format(i + 1, j + 1, depots[i]))

        self.space = space
        self.depots = depots

    @property
    def m(self) -> int:
        return len(self.depots)

    def depot(self, server: int) -> Point:
        """Depot of `server` (1-based)."""
        if not 1 <= server <= self.m:
            raise IndexError('Server index must be in 1..{}, not {}.'.format(self.m, server))
        return self.depots[server - 1]

    def min_distance(self) -> float:
        """Minimum pairwise depot distance (0 if there is a single depot)."""
        return self._pairwise_extreme(min)

    def max_distance(self) -> float:
        return self._pairwise_extreme(max)

    def _pairwise_extreme(self, extreme) -> float:
        if self.m < 2:
            return 0.0
        d = self.space.distance_matrix(self.depots)
        return float(extreme(d[i, j] for i in range(self.m) for j in range(i + 1, self.m)))

    def __eq__(self, other):
        return (
                isinstance(other, DepotConfig)
                and self.space == other.space
                and self.depots == other.depots
        )

    def __str__(self):
        return '{} depots in {}'.format(self.m, self.space)

    def __repr__(self):
        return '<DepotConfig {}>'.format(self.__str__())


class Instance(ABC):
    def __init__(self, depot_config: DepotConfig, *, family: Optional[str] = None, name: Optional[str] = None):
        """Common part of offline and online instances.

        :param depot_config:
                Depot configuration. See :py:class:`~depart.instance.DepotConfig`
        :param family:
                Tag of the family the instance was generated from. See :py:class:`~depart.instance.InstanceFamily`
        :param name:
                Instance identifier used in reports
        """
        self.depot_config = depot_config
        self.family = family
        self.name = name

    @property
    def space(self) -> MetricSpace:
        return self.depot_config.space

    @property
    def m(self) -> int:
        return self.depot_config.m

    @property
    @abstractmethod
    def n(self) -> int:
        pass

    def _ensure_requests_in_space(self, locations: Sequence[Point]):
        for j, location in enumerate(locations, start=1):
            if not isinstance(location, Point) or not self.space.contains(location):
                raise ValidationError('Request {} ({!r}) does not belong to {}.'.format(j, location, self.space))


class OfflineInstance(Instance):
    def __init__(
            self,
            depot_config: DepotConfig,
            requests: Sequence[Point],
            *,
            family: Optional[str] = None,
            name: Optional[str] = None
    ):
        """Depots and the list of request locations l_1, ..., l_n (n may be 0)."""
        super().__init__(depot_config, family=family, name=name)
        self.requests = list(requests)
        self._ensure_requests_in_space(self.requests)

    @property
    def n(self) -> int:
        return len(self.requests)

    def without_request(self, j: int) -> 'OfflineInstance':
        """Copy of the instance with the request at 0-based position `j` removed."""
        return OfflineInstance(
            self.depot_config,
            self.requests[:j] + self.requests[j + 1:],
            family=self.family,
            name=self.name
        )

    def __eq__(self, other):
        return (
                isinstance(other, OfflineInstance)
                and self.depot_config == other.depot_config
                and self.requests == other.requests
                and self.family == other.family
        )

    def __str__(self):
        return '{} - m={}, n={}'.format(self.name or self.family or 'instance', self.m, self.n)

    def __repr__(self):
        return '<OfflineInstance {}>'.format(self.__str__())


class OnlineInstance(Instance):
    def __init__(
            self,
            depot_config: DepotConfig,
            requests: Sequence[Tuple[float, Point]],
            *,
            family: Optional[str] = None,
            name: Optional[str] = None
    ):
        """Depots and release-dated requests (r_j, l_j) with r_1 <= r_2 <= ... <= r_n.

        Requests with equal release dates keep their given order.
        """
        super().__init__(depot_config, family=family, name=name)
        self.requests = [(float(r), location) for r, location in requests]
        self._ensure_requests_in_space(self.locations_list)

        previous = 0.0
        for j, (release_date, _) in enumerate(self.requests, start=1):
            if release_date < 0:
                raise ValidationError('Release date of request {} is negative ({}).'.format(j, release_date))
            if release_date < previous:
                raise ValidationError('Release dates must be sorted: r_{} = {} < r_{} = {}.'
                                      .format(j, release_date, j - 1, previous))
            previous = release_date

    @property
    def n(self) -> int:
        return len(self.requests)

    @property
    def release_dates(self) -> List[float]:
        return [r for r, _ in self.requests]

    @property
    def locations_list(self) -> List[Point]:
        return [location for _, location in self.requests]

    @property
    def last_release(self) -> float:
        """r_n, or 0 for an empty instance."""
        return self.requests[-1][0] if self.requests else 0.0

    def locations(self) -> OfflineInstance:
        """Offline projection of the instance (release dates dropped)."""
        return OfflineInstance(self.depot_config, self.locations_list, family=self.family, name=self.name)

    def __eq__(self, other):
        return (
                isinstance(other, OnlineInstance)
                and self.depot_config == other.depot_config
                and self.requests == other.requests
                and self.family == other.family
        )

    def __str__(self):
        return '{} - m={}, n={}, r_n={:g}'.format(self.name or self.family or 'instance', self.m, self.n,
                                                  self.last_release)

    def __repr__(self):
        return '<OnlineInstance {}>'.format(self.__str__())


class InstanceFamily:
    """Instance families known to the generators.

    * `LINE_VORONOI` - depots (0, i), requests (k, j): Voronoi ratio tends to m as k grows.
    * `SIMPLEX` - depots e_i, requests eps * e_j: Voronoi ratio tends to m as eps shrinks.
    * `LOCAL_ADVERSARIAL` - line depots 0, 1, f + 1 and one request at 1.25: Local ratio 4f - 1.
    * `RANDOM_LINE` - collinear depots on the x-axis, requests in a surrounding strip.
    * `RANDOM_BOUNDED_RATIO` - depots with max/min pairwise distance ratio at most f.
    * `RANDOM_EXPLICIT` - shortest-path closure of a random weighted graph.
    * `RANDOM_LOCAL_INTERIOR` - bounded-ratio depots, all requests strictly inside the Local balls.
    """

    LINE_VORONOI = 'line_voronoi'
    SIMPLEX = 'simplex'
    LOCAL_ADVERSARIAL = 'local_adversarial'
    RANDOM_LINE = 'random_line'
    RANDOM_BOUNDED_RATIO = 'random_bounded_ratio'
    RANDOM_EXPLICIT = 'random_explicit'
    RANDOM_LOCAL_INTERIOR = 'random_local_interior'

    ALL = (LINE_VORONOI, SIMPLEX, LOCAL_ADVERSARIAL, RANDOM_LINE, RANDOM_BOUNDED_RATIO, RANDOM_EXPLICIT,
           RANDOM_LOCAL_INTERIOR)
    RANDOM = (RANDOM_LINE, RANDOM_BOUNDED_RATIO, RANDOM_EXPLICIT, RANDOM_LOCAL_INTERIOR)


class InstanceFamilyParams:
    def __init__(
            self,
            family: str,
            *,
            m: Optional[int] = None,
            n: Optional[int] = None,
            k: Optional[float] = None,
            eps: Optional[float] = None,
            f: Optional[float] = None,
            seed: Optional[int] = None
    ):
        """Parameters of an instance family. Only the ones the family uses need to be given.

        :param family:
                Family tag. See :py:class:`~depart.instance.InstanceFamily`
        :param m:
                Number of servers, at least 2
        :param n:
                Number of requests (random families)
        :param k:
                Horizontal offset of the requests (line_voronoi), positive
        :param eps:
                Request scale (simplex), in (0, 1)
        :param f:
                Depot distance ratio bound (local_adversarial, random_bounded_ratio, random_local_interior), >= 1
        :param seed:
                Seed of the random families
        """
        if family not in InstanceFamily.ALL:
            raise ValueError('Unknown instance family {!r}. Possible values: {}.'
                             .format(family, ', '.join(InstanceFamily.ALL)))
        if m is not None and (int(m) != m or m < 2):
            raise ValueError('"m" must be an integer >= 2, not {!r}.'.format(m))
        if n is not None and (int(n) != n or n < 0):
            raise ValueError('"n" must be a non-negative integer, not {!r}.'.format(n))
        if k is not None and not k > 0:
            raise ValueError('"k" must be positive, not {!r}.'.format(k))
        if eps is not None and not 0 < eps < 1:
            raise ValueError('"eps" must be in (0, 1), not {!r}.'.format(eps))
        if f is not None and not f >= 1:
            raise ValueError('"f" must be at least 1, not {!r}.'.format(f))

        self.family = family
        self.m = None if m is None else int(m)
        self.n = None if n is None else int(n)
        self.k = k
        self.eps = eps
        self.f = f
        self.seed = seed

    def require(self, *names: str):
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ValueError('Family {!r} requires parameter(s): {}.'.format(self.family, ', '.join(missing)))

    def replace(self, **changes) -> 'InstanceFamilyParams':
        values = dict(m=self.m, n=self.n, k=self.k, eps=self.eps, f=self.f, seed=self.seed)
        values.update(changes)
        return InstanceFamilyParams(self.family, **values)

    def __eq__(self, other):
        return isinstance(other, InstanceFamilyParams) and vars(self) == vars(other)

    def __str__(self):
        params = ', '.join('{}={}'.format(k, v) for k, v in vars(self).items() if k != 'family' and v is not None)
        return '{}({})'.format(self.family, params)

    def __repr__(self):
        return '<InstanceFamilyParams {}>'.format(self.__str__())


def validate_instance(instance: Instance) -> List[str]:
    """Problems that make `instance` unusable. Empty list means the instance is valid.

    Constructors already reject duplicate depots, foreign points and unsorted release dates,
    so this reports the metric-axiom violations of explicit spaces.
    """
    return [str(v) for v in validate_metric(instance.space).violations]
