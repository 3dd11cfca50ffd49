import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple

from depart.errors import CapacityError
from depart.instance import OfflineInstance
from depart.partitions import PartitionScheme, VoronoiPartition
from depart.reports import CostReport, OptResult, assignment_sets
from depart.tsp import Oracle, tsp_exact
from depart.util.numeric_util import TOLERANCE, leq, safe_ratio
from .base_service import BaseService

log = logging.getLogger(__name__)


class _AssignmentSearch:
    def __init__(self, instance: OfflineInstance, exact_cap: int):
        """Depth-first search over assignment vectors in lexicographic order.

        A branch is cut as soon as the tours of the requests assigned so far already cost at least the
        incumbent: a server's optimal tour never gets shorter when requests are added to it.
        """
        self.space = instance.space
        self.depots = instance.depot_config.depots
        self.requests = instance.requests
        self.m = instance.m
        self.n = instance.n
        self.exact_cap = exact_cap
        self.best_total = math.inf
        self.best_assignment: Optional[Tuple[int, ...]] = None
        self.scored = 0
        self._costs: Dict[Tuple[int, int], float] = {}

    def server_cost(self, server: int, mask: int) -> float:
        """Optimal tour length of 0-based `server` over the requests in bit set `mask`."""
        key = (server, mask)
        if key not in self._costs:
            subset = [p for j, p in enumerate(self.requests) if mask >> j & 1]
            self._costs[key] = tsp_exact(self.space, self.depots[server], subset, exact_cap=self.exact_cap).length
        return self._costs[key]

    def run(self, prefix: Tuple[int, ...] = ()) -> '_AssignmentSearch':
        """Searches every assignment that starts with the 1-based servers of `prefix`."""
        masks = [0] * self.m
        for j, server in enumerate(prefix):
            masks[server - 1] |= 1 << j
        costs = [self.server_cost(i, masks[i]) for i in range(self.m)]
        self._descend(len(prefix), masks, costs, list(prefix))
        return self

    def _descend(self, j: int, masks: List[int], costs: List[float], assignment: List[int]):
        total = sum(costs)
        if j == self.n:
            self.scored += 1
            if total < self.best_total - TOLERANCE:
                self.best_total, self.best_assignment = total, tuple(assignment)
            return
        if total >= self.best_total - TOLERANCE:
            return

        for i in range(self.m):
            previous_mask, previous_cost = masks[i], costs[i]
            masks[i] |= 1 << j
            costs[i] = self.server_cost(i, masks[i])
            assignment.append(i + 1)
            self._descend(j + 1, masks, costs, assignment)
            assignment.pop()
            masks[i], costs[i] = previous_mask, previous_cost


def _search_prefix(args) -> Tuple[float, Optional[Tuple[int, ...]], int]:
    instance, exact_cap, prefix = args
    search = _AssignmentSearch(instance, exact_cap).run(prefix)
    return search.best_total, search.best_assignment, search.scored


class OfflineEvaluationService(BaseService):
    """Offline costs: the partition cost of a scheme and the centralized optimum."""

    def dis_cost(self, scheme: PartitionScheme, instance: OfflineInstance, oracle: str = Oracle.EXACT) -> CostReport:
        """Total length of the tours every server makes over the requests in its region.

        :param scheme:
                Partition scheme built on the depots of `instance`
        :param instance:
                Offline instance
        :param oracle:
                Tour oracle. See :py:class:`~depart.tsp.Oracle`
        :raises:
            CapacityError: if the exact oracle is used and a region holds more than `exact_cap` requests
        """
        assignment = scheme.assignment(instance)
        tours = []
        for server, positions in enumerate(assignment_sets(assignment, instance.m), start=1):
            depot = instance.depot_config.depot(server)
            tours.append(self._tour(instance.space, depot, [instance.requests[j] for j in positions], oracle))
            log.debug('%s server %d: %d requests, tour %g', scheme.kind, server, len(positions), tours[-1].length)
        return CostReport(scheme=scheme.kind, oracle=oracle, tours=tours, assignment=assignment)

    def opt_offline(self, instance: OfflineInstance) -> OptResult:
        """Minimum total tour length over all assignments of requests to servers.

        Among optimal assignments the lexicographically smallest assignment vector is returned.

        :raises:
            CapacityError: if m^n exceeds `enumeration_budget` or n exceeds `exact_cap`
        """
        m, n = instance.m, instance.n
        if m ** n > self.limits.enumeration_budget:
            raise CapacityError(
                'Optimal assignment needs {}^{} assignments, over the budget of {}. '
                'Fall back to the lower bound 2 * max_j min_i d(x_i, l_j) = {:g}.'.format(
                    m, n, self.limits.enumeration_budget, self.opt_lower_bound(instance)),
                limit='enumeration_budget', value=m ** n, allowed=self.limits.enumeration_budget
            )
        if n > self.limits.exact_cap:
            raise CapacityError(
                'Optimal assignment may put all {} requests on one server, over the exact cap of {}. '
                'Fall back to the lower bound {:g}.'.format(n, self.limits.exact_cap, self.opt_lower_bound(instance)),
                limit='exact_cap', value=n, allowed=self.limits.exact_cap
            )

        workers = min(self.limits.workers, m)
        if workers > 1 and n > 0:
            tasks = [(instance, self.limits.exact_cap, (server,)) for server in range(1, m + 1)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_search_prefix, tasks))
        else:
            results = [_search_prefix((instance, self.limits.exact_cap, ()))]

        best_total, scored = math.inf, 0
        best_assignment: Tuple[int, ...] = ()
        for total, assignment, count in results:
            scored += count
            if assignment is not None and total < best_total - TOLERANCE:
                best_total, best_assignment = total, assignment

        tours = []
        for server, positions in enumerate(assignment_sets(best_assignment, m), start=1):
            requests = [instance.requests[j] for j in positions]
            tours.append(tsp_exact(instance.space, instance.depot_config.depot(server), requests,
                                   exact_cap=self.limits.exact_cap))
        result = OptResult(best_assignment=best_assignment, total=sum(t.length for t in tours), tours=tours,
                           enumerated_count=scored)
        log.debug('%s: %s', instance, result)
        return result

    def approx_ratio(self, scheme: PartitionScheme, instance: OfflineInstance) -> float:
        """Partition cost / optimum with exact tours. 0/0 is 1, x/0 is +inf.

        :raises:
            CapacityError: if OPT(I) is out of the configured limits
        """
        dis = self.dis_cost(scheme, instance, Oracle.EXACT).total
        opt = self.opt_offline(instance).total
        return safe_ratio(dis, opt)

    @staticmethod
    def opt_lower_bound(instance: OfflineInstance) -> float:
        """2 * max_j min_i d(x_i, l_j): some server has to make a round trip to every request."""
        if instance.n == 0:
            return 0.0
        d = instance.space.distance_matrix(instance.requests, instance.depot_config.depots)
        return float(2 * d.min(axis=1).max())

    def voronoi_server_bound(self, instance: OfflineInstance, opt: Optional[float] = None) -> bool:
        """Whether every single Voronoi tour is at most OPT(I).

        :param opt:
                OPT(I) if already known, computed otherwise
        """
        report = self.dis_cost(VoronoiPartition(instance.depot_config), instance, Oracle.EXACT)
        if opt is None:
            opt = self.opt_offline(instance).total
        return leq(report.max_server_cost, opt)
