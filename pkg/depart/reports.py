from typing import List, Optional, Sequence, Tuple

from .tour import Tour
from .util.numeric_util import leq, safe_ratio


class CostReport:
    def __init__(self, *, scheme: str, oracle: str, tours: Sequence[Tour], assignment: Sequence[int] = ()):
        """Partition cost of a scheme on an offline instance.

        :param scheme:
                Partition scheme kind. See :py:class:`~depart.partitions.PartitionKind`
        :param oracle:
                Tour oracle used. See :py:class:`~depart.tsp.Oracle`
        :param tours:
                Tour of every server, `tours[0]` belongs to server 1
        :param assignment:
                1-based server of every request, in request order
        """
        self.scheme = scheme
        self.oracle = oracle
        self.tours = list(tours)
        self.assignment = tuple(assignment)

    @property
    def per_server(self) -> List[float]:
        return [tour.length for tour in self.tours]

    @property
    def total(self) -> float:
        return float(sum(self.per_server))

    @property
    def max_server_cost(self) -> float:
        return max(self.per_server, default=0.0)

    def __str__(self):
        return '{} ({}): {:g} = {}'.format(self.scheme, self.oracle, self.total,
                                          ' + '.join('{:g}'.format(c) for c in self.per_server))

    def __repr__(self):
        return '<CostReport {}>'.format(self.__str__())


class OptResult:
    def __init__(self, *, best_assignment: Sequence[int], total: float, tours: Sequence[Tour],
                 enumerated_count: int):
        """Optimal centralized cost OPT(I).

        :param best_assignment:
                1-based server of every request in the optimal assignment
                (lexicographically smallest among optimal assignments)
        :param total:
                OPT(I)
        :param tours:
                Optimal tour of every server under `best_assignment`
        :param enumerated_count:
                Number of complete assignments that were scored (pruned branches are not counted)
        """
        self.best_assignment = tuple(best_assignment)
        self.total = float(total)
        self.tours = list(tours)
        self.enumerated_count = enumerated_count

    @property
    def per_server(self) -> List[float]:
        return [tour.length for tour in self.tours]

    def __str__(self):
        return 'OPT = {:g} with assignment {} ({} assignments scored)'.format(
            self.total, self.best_assignment, self.enumerated_count)

    def __repr__(self):
        return '<OptResult {}>'.format(self.__str__())


class OnlineCostReport:
    def __init__(
            self,
            *,
            scheme: str,
            completion_times: Sequence[float],
            per_server: Sequence[float],
            return_times: Sequence[float],
            timelines: Optional[Sequence] = None,
            serving_server: Sequence[int] = ()
    ):
        """Cost of the distributed online algorithm on an online instance.

        :param scheme:
                Partition scheme kind
        :param completion_times:
                c_j of every request, in request order
        :param per_server:
                ALG_i of every server: first time at its depot once every request of the instance is completed.
                `per_server[0]` belongs to server 1
        :param return_times:
                First time every server is at its depot once its own requests are completed
                (0 for a server without requests). This is the per-server quantity the reduction to the
                offline problem bounds
        :param timelines:
                :py:class:`~depart.timeline.ServerTimeline` of every server
        :param serving_server:
                1-based server responsible for every request
        """
        self.scheme = scheme
        self.completion_times = list(completion_times)
        self.per_server = list(per_server)
        self.return_times = list(return_times)
        self.timelines = list(timelines or [])
        self.serving_server = tuple(serving_server)

    @property
    def total(self) -> float:
        """DOA(I) = sum of ALG_i."""
        return float(sum(self.per_server))

    @property
    def makespan(self) -> float:
        return max(self.completion_times, default=0.0)

    def __str__(self):
        return '{}: DOA = {:g}'.format(self.scheme, self.total)

    def __repr__(self):
        return '<OnlineCostReport {}>'.format(self.__str__())


class CompetitiveCheck:
    def __init__(
            self,
            *,
            scheme: str,
            doa_total: float,
            last_release: float,
            m: int,
            per_server_dis: Sequence[float],
            return_times: Sequence[float],
            lower_bound: float
    ):
        """Reduction of the online problem to the offline one, checked on a single instance.

        Per server the check is return_time_i <= 2 r_n + (tour of server i over its region); summed over the
        servers this is 2 m r_n + partition cost. The aggregate DOA <= 2 m r_n + partition cost is reported
        separately as `aggregate_holds`: idle servers pay max_j c_j in DOA(I), which that sum does not cover.

        :param doa_total:
                DOA(I)
        :param last_release:
                r_n
        :param per_server_dis:
                Partition tour length of every server over the request locations
        :param return_times:
                Own-request return time of every server
        :param lower_bound:
                Lower bound on the online optimum, max(m r_n, OPT(locations))
        """
        self.scheme = scheme
        self.doa_total = doa_total
        self.last_release = last_release
        self.m = m
        self.per_server_dis = list(per_server_dis)
        self.return_times = list(return_times)
        self.lower_bound = lower_bound

    @property
    def release_term(self) -> float:
        return 2 * self.m * self.last_release

    @property
    def dis(self) -> float:
        return float(sum(self.per_server_dis))

    @property
    def rhs_bound(self) -> float:
        return self.release_term + self.dis

    @property
    def violating_servers(self) -> List[int]:
        """1-based servers whose return time exceeds 2 r_n plus their partition tour length."""
        return [
            i for i, (returned, tsp) in enumerate(zip(self.return_times, self.per_server_dis), start=1)
            if not leq(returned, 2 * self.last_release + tsp)
        ]

    @property
    def holds(self) -> bool:
        return not self.violating_servers

    @property
    def aggregate_holds(self) -> bool:
        return leq(self.doa_total, self.rhs_bound)

    @property
    def realized_ratio(self) -> float:
        """Upper estimate of the realized competitive ratio DOA / online OPT."""
        return safe_ratio(self.doa_total, self.lower_bound)

    def __str__(self):
        return '{}: DOA = {:g}, bound = {:g}, {}'.format(self.scheme, self.doa_total, self.rhs_bound,
                                                        'holds' if self.holds else 'violated')

    def __repr__(self):
        return '<CompetitiveCheck {}>'.format(self.__str__())


def assignment_sets(assignment: Sequence[int], m: int) -> List[Tuple[int, ...]]:
    """0-based request positions of every server's set S_1..S_m for a 1-based assignment vector."""
    sets: List[List[int]] = [[] for _ in range(m)]
    for j, server in enumerate(assignment):
        sets[server - 1].append(j)
    return [tuple(s) for s in sets]
