import logging
from typing import List

from depart.errors import UnsupportedOperationError
from depart.instance import OnlineInstance
from depart.partitions import PartitionScheme
from depart.reports import CompetitiveCheck, OnlineCostReport, assignment_sets
from depart.timeline import Segment, ServerTimeline
from depart.tsp import Oracle
from depart.util.numeric_util import TOLERANCE
from .offline_service import OfflineEvaluationService

log = logging.getLogger(__name__)


class OnlineSimulationService(OfflineEvaluationService):
    """Distributed online algorithm: on every release in its region a server drops its plan, returns to its depot
    and tours every request of its region released so far."""

    def run_doa(self, scheme: PartitionScheme, instance: OnlineInstance) -> OnlineCostReport:
        """Simulates the distributed online algorithm.

        Servers act independently, each one only on the requests of its own region. Completion of a request
        is its first arrival on a planned tour; points passed while returning to the depot are not served.

        :param scheme:
                Partition scheme built on the depots of `instance`
        :param instance:
                Online instance in a geodesic space
        :raises:
            UnsupportedOperationError: if the space has no geodesics (explicit matrix)
            CapacityError: if a tour exceeds the exact cap
        """
        space = instance.space
        if not space.is_geodesic:
            raise UnsupportedOperationError('Online simulation needs a geodesic space, not {}.'.format(space))

        locations = instance.locations_list
        release_dates = instance.release_dates
        serving_server = scheme.assignment(instance.locations())

        timelines: List[ServerTimeline] = []
        completion_times = [0.0] * instance.n
        return_times = []
        for server, own in enumerate(assignment_sets(serving_server, instance.m), start=1):
            timeline = ServerTimeline(server, space, instance.depot_config.depot(server))
            for t in sorted(set(release_dates[j] for j in own)):
                self._replan(timeline, t, [j for j in own if release_dates[j] <= t], locations)

            for j in own:
                completion_times[j] = min(s.end_time for s in timeline.segments if j in s.served)
            own_completion = max((completion_times[j] for j in own), default=None)
            return_times.append(0.0 if own_completion is None else timeline.first_depot_time(own_completion))
            timelines.append(timeline)
            log.debug('DOA %s', timeline)

        last_completion = max(completion_times, default=0.0)
        per_server = [timeline.first_depot_time(last_completion) for timeline in timelines]
        return OnlineCostReport(scheme=scheme.kind, completion_times=completion_times, per_server=per_server,
                                return_times=return_times, timelines=timelines, serving_server=serving_server)

    def _replan(self, timeline: ServerTimeline, t: float, released: List[int], locations):
        space, depot = timeline.space, timeline.depot
        position = timeline.truncate(t)
        now = t
        if space.dist(position, depot) > TOLERANCE:
            now = t + space.dist(position, depot)
            timeline.append(Segment(t, now, position, depot))
        else:
            position = depot

        tour = self._tour(space, depot, [locations[j] for j in released], Oracle.EXACT)
        log.debug('Server %d replans at %g from %s over %d requests', timeline.server, t, position, len(released))
        current = depot
        for stop in tour.order:
            target = locations[released[stop]]
            arrival = now + space.dist(current, target)
            timeline.append(Segment(now, arrival, current, target, served=(released[stop],)))
            current, now = target, arrival
        if space.dist(current, depot) > 0:
            timeline.append(Segment(now, now + space.dist(current, depot), current, depot))

    def opt_online_lower_bound(self, instance: OnlineInstance) -> float:
        """max(m * r_n, OPT(locations)), a lower bound on the optimal online cost.

        :raises:
            CapacityError: if OPT of the locations is out of the configured limits
        """
        if instance.n == 0:
            return 0.0
        return max(instance.m * instance.last_release, self.opt_offline(instance.locations()).total)

    def check_theorem1(self, scheme: PartitionScheme, instance: OnlineInstance) -> CompetitiveCheck:
        """Checks the reduction of the online cost to the offline partition cost on `instance`.

        See :py:class:`~depart.reports.CompetitiveCheck` for the checked inequalities.
        """
        report = self.run_doa(scheme, instance)
        dis = self.dis_cost(scheme, instance.locations(), Oracle.EXACT)
        return CompetitiveCheck(
            scheme=scheme.kind,
            doa_total=report.total,
            last_release=instance.last_release,
            m=instance.m,
            per_server_dis=dis.per_server,
            return_times=report.return_times,
            lower_bound=self.opt_online_lower_bound(instance)
        )
