from typing import List, Sequence

from .metric import MetricSpace, Point
from .util.numeric_util import TOLERANCE, is_close


class Segment:
    def __init__(self, start_time: float, end_time: float, start: Point, end: Point, served: Sequence[int] = ()):
        """Straight unit-speed move of a server.

        :param start_time:
                Departure time
        :param end_time:
                Arrival time, `start_time` + d(start, end)
        :param start:
                Departure point
        :param end:
                Arrival point
        :param served:
                0-based positions of the requests first completed on arrival at `end`
        """
        self.start_time = start_time
        self.end_time = end_time
        self.start = start
        self.end = end
        self.served = tuple(served)

    @property
    def duration(self) -> float:
        return self.end_time - self.start_time

    def __str__(self):
        return '[{:g}, {:g}] {} -> {}'.format(self.start_time, self.end_time, self.start, self.end)

    def __repr__(self):
        return '<Segment {}>'.format(self.__str__())


class ServerTimeline:
    def __init__(self, server: int, space: MetricSpace, depot: Point):
        """Trajectory l(i, t) of one server: a sequence of unit-speed segments.

        Between segments (and before the first and after the last one) the server rests where it is.
        At t = 0 the server is at its depot.

        :param server:
                1-based server index
        :param space:
                Geodesic metric space the server moves in
        :param depot:
                Depot of the server
        """
        self.server = server
        self.space = space
        self.depot = depot
        self.segments: List[Segment] = []

    @property
    def end_time(self) -> float:
        return self.segments[-1].end_time if self.segments else 0.0

    @property
    def last_position(self) -> Point:
        return self.segments[-1].end if self.segments else self.depot

    def append(self, segment: Segment):
        if not is_close(segment.duration, self.space.dist(segment.start, segment.end)):
            raise ValueError('Segment {} does not move at unit speed.'.format(segment))
        if segment.start_time < self.end_time - TOLERANCE:
            raise ValueError('Segment {} starts before the previous one ends at {:g}.'.format(segment, self.end_time))
        if segment.start != self.last_position and not is_close(
                self.space.dist(segment.start, self.last_position), 0.0):
            raise ValueError('Segment {} does not start where the server is ({}).'.format(segment, self.last_position))
        self.segments.append(segment)

    def truncate(self, t: float) -> Point:
        """Drops everything planned after time `t` and returns the position at `t`."""
        position = self.position_at(t)
        kept = []
        for segment in self.segments:
            if segment.end_time <= t:
                kept.append(segment)
            elif segment.start_time < t:
                kept.append(Segment(segment.start_time, t, segment.start, position))
        self.segments = kept
        return position

    def position_at(self, t: float) -> Point:
        position = self.depot
        for segment in self.segments:
            if t < segment.start_time:
                return position
            if t <= segment.end_time:
                if segment.duration <= 0:
                    return segment.end
                fraction = min(1.0, (t - segment.start_time) / segment.duration)
                return self.space.interpolate(segment.start, segment.end, fraction)
            position = segment.end
        return position

    def first_depot_time(self, t0: float) -> float:
        """Earliest time t >= t0 at which the server is at its depot."""
        if self.space.dist(self.position_at(t0), self.depot) <= TOLERANCE:
            return t0
        for segment in self.segments:
            if segment.end_time < t0:
                continue
            to_depot = self.space.dist(segment.start, self.depot)
            through = to_depot + self.space.dist(self.depot, segment.end)
            if is_close(through, self.space.dist(segment.start, segment.end)):
                passing = segment.start_time + to_depot
                if passing >= t0 - TOLERANCE:
                    return max(passing, t0)
        return max(self.end_time, t0)

    def __str__(self):
        return 'server {}: {} segments until {:g}'.format(self.server, len(self.segments), self.end_time)

    def __repr__(self):
        return '<ServerTimeline {}>'.format(self.__str__())
