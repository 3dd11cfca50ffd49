import logging
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import CapacityError
from .metric import MetricSpace, Point
from .tour import Tour
from .util.numeric_util import TOLERANCE

log = logging.getLogger(__name__)

EXACT_CAP = 16
TWO_OPT_MAX_SWEEPS = 10 ** 4


class Oracle:
    """Tour oracles.

    * `EXACT` - Held-Karp dynamic program, optimal, limited to `exact_cap` requests.
    * `HEURISTIC` - nearest neighbor followed by 2-opt, any size.
    """

    EXACT = 'exact'
    HEURISTIC = 'heuristic'

    ALL = (EXACT, HEURISTIC)


def tsp_exact(space: MetricSpace, depot: Point, requests: Sequence[Point], *, exact_cap: int = EXACT_CAP) -> Tour:
    """Shortest depot-anchored tour over `requests`.

    Ties between optimal orders are broken toward the lexicographically smallest order.

    :raises:
        CapacityError: if there are more than `exact_cap` requests
    """
    requests = list(requests)
    n = len(requests)
    if n > exact_cap:
        raise CapacityError(
            'Exact TSP is capped at {} requests, got {}. Use the heuristic oracle for larger sets.'.format(
                exact_cap, n),
            limit='exact_cap', value=n, allowed=exact_cap
        )
    if n == 0:
        return Tour(depot, requests, (), 0.0)

    d = space.distance_matrix(requests)
    to_depot = space.distance_matrix(requests, [depot])[:, 0]

    full = (1 << n) - 1
    masks = np.arange(1 << n)
    bits = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)

    # rest[S, j]: shortest path from request j through every request of S, then back to the depot.
    rest = np.empty((1 << n, n))
    rest[0] = to_depot
    for mask in range(1, 1 << n):
        ks = np.flatnonzero(bits[mask])
        tails = rest[mask ^ (1 << ks), ks]
        rest[mask] = np.min(d[:, ks] + tails[None, :], axis=1)

    best = min(to_depot[j] + rest[full ^ (1 << j), j] for j in range(n))

    order = []
    remaining, current, spent = full, None, 0.0
    slack = TOLERANCE * max(1.0, best)
    while remaining:
        for j in np.flatnonzero(bits[remaining]):
            step = to_depot[j] if current is None else d[current, j]
            if spent + step + rest[remaining ^ (1 << j), j] <= best + slack:
                break
        order.append(int(j))
        spent += step
        current = j
        remaining ^= 1 << j

    return Tour(depot, requests, order, _route_length(d, to_depot, order))


def tsp_brute_force(space: MetricSpace, depot: Point, requests: Sequence[Point]) -> Tour:
    """Full permutation enumeration with the same tie rule as :py:func:`tsp_exact`. Reference oracle for tests."""
    requests = list(requests)
    if not requests:
        return Tour(depot, requests, (), 0.0)
    d = space.distance_matrix(requests)
    to_depot = space.distance_matrix(requests, [depot])[:, 0]

    best_order, best_length = None, np.inf
    for order in permutations(range(len(requests))):
        length = _route_length(d, to_depot, order)
        if length < best_length - TOLERANCE:
            best_order, best_length = order, length
    return Tour(depot, requests, best_order, best_length)


def tsp_heuristic(
        space: MetricSpace,
        depot: Point,
        requests: Sequence[Point],
        *,
        max_sweeps: int = TWO_OPT_MAX_SWEEPS
) -> Tour:
    """Nearest neighbor tour improved by first-improvement 2-opt sweeps until no move improves it."""
    requests = list(requests)
    n = len(requests)
    if n == 0:
        return Tour(depot, requests, (), 0.0)

    # Node 0 is the depot, node i + 1 is request i.
    d = space.distance_matrix([depot] + requests)

    route = [0]
    unvisited = list(range(1, n + 1))
    while unvisited:
        nearest = min(unvisited, key=lambda node: (d[route[-1], node], node))
        unvisited.remove(nearest)
        route.append(nearest)
    route.append(0)

    sweeps = 0
    improved = True
    while improved and sweeps < max_sweeps:
        improved = False
        sweeps += 1
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                a, b, c, e = route[i - 1], route[i], route[j], route[j + 1]
                if d[a, c] + d[b, e] - d[a, b] - d[c, e] < -TOLERANCE:
                    route[i:j + 1] = route[i:j + 1][::-1]
                    improved = True
    if improved:
        log.warning('2-opt stopped after %d sweeps without reaching a local optimum.', max_sweeps)
    log.debug('2-opt finished after %d sweeps on %d requests.', sweeps, n)

    order = [node - 1 for node in route[1:-1]]
    return Tour(depot, requests, order, _route_length(d[1:, 1:], d[1:, 0], order))


def tour_length(space: MetricSpace, tour: Tour) -> float:
    """Recomputes the length of `tour` from scratch.

    :raises:
        ValueError: if the order is not a permutation of the tour's requests
    """
    if sorted(tour.order) != list(range(len(tour.requests))):
        raise ValueError('Tour order {} is not a permutation of {} requests.'.format(tour.order, len(tour.requests)))
    if not tour.order:
        return 0.0
    stops = [tour.depot] + tour.stops + [tour.depot]
    return float(sum(space.dist(p, q) for p, q in zip(stops, stops[1:])))


def solve_tour(
        space: MetricSpace,
        depot: Point,
        requests: Sequence[Point],
        oracle: str = Oracle.EXACT,
        *,
        exact_cap: int = EXACT_CAP,
        max_sweeps: int = TWO_OPT_MAX_SWEEPS
) -> Tour:
    if oracle == Oracle.EXACT:
        return tsp_exact(space, depot, requests, exact_cap=exact_cap)
    elif oracle == Oracle.HEURISTIC:
        return tsp_heuristic(space, depot, requests, max_sweeps=max_sweeps)
    raise ValueError('Unknown oracle {!r}. Possible values: {}.'.format(oracle, ', '.join(Oracle.ALL)))


def _route_length(d, to_depot, order) -> float:
    if len(order) == 0:
        return 0.0
    length = to_depot[order[0]] + to_depot[order[-1]]
    for a, b in zip(order, order[1:]):
        length += d[a, b]
    return float(length)
