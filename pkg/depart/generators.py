import logging

import numpy as np

from .errors import GenerationError
from .instance import DepotConfig, InstanceFamily, InstanceFamilyParams, OfflineInstance, OnlineInstance
from .metric import EuclideanSpace, LineSpace, metric_closure
from .util.numeric_util import TOLERANCE

log = logging.getLogger(__name__)

MAX_ATTEMPTS = 1000
MIN_DEPOT_GAP = 1e-3
# Requests of random_local_interior stay this fraction inside the open Local balls.
INTERIOR_MARGIN = 1e-6


def gen_line_voronoi(m: int, k: float) -> OfflineInstance:
    """Depots (0, i) and requests (k, j) for i, j = 1..m in the plane."""
    params = InstanceFamilyParams(InstanceFamily.LINE_VORONOI, m=m, k=k)
    space = EuclideanSpace(2)
    depots = space.points([(0.0, i) for i in range(1, params.m + 1)])
    requests = space.points([(params.k, j) for j in range(1, params.m + 1)])
    return OfflineInstance(DepotConfig(space, depots), requests, family=params.family,
                           name='line_voronoi-m{}-k{:g}'.format(m, k))


def gen_simplex(m: int, eps: float) -> OfflineInstance:
    """Depots e_i and requests eps * e_j in m-dimensional Euclidean space."""
    params = InstanceFamilyParams(InstanceFamily.SIMPLEX, m=m, eps=eps)
    space = EuclideanSpace(params.m)
    basis = np.eye(params.m)
    depots = space.points(basis)
    requests = space.points(params.eps * basis)
    return OfflineInstance(DepotConfig(space, depots), requests, family=params.family,
                           name='simplex-m{}-eps{:g}'.format(m, eps))


def gen_local_adversarial(f: float) -> OfflineInstance:
    """Line depots 0, 1, f + 1 and a single request at 1.25, just outside the Local ball of depot 2."""
    params = InstanceFamilyParams(InstanceFamily.LOCAL_ADVERSARIAL, f=f)
    space = LineSpace()
    depots = space.points([0.0, 1.0, params.f + 1.0])
    requests = space.points([1.25])
    return OfflineInstance(DepotConfig(space, depots), requests, family=params.family,
                           name='local_adversarial-f{:g}'.format(f))


def gen_random(params: InstanceFamilyParams) -> OfflineInstance:
    """Random instance of one of the random families. Deterministic for a fixed seed.

    :raises:
        GenerationError: if the family constraint could not be met within the rejection budget
    """
    generators = {
        InstanceFamily.RANDOM_LINE: _gen_random_line,
        InstanceFamily.RANDOM_BOUNDED_RATIO: _gen_random_bounded_ratio,
        InstanceFamily.RANDOM_EXPLICIT: _gen_random_explicit,
        InstanceFamily.RANDOM_LOCAL_INTERIOR: _gen_random_local_interior,
    }
    if params.family not in generators:
        raise ValueError('{!r} is not a random family. Possible values: {}.'
                         .format(params.family, ', '.join(generators)))
    params.require('m', 'n', 'seed')
    rng = np.random.default_rng(params.seed)
    instance = generators[params.family](params, rng)
    instance.name = '{}-m{}-n{}-seed{}'.format(params.family, params.m, params.n, params.seed)
    if params.f is not None:
        instance.name += '-f{:g}'.format(params.f)
    log.debug('Generated %s', instance)
    return instance


def gen_random_online(params: InstanceFamilyParams, max_release: float = 10.0) -> OnlineInstance:
    """Random family locations with sorted uniform release dates in [0, `max_release`]."""
    if max_release < 0:
        raise ValueError('"max_release" must be non-negative, not {}.'.format(max_release))
    locations = gen_random(params)
    rng = np.random.default_rng((params.seed, 1))
    release_dates = np.sort(rng.uniform(0.0, max_release, size=locations.n))
    return OnlineInstance(
        locations.depot_config,
        list(zip(release_dates.tolist(), locations.requests)),
        family=locations.family,
        name=locations.name + '-online'
    )


def _attempts(family: str):
    for attempt in range(MAX_ATTEMPTS):
        if attempt == MAX_ATTEMPTS // 2:
            log.warning('Family %s needed %d attempts so far to satisfy its constraint.', family, attempt)
        yield attempt
    raise GenerationError('Could not generate a {} instance within {} attempts.'.format(family, MAX_ATTEMPTS))


def _gen_random_line(params: InstanceFamilyParams, rng) -> OfflineInstance:
    for _ in _attempts(params.family):
        xs = np.sort(rng.uniform(0.0, 10.0, size=params.m))
        if np.all(np.diff(xs) >= MIN_DEPOT_GAP):
            break

    space = EuclideanSpace(2)
    depots = space.points([(x, 0.0) for x in xs])
    request_xs = rng.uniform(xs[0] - 1.0, xs[-1] + 1.0, size=params.n)
    request_ys = rng.uniform(-1.0, 1.0, size=params.n)
    requests = space.points(np.column_stack([request_xs, request_ys]))
    return OfflineInstance(DepotConfig(space, depots), requests, family=params.family)


def _bounded_ratio_depots(params: InstanceFamilyParams, rng) -> np.ndarray:
    """Perturbed regular simplex e_1..e_m; exact simplex when f = 1."""
    params.require('f')
    spread = 0.25 * (1.0 - 1.0 / params.f)
    basis = np.eye(params.m)
    for _ in _attempts(params.family):
        coords = basis + spread * rng.normal(size=(params.m, params.m))
        diff = coords[:, None, :] - coords[None, :, :]
        d = np.sqrt(np.sum(diff * diff, axis=-1))[np.triu_indices(params.m, k=1)]
        if d.min() > MIN_DEPOT_GAP and d.max() <= params.f * d.min() + TOLERANCE:
            return coords


def _gen_random_bounded_ratio(params: InstanceFamilyParams, rng) -> OfflineInstance:
    coords = _bounded_ratio_depots(params, rng)
    space = EuclideanSpace(params.m)
    lo, hi = coords.min() - 0.5, coords.max() + 0.5
    requests = space.points(rng.uniform(lo, hi, size=(params.n, params.m)))
    return OfflineInstance(DepotConfig(space, space.points(coords)), requests, family=params.family)


def _gen_random_local_interior(params: InstanceFamilyParams, rng) -> OfflineInstance:
    coords = _bounded_ratio_depots(params, rng)
    space = EuclideanSpace(params.m)
    depot_config = DepotConfig(space, space.points(coords))
    radius = depot_config.min_distance() / 4.0

    requests = []
    for _ in range(params.n):
        center = coords[rng.integers(0, params.m - 1)]
        direction = rng.normal(size=params.m)
        direction /= np.linalg.norm(direction)
        offset = radius * (1.0 - INTERIOR_MARGIN) * rng.uniform(0.0, 1.0)
        requests.append(space.point(center + offset * direction))
    return OfflineInstance(depot_config, requests, family=params.family)


def _gen_random_explicit(params: InstanceFamilyParams, rng) -> OfflineInstance:
    size = params.m + params.n
    weights = np.zeros((size, size))
    order = rng.permutation(size)
    # Random spanning tree keeps the graph connected.
    for position in range(1, size):
        a, b = order[position], order[rng.integers(0, position)]
        weights[a, b] = weights[b, a] = rng.uniform(1.0, 10.0)
    extra = np.triu(rng.uniform(size=(size, size)) < 0.5, k=1) & (weights == 0)
    extra_weights = rng.uniform(1.0, 10.0, size=(size, size))
    weights[extra] = extra_weights[extra]
    weights = np.maximum(weights, weights.T)

    space = metric_closure(weights)
    depots = space.points(range(params.m))
    requests = space.points(range(params.m, size))
    return OfflineInstance(DepotConfig(space, depots), requests, family=params.family)
