import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from .distributed_router import DistributedRouter
from .errors import PreconditionError
from .generators import gen_random, gen_random_online
from .instance import Instance, InstanceFamily, InstanceFamilyParams, OfflineInstance, OnlineInstance
from .partitions import LAMBDA, PartitionKind, build_partition
from .tsp import Oracle
from ._services.base_service import Limits
from .util.numeric_util import leq, safe_ratio

log = logging.getLogger(__name__)

RATIO_COLUMNS = ['instance_id', 'family', 'm', 'n', 'scheme', 'dis', 'opt', 'ratio', 'runtime_ms']
EVAL_COLUMNS = ['instance_id', 'family', 'm', 'n', 'scheme', 'oracle', 'dis', 'per_server', 'runtime_ms']
ONLINE_COLUMNS = ['instance_id', 'family', 'm', 'n', 'scheme', 'doa', 'rhs_bound', 'lower_bound',
                  'realized_ratio', 'holds', 'aggregate_holds', 'runtime_ms']
SUMMARY_COLUMNS = ['scheme', 'family', 'm', 'f', 'instances', 'max_ratio', 'mean_ratio', 'bound', 'within_bound',
                   'log2_fit']
ONLINE_SUMMARY_COLUMNS = ['scheme', 'family', 'm', 'f', 'instances', 'holds', 'aggregate_holds',
                          'max_realized_ratio']

# Families whose depots lie on a line in index order.
COLLINEAR_FAMILIES = (InstanceFamily.RANDOM_LINE, InstanceFamily.LINE_VORONOI, InstanceFamily.LOCAL_ADVERSARIAL)
# Families whose generator takes the depot distance ratio f.
RATIO_FAMILIES = (InstanceFamily.RANDOM_BOUNDED_RATIO, InstanceFamily.RANDOM_LOCAL_INTERIOR)

# Constant of the logarithmic Level bound.
LEVEL_BOUND_CONSTANT = 9000


class ExperimentSpec:
    def __init__(
            self,
            family: str,
            scheme: str,
            *,
            m_values: Sequence[int],
            n_values: Sequence[int],
            f_values: Sequence[float] = (),
            seeds: Sequence[int] = range(10),
            oracle: str = Oracle.EXACT,
            lambda_: float = LAMBDA,
            limits: Optional[Limits] = None,
            online: bool = False,
            max_release: float = 10.0,
            timing: bool = True
    ):
        """Sweep over random instances of one family evaluated with one partition scheme.

        :param family:
                Random instance family. See :py:attr:`~depart.instance.InstanceFamily.RANDOM`
        :param scheme:
                Partition scheme. See :py:class:`~depart.partitions.PartitionKind`
        :param m_values:
                Numbers of servers
        :param n_values:
                Numbers of requests
        :param f_values:
                Depot distance ratio bounds, for the families that take one
        :param seeds:
                Generator seeds, one instance per seed and parameter combination
        :param oracle:
                Tour oracle of the partition cost. The optimum always uses exact tours
        :param lambda_:
                Level partition constant
        :param limits:
                Size limits of the exact oracles; `limits.workers` processes evaluate the instances
        :param online:
                Whether to simulate the online algorithm on release-dated instances instead of
                computing offline ratios
        :param max_release:
                Largest release date of online instances
        :param timing:
                Whether to fill the runtime_ms column. Without it every output is bit-identical across runs
        :raises:
            PreconditionError: if the scheme cannot be used on the family
        """
        if family not in InstanceFamily.RANDOM:
            raise ValueError('Sweeps run on random families ({}), not {!r}.'
                             .format(', '.join(InstanceFamily.RANDOM), family))
        if scheme not in PartitionKind.ALL:
            raise ValueError('Unknown partition scheme {!r}. Possible values: {}.'
                             .format(scheme, ', '.join(PartitionKind.ALL)))
        if oracle not in Oracle.ALL:
            raise ValueError('Unknown oracle {!r}. Possible values: {}.'.format(oracle, ', '.join(Oracle.ALL)))
        if scheme == PartitionKind.LEVEL and family not in COLLINEAR_FAMILIES:
            raise PreconditionError('Level partition needs collinear depots; family {} does not have them.'
                                    .format(family))
        if family in RATIO_FAMILIES and not f_values:
            raise ValueError('Family {} needs at least one "f" value.'.format(family))
        if online and family == InstanceFamily.RANDOM_EXPLICIT:
            raise PreconditionError('Online simulation needs a geodesic space; {} is an explicit matrix.'
                                    .format(family))
        if not m_values or not n_values or not seeds:
            raise ValueError('"m_values", "n_values" and "seeds" must not be empty.')

        self.family = family
        self.scheme = scheme
        self.m_values = list(m_values)
        self.n_values = list(n_values)
        self.f_values = list(f_values) if family in RATIO_FAMILIES else [None]
        self.seeds = list(seeds)
        self.oracle = oracle
        self.lambda_ = lambda_
        self.limits = limits or Limits()
        self.online = online
        self.max_release = max_release
        self.timing = timing

    def family_params(self) -> List[InstanceFamilyParams]:
        """Generator parameters of every instance, in output order."""
        return [
            InstanceFamilyParams(self.family, m=m, n=n, f=f, seed=seed)
            for m in self.m_values
            for f in self.f_values
            for n in self.n_values
            for seed in self.seeds
        ]

    def __str__(self):
        return '{} on {}: m={}, n={}, f={}, {} seeds{}'.format(
            self.scheme, self.family, self.m_values, self.n_values, self.f_values, len(self.seeds),
            ', online' if self.online else '')

    def __repr__(self):
        return '<ExperimentSpec {}>'.format(self.__str__())


class _Timer:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.elapsed_ms = None

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if self.enabled:
            self.elapsed_ms = round((time.perf_counter() - self._start) * 1000, 3)

    @property
    def value(self):
        return self.elapsed_ms if self.enabled else ''


def instance_id(instance: Instance, default: str = 'instance') -> str:
    return instance.name or default


def ratio_row(
        router: DistributedRouter,
        scheme: str,
        instance: OfflineInstance,
        *,
        lambda_: float = LAMBDA,
        oracle: str = Oracle.EXACT,
        timing: bool = True
) -> Dict:
    """DIS, OPT and their ratio for one instance.

    :raises:
        CapacityError: if OPT is out of the configured limits
    """
    with _Timer(timing) as timer:
        partition = build_partition(scheme, instance.depot_config, lambda_=lambda_)
        dis = router.dis_cost(partition, instance, oracle).total
        opt = router.opt_offline(instance).total
    return {
        'instance_id': instance_id(instance),
        'family': instance.family or '',
        'm': instance.m,
        'n': instance.n,
        'scheme': scheme,
        'dis': dis,
        'opt': opt,
        'ratio': safe_ratio(dis, opt),
        'runtime_ms': timer.value,
    }


def eval_row(
        router: DistributedRouter,
        scheme: str,
        instance: OfflineInstance,
        *,
        lambda_: float = LAMBDA,
        oracle: str = Oracle.EXACT,
        timing: bool = True
) -> Dict:
    with _Timer(timing) as timer:
        partition = build_partition(scheme, instance.depot_config, lambda_=lambda_)
        report = router.dis_cost(partition, instance, oracle)
    return {
        'instance_id': instance_id(instance),
        'family': instance.family or '',
        'm': instance.m,
        'n': instance.n,
        'scheme': scheme,
        'oracle': oracle,
        'dis': report.total,
        'per_server': ' '.join(repr(c) for c in report.per_server),
        'runtime_ms': timer.value,
    }


def online_row(
        router: DistributedRouter,
        scheme: str,
        instance: OnlineInstance,
        *,
        lambda_: float = LAMBDA,
        timing: bool = True
) -> Dict:
    with _Timer(timing) as timer:
        partition = build_partition(scheme, instance.depot_config, lambda_=lambda_)
        check = router.check_theorem1(partition, instance)
    return {
        'instance_id': instance_id(instance),
        'family': instance.family or '',
        'm': instance.m,
        'n': instance.n,
        'scheme': scheme,
        'doa': check.doa_total,
        'rhs_bound': check.rhs_bound,
        'lower_bound': check.lower_bound,
        'realized_ratio': check.realized_ratio,
        'holds': check.holds,
        'aggregate_holds': check.aggregate_holds,
        'runtime_ms': timer.value,
    }


def _run_one(args) -> Dict:
    spec, params = args
    router = DistributedRouter(Limits(**dict(vars(spec.limits), workers=1)))
    if spec.online:
        instance = gen_random_online(params, max_release=spec.max_release)
        row = online_row(router, spec.scheme, instance, lambda_=spec.lambda_, timing=spec.timing)
    else:
        instance = gen_random(params)
        row = ratio_row(router, spec.scheme, instance, lambda_=spec.lambda_, oracle=spec.oracle,
                        timing=spec.timing)
    row['f'] = params.f if params.f is not None else ''
    row['seed'] = params.seed
    return row


def run_sweep(spec: ExperimentSpec) -> pd.DataFrame:
    """Evaluates every instance of `spec`. Rows come in :py:meth:`ExperimentSpec.family_params` order
    whatever the number of workers."""
    tasks = [(spec, params) for params in spec.family_params()]
    log.info('Sweep %s: %d instances', spec, len(tasks))
    if spec.limits.workers > 1:
        with ProcessPoolExecutor(max_workers=spec.limits.workers) as pool:
            rows = list(pool.map(_run_one, tasks))
    else:
        rows = []
        for i, task in enumerate(tasks, start=1):
            rows.append(_run_one(task))
            if i % 50 == 0:
                log.info('%d/%d instances done', i, len(tasks))
    columns = (ONLINE_COLUMNS if spec.online else RATIO_COLUMNS) + ['f', 'seed']
    return pd.DataFrame(rows, columns=columns)


def scheme_bound(scheme: str, m: int, f: Optional[float]) -> float:
    """Proven upper bound on the approximation ratio of `scheme`; NaN where none applies."""
    if scheme == PartitionKind.VORONOI:
        return float(m)
    elif scheme == PartitionKind.LOCAL:
        return 2 + 4 * f if f is not None and f != '' else math.nan
    elif scheme == PartitionKind.LEVEL:
        return LEVEL_BOUND_CONSTANT * (math.log2(m - 1) + 2) if m >= 2 else math.nan
    raise ValueError('Unknown partition scheme {!r}.'.format(scheme))


def summarize(rows: pd.DataFrame, online: bool = False) -> pd.DataFrame:
    """One line per (scheme, family, m, f) group of sweep rows."""
    if rows.empty:
        return pd.DataFrame(columns=ONLINE_SUMMARY_COLUMNS if online else SUMMARY_COLUMNS)

    keys = ['scheme', 'family', 'm', 'f']
    if online:
        summary = rows.groupby(keys, sort=False).agg(
            instances=('instance_id', 'size'),
            holds=('holds', 'all'),
            aggregate_holds=('aggregate_holds', 'all'),
            max_realized_ratio=('realized_ratio', 'max'),
        ).reset_index()
        return summary[ONLINE_SUMMARY_COLUMNS]

    summary = rows.groupby(keys, sort=False).agg(
        instances=('instance_id', 'size'),
        max_ratio=('ratio', 'max'),
        mean_ratio=('ratio', 'mean'),
    ).reset_index()
    summary['bound'] = [
        scheme_bound(scheme, m, None if f == '' else f)
        for scheme, m, f in zip(summary['scheme'], summary['m'], summary['f'])
    ]
    summary['within_bound'] = [
        bool(leq(ratio, bound)) if not np.isnan(bound) else ''
        for ratio, bound in zip(summary['max_ratio'], summary['bound'])
    ]
    summary['log2_fit'] = [ratio / math.log2(m) for ratio, m in zip(summary['max_ratio'], summary['m'])]
    return summary[SUMMARY_COLUMNS]
