from typing import Optional, Sequence

from depart.metric import MetricSpace, Point
from depart.tour import Tour
from depart.tsp import EXACT_CAP, TWO_OPT_MAX_SWEEPS, Oracle, solve_tour

ENUMERATION_BUDGET = 10 ** 7


class Limits:
    def __init__(
            self,
            *,
            exact_cap: int = EXACT_CAP,
            enumeration_budget: int = ENUMERATION_BUDGET,
            two_opt_max_sweeps: int = TWO_OPT_MAX_SWEEPS,
            workers: int = 1
    ):
        """Size limits of the exact oracles.

        :param exact_cap:
                Maximum number of requests a single Held-Karp tour may have
        :param enumeration_budget:
                Maximum number m^n of complete assignments the optimal offline search may face
        :param two_opt_max_sweeps:
                Maximum number of 2-opt sweeps of the heuristic oracle
        :param workers:
                Number of worker processes for the optimal offline search and for sweeps. 1 means in-process
        """
        for name, value in (('exact_cap', exact_cap), ('enumeration_budget', enumeration_budget),
                            ('two_opt_max_sweeps', two_opt_max_sweeps), ('workers', workers)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError('"{}" must be int, not {!r}.'.format(name, value.__class__.__name__))
            if value < 1:
                raise ValueError('"{}" must be positive, not {}.'.format(name, value))
        self.exact_cap = exact_cap
        self.enumeration_budget = enumeration_budget
        self.two_opt_max_sweeps = two_opt_max_sweeps
        self.workers = workers

    def __eq__(self, other):
        return isinstance(other, Limits) and vars(self) == vars(other)

    def __str__(self):
        return 'exact_cap={}, enumeration_budget={}, two_opt_max_sweeps={}, workers={}'.format(
            self.exact_cap, self.enumeration_budget, self.two_opt_max_sweeps, self.workers)

    def __repr__(self):
        return '<Limits {}>'.format(self.__str__())


class BaseService:
    def __init__(self, *, limits: Optional[Limits] = None):
        """
        :param limits:
                Size limits of the exact oracles. Default: :py:class:`~depart._services.base_service.Limits`
                with its default values
        """
        if limits is not None and not isinstance(limits, Limits):
            raise TypeError('"limits" must be Limits, not {!r}.'.format(limits.__class__.__name__))
        self.limits = limits or Limits()

    def _tour(self, space: MetricSpace, depot: Point, requests: Sequence[Point], oracle: str = Oracle.EXACT) -> Tour:
        return solve_tour(
            space, depot, requests, oracle,
            exact_cap=self.limits.exact_cap,
            max_sweeps=self.limits.two_opt_max_sweeps
        )
