from typing import Optional

from ._services.base_service import Limits
from ._services.offline_service import OfflineEvaluationService
from ._services.online_service import OnlineSimulationService


class DistributedRouter(
    OnlineSimulationService,
    OfflineEvaluationService
):
    """Collection of all offline and online evaluations of the static partition schemes."""

    def __init__(
            self,
            limits: Optional[Limits] = None,
            *,
            exact_cap: Optional[int] = None,
            enumeration_budget: Optional[int] = None,
            workers: Optional[int] = None
    ):
        """
        Specify ``limits`` or override single limits with the keyword arguments.

        :param limits:
                Size limits of the exact oracles. Default: :py:class:`~depart._services.base_service.Limits`
                with its default values
        :param exact_cap:
                Maximum number of requests of a single exact tour. Default: 16
        :param enumeration_budget:
                Maximum number m^n of assignments the optimal offline search may face. Default: 10^7
        :param workers:
                Number of worker processes of the optimal offline search. Default: 1
        """
        limits = limits or Limits()
        overrides = dict(exact_cap=exact_cap, enumeration_budget=enumeration_budget, workers=workers)
        if any(v is not None for v in overrides.values()):
            values = vars(limits).copy()
            values.update({k: v for k, v in overrides.items() if v is not None})
            limits = Limits(**values)
        super().__init__(limits=limits)
