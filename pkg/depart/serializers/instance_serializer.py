from numbers import Real

import numpy as np

from depart.errors import InstanceParseError, ValidationError
from depart.instance import DepotConfig, Instance, OfflineInstance, OnlineInstance
from depart.metric import MetricSpace, SpaceKind
from .base_serializer import BaseSerializer
from .metric_space_serializer import MetricSpaceSerializer


class InstanceSerializer(BaseSerializer):
    """JSON form of offline and online instances.

    Points are coordinate lists: `[x_1, ..., x_d]` in euclidean spaces, `[x]` on the line and `[i]` for
    explicit matrices. Online instances carry `release_dates`, one per request.
    """

    type_ = Instance

    def __init__(self, instance):
        super().__init__(instance)

    @staticmethod
    def _to_json(instance: Instance):
        data = {
            'name': instance.name,
            'family': instance.family,
            'space': MetricSpaceSerializer.to_json(instance.space),
            'depots': [p.as_list() for p in instance.depot_config.depots],
        }
        if isinstance(instance, OnlineInstance):
            data['requests'] = [p.as_list() for p in instance.locations_list]
            data['release_dates'] = instance.release_dates
        else:
            data['requests'] = [p.as_list() for p in instance.requests]
        return BaseSerializer._remove_empty_values(data)

    @staticmethod
    def _to_object(json_instance):
        space = MetricSpaceSerializer._to_object(
            BaseSerializer._get_field(json_instance, 'space', dict)
        )
        depots = InstanceSerializer._points(space, json_instance, 'depots')
        requests = InstanceSerializer._points(space, json_instance, 'requests')
        name = BaseSerializer._get_field(json_instance, 'name', str, required=False)
        family = BaseSerializer._get_field(json_instance, 'family', str, required=False)
        release_dates = BaseSerializer._get_field(json_instance, 'release_dates', list, required=False)

        try:
            depot_config = DepotConfig(space, depots)
        except ValidationError as e:
            raise InstanceParseError(str(e), field='depots') from e

        if release_dates is None:
            return OfflineInstance(depot_config, requests, family=family, name=name)

        if len(release_dates) != len(requests):
            raise InstanceParseError('Expected {} release dates, got {}.'.format(len(requests), len(release_dates)),
                                     field='release_dates')
        for j, r in enumerate(release_dates):
            if not isinstance(r, Real) or isinstance(r, bool) or not np.isfinite(r):
                raise InstanceParseError('Unexpected value {!r}.'.format(r), field='release_dates[{}]'.format(j))
        try:
            return OnlineInstance(depot_config, list(zip(release_dates, requests)), family=family, name=name)
        except ValidationError as e:
            raise InstanceParseError(str(e), field='release_dates') from e

    @staticmethod
    def _points(space: MetricSpace, json_instance, key: str):
        size = space.dim if space.kind == SpaceKind.EUCLIDEAN else 1
        points = []
        for j, coords in enumerate(BaseSerializer._get_field(json_instance, key, list)):
            field = '{}[{}]'.format(key, j)
            if (not isinstance(coords, list) or len(coords) != size
                    or not all(isinstance(c, Real) and not isinstance(c, bool) for c in coords)):
                raise InstanceParseError('Expected a list of {} number(s), got {!r}.'.format(size, coords),
                                         field=field)
            try:
                points.append(space.point(coords))
            except ValidationError as e:
                raise InstanceParseError(str(e), field=field) from e
        return points
