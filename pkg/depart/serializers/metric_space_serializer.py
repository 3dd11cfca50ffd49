from depart.errors import InstanceParseError, ValidationError
from depart.metric import EuclideanSpace, ExplicitSpace, LineSpace, MetricSpace, SpaceKind, validate_metric
from .base_serializer import BaseSerializer


class MetricSpaceSerializer(BaseSerializer):
    type_ = MetricSpace

    def __init__(self, metric_space):
        super().__init__(metric_space)

    @staticmethod
    def _to_json(metric_space: MetricSpace):
        if isinstance(metric_space, EuclideanSpace):
            return {'kind': SpaceKind.EUCLIDEAN, 'dim': metric_space.dim}
        elif isinstance(metric_space, LineSpace):
            return {'kind': SpaceKind.LINE}
        elif isinstance(metric_space, ExplicitSpace):
            return {'kind': SpaceKind.EXPLICIT, 'matrix': metric_space.matrix.tolist()}
        raise TypeError('Unsupported metric space {!r}.'.format(metric_space.__class__.__name__))

    @staticmethod
    def _to_object(json_space, prefix: str = 'space.'):
        kind = BaseSerializer._get_field(json_space, 'kind', str, prefix=prefix)
        if kind == SpaceKind.EUCLIDEAN:
            dim = BaseSerializer._get_field(json_space, 'dim', int, prefix=prefix)
            try:
                return EuclideanSpace(dim)
            except ValueError as e:
                raise InstanceParseError(str(e), field=prefix + 'dim') from e
        elif kind == SpaceKind.LINE:
            return LineSpace()
        elif kind == SpaceKind.EXPLICIT:
            matrix = BaseSerializer._get_field(json_space, 'matrix', list, prefix=prefix)
            try:
                space = ExplicitSpace(matrix)
            except (ValidationError, ValueError, TypeError) as e:
                raise InstanceParseError(str(e), field=prefix + 'matrix') from e
            report = validate_metric(space)
            if not report.ok:
                raise InstanceParseError('Not a metric: {}'.format(report), field=prefix + 'matrix')
            return space
        raise InstanceParseError('Unknown space kind {!r}.'.format(kind), field=prefix + 'kind')
