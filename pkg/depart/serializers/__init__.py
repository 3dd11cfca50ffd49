from .base_serializer import BaseSerializer
from .instance_serializer import InstanceSerializer
from .metric_space_serializer import MetricSpaceSerializer

__all__ = ['BaseSerializer', 'InstanceSerializer', 'MetricSpaceSerializer']
