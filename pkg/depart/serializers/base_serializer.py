import json
import re
from abc import ABC, abstractmethod
from typing import Any, Dict, Type, Union

from depart.errors import InstanceParseError

JsonObject = Dict[str, Any]


def _argument_name(type_: Type) -> str:
    """MetricSpace -> metric_space"""
    return re.sub(r'(?<!^)(?=[A-Z])', '_', type_.__name__).lower()


class BaseSerializer(ABC):
    """JSON codec of one domain type.

    Subclasses set `type_`, implement `_to_json` and `_to_object` and take the object to wrap as the single
    `__init__` argument named after `type_` in snake case (`instance` for `Instance`).
    """

    type_: Type

    def __init__(self, obj):
        if isinstance(obj, (str, dict)):
            obj = self.to_object(obj)
        elif not isinstance(obj, self.type_):
            raise TypeError('"{}" must be {}, JSON string or dict, not {!r}.'
                            .format(_argument_name(self.type_), self.type_.__name__, obj.__class__.__name__))
        self.obj = obj

    def get_object(self):
        return self.obj

    def get_json(self) -> JsonObject:
        return self.to_json(self.obj)

    @classmethod
    def to_json(cls, obj) -> JsonObject:
        if not isinstance(obj, cls.type_):
            raise TypeError('Expected {}, got {!r}.'.format(cls.type_.__name__, obj.__class__.__name__))
        return cls._to_json(obj)

    @classmethod
    def to_object(cls, json_: Union[str, JsonObject]):
        return cls._to_object(cls.ensure_dict(json_))

    @staticmethod
    @abstractmethod
    def _to_json(obj) -> JsonObject:
        pass

    @staticmethod
    @abstractmethod
    def _to_object(json_: JsonObject):
        pass

    @staticmethod
    def ensure_dict(json_: Union[str, JsonObject]) -> JsonObject:
        """Parses `json_` if it is a string.

        :raises:
            TypeError: if `json_` is neither str nor dict
            InstanceParseError: if the string is not a JSON object; carries the line and column of syntax errors
        """
        if isinstance(json_, dict):
            return json_
        if not isinstance(json_, str):
            raise TypeError('Expected JSON string or dict, got {!r}.'.format(json_.__class__.__name__))
        try:
            parsed = json.loads(json_)
        except json.JSONDecodeError as e:
            raise InstanceParseError(e.msg, line=e.lineno, column=e.colno) from e
        if not isinstance(parsed, dict):
            raise InstanceParseError('Expected a JSON object, got {}.'.format(type(parsed).__name__))
        return parsed

    @staticmethod
    def _remove_empty_values(data: JsonObject) -> JsonObject:
        return {k: v for k, v in data.items() if v is not None}

    @staticmethod
    def _get_field(json_: JsonObject, key: str, types, *, prefix: str = '', required: bool = True):
        """Value of `key` in `json_` checked against `types`.

        :raises:
            InstanceParseError: if the key is missing (and required) or its value has a wrong type
        """
        field = prefix + key
        if key not in json_:
            if required:
                raise InstanceParseError('Missing required field.', field=field)
            return None
        value = json_[key]
        if not isinstance(value, types) or isinstance(value, bool):
            raise InstanceParseError('Unexpected value {!r}.'.format(value), field=field)
        return value

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if getattr(cls, 'type_', None) is None:
            raise AssertionError('{} has to define the serialized class in "type_".'.format(cls.__name__))
        expected = ('self', _argument_name(cls.type_))
        if cls.__init__.__code__.co_varnames[:2] != expected or cls.__init__.__code__.co_argcount != 2:
            raise AssertionError('{}.__init__ has to take a single argument named "{}".'
                                 .format(cls.__name__, expected[1]))
