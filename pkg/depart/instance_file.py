import json
import logging
import os
from typing import Union

from .errors import InstanceParseError
from .instance import Instance
from .serializers import InstanceSerializer

log = logging.getLogger(__name__)


def save_instance(instance: Instance, path: Union[str, os.PathLike]):
    """Writes `instance` as JSON. Floats are written in shortest round-trip form, so loading gives back
    bit-identical coordinates."""
    data = InstanceSerializer.to_json(instance)
    with open(path, 'w') as f:
        json.dump(data, f, indent=2)
        f.write('\n')
    log.debug('Saved %s to %s', instance, path)


def load_instance(path: Union[str, os.PathLike]) -> Instance:
    """Reads an instance written by :py:func:`save_instance`.

    :raises:
        InstanceParseError: if the file is not a valid instance; the error carries the path and,
        where known, line, column and field
    """
    with open(path) as f:
        text = f.read()
    try:
        instance = InstanceSerializer.to_object(text)
    except InstanceParseError as e:
        raise InstanceParseError(e.reason,
                                 path=str(path), line=e.line, column=e.column, field=e.field) from e
    log.debug('Loaded %s from %s', instance, path)
    return instance
