"""Read and write pllab JSON and CSV artifacts.

Exact rationals are always written as "p/q" strings, never floats.
"""

import csv
import io
import json
import os.path as op
from collections import OrderedDict
from fractions import Fraction

from pllab.PlLabException import ValidationError
from pllab.Utils import atomic_write, rational_str

__all__ = ["to_jsonable",
           "dumps_json",
           "dumps_csv",
           "write_artifact",
           "load_json_arg"]


def to_jsonable(obj):
    """Recursively convert pllab values into JSON-ready structures."""
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, float, str)):
        return obj
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if isinstance(obj, dict):
        return OrderedDict((k if isinstance(k, str) else str(k), to_jsonable(v))
                           for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError("Cannot serialize {t}".format(t=type(obj).__name__))


def dumps_json(obj):
    return json.dumps(to_jsonable(obj), indent=2) + "\n"


def dumps_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([rational_str(x) if isinstance(x, Fraction) else x for x in row])
    return buf.getvalue()


def write_artifact(text, out=None, stream=None):
    """Write text atomically to out, or to stream when out is None."""
    if out is None:
        stream.write(text)
    else:
        atomic_write(out, text)


def load_json_arg(arg):
    """Parse arg as inline JSON, or as the path of a JSON file."""
    try:
        if op.isfile(arg):
            with open(arg, "r") as reader:
                return json.load(reader)
        return json.loads(arg)
    except ValueError as e:
        raise ValidationError("Cannot parse JSON from {a!r}: {e}".format(a=arg, e=e))
