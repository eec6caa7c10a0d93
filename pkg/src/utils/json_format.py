from enum import Enum
import json
import math
import numpy as np

def format_float(value: float) -> str:
    value = float(value)
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    text = "%.17g" % value
    if text in ("0", "-0"):
        return "0.0"
    if not any(mark in text for mark in ".en"):
        text += ".0"
    return text

def dumps_fixed(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with 17 significant digits for every float and insertion-ordered keys."""
    pad = " " * (indent * (_level + 1))
    closing = " " * (indent * _level)

    if isinstance(obj, Enum):
        obj = obj.value
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, np.generic):
        obj = obj.item()

    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return _quote(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{_quote(str(key))}: {dumps_fixed(value, indent, _level + 1)}"
            for key, value in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + closing + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{dumps_fixed(value, indent, _level + 1)}" for value in obj]
        return "[\n" + ",\n".join(items) + "\n" + closing + "]"

    raise TypeError(f"cannot serialise {type(obj).__name__}")

def _quote(text: str) -> str:
    return json.dumps(text, ensure_ascii=False)
