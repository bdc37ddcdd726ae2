"""Wire formats. All numbers travel as strings so nothing is ever a float."""
from __future__ import annotations

import json
import os
import sys

from .errors import ValidationError
from .matrix import Matrix
from .matrix_quiddity import BiSequence, MatrixSeq
from .polygon import Dissection
from .sequences import QuidditySeq

__all__ = ["load_arg", "dumps", "read_sequence", "read_matrix_seq", "read_bisequence", "read_any_matrix_seq", "read_dissection", "matrix_from"]


class JSONInputError(ValidationError):
    pass


def load_arg(arg: str, stdin=None):
    """Decode a CLI operand: '-' is stdin, an existing path is read, else inline JSON."""
    if arg == "-":
        text, where = (stdin or sys.stdin).read(), "<stdin>"
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text, where = fh.read(), arg
    else:
        text, where = arg, "<inline>"
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise JSONInputError(f"{where}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _wrap(fn, what):
    def inner(obj):
        try:
            return fn(obj)
        except ValidationError:
            raise
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ValidationError(f"bad {what}: {exc}") from None

    return inner


read_sequence = _wrap(QuidditySeq.from_json, "sequence")
read_dissection = _wrap(Dissection.from_json, "dissection")


def read_matrix_seq(obj, side=None) -> MatrixSeq:
    s = _wrap(MatrixSeq.from_json, "matrix sequence")(obj)
    if side is not None and s.side.value != side:
        s = MatrixSeq(s.entries, side)
    return s


read_bisequence = _wrap(BiSequence.from_json, "bi-sequence")


def read_any_matrix_seq(obj):
    """A bi-sequence if the object has p/q parts, else a matrix sequence."""
    if isinstance(obj, dict) and "p" in obj:
        return read_bisequence(obj)
    return read_matrix_seq(obj)


def matrix_from(obj) -> Matrix:
    return _wrap(Matrix.from_json, "matrix")(obj)
