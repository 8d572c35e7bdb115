"""Readers for the set and multiset file formats.

Set files hold one 0/1 string per line.  Multiset files hold ``BITS COUNT``
per line.  In both, blank lines and lines starting with ``#`` are skipped.
"""

import logging
import re
from typing import Iterator, List, TextIO, Tuple, Union

from ..algebra.gf2_core import BitVec
from ..algebra.set_model import BoolMultiset, VectorSet, multiset_from_pairs
from ..utils.errors import InputError

logger = logging.getLogger(__name__)

Source = Union[str, TextIO]

_COUNT = re.compile(r"[0-9]+")


def _raw_lines(source: Source) -> List[Union[bytes, str]]:
    if isinstance(source, str):
        try:
            with open(source, "rb") as handle:
                return handle.read().splitlines()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from exc
    # Decode stdin ourselves so a bad byte can be reported with its line
    buffer = getattr(source, "buffer", None)
    if buffer is not None:
        return buffer.read().splitlines()
    return source.read().splitlines()


def _lines(source: Source) -> Iterator[Tuple[int, str]]:
    """Yield ``(line_number, text)`` for every meaningful line."""
    for number, raw in enumerate(_raw_lines(source), start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise InputError(f"line {number}: not valid UTF-8 ({exc.reason})") from exc
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _vector(text: str, number: int, width) -> BitVec:
    try:
        v = BitVec.from_string(text)
    except InputError as exc:
        raise InputError(f"line {number}: {exc}") from exc
    if width is not None and v.width != width:
        raise InputError(f"line {number}: length {v.width} differs from {width}")
    return v


def parse_set_file(source: Source) -> VectorSet:
    """Read a set; repeated vectors are an error."""
    seen = {}
    width = None
    for number, line in _lines(source):
        v = _vector(line, number, width)
        width = v.width
        if v in seen:
            raise InputError(
                f"line {number}: {v} repeats line {seen[v]}; use --multiset for repeated vectors"
            )
        seen[v] = number
    if not seen:
        raise InputError("the input holds no vectors")
    logger.info("read %d vectors of width %d", len(seen), width)
    return VectorSet(width, tuple(seen))


def parse_multiset_file(source: Source) -> BoolMultiset:
    """Read a multiset; repeated vectors add their counts."""
    pairs = []
    width = None
    for number, line in _lines(source):
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {number}: expected 'BITS COUNT', got {line!r}")
        v = _vector(fields[0], number, width)
        width = v.width
        if not _COUNT.fullmatch(fields[1]) or int(fields[1]) == 0:
            raise InputError(f"line {number}: count must be a positive integer, got {fields[1]!r}")
        pairs.append((v, int(fields[1])))
    if not pairs:
        raise InputError("the input holds no vectors")
    multiset = multiset_from_pairs(pairs)
    logger.info(
        "read %d distinct vectors of width %d, total multiplicity %d",
        multiset.cardinality, width, multiset.total,
    )
    return multiset


def format_set(S: VectorSet) -> str:
    return "".join(f"{v}\n" for v in S)


def format_multiset(M: BoolMultiset) -> str:
    return "".join(f"{v} {count}\n" for v, count in M.items())
