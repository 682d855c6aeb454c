"""On-disk cache of modified Macdonald tables, one text file per degree.

File ``htilde_d<d>.qsf``::

    QSF1 degree=<d> basis=schur order=revlex
    <lambda> : <mu> : <scalar>
    ...

One line per matrix entry of ``to_schur`` (zeros included), rows and columns
in reverse-lexicographic partition order, LF line endings.
"""
from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .qtcoeff import QtParseError, qt_format, qt_parse
from .symfunc import Partition, partitions_of

ENV_VAR = "QSF_CACHE_DIR"


class CacheError(RuntimeError):
    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.path.expanduser("~")) / ".cache" / "qsf"


def cache_path(cache_dir, d: int) -> Path:
    return Path(cache_dir) / f"htilde_d{d}.qsf"


def header(d: int) -> str:
    return f"QSF1 degree={d} basis=schur order=revlex"


def serialize(d: int, to_schur) -> str:
    parts = partitions_of(d)
    lines = [header(d)]
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            lines.append(f"{lam} : {mu} : {qt_format(to_schur[i][j])}")
    return "\n".join(lines) + "\n"


def parse(text: str, d: int, path="<memory>"):
    """Inverse of :func:`serialize`; raises CacheError naming the first bad line."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != header(d):
        raise CacheError(path, 1, f"bad header, expected {header(d)!r}")
    parts = partitions_of(d)
    n = len(parts)
    if len(lines) != 1 + n * n:
        raise CacheError(path, min(len(lines), 1 + n * n) + 1, f"expected {n * n} entries, found {len(lines) - 1}")
    rows = [[None] * n for _ in range(n)]
    k = 1
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            line = lines[k]
            bits = line.split(" : ", 2)
            if len(bits) != 3:
                raise CacheError(path, k + 1, "malformed entry")
            try:
                got_lam, got_mu = Partition.parse(bits[0]), Partition.parse(bits[1])
            except ValueError as exc:
                raise CacheError(path, k + 1, str(exc)) from None
            if got_lam != lam or got_mu != mu:
                raise CacheError(path, k + 1, f"expected entry {lam} : {mu}")
            try:
                rows[i][j] = qt_parse(bits[2])
            except QtParseError as exc:
                raise CacheError(path, k + 1, str(exc)) from None
            if qt_format(rows[i][j]) != bits[2]:
                raise CacheError(path, k + 1, "scalar is not in canonical form")
            k += 1
    return tuple(tuple(r) for r in rows)


def write_atomic(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read(cache_dir, d: int):
    """Parsed table or None if the file does not exist."""
    path = cache_path(cache_dir, d)
    if not path.exists():
        return None
    with open(path, "r", encoding="utf-8", newline="") as fh:
        text = fh.read()
    return parse(text, d, path)


def first_difference(path: Path, expected: str):
    """(line number, actual line) of the first line differing from ``expected``, or None."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        actual = fh.read()
    if actual == expected:
        return None
    a_lines = actual.split("\n")
    e_lines = expected.split("\n")
    for k, (x, y) in enumerate(zip(a_lines, e_lines), start=1):
        if x != y:
            return k, x
    k = min(len(a_lines), len(e_lines)) + 1
    return k, a_lines[k - 1] if k - 1 < len(a_lines) else ""


def clear(cache_dir) -> int:
    removed = 0
    root = Path(cache_dir)
    if not root.exists():
        return 0
    for path in root.glob("htilde_d*.qsf"):
        path.unlink()
        removed += 1
    return removed
