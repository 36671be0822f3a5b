"""Plain-text serialization for channels and density matrices.

Channel files: first line ``dim=<n> ops=<k>``, then k blocks of n lines,
each line holding n complex entries like ``0.5-0.25j`` separated by
single spaces.  Density files are the same with a ``dim=<n>`` header and
a single block.  The format is diff-friendly and hand-editable; entries
are written with 17 significant digits so values round-trip exactly.
"""

from __future__ import annotations

import math
import re

import numpy as np

from .channels import KrausChannel
from .states import DensityMatrix

#: completeness tolerance applied to channels coming from files
LOAD_COMPLETENESS_ATOL = 1e-8

_CHANNEL_HEADER = re.compile(r"^dim=(\d+) ops=(\d+)$")
_DENSITY_HEADER = re.compile(r"^dim=(\d+)$")


class ChannelFormatError(ValueError):
    """A file failed to parse; carries path, 1-based line and column."""

    def __init__(self, path, line: int, column: int, message: str):
        super().__init__(f"{path}:{line}:{column}: {message}")
        self.path = path
        self.line = line
        self.column = column


def _format_complex(z) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}j"


def _read_lines(path):
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ChannelFormatError(path, 1, 1, "empty file")
    return lines


def _parse_block(lines, start: int, dim: int, path) -> np.ndarray:
    """Parse ``dim`` consecutive lines (0-based offset ``start``) into a
    dim x dim complex matrix."""
    m = np.zeros((dim, dim), dtype=np.complex128)
    for r in range(dim):
        lineno = start + r + 1
        if start + r >= len(lines):
            raise ChannelFormatError(
                path, len(lines) + 1, 1,
                f"unexpected end of file: expected a row of {dim} entries")
        line = lines[start + r]
        tokens = line.split()
        if len(tokens) != dim:
            raise ChannelFormatError(
                path, lineno, 1, f"expected {dim} entries, found {len(tokens)}")
        for c, tok in enumerate(tokens):
            column = line.find(tok) + 1
            try:
                value = complex(tok)
            except ValueError:
                raise ChannelFormatError(
                    path, lineno, column,
                    f"cannot parse complex entry {tok!r}") from None
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise ChannelFormatError(
                    path, lineno, column, f"non-finite entry {tok!r}")
            m[r, c] = value
    return m


def read_channel_file(path) -> KrausChannel:
    """Parse a channel file into a :class:`KrausChannel`.

    Raises :class:`ChannelFormatError` on malformed input and
    :class:`entfid.channels.CompletenessError` when the operators do not
    form a trace-preserving set within 1e-8.
    """
    lines = _read_lines(path)
    header = _CHANNEL_HEADER.match(lines[0].strip())
    if header is None:
        raise ChannelFormatError(path, 1, 1, "header must be 'dim=<n> ops=<k>'")
    dim, n_ops = int(header.group(1)), int(header.group(2))
    if dim < 1 or n_ops < 1:
        raise ChannelFormatError(path, 1, 1, "dim and ops must both be >= 1")
    expected = 1 + n_ops * dim
    if len(lines) > expected:
        raise ChannelFormatError(
            path, expected + 1, 1, "unexpected content after the last operator")
    ops = [_parse_block(lines, 1 + i * dim, dim, path) for i in range(n_ops)]
    return KrausChannel(ops, completeness_atol=LOAD_COMPLETENESS_ATOL)


def write_channel_file(ch: KrausChannel, path) -> None:
    rows = [f"dim={ch.dim} ops={len(ch.operators)}"]
    for op in ch.operators:
        for r in range(ch.dim):
            rows.append(" ".join(_format_complex(z) for z in op[r]))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(rows) + "\n")


def read_density_file(path) -> DensityMatrix:
    """Parse a density-matrix file (header ``dim=<n>``, one block)."""
    lines = _read_lines(path)
    header = _DENSITY_HEADER.match(lines[0].strip())
    if header is None:
        raise ChannelFormatError(path, 1, 1, "header must be 'dim=<n>'")
    dim = int(header.group(1))
    if dim < 1:
        raise ChannelFormatError(path, 1, 1, "dim must be >= 1")
    if len(lines) > 1 + dim:
        raise ChannelFormatError(path, dim + 2, 1, "unexpected content after the matrix")
    m = _parse_block(lines, 1, dim, path)
    try:
        return DensityMatrix(m, (dim,))
    except ValueError as exc:
        raise ChannelFormatError(path, 1, 1, f"not a valid density matrix: {exc}") from exc


def write_density_file(rho: DensityMatrix, path) -> None:
    rows = [f"dim={rho.dim}"]
    for r in range(rho.dim):
        rows.append(" ".join(_format_complex(z) for z in rho.matrix[r]))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(rows) + "\n")
