"""Systematic MDS erasure code over the 256-element field.

The field is GF(2^8) with primitive polynomial x^8 + x^4 + x^3 + x^2 + 1
(0x11D), so file bytes map one-to-one to symbols.  A (theta, b) code keeps
the b file symbols in place and appends theta - b parity symbols: a single
all-ones XOR row when theta = b + 1, Cauchy rows otherwise.  Any b distinct
coordinates of a codeword determine the file.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    InconsistentSymbols,
    InsufficientSymbols,
    InternalCheckError,
    LengthMismatch,
    ParamViolation,
)

PRIMITIVE_POLY = 0x11D
FIELD_SIZE = 256

# Log/antilog tables for the multiplicative group generated by x (= 2).
# _EXP is doubled so products of two logs index it without a mod 255.
_EXP = [0] * 510
_LOG = [0] * FIELD_SIZE


def _init_tables() -> None:
    value = 1
    for power in range(255):
        _EXP[power] = value
        _LOG[value] = power
        value <<= 1
        if value & 0x100:
            value ^= PRIMITIVE_POLY
    for power in range(255, 510):
        _EXP[power] = _EXP[power - 255]


_init_tables()


def field_add(a: int, b: int) -> int:
    """Addition (and subtraction) is bitwise XOR."""
    return a ^ b


def field_mul(a: int, b: int) -> int:
    """Carryless product reduced by the primitive polynomial."""
    if a == 0 or b == 0:
        return 0
    return _EXP[_LOG[a] + _LOG[b]]


def field_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    return _EXP[255 - _LOG[a]]


@dataclass(frozen=True)
class MdsParams:
    """Codeword length theta, message length b, and the systematic theta x b
    encoding matrix (top b x b block is the identity)."""

    theta: int
    b: int
    matrix: tuple[tuple[int, ...], ...]


def mds_params(theta: int, b: int) -> MdsParams:
    """Build encoding parameters for a (theta, b) code.

    theta = b is the degenerate identity code and theta = b + 1 the plain
    parity-packet code; wider codes use Cauchy parity rows with x-coordinates
    0..b-1 and y-coordinates b..theta-1, which keeps every square submatrix
    of the parity block invertible.
    """
    if not isinstance(theta, int) or not isinstance(b, int):
        raise ParamViolation("theta and b must be integers")
    if b < 1:
        raise ParamViolation("b must be >= 1")
    if theta < b:
        raise ParamViolation("theta must be >= b")
    if theta > b + 1 and theta > FIELD_SIZE - b:
        raise ParamViolation("theta must be <= 256-b for Cauchy parity rows")
    rows = [tuple(1 if c == r else 0 for c in range(b)) for r in range(b)]
    if theta == b + 1:
        rows.append((1,) * b)
    elif theta > b + 1:
        for y in range(b, theta):
            rows.append(tuple(field_inv(x ^ y) for x in range(b)))
    return MdsParams(theta=theta, b=b, matrix=tuple(rows))


def mds_encode(params: MdsParams, file: Sequence[int]) -> tuple[int, ...]:
    """Encode b file symbols into theta coded symbols, file prefix first."""
    if len(file) != params.b:
        raise LengthMismatch(f"file must have exactly {params.b} symbols, got {len(file)}")
    data = [_check_symbol(x) for x in file]
    out = list(data)
    for row in params.matrix[params.b :]:
        acc = 0
        for coef, x in zip(row, data):
            acc ^= field_mul(coef, x)
        out.append(acc)
    return tuple(out)


def mds_decode(params: MdsParams, received: Mapping[int, int]) -> tuple[int, ...]:
    """Recover the file from any >= b received coordinates (1-based).

    Solves the square system given by the b lowest coordinates; when more
    are present the decode is checked against every received coordinate and
    disagreement raises InconsistentSymbols.
    """
    for coord in received:
        if not isinstance(coord, int) or not 1 <= coord <= params.theta:
            raise ParamViolation(f"coordinate {coord} out of range 1..{params.theta}")
    if len(received) < params.b:
        raise InsufficientSymbols(f"need {params.b} coordinates, got {len(received)}")
    chosen = sorted(received)[: params.b]
    rows = [list(params.matrix[c - 1]) for c in chosen]
    rhs = [_check_symbol(received[c]) for c in chosen]
    file = tuple(_solve_square(rows, rhs))
    if len(received) > params.b:
        codeword = mds_encode(params, file)
        for coord, value in received.items():
            if codeword[coord - 1] != value:
                raise InconsistentSymbols(f"coordinate {coord} disagrees with the decoded file")
    return file


def _solve_square(rows: list[list[int]], rhs: list[int]) -> list[int]:
    # Gauss-Jordan over the field; the chosen submatrix is invertible by the
    # MDS property, so a missing pivot is an internal error.
    size = len(rows)
    aug = [row + [value] for row, value in zip(rows, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col]), None)
        if pivot is None:
            raise InternalCheckError("singular system; MDS property violated")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field_inv(aug[col][col])
        aug[col] = [field_mul(inv, x) for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x ^ field_mul(factor, y) for x, y in zip(aug[r], aug[col])]
    return [aug[r][size] for r in range(size)]


def _check_symbol(x: int) -> int:
    if not isinstance(x, int) or not 0 <= x < FIELD_SIZE:
        raise ParamViolation("symbols must be integers in 0..255")
    return x
