"""Auxiliary sequences a, b, c, d, e built from U and V (unit q only).

Closed forms::

    a_n = U_{2n} / U_2          c_n = U_{4n+4} / U_4
    d_n = V_{4n+2} / V_2        b_n = (d_{n+1} - 1) / (p^2 delta)
    e_n = p (d_n - 1)

and second-order recurrences seeded at n = -1, 0. Each sequence can be
produced either way so the two can be diffed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError, UnitQRequired
from .sequences import SequenceParams, eval_pair, exact_div

__all__ = [
    "DerivedKind",
    "DerivedTable",
    "derived_closed",
    "derived_table",
    "recurrence_coefficients",
    "printed_e_constant",
]


class DerivedKind(str, enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"


@dataclass(frozen=True)
class DerivedTable:
    kind: DerivedKind
    params: SequenceParams
    start: int
    values: tuple

    def __getitem__(self, n: int) -> int:
        return self.values[n - self.start]

    def __len__(self):
        return len(self.values)


# (x_{-1}, x_0)
_SEEDS = {
    DerivedKind.A: (-1, 0),
    DerivedKind.B: (0, 1),
    DerivedKind.C: (0, 1),
    DerivedKind.D: (1, 1),
    DerivedKind.E: (0, 0),
}


def printed_e_constant(params: SequenceParams) -> int:
    """p^3 (p^2 - 4): agrees with the true constant p^3 delta only when q = 1."""
    p = params.p
    return p**3 * (p * p - 4)


def _require_unit(params: SequenceParams) -> None:
    if not params.unit_q:
        raise UnitQRequired(f"derived sequences need q = +-1 (got q={params.q})")


def recurrence_coefficients(params: SequenceParams, kind) -> tuple[int, int]:
    """Return (multiplier, constant) with x_n = multiplier*x_{n-1} - x_{n-2} + constant."""
    kind = DerivedKind(kind)
    p, delta = params.p, params.delta
    if kind is DerivedKind.A:
        return eval_pair(params, 2).v, 0
    v4 = eval_pair(params, 4).v
    if kind is DerivedKind.B:
        return v4, 1
    if kind is DerivedKind.E:
        # V_4 - 2 = p^2 delta for unit q, so e_n = p(d_n - 1) picks up p^3 delta
        return v4, p**3 * delta
    return v4, 0


def derived_closed(params: SequenceParams, kind, n: int) -> int:
    """Evaluate one term through U/V and a single exact division.

    Any integer n is accepted: with q = +-1 every division is exact, also
    before the seeds at n = -1.
    """
    _require_unit(params)
    kind = DerivedKind(kind)
    p = params.p
    if kind is DerivedKind.A:
        return exact_div(eval_pair(params, 2 * n).u, p)
    if kind is DerivedKind.C:
        return exact_div(eval_pair(params, 4 * n + 4).u, eval_pair(params, 4).u)
    d_index = n + 1 if kind is DerivedKind.B else n
    d = exact_div(eval_pair(params, 4 * d_index + 2).v, eval_pair(params, 2).v)
    if kind is DerivedKind.D:
        return d
    if kind is DerivedKind.B:
        return exact_div(d - 1, p * p * params.delta)
    return p * (d - 1)


def derived_table(params: SequenceParams, kind, start: int, length: int, constant: int | None = None) -> DerivedTable:
    """Generate ``length`` terms from ``start`` by the recurrence.

    ``constant`` overrides the inhomogeneous term, which is how the printed
    e-recurrence constant gets audited.
    """
    _require_unit(params)
    kind = DerivedKind(kind)
    if start < -1:
        raise DomainError(f"tables start at n >= -1, got {start}")
    if length < 0:
        raise DomainError("length must be nonnegative")
    mult, const = recurrence_coefficients(params, kind)
    if constant is not None:
        const = constant
    prev, cur = _SEEDS[kind]
    values = [prev, cur]
    while len(values) < start + 1 + length:
        prev, cur = cur, mult * cur - prev + const
        values.append(cur)
    offset = start + 1
    return DerivedTable(kind, params, start, tuple(values[offset : offset + length]))
