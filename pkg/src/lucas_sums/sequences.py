"""Generalized Fibonacci (U) and Lucas (V) sequences.

For integers p, q with pq != 0 and p^2 - 4q != 0::

    U_0 = 0, U_1 = 1, U_n = p U_{n-1} - q U_{n-2}
    V_0 = 2, V_1 = p, V_n = p V_{n-1} - q V_{n-2}

Everything is exact integer arithmetic. Negative indices are only
available when q = +-1, where U_{-n} = -q^n U_n and V_{-n} = q^n V_n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InexactDivision, NegativeIndexUnsupported, ZeroDiscriminant, ZeroParameter

__all__ = [
    "SequenceParams",
    "SequencePoint",
    "DoublingStats",
    "PRESETS",
    "validate_params",
    "preset",
    "eval_pair",
    "eval_naive",
    "iter_naive",
    "qpow",
    "exact_div",
]


@dataclass(frozen=True, order=True)
class SequenceParams:
    p: int
    q: int
    delta: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.p == 0 or self.q == 0:
            raise ZeroParameter(f"p and q must be nonzero, got p={self.p}, q={self.q}")
        delta = self.p * self.p - 4 * self.q
        if delta == 0:
            raise ZeroDiscriminant(f"p^2 - 4q = 0 for p={self.p}, q={self.q}")
        object.__setattr__(self, "delta", delta)

    @property
    def unit_q(self) -> bool:
        return self.q in (-1, 1)

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "delta": self.delta}


@dataclass(frozen=True)
class SequencePoint:
    index: int
    u: int
    v: int


@dataclass
class DoublingStats:
    """Mutable counter passed to :func:`eval_pair` to observe its work."""

    doublings: int = 0
    increments: int = 0


def validate_params(p: int, q: int) -> SequenceParams:
    return SequenceParams(int(p), int(q))


PRESETS = {
    "fibonacci": SequenceParams(1, -1),
    "pell": SequenceParams(2, -1),
    "jacobsthal": SequenceParams(1, -2),
}


def preset(name: str) -> SequenceParams:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


def qpow(params: SequenceParams, e: int) -> int:
    """q**e, including negative e when q is a unit (q**2 == 1)."""
    if e >= 0:
        return params.q**e
    if not params.unit_q:
        raise NegativeIndexUnsupported(f"q^{e} is not an integer for q={params.q}")
    return params.q ** (e % 2)


def exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivision(numerator, denominator)
    return quotient


def _check_index(params: SequenceParams, n: int) -> None:
    if n < 0 and not params.unit_q:
        raise NegativeIndexUnsupported(
            f"index {n} < 0 needs |q| = 1 (got q={params.q})"
        )


def _reflect(params: SequenceParams, n: int, u: int, v: int) -> SequencePoint:
    # (u, v) = (U_|n|, V_|n|) with n < 0; q^{-|n|} = q^{|n| mod 2} for unit q
    sign = params.q ** (n % 2)
    return SequencePoint(n, -sign * u, sign * v)


def eval_pair(params: SequenceParams, n: int, stats: DoublingStats | None = None) -> SequencePoint:
    """Return (U_n, V_n) in O(log |n|) big-integer operations.

    Walks the bits of |n| from the top, keeping (U_k, V_k, q^k)::

        U_{2k} = U_k V_k            V_{2k} = V_k^2 - 2 q^k
        U_{k+1} = (p U_k + V_k) / 2 V_{k+1} = (delta U_k + p V_k) / 2

    Both halvings are exact since p U_k + V_k = 2 U_{k+1} and
    delta U_k + p V_k = 2 V_{k+1} hold for every k.
    """
    _check_index(params, n)
    p, q, delta = params.p, params.q, params.delta
    k = abs(n)
    u, v, qk = 0, 2, 1
    for bit in bin(k)[2:]:
        u, v, qk = u * v, v * v - 2 * qk, qk * qk
        if stats is not None:
            stats.doublings += 1
        if bit == "1":
            u, v, qk = (p * u + v) >> 1, (delta * u + p * v) >> 1, qk * q
            if stats is not None:
                stats.increments += 1
    if n < 0:
        return _reflect(params, n, u, v)
    return SequencePoint(n, u, v)


def iter_naive(params: SequenceParams, stop: int):
    """Yield SequencePoint(n) for n = 0, 1, ..., stop - 1 by plain iteration."""
    p, q = params.p, params.q
    u0, u1 = 0, 1
    v0, v1 = 2, p
    for n in range(stop):
        yield SequencePoint(n, u0, v0)
        u0, u1 = u1, p * u1 - q * u0
        v0, v1 = v1, p * v1 - q * v0


def eval_naive(params: SequenceParams, n: int) -> SequencePoint:
    """Return (U_n, V_n) by iterating the recurrence |n| times."""
    _check_index(params, n)
    (pt,) = deque(iter_naive(params, abs(n) + 1), maxlen=1)
    if n < 0:
        return _reflect(params, n, pt.u, pt.v)
    return pt
