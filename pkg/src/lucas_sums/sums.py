"""Stride-2 sums of products of U and V, evaluated three independent ways.

For offsets r, s and n >= 0::

    S_n^{(r,s)}(X, Y) = sum_{i=0}^{n} X_{r+2i} Y_{s+2i}
    A_n^{(r,s)}(X, Y) = sum_{i=0}^{n} (-1)^i X_{r+2i} Y_{s+2i}

``sum_naive`` adds the terms up. ``sum_closed`` uses one numerator built
from four or fewer sequence values and a single exact division, so it runs
in O(log n) big-integer operations. ``sum_split`` goes through the
auxiliary sequences a, c, d and splits alternating sums on the parity of n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .derived import derived_closed
from .errors import DomainError, SumRequiresUnitQ
from .sequences import SequenceParams, eval_naive, eval_pair, exact_div, qpow

__all__ = [
    "SumKind",
    "Pair",
    "SumQuery",
    "SumResult",
    "sum_naive",
    "sum_closed",
    "sum_split",
    "SUM_PATHS",
    "stride4_sum",
    "stride4_forms",
    "PairedSumCheck",
    "paired_sum_check",
]


class SumKind(str, enum.Enum):
    S = "S"
    A = "A"


class Pair(str, enum.Enum):
    UU = "UU"
    VV = "VV"
    UV = "UV"


@dataclass(frozen=True)
class SumQuery:
    kind: SumKind
    pair: Pair
    r: int
    s: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", SumKind(self.kind))
        object.__setattr__(self, "pair", Pair(self.pair))
        if self.n < 0:
            raise DomainError(f"sum length n must be >= 0, got {self.n}")

    @property
    def epsilon(self) -> int:
        return 1 if self.n % 2 == 0 else 0

    @property
    def m(self) -> int:
        return self.n // 2

    def as_dict(self) -> dict:
        return {"kind": self.kind.value, "pair": self.pair.value, "r": self.r, "s": self.s, "n": self.n}


@dataclass(frozen=True)
class SumResult:
    value: int
    path: str


def _require_unit(params: SequenceParams) -> None:
    if not params.unit_q:
        raise SumRequiresUnitQ(
            f"closed-form sums assume q = +-1 (got q={params.q})"
        )


def _stride2(params: SequenceParams, start: int, component: str):
    """Yield X_start, X_{start+2}, ... by forward recurrence."""
    p, q = params.p, params.q
    x0 = getattr(eval_naive(params, start), component)
    x1 = getattr(eval_naive(params, start + 1), component)
    while True:
        yield x0
        x2 = p * x1 - q * x0
        x3 = p * x2 - q * x1
        x0, x1 = x2, x3


_COMPONENTS = {Pair.UU: ("u", "u"), Pair.VV: ("v", "v"), Pair.UV: ("u", "v")}


def sum_naive(params: SequenceParams, query: SumQuery) -> SumResult:
    """Literal term-by-term summation; the oracle for the other paths.

    Does not need unit q as long as no index goes negative.
    """
    cx, cy = _COMPONENTS[query.pair]
    xs = _stride2(params, query.r, cx)
    ys = _stride2(params, query.s, cy)
    total = 0
    alternating = query.kind is SumKind.A
    for i in range(query.n + 1):
        term = next(xs) * next(ys)
        if alternating and i & 1:
            total -= term
        else:
            total += term
    return SumResult(total, "naive")


def sum_closed(params: SequenceParams, query: SumQuery) -> SumResult:
    _require_unit(params)
    p, delta = params.p, params.delta
    r, s, n = query.r, query.s, query.n
    hi, lo, diff = 4 * n + r + s + 2, r + s - 2, s - r
    top, bottom, gap = eval_pair(params, hi), eval_pair(params, lo), eval_pair(params, diff)
    qr = qpow(params, r)
    pair = query.pair

    if query.kind is SumKind.S:
        count = p * (n + 1) * qr
        if pair is Pair.UU:
            value = exact_div(top.u - bottom.u - count * gap.v, p * delta)
        elif pair is Pair.VV:
            value = exact_div(top.u - bottom.u + count * gap.v, p)
        else:
            # the per-term residual q^r U_{s-r} carries no 1/delta here
            value = exact_div(top.v - bottom.v - delta * count * gap.u, p * delta)
        return SumResult(value, "theorem1")

    v2 = eval_pair(params, 2).v
    sign = -1 if n & 1 else 1
    residual = query.epsilon * v2 * qr
    if pair is Pair.UU:
        value = exact_div(bottom.v + sign * top.v - residual * gap.v, delta * v2)
    elif pair is Pair.VV:
        value = exact_div(bottom.v + sign * top.v + residual * gap.v, v2)
    else:
        value = exact_div(bottom.u + sign * top.u - residual * gap.u, v2)
    return SumResult(value, "theorem1")


def sum_split(params: SequenceParams, query: SumQuery) -> SumResult:
    _require_unit(params)
    p, delta = params.p, params.delta
    r, s, n = query.r, query.s, query.n
    qr = qpow(params, r)
    gap = eval_pair(params, s - r)
    pair = query.pair

    if query.kind is SumKind.S:
        a = derived_closed(params, "a", n + 1)
        mid = eval_pair(params, 2 * n + r + s)
        count = (n + 1) * qr
        if pair is Pair.UU:
            value = exact_div(a * mid.v - count * gap.v, delta)
        elif pair is Pair.VV:
            value = a * mid.v + count * gap.v
        else:
            value = a * mid.u - count * gap.u
        return SumResult(value, "corollary1")

    m = query.m
    if n % 2 == 0:
        d = derived_closed(params, "d", m)
        mid = eval_pair(params, 4 * m + r + s)
        if pair is Pair.UU:
            value = exact_div(d * mid.v - qr * gap.v, delta)
        elif pair is Pair.VV:
            value = d * mid.v + qr * gap.v
        else:
            value = d * mid.u - qr * gap.u
    else:
        c = derived_closed(params, "c", m)
        mid = eval_pair(params, 4 * m + r + s + 2)
        if pair is Pair.UU:
            value = exact_div(-p * delta * c * mid.u, delta)
        elif pair is Pair.VV:
            value = -p * delta * c * mid.u
        else:
            value = -p * c * mid.v
    return SumResult(value, "corollary1")


SUM_PATHS = {"naive": sum_naive, "theorem1": sum_closed, "corollary1": sum_split}


def stride4_sum(params: SequenceParams, variant: int, r: int, n: int) -> int:
    """Direct sum over i = 0..n of X_{r+4i}, optionally alternating.

    variant 1: U, 2: V, 3: alternating U, 4: alternating V.
    """
    if variant not in (1, 2, 3, 4):
        raise DomainError(f"variant must be 1..4, got {variant}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    _require_unit(params)
    component = "u" if variant in (1, 3) else "v"
    total = 0
    for i in range(n + 1):
        x = getattr(eval_naive(params, r + 4 * i), component)
        total += -x if variant >= 3 and i & 1 else x
    return total


def stride4_forms(params: SequenceParams, variant: int, r: int, n: int) -> tuple[int, int, int]:
    """Return (scaled direct sum, difference form, product form) for one variant.

    All three are equal; the scale is delta*U_2 for variant 1, U_2 for 2 and
    V_2 for the alternating variants.
    """
    total = stride4_sum(params, variant, r, n)
    delta = params.delta
    E = lambda k: eval_pair(params, k)  # noqa: E731
    u2, v2 = E(2).u, E(2).v
    top, bottom = E(4 * n + r + 2), E(r - 2)
    lead, tail = E(2 * n + r), E(2 * n + 2)
    sign = -1 if n & 1 else 1
    if variant == 1:
        return delta * u2 * total, top.v - bottom.v, delta * lead.u * tail.u
    if variant == 2:
        return u2 * total, top.u - bottom.u, lead.v * tail.u
    if variant == 3:
        product = lead.u * tail.v if sign > 0 else -lead.v * tail.u
        return v2 * total, sign * top.u + bottom.u, product
    product = lead.v * tail.v if sign > 0 else -delta * lead.u * tail.u
    return v2 * total, sign * top.v + bottom.v, product


@dataclass(frozen=True)
class PairedSumCheck:
    """Both sides of the two difference-of-sums identities.

    ``squares`` holds (S^{(s,s)}(U) - q^{s-r} S^{(r,r)}(U),
    (S^{(s,s)}(V) - q^{s-r} S^{(r,r)}(V)) / delta, a_{n+1} U_{s-r} U_{2n+r+s}).
    ``shifted`` holds (S^{(s,s+t)}(V) + delta q^{s-r} S^{(r,r+t)}(U),
    a_{n+1} V_{s-r} V_{2n+r+s+t}). ``squares_with_t`` is the right side of
    the first identity with t added to the trailing index.
    """

    squares: tuple
    shifted: tuple
    squares_with_t: int

    @property
    def squares_hold(self) -> bool:
        return len(set(self.squares)) == 1

    @property
    def shifted_hold(self) -> bool:
        return self.shifted[0] == self.shifted[1]

    @property
    def holds(self) -> bool:
        return self.squares_hold and self.shifted_hold


def paired_sum_check(params: SequenceParams, r: int, s: int, t: int, n: int) -> PairedSumCheck:
    _require_unit(params)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")

    def S(pair, x, y):
        return sum_naive(params, SumQuery(SumKind.S, pair, x, y, n)).value

    w = qpow(params, s - r)
    a = derived_closed(params, "a", n + 1)
    E = lambda k: eval_pair(params, k)  # noqa: E731
    u_lhs = S(Pair.UU, s, s) - w * S(Pair.UU, r, r)
    v_lhs = exact_div(S(Pair.VV, s, s) - w * S(Pair.VV, r, r), params.delta)
    squares = (u_lhs, v_lhs, a * E(s - r).u * E(2 * n + r + s).u)
    shifted_lhs = S(Pair.VV, s, s + t) + params.delta * w * S(Pair.UU, r, r + t)
    shifted = (shifted_lhs, a * E(s - r).v * E(2 * n + r + s + t).v)
    with_t = a * E(s - r).u * E(2 * n + r + s + t).u
    return PairedSumCheck(squares, shifted, with_t)
