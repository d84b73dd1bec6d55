"""Compiled-in catalog of U/V identities and an exhaustive sweep engine.

Every identity is a function returning a list of ``(lhs, rhs)`` integer
pairs for one binding of its free variables; rational coefficients are
cleared by cross-multiplying, so equality is always exact.

Status ``assumed-true`` means a counterexample is a correctness alarm and
aborts the sweep. Status ``audit`` means the printed relation is only being
checked and its verdict, either way, is part of the report.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .errors import (
    CorrectnessAlarm,
    DomainViolation,
    MissingContext,
    NegativeIndexUnsupported,
    UnitQRequired,
    UnknownIdentity,
)
from .sequences import SequenceParams, eval_pair, exact_div, qpow

__all__ = [
    "ASSUMED_TRUE",
    "AUDIT",
    "Identity",
    "Lucas",
    "CheckResult",
    "Counterexample",
    "Grid",
    "VerificationReport",
    "catalog",
    "get_identity",
    "eval_correction",
    "check_identity",
    "sweep",
    "sweep_all",
    "default_grid",
]

ASSUMED_TRUE = "assumed-true"
AUDIT = "audit"

INDEX = range(-6, 7)
COUNT = range(0, 13)
LONG = range(0, 41)


class Lucas:
    """Memoized U, V, q-powers, auxiliary sequences and naive sums for one (p, q)."""

    def __init__(self, params: SequenceParams):
        self.params = params
        self.p = params.p
        self.D = params.delta
        self._points = {}
        self._derived = {}

    def _point(self, n):
        pt = self._points.get(n)
        if pt is None:
            pt = self._points[n] = eval_pair(self.params, n)
        return pt

    def U(self, n):
        return self._point(n).u

    def V(self, n):
        return self._point(n).v

    def q(self, e=1):
        return qpow(self.params, e)

    def _aux(self, kind, n):
        key = (kind, n)
        val = self._derived.get(key)
        if val is not None:
            return val
        if kind == "a":
            val = exact_div(self.U(2 * n), self.p)
        elif kind == "c":
            val = exact_div(self.U(4 * n + 4), self.U(4))
        elif kind == "d":
            val = exact_div(self.V(4 * n + 2), self.V(2))
        elif kind == "b":
            val = exact_div(self.d(n + 1) - 1, self.p * self.p * self.D)
        else:
            val = self.p * (self.d(n) - 1)
        self._derived[key] = val
        return val

    def a(self, n):
        return self._aux("a", n)

    def b(self, n):
        return self._aux("b", n)

    def c(self, n):
        return self._aux("c", n)

    def d(self, n):
        return self._aux("d", n)

    def e(self, n):
        return self._aux("e", n)

    def S(self, X, Y, r, s, n):
        return sum(X(r + 2 * i) * Y(s + 2 * i) for i in range(n + 1))

    def A(self, X, Y, r, s, n):
        return sum((-1) ** i * X(r + 2 * i) * Y(s + 2 * i) for i in range(n + 1))

    # correction sequences, all indexed through m = n // 2

    def delta_corr(self, n):
        m = n // 2
        if n % 2 == 0:
            return -self.q() * self.V(2 * m + 1) ** 2
        return -self.p * self.q() * self.D * self.U(4 * m + 4)

    def theta_corr(self, n):
        m = n // 2
        if n % 2 == 0:
            return -2 * self.q() * (1 + self.d(m))
        return -self.p**2 * self.q() * self.D * self.c(m)

    def xi_corr(self, n):
        m = n // 2
        if n % 2 == 0:
            return -self.p * self.q() * (1 + self.d(m))
        return -self.p * self.D * self.c(m)

    def lambda_corr(self, n, r, s, t):
        return -self.q(r - s) * self.D * self.S(self.U, self.U, r, r + t, n)


@dataclass(frozen=True)
class Identity:
    id: str
    group: str
    formula: str
    variables: tuple
    ranges: dict
    equations: Callable = field(repr=False, compare=False)
    status: str = ASSUMED_TRUE
    unit_q: bool = True
    nonnegative: tuple = ()
    where: Callable | None = field(default=None, repr=False, compare=False)
    where_text: str = ""
    fixed_params: tuple | None = None
    note: str = ""

    def describe(self) -> dict:
        return {
            "id": self.id,
            "group": self.group,
            "formula": self.formula,
            "variables": list(self.variables),
            "constraints": self.constraints(),
            "status": self.status,
            "note": self.note,
        }

    def constraints(self) -> list:
        out = []
        if self.unit_q:
            out.append("q in {-1, 1}")
        out.extend(f"{v} >= 0" for v in self.nonnegative)
        if self.where_text:
            out.append(self.where_text)
        if self.fixed_params:
            out.append("(p, q) in " + ", ".join(f"({x.p}, {x.q})" for x in self.fixed_params))
        return out


# ---------------------------------------------------------------------------
# identity bodies; each returns [(lhs, rhs), ...]


def _reflect_u(L, n):
    return [(L.U(-n), -L.q(-n) * L.U(n))]


def _reflect_v(L, n):
    return [(L.V(-n), L.q(-n) * L.V(n))]


def _uu_product(L, n, m):
    return [(L.D * L.U(n) * L.U(m), L.V(n + m) - L.q(m) * L.V(n - m))]


def _vv_product(L, n, m):
    return [(L.V(n) * L.V(m), L.V(n + m) + L.q(m) * L.V(n - m))]


def _uv_product(L, n, m):
    return [(L.U(n) * L.V(m), L.U(n + m) + L.q(m) * L.U(n - m))]


def _vu_product(L, n, m):
    return [(L.V(n) * L.U(m), L.U(n + m) - L.q(m) * L.U(n - m))]


def _uu_cross(L, n, m, h):
    return [(L.U(n) * L.U(m + h) - L.U(n + h) * L.U(m), L.q(m) * L.U(h) * L.U(n - m))]


def _vv_cross(L, n, m, h):
    return [(L.V(n) * L.V(m + h) - L.V(n + h) * L.V(m), -L.q(m) * L.D * L.U(h) * L.U(n - m))]


def _vv_uu_cross(L, n, m, h):
    return [(L.V(n) * L.V(m + h) - L.D * L.U(n + h) * L.U(m), L.q(m) * L.V(h) * L.V(n - m))]


def _uv_cross(L, n, m, h):
    return [(L.U(n) * L.V(m + h) - L.U(n + h) * L.V(m), -L.q(m) * L.U(h) * L.V(n - m))]


def _stride4(L, X, r, n, alternating):
    return sum((-1 if alternating and i & 1 else 1) * X(r + 4 * i) for i in range(n + 1))


def _chain(*sides):
    return [(sides[0], other) for other in sides[1:]]


def _s4_u(L, r, n):
    lhs = L.D * L.U(2) * _stride4(L, L.U, r, n, False)
    return _chain(lhs, L.V(4 * n + r + 2) - L.V(r - 2), L.D * L.U(2 * n + r) * L.U(2 * n + 2))


def _s4_v(L, r, n):
    lhs = L.U(2) * _stride4(L, L.V, r, n, False)
    return _chain(lhs, L.U(4 * n + r + 2) - L.U(r - 2), L.V(2 * n + r) * L.U(2 * n + 2))


def _s4_alt_u(L, r, n):
    lhs = L.V(2) * _stride4(L, L.U, r, n, True)
    sign = (-1) ** n
    if n % 2 == 0:
        product = L.U(2 * n + r) * L.V(2 * n + 2)
    else:
        product = -L.V(2 * n + r) * L.U(2 * n + 2)
    return _chain(lhs, sign * L.U(4 * n + r + 2) + L.U(r - 2), product)


def _s4_alt_v(L, r, n):
    lhs = L.V(2) * _stride4(L, L.V, r, n, True)
    sign = (-1) ** n
    if n % 2 == 0:
        product = L.V(2 * n + r) * L.V(2 * n + 2)
    else:
        product = -L.D * L.U(2 * n + r) * L.U(2 * n + 2)
    return _chain(lhs, sign * L.V(4 * n + r + 2) + L.V(r - 2), product)


def _closed(kind, pair, corrected=False):
    """Stride-2 closed forms, both sides multiplied by the full denominator."""

    def body(L, r, s, n):
        X = L.V if pair == "VV" else L.U
        Y = L.U if pair == "UU" else L.V
        top, bottom = 4 * n + r + s + 2, r + s - 2
        qr = L.q(r)
        if kind == "S":
            lhs = L.S(X, Y, r, s, n)
            if pair == "UU":
                return [(L.p * L.D * lhs, L.U(top) - L.U(bottom) - L.p * (n + 1) * qr * L.V(s - r))]
            if pair == "VV":
                return [(L.p * lhs, L.U(top) - L.U(bottom) + L.p * (n + 1) * qr * L.V(s - r))]
            scale = L.D if corrected else 1
            return [(L.p * L.D * lhs, L.V(top) - L.V(bottom) - scale * L.p * (n + 1) * qr * L.U(s - r))]
        lhs = L.A(X, Y, r, s, n)
        sign, eps, v2 = (-1) ** n, 1 - n % 2, L.V(2)
        if pair == "UU":
            return [(L.D * v2 * lhs, L.V(bottom) + sign * L.V(top) - eps * v2 * qr * L.V(s - r))]
        if pair == "VV":
            return [(v2 * lhs, L.V(bottom) + sign * L.V(top) + eps * v2 * qr * L.V(s - r))]
        return [(v2 * lhs, L.U(bottom) + sign * L.U(top) - eps * v2 * qr * L.U(s - r))]

    return body


def _split(kind, pair):
    def body(L, r, s, n):
        X = L.V if pair == "VV" else L.U
        Y = L.U if pair == "UU" else L.V
        qr = L.q(r)
        if kind == "S":
            lhs = L.S(X, Y, r, s, n)
            a = L.a(n + 1)
            if pair == "UU":
                return [(L.D * lhs, a * L.V(2 * n + r + s) - (n + 1) * qr * L.V(s - r))]
            if pair == "VV":
                return [(lhs, a * L.V(2 * n + r + s) + (n + 1) * qr * L.V(s - r))]
            return [(lhs, a * L.U(2 * n + r + s) - (n + 1) * qr * L.U(s - r))]
        lhs = L.A(X, Y, r, s, n)
        m = n // 2
        if pair == "UU":
            lhs = L.D * lhs
        if n % 2 == 0:
            d = L.d(m)
            if pair == "UV":
                return [(lhs, d * L.U(4 * m + r + s) - qr * L.U(s - r))]
            sign = -1 if pair == "UU" else 1
            return [(lhs, d * L.V(4 * m + r + s) + sign * qr * L.V(s - r))]
        c = L.c(m)
        if pair == "UV":
            return [(lhs, -L.p * c * L.V(4 * m + r + s + 2))]
        return [(lhs, -L.p * L.D * c * L.U(4 * m + r + s + 2))]

    return body


def _squares_difference(L, r, s, n):
    w = L.q(s - r)
    u_side = L.S(L.U, L.U, s, s, n) - w * L.S(L.U, L.U, r, r, n)
    v_side = L.S(L.V, L.V, s, s, n) - w * L.S(L.V, L.V, r, r, n)
    rhs = L.a(n + 1) * L.U(s - r) * L.U(2 * n + r + s)
    # middle member carries 1/delta: compare delta * u_side with v_side
    return [(u_side, rhs), (L.D * u_side, v_side)]


def _squares_difference_with_t(L, r, s, t, n):
    w = L.q(s - r)
    u_side = L.S(L.U, L.U, s, s, n) - w * L.S(L.U, L.U, r, r, n)
    return [(u_side, L.a(n + 1) * L.U(s - r) * L.U(2 * n + r + s + t))]


def _shifted_difference(L, r, s, t, n):
    lhs = L.S(L.V, L.V, s, s + t, n) + L.D * L.q(s - r) * L.S(L.U, L.U, r, r + t, n)
    return [(lhs, L.a(n + 1) * L.V(s - r) * L.V(2 * n + r + s + t))]


def _squares_of_v(L, k):
    p, q, D = L.p, L.q(), L.D
    return [
        (-p * p * q + L.V(2 * k) ** 2, D * L.U(2 * k - 1) * L.U(2 * k + 1)),
        (-q * L.V(2) ** 2 + L.V(2 * k - 1) ** 2, D * L.U(2 * k - 3) * L.U(2 * k + 1)),
    ]


def _even_even_corrected(L, k, n):
    m = n // 2
    lhs = L.delta_corr(n) + L.A(L.V, L.V, 2 * k, 2 * k, n)
    if n % 2 == 0:
        rhs = L.D * L.d(m) * L.U(2 * k + 2 * m + 1) * L.U(2 * k + 2 * m - 1)
    else:
        rhs = -L.p * L.D * L.c(m) * L.U(2 * k + 2 * m + 3) * L.V(2 * k + 2 * m - 1)
    return [(lhs, rhs)]


def _odd_odd_corrected(L, k, n):
    m = n // 2
    lhs = L.theta_corr(n) + L.A(L.V, L.V, 2 * k - 1, 2 * k - 1, n)
    if n % 2 == 0:
        rhs = L.D * L.d(m) * L.U(2 * k + 2 * m - 1) ** 2
    else:
        rhs = -L.p * L.D * L.c(m) * L.U(2 * k + 2 * m + 1) * L.V(2 * k + 2 * m - 1)
    return [(lhs, rhs)]


def _odd_even_corrected(flip_odd_sign):
    def body(L, k, n):
        m = n // 2
        corr = L.xi_corr(n)
        if flip_odd_sign and n % 2:
            corr = -corr
        lhs = corr + L.A(L.V, L.V, 2 * k - 1, 2 * k, n)
        if n % 2 == 0:
            rhs = L.D * L.d(m) * L.U(2 * k + 2 * m - 1) * L.U(2 * k + 2 * m)
        else:
            rhs = -L.p * L.D * L.c(m) * L.U(2 * k + 2 * m) * L.V(2 * k + 2 * m + 1)
        return [(lhs, rhs)]

    return body


def _delta_step(L, m):
    return [(L.delta_corr(m), L.delta_corr(m - 2) - L.p**2 * L.q() * L.D * L.V(2 * m))]


def _theta_step_odd(L, m):
    return [(L.theta_corr(m), L.theta_corr(m - 2) - L.p**2 * L.q() * L.D * L.d((m - 1) // 2))]


def _theta_step_even(L, m):
    return [(L.theta_corr(m), -L.theta_corr(m - 2) - 2 * L.q() * L.V(m // 2) ** 2)]


def _recurrence(kind, constant=None):
    def body(L, m):
        x = getattr(L, kind)
        if kind == "a":
            mult, const = L.V(2), 0
        else:
            mult = L.V(4)
            const = {"b": 1, "c": 0, "d": 0, "e": L.p**3 * L.D}[kind]
        if constant is not None:
            const = constant(L)
        return [(x(m), mult * x(m - 1) - x(m - 2) + const)]

    return body


def _e_closed(L, m):
    lhs = L.e(m)
    total_c = sum(L.c(j - 1) for j in range(m + 1))
    return [(L.V(2) * lhs, L.p * (L.V(4 * m + 2) - L.V(-2))), (lhs, L.p**3 * L.D * total_c)]


def _lambda_closed(L, r, s, t, n):
    lam = L.lambda_corr(n, r, s, t)
    rhs = -L.q(s - r) * (L.U(4 * n + 2 * r + t + 2) - L.U(2 * r + t - 2)) + L.p * (n + 1) * L.q(s) * L.V(t)
    return [(L.p * lam, rhs)]


def _shifted_with_lambda(L, r, s, t, n):
    lhs = L.S(L.V, L.V, s, s + t, n)
    return [(lhs, L.lambda_corr(n, r, s, t) + L.a(n + 1) * L.V(s - r) * L.V(2 * n + r + s + t))]


def _even_squares(L, k, n):
    m = n // 2
    lhs = L.A(L.V, L.V, 2 * k, 2 * k, n)
    if n % 2 == 0:
        rhs = L.d(m) * L.V(2 * k + 2 * m) ** 2 - 2 * L.p**2 * L.D * L.b(m - 1)
    else:
        rhs = L.p**2 * L.D * L.c(m) * (1 - L.a(k + m + 1) * L.V(2 * k + 2 * m))
    return [(lhs, rhs)]


def _odd_squares(L, k, n):
    m = n // 2
    lhs = L.A(L.V, L.V, 2 * k + 1, 2 * k + 1, n)
    if n % 2 == 0:
        rhs = -L.D * L.U(2 * m + 1) ** 2 + L.d(m) * L.V(2 * k + 2 * m) * L.V(2 * k + 2 * m + 2)
    else:
        rhs = -L.p**2 * L.D * L.c(m) * L.a(k + m + 1) * L.V(2 * k + 2 * m + 2)
    return [(lhs, rhs)]


def _adjacent_products(L, k, n):
    m = n // 2
    lhs = L.A(L.V, L.V, 2 * k, 2 * k + 1, n)
    if n % 2 == 0:
        rhs = L.d(m) * L.V(2 * k + 2 * m) * L.V(2 * k + 2 * m + 1) - L.e(m)
    else:
        rhs = -L.p * L.D * L.c(m) * (L.U(2 * k + 2 * m + 3) * L.V(2 * k + 2 * m) - L.p**2 + L.q())
    return [(lhs, rhs)]


def _v_product_rearranged(L, n, m, r, s):
    lhs = L.V(n) * L.V(m)
    return [
        (lhs, L.V(n + r) * L.V(m - r) + L.q(n) * L.D * L.U(r) * L.U(m - n - r)),
        (lhs, L.D * L.U(n + s) * L.U(m - s) + L.q(m - s) * L.V(s) * L.V(n - m + s)),
    ]


def _pell_star(L, k):
    Q, P = L.V, L.U
    star = lambda j: 2 * P(j)  # noqa: E731
    return _chain(
        Q(2 * k) * Q(2 * k + 1),
        Q(2 * k + 3) * Q(2 * k - 2) - 80,
        8 * P(2 * k + 2) * P(2 * k - 1) - 12,
        2 * (star(2 * k + 2) * star(2 * k - 1) - 6),
    )


def _h1(L, k, m):
    return [(L.U(4 * k + 4 * m + 2), L.U(2 * k + 2 * m + 3) * L.V(2 * k + 2 * m - 1) - L.q() * L.U(4))]


def _h2(corrected):
    def body(L, k, m):
        tail = L.U(2 * k + 2 * m - 1) if corrected else L.V(2 * k + 2 * m - 1)
        return [(L.V(4 * k + 4 * m), L.D * L.U(2 * k + 2 * m + 1) * tail + L.q() * L.V(2))]

    return body


def _h3(L, m):
    return [(L.V(4 * m + 2) + 2 * L.q(), L.V(2 * m + 1) ** 2)]


def _u_split(t):
    # printed index pattern with its parameter read as t
    def body(L, k, m):
        lead = 2 * k + 2 * m + 2 - t * (t - 2)
        trail = 2 * k + 2 * m + t * (t - 1)
        return [(L.U(4 * k + 4 * m + t + 2), L.U(lead) * L.V(trail) - L.U((2 - t) * (2 * t + 1)))]

    return body


def _h7(L, k, m):
    return [(L.U(4 * k + 4 * m), L.U(2 * k + 2 * m + 1) * L.V(2 * k + 2 * m - 1) - L.q() * L.U(2))]


def _h8(L, k, m):
    return [(L.V(4 * k + 4 * m - 2), L.D * L.U(2 * k + 2 * m - 1) ** 2 + 2 * L.q())]


def _h9(L, k, m):
    return [(L.U(4 * k + 4 * m + 1), L.U(2 * k + 2 * m) * L.V(2 * k + 2 * m + 1) + 1)]


def _h10(L, k, m):
    return [(L.V(4 * k + 4 * m - 1), L.D * L.U(2 * k + 2 * m - 1) * L.U(2 * k + 2 * m) + L.p * L.q())]


def _v_split(t):
    def body(L, k, m):
        return [(L.V(4 * k + 4 * m + t), L.V(2 * k + 2 * m + t) * L.V(2 * k + 2 * m) - L.V(t))]

    return body


def _h14(L, m):
    return _chain(L.V(2) * L.d(m) - 2 * L.q(), L.V(4 * m + 2) - 2 * L.q(), L.D * L.U(2 * m + 1) ** 2)


def _odd(b):
    return b["m"] % 2 == 1


def _even(b):
    return b["m"] % 2 == 0


def _build_catalog():
    items = []

    def add(id, group, formula, variables, equations, ranges, **kw):
        rng = dict(zip(variables, ranges))
        items.append(Identity(id, group, formula, tuple(variables), rng, equations, **kw))

    g = "reflection and product identities"
    add("L1.1", g, "U_{-n} = -q^{-n} U_n", "n", _reflect_u, [INDEX])
    add("L1.2", g, "V_{-n} = q^{-n} V_n", "n", _reflect_v, [INDEX])
    for i, (f, text) in enumerate(
        [
            (_uu_product, "D U_n U_m = V_{n+m} - q^m V_{n-m}"),
            (_vv_product, "V_n V_m = V_{n+m} + q^m V_{n-m}"),
            (_uv_product, "U_n V_m = U_{n+m} + q^m U_{n-m}"),
            (_vu_product, "V_n U_m = U_{n+m} - q^m U_{n-m}"),
        ],
        start=3,
    ):
        add(f"L1.{i}", g, text, "nm", f, [INDEX, INDEX], unit_q=False)
    for i, (f, text) in enumerate(
        [
            (_uu_cross, "U_n U_{m+h} - U_{n+h} U_m = q^m U_h U_{n-m}"),
            (_vv_cross, "V_n V_{m+h} - V_{n+h} V_m = -q^m D U_h U_{n-m}"),
            (_vv_uu_cross, "V_n V_{m+h} - D U_{n+h} U_m = q^m V_h V_{n-m}"),
            (_uv_cross, "U_n V_{m+h} - U_{n+h} V_m = -q^m U_h V_{n-m}"),
        ],
        start=7,
    ):
        add(f"L1.{i}", g, text, "nmh", f, [INDEX, INDEX, INDEX], unit_q=False)

    g = "stride-4 partial sums"
    nn = {"nonnegative": ("n",)}
    add("L2.1", g, "D U_2 sum U_{r+4i} = V_{4n+r+2} - V_{r-2} = D U_{2n+r} U_{2n+2}", "rn", _s4_u, [INDEX, COUNT], **nn)
    add("L2.2", g, "U_2 sum V_{r+4i} = U_{4n+r+2} - U_{r-2} = V_{2n+r} U_{2n+2}", "rn", _s4_v, [INDEX, COUNT], **nn)
    add(
        "L2.3", g,
        "V_2 sum (-1)^i U_{r+4i} = (-1)^n U_{4n+r+2} + U_{r-2} = U_{2n+r} V_{2n+2} (n even), -V_{2n+r} U_{2n+2} (n odd)",
        "rn", _s4_alt_u, [INDEX, COUNT], **nn,
    )
    add(
        "L2.4", g,
        "V_2 sum (-1)^i V_{r+4i} = (-1)^n V_{4n+r+2} + V_{r-2} = V_{2n+r} V_{2n+2} (n even), -D U_{2n+r} U_{2n+2} (n odd)",
        "rn", _s4_alt_v, [INDEX, COUNT], **nn,
    )

    g = "stride-2 sum closed forms"
    rsn = [INDEX, INDEX, COUNT]
    closed = [
        ("T1.1", "S", "UU", "S(U) = (U_{4n+r+s+2} - U_{r+s-2}) / (p D) - (n+1) q^r V_{s-r} / D"),
        ("T1.2", "S", "VV", "S(V) = (U_{4n+r+s+2} - U_{r+s-2}) / p + (n+1) q^r V_{s-r}"),
        ("T1.3", "S", "UV", "S(U,V) = (V_{4n+r+s+2} - V_{r+s-2}) / (p D) - (n+1) q^r U_{s-r} / D"),
        ("T1.4", "A", "UU", "A(U) = (V_{r+s-2} + (-1)^n V_{4n+r+s+2}) / (D V_2) - eps q^r V_{s-r} / D"),
        ("T1.5", "A", "VV", "A(V) = (V_{r+s-2} + (-1)^n V_{4n+r+s+2}) / V_2 + eps q^r V_{s-r}"),
        ("T1.6", "A", "UV", "A(U,V) = (U_{r+s-2} + (-1)^n U_{4n+r+s+2}) / V_2 - eps q^r U_{s-r}"),
    ]
    for id, kind, pair, text in closed:
        if id == "T1.3":
            add(
                id, g, text, "rsn", _closed(kind, pair), rsn, nonnegative=("n",), status=AUDIT,
                note="printed 1/D on the (n+1) term is spurious; see T1.3-corrected",
            )
            add(
                "T1.3-corrected", g,
                "S(U,V) = (V_{4n+r+s+2} - V_{r+s-2}) / (p D) - (n+1) q^r U_{s-r}",
                "rsn", _closed(kind, pair, corrected=True), rsn, nonnegative=("n",),
            )
        else:
            add(id, g, text, "rsn", _closed(kind, pair), rsn, nonnegative=("n",))

    g = "parity-split sum forms"
    split = [
        ("C1.1", "S", "UU", "D S(U) = a_{n+1} V_{2n+r+s} - (n+1) q^r V_{s-r}"),
        ("C1.2", "S", "VV", "S(V) = a_{n+1} V_{2n+r+s} + (n+1) q^r V_{s-r}"),
        ("C1.3", "S", "UV", "S(U,V) = a_{n+1} U_{2n+r+s} - (n+1) q^r U_{s-r}"),
        ("C1.4", "A", "UU", "D A(U) = d_m V_{4m+r+s} - q^r V_{s-r} (n=2m); -p D c_m U_{4m+r+s+2} (n=2m+1)"),
        ("C1.5", "A", "VV", "A(V) = d_m V_{4m+r+s} + q^r V_{s-r} (n=2m); -p D c_m U_{4m+r+s+2} (n=2m+1)"),
        ("C1.6", "A", "UV", "A(U,V) = d_m U_{4m+r+s} - q^r U_{s-r} (n=2m); -p c_m V_{4m+r+s+2} (n=2m+1)"),
    ]
    for id, kind, pair, text in split:
        add(id, g, text, "rsn", _split(kind, pair), rsn, nonnegative=("n",))

    g = "difference of sums"
    add(
        "C2.11", g,
        "S^{(s,s)}(U) - q^{s-r} S^{(r,r)}(U) = (S^{(s,s)}(V) - q^{s-r} S^{(r,r)}(V)) / D = a_{n+1} U_{s-r} U_{2n+r+s}",
        "rsn", _squares_difference, rsn, nonnegative=("n",),
    )
    add(
        "C2.11-printed", g,
        "S^{(s,s)}(U) - q^{s-r} S^{(r,r)}(U) = a_{n+1} U_{s-r} U_{2n+r+s+t}",
        "rstn", _squares_difference_with_t, [INDEX, INDEX, INDEX, COUNT], nonnegative=("n",), status=AUDIT,
        note="trailing index as printed, with t; the left side does not depend on t",
    )
    add(
        "C2.13", g,
        "S^{(s,s+t)}(V) + D q^{s-r} S^{(r,r+t)}(U) = a_{n+1} V_{s-r} V_{2n+r+s+t}",
        "rstn", _shifted_difference, [INDEX, INDEX, INDEX, COUNT], nonnegative=("n",),
    )

    g = "alternating square sums with corrections"
    kn = [COUNT, COUNT]
    add("T91", g, "-p^2 q + V_{2k}^2 = D U_{2k-1} U_{2k+1}; -q V_2^2 + V_{2k-1}^2 = D U_{2k-3} U_{2k+1}",
        "k", _squares_of_v, [COUNT])
    add(
        "T92", g,
        "delta_n + A^{(2k,2k)}(V) = D d_m U_{2k+2m+1} U_{2k+2m-1} (n=2m); -p D c_m U_{2k+2m+3} V_{2k+2m-1} (n=2m+1)",
        "kn", _even_even_corrected, kn, nonnegative=("n",),
    )
    add(
        "T93", g,
        "theta_n + A^{(2k-1,2k-1)}(V) = D d_m U_{2k+2m-1}^2 (n=2m); -p D c_m U_{2k+2m+1} V_{2k+2m-1} (n=2m+1)",
        "kn", _odd_odd_corrected, kn, nonnegative=("n",),
    )
    add(
        "T94", g,
        "xi_n + A^{(2k-1,2k)}(V) = D d_m U_{2k+2m-1} U_{2k+2m} (n=2m); -p D c_m U_{2k+2m} V_{2k+2m+1} (n=2m+1)",
        "kn", _odd_even_corrected(False), kn, nonnegative=("n",), status=AUDIT,
        note="with xi_{2m+1} = -p D c_m as printed the odd branch fails; see T94-corrected",
    )
    add(
        "T94-corrected", g,
        "same as T94 with xi_{2m+1} = +p D c_m",
        "kn", _odd_even_corrected(True), kn, nonnegative=("n",),
    )
    add("R-delta", g, "delta_m = delta_{m-2} - p^2 q D V_{2m} (m odd)", "m", _delta_step, [COUNT],
        where=_odd, where_text="m odd")
    add("R-theta-odd", g, "theta_m = theta_{m-2} - p^2 q D d_{(m-1)/2} (m odd)", "m", _theta_step_odd, [COUNT],
        where=_odd, where_text="m odd", status=AUDIT)
    add("R-theta-even", g, "theta_m = -theta_{m-2} - 2 q V_{m/2}^2 (m even)", "m", _theta_step_even, [COUNT],
        where=_even, where_text="m even", status=AUDIT)

    g = "auxiliary recurrences"
    rec = [LONG[1:]]
    add("REC-a", g, "a_m = V_2 a_{m-1} - a_{m-2}", "m", _recurrence("a"), rec)
    add("REC-b", g, "b_m = V_4 b_{m-1} - b_{m-2} + 1", "m", _recurrence("b"), rec)
    add("REC-c", g, "c_m = V_4 c_{m-1} - c_{m-2}", "m", _recurrence("c"), rec)
    add("REC-d", g, "d_m = V_4 d_{m-1} - d_{m-2}", "m", _recurrence("d"), rec)
    add("REC-e", g, "e_m = V_4 e_{m-1} - e_{m-2} + p^3 (p^2 - 4)", "m",
        _recurrence("e", constant=lambda L: L.p**3 * (L.p**2 - 4)), rec, status=AUDIT,
        note="printed constant; equals p^3 D only when q = 1")
    add("REC-e-corrected", g, "e_m = V_4 e_{m-1} - e_{m-2} + p^3 D", "m", _recurrence("e"), rec, status=AUDIT)
    add("E-CLOSED", g, "e_m = p (V_{4m+2} - V_{-2}) / V_2 = p^3 D sum_{j=0}^{m} c_{j-1}", "m", _e_closed, [LONG],
        nonnegative=("m",), status=AUDIT)
    add("LAMBDA", g, "lambda_n = -q^{s-r} (U_{4n+2r+t+2} - U_{2r+t-2}) / p + (n+1) q^s V_t", "rstn",
        _lambda_closed, [INDEX, INDEX, INDEX, COUNT], nonnegative=("n",), status=AUDIT)

    g = "alternating Lucas sums"
    add("T5.71", g, "S^{(s,s+t)}(V) = lambda_n + a_{n+1} V_{s-r} V_{2n+r+s+t}", "rstn", _shifted_with_lambda,
        [INDEX, INDEX, INDEX, COUNT], nonnegative=("n",))
    add("T5.81", g,
        "A^{(2k,2k)}(V) = d_m V_{2k+2m}^2 - 2 p^2 D b_{m-1} (n=2m); p^2 D c_m (1 - a_{k+m+1} V_{2k+2m}) (n=2m+1)",
        "kn", _even_squares, kn, nonnegative=("n",))
    add("T5.91", g,
        "A^{(2k+1,2k+1)}(V) = -D U_{2m+1}^2 + d_m V_{2k+2m} V_{2k+2m+2} (n=2m); "
        "-p^2 D c_m a_{k+m+1} V_{2k+2m+2} (n=2m+1)",
        "kn", _odd_squares, kn, nonnegative=("n",))
    add("T5.101", g,
        "A^{(2k,2k+1)}(V) = d_m V_{2k+2m} V_{2k+2m+1} - e_m (n=2m); "
        "-p D c_m (U_{2k+2m+3} V_{2k+2m} - p^2 + q) (n=2m+1)",
        "kn", _adjacent_products, kn, nonnegative=("n",))

    g = "product rearrangement"
    add("TPROD", g, "V_n V_m = V_{n+r} V_{m-r} + q^n D U_r U_{m-n-r} = D U_{n+s} U_{m-s} + q^{m-s} V_s V_{n-m+s}",
        "nmrs", _v_product_rearranged, [INDEX] * 4)
    add("PELLSTAR", "Pell specialization",
        "Q_{2k} Q_{2k+1} = Q_{2k+3} Q_{2k-2} - 80 = 8 P_{2k+2} P_{2k-1} - 12 = 2 (P*_{2k+2} P*_{2k-1} - 6), P* = 2P",
        "k", _pell_star, [COUNT], fixed_params=(SequenceParams(2, -1),))

    g = "proof helpers"
    km = [COUNT, COUNT]
    add("H1", g, "U_{4k+4m+2} = U_{2k+2m+3} V_{2k+2m-1} - q U_4", "km", _h1, km)
    add("H2", g, "V_{4k+4m} = D U_{2k+2m+1} V_{2k+2m-1} + q V_2", "km", _h2(False), km, status=AUDIT,
        note="fails as printed; the product needs U_{2k+2m-1}, see H2-corrected")
    add("H2-corrected", g, "V_{4k+4m} = D U_{2k+2m+1} U_{2k+2m-1} + q V_2", "km", _h2(True), km)
    add("H3", g, "V_{4m+2} + 2q = V_{2m+1}^2", "m", _h3, [COUNT])
    for i, t in enumerate((0, 1, 2), start=4):
        add(f"H{i}", g,
            f"U_{{4k+4m+t+2}} = U_{{2k+2m+2-t(t-2)}} V_{{2k+2m+t(t-1)}} - U_{{(2-t)(2t+1)}} at t={t}",
            "km", _u_split(t), km, status=AUDIT,
            note="printed index pattern names its parameter r; read here as t")
    add("H7", g, "U_{4k+4m} = U_{2k+2m+1} V_{2k+2m-1} - q U_2", "km", _h7, km)
    add("H8", g, "V_{4k+4m-2} = D U_{2k+2m-1}^2 + 2q", "km", _h8, km)
    add("H9", g, "U_{4k+4m+1} = U_{2k+2m} V_{2k+2m+1} + 1", "km", _h9, km)
    add("H10", g, "V_{4k+4m-1} = D U_{2k+2m-1} U_{2k+2m} + p q", "km", _h10, km)
    for i, t in enumerate((0, 1, 2), start=11):
        add(f"H{i}", g, f"V_{{4k+4m+t}} = V_{{2k+2m+t}} V_{{2k+2m}} - V_t at t={t}", "km", _v_split(t), km)
    add("H14", g, "V_2 d_m - 2q = V_{4m+2} - 2q = D U_{2m+1}^2", "m", _h14, [COUNT])
    return tuple(items)


_CATALOG = _build_catalog()
_BY_ID = {ident.id: ident for ident in _CATALOG}


def catalog() -> tuple:
    return _CATALOG


def get_identity(identity) -> Identity:
    if isinstance(identity, Identity):
        return identity
    try:
        return _BY_ID[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None


# ---------------------------------------------------------------------------
# single checks


_CORRECTIONS = ("delta", "theta", "xi", "lambda")


def eval_correction(params: SequenceParams, seq: str, index: int, context: tuple | None = None) -> int:
    """Evaluate delta_n, theta_n, xi_n, or lambda_n (which needs ``context=(r, s, t)``)."""
    if seq not in _CORRECTIONS:
        raise ValueError(f"unknown correction sequence {seq!r}")
    if not params.unit_q:
        raise UnitQRequired(f"correction sequences need q = +-1 (got q={params.q})")
    L = Lucas(params)
    if seq == "lambda":
        if context is None:
            raise MissingContext("lambda needs (r, s, t)")
        if index < 0:
            raise DomainViolation(f"lambda_n needs n >= 0, got {index}")
        r, s, t = context
        return L.lambda_corr(index, r, s, t)
    return getattr(L, f"{seq}_corr")(index)


@dataclass(frozen=True)
class CheckResult:
    identity: str
    params: SequenceParams
    binding: dict
    lhs: int
    rhs: int
    equal: bool
    equations: tuple


def _validate(ident: Identity, params: SequenceParams, binding: dict) -> None:
    names = set(binding)
    expected = set(ident.variables)
    if names != expected:
        raise DomainViolation(
            f"{ident.id} binds {sorted(expected)}, got {sorted(names)}"
        )
    if ident.unit_q and not params.unit_q:
        raise DomainViolation(f"{ident.id} needs q = +-1 (got q={params.q})")
    if ident.fixed_params and params not in ident.fixed_params:
        raise DomainViolation(f"{ident.id} only holds for {ident.fixed_params}")
    for v in ident.nonnegative:
        if binding[v] < 0:
            raise DomainViolation(f"{ident.id} needs {v} >= 0, got {binding[v]}")
    if ident.where is not None and not ident.where(binding):
        raise DomainViolation(f"{ident.id} needs {ident.where_text}")


def _evaluate(ident: Identity, L: Lucas, binding: dict):
    try:
        return ident.equations(L, **binding)
    except NegativeIndexUnsupported as exc:
        raise DomainViolation(str(exc)) from exc


def _result(ident, params, binding, equations) -> CheckResult:
    lhs, rhs = equations[0]
    for left, right in equations:
        if left != right:
            lhs, rhs = left, right
            break
    return CheckResult(
        ident.id, params, dict(binding), lhs, rhs,
        all(l == r for l, r in equations), tuple(equations),
    )


def check_identity(identity, params: SequenceParams, binding: dict) -> CheckResult:
    """Evaluate both sides of one identity at one binding.

    For chained identities (a = b = c) ``lhs``/``rhs`` are the first member
    and the first member that differs from it.
    """
    ident = get_identity(identity)
    _validate(ident, params, binding)
    return _result(ident, params, binding, _evaluate(ident, Lucas(params), binding))


# ---------------------------------------------------------------------------
# sweeps


def default_params() -> tuple:
    out = []
    for p in range(-3, 4):
        for q in (-1, 1):
            if p != 0 and p * p != 4 * q:
                out.append(SequenceParams(p, q))
    return tuple(out)


@dataclass(frozen=True)
class Grid:
    """Parameter pairs plus optional per-variable range overrides."""

    params: tuple = field(default_factory=default_params)
    ranges: dict = field(default_factory=dict)

    def ranges_for(self, ident: Identity) -> dict:
        return {v: self.ranges.get(v, ident.ranges[v]) for v in ident.variables}

    def params_for(self, ident: Identity) -> tuple:
        if ident.fixed_params:
            return ident.fixed_params
        return tuple(sorted(set(self.params)))

    def describe(self, ident: Identity) -> dict:
        return {
            "params": [[x.p, x.q] for x in self.params_for(ident)],
            "ranges": {v: [r.start, r.stop - 1] for v, r in self.ranges_for(ident).items()},
        }


def default_grid() -> Grid:
    return Grid()


@dataclass(frozen=True)
class Counterexample:
    p: int
    q: int
    binding: dict
    lhs: int
    rhs: int

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "binding": dict(self.binding),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    status: str
    grid: dict
    cases_checked: int
    skipped: int
    counterexample_count: int
    counterexamples: tuple

    @property
    def verdict(self) -> str:
        return "falsified" if self.counterexample_count else "verified-on-grid"

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "status": self.status,
            "verdict": self.verdict,
            "grid": self.grid,
            "cases_checked": self.cases_checked,
            "skipped": self.skipped,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [c.as_dict() for c in self.counterexamples],
        }


def _sweep_params(ident_id, params: SequenceParams, ranges: dict, keep: int):
    ident = get_identity(ident_id)
    L = Lucas(params)
    names = list(ranges)
    checked = skipped = failed = 0
    found = []
    for values in itertools.product(*(ranges[v] for v in names)):
        binding = dict(zip(names, values))
        try:
            _validate(ident, params, binding)
            result = _result(ident, params, binding, _evaluate(ident, L, binding))
        except DomainViolation:
            skipped += 1
            continue
        checked += 1
        if not result.equal:
            failed += 1
            if len(found) < keep:
                found.append(Counterexample(params.p, params.q, binding, result.lhs, result.rhs))
    return checked, skipped, failed, found


def sweep(identity, grid: Grid | None = None, *, workers: int = 1, max_counterexamples: int = 20,
          alarm: bool = True) -> VerificationReport:
    """Check an identity at every grid point, in lexicographic order.

    Bindings outside the identity's domain are skipped and counted. An
    assumed-true identity with any counterexample raises CorrectnessAlarm
    (carrying the report) unless ``alarm`` is False.
    """
    ident = get_identity(identity)
    grid = grid or Grid()
    ranges = grid.ranges_for(ident)
    plist = grid.params_for(ident)
    jobs = [(ident, params, ranges, max_counterexamples) for params in plist]
    if workers > 1 and len(jobs) > 1:
        # workers look the entry up again by id; bodies are closures and do not pickle
        jobs = [(ident.id,) + job[1:] for job in jobs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_params, *zip(*jobs)))
    else:
        parts = [_sweep_params(*job) for job in jobs]

    checked = sum(x[0] for x in parts)
    skipped = sum(x[1] for x in parts)
    failed = sum(x[2] for x in parts)
    found = [c for x in parts for c in x[3]][:max_counterexamples]
    report = VerificationReport(
        ident.id, ident.status, grid.describe(ident), checked, skipped, failed, tuple(found)
    )
    if alarm and failed and ident.status == ASSUMED_TRUE:
        raise CorrectnessAlarm(report)
    return report


def sweep_all(grid: Grid | None = None, *, ids=None, workers: int = 1, **kw) -> list:
    """Sweep every catalog entry (or ``ids``) in catalog order."""
    selected = [get_identity(i) for i in ids] if ids else list(_CATALOG)
    return [sweep(ident, grid, workers=workers, **kw) for ident in selected]
