import json

import pytest

from lucas_sums import (
    CorrectnessAlarm,
    DomainViolation,
    MissingContext,
    SequenceParams,
    SumQuery,
    UnitQRequired,
    UnknownIdentity,
    sum_split,
)
from lucas_sums.identities import (
    ASSUMED_TRUE,
    AUDIT,
    Grid,
    Identity,
    Lucas,
    catalog,
    check_identity,
    default_params,
    eval_correction,
    get_identity,
    sweep,
)

from conftest import brute_U, brute_V

FIB, PELL = SequenceParams(1, -1), SequenceParams(2, -1)


def small_grid(*pairs, **ranges):
    return Grid(tuple(SequenceParams(p, q) for p, q in pairs), {k: range(a, b + 1) for k, (a, b) in ranges.items()})


# corrections


@pytest.mark.parametrize(
    "seq, index, expected",
    [("delta", 0, 1), ("theta", 0, 4), ("xi", 1, -5)],
)
def test_correction_examples(seq, index, expected):
    assert eval_correction(FIB, seq, index) == expected


def test_correction_definitions_against_oracle():
    for params in default_params():
        p, q, D = params.p, params.q, params.delta
        for m in range(6):
            d = brute_V(params, 4 * m + 2) // brute_V(params, 2)
            c = brute_U(params, 4 * m + 4) // brute_U(params, 4)
            assert eval_correction(params, "delta", 2 * m) == -q * brute_V(params, 2 * m + 1) ** 2
            assert eval_correction(params, "delta", 2 * m + 1) == -p * q * D * brute_U(params, 4 * m + 4)
            assert eval_correction(params, "theta", 2 * m) == -2 * q * (1 + d)
            assert eval_correction(params, "theta", 2 * m + 1) == -p * p * q * D * c
            assert eval_correction(params, "xi", 2 * m) == -p * q * (1 + d)
            assert eval_correction(params, "xi", 2 * m + 1) == -p * D * c


def test_lambda_needs_context():
    with pytest.raises(MissingContext):
        eval_correction(FIB, "lambda", 3)
    lam = eval_correction(FIB, "lambda", 1, context=(0, 1, 0))
    # -q^{r-s} D S^{(r,r+t)}(U) with S = U_0^2 + U_2^2 = 1
    assert lam == -(-1) * 5 * 1


def test_correction_rejects_non_unit_q_and_unknown_name():
    with pytest.raises(UnitQRequired):
        eval_correction(SequenceParams(1, -2), "delta", 2)
    with pytest.raises(ValueError):
        eval_correction(FIB, "omega", 0)


# single checks


def test_check_examples():
    res = check_identity("L1.3", FIB, {"n": 3, "m": 2})
    assert res.equal and res.lhs == res.rhs == 10
    for n, m in [(0, 0), (4, -3), (-5, 2)]:
        res = check_identity("L1.7", SequenceParams(3, 1), {"n": n, "m": m, "h": 0})
        assert res.equal and res.lhs == res.rhs == 0
    res = check_identity("T91", FIB, {"k": 1})
    assert res.equal and res.equations[0] == (10, 10)
    res = check_identity("T5.81", FIB, {"k": 1, "n": 2})
    assert res.equal and res.lhs == 284
    assert 9 - 49 + 324 == 284
    res = check_identity("T5.101", FIB, {"k": 1, "n": 2})
    assert res.equal and res.lhs == 457
    res = check_identity("PELLSTAR", PELL, {"k": 1})
    assert res.equal and res.lhs == 84
    assert all(left == right == 84 for left, right in res.equations)


def test_product_identities_hold_for_non_unit_q():
    jac = SequenceParams(1, -2)
    for n in range(0, 8):
        for m in range(0, n + 1):
            assert check_identity("L1.3", jac, {"n": n, "m": m}).equal
            assert check_identity("L1.4", jac, {"n": n, "m": m}).equal


def test_domain_violations():
    with pytest.raises(DomainViolation):
        check_identity("T91", SequenceParams(1, -2), {"k": 1})
    with pytest.raises(DomainViolation):
        check_identity("T92", FIB, {"k": 1, "n": -1})
    with pytest.raises(DomainViolation):
        check_identity("T91", FIB, {"k": 1, "n": 2})
    with pytest.raises(DomainViolation):
        check_identity("PELLSTAR", FIB, {"k": 1})
    with pytest.raises(DomainViolation):
        # q^{-1} appears once n < m, not an integer for q = -2
        check_identity("L1.3", SequenceParams(1, -2), {"n": 1, "m": 3})
    with pytest.raises(UnknownIdentity):
        get_identity("NOPE")


# catalog


def test_catalog_shape():
    entries = catalog()
    ids = [e.id for e in entries]
    assert len(ids) >= 30
    assert len(set(ids)) == len(ids)
    for i in range(1, 11):
        assert f"L1.{i}" in ids
    for name in ("L2.1", "L2.4", "T91", "T92", "T93", "T94", "T5.71", "T5.101", "TPROD", "PELLSTAR",
                 "R-delta", "R-theta-odd", "R-theta-even", "H1", "H2", "H3", "H4", "H5", "H6"):
        assert name in ids
    assert get_identity("H1").formula == "U_{4k+4m+2} = U_{2k+2m+3} V_{2k+2m-1} - q U_4"
    assert {e.status for e in entries} == {ASSUMED_TRUE, AUDIT}
    for e in entries:
        d = e.describe()
        assert set(d) == {"id", "group", "formula", "variables", "constraints", "status", "note"}
        json.dumps(d)


# sweeps


def test_sweep_verifies_l15():
    report = sweep("L1.5")
    assert report.verdict == "verified-on-grid"
    assert report.counterexample_count == 0
    assert report.cases_checked == len(default_params()) * 13 * 13


def test_theta_even_is_falsified():
    report = sweep("R-theta-even", small_grid((1, -1), m=(2, 4)))
    assert report.verdict == "falsified"
    first = report.counterexamples[0]
    assert (first.p, first.q, first.binding) == (1, -1, {"m": 2})
    assert (first.lhs, first.rhs) == (14, -2)
    assert report.skipped == 1  # m = 3 is odd


def test_printed_xi_sign_branch():
    printed = sweep("T94")
    assert printed.verdict == "falsified"
    assert all(c.binding["n"] % 2 == 1 for c in printed.counterexamples)
    assert sweep("T94-corrected").verdict == "verified-on-grid"


def test_report_is_deterministic():
    a = json.dumps(sweep("T94", max_counterexamples=5).as_dict(), sort_keys=True)
    b = json.dumps(sweep("T94", max_counterexamples=5).as_dict(), sort_keys=True)
    assert a == b
    data = json.loads(a)
    assert data["counterexample_count"] > 5
    assert len(data["counterexamples"]) == 5
    assert all(isinstance(c["lhs"], str) for c in data["counterexamples"])


def test_workers_match_serial():
    serial = sweep("T5.91").as_dict()
    parallel = sweep("T5.91", workers=2).as_dict()
    assert serial == parallel
    serial = sweep("H2", max_counterexamples=3).as_dict()
    assert sweep("H2", workers=3, max_counterexamples=3).as_dict() == serial


def test_alarm_on_false_assumed_identity():
    bogus = Identity(
        "BOGUS", "test", "U_n = V_n", ("n",), {"n": range(0, 3)},
        lambda L, n: [(L.U(n), L.V(n))],
    )
    with pytest.raises(CorrectnessAlarm) as info:
        sweep(bogus, small_grid((1, -1)))
    assert info.value.report.counterexample_count == 2  # U_1 = V_1 = 1
    quiet = sweep(bogus, small_grid((1, -1)), alarm=False)
    assert quiet.verdict == "falsified"


def test_audit_identity_does_not_alarm():
    assert sweep("REC-e").verdict == "falsified"
    assert sweep("REC-e-corrected").verdict == "verified-on-grid"


# agreement with the sum engine


@pytest.mark.parametrize(
    "ident, r_of_k, s_of_k, corr",
    [
        ("T92", lambda k: 2 * k, lambda k: 2 * k, "delta"),
        ("T93", lambda k: 2 * k - 1, lambda k: 2 * k - 1, "theta"),
        ("T5.81", lambda k: 2 * k, lambda k: 2 * k, None),
        ("T5.91", lambda k: 2 * k + 1, lambda k: 2 * k + 1, None),
        ("T5.101", lambda k: 2 * k, lambda k: 2 * k + 1, None),
    ],
)
def test_matches_split_sums(ident, r_of_k, s_of_k, corr):
    for params in default_params():
        for k in range(0, 5):
            for n in range(0, 9):
                res = check_identity(ident, params, {"k": k, "n": n})
                value = res.rhs - (eval_correction(params, corr, n) if corr else 0)
                q = SumQuery("A", "VV", r_of_k(k), s_of_k(k), n)
                assert value == sum_split(params, q).value


def test_corrected_xi_matches_split_sums():
    for params in default_params():
        for k in range(0, 5):
            for n in range(0, 9):
                res = check_identity("T94-corrected", params, {"k": k, "n": n})
                xi = eval_correction(params, "xi", n) * (-1 if n % 2 else 1)
                assert res.rhs - xi == sum_split(params, SumQuery("A", "VV", 2 * k - 1, 2 * k, n)).value


@pytest.mark.parametrize("k", range(0, 8))
def test_shifted_sum_pell_lucas_cases(k):
    # the general shifted-sum identity at the bindings used for the Pell-Lucas square and product sums
    bindings = [(r, 2 * k, 0) for r in (0, 2, 1, -1)] + [(r, 2 * k + 1, 0) for r in (2, 3)] + [(0, 2 * k, 1)]
    for r, s, t in bindings:
        for n in range(0, 9):
            assert check_identity("T5.71", PELL, {"r": r, "s": s, "t": t, "n": n}).equal


def test_lucas_helper_sums():
    L = Lucas(FIB)
    assert L.S(L.U, L.U, 1, 2, 2) == 47
    assert L.A(L.V, L.V, 1, 1, 2) == 106
