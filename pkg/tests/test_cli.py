import json

import pytest

from lucas_sums import identities, sums
from lucas_sums.cli import main
from lucas_sums.identities import Identity
from lucas_sums.oeis import OeisNetworkError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# eval


def test_eval_fibonacci(capsys):
    assert run(capsys, "eval", "--preset", "fibonacci", "-n", "10")[:2] == (0, "U=55 V=123\n")


def test_eval_defaults_to_fibonacci(capsys):
    assert run(capsys, "eval", "-n", "10")[1] == "U=55 V=123\n"


def test_eval_json_uses_decimal_strings(capsys):
    code, data = run_json(capsys, "eval", "-p", "3", "-q", "1", "-n", "300")
    assert code == 0
    assert data["command"] == "eval"
    assert data["params"] == {"p": 3, "q": 1, "delta": 5}
    value = data["values"][0]
    assert isinstance(value["u"], str) and int(value["u"]) > 2**200


def test_eval_range(capsys):
    code, data = run_json(capsys, "eval", "--preset", "pell", "--range", "0:4")
    assert [int(v["u"]) for v in data["values"]] == [0, 1, 2, 5, 12]
    assert [int(v["v"]) for v in data["values"]] == [2, 2, 6, 14, 34]


def test_eval_negative_index_rules(capsys):
    assert run(capsys, "eval", "--preset", "fibonacci", "-n", "-5")[1] == "U=5 V=-11\n"
    assert run(capsys, "eval", "--preset", "jacobsthal", "-n", "-1")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "-p", "1", "-n", "3"],
        ["eval", "--preset", "pell", "-p", "1", "-q", "-1", "-n", "2"],
        ["eval"],
        ["eval", "--preset", "lucas", "-n", "1"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("p, q", [("0", "1"), ("2", "1"), ("4", "4")])
def test_degenerate_params(capsys, p, q):
    assert run(capsys, "eval", "-p", p, "-q", q, "-n", "2")[0] == 3


# sum


def test_sum_example(capsys):
    argv = ["sum", "--preset", "fibonacci", "--kind", "S", "--pair", "UU", "-r", "1", "-s", "2", "-n", "2"]
    assert run(capsys, *argv)[:2] == (0, "47\n")


def test_sum_check_all_paths(capsys):
    argv = ["sum", "--kind", "A", "--pair", "VV", "-r", "1", "-s", "1", "-n", "2", "--check"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[0] == "106"
    assert "all paths agree" in out
    code, data = run_json(capsys, *argv)
    assert data["paths"] == {"naive": "106", "theorem1": "106", "corollary1": "106"}
    assert data["agree"] is True
    assert data["query"] == {"kind": "A", "pair": "VV", "r": 1, "s": 1, "n": 2}


@pytest.mark.parametrize("path", ["naive", "theorem1", "corollary1"])
def test_sum_path_choice(capsys, path):
    code, data = run_json(capsys, "sum", "--kind", "S", "--pair", "UV", "-r", "-3", "-s", "4", "-n", "9",
                          "--path", path)
    assert code == 0 and data["path"] == path
    ref = sums.sum_naive(sums.SequenceParams(1, -1), sums.SumQuery("S", "UV", -3, 4, 9)).value
    assert int(data["value"]) == ref


def test_sum_check_detects_faulty_path(capsys, monkeypatch):
    def off_by_one(params, query):
        res = sums.sum_split(params, query)
        return sums.SumResult(res.value + 1, res.path)

    monkeypatch.setitem(sums.SUM_PATHS, "corollary1", off_by_one)
    argv = ["sum", "--kind", "S", "--pair", "UU", "-r", "0", "-s", "0", "-n", "3", "--check"]
    code, out, _ = run(capsys, *argv)
    assert code == 1
    assert "PATHS DISAGREE" in out


def test_sum_domain_errors(capsys):
    base = ["sum", "--kind", "S", "--pair", "UU", "-r", "0", "-s", "0"]
    assert run(capsys, *base, "-n", "-1")[0] == 3
    assert run(capsys, *base, "-n", "2", "--preset", "jacobsthal")[0] == 3


# verify


def test_verify_t91(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T91", "--grid", "default")
    assert code == 0
    assert "verified-on-grid" in out


def test_verify_audit_falsified_still_exits_zero(capsys):
    code, data = run_json(capsys, "verify", "--id", "R-theta-even")
    assert code == 0
    (report,) = data["report"]
    assert report["verdict"] == "falsified" and report["status"] == "audit"
    first = report["counterexamples"][0]
    assert isinstance(first["lhs"], str)


def test_verify_unknown_id(capsys):
    assert run(capsys, "verify", "--id", "NOPE")[0] == 2


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    ids = [line.split()[0] for line in out.splitlines()]
    assert ids == [e.id for e in identities.catalog()]
    code, data = run_json(capsys, "verify", "--list")
    assert len(data["catalog"]) == len(ids)


def test_verify_custom_ranges(capsys):
    code, data = run_json(capsys, "verify", "--id", "L1.3", "--preset", "pell", "--range", "n=0:3", "--range", "m=0:2")
    assert code == 0
    report = data["report"][0]
    assert report["grid"] == {"params": [[2, -1]], "ranges": {"n": [0, 3], "m": [0, 2]}}
    assert report["cases_checked"] == 12


def test_verify_p_range(capsys):
    code, data = run_json(capsys, "verify", "--id", "L1.5", "--p-range", "1:2", "--q-values", "-1")
    assert data["report"][0]["grid"]["params"] == [[1, -1], [2, -1]]


def test_verify_non_unit_preset(capsys):
    assert run(capsys, "verify", "--id", "T91", "--preset", "jacobsthal")[0] == 3


def test_verify_alarm_exits_one(capsys, monkeypatch):
    bogus = Identity("BOGUS", "test", "U_n = V_n", ("n",), {"n": range(0, 3)},
                     lambda L, n: [(L.U(n), L.V(n))])
    monkeypatch.setitem(identities._BY_ID, "BOGUS", bogus)
    code, data = run_json(capsys, "verify", "--id", "T91", "--id", "BOGUS", "--id", "T92")
    assert code == 1
    assert data["query"]["aborted"] is True
    assert [r["identity"] for r in data["report"]] == ["T91", "BOGUS"]


# bench


def test_bench_small(capsys):
    code, data = run_json(capsys, "bench", "-n", "0", "1000")
    assert code == 0
    assert [row["n"] for row in data["results"]] == [0, 1000]
    assert all(row["equal"] for row in data["results"])


def test_bench_tsv(capsys):
    code, out, _ = run(capsys, "bench", "-n", "10", "--format", "tsv")
    header, row = out.splitlines()
    assert header.split("\t") == ["n", "naive_seconds", "closed_seconds", "ratio", "equal"]
    assert row.split("\t")[-1] == "True"


# oeis


def test_oeis_single(capsys):
    code, out, _ = run(capsys, "oeis", "--id", "A000045")
    assert code == 0 and "match" in out


def test_oeis_all_offline(capsys):
    code, data = run_json(capsys, "oeis", "--all", "--offline", "--terms", "15")
    assert code == 0
    assert len(data["report"]) == 14
    assert all(r["match"] and r["terms"] == 15 for r in data["report"])


def test_oeis_unknown(capsys):
    assert run(capsys, "oeis", "--id", "A000000")[0] == 2


def test_oeis_network_error(capsys, monkeypatch):
    from lucas_sums import oeis

    def offline(aid, timeout=10.0):
        raise OeisNetworkError("unreachable")

    monkeypatch.setattr(oeis, "fetch_bfile", offline)
    assert run(capsys, "oeis", "--id", "A000045", "--online")[0] == 4
