"""Regenerate the bundled b-file fixtures from textbook definitions.

Deliberately independent of the lucas_sums package: every sequence is
computed from its own standard definition so the fixtures can act as an
oracle for the library.
"""

import sys
from pathlib import Path

TERMS = 30
OUT = Path(__file__).resolve().parent.parent / "src" / "lucas_sums" / "data"


def linear(a0, a1, p, q, count):
    out = [a0, a1]
    while len(out) < count:
        out.append(p * out[-1] - q * out[-2])
    return out[:count]


def main():
    big = 8 * TERMS + 8
    F = linear(0, 1, 1, -1, big)
    L = linear(2, 1, 1, -1, big)
    P = linear(0, 1, 2, -1, big)
    Q = linear(2, 2, 2, -1, big)
    r = range(TERMS)
    c_pell = [P[4 * n + 4] // 12 for n in r]
    table = {
        "A000045": ("Fibonacci numbers F(n)", [F[n] for n in r]),
        "A000032": ("Lucas numbers L(n)", [L[n] for n in r]),
        "A000129": ("Pell numbers P(n)", [P[n] for n in r]),
        "A002203": ("Companion Pell numbers Q(n)", [Q[n] for n in r]),
        "A001045": ("Jacobsthal numbers (2^n - (-1)^n)/3", [(2**n - (-1) ** n) // 3 for n in r]),
        "A014551": ("Jacobsthal-Lucas numbers 2^n + (-1)^n", [2**n + (-1) ** n for n in r]),
        "A001906": ("F(2n)", [F[2 * n] for n in r]),
        "A092521": ("F(2n+2) F(2n+4) / 3", [F[2 * n + 2] * F[2 * n + 4] // 3 for n in r]),
        "A004187": ("F(4n)/3", [F[4 * n] // 3 for n in r]),
        "A049685": ("L(4n+2)/3", [L[4 * n + 2] // 3 for n in r]),
        "A001109": ("P(2n)/2", [P[2 * n] // 2 for n in r]),
        "A029546": ("partial sums of P(4k+4)/12", [sum(c_pell[: n + 1]) for n in r]),
        "A029547": ("P(4n+4)/12", c_pell),
        "A077420": ("Q(4n+2)/6", [Q[4 * n + 2] // 6 for n in r]),
    }
    OUT.mkdir(parents=True, exist_ok=True)
    for aid, (title, values) in table.items():
        lines = [f"# {aid} {title}", "# offset 0"]
        lines += [f"{n} {v}" for n, v in enumerate(values)]
        (OUT / f"b{aid[1:]}.txt").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(table)} files to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
