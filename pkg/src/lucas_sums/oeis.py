"""Cross-check computed terms against OEIS b-files.

A b-file is plain ASCII with one ``n a(n)`` pair per line; lines starting
with ``#`` and blank lines are ignored. Bundled fixtures live in
``lucas_sums/data``; online mode fetches ``https://oeis.org/A%06d/b%06d.txt``.
"""

from __future__ import annotations

import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources

from .derived import derived_closed
from .errors import LucasError
from .sequences import PRESETS, SequenceParams, eval_pair

__all__ = [
    "OeisSequence",
    "OeisCheck",
    "SEQUENCES",
    "OeisNetworkError",
    "UnknownSequence",
    "parse_bfile",
    "load_fixture",
    "fetch_bfile",
    "computed_term",
    "check_sequence",
]

BFILE_URL = "https://oeis.org/{aid}/b{digits}.txt"


class UnknownSequence(LucasError, KeyError):
    pass


class OeisNetworkError(LucasError, OSError):
    pass


@dataclass(frozen=True)
class OeisSequence:
    id: str
    preset: str
    source: str  # "U", "V", or a derived kind
    shift: int = 0  # OEIS a(i) is the local term at index i + shift

    @property
    def params(self) -> SequenceParams:
        return PRESETS[self.preset]


SEQUENCES = {
    s.id: s
    for s in (
        OeisSequence("A000045", "fibonacci", "U"),
        OeisSequence("A000032", "fibonacci", "V"),
        OeisSequence("A000129", "pell", "U"),
        OeisSequence("A002203", "pell", "V"),
        OeisSequence("A001045", "jacobsthal", "U"),
        OeisSequence("A014551", "jacobsthal", "V"),
        OeisSequence("A001906", "fibonacci", "a"),
        OeisSequence("A092521", "fibonacci", "b"),
        OeisSequence("A004187", "fibonacci", "c", shift=-1),
        OeisSequence("A049685", "fibonacci", "d"),
        OeisSequence("A001109", "pell", "a"),
        OeisSequence("A029546", "pell", "b"),
        OeisSequence("A029547", "pell", "c"),
        OeisSequence("A077420", "pell", "d"),
    )
}


def _lookup(aid: str) -> OeisSequence:
    try:
        return SEQUENCES[aid]
    except KeyError:
        raise UnknownSequence(aid) from None


def parse_bfile(text: str) -> dict:
    """Return {index: value} in file order."""
    terms = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: expected 'n a(n)', got {raw!r}")
        terms[int(parts[0])] = int(parts[1])
    return terms


def load_fixture(aid: str) -> dict:
    _lookup(aid)
    name = f"b{aid[1:]}.txt"
    return parse_bfile(resources.files("lucas_sums").joinpath("data", name).read_text())


def fetch_bfile(aid: str, timeout: float = 10.0) -> dict:
    _lookup(aid)
    url = BFILE_URL.format(aid=aid, digits=aid[1:])
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            text = resp.read().decode("ascii", errors="replace")
    except (urllib.error.URLError, OSError) as exc:
        raise OeisNetworkError(f"could not fetch {url}: {exc}") from exc
    return parse_bfile(text)


def computed_term(seq: OeisSequence, i: int) -> int:
    n = i + seq.shift
    if seq.source == "U":
        return eval_pair(seq.params, n).u
    if seq.source == "V":
        return eval_pair(seq.params, n).v
    return derived_closed(seq.params, seq.source, n)


@dataclass
class OeisCheck:
    id: str
    preset: str
    source: str
    compared: int
    mismatches: list = field(default_factory=list)

    @property
    def match(self) -> bool:
        return self.compared > 0 and not self.mismatches

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "preset": self.preset,
            "sequence": self.source,
            "terms": self.compared,
            "match": self.match,
            "mismatches": [
                {"index": i, "expected": str(e), "computed": str(c)} for i, e, c in self.mismatches
            ],
        }


def check_sequence(aid: str, terms: int = 15, online: bool = False, timeout: float = 10.0) -> OeisCheck:
    """Compare the first ``terms`` reference values with computed ones."""
    seq = _lookup(aid)
    reference = fetch_bfile(aid, timeout) if online else load_fixture(aid)
    result = OeisCheck(aid, seq.preset, seq.source, 0)
    for i in sorted(reference)[:terms]:
        expected = reference[i]
        got = computed_term(seq, i)
        result.compared += 1
        if got != expected:
            result.mismatches.append((i, expected, got))
    if result.compared < terms:
        result.mismatches.append((None, f"{terms} terms", f"{result.compared} available"))
    return result
