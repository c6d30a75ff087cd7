"""Brute-force enumeration of ``N(g)``: the ground truth for every other module."""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .formula import count_flawed
from .paths import (
    EAST,
    NORTH,
    BoundarySpec,
    LatticePath,
    count_flaws,
    elevations,
    require_member,
)

DEFAULT_CAP = 10**8
CAP_ENV = "LATTICEFLAW_CAP"


class EnumerationTooLarge(RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"enumeration would produce {count} paths, above the cap of {cap}")
        self.count = count
        self.cap = cap


def default_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


def path_count(spec: BoundarySpec) -> int:
    return math.comb(spec.length, spec.g * spec.a)


def _check_cap(spec: BoundarySpec, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    total = path_count(spec)
    if total > cap:
        raise EnumerationTooLarge(total, cap)


def _paths_with(n_east: int, n_north: int, prefix: str = "") -> Iterator[str]:
    """Step strings with the given step counts, after ``prefix``, in E < N order."""
    rest_e = n_east - prefix.count(EAST)
    rest_n = n_north - prefix.count(NORTH)
    if rest_e < 0 or rest_n < 0:
        return
    n = rest_e + rest_n
    # lexicographic order of East positions == lexicographic order of strings
    for east in itertools.combinations(range(n), rest_e):
        steps = [NORTH] * n
        for pos in east:
            steps[pos] = EAST
        yield prefix + "".join(steps)


def enumerate_paths(spec: BoundarySpec, cap: int | None = None, prefix: str = "") -> Iterator[LatticePath]:
    """Every path of ``N(g)`` exactly once, lexicographically with E < N.

    ``prefix`` restricts the stream to paths starting with those steps, which
    is how the work is sharded across processes.
    """
    _check_cap(spec, cap)
    a_total, b_total = spec.endpoint
    for steps in _paths_with(a_total, b_total, prefix):
        yield LatticePath(steps)


@dataclass(frozen=True)
class FlawTable:
    """``counts[k] = |N_k(g)|`` for ``0 <= k < g(a+b)``."""

    spec: BoundarySpec
    counts: tuple[int, ...]
    provenance: str

    def __post_init__(self) -> None:
        if len(self.counts) != self.spec.length:
            raise ValueError(f"expected {self.spec.length} counts, got {len(self.counts)}")
        if self.provenance not in ("oracle", "formula"):
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def diffs(self) -> list[int | None]:
        c = self.counts
        return [c[k] - c[k + 1] for k in range(len(c) - 1)] + [None]

    def rows(self) -> list[tuple[int, int, int | None]]:
        return list(zip(range(len(self.counts)), self.counts, self.diffs))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "count", "diff"])
        for k, count, diff in self.rows():
            writer.writerow([k, count, "" if diff is None else diff])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "a": self.spec.a,
                "b": self.spec.b,
                "g": self.spec.g,
                "provenance": self.provenance,
                "rows": [{"k": k, "count": c, "diff": d} for k, c, d in self.rows()],
            },
            indent=2,
        )

    def to_markdown(self) -> str:
        g = self.spec.g
        lines = [f"| k | \\|N_k({g})\\| | \\|N_k({g})\\| - \\|N_(k+1)({g})\\| |", "|---|---|---|"]
        for k, count, diff in self.rows():
            lines.append(f"| {k} | {count} | {'' if diff is None else diff} |")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str, spec: BoundarySpec, provenance: str) -> FlawTable:
        rows = list(csv.DictReader(io.StringIO(text)))
        return cls(spec, tuple(int(r["count"]) for r in rows), provenance)

    @classmethod
    def from_json(cls, text: str) -> FlawTable:
        data = json.loads(text)
        spec = BoundarySpec(data["a"], data["b"], data["g"])
        return cls(spec, tuple(r["count"] for r in data["rows"]), data["provenance"])


def _histogram(args: tuple[BoundarySpec, str]) -> list[int]:
    spec, prefix = args
    counts = [0] * spec.length
    a, b = spec.a, spec.b
    for p in enumerate_paths(spec, cap=math.inf, prefix=prefix):
        counts[count_flaws(p, a, b)] += 1
    return counts


def _shard_prefixes(spec: BoundarySpec, jobs: int) -> list[str]:
    depth = 0
    while 2**depth < 4 * jobs and depth < spec.length:
        depth += 1
    return ["".join(bits) for bits in itertools.product((EAST, NORTH), repeat=depth)]


def oracle_flaw_table(spec: BoundarySpec, cap: int | None = None, jobs: int = 1) -> FlawTable:
    """Histogram of flaw counts over an exhaustive scan of ``N(g)``."""
    _check_cap(spec, cap)
    if jobs <= 1:
        counts = _histogram((spec, ""))
    else:
        counts = [0] * spec.length
        shards = [(spec, prefix) for prefix in _shard_prefixes(spec, jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_histogram, shards):
                counts = [x + y for x, y in zip(counts, part)]
    return FlawTable(spec, tuple(counts), "oracle")


def formula_flaw_table(spec: BoundarySpec) -> FlawTable:
    return FlawTable(spec, tuple(count_flawed(k, spec) for k in range(spec.length)), "formula")


def paths_by_flaws(spec: BoundarySpec, cap: int | None = None) -> list[list[LatticePath]]:
    """``N_k(g)`` for every ``k``, each list in enumeration order."""
    buckets: list[list[LatticePath]] = [[] for _ in range(spec.length)]
    for p in enumerate_paths(spec, cap):
        buckets[count_flaws(p, spec.a, spec.b)].append(p)
    return buckets


def is_member_S(p: LatticePath, spec: BoundarySpec) -> tuple[bool, int | None]:
    """Whether ``p`` is a flawless path to ``((g-j)a, (g-j)b)`` followed by a max-flaw path.

    Returns ``(True, j)`` with the witnessing ``j`` (``0 < j < g``), else ``(False, None)``.
    """
    require_member(p, spec)
    a, b, g = spec.a, spec.b, spec.g
    elev = elevations(p, a, b)
    for j in range(g - 1, 0, -1):
        cut = (g - j) * (a + b)
        if elev[cut] != 0:
            continue
        # the point at index cut has i+j = (g-j)(a+b) and elevation 0, so it is ((g-j)a, (g-j)b)
        prefix_flawless = all(e <= 0 for e in elev[: cut + 1])
        suffix_max = all(e > 0 for e in elev[cut + 1 : -1])
        if prefix_flawless and suffix_max:
            return True, j
    return False, None


def max_flaw_paths(spec: BoundarySpec, cap: int | None = None) -> Iterator[LatticePath]:
    for p in enumerate_paths(spec, cap):
        if count_flaws(p, spec.a, spec.b) == spec.max_flaws:
            yield p


def enumerate_S(spec: BoundarySpec, k: int, cap: int | None = None) -> Iterator[LatticePath]:
    """Members of ``S_k(g)``, built as products of flawless prefixes and max-flaw suffixes."""
    if not 0 <= k < spec.max_flaws:
        raise ValueError(f"k = {k} out of range 0..{spec.max_flaws - 1}")
    a, b = spec.a, spec.b
    if (k + 1) % (a + b):
        return
    j = (k + 1) // (a + b)
    if not 0 < j < spec.g:
        return
    head_spec = spec.with_g(spec.g - j)
    heads = [p for p in enumerate_paths(head_spec, cap) if count_flaws(p, a, b) == 0]
    tails = list(max_flaw_paths(spec.with_g(j), cap))
    for p1 in heads:
        for p2 in tails:
            yield p1 + p2
