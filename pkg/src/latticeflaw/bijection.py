"""The flaw-raising map ``phi`` and its inverse ``psi``.

For ``0 <= k < g(a+b) - 1``, ``phi`` sends ``N_k(g) \\ S_k(g)`` to ``N_{k+1}(g)``
and ``psi`` goes back.  Both work by cutting a path into three blocks at
canonically chosen points (boundary points, highest points below, lowest
points above) and swapping two of the blocks.

Domain classes:

* ``Y``: split ``p = q r`` at its last non-terminal boundary point.  ``p`` is
  in ``Y`` when ``q`` has a flaw and the LPA elevation of ``q`` is smaller than
  the magnitude of the HPB elevation of ``r`` (vacuous if ``r`` has no HPB).
  Canonical form ``q1 q2 r`` with ``q2`` starting at the last LPA of ``q``;
  ``phi(p) = q1 r q2``.
* ``X``: everything else.  Canonical form ``q r1 r2`` with ``r2`` starting at
  the last HPB of ``r``; ``phi(p) = q r2 r1``.

Codomain classes (for paths with at least one flaw):

* ``YC``: at least two LPAs and no boundary point strictly between the last
  two.  Canonical form ``q1 r q2`` cut at those LPAs; ``psi(p) = q1 q2 r``.
* ``XC``: everything else.  Canonical form ``q r2 r1`` cut at the boundary
  point ``B`` preceding the last LPA ``L`` and at ``L``; ``psi(p) = q r1 r2``.

"Last" always means greatest step index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .enumeration import enumerate_paths, is_member_S
from .paths import (
    BoundarySpec,
    LatticePath,
    PathError,
    concat,
    count_flaws,
    elevations,
    require_member,
    split_at,
)
from .report import CheckReport


class DomainError(ValueError):
    """A path lies outside the set on which ``phi`` or ``psi`` is defined."""


@dataclass(frozen=True)
class DomainClass:
    tag: str  # "X" or "Y"
    parts: tuple[LatticePath, LatticePath, LatticePath]  # (q, r1, r2) or (q1, q2, r)
    split_indices: tuple[int, int]

    def join(self) -> LatticePath:
        return concat(*self.parts)


@dataclass(frozen=True)
class CodomainClass:
    tag: str  # "XC" or "YC"
    parts: tuple[LatticePath, LatticePath, LatticePath]  # (q, r2, r1) or (q1, r, q2)
    split_indices: tuple[int, int]

    def join(self) -> LatticePath:
        return concat(*self.parts)


def _last(indices: list[int]) -> int:
    return indices[-1]


def _closest(elev: list[int], lo: int, hi: int, sign: int) -> tuple[int | None, list[int]]:
    """Elevation and indices of the points in ``[lo, hi]`` closest to zero on one side."""
    side = [e for e in elev[lo : hi + 1] if e * sign > 0]
    if not side:
        return None, []
    best = min(side) if sign > 0 else max(side)
    return best, [t for t in range(lo, hi + 1) if elev[t] == best]


def _last_nonterminal_boundary(elev: list[int]) -> int:
    return max(t for t in range(len(elev) - 1) if elev[t] == 0)


def split_at_last_nonterminal_boundary(p: LatticePath, spec: BoundarySpec) -> tuple[LatticePath, LatticePath]:
    """``p = q r`` with ``q`` ending at the last boundary point before the endpoint."""
    require_member(p, spec)
    cut = _last_nonterminal_boundary(elevations(p, spec.a, spec.b))
    parts = split_at(p, cut).parts
    return parts[0], parts[1]


def classify_domain(p: LatticePath, spec: BoundarySpec) -> DomainClass:
    require_member(p, spec)
    a, b = spec.a, spec.b
    elev = elevations(p, a, b)
    k = sum(1 for e in elev if e > 0)
    if k == spec.max_flaws:
        raise DomainError(f"path {p.steps!r} has max flaws; phi is undefined there")
    in_s, j = is_member_S(p, spec)
    if in_s:
        raise DomainError(f"path {p.steps!r} lies in S_{k}({spec.g}) (j = {j}); phi is undefined there")

    n = len(p)
    cut = _last_nonterminal_boundary(elev)
    # q = points 0..cut, r = points cut..n; both start and end on the boundary,
    # so their own elevations coincide with those of p.
    q_lpa, q_lpa_idx = _closest(elev, 0, cut, +1)
    r_hpb, r_hpb_idx = _closest(elev, cut, n, -1)
    if q_lpa is not None and (r_hpb is None or q_lpa < -r_hpb):
        split = (_last(q_lpa_idx), cut)
        return DomainClass("Y", split_at(p, *split).parts, split)
    if r_hpb is None:
        raise AssertionError(f"path {p.steps!r} in X without an HPB after its last boundary point")
    split = (cut, _last(r_hpb_idx))
    return DomainClass("X", split_at(p, *split).parts, split)


def classify_codomain(p: LatticePath, spec: BoundarySpec) -> CodomainClass:
    require_member(p, spec)
    elev = elevations(p, spec.a, spec.b)
    n = len(p)
    _, lpa_idx = _closest(elev, 0, n, +1)
    if not lpa_idx:
        raise DomainError(f"path {p.steps!r} has no flaws; psi is undefined there")
    if len(lpa_idx) >= 2:
        first, second = lpa_idx[-2], lpa_idx[-1]
        if all(elev[t] != 0 for t in range(first + 1, second)):
            split = (first, second)
            return CodomainClass("YC", split_at(p, *split).parts, split)
    last = lpa_idx[-1]
    before = max(t for t in range(last) if elev[t] == 0)
    split = (before, last)
    return CodomainClass("XC", split_at(p, *split).parts, split)


def phi(p: LatticePath, spec: BoundarySpec) -> LatticePath:
    cls = classify_domain(p, spec)
    if cls.tag == "X":
        q, r1, r2 = cls.parts
        return concat(q, r2, r1)
    q1, q2, r = cls.parts
    return concat(q1, r, q2)


def psi(p: LatticePath, spec: BoundarySpec) -> LatticePath:
    cls = classify_codomain(p, spec)
    if cls.tag == "XC":
        q, r2, r1 = cls.parts
        return concat(q, r1, r2)
    q1, r, q2 = cls.parts
    return concat(q1, q2, r)


def trace_record(p: LatticePath, spec: BoundarySpec, direction: str = "phi") -> dict:
    """One golden-file record ``{input, class, split_indices, output}``."""
    if direction == "phi":
        cls = classify_domain(p, spec)
        out = phi(p, spec)
    elif direction == "psi":
        cls = classify_codomain(p, spec)
        out = psi(p, spec)
    else:
        raise ValueError(f"direction must be 'phi' or 'psi', got {direction!r}")
    return {
        "map": direction,
        "input": p.steps,
        "class": cls.tag,
        "split_indices": list(cls.split_indices),
        "output": out.steps,
    }


_PAIRED = {"X": "XC", "Y": "YC"}


def verify_bijection(spec: BoundarySpec, cap: int | None = None, trace=None) -> CheckReport:
    """Exhaustively check that ``phi`` and ``psi`` are inverse bijections for every ``k``.

    ``trace``, if given, is a writable text stream receiving one JSON line per
    map application.
    """
    a, b = spec.a, spec.b
    buckets: list[list[LatticePath]] = [[] for _ in range(spec.length)]
    for p in enumerate_paths(spec, cap):
        buckets[count_flaws(p, a, b)].append(p)

    report = CheckReport("bijection", {"a": a, "b": b, "g": spec.g})
    per_k = []
    for k in range(spec.max_flaws):
        domain = [p for p in buckets[k] if not is_member_S(p, spec)[0]]
        codomain = buckets[k + 1]
        sizes = {"k": k, "X": 0, "Y": 0, "XC": 0, "YC": 0, "S": len(buckets[k]) - len(domain)}

        images = set()
        for p in domain:
            try:
                cls = classify_domain(p, spec)
                img = phi(p, spec)
                img_cls = classify_codomain(img, spec)
                back = psi(img, spec)
            except (DomainError, PathError) as exc:
                report.check(False, {"map": "phi", "k": k, "input": p.steps, "error": str(exc)})
                continue
            sizes[cls.tag] += 1
            images.add(img.steps)
            if trace is not None:
                trace.write(json.dumps(trace_record(p, spec, "phi")) + "\n")
            report.check(
                count_flaws(img, a, b) == k + 1
                and img_cls.tag == _PAIRED[cls.tag]
                and back == p,
                {
                    "map": "phi", "k": k, "input": p.steps, "class": cls.tag,
                    "output": img.steps, "output_class": img_cls.tag,
                    "output_flaws": count_flaws(img, a, b), "round_trip": back.steps,
                },
            )
        report.check(len(images) == len(domain), {"map": "phi", "k": k, "reason": "not injective"})

        preimages = set()
        for p in codomain:
            try:
                cls = classify_codomain(p, spec)
                pre = psi(p, spec)
                in_s, _ = is_member_S(pre, spec)
                pre_cls = None if in_s else classify_domain(pre, spec)
                forth = None if in_s else phi(pre, spec)
            except (DomainError, PathError) as exc:
                report.check(False, {"map": "psi", "k": k + 1, "input": p.steps, "error": str(exc)})
                continue
            sizes[cls.tag] += 1
            preimages.add(pre.steps)
            if trace is not None:
                trace.write(json.dumps(trace_record(p, spec, "psi")) + "\n")
            report.check(
                not in_s
                and count_flaws(pre, a, b) == k
                and _PAIRED[pre_cls.tag] == cls.tag
                and forth == p,
                {
                    "map": "psi", "k": k + 1, "input": p.steps, "class": cls.tag,
                    "output": pre.steps, "output_in_S": in_s,
                    "output_flaws": count_flaws(pre, a, b),
                },
            )
        report.check(len(preimages) == len(codomain), {"map": "psi", "k": k + 1, "reason": "not injective"})
        report.check(
            sizes["X"] == sizes["XC"] and sizes["Y"] == sizes["YC"],
            {"k": k, "reason": "class sizes differ", **sizes},
        )
        per_k.append(sizes)
    report.details["classes"] = per_k
    return report


def cyclic_shift_structure(spec: BoundarySpec, cap: int | None = None) -> CheckReport:
    """For ``g = 1``: ``phi`` rotates the unique HPB to the origin, ``psi`` the unique LPA."""
    if spec.g != 1:
        raise ValueError("cyclic-shift structure only holds for g = 1")
    report = CheckReport("cyclic-shift", {"a": spec.a, "b": spec.b, "g": 1})
    for p in enumerate_paths(spec, cap):
        elev = elevations(p, spec.a, spec.b)
        flaws = sum(1 for e in elev if e > 0)
        if flaws < spec.max_flaws:
            _, idx = _closest(elev, 0, len(p), -1)
            expected = LatticePath(p.steps[idx[-1]:] + p.steps[: idx[-1]])
            report.check(len(idx) == 1 and phi(p, spec) == expected, {"map": "phi", "input": p.steps})
        if flaws > 0:
            _, idx = _closest(elev, 0, len(p), +1)
            expected = LatticePath(p.steps[idx[-1]:] + p.steps[: idx[-1]])
            report.check(len(idx) == 1 and psi(p, spec) == expected, {"map": "psi", "input": p.steps})
    return report


def domain_paths(spec: BoundarySpec, k: int, cap: int | None = None) -> Iterator[LatticePath]:
    """``N_k(g) \\ S_k(g)`` in enumeration order."""
    for p in enumerate_paths(spec, cap):
        if count_flaws(p, spec.a, spec.b) == k and not is_member_S(p, spec)[0]:
            yield p
