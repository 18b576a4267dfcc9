"""Pulling complex membership and incompleteness certificates.

A d-subset {v1 < ... < vd} of the vertex set belongs to the pulling
complex of (d, J) when there are rows F1, ..., Fd with
vi = min(F1 & ... & Fi) for every i.  For a complete matrix this complex
is the pulling triangulation of the polytope boundary (a closed
pseudomanifold: every ridge lies in exactly two facets), so an
incomplete matrix betrays itself in one of two checkable ways: the
complex has no facet avoiding vertex 1 at all, or it has a boundary
ridge -- a (d-1)-set lying in exactly one facet.

Everything here is sound relative to *valid* input (a genuine minor of a
d-polytope's incidence matrix); on arbitrary 0/1 matrices the answers
are deterministic but carry no geometric meaning.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from .incidence import IncidenceMinor

Simplex = tuple[int, ...]


class CertificateFormatError(ValueError):
    """Malformed certificate text or a ridge of the wrong size."""


class CertificateKind(Enum):
    EMPTY_PULLING_COMPLEX = "EMPTY"
    BOUNDARY_RIDGE = "RIDGE"


@dataclass(frozen=True)
class PullingCertificate:
    """Witness of incompleteness.

    EMPTY_PULLING_COMPLEX carries no data; verification reruns the facet
    search.  BOUNDARY_RIDGE carries a strictly increasing (d-1)-subset of
    the vertex set; verification recounts its cofacets.
    """

    kind: CertificateKind
    ridge: Optional[Simplex] = None

    def __post_init__(self):
        if self.kind is CertificateKind.BOUNDARY_RIDGE:
            if self.ridge is None:
                raise ValueError("boundary-ridge certificate needs a ridge")
            _check_increasing(self.ridge)
        elif self.ridge is not None:
            raise ValueError("empty-complex certificate carries no ridge")


def _check_increasing(vertices: Simplex):
    if any(a >= b for a, b in zip(vertices, vertices[1:])):
        raise ValueError(f"vertices {vertices} are not strictly increasing")


def _validate_candidate(d: int, J: IncidenceMinor, candidate: Simplex) -> Simplex:
    candidate = tuple(candidate)
    if len(candidate) != d:
        raise ValueError(f"candidate has {len(candidate)} vertices, expected {d}")
    _check_increasing(candidate)
    if candidate and not (1 <= candidate[0] and candidate[-1] <= J.n):
        raise ValueError(f"candidate {candidate} has vertices outside 1..{J.n}")
    return candidate


def is_pulling_facet(d: int, J: IncidenceMinor, candidate) -> bool:
    """Membership of a d-subset in the pulling complex of (d, J).

    Mirrors the greedy check: precompute, for i = d..1, the rows
    containing {vi, ..., vd}; then for i = 1..d pick the first such row F
    (by row index) with vi = min(F1 & ... & F_{i-1} & F).  Runs in
    O(d(n+m)) set operations.
    """
    candidate = _validate_candidate(d, J, candidate)
    supports = [frozenset(sup) for sup in J.supports()]
    # containing_rows[i] = rows whose support includes {v_{i+1}, .., v_d}
    containing_rows: list[list[int]] = [list(range(J.m))]
    for v in reversed(candidate):
        containing_rows.append([r for r in containing_rows[-1] if v in supports[r]])
    containing_rows.reverse()  # index i (0-based) now matches v_{i+1}

    current = frozenset(range(1, J.n + 1))
    for i, v in enumerate(candidate):
        for r in containing_rows[i]:
            meet = current & supports[r]
            if meet and min(meet) == v:
                current = meet
                break
        else:
            return False
    return True


def find_pulling_facet(d: int, J: IncidenceMinor) -> Optional[Simplex]:
    """Greedily find a facet of the pulling complex avoiding vertex 1.

    Repeats d times: among rows that miss min(S) but meet S, take the one
    with the largest |F & S| (lowest row index on ties), shrink S to the
    intersection and record its new minimum.  Returns the strictly
    increasing d-set, or None when some step has no admissible row --
    which, for valid input, certifies that J is incomplete (a complete
    matrix always has a pulling facet avoiding vertex 1).
    """
    if d < 1:
        raise ValueError("dimension d must be at least 1")
    supports = [frozenset(sup) for sup in J.supports()]
    live = frozenset(range(1, J.n + 1))
    chosen: list[int] = []
    for _ in range(d):
        if not live:
            return None
        low = min(live)
        best = None
        best_size = 0
        for r, sup in enumerate(supports):
            if low in sup:
                continue
            size = len(live & sup)
            if size > best_size:
                best, best_size = r, size
        if best is None:
            return None
        live &= supports[best]
        chosen.append(min(live))
    return tuple(chosen)


def ridge_cofacet_count(d: int, J: IncidenceMinor, ridge) -> int:
    """How many pulling facets contain the given (d-1)-set.

    Tries all n-d+1 extensions by a vertex outside the ridge; for d = 1
    the ridge is the empty set and this counts the singleton facets.
    """
    ridge = tuple(ridge)
    if len(ridge) != d - 1:
        raise ValueError(f"ridge has {len(ridge)} vertices, expected {d - 1}")
    _check_increasing(ridge)
    if ridge and not (1 <= ridge[0] and ridge[-1] <= J.n):
        raise ValueError(f"ridge {ridge} has vertices outside 1..{J.n}")
    count = 0
    for v in range(1, J.n + 1):
        if v in ridge:
            continue
        if is_pulling_facet(d, J, tuple(sorted(ridge + (v,)))):
            count += 1
    return count


def find_certificate(d: int, J: IncidenceMinor) -> Optional[PullingCertificate]:
    """Search for an incompleteness certificate; None is consistent with
    completeness.

    If no pulling facet avoiding vertex 1 exists, that is already the
    EMPTY_PULLING_COMPLEX certificate.  Otherwise walk the facets through
    shared ridges, exploring lexicographically smallest facets first; the
    first ridge found with exactly one cofacet is the BOUNDARY_RIDGE
    certificate.  If the walk closes with every ridge in two facets, the
    complex looks like a closed pseudomanifold and None is returned.
    """
    start = find_pulling_facet(d, J)
    if start is None:
        return PullingCertificate(CertificateKind.EMPTY_PULLING_COMPLEX)
    memo: dict[Simplex, bool] = {}

    def member(cand: Simplex) -> bool:
        hit = memo.get(cand)
        if hit is None:
            hit = memo[cand] = is_pulling_facet(d, J, cand)
        return hit

    seen = {start}
    heap = [start]
    while heap:
        facet = heapq.heappop(heap)
        for ridge in combinations(facet, d - 1):
            cofacets = []
            for v in range(1, J.n + 1):
                if v in ridge:
                    continue
                cand = tuple(sorted(ridge + (v,)))
                if member(cand):
                    cofacets.append(cand)
            if len(cofacets) == 1:
                return PullingCertificate(CertificateKind.BOUNDARY_RIDGE, ridge)
            for nb in cofacets:
                if nb not in seen:
                    seen.add(nb)
                    heapq.heappush(heap, nb)
    return None


def verify_certificate(d: int, J: IncidenceMinor, cert: PullingCertificate) -> bool:
    """Accept or reject a certificate of incompleteness.

    EMPTY_PULLING_COMPLEX is accepted iff the facet search comes up
    empty; BOUNDARY_RIDGE iff the ridge has exactly one cofacet.  A ridge
    of the wrong size or with out-of-range vertices is malformed and
    raises CertificateFormatError.
    """
    if d < 1:
        raise ValueError("dimension d must be at least 1")
    if cert.kind is CertificateKind.EMPTY_PULLING_COMPLEX:
        return find_pulling_facet(d, J) is None
    ridge = cert.ridge
    if len(ridge) != d - 1:
        raise CertificateFormatError(f"ridge has {len(ridge)} vertices, expected {d - 1}")
    if ridge and not (1 <= ridge[0] and ridge[-1] <= J.n):
        raise CertificateFormatError(f"ridge {ridge} has vertices outside 1..{J.n}")
    return ridge_cofacet_count(d, J, ridge) == 1


def serialize_certificate(cert: PullingCertificate) -> str:
    """One line: "EMPTY", or "RIDGE v1 v2 ... v(d-1)"."""
    if cert.kind is CertificateKind.EMPTY_PULLING_COMPLEX:
        return "EMPTY\n"
    return " ".join(["RIDGE", *map(str, cert.ridge)]) + "\n"


def parse_certificate(text: str) -> PullingCertificate:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != 1:
        raise CertificateFormatError("certificate must be a single line")
    tokens = lines[0].split()
    if tokens[0] == "EMPTY" and len(tokens) == 1:
        return PullingCertificate(CertificateKind.EMPTY_PULLING_COMPLEX)
    if tokens[0] == "RIDGE":
        try:
            vertices = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise CertificateFormatError("ridge vertices must be integers") from None
        try:
            return PullingCertificate(CertificateKind.BOUNDARY_RIDGE, vertices)
        except ValueError as exc:
            raise CertificateFormatError(str(exc)) from None
    raise CertificateFormatError(f"unknown certificate {lines[0]!r}")
