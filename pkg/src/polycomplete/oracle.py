"""Independent brute-force references, for tests only.

Everything here is deliberately naive -- unpacked 0/1 lists, full
elimination, exhaustive tuple loops -- and shares no code with the
bit-packed production path, so a bug there cannot be mirrored here.
Inputs are capped at fixture scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .incidence import IncidenceMinor


class OracleSizeError(ValueError):
    """The instance is past the fixture-scale cap of a brute-force oracle."""


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Z2 Betti numbers, indexed from k = -1 upward."""

    reduced: tuple[int, ...]

    def betti(self, k: int) -> int:
        idx = k + 1
        if 0 <= idx < len(self.reduced):
            return self.reduced[idx]
        return 0

    @property
    def max_dim(self) -> int:
        return len(self.reduced) - 2


def _rank_unpacked(mat: list[list[int]]) -> int:
    """Plain full-reduction Gaussian elimination over Z2 on 0/1 lists."""
    if not mat or not mat[0]:
        return 0
    mat = [row[:] for row in mat]
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                mat[i] = [a ^ b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def homology_all_ranks(J: IncidenceMinor, max_faces: int = 10_000) -> BettiProfile:
    """All reduced Z2 Betti numbers of the crosscut complex of J.

    Enumerates every face layer (the empty face included), builds every
    augmented boundary matrix as an unpacked 0/1 list matrix, and reads
    off b~_k = dim ker(boundary_k) - rank(boundary_{k+1}).
    """
    faces: set[frozenset[int]] = set()
    for sup in J.supports():
        sup = list(sup)
        for size in range(len(sup) + 1):
            for combo in combinations(sup, size):
                faces.add(frozenset(combo))
                if len(faces) > max_faces:
                    raise OracleSizeError(f"more than {max_faces} faces")
    if J.m > 0 or J.n > 0:
        faces.add(frozenset())
    if not faces:
        return BettiProfile(())

    top = max(len(f) for f in faces) - 1
    layers: list[list[frozenset[int]]] = []
    for k in range(-1, top + 1):
        layer = sorted((f for f in faces if len(f) == k + 1), key=sorted)
        layers.append(layer)

    def boundary(k: int) -> list[list[int]]:
        # matrix of boundary_k : C_k -> C_{k-1}; layers[k+1] holds the k-faces
        upper = layers[k + 1]
        lower = layers[k]
        idx = {f: i for i, f in enumerate(lower)}
        mat = [[0] * len(upper) for _ in lower]
        for j, face in enumerate(upper):
            for v in face:
                mat[idx[face - {v}]][j] = 1
        return mat

    reduced = []
    for k in range(-1, top + 1):
        dim_k = len(layers[k + 1])
        rank_k = _rank_unpacked(boundary(k)) if k >= 0 else 0
        kernel = dim_k - rank_k
        rank_up = _rank_unpacked(boundary(k + 1)) if k + 1 <= top else 0
        reduced.append(kernel - rank_up)
    return BettiProfile(tuple(reduced))


def pulling_triangulation_by_flags(I: IncidenceMinor, max_tuples: int = 2_000_000) -> frozenset:
    """Facets of the pulling triangulation of a complete matrix, by brute
    force over all d-tuples of rows.

    For each tuple (F1, ..., Fd) collects {v1, ..., vd} with
    vi = min(F1 & ... & Fi) whenever all the minima are defined and
    distinct.
    """
    d = I.d
    rows = [frozenset(sup) for sup in I.supports()]
    if len(rows) ** d > max_tuples:
        raise OracleSizeError(f"{len(rows)}^{d} tuples exceed the cap {max_tuples}")
    found = set()
    for flags in product(rows, repeat=d):
        inter = flags[0]
        mins = []
        ok = True
        for i, row in enumerate(flags):
            if i > 0:
                inter = inter & row
            if not inter:
                ok = False
                break
            mins.append(min(inter))
        if ok and len(set(mins)) == d:
            found.add(tuple(sorted(mins)))
    return frozenset(found)


def _solve_hyperplane(points: Sequence[Sequence[Fraction]]):
    """Unique hyperplane a.x = b through the points, or None (own solver)."""
    if not points:
        return None
    dim = len(points[0])
    mat = [[Fraction(x) for x in p] + [Fraction(-1)] for p in points]
    ncols = dim + 1
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][col]
        mat[r] = [x / lead for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        return None
    vec = [Fraction(0)] * ncols
    vec[free[0]] = Fraction(1)
    for row_idx, col in enumerate(pivots):
        vec[col] = -mat[row_idx][free[0]]
    normal, offset = tuple(vec[:dim]), vec[dim]
    if all(a == 0 for a in normal):
        return None
    return normal, offset


def hull_facets(points: Sequence[Sequence[Fraction]], max_subsets: int = 500_000) -> frozenset:
    """Facet vertex sets of the convex hull of full-dimensional points.

    Exhaustive: every e-subset of the points spanning a hyperplane with
    all points weakly on one side contributes its full tight set.
    Returns a frozenset of frozensets of 1-based point indices.
    """
    points = [tuple(Fraction(x) for x in p) for p in points]
    if not points:
        return frozenset()
    e = len(points[0])
    total = 1
    for i in range(e):
        total = total * (len(points) - i) // (i + 1)
    if total > max_subsets:
        raise OracleSizeError(f"{total} subsets exceed the cap {max_subsets}")
    facets = set()
    for combo in combinations(range(len(points)), e):
        plane = _solve_hyperplane([points[i] for i in combo])
        if plane is None:
            continue
        normal, offset = plane
        values = [sum(a * x for a, x in zip(normal, p)) - offset for p in points]
        if all(v <= 0 for v in values) or all(v >= 0 for v in values):
            facets.add(frozenset(i + 1 for i, v in enumerate(values) if v == 0))
    return frozenset(facets)
