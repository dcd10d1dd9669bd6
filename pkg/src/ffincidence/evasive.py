"""Randomized construction and exhaustive verification of subspace-evasive sets.

A point set is (k, s)-evasive when every k-dimensional affine flat meets it in
fewer than s points. Verification enumerates all flats, so certificates are
unconditional at desk scale; the randomized search maintains per-flat counts
incrementally and therefore self-verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import AffineFlat, Vector, enumerate_flats
from .util import check_grid, substream


@dataclass
class EvasiveCertificate:
    field: object
    dim: int
    points: tuple
    k: int
    s: int
    verified: bool
    worst_flat: Optional[AffineFlat]
    worst_count: int


class FlatTable:
    """All k-flats of F^d plus a point -> covering-flat index map."""

    def __init__(self, field, d: int, k: int):
        check_grid(field.size**d, "flat table")
        self.field = field
        self.d = d
        self.k = k
        self.flats = list(enumerate_flats(field, d, k))
        self.by_point = {}
        for idx, flat in enumerate(self.flats):
            for pt in flat.points():
                self.by_point.setdefault(pt, []).append(idx)

    def flats_through(self, pt: Vector):
        return self.by_point.get(pt, ())


def verify_subspace_evasive(field, d: int, points, k: int, s: int) -> EvasiveCertificate:
    """Exhaustive check that every k-flat contains < s of the given points."""
    pts = list(points)
    table = FlatTable(field, d, k)
    counts = [0] * len(table.flats)
    for pt in pts:
        for idx in table.flats_through(pt):
            counts[idx] += 1
    worst_idx = max(range(len(counts)), key=counts.__getitem__) if counts else None
    worst = counts[worst_idx] if worst_idx is not None else 0
    return EvasiveCertificate(
        field=field,
        dim=d,
        points=tuple(pts),
        k=k,
        s=s,
        verified=worst < s,
        worst_flat=table.flats[worst_idx] if worst_idx is not None else None,
        worst_count=worst,
    )


def _greedy_insert(table: FlatTable, order, s: int, target_size: int):
    """Insert points in the given order, skipping any that would fill a flat to s."""
    counts = [0] * len(table.flats)
    chosen = []
    for pt in order:
        slots = table.flats_through(pt)
        if any(counts[i] >= s - 1 for i in slots):
            continue
        for i in slots:
            counts[i] += 1
        chosen.append(pt)
        if len(chosen) >= target_size:
            break
    return chosen


def _search_best(field, d, k, s, target_size, max_attempts, seed, table=None):
    """Greedy-random insertion with restarts; returns (best point list, reached flag)."""
    if table is None:
        table = FlatTable(field, d, k)
    all_points = sorted(table.by_point.keys())
    rng = substream(seed, "evasive", d, k, s, target_size)
    best = []
    for _ in range(max(1, max_attempts)):
        order = list(all_points)
        rng.shuffle(order)
        chosen = _greedy_insert(table, order, s, target_size)
        if len(chosen) > len(best):
            best = chosen
        if len(best) >= target_size:
            return best, True
    return best, False


def random_evasive_search(field, d: int, k: int, s: int, target_size: int, max_attempts: int, seed: int):
    """A (k, s)-evasive set of exactly target_size points, or None after restarts.

    Points are inserted in seeded-shuffle order; an insertion is rejected when
    it would bring some k-flat up to s points, so any returned set verifies.
    """
    if target_size <= 0:
        return []
    if target_size > field.size**d:
        return None
    found, reached = _search_best(field, d, k, s, target_size, max_attempts, seed)
    return found if reached else None


def dedup_lines_through_origin(points):
    """Keep the first point (in input order) on each line through the origin."""
    pts = list(points)
    seen = {}
    out = []
    for pt in pts:
        if pt.is_zero():
            raise ValueError("the zero vector has no direction; remove it before dedup")
        field = pt.field
        lead = next(c for c in pt.coords if not field.is_zero(c))
        canon = pt.scale(field.inv(lead)).coords
        if canon not in seen:
            seen[canon] = pt
            out.append(pt)
    return out


def union_random_translates(points, count: int, seed: int, restrict_shifts_to: Optional[AffineFlat] = None):
    """Union of `count` seeded-random translates of the point set.

    Shifts are uniform over the whole space, or over the given flat's points.
    Returns a sorted list (deterministic downstream dedup order).
    """
    pts = list(points)
    if not pts:
        return []
    field = pts[0].field
    d = pts[0].dim
    rng = substream(seed, "translates", count)
    if restrict_shifts_to is not None:
        pool = list(restrict_shifts_to.points())
        shifts = [pool[rng.randrange(len(pool))] for _ in range(count)]
    else:
        shifts = [
            Vector(field, tuple(field.random_element(rng) for _ in range(d)))
            for _ in range(count)
        ]
    out = set()
    for u in shifts:
        for pt in pts:
            out.add(pt + u)
    return sorted(out)


def points_to_dict(field, d: int, points) -> dict:
    """Wire format for prime-field point sets: sorted coordinate rows."""
    if not hasattr(field, "p") or field.size != field.char:
        raise ValueError("only prime-field point sets serialize to the wire format")
    return {
        "p": field.p,
        "d": d,
        "points": sorted([list(pt.coords) for pt in points]),
    }


def points_from_dict(data: dict):
    from .fields import PrimeField

    field = PrimeField(data["p"])
    d = data["d"]
    pts = [Vector(field, tuple(row)) for row in data["points"]]
    for pt in pts:
        if pt.dim != d:
            raise ValueError("point dimension mismatch")
    return field, d, pts
