"""Vectors, hyperplanes, affine flats, and diagonal bilinear forms over small fields.

Flats are stored in a canonical reduced form (row-reduced direction basis plus
the unique coset representative vanishing on the pivot columns), so structural
equality coincides with set equality and enumeration yields each flat exactly
once.
"""

from __future__ import annotations

from itertools import combinations, product

from .util import check_grid


class Vector:
    """A point of F^d; coordinates are raw field values."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(field.canonical(c) for c in coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: "Vector"):
        if self.field != other.field or len(self.coords) != len(other.coords):
            raise ValueError("vectors from different spaces")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        f = self.field
        return Vector(f, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        f = self.field
        return Vector(f, tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        f = self.field
        return Vector(f, tuple(f.neg(a) for a in self.coords))

    def scale(self, c) -> "Vector":
        f = self.field
        c = f.canonical(c)
        return Vector(f, tuple(f.mul(c, a) for a in self.coords))

    def dot(self, other: "Vector"):
        """Standard dot product, returned as a raw field value."""
        self._check(other)
        f = self.field
        acc = f.zero
        for a, b in zip(self.coords, other.coords):
            acc = f.add(acc, f.mul(a, b))
        return acc

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(c) for c in self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, Vector)
            and other.field == self.field
            and other.coords == self.coords
        )

    def __lt__(self, other: "Vector"):
        return self.coords < other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return f"({', '.join(map(str, self.coords))})"


def zero_vector(field, d: int) -> Vector:
    return Vector(field, (field.zero,) * d)


def _rref(rows, field, width: int):
    """Reduced row echelon form; returns (nonzero rows as tuples, pivot columns)."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        pivot = None
        for i in range(r, len(work)):
            if not field.is_zero(work[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and not field.is_zero(work[i][c]):
                coef = work[i][c]
                work[i] = [field.sub(x, field.mul(coef, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return [tuple(work[i]) for i in range(r)], pivots


def rank(rows) -> int:
    """Rank of the span of the given vectors, by Gaussian elimination."""
    rows = list(rows)
    if not rows:
        return 0
    field = rows[0].field
    width = rows[0].dim
    for v in rows:
        if v.dim != width or v.field != field:
            raise ValueError("rows must share a common space")
    reduced, _ = _rref([v.coords for v in rows], field, width)
    return len(reduced)


class AffineFlat:
    """An affine flat base + span(basis), held in canonical reduced form."""

    __slots__ = ("field", "ambient_dim", "base", "basis", "pivots")

    def __init__(self, field, base, basis, pivots, _raw: bool = False):
        # The _raw path trusts the caller to pass already-canonical data
        # (used by enumerate_flats, which constructs flats canonically).
        self.field = field
        if _raw:
            self.base = base
            self.basis = basis
            self.pivots = pivots
            self.ambient_dim = len(base)
            return
        canon = flat_from_base_and_directions(field, base, basis)
        self.base = canon.base
        self.basis = canon.basis
        self.pivots = canon.pivots
        self.ambient_dim = canon.ambient_dim

    @property
    def dim(self) -> int:
        return len(self.basis)

    def base_vector(self) -> Vector:
        return Vector(self.field, self.base)

    def basis_vectors(self):
        return [Vector(self.field, b) for b in self.basis]

    def contains(self, x: Vector) -> bool:
        f = self.field
        if x.dim != self.ambient_dim:
            raise ValueError("dimension mismatch")
        y = [f.sub(a, b) for a, b in zip(x.coords, self.base)]
        for row, c in zip(self.basis, self.pivots):
            coef = y[c]
            if not f.is_zero(coef):
                y = [f.sub(a, f.mul(coef, b)) for a, b in zip(y, row)]
        return all(f.is_zero(a) for a in y)

    def direction_contains(self, v: Vector) -> bool:
        """Whether v lies in the flat's direction subspace."""
        f = self.field
        y = list(v.coords)
        for row, c in zip(self.basis, self.pivots):
            coef = y[c]
            if not f.is_zero(coef):
                y = [f.sub(a, f.mul(coef, b)) for a, b in zip(y, row)]
        return all(f.is_zero(a) for a in y)

    def points(self):
        """Every point of the flat; guarded by the grid cap."""
        f = self.field
        check_grid(f.size ** self.dim, "flat point enumeration")
        base = self.base
        if not self.basis:
            yield Vector(f, base)
            return
        for lams in product(list(f.elements()), repeat=self.dim):
            coords = list(base)
            for lam, row in zip(lams, self.basis):
                if f.is_zero(lam):
                    continue
                coords = [f.add(a, f.mul(lam, b)) for a, b in zip(coords, row)]
            yield Vector(f, coords)

    def point_count(self) -> int:
        return self.field.size ** self.dim

    def __eq__(self, other):
        return (
            isinstance(other, AffineFlat)
            and other.field == self.field
            and other.base == self.base
            and other.basis == self.basis
        )

    def __hash__(self):
        return hash((self.field, self.base, self.basis))

    def __repr__(self):
        return f"AffineFlat(dim={self.dim}, base={self.base}, basis={self.basis})"


def flat_from_base_and_directions(field, base, directions) -> AffineFlat:
    """Canonicalize: row-reduce the directions, then strip the base's pivot coordinates."""
    base = tuple(field.canonical(c) for c in (base.coords if isinstance(base, Vector) else base))
    width = len(base)
    rows = [d.coords if isinstance(d, Vector) else tuple(field.canonical(c) for c in d) for d in directions]
    reduced, pivots = _rref(rows, field, width) if rows else ([], [])
    b = list(base)
    for row, c in zip(reduced, pivots):
        coef = b[c]
        if not field.is_zero(coef):
            b = [field.sub(a, field.mul(coef, y)) for a, y in zip(b, row)]
    return AffineFlat(field, tuple(b), tuple(reduced), tuple(pivots), _raw=True)


def affine_hull(points) -> AffineFlat:
    """Smallest affine flat containing all the points."""
    points = list(points)
    if not points:
        raise ValueError("affine_hull of an empty point list")
    base = points[0]
    dirs = [p - base for p in points[1:]]
    return flat_from_base_and_directions(base.field, base, dirs)


def whole_space(field, d: int) -> AffineFlat:
    one, zero = field.one, field.zero
    rows = tuple(tuple(one if j == i else zero for j in range(d)) for i in range(d))
    return AffineFlat(field, (zero,) * d, rows, tuple(range(d)), _raw=True)


def gaussian_binomial(d: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^d."""
    if k < 0 or k > d:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (d - i) - 1
        den *= p ** (k - i) - 1
    return num // den


def enumerate_flats(field, d: int, k: int):
    """Every k-dimensional affine flat of F^d exactly once, in canonical form.

    Direction subspaces are enumerated through their reduced-row-echelon bases
    (one cell per pivot-column choice), then shifted by the coset
    representatives vanishing on the pivot columns.
    """
    if not (0 <= k <= d):
        raise ValueError(f"flat dimension {k} outside [0, {d}]")
    check_grid(field.size**d, "flat enumeration")
    elems = list(field.elements())
    zero, one = field.zero, field.one
    for pivots in combinations(range(d), k):
        pivot_set = set(pivots)
        free_pos = [
            (i, j)
            for i, ci in enumerate(pivots)
            for j in range(ci + 1, d)
            if j not in pivot_set
        ]
        offset_cols = [j for j in range(d) if j not in pivot_set]
        for fill in product(elems, repeat=len(free_pos)):
            rows = [[zero] * d for _ in range(k)]
            for i, ci in enumerate(pivots):
                rows[i][ci] = one
            for (i, j), v in zip(free_pos, fill):
                rows[i][j] = v
            basis = tuple(tuple(r) for r in rows)
            for off in product(elems, repeat=len(offset_cols)):
                base = [zero] * d
                for j, v in zip(offset_cols, off):
                    base[j] = v
                yield AffineFlat(field, tuple(base), basis, tuple(pivots), _raw=True)


class Hyperplane:
    """{x : <w, x> = b} under the standard dot product, stored projectively canonical.

    The normal is scaled so its first nonzero coordinate is 1; two (normal,
    offset) pairs describing the same point set then compare equal.
    """

    __slots__ = ("field", "normal", "offset")

    def __init__(self, normal: Vector, offset):
        field = normal.field
        if normal.is_zero():
            raise ValueError("hyperplane normal must be nonzero")
        offset = field.canonical(offset)
        lead = next(c for c in normal.coords if not field.is_zero(c))
        inv = field.inv(lead)
        self.field = field
        self.normal = normal.scale(inv)
        self.offset = field.mul(inv, offset)

    @property
    def dim(self) -> int:
        return self.normal.dim

    def contains(self, x: Vector) -> bool:
        return self.normal.dot(x) == self.offset

    def as_flat(self) -> AffineFlat:
        flat = solve_affine_system([self.normal], [self.offset], self.field, self.dim)
        assert flat is not None
        return flat

    def contains_flat(self, flat: AffineFlat) -> bool:
        if not self.contains(flat.base_vector()):
            return False
        f = self.field
        return all(
            f.is_zero(self.normal.dot(Vector(f, b))) for b in flat.basis
        )

    def __eq__(self, other):
        return (
            isinstance(other, Hyperplane)
            and other.field == self.field
            and other.normal == self.normal
            and other.offset == self.offset
        )

    def __lt__(self, other: "Hyperplane"):
        return (self.normal.coords, self.offset) < (other.normal.coords, other.offset)

    def __hash__(self):
        return hash((self.field, self.normal, self.offset))

    def __repr__(self):
        return f"Hyperplane(<{self.normal}, x> = {self.offset})"


def solve_affine_system(normals, rhs, field, d: int):
    """Solution set of <w_i, x> = b_i as a canonical flat, or None when inconsistent."""
    rows = []
    for w, b in zip(normals, rhs):
        coords = w.coords if isinstance(w, Vector) else tuple(field.canonical(c) for c in w)
        rows.append(list(coords) + [field.canonical(b)])
    if not rows:
        return whole_space(field, d)
    # Reduce the augmented matrix; a pivot landing in the rhs column means a
    # row collapsed to (0, ..., 0 | c) with c != 0, i.e. no solution.
    reduced_aug, pivots_aug = _rref(rows, field, d + 1)
    if any(c == d for c in pivots_aug):
        return None
    particular = [field.zero] * d
    for row, c in zip(reduced_aug, pivots_aug):
        particular[c] = row[d]
    pivot_set = set(pivots_aug)
    directions = []
    for j in range(d):
        if j in pivot_set:
            continue
        v = [field.zero] * d
        v[j] = field.one
        for row, c in zip(reduced_aug, pivots_aug):
            v[c] = field.neg(row[j])
        directions.append(tuple(v))
    return flat_from_base_and_directions(field, tuple(particular), directions)


class BilinearForm:
    """A diagonal form sum_i signs_i * u_i * v_i with signs in {+1, -1}.

    Always non-degenerate over odd characteristic since the Gram matrix is
    diagonal with unit entries.
    """

    __slots__ = ("d", "signs")

    def __init__(self, d: int, signs=None):
        if signs is None:
            signs = (1,) * d
        signs = tuple(signs)
        if len(signs) != d or any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be a length-d tuple over {+1, -1}")
        self.d = d
        self.signs = signs

    @classmethod
    def dot_product(cls, d: int) -> "BilinearForm":
        return cls(d)

    @classmethod
    def unit_distance_form(cls, d: int) -> "BilinearForm":
        """All +1 signs, except the last coordinate carries -1 when d = 1 mod 4."""
        if d % 4 == 1:
            return cls(d, (1,) * (d - 1) + (-1,))
        return cls(d)

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and other.signs == self.signs

    def __hash__(self):
        return hash(("BilinearForm", self.signs))

    def __repr__(self):
        return f"BilinearForm(signs={self.signs})"


def form_inner(form: BilinearForm, u: Vector, v: Vector):
    """<u, v> under the form, as a raw field value."""
    if u.dim != form.d or v.dim != form.d:
        raise ValueError("dimension mismatch with the form")
    u._check(v)
    f = u.field
    acc = f.zero
    for s, a, b in zip(form.signs, u.coords, v.coords):
        t = f.mul(a, b)
        acc = f.add(acc, t if s == 1 else f.neg(t))
    return acc


def form_norm(form: BilinearForm, v: Vector):
    return form_inner(form, v, v)


def flats_orthogonal(U: AffineFlat, V: AffineFlat, form: BilinearForm) -> bool:
    """True iff every direction of U is form-orthogonal to every direction of V.

    Equivalent to <u - u', v - v'> = 0 for all points u, u' of U and v, v' of V.
    """
    if U.ambient_dim != V.ambient_dim:
        raise ValueError("flats from different ambient spaces")
    f = U.field
    for bu in U.basis:
        vu = Vector(f, bu)
        for bv in V.basis:
            if not f.is_zero(form_inner(form, vu, Vector(f, bv))):
                return False
    return True
