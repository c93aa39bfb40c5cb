"""Vectors over GF(q), the dot-product form, and canonical subspaces.

A subspace is represented by the reduced row echelon basis of its row
space, which is unique, so subspace equality is plain tuple equality.
The zero subspace has an empty basis rather than a zero row.
"""

from __future__ import annotations

import itertools

from .errors import (
    AmbientMismatch,
    CapExceeded,
    DimensionMismatch,
    FieldMismatch,
)
from .fields import FieldElement, FieldSpec

# Hard ceiling on explicit vector enumerations (q**m, q**r).
VECTOR_ENUM_CAP = 2 ** 20


class FVector:
    """An immutable length-m vector; coordinates live in one FieldSpec.

    Coordinates may be given as integer element indices or as
    FieldElement values of the same field.
    """

    __slots__ = ("field", "indices")

    def __init__(self, field: FieldSpec, values):
        idx = []
        for v in values:
            if isinstance(v, FieldElement):
                if v.field != field:
                    raise FieldMismatch(f"coordinate from {v.field} in a vector over {field}")
                idx.append(v.index)
            else:
                i = int(v)
                if not 0 <= i < field.q:
                    raise ValueError(f"coordinate index {i} out of range for {field}")
                idx.append(i)
        if not idx:
            raise ValueError("vectors must have at least one coordinate")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "indices", tuple(idx))

    def __setattr__(self, name, value):
        raise AttributeError("FVector is immutable")

    @property
    def m(self) -> int:
        return len(self.indices)

    @property
    def entries(self) -> tuple:
        return tuple(FieldElement(self.field, i) for i in self.indices)

    def is_zero(self) -> bool:
        return all(i == 0 for i in self.indices)

    def __len__(self):
        return len(self.indices)

    def __getitem__(self, k) -> FieldElement:
        return FieldElement(self.field, self.indices[k])

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, FVector)
            and self.field == other.field
            and self.indices == other.indices
        )

    def __hash__(self):
        return hash((self.field, self.indices))

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def __repr__(self):
        return f"FVector({self.field}, {self.indices})"

    def dot(self, other: "FVector") -> FieldElement:
        return dot(self, other)


def dot(a: FVector, b: FVector) -> FieldElement:
    """The bilinear form sum_i a_i * b_i; symmetric in its arguments."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if len(a.indices) != len(b.indices):
        raise DimensionMismatch(f"lengths {len(a.indices)} vs {len(b.indices)}")
    f = a.field
    acc = 0
    for x, y in zip(a.indices, b.indices):
        acc = f.add(acc, f.mul(x, y))
    return FieldElement(f, acc)


def is_isotropic(a: FVector) -> bool:
    """True iff a is nonzero and orthogonal to itself."""
    return not a.is_zero() and dot(a, a).index == 0


# ---------------------------------------------------------------------------
# raw row operations; rows are lists/tuples of element indices
# ---------------------------------------------------------------------------

def _rref_raw(field: FieldSpec, m: int, rows):
    """Reduced row echelon form of the row list; returns a tuple of nonzero
    rows with strictly increasing pivots, pivot entries 1, pivot columns
    cleared."""
    work = [list(r) for r in rows]
    lead = 0
    for col in range(m):
        pivot = None
        for i in range(lead, len(work)):
            if work[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[lead], work[pivot] = work[pivot], work[lead]
        inv = field.inv(work[lead][col])
        if inv != 1:
            work[lead] = [field.mul(inv, v) for v in work[lead]]
        for i in range(len(work)):
            if i != lead and work[i][col] != 0:
                c = work[i][col]
                row_i, row_l = work[i], work[lead]
                work[i] = [field.sub(row_i[j], field.mul(c, row_l[j])) for j in range(m)]
        lead += 1
        if lead == len(work):
            break
    return tuple(tuple(r) for r in work[:lead])


def _pivots(rows):
    return [next(j for j, v in enumerate(row) if v != 0) for row in rows]


def _reduce_vec(field: FieldSpec, rows, pivots, vec):
    """Residue of vec after elimination against an RREF row set."""
    out = list(vec)
    for row, pc in zip(rows, pivots):
        c = out[pc]
        if c != 0:
            out = [field.sub(out[j], field.mul(c, row[j])) for j in range(len(out))]
    return out


def _nullspace_raw(field: FieldSpec, m: int, rows):
    """RREF basis of {x : R x = 0} for an RREF row set R over GF(q)."""
    rows = _rref_raw(field, m, rows)
    pivots = _pivots(rows)
    pivot_set = set(pivots)
    free = [j for j in range(m) if j not in pivot_set]
    kernel = []
    for fcol in free:
        vec = [0] * m
        vec[fcol] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = field.neg(rows[i][fcol])
        kernel.append(vec)
    return _rref_raw(field, m, kernel)


class Subspace:
    """A linear subspace of GF(q)^m held as its unique RREF basis."""

    __slots__ = ("field", "m", "rows")

    def __init__(self, field: FieldSpec, m: int, rows):
        # rows must already be a canonical RREF tuple; use rref() to build
        # from arbitrary generators.
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, field: FieldSpec, m: int) -> "Subspace":
        return cls(field, m, ())

    @classmethod
    def full(cls, field: FieldSpec, m: int) -> "Subspace":
        rows = tuple(tuple(1 if j == i else 0 for j in range(m)) for i in range(m))
        return cls(field, m, rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple:
        return tuple(FVector(self.field, r) for r in self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return len(self.rows) == self.m

    def contains(self, v: FVector) -> bool:
        if v.field != self.field or len(v.indices) != self.m:
            raise AmbientMismatch("vector does not live in this ambient space")
        residue = _reduce_vec(self.field, self.rows, _pivots(self.rows), v.indices)
        return all(c == 0 for c in residue)

    def __le__(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        pivots = _pivots(other.rows)
        for row in self.rows:
            if any(_reduce_vec(self.field, other.rows, pivots, row)):
                return False
        return True

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def perp(self) -> "Subspace":
        return orthocomplement(self)

    def members(self, cap: int = VECTOR_ENUM_CAP):
        return members(self, cap=cap)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.m == other.m
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.m, self.rows))

    def __repr__(self):
        inner = ", ".join(str(FVector(self.field, r)) for r in self.rows) if self.rows else "0"
        return f"Subspace<{inner}> in {self.field}^{self.m}"


def _check_ambient(u: Subspace, w: Subspace):
    if u.field != w.field or u.m != w.m:
        raise AmbientMismatch(f"{u.field}^{u.m} vs {w.field}^{w.m}")


def rref(rows, field: FieldSpec | None = None, m: int | None = None) -> Subspace:
    """Canonical subspace spanned by the given FVectors.

    The ambient space is inferred from the rows; it must be supplied
    explicitly for an empty generating set.
    """
    rows = list(rows)
    if rows:
        field = rows[0].field
        m = len(rows[0].indices)
        for r in rows[1:]:
            if r.field != field:
                raise FieldMismatch("generators from different fields")
            if len(r.indices) != m:
                raise DimensionMismatch("generators of different lengths")
        return Subspace(field, m, _rref_raw(field, m, [r.indices for r in rows]))
    if field is None or m is None:
        raise ValueError("empty generating set needs an explicit field and dimension")
    return Subspace.zero(field, m)


def members(u: Subspace, cap: int = VECTOR_ENUM_CAP):
    """All q^dim vectors of the subspace, each exactly once.

    Order is lexicographic in the coefficient tuple of the basis
    combination, leftmost coefficient most significant.
    """
    q = u.field.q
    count = q ** u.dim
    if count > cap:
        raise CapExceeded(f"{count} member vectors exceed the cap {cap}")
    f = u.field
    out = []
    for coeffs in itertools.product(range(q), repeat=u.dim):
        vec = [0] * u.m
        for c, row in zip(coeffs, u.rows):
            if c:
                vec = [f.add(vec[j], f.mul(c, row[j])) for j in range(u.m)]
        out.append(FVector(f, vec))
    return out


def orthocomplement(u: Subspace) -> Subspace:
    """All vectors orthogonal to every member of u under the dot form."""
    if u.is_zero():
        return Subspace.full(u.field, u.m)
    return Subspace(u.field, u.m, _nullspace_raw(u.field, u.m, u.rows))


def sum(u: Subspace, w: Subspace) -> Subspace:  # noqa: A001 - lattice join
    """The subspace sum u + w, i.e. the lattice join."""
    _check_ambient(u, w)
    return Subspace(u.field, u.m, _rref_raw(u.field, u.m, list(u.rows) + list(w.rows)))


def intersect(u: Subspace, w: Subspace) -> Subspace:
    """The lattice meet, by a direct kernel construction.

    A combination sum_i a_i u_i lies in w exactly when the residues of the
    u_i after elimination against w combine to zero, so the meet is the
    image of the kernel of the residue matrix.
    """
    _check_ambient(u, w)
    if u.is_zero() or w.is_full():
        return u
    if w.is_zero() or u.is_full():
        return w
    f = u.field
    w_pivots = _pivots(w.rows)
    residues = [_reduce_vec(f, w.rows, w_pivots, row) for row in u.rows]
    # kernel of {a : sum_i a_i residues_i = 0} = nullspace of the transpose
    transposed = [[residues[i][j] for i in range(len(residues))] for j in range(u.m)]
    kernel = _nullspace_raw(f, len(residues), transposed)
    combo_rows = []
    for a in kernel:
        vec = [0] * u.m
        for c, row in zip(a, u.rows):
            if c:
                vec = [f.add(vec[j], f.mul(c, row[j])) for j in range(u.m)]
        combo_rows.append(vec)
    return Subspace(f, u.m, _rref_raw(f, u.m, combo_rows))


def find_isotropic(field: FieldSpec, m: int, cap: int = VECTOR_ENUM_CAP):
    """First isotropic vector of GF(q)^m in enumeration order, or None.

    Vectors are scanned ascending by integer rank with the leftmost
    coordinate most significant, so the answer is reproducible.
    """
    q = field.q
    total = q ** m
    if total > cap:
        raise CapExceeded(f"{total} vectors exceed the cap {cap}")
    for rank in range(1, total):
        vec = []
        r = rank
        for k in range(m - 1, -1, -1):
            vec.append(r // q ** k)
            r %= q ** k
        acc = 0
        for x in vec:
            acc = field.add(acc, field.mul(x, x))
        if acc == 0:
            return FVector(field, vec)
    return None
