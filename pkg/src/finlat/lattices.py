"""Exhaustive construction of the subspace lattice of GF(q)^m.

Subspaces are enumerated by generating RREF matrices directly (choose
pivot columns, fill the free entries), which hits every subspace exactly
once and independently validates the Gaussian-binomial counts.  Elements
are ordered by ascending dimension, then lexicographically on the
flattened basis matrix, so indices are stable across runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded, DomainError
from .fields import FieldSpec
from .report import Verdict
from .spaces import (
    VECTOR_ENUM_CAP,
    Subspace,
    _pivots,
    _reduce_vec,
    _rref_raw,
    intersect,
    orthocomplement,
    sum as subspace_sum,
)

DEFAULT_LATTICE_CAP = 100_000


# ---------------------------------------------------------------------------
# counting formulas (exact integer arithmetic throughout)
# ---------------------------------------------------------------------------

def _a(q: int, n: int) -> int:
    out = 1
    for i in range(1, n + 1):
        out *= q ** i - 1
    return out


def gaussian_count(q: int, m: int, d: int) -> int:
    """Number of d-dimensional subspaces of GF(q)^m."""
    if not 0 <= d <= m:
        raise DomainError(f"dimension {d} outside 0..{m}")
    num = _a(q, m)
    den = _a(q, d) * _a(q, m - d)
    count, rem = divmod(num, den)
    assert rem == 0, "Gaussian binomial must divide exactly"
    return count


def atom_count(q: int, m: int) -> int:
    """Number of one-dimensional subspaces: 1 + q + ... + q^(m-1)."""
    if m < 1:
        raise DomainError("atom count needs m >= 1")
    return (q ** m - 1) // (q - 1)


def upper_covers_count(q: int, m: int, d: int) -> int:
    """(d+1)-dimensional subspaces above a fixed d-dimensional one."""
    if not 0 <= d < m:
        raise DomainError(f"dimension {d} outside 0..{m - 1}")
    return (q ** (m - d) - 1) // (q - 1)


def lower_covers_count(q: int, m: int, d: int) -> int:
    """(d-1)-dimensional subspaces below a fixed d-dimensional one."""
    if not 0 < d <= m:
        raise DomainError(f"dimension {d} outside 1..{m}")
    return (q ** d - 1) // (q - 1)


@dataclass(frozen=True)
class CountProfile:
    """Closed-form counting profile of the lattice of GF(q)^m."""

    q: int
    m: int
    by_dimension: dict
    atom_count: int
    upper_cover_counts: dict
    lower_cover_counts: dict


def count_profile(q: int, m: int) -> CountProfile:
    return CountProfile(
        q=q,
        m=m,
        by_dimension={d: gaussian_count(q, m, d) for d in range(m + 1)},
        atom_count=atom_count(q, m),
        upper_cover_counts={d: upper_covers_count(q, m, d) for d in range(m)},
        lower_cover_counts={d: lower_covers_count(q, m, d) for d in range(1, m + 1)},
    )


# ---------------------------------------------------------------------------
# subspace enumeration
# ---------------------------------------------------------------------------

def enumerate_rref_bases(field: FieldSpec, m: int, d: int):
    """All RREF basis matrices of d-dimensional subspaces of GF(q)^m,
    sorted lexicographically on the flattened matrix."""
    if d == 0:
        return [()]
    q = field.q
    out = []
    for pivots in itertools.combinations(range(m), d):
        pivot_set = set(pivots)
        cells = [
            (i, j)
            for i in range(d)
            for j in range(pivots[i] + 1, m)
            if j not in pivot_set
        ]
        for fill in itertools.product(range(q), repeat=len(cells)):
            matrix = [[0] * m for _ in range(d)]
            for i, pc in enumerate(pivots):
                matrix[i][pc] = 1
            for (i, j), v in zip(cells, fill):
                matrix[i][j] = v
            out.append(tuple(tuple(r) for r in matrix))
    out.sort()
    return out


def _member_mask(field: FieldSpec, m: int, rows) -> int:
    """Bitmask over vector ranks (leftmost coordinate most significant)
    marking every member of the row space."""
    q = field.q
    mask = 0
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        vec = [0] * m
        for c, row in zip(coeffs, rows):
            if c:
                vec = [field.add(vec[j], field.mul(c, row[j])) for j in range(m)]
        rank = 0
        for v in vec:
            rank = rank * q + v
        mask |= 1 << rank
    return mask


class SubspaceLattice:
    """The full lattice of subspaces of GF(q)^m.

    elements[0] is the zero subspace, elements[-1] the whole space.  The
    order relation, cover relation and orthocomplement involution are
    stored explicitly; join/meet tables are computed on first use from
    the subspace sum and the kernel-based intersection.
    """

    def __init__(self, field: FieldSpec, m: int, elements, leq, dims, perp):
        self.field = field
        self.m = m
        self.elements = tuple(elements)
        self.n = len(self.elements)
        self.leq = leq
        self.dims = dims
        self.perp = perp
        self.covers = leq & (dims[None, :] == dims[:, None] + 1)
        self.bottom = 0
        self.top = self.n - 1
        self._index = {s.rows: i for i, s in enumerate(self.elements)}
        self._join = None
        self._meet = None

    # -- basic queries -------------------------------------------------------

    def index_of(self, sub: Subspace) -> int:
        try:
            return self._index[sub.rows]
        except KeyError:
            raise KeyError(f"{sub!r} is not an element of this lattice") from None

    def __contains__(self, sub) -> bool:
        return isinstance(sub, Subspace) and sub.rows in self._index

    @property
    def by_dimension(self) -> dict:
        out: dict = {}
        for d in self.dims.tolist():
            out[d] = out.get(d, 0) + 1
        return {d: out[d] for d in range(self.m + 1)}

    def atoms(self):
        return [i for i in range(self.n) if self.dims[i] == 1]

    def coatoms(self):
        return [i for i in range(self.n) if self.dims[i] == self.m - 1]

    def cover_pairs(self):
        src, dst = np.nonzero(self.covers)
        return sorted(zip(src.tolist(), dst.tolist()))

    # -- join/meet tables ------------------------------------------------------

    def join_table(self) -> np.ndarray:
        if self._join is None:
            self._join = self._build_table(join=True)
        return self._join

    def meet_table(self) -> np.ndarray:
        if self._meet is None:
            self._meet = self._build_table(join=False)
        return self._meet

    def _build_table(self, join: bool) -> np.ndarray:
        n = self.n
        table = np.empty((n, n), dtype=np.int32)
        leq = self.leq
        for i in range(n):
            table[i, i] = i
            for j in range(i + 1, n):
                if leq[i, j]:
                    k = j if join else i
                elif leq[j, i]:
                    k = i if join else j
                else:
                    op = subspace_sum if join else intersect
                    k = self.index_of(op(self.elements[i], self.elements[j]))
                table[i, j] = k
                table[j, i] = k
        return table

    # -- order-theoretic oracles ------------------------------------------------

    def order_join_table(self) -> np.ndarray:
        """Least upper bounds computed purely from the order relation;
        kept as an independent oracle for the algebraic table."""
        n = self.n
        table = np.empty((n, n), dtype=np.int32)
        leq = self.leq
        for i in range(n):
            common = leq[i] & leq
            table[i] = np.argmax(common, axis=1)
        return table

    def order_meet_table(self) -> np.ndarray:
        n = self.n
        table = np.empty((n, n), dtype=np.int32)
        geq = self.leq.T
        for i in range(n):
            common = geq[i] & geq
            table[i] = n - 1 - np.argmax(common[:, ::-1], axis=1)
        return table

    def covers_by_transitive_reduction(self) -> np.ndarray:
        """The generic transitive reduction of the strict order; oracle for
        the dimension-difference-1 cover computation."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        lt_u8 = lt.astype(np.uint8)
        two_step = (lt_u8 @ lt_u8) > 0
        return lt & ~two_step

    def __repr__(self):
        return f"SubspaceLattice({self.field}^{self.m}, {self.n} elements)"


def build_lattice(field: FieldSpec, m: int, cap: int = DEFAULT_LATTICE_CAP) -> SubspaceLattice:
    """Enumerate the full subspace lattice of GF(q)^m.

    Raises CapExceeded (with the offending count) when the total number of
    subspaces would exceed the cap.
    """
    if m < 1:
        raise DomainError("ambient dimension must be >= 1")
    q = field.q
    total = sum(gaussian_count(q, m, d) for d in range(m + 1))
    if total > cap:
        raise CapExceeded(f"{total} subspaces exceed the cap {cap}")

    all_rows = []
    dims = []
    for d in range(m + 1):
        block = enumerate_rref_bases(field, m, d)
        all_rows.extend(block)
        dims.extend([d] * len(block))
    elements = [Subspace(field, m, rows) for rows in all_rows]
    dims = np.array(dims, dtype=np.int32)
    n = len(elements)

    leq = np.zeros((n, n), dtype=bool)
    if q ** m <= VECTOR_ENUM_CAP:
        masks = [_member_mask(field, m, rows) for rows in all_rows]
        for i in range(n):
            mi = masks[i]
            di = dims[i]
            for j in range(n):
                if di <= dims[j] and (mi & masks[j]) == mi:
                    leq[i, j] = True
    else:
        # fallback for huge ambient spaces: row-by-row membership reduction
        pivot_cache = [_pivots(rows) for rows in all_rows]
        for j in range(n):
            rows_j, piv_j = all_rows[j], pivot_cache[j]
            for i in range(n):
                if dims[i] <= dims[j] and all(
                    not any(_reduce_vec(field, rows_j, piv_j, row)) for row in all_rows[i]
                ):
                    leq[i, j] = True

    index = {rows: i for i, rows in enumerate(all_rows)}
    perp = np.empty(n, dtype=np.int32)
    for i, el in enumerate(elements):
        perp[i] = index[orthocomplement(el).rows]

    return SubspaceLattice(field, m, elements, leq, dims, perp)


def chain_condition_check(lattice: SubspaceLattice) -> Verdict:
    """All maximal chains from the bottom to any fixed element have the
    same length (the element's dimension); checked by depth-first
    enumeration of cover paths."""
    n = lattice.n
    successors = [np.nonzero(lattice.covers[i])[0].tolist() for i in range(n)]
    leq = lattice.leq
    for target in range(n):
        expected = int(lattice.dims[target])
        by_length: dict[int, tuple] = {}
        stack = [(lattice.bottom, (lattice.bottom,))]
        while stack:
            node, path = stack.pop()
            if node == target:
                by_length.setdefault(len(path) - 1, path)
                continue
            for nxt in successors[node]:
                if leq[nxt, target]:
                    stack.append((nxt, path + (nxt,)))
        if len(by_length) > 1:
            chains = [by_length[k] for k in sorted(by_length)]
            return Verdict(
                False,
                (chains[0], chains[-1]),
                f"maximal chains to element {target} have lengths {sorted(by_length)}",
            )
        if by_length and expected not in by_length:
            (length,) = by_length
            return Verdict(
                False,
                (by_length[length],),
                f"chains to element {target} have length {length}, expected {expected}",
            )
    return Verdict(True)


def export_dot(lattice: SubspaceLattice, show_basis: bool = False, perp_edges: bool = False) -> str:
    """DOT digraph of the cover relation, ranked by dimension.

    Node ids are u<index>; one edge per cover pair; optionally the
    orthocomplement pairing is drawn as dashed undirected edges.  Output
    bytes are deterministic for fixed inputs and options.
    """
    lines = ["digraph subspace_lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for d in range(lattice.m + 1):
        ids = [f"u{i}" for i in range(lattice.n) if lattice.dims[i] == d]
        lines.append("  { rank=same; " + " ".join(f"{x};" for x in ids) + " }")
    for i, el in enumerate(lattice.elements):
        label = f"u{i} d{int(lattice.dims[i])}"
        if show_basis:
            rows = "; ".join("(" + ",".join(str(v) for v in row) + ")" for row in el.rows)
            label += f" [{rows}]"
        lines.append(f'  u{i} [label="{label}"];')
    for i, j in lattice.cover_pairs():
        lines.append(f"  u{i} -> u{j};")
    if perp_edges:
        for i in range(lattice.n):
            j = int(lattice.perp[i])
            if i < j:
                lines.append(f"  u{i} -> u{j} [style=dashed, dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
