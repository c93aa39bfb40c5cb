"""Constructive results: the isotropy threshold m(q), divisibility bounds,
orthogonal bases, Boolean subalgebras, and horizontal sums.

m(q) is the least number of nonzero field elements whose squares sum to
zero; the lattice of GF(q)^m is orthomodular exactly when m < m(q).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    DomainError,
    HypothesisViolated,
    NotOrthogonalBasis,
    NonPrime,
    OverlapViolation,
)
from .fields import FieldElement, FieldSpec, is_prime, make_field
from .laws import check_orthomodular, recognize_MOn
from .lattices import SubspaceLattice, build_lattice
from .report import Verdict
from .spaces import (
    FVector,
    Subspace,
    dot,
    intersect,
    is_isotropic,
    orthocomplement,
    rref,
    sum as subspace_sum,
)


# ---------------------------------------------------------------------------
# the threshold m(q)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundCheck:
    """One divisibility hypothesis with its claimed bound and witness."""

    name: str
    applies: bool
    bound: int | None = None
    witness: FVector | None = None
    witness_isotropic: bool | None = None


@dataclass(frozen=True)
class ThresholdBounds:
    p: int
    checks: tuple
    char2_threshold: int | None  # the threshold is 2 outright when p = 2

    def check(self, name: str) -> BoundCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def threshold_bounds(p: int) -> ThresholdBounds:
    """Upper bounds on m(q) for characteristic p from square-sum divisibility.

    When 6 divides (p-1)(2p-1) the squares 1^2..(p-1)^2 sum to a multiple
    of p, giving m(q) <= p-1; when p > 2 and 24 divides (p+1)(p-1) the
    squares 1^2..((p-1)/2)^2 do, giving m(q) <= (p-1)/2.  The first bound
    also follows whenever p > 2 and p = -1 mod 3.  Each applicable witness
    vector is confirmed isotropic.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    gf = make_field(p)

    def witness_vec(k: int) -> FVector:
        return FVector(gf, tuple(range(1, k + 1)))

    checks = []
    applies = (p - 1) * (2 * p - 1) % 6 == 0
    if applies:
        w = witness_vec(p - 1)
        checks.append(BoundCheck("six_divides", True, p - 1, w, is_isotropic(w)))
    else:
        checks.append(BoundCheck("six_divides", False))
    applies = p > 2 and (p + 1) * (p - 1) % 24 == 0
    if applies:
        w = witness_vec((p - 1) // 2)
        checks.append(BoundCheck("twentyfour_divides", True, (p - 1) // 2, w, is_isotropic(w)))
    else:
        checks.append(BoundCheck("twentyfour_divides", False))
    applies = p > 2 and p % 3 == 2
    checks.append(BoundCheck("mod3", applies, p - 1 if applies else None))
    return ThresholdBounds(p=p, checks=tuple(checks), char2_threshold=2 if p == 2 else None)


@dataclass(frozen=True)
class MqResult:
    """The threshold m(q) with a minimal witness and the bound checks."""

    q: int
    m_q: int
    witness: tuple  # m(q) nonzero FieldElements whose squares sum to zero
    bound_checks: dict  # name -> {"applies", "bound", "holds"}


def compute_mq(gf: FieldSpec) -> MqResult:
    """Least k with nonzero a_1..a_k in GF(q) satisfying sum a_i^2 = 0.

    Uses a reachable-set iteration: S_1 is the set of nonzero squares and
    S_{k+1} = S_k + S_1; m(q) is the first level containing 0, which the
    characteristic bounds by p.  The witness is reconstructed by
    backtracking and reported sorted ascending by element index.
    """
    q, p = gf.q, gf.p
    squares = sorted({gf.mul(a, a) for a in range(1, q)})
    first_root = {}
    for a in range(1, q):
        first_root.setdefault(gf.mul(a, a), a)

    levels = [set(squares)]
    while 0 not in levels[-1]:
        if len(levels) > p:
            raise RuntimeError("threshold iteration failed to terminate")  # unreachable
        levels.append({gf.add(s, t) for s in levels[-1] for t in squares})
    m_q = len(levels)
    assert 1 < m_q <= p

    def backtrack(level: int, target: int):
        if level == 1:
            for a in range(1, q):
                if gf.mul(a, a) == target:
                    return [a]
            raise RuntimeError("backtracking lost the witness")  # unreachable
        for a in range(1, q):
            rest = gf.sub(target, gf.mul(a, a))
            if rest in levels[level - 2]:
                return backtrack(level - 1, rest) + [a]
        raise RuntimeError("backtracking lost the witness")  # unreachable

    elems = sorted(backtrack(m_q, 0))
    witness = tuple(FieldElement(gf, a) for a in elems)
    acc = 0
    for a in elems:
        assert a != 0
        acc = gf.add(acc, gf.mul(a, a))
    assert acc == 0

    bounds = threshold_bounds(p)
    bound_checks = {
        c.name: {
            "applies": c.applies,
            "bound": c.bound,
            "holds": (m_q <= c.bound) if c.applies else None,
        }
        for c in bounds.checks
    }
    return MqResult(q=q, m_q=m_q, witness=witness, bound_checks=bound_checks)


def compute_mq_bruteforce(gf: FieldSpec) -> int:
    """Oracle for compute_mq: raw enumeration of k-tuples of nonzero
    elements for k = 2..p."""
    q, p = gf.q, gf.p
    for k in range(2, p + 1):
        for combo in itertools.product(range(1, q), repeat=k):
            acc = 0
            for a in combo:
                acc = gf.add(acc, gf.mul(a, a))
            if acc == 0:
                return k
    raise RuntimeError("no square-sum witness up to p terms")  # unreachable


# ---------------------------------------------------------------------------
# orthogonal bases and the Boolean subalgebra
# ---------------------------------------------------------------------------

def is_orthogonal_basis(vectors) -> bool:
    """True iff the m vectors are pairwise orthogonal with nonzero
    self-products; such a family is automatically a basis."""
    vectors = list(vectors)
    if not vectors:
        return False
    m = len(vectors[0].indices)
    if len(set(vectors)) != m:
        raise DimensionMismatch(f"need exactly {m} distinct vectors, got {len(set(vectors))}")
    for i, u in enumerate(vectors):
        for j, w in enumerate(vectors):
            d = dot(u, w).index
            if i == j and d == 0:
                return False
            if i != j and d != 0:
                return False
    # self-check: orthogonality forces linear independence
    assert rref(vectors).dim == m
    return True


class OrthoLattice:
    """Label-based description of a finite bounded lattice with an
    involution: explicit element labels, order matrix, involution map and
    join/meet tables.

    Join and meet may be supplied or derived from the order; derivation
    fails with ValueError when some pair has no least upper or greatest
    lower bound.
    """

    def __init__(self, labels, leq, perp, join=None, meet=None):
        self.labels = tuple(labels)
        self.n = len(self.labels)
        if len(set(self.labels)) != self.n:
            raise ValueError("labels must be distinct")
        self.leq = np.asarray(leq, dtype=bool)
        self.perp = np.asarray(perp, dtype=np.int32)
        self._validate_order()
        self.bottom = int(np.nonzero(self.leq.all(axis=1))[0][0])
        self.top = int(np.nonzero(self.leq.all(axis=0))[0][0])
        # tables are always derived from the order; supplied tables must agree
        self._join = self._derive(True)
        self._meet = self._derive(False)
        if join is not None and not np.array_equal(np.asarray(join, dtype=np.int32), self._join):
            raise ValueError("supplied join table disagrees with the order")
        if meet is not None and not np.array_equal(np.asarray(meet, dtype=np.int32), self._meet):
            raise ValueError("supplied meet table disagrees with the order")

    def _validate_order(self):
        n = self.n
        leq = self.leq
        if leq.shape != (n, n):
            raise ValueError("order matrix shape mismatch")
        if not leq.diagonal().all():
            raise ValueError("order is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("order is not antisymmetric")
        closure = leq.astype(np.uint8)
        if (((closure @ closure) > 0) & ~leq).any():
            raise ValueError("order is not transitive")
        if not self.leq.all(axis=1).any() or not self.leq.all(axis=0).any():
            raise ValueError("order has no bottom or no top")
        if sorted(self.perp.tolist()) != list(range(n)):
            raise ValueError("involution is not a permutation")

    def _derive(self, join: bool) -> np.ndarray:
        n = self.n
        rel = self.leq if join else self.leq.T
        table = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            for j in range(i, n):
                cands = np.nonzero(rel[i] & rel[j])[0]
                sub = rel[np.ix_(cands, cands)]
                best = np.nonzero(sub.all(axis=1))[0]
                if len(best) != 1:
                    kind = "least upper" if join else "greatest lower"
                    raise ValueError(f"pair ({i}, {j}) has no unique {kind} bound")
                table[i, j] = table[j, i] = cands[best[0]]
        return table

    def join_table(self) -> np.ndarray:
        return self._join

    def meet_table(self) -> np.ndarray:
        return self._meet

    def index_of_label(self, label) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"OrthoLattice({self.n} elements)"


def boolean_algebra(k: int, tag=None) -> OrthoLattice:
    """The Boolean algebra with k atoms, as subsets of {1..k} ordered by
    inclusion; an optional tag keeps labels disjoint across instances."""
    if k < 1:
        raise DomainError("need at least one atom")
    subsets = sorted(
        (frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(1, k + 1), r)),
        key=lambda s: (len(s), tuple(sorted(s))),
    )
    index = {s: i for i, s in enumerate(subsets)}
    n = len(subsets)
    full = frozenset(range(1, k + 1))
    leq = np.array([[a <= b for b in subsets] for a in subsets], dtype=bool)
    perp = np.array([index[full - s] for s in subsets], dtype=np.int32)
    join = np.array([[index[a | b] for b in subsets] for a in subsets], dtype=np.int32)
    meet = np.array([[index[a & b] for b in subsets] for a in subsets], dtype=np.int32)
    labels = tuple(
        tuple(sorted(s)) if tag is None else (tag, tuple(sorted(s))) for s in subsets
    )
    return OrthoLattice(labels, leq, perp, join=join, meet=meet)


def horizontal_sum(first: OrthoLattice, second: OrthoLattice) -> OrthoLattice:
    """Glue two nontrivial bounded ortholattices at their bounds.

    Joins across components are the top, meets the bottom, and the
    involution acts componentwise.  When both inputs satisfy the
    orthomodular law, the result is verified to satisfy it as well.
    """
    for lat in (first, second):
        if lat.n <= 2:
            raise DomainError("horizontal sum needs inputs with elements besides the bounds")
    shared = set(first.labels) & set(second.labels)
    bounds1 = {first.labels[first.bottom], first.labels[first.top]}
    bounds2 = {second.labels[second.bottom], second.labels[second.top]}
    if not shared <= (bounds1 & bounds2):
        raise OverlapViolation(f"non-bound labels collide: {sorted(map(str, shared - bounds1))}")

    mids2 = [i for i in range(second.n) if i not in (second.bottom, second.top)]
    labels = list(first.labels) + [second.labels[i] for i in mids2]
    n = len(labels)
    # output index -> index within each component (None when absent)
    to1 = list(range(first.n)) + [None] * len(mids2)
    to2 = [None] * first.n
    to2[first.bottom] = second.bottom
    to2[first.top] = second.top
    to2 += mids2
    from1 = {v: i for i, v in enumerate(to1) if v is not None}
    from2 = {v: i for i, v in enumerate(to2) if v is not None}

    join = np.empty((n, n), dtype=np.int32)
    meet = np.empty((n, n), dtype=np.int32)
    for x in range(n):
        for y in range(n):
            if to1[x] is not None and to1[y] is not None:
                join[x, y] = from1[int(first.join_table()[to1[x], to1[y]])]
                meet[x, y] = from1[int(first.meet_table()[to1[x], to1[y]])]
            elif to2[x] is not None and to2[y] is not None:
                join[x, y] = from2[int(second.join_table()[to2[x], to2[y]])]
                meet[x, y] = from2[int(second.meet_table()[to2[x], to2[y]])]
            else:
                join[x, y] = first.top
                meet[x, y] = first.bottom
    perp = np.empty(n, dtype=np.int32)
    for x in range(n):
        if to1[x] is not None:
            perp[x] = from1[int(first.perp[to1[x]])]
        else:
            perp[x] = from2[int(second.perp[to2[x]])]
    idx = np.arange(n)
    leq = join == idx[None, :]

    out = OrthoLattice(labels, leq, perp, join=join, meet=meet)
    if check_orthomodular(first).holds and check_orthomodular(second).holds:
        if not check_orthomodular(out).holds:
            raise RuntimeError("horizontal sum broke the orthomodular law")  # unreachable
    return out


def order_isomorphic(a, b, match_involution: bool = False) -> bool:
    """Backtracking order-isomorphism test for two small bounded posets
    (anything exposing n, leq and perp)."""
    if a.n != b.n:
        return False
    leq_a = np.asarray(a.leq)
    leq_b = np.asarray(b.leq)

    def key(leq, i):
        return (int(leq[:, i].sum()), int(leq[i, :].sum()))

    keys_a = [key(leq_a, i) for i in range(a.n)]
    keys_b = [key(leq_b, i) for i in range(b.n)]
    if sorted(keys_a) != sorted(keys_b):
        return False
    candidates = [[j for j in range(b.n) if keys_b[j] == keys_a[i]] for i in range(a.n)]
    assignment = [-1] * a.n
    used = [False] * b.n
    perp_a = np.asarray(a.perp)
    perp_b = np.asarray(b.perp)

    def extend(i: int) -> bool:
        if i == a.n:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            ok = all(
                leq_a[i, k] == leq_b[j, assignment[k]] and leq_a[k, i] == leq_b[assignment[k], j]
                for k in range(i)
            )
            if ok and match_involution:
                pa = int(perp_a[i])
                if pa < i and assignment[pa] != int(perp_b[j]):
                    ok = False
            if ok:
                assignment[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                assignment[i] = -1
                used[j] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# subposets of a built lattice
# ---------------------------------------------------------------------------

@dataclass
class SubPoset:
    """A perp-closed subset of a built lattice, with its induced order and
    the two verdicts of interest."""

    lattice: SubspaceLattice
    indices: tuple
    subspaces: tuple
    leq: np.ndarray
    perp: np.ndarray
    is_subuniverse: bool
    subuniverse_witness: tuple | None  # (op, parent index, parent index, result Subspace)
    is_orthomodular_as_poset: bool
    poset_note: str = ""
    ortho: OrthoLattice | None = None

    @property
    def n(self) -> int:
        return len(self.indices)

    def __contains__(self, sub: Subspace) -> bool:
        return sub in self.lattice and self.lattice.index_of(sub) in set(self.indices)


def _subposet(lattice: SubspaceLattice, subspaces) -> SubPoset:
    indices = sorted(lattice.index_of(s) for s in subspaces)
    if len(set(indices)) != len(subspaces):
        raise ValueError("subposet elements must be distinct")
    index_set = set(indices)
    if lattice.bottom not in index_set or lattice.top not in index_set:
        raise ValueError("subposet must contain both bounds")
    pos = {parent: k for k, parent in enumerate(indices)}
    subs = tuple(lattice.elements[i] for i in indices)
    leq = lattice.leq[np.ix_(indices, indices)]
    perp = np.array([pos[int(lattice.perp[i])] for i in indices], dtype=np.int32)

    is_subuniverse = True
    witness = None
    for ka, ia in enumerate(indices):
        for ib in indices[ka:]:
            for op_name, op in (("sum", subspace_sum), ("intersect", intersect)):
                result = op(lattice.elements[ia], lattice.elements[ib])
                if lattice.index_of(result) not in index_set:
                    is_subuniverse = False
                    witness = (op_name, ia, ib, result)
                    break
            if witness:
                break
        if witness:
            break

    try:
        ortho = OrthoLattice(labels=tuple(indices), leq=leq, perp=perp)
        verdict: Verdict = check_orthomodular(ortho)
        omp, note = verdict.holds, verdict.note
    except ValueError as exc:
        ortho, omp, note = None, False, f"not a lattice: {exc}"
    return SubPoset(
        lattice=lattice,
        indices=tuple(indices),
        subspaces=subs,
        leq=leq,
        perp=perp,
        is_subuniverse=is_subuniverse,
        subuniverse_witness=witness,
        is_orthomodular_as_poset=omp,
        poset_note=note,
        ortho=ortho,
    )


def boolean_subalgebra(basis, lattice: SubspaceLattice | None = None) -> SubPoset:
    """The 2^m coordinate subspaces spanned by subsets of an orthogonal
    basis; verified closed under sum, intersection and orthocomplement and
    order-isomorphic to the power set."""
    basis = list(basis)
    if not is_orthogonal_basis(basis):
        raise NotOrthogonalBasis("the family is not an orthogonal basis")
    gf = basis[0].field
    m = len(basis)
    if lattice is None:
        lattice = build_lattice(gf, m)

    subsets = sorted(
        (frozenset(c) for r in range(m + 1) for c in itertools.combinations(range(m), r)),
        key=lambda s: (len(s), tuple(sorted(s))),
    )
    spans = {}
    for s in subsets:
        spans[s] = rref([basis[i] for i in sorted(s)], field=gf, m=m)
    if len(set(spans.values())) != 2 ** m:
        raise RuntimeError("orthogonal basis produced colliding spans")  # unreachable

    full = frozenset(range(m))
    for s in subsets:
        if orthocomplement(spans[s]) != spans[full - s]:
            raise RuntimeError("complement identity failed for an orthogonal basis")  # unreachable
        for t in subsets:
            if (s <= t) != (spans[s] <= spans[t]):
                raise RuntimeError("power-set order mismatch")  # unreachable

    sub = _subposet(lattice, list(spans.values()))
    if not sub.is_subuniverse:
        raise RuntimeError("coordinate subspaces failed closure")  # unreachable
    return sub


def horizontal_sum_subposet(gf: FieldSpec, m: int, lattice: SubspaceLattice | None = None) -> SubPoset:
    """The (2^m + 2)-element subposet built from the coordinate subspaces
    of the standard basis together with the span of the all-ones vector
    and its orthocomplement.

    Requires that the characteristic does not divide m (otherwise the
    all-ones vector is isotropic and the construction degenerates).
    """
    if m < 2:
        raise DomainError("the construction needs ambient dimension >= 2")
    if m % gf.p == 0:
        raise HypothesisViolated(f"characteristic {gf.p} divides m = {m}")
    if lattice is None:
        lattice = build_lattice(gf, m)

    std = [FVector(gf, tuple(1 if j == i else 0 for j in range(m))) for i in range(m)]
    subsets = [
        frozenset(c) for r in range(m + 1) for c in itertools.combinations(range(m), r)
    ]
    members = {rref([std[i] for i in sorted(s)], field=gf, m=m) for s in subsets}
    w = rref([FVector(gf, (1,) * m)])
    members.add(w)
    members.add(orthocomplement(w))
    if len(members) != 2 ** m + 2:
        raise RuntimeError("construction produced colliding subspaces")  # unreachable
    return _subposet(lattice, sorted(members, key=lambda s: lattice.index_of(s)))


# ---------------------------------------------------------------------------
# the two-dimensional case
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Dim2Report:
    """Orthomodularity of the dimension-2 lattice against the residue-pair
    criterion x^2 + y^2 = 0 mod p on 1 <= x <= y <= p/2."""

    q: int
    p: int
    n: int
    pairs: tuple
    divisible_pairs: tuple
    lattice_orthomodular: bool
    implication_ok: bool  # a divisible pair forces non-orthomodularity
    prime_field: bool
    equivalence_ok: bool | None  # primes only: orthomodular iff no divisible pair
    mo_index_expected: int | None
    mo_index_actual: int | None
    mo_index_ok: bool | None


def dim2_orthomodularity_report(gf: FieldSpec, lattice: SubspaceLattice | None = None) -> Dim2Report:
    """Evaluate the residue-pair criterion for GF(q)^2 and cross-validate
    it against the built lattice.

    The full equivalence and the MO-index conclusion are specific to prime
    fields; for proper extensions only the one-directional implication is
    evaluated and the rest is reported as not applicable.
    """
    p = gf.p
    if lattice is None:
        lattice = build_lattice(gf, 2)
    pairs = tuple((x, y) for x in range(1, p // 2 + 1) for y in range(x, p // 2 + 1))
    divisible = tuple((x, y) for x, y in pairs if (x * x + y * y) % p == 0)
    om = check_orthomodular(lattice).holds
    implication_ok = (not divisible) or (not om)
    prime_field = gf.n == 1
    if prime_field:
        equivalence_ok = om == (not divisible)
        if om:
            expected = (gf.q + 1) // 2
            actual = recognize_MOn(lattice)
            mo_ok = actual == expected
        else:
            expected = actual = mo_ok = None
    else:
        equivalence_ok = None
        expected = actual = mo_ok = None
    return Dim2Report(
        q=gf.q,
        p=p,
        n=gf.n,
        pairs=pairs,
        divisible_pairs=divisible,
        lattice_orthomodular=om,
        implication_ok=implication_ok,
        prime_field=prime_field,
        equivalence_ok=equivalence_ok,
        mo_index_expected=expected,
        mo_index_actual=actual,
        mo_index_ok=mo_ok,
    )
