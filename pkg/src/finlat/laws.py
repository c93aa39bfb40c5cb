"""Exhaustive deciders for the lattice laws, with failure witnesses.

Every checker quantifies over all elements (no sampling) and, on failure,
returns the first witness in element-index order, so golden expectations
stay stable.  The checkers only need an object exposing

    n, leq (boolean matrix), perp (index array), bottom, top,
    join_table(), meet_table()

so they work both on built subspace lattices and on abstract ortholattice
descriptions.
"""

from __future__ import annotations

import numpy as np

from .lattices import SubspaceLattice, chain_condition_check
from .report import PropertyReport, Verdict


def _first_pair(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def check_modular(lat) -> Verdict:
    """x <= z implies x v (y ^ z) = (x v y) ^ z, over all triples."""
    join, meet = lat.join_table(), lat.meet_table()
    leq = lat.leq
    for x in range(lat.n):
        lhs = join[x][meet]            # [y, z] -> x v (y ^ z)
        rhs = meet[join[x]]            # [y, z] -> (x v y) ^ z
        bad = (lhs != rhs) & leq[x][None, :]
        if bad.any():
            y, z = _first_pair(bad)
            return Verdict(False, (x, y, z), "modular law fails")
    return Verdict(True)


def check_atomistic(lat) -> Verdict:
    """Every element is the join of the atoms below it."""
    join = lat.join_table()
    downset_sizes = lat.leq.sum(axis=0)
    atoms = [i for i in range(lat.n) if downset_sizes[i] == 2]
    for u in range(lat.n):
        acc = lat.bottom
        for a in atoms:
            if lat.leq[a, u]:
                acc = int(join[acc, a])
        if acc != u:
            return Verdict(False, (u,), "element is not the join of its atoms")
    return Verdict(True)


def check_antitone_involution(lat) -> Verdict:
    """perp is an involution and order-reversing."""
    perp = np.asarray(lat.perp)
    ident = np.arange(lat.n)
    double = perp[perp]
    if not np.array_equal(double, ident):
        u = int(np.nonzero(double != ident)[0][0])
        return Verdict(False, (u,), "double complement differs from the element")
    permuted = lat.leq[np.ix_(perp, perp)]
    bad = lat.leq & ~permuted.T
    pair = _first_pair(bad)
    if pair is not None:
        return Verdict(False, pair, "involution is not order-reversing")
    return Verdict(True)


def check_complementation(lat) -> Verdict:
    """u ^ u' = bottom and u v u' = top for every u.

    For subspace lattices the two conditions are equivalent through the
    dimension identity; both are still executed as a self-check.
    """
    join, meet = lat.join_table(), lat.meet_table()
    perp = np.asarray(lat.perp)
    idx = np.arange(lat.n)
    meets = meet[idx, perp]
    joins = join[idx, perp]
    bad_meet = meets != lat.bottom
    bad_join = joins != lat.top
    bad = bad_meet | bad_join
    if bad.any():
        u = int(np.nonzero(bad)[0][0])
        if bad_meet[u]:
            note = "meet with the complement is not the bottom"
        else:
            note = "join with the complement is not the top"
        return Verdict(False, (int(u),), note)
    return Verdict(True)


def check_orthomodular(lat) -> Verdict:
    """Antitone involution + complementation + the orthomodular law
    x <= y implies y = x v (x' ^ y).

    Prerequisites are re-verified here rather than trusted, so the verdict
    stands alone in reports.
    """
    pre = check_antitone_involution(lat)
    if not pre:
        return Verdict(False, pre.witness, f"involution: {pre.note}")
    pre = check_complementation(lat)
    if not pre:
        return Verdict(False, pre.witness, f"complementation: {pre.note}")
    join, meet = lat.join_table(), lat.meet_table()
    perp = np.asarray(lat.perp)
    idx = np.arange(lat.n)
    for x in range(lat.n):
        recomposed = join[x][meet[perp[x]]]      # y -> x v (x' ^ y)
        bad = lat.leq[x] & (recomposed != idx)
        if bad.any():
            y = int(np.nonzero(bad)[0][0])
            return Verdict(False, (x, y), "orthomodular law fails")
    return Verdict(True)


def check_paraorthomodular(lat) -> Verdict:
    """u <= w and u' ^ w = bottom imply u = w, over all pairs."""
    meet = lat.meet_table()
    perp = np.asarray(lat.perp)
    idx = np.arange(lat.n)
    for x in range(lat.n):
        bad = lat.leq[x] & (meet[perp[x]] == lat.bottom) & (idx != x)
        if bad.any():
            y = int(np.nonzero(bad)[0][0])
            return Verdict(False, (x, y), "paraorthomodular condition fails")
    return Verdict(True)


def recognize_Mn(lat):
    """n when the lattice is bounds plus n >= 2 pairwise-incomparable
    elements that are atoms and coatoms at once; None otherwise."""
    if lat.n < 4:
        return None
    down = lat.leq.sum(axis=0)
    up = lat.leq.sum(axis=1)
    mids = [i for i in range(lat.n) if i not in (lat.bottom, lat.top)]
    if all(down[i] == 2 and up[i] == 2 for i in mids) and len(mids) >= 2:
        return len(mids)
    return None


def recognize_MOn(lat):
    """n when the lattice is M_2n and the involution pairs the atoms into
    n disjoint pairs with a != a' for every atom; None otherwise."""
    k = recognize_Mn(lat)
    if k is None or k % 2:
        return None
    perp = np.asarray(lat.perp)
    if perp[lat.bottom] != lat.top or perp[lat.top] != lat.bottom:
        return None
    for a in range(lat.n):
        if a in (lat.bottom, lat.top):
            continue
        if perp[a] == a or perp[a] in (lat.bottom, lat.top):
            return None
    return k // 2


def check_all(lattice: SubspaceLattice) -> PropertyReport:
    """Run every law on a built subspace lattice."""
    f = lattice.field
    report = PropertyReport(p=f.p, n=f.n, q=f.q, modulus=f.modulus, m=lattice.m)
    report.verdicts["modular"] = check_modular(lattice)
    report.verdicts["atomistic"] = check_atomistic(lattice)
    report.verdicts["chain_condition"] = chain_condition_check(lattice)
    report.verdicts["antitone_involution"] = check_antitone_involution(lattice)
    report.verdicts["complementation"] = check_complementation(lattice)
    report.verdicts["orthomodular"] = check_orthomodular(lattice)
    report.verdicts["paraorthomodular"] = check_paraorthomodular(lattice)
    return report
