import numpy as np
import pytest

from finlat import (
    CapExceeded,
    DomainError,
    atom_count,
    build_lattice,
    chain_condition_check,
    count_profile,
    enumerate_rref_bases,
    export_dot,
    gaussian_count,
    lower_covers_count,
    make_field,
    upper_covers_count,
)


# ---------------------------------------------------------------------------
# counting formulas
# ---------------------------------------------------------------------------

def test_gaussian_count_examples():
    assert gaussian_count(3, 2, 1) == 4
    assert gaussian_count(2, 3, 1) == 7
    for q in (2, 3, 5):
        for m in range(1, 5):
            assert gaussian_count(q, m, 0) == 1
            assert gaussian_count(q, m, m) == 1
    with pytest.raises(DomainError):
        gaussian_count(2, 3, 4)
    with pytest.raises(DomainError):
        gaussian_count(2, 3, -1)


def test_atom_count_examples():
    assert atom_count(3, 2) == 4
    assert atom_count(2, 3) == 7
    for q in (2, 3, 4, 5, 7):
        assert atom_count(q, 1) == 1
        for m in range(1, 5):
            assert atom_count(q, m) == gaussian_count(q, m, 1)


def test_cover_count_examples():
    assert upper_covers_count(2, 3, 1) == 3
    assert upper_covers_count(3, 2, 0) == 4
    assert lower_covers_count(2, 3, 2) == 3
    assert lower_covers_count(3, 2, 2) == 4
    for q, m in ((2, 3), (3, 2), (5, 4)):
        assert upper_covers_count(q, m, m - 1) == 1
        assert lower_covers_count(q, m, 1) == 1
    with pytest.raises(DomainError):
        upper_covers_count(2, 3, 3)
    with pytest.raises(DomainError):
        lower_covers_count(2, 3, 0)


def test_enumeration_matches_gaussian_counts():
    for q, n, p in ((2, 1, 2), (3, 1, 3), (4, 2, 2), (5, 1, 5)):
        gf = make_field(p, n)
        assert gf.q == q
        for m in range(1, 5):
            for d in range(m + 1):
                assert len(enumerate_rref_bases(gf, m, d)) == gaussian_count(q, m, d)


def test_count_profile_shape():
    prof = count_profile(3, 2)
    assert prof.by_dimension == {0: 1, 1: 4, 2: 1}
    assert prof.atom_count == 4
    assert prof.upper_cover_counts == {0: 4, 1: 1}
    assert prof.lower_cover_counts == {1: 1, 2: 4}


# ---------------------------------------------------------------------------
# building
# ---------------------------------------------------------------------------

def test_build_examples(lattice_cache):
    lat = lattice_cache(3, m=2)
    assert lat.n == 6
    assert lat.by_dimension == {0: 1, 1: 4, 2: 1}
    chain = lattice_cache(5, m=1)
    assert chain.n == 2
    lat23 = lattice_cache(2, m=3)
    assert lat23.n == 16
    assert lat23.by_dimension == {0: 1, 1: 7, 2: 7, 3: 1}


def test_element_order_is_dimension_then_lex(lattice_cache):
    lat = lattice_cache(2, m=3)
    assert lat.elements[0].is_zero()
    assert lat.elements[-1].is_full()
    dims = lat.dims.tolist()
    assert dims == sorted(dims)
    for d in range(4):
        block = [e.rows for e in lat.elements if e.dim == d]
        flattened = [tuple(v for row in rows for v in row) for rows in block]
        assert flattened == sorted(flattened)


def test_build_cap():
    with pytest.raises(CapExceeded) as err:
        build_lattice(make_field(2), 3, cap=10)
    assert "16" in str(err.value)
    with pytest.raises(DomainError):
        build_lattice(make_field(2), 0)


def test_leq_and_bounds(lattice_cache):
    lat = lattice_cache(3, m=2)
    assert lat.leq[lat.bottom].all()
    assert lat.leq[:, lat.top].all()
    atoms = lat.atoms()
    assert len(atoms) == 4
    for a in atoms:
        for b in atoms:
            assert lat.leq[a, b] == (a == b)


def test_perp_is_involution_and_antitone(lattice_cache):
    for args in ((3, 1, 2), (2, 1, 3), (5, 1, 2), (3, 2, 2)):
        lat = lattice_cache(args[0], n=args[1], m=args[2])
        perp = lat.perp
        assert np.array_equal(perp[perp], np.arange(lat.n))
        permuted = lat.leq[np.ix_(perp, perp)]
        assert np.array_equal(lat.leq, permuted.T)


def test_covers_match_transitive_reduction(lattice_cache):
    for args in ((3, 1, 2), (2, 1, 3), (3, 1, 3)):
        lat = lattice_cache(args[0], n=args[1], m=args[2])
        assert np.array_equal(lat.covers, lat.covers_by_transitive_reduction())


def test_cover_counts_match_formulas(lattice_cache):
    for p, m in ((2, 3), (3, 2), (3, 3)):
        lat = lattice_cache(p, m=m)
        up = lat.covers.sum(axis=1)
        down = lat.covers.sum(axis=0)
        for i in range(lat.n):
            d = int(lat.dims[i])
            if d < m:
                assert up[i] == upper_covers_count(lat.field.q, m, d)
            else:
                assert up[i] == 0
            if d > 0:
                assert down[i] == lower_covers_count(lat.field.q, m, d)
            else:
                assert down[i] == 0


def test_join_meet_tables_match_order_oracles(lattice_cache):
    for args in ((3, 1, 2), (2, 1, 3), (5, 1, 2), (2, 1, 2)):
        lat = lattice_cache(args[0], n=args[1], m=args[2])
        assert np.array_equal(lat.join_table(), lat.order_join_table())
        assert np.array_equal(lat.meet_table(), lat.order_meet_table())


def test_index_of_roundtrip(lattice_cache):
    lat = lattice_cache(3, m=2)
    for i, el in enumerate(lat.elements):
        assert lat.index_of(el) == i
    assert lat.elements[2] in lat


# ---------------------------------------------------------------------------
# chain condition
# ---------------------------------------------------------------------------

def test_chain_condition(lattice_cache):
    assert chain_condition_check(lattice_cache(3, m=2)).holds
    assert chain_condition_check(lattice_cache(2, m=1)).holds
    verdict = chain_condition_check(lattice_cache(2, m=3))
    assert verdict.holds  # every maximal chain to the top has length 3


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def _edges(dot_text):
    return [ln for ln in dot_text.splitlines() if " -> " in ln and "dashed" not in ln]


def test_export_dot_counts(lattice_cache):
    dot32 = export_dot(lattice_cache(3, m=2))
    assert dot32.count("[label=") == 6
    assert len(_edges(dot32)) == 8
    dot_chain = export_dot(lattice_cache(5, m=1))
    assert dot_chain.count("[label=") == 2
    assert len(_edges(dot_chain)) == 1
    lat23 = lattice_cache(2, m=3)
    dot23 = export_dot(lat23)
    # cross-check the edge total against the closed-form cover counts
    expected = sum(
        gaussian_count(2, 3, d) * upper_covers_count(2, 3, d) for d in range(3)
    )
    assert expected == 35
    assert len(_edges(dot23)) == expected


def test_export_dot_options_and_determinism(lattice_cache):
    lat = lattice_cache(3, m=2)
    plain = export_dot(lat)
    assert plain == export_dot(lat)
    with_basis = export_dot(lat, show_basis=True)
    assert "(0,1)" in with_basis
    with_perp = export_dot(lat, perp_edges=True)
    dashed = [ln for ln in with_perp.splitlines() if "dashed" in ln]
    assert len(dashed) == 3  # 0-top pair plus two atom pairs
    assert "rank=same" in plain
    assert plain.startswith("digraph ")
