import pytest

from finlat import (
    FVector,
    check_all,
    check_antitone_involution,
    check_atomistic,
    check_complementation,
    check_modular,
    check_orthomodular,
    check_paraorthomodular,
    make_field,
    orthocomplement,
    recognize_Mn,
    recognize_MOn,
    rref,
)


def test_modular_holds(lattice_cache):
    assert check_modular(lattice_cache(2, m=2)).holds
    assert check_modular(lattice_cache(2, m=1)).holds
    # 16 elements, all 4096 triples scanned
    assert check_modular(lattice_cache(2, m=3)).holds


def test_complementation_verdicts(lattice_cache):
    assert check_complementation(lattice_cache(3, m=2)).holds
    v22 = check_complementation(lattice_cache(2, m=2))
    assert not v22.holds
    lat22 = lattice_cache(2, m=2)
    witness = lat22.elements[v22.witness[0]]
    assert witness.rows == ((1, 1),)
    assert orthocomplement(witness) == witness
    v23 = check_complementation(lattice_cache(2, m=3))
    assert not v23.holds
    lat23 = lattice_cache(2, m=3)
    witness = lat23.elements[v23.witness[0]]
    assert witness.rows == ((0, 1, 1),)


def test_orthomodular_verdicts(lattice_cache):
    assert check_orthomodular(lattice_cache(3, m=2)).holds
    assert not check_orthomodular(lattice_cache(5, m=2)).holds
    assert check_orthomodular(lattice_cache(2, m=1)).holds


def test_orthomodular_witness_is_first_self_orthogonal_atom(lattice_cache):
    lat = lattice_cache(5, m=2)
    verdict = check_orthomodular(lat)
    witness = lat.elements[verdict.witness[0]]
    assert witness.rows == ((1, 2),)
    assert orthocomplement(witness) == witness
    # the span of (1, 3) is another self-orthogonal atom in the same lattice
    gf5 = make_field(5)
    u = rref([FVector(gf5, (1, 3))])
    assert orthocomplement(u) == u


def test_paraorthomodular_holds_even_where_orthomodularity_fails(lattice_cache):
    assert check_paraorthomodular(lattice_cache(2, m=2)).holds
    assert check_paraorthomodular(lattice_cache(2, m=1)).holds
    assert check_paraorthomodular(lattice_cache(2, m=3)).holds


def test_atomistic(lattice_cache):
    assert check_atomistic(lattice_cache(3, m=2)).holds
    assert check_atomistic(lattice_cache(2, m=1)).holds
    assert check_atomistic(lattice_cache(2, m=3)).holds


def test_antitone_involution(lattice_cache):
    for p, m in ((2, 2), (3, 2), (5, 2), (2, 3), (3, 3)):
        assert check_antitone_involution(lattice_cache(p, m=m)).holds


def test_recognize_mn(lattice_cache):
    assert recognize_Mn(lattice_cache(3, m=2)) == 4
    assert recognize_Mn(lattice_cache(2, m=3)) is None
    assert recognize_Mn(lattice_cache(2, n=2, m=2)) == 5
    assert recognize_Mn(lattice_cache(2, m=1)) is None


def test_recognize_mon(lattice_cache):
    assert recognize_MOn(lattice_cache(3, m=2)) == 2
    assert recognize_MOn(lattice_cache(2, m=2)) is None  # a self-orthogonal atom
    assert recognize_MOn(lattice_cache(7, m=2)) == 4


def test_check_all_report_structure(lattice_cache):
    lat = lattice_cache(5, m=2)
    report = check_all(lat)
    assert report.q == 5 and report.m == 2 and report.modulus == (0, 1)
    assert set(report.verdicts) == {
        "modular",
        "atomistic",
        "chain_condition",
        "antitone_involution",
        "complementation",
        "orthomodular",
        "paraorthomodular",
    }
    assert report.verdicts["modular"].holds
    assert not report.verdicts["orthomodular"].holds
    d = report.to_dict(lat)
    assert d["version"] == 1
    assert d["laws"]["orthomodular"]["witness_bases"] == [[[1, 2]]]


def test_complementation_agrees_with_orthomodularity(lattice_cache):
    # for these modular lattices the two verdicts coincide
    for p, n, m in ((2, 1, 2), (3, 1, 2), (5, 1, 2), (2, 1, 3), (3, 2, 2), (2, 2, 2)):
        lat = lattice_cache(p, n=n, m=m)
        assert check_complementation(lat).holds == check_orthomodular(lat).holds


def test_orthomodular_law_catches_involution_defects(lattice_cache):
    # a valid lattice whose involution is replaced by the identity map must
    # fail the complementation prerequisite, not pass silently
    import numpy as np

    lat = lattice_cache(3, m=2)

    class Broken:
        n = lat.n
        leq = lat.leq
        perp = np.arange(lat.n)
        bottom = lat.bottom
        top = lat.top
        join_table = staticmethod(lat.join_table)
        meet_table = staticmethod(lat.meet_table)

    assert not check_orthomodular(Broken()).holds
