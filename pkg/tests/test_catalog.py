import pytest

from semap import (
    FaceSequence,
    catalog,
    catalog_map,
    is_vertex_transitive,
    semi_equivelar_type,
    surface_profile,
    validate,
)

EXPECTED = {
    "tetrahedron": (2, True, "(3^3)", True),
    "cube": (2, True, "(4^3)", True),
    "rp2_6": (1, False, "(3^5)", True),
    "K1": (-1, False, "(3^5, 4)", False),
    "K2": (-1, False, "(3^5, 4)", False),
    "K3": (-1, False, "(3^5, 4)", False),
    "T1": (-2, True, "(3^5, 4)", False),
    "T2": (-2, True, "(3^5, 4)", False),
    "T3": (-2, True, "(3^5, 4)", False),
    "N": (-2, False, "(3^5, 4)", False),
}


def test_catalog_is_complete():
    assert {e.name for e in catalog()} == set(EXPECTED)


def test_every_entry_recomputes_to_its_expected_profile():
    for entry in catalog():
        chi, orientable, type_string, transitive = EXPECTED[entry.name]
        assert validate(entry.map).ok, entry.name
        p = surface_profile(entry.map)
        assert p.euler_characteristic == chi, entry.name
        assert p.orientable == orientable, entry.name
        assert semi_equivelar_type(entry.map) == FaceSequence.from_string(type_string)
        assert is_vertex_transitive(entry.map) == transitive, entry.name


def test_stored_expectations_match_this_table():
    for entry in catalog():
        chi, orientable, type_string, transitive = EXPECTED[entry.name]
        x = entry.expected
        assert (x.euler_characteristic, x.orientable, x.vertex_transitive) == (
            chi, orientable, transitive)
        assert FaceSequence.from_string(x.type_string) == FaceSequence.from_string(type_string)


def test_lookup_is_case_insensitive():
    assert catalog_map("k1") == catalog_map("K1")
    with pytest.raises(KeyError):
        catalog_map("K9")


def test_correction_notes_are_recorded():
    notes = {e.name: e.note for e in catalog()}
    assert "dedup" in notes["N"] or "repeat" in notes["N"]
    assert "recomputed" in notes["T3"]
