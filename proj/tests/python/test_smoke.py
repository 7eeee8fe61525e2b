import json

import pytest

import confred


def test_validate_fano():
    p = confred.validate(confred.named("fano"))
    assert (p.v, p.b, p.r, p.k, p.d) == (7, 7, 3, 3, 7)
    assert p.label == "7_3"


def test_cfg_round_trip():
    s = confred.named("desargues")
    assert confred.parse_cfg(confred.to_cfg(s)) == s


def test_invalid_structure_raises():
    bad = confred.IncidenceStructure(4, [[0, 1, 2], [0, 1, 3]])
    with pytest.raises(confred.ValidationError):
        confred.validate(bad)


def test_boben_irreducible():
    assert confred.is_irreducible(confred.named("pappus"), "boben")
    assert not confred.is_irreducible(confred.named("moebius_kantor"), "boben")


def test_reduce_mk_to_fano():
    mk = confred.named("moebius_kantor")
    (w,) = confred.find_reductions(mk, "boben", limit=1)
    assert confred.are_isomorphic(confred.apply_reduction(mk, w), confred.named("fano"))


def test_augment_round_trip():
    fano = confred.named("fano")
    for w in confred.find_augmentations(fano, "balanced", limit=5):
        bigger = confred.apply_augmentation(fano, w)
        assert confred.validate(bigger).d == 8
        back = confred.apply_reduction(bigger, confred.inverse_reduction(fano, w))
        assert back == fano


def test_general_augmentation_affine():
    ag = confred.affine_plane(3)
    (w,) = confred.find_augmentations(ag, "general", limit=1)
    bigger = confred.apply_augmentation(ag, w)
    assert confred.validate(bigger).label == "(12_4,16_3)"


def test_not_augmentable():
    assert confred.find_augmentations(confred.projective_plane(3), "balanced", limit=1) == []


def test_analyze_json():
    report = json.loads(confred.analyze(confred.named("fano")))
    assert report["criteria"]["small_deficiency"] == "irreducible"
    assert report["search"]["boben_irreducible"] is True
    assert report["consistent"] is True


def test_census_counts():
    assert confred.census_counts(3, 3, 9) == {7: 1, 8: 1, 9: 3}
