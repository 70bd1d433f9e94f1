import pytest

import verba


def test_word_parsing():
    assert verba.canonical_word("[x,y]") == "x1^-1x2^-1x1x2"
    assert verba.is_commutator_word("[x,y]")
    assert not verba.is_commutator_word("x^2[y,z]")
    with pytest.raises(verba.VerbaError):
        verba.canonical_word("[x,")


def test_group_info():
    info = verba.group_info("C3:Q8", ["delta2"])
    assert info["order"] == 24
    assert info["derived_length"] == 3
    (word,) = info["words"].values()
    assert word["w_maximal"] and word["index"] == 12


def test_verbal_and_maximal():
    assert verba.verbal("S3", "[x,y]")["order"] == 3
    report = verba.maximal("Q8", "[x,y]")
    assert not report["is_w_maximal"]
    assert report["witness"]["order"] == 4


def test_interchange_and_shapes():
    assert verba.interchange("D4", "[x,y]")["interchangeable"]
    assert verba.classify_hdm("S3")["shape"] == "scalar_extension"
    assert verba.classify_hdm("C2^3")["shape"] == "elementary_abelian"
    assert verba.classify_hdm("C4")["shape"] == "not_hdm"


def test_precedes():
    assert verba.precedes("A4", "C3:Q8", "delta2")["answer"] == "yes"


def test_atlas_is_reproducible():
    a = verba.atlas(max_order=12, words=["x^2"])
    b = verba.atlas(max_order=12, words=["x^2"], jobs=2)
    assert a == b
    assert len({r["hash"] for r in a}) == len(a)


def test_verify_subset():
    (result,) = verba.verify(only=["quaternion-example"])
    assert result["passed"]
