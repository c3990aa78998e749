import pytest

import patchwork


def test_presets_build_to_expected_codes():
    expected = {"ellipse": "1", "harnack": "9 ∪ 1⟨1⟩", "gudkov": "5 ∪ 1⟨5⟩"}
    assert set(patchwork.preset_names()) == set(expected)
    for name, code in expected.items():
        report = patchwork.build(patchwork.preset(name))
        assert report["valid"]
        assert report["code"] == code


def test_harnack_degree_six_is_maximal():
    report = patchwork.build(patchwork.preset("harnack", 6))
    assert report["components"] == 11 == patchwork.harnack_bound(6)


def test_example_family():
    family = patchwork.patchwork_family(
        ["8x^3 - x^2 + 4y^2", "4y^2 - x^2 + 1"],
        {(0, 0): 2, (2, 0): 0, (0, 2): 0, (3, 0): 0},
    )
    assert family == "8x^3 - x^2 + 4y^2 + t^2"


def test_incompatible_parts_raise():
    with pytest.raises(ValueError):
        patchwork.patchwork_family(["x^2 + y^2", "2x^2 - 1"], {(0, 0): 1, (2, 0): 0, (0, 2): 0})


def test_pinwheel_is_infeasible():
    square = lambda x0, y0, x1, y1: [[x0, y0], [x1, y0], [x1, y1], [x0, y1]]
    doc = {
        "v": 1,
        "kind": "partition",
        "cells": [square(0, 0, 2, 1), square(2, 0, 3, 2), square(1, 2, 3, 3), square(0, 1, 1, 3), square(1, 1, 2, 2)],
    }
    report = patchwork.convexify(doc)
    assert report["status"] == "infeasible"
    assert report["certificate_verified"]


def test_verify_ellipse_stabilizes():
    report = patchwork.verify(patchwork.preset("ellipse"), t_start=1, t_steps=6, grid=128)
    assert report["stabilized"]
    assert report["code"] == report["combinatorial_code"] == "1"


def test_numeric_isotopy():
    circle = patchwork.numeric_isotopy("x^2 + y^2 - 1", 128)
    assert circle["code"] == "1"
    assert circle["affine_components"] == 1
    cubic = patchwork.numeric_isotopy("x^3 - y^3 + 1", 256)
    assert cubic["code"] == "J"
    assert cubic["unbounded_ends"] == 2


def test_asymptotes_approach():
    d = patchwork.asymptote_distances("8x^3 - x^2 + 4y^2", [5, 10, 20])
    assert d[0] > d[1] > d[2]
    assert d[2] < 0.05


def test_chart_of_circle():
    c = patchwork.chart("x^2 + y^2 - 1", mode="projective")
    assert c["topology"]["code"] == "1"


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        patchwork.build({"v": 1, "degree": 2})
    with pytest.raises(ValueError):
        patchwork.build("{not json")
    with pytest.raises(ValueError):
        patchwork.preset("nope")
