import json
import math

import pytest

import ynoid


def test_y_catenoid_index():
    report = ynoid.compute_index(ynoid.build_y_catenoid())
    assert report.total_index == 1
    assert report.total_nullity == 3
    assert report.tag == ynoid.SurfaceTag.Y_CATENOID


def test_generic_member_index():
    report = ynoid.compute_index(ynoid.build_ynoid(math.pi / 4))
    assert report.total_index == 2
    assert report.total_nullity == 5
    assert report.fixed_boundary == [1, 0, 1]


def test_oracle_matches_closed_form():
    offset = math.log(math.sqrt(3.0))
    closed = ynoid.catenoid_steklov(offset, 1.0, 1)
    numeric = ynoid.catenoid_dtn(offset, 1.0, 1)
    assert closed is not None
    assert abs(numeric - closed) < 1e-9 * abs(closed)


def test_kernel_face_reported_as_none():
    table = ynoid.spectrum_table(ynoid.build_ynoid(math.pi / 6), 0)
    assert table[0].faces[2].delta is None


def test_json_report_parses():
    text = ynoid.index_report_json(ynoid.compute_index(ynoid.build_y_catenoid()))
    doc = json.loads(text)
    assert doc["schema_version"] == 1
    assert doc["total_index"] == 1
    assert doc["total_nullity"] == 3


def test_invalid_alpha_raises():
    with pytest.raises(ValueError):
        ynoid.build_ynoid(2.0)
