import re

import pytest

from symmetria import oeis


@pytest.mark.parametrize("seq_id", oeis.FIXTURE_IDS)
def test_fixture_files_are_well_formed(seq_id):
    fx = oeis.load_fixture(seq_id)
    oeis.validate_fixture(fx)
    assert fx["id"] == seq_id and re.fullmatch(r"A\d{6}", seq_id)
    assert len(fx["terms"]) >= 12
    assert fx["source"] in ("paper-table", "self-generated", "oeis-bfile")


@pytest.mark.parametrize("seq_id", oeis.FIXTURE_IDS)
def test_fixture_matches_computation(seq_id):
    report = oeis.check_fixture(seq_id)
    assert report["status"] == "ok", report
    assert report["terms"] >= 10


def test_vendored_files_equal_generator_output():
    generated = oeis.generate_fixtures()
    for seq_id in oeis.FIXTURE_IDS:
        assert oeis.load_fixture(seq_id) == generated[seq_id]


def test_validation_rejects_bad_fixtures():
    with pytest.raises(ValueError):
        oeis.validate_fixture({"id": "X1", "offset": 0, "terms": [1] * 12, "source": "paper-table"})
    with pytest.raises(ValueError):
        oeis.validate_fixture({"id": "A000001", "offset": 0, "terms": [1], "source": "paper-table"})
