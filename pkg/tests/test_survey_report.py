import csv
import io
import json
from pathlib import Path

import jsonschema
import pytest

from conjquandle import report
from conjquandle.survey import (
    ABELIAN_PRODUCT_CAP,
    SurveyConfig,
    build_group,
    expand_sources,
    family_params,
    product_pairs,
    run_survey,
    survey_group,
)

DATA = Path(__file__).resolve().parent.parent / "data"


class TestSources:
    def test_family_params(self):
        assert family_params("symmetric", 500) == [2, 3, 4, 5]
        assert family_params("alternating", 500) == [3, 4, 5, 6]
        assert family_params("dihedral", 12) == [6, 8, 10, 12]
        assert family_params("cyclic", 3) == [1, 2, 3]

    def test_product_pairs(self):
        pairs = product_pairs(24)
        assert "dihedral:6*cyclic:2" not in pairs  # unordered, listed once
        assert "cyclic:2*dihedral:6" in pairs
        assert "symmetric:3*symmetric:4" not in pairs  # order 144 > 24
        assert not any("symmetric:2" in p or "alternating:3" in p for p in pairs)
        for p in product_pairs(200):
            a, b = p.split("*")
            if a.startswith("cyclic") and b.startswith("cyclic"):
                assert int(a[7:]) * int(b[7:]) <= ABELIAN_PRODUCT_CAP

    def test_expand(self):
        specs = expand_sources(["symmetric", "symmetric:3", "file:x.gens"], 24)
        assert specs == ["symmetric:2", "symmetric:3", "symmetric:4", "file:x.gens"]
        assert len(expand_sources(["default"], 60)) > 60

    def test_build_group(self):
        assert build_group("symmetric:3*cyclic:2").order() == 12
        assert build_group(f"file:{DATA / 'quaternion.table'}").order() == 8

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SurveyConfig(sources=[])
        with pytest.raises(ValueError):
            SurveyConfig(sources=["cyclic"], max_order=100, enumeration_bound=50)


class TestSurvey:
    def test_group_record(self):
        g = survey_group("symmetric:4", audit=True)
        assert g["error"] is None and g["order"] == 24
        assert sum(c["size"] for c in g["classes"]) == 24
        for c in g["classes"]:
            assert c["goodness"]["verdict"] == "good" and c["hayashi"]
            assert c["audit"]["issues"] == []
            assert c["audit"]["lmlt_cardinality"]["holds"]
            assert c["connected_criterion"] == c["connected_direct"]

    def test_errors_are_captured(self):
        g = survey_group("symmetric:9", bound=1000)
        assert g["error"]["kind"] == "bound_exceeded"
        g = survey_group("mathieu:11")
        assert g["error"]["kind"] == "UnknownFamily"

    def test_run(self):
        res = run_survey(SurveyConfig(sources=["dihedral", "alternating:4"], max_order=20,
                                      audit_mode=True, product_samples=5, seed=3))
        s = res["summary"]
        assert s["groups"] == 9 and s["groups_failed"] == 0
        assert s["good"] == s["classes"] == s["hayashi"]
        assert s["audit_failures"] == 0
        assert s["product_samples"] == 5 and s["product_failures"] == 0

    def test_samples_are_seeded(self):
        cfg = dict(sources=["dihedral", "symmetric"], max_order=24, product_samples=6)
        a = run_survey(SurveyConfig(seed=1, **cfg))["product_samples"]
        b = run_survey(SurveyConfig(seed=1, **cfg))["product_samples"]
        assert a == b

    def test_parallel_matches_serial(self):
        cfg = dict(sources=["dihedral"], max_order=30)
        a = run_survey(SurveyConfig(parallelism=1, **cfg))
        b = run_survey(SurveyConfig(parallelism=2, **cfg))
        assert a["groups"] == b["groups"]


class TestReport:
    def doc(self):
        res = run_survey(SurveyConfig(sources=["symmetric:4", f"file:{DATA / 'quaternion.table'}"],
                                      audit_mode=True, max_order=50))
        return report.document("survey", {"sources": ["x"]}, res["groups"], res["summary"],
                               extra={"product_samples": []})

    def test_schema_valid(self):
        doc = self.doc()
        report.validate(doc)
        round_trip = json.loads(report.dumps(doc))
        report.validate(round_trip)
        assert round_trip["schema"] == report.SCHEMA_ID

    def test_schema_rejects_bad_documents(self):
        doc = self.doc()
        doc["groups"][0]["classes"][0]["goodness"]["verdict"] = "maybe"
        with pytest.raises(jsonschema.ValidationError):
            report.validate(doc)
        doc = self.doc()
        del doc["coverage_note"]
        with pytest.raises(jsonschema.ValidationError):
            report.validate(doc)

    def test_csv(self):
        doc = self.doc()
        rows = list(csv.reader(io.StringIO(report.to_csv(doc["groups"]))))
        assert rows[0] == report.CSV_COLUMNS
        assert len(rows) == 1 + 5 + 5
        assert {r[0] for r in rows[1:]} == {"symmetric:4", "quaternion"}
        assert all(r[10] == "good" for r in rows[1:])
