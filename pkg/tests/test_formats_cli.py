import json
from fractions import Fraction as F

import pytest

from polypierce import Family, GenConfig, Point, generate
from polypierce.cli import main
from polypierce.render import render_svg
from polypierce.formats import (
    InvalidInstance,
    family_from_dict,
    family_to_dict,
    load_family,
    points_from_list,
    points_to_list,
    save_family,
)
from conftest import translate_of


class TestFormats:
    def test_round_trip_identity(self, three_translate_family):
        fam = three_translate_family
        back = family_from_dict(family_to_dict(fam))
        assert back.template == fam.template
        assert [m.offsets for m in back.members] == [m.offsets for m in fam.members]

    def test_round_trip_generated(self):
        cfg = GenConfig(seed=12, n=5, members=6, spread=F(2),
                        class_mode="theorem2", repair="translate_repair")
        fam = generate(cfg)
        back = family_from_dict(family_to_dict(fam))
        assert family_to_dict(back) == family_to_dict(fam)

    def test_file_round_trip(self, three_translate_family, tmp_path):
        path = str(tmp_path / "fam.json")
        save_family(three_translate_family, path)
        back = load_family(path)
        assert family_to_dict(back) == family_to_dict(three_translate_family)

    def test_points_round_trip(self):
        pts = [Point(F(1, 3), F(-7, 2)), Point(0, 5)]
        assert points_from_list(points_to_list(pts)) == pts

    def test_rejects_bad_version(self, three_translate_family):
        data = family_to_dict(three_translate_family)
        data["version"] = 99
        with pytest.raises(InvalidInstance):
            family_from_dict(data)

    def test_rejects_bad_rational(self, three_translate_family):
        data = family_to_dict(three_translate_family)
        data["members"][0]["offsets"]["0"] = "0.5x"
        with pytest.raises(InvalidInstance):
            family_from_dict(data)

    def test_rejects_out_of_range_index(self, three_translate_family):
        data = family_to_dict(three_translate_family)
        data["members"][0]["offsets"]["7"] = "0"
        with pytest.raises(InvalidInstance):
            family_from_dict(data)

    def test_rejects_empty_member(self, unit_triangle):
        fam = Family(unit_triangle, [translate_of(unit_triangle, Point(0, 0))])
        data = family_to_dict(fam)
        data["members"][0]["offsets"]["0"] = "-5"  # x + y <= -5 kills it
        with pytest.raises(InvalidInstance):
            family_from_dict(data)

    def test_duplicate_direction_collapses_to_tightest(self, unit_triangle):
        fam = Family(unit_triangle, [translate_of(unit_triangle, Point(0, 0))])
        data = family_to_dict(fam)
        # JSON keys are unique, so simulate the min() rule with the parser's
        # own path: larger offset stays only if no smaller one is present.
        data["members"][0]["offsets"]["0"] = "2"
        back = family_from_dict(data)
        assert back.members[0].offsets[0] == 2


@pytest.fixture
def instance_file(three_translate_family, tmp_path):
    path = str(tmp_path / "inst.json")
    save_family(three_translate_family, path)
    return path


class TestCli:
    def test_generate_then_check(self, tmp_path):
        out = str(tmp_path / "gen.json")
        rc = main(["generate", "--seed", "5", "--n", "4", "--members", "5",
                   "--spread", "2", "--class", "theorem2", "--out", out])
        assert rc == 0
        assert main(["check", out]) == 0

    def test_check_reports_disjoint_pair(self, unit_triangle, tmp_path):
        fam = Family(
            unit_triangle,
            [
                translate_of(unit_triangle, Point(0, 0)),
                translate_of(unit_triangle, Point(5, 5)),
            ],
        )
        path = str(tmp_path / "bad.json")
        save_family(fam, path)
        assert main(["check", path]) == 2

    def test_check_rejects_malformed_json(self, tmp_path):
        path = str(tmp_path / "junk.json")
        with open(path, "w") as fh:
            json.dump({"version": 1, "template": {}}, fh)
        assert main(["check", path]) == 2

    def test_pierce_t1(self, instance_file, tmp_path):
        out = str(tmp_path / "res.json")
        rc = main(["pierce", instance_file, "--algo", "t1", "--out", out])
        assert rc == 0
        with open(out) as fh:
            data = json.load(fh)
        assert data["algorithm"] == "t1" and data["verified"] is True
        assert len(data["points"]) == 3 and data["bound"] == 3

    def test_pierce_t2_wrong_class(self, instance_file):
        assert main(["pierce", instance_file, "--algo", "t2"]) == 2

    def test_pierce_t2_special(self, special_three_translate, tmp_path):
        path = str(tmp_path / "sp.json")
        save_family(special_three_translate, path)
        out = str(tmp_path / "res.json")
        assert main(["pierce", path, "--algo", "t2", "--out", out]) == 0
        with open(out) as fh:
            assert json.load(fh)["points"] == [
                ["-1/2", "3/5"], ["-3/5", "1/2"], ["-1/2", "1/2"]
            ]

    def test_exact(self, instance_file, tmp_path):
        out = str(tmp_path / "opt.json")
        assert main(["exact", instance_file, "--out", out]) == 0
        with open(out) as fh:
            assert json.load(fh)["optimum"] == 2

    def test_exact_too_large(self, instance_file):
        assert main(["exact", instance_file, "--limit", "2"]) == 2

    def test_verify_good_and_bad(self, instance_file, tmp_path):
        good = str(tmp_path / "good.json")
        bad = str(tmp_path / "bad.json")
        with open(good, "w") as fh:
            json.dump({"points": [["0", "0"], ["3/5", "0"], ["0", "3/5"]]}, fh)
        with open(bad, "w") as fh:
            json.dump({"points": [["0", "0"]]}, fh)
        assert main(["verify", instance_file, "--points", good]) == 0
        assert main(["verify", instance_file, "--points", bad]) == 1

    def test_render(self, instance_file, tmp_path):
        svg = str(tmp_path / "out.svg")
        assert main(["render", instance_file, "--svg", svg]) == 0
        with open(svg) as fh:
            body = fh.read()
        assert body.startswith("<svg") and body.count("<polygon") >= 3

    def test_render_deterministic(self, three_translate_family):
        pts = [Point(F(1, 2), F(1, 2))]
        assert render_svg(three_translate_family, pts) == render_svg(
            three_translate_family, pts
        )

    def test_bench_csv(self, capsys):
        rc = main(["bench", "--seeds", "1..3", "--n", "4", "--members", "4",
                   "--spread", "2", "--class", "theorem2", "--algo", "t2"])
        assert rc == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].split(",")[:3] == ["seed", "algo", "n"]
        assert len(lines) == 4
