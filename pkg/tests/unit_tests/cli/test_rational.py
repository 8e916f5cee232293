"""Tests for `tits-alt rational` and `tits-alt patches`."""


class TestRational:
    def test_flat_fan_is_extrational(self, run_json, complex_file):
        result, payload = run_json("rational", complex_file("hexagonal_fan"))

        assert result.exit_code == 0
        assert payload["data"]["rational"]["pass"] is True
        assert payload["data"]["extrational"]["pass"] is True

    def test_irrational_strand_exits_1(self, run_json, complex_file):
        result, payload = run_json("rational", complex_file("alpha_theta"))

        assert result.exit_code == 1
        data = payload["error"]["data"]
        assert data["extrational"] is None
        (witness,) = data["rational"]["witnesses"]
        assert witness["vertex"] == "p"

    def test_cone_point_is_rational_but_not_extrational(self, run_json, complex_file):
        path = complex_file("heptagonal_fan")

        result, payload = run_json("rational", path)
        assert result.exit_code == 0
        assert payload["data"]["extrational"]["pass"] is False

        result, payload = run_json("rational", path, "--require-extrational")
        assert result.exit_code == 1
        assert payload["error"]["message"] == "complex is rational but not extrational"


class TestPatches:
    def test_sheared_annulus(self, run_json, complex_file):
        result, payload = run_json("patches", complex_file("sheared_annulus"))

        assert result.exit_code == 0
        data = payload["data"]
        assert data["extrational"] is True
        (patch,) = data["patches"]
        assert patch["holonomy"]["verdict"] == "trivial"
        assert (patch["shear"]["q"], patch["shear"]["q_prime"]) == (3, 6)

    def test_no_shear_without_extrationality(self, run_json, complex_file):
        _, payload = run_json("patches", complex_file("cone_annulus"))
        assert payload["data"]["extrational"] is False
        assert payload["data"]["patches"][0]["shear"] is None

    def test_single_patch(self, run_json, complex_file):
        _, payload = run_json("patches", complex_file("theta_circle"), "--patch", "1")
        (patch,) = payload["data"]["patches"]
        assert patch["id"] == 1

    def test_unknown_patch(self, run_json, complex_file):
        result, payload = run_json("patches", complex_file("theta_circle"), "--patch", "9")
        assert result.exit_code == 2
        assert payload["error"]["data"] == {"patches": 3}

    def test_svg(self, run_json, complex_file, tmp_path):
        target = tmp_path / "patch.svg"
        result, _ = run_json("patches", complex_file("unit_square"), "--svg", target)
        assert result.exit_code == 0
        assert "<svg" in target.read_text(encoding="utf-8")
