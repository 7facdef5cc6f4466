"""End-to-end tests of the srcx verbs against the golden files in fixtures/"""

import pytest

from tests.conftest import FIXTURES


def fixture(name: str) -> str:
    return str(FIXTURES / name)


def golden(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture(autouse=True)
def no_seed_override(monkeypatch):
    monkeypatch.delenv("SRCX_SEED", raising=False)


@pytest.mark.integration
class TestApply:
    def test_star_star_merge(self, cli):
        code, out, err = cli(
            "apply", "--functor", "ss", "--map", fixture("merge.map"), fixture("merge_source.cx")
        )
        assert (code, err) == (0, "")
        assert out == golden("merge_ss.cx")

    def test_star_upper_splits_fibers(self, cli):
        code, out, _ = cli(
            "apply", "--functor", "sa", "--map", fixture("fold.map"), fixture("empty_face_ab.cx")
        )
        assert code == 0
        assert out == golden("split_fibers.cx")

    def test_fiber_profile(self, cli, write_file):
        code, out, _ = cli(
            "apply",
            "--functor",
            "sa",
            "--map",
            fixture("profile_221.map"),
            fixture("empty_face_abc.cx"),
        )
        assert code == 0
        assert out == golden("fiber_profile.cx")

        result = write_file("profile.cx", out)
        code, out, _ = cli("ideal", result)
        assert code == 0
        assert out == golden("fiber_profile.ideal")

    def test_complex_on_wrong_side(self, cli):
        code, out, err = cli(
            "apply", "--functor", "ee", "--map", fixture("fold.map"), fixture("points_ab.cx")
        )
        assert code == 2
        assert out == ""
        assert err.startswith("error:")

    def test_interval(self, cli):
        code, out, _ = cli(
            "apply",
            "--functor",
            "se",
            "--interval",
            "--map",
            fixture("fold.map"),
            fixture("fold_source.cx"),
        )
        assert code == 0
        points = golden("points_ab.cx")
        assert out == f"# lower\n{points}# upper\n{points}"

    def test_empty_interval(self, cli):
        code, out, _ = cli(
            "apply",
            "--functor",
            "se",
            "--interval",
            "--map",
            fixture("fold.map"),
            fixture("split_fibers.cx"),
        )
        assert code == 0
        assert out == "interval: empty\n"

    def test_interval_of_pushforward_refused(self, cli):
        code, _, err = cli(
            "apply",
            "--functor",
            "ee",
            "--interval",
            "--map",
            fixture("fold.map"),
            fixture("fold_source.cx"),
        )
        assert code == 2
        assert "error:" in err


@pytest.mark.integration
class TestComplexVerbs:
    def test_ideal(self, cli):
        code, out, _ = cli("ideal", fixture("merge_ss.cx"))
        assert code == 0
        assert out == golden("merge_ss.ideal")

    def test_ideal_with_prefix(self, cli):
        code, out, _ = cli("ideal", "--prefix", "y", fixture("fold_source.cx"))
        assert code == 0
        assert out == "ring: 1 2 3\nI = (y_1*y_3, y_2*y_3)\n"

    def test_bad_prefix(self, cli):
        code, _, err = cli("ideal", "--prefix", "w", fixture("fold_source.cx"))
        assert code == 2
        assert "prefix" in err

    def test_star_label_has_no_ideal_text(self, cli, write_file):
        path = write_file("star.cx", "vertices: a* b\nfacets: {a*} {b}\n")
        code, out, err = cli("ideal", path)
        assert code == 2
        assert out == ""
        assert "cannot be written as an ideal" in err

        code, out, _ = cli("dual", path)
        assert code == 0
        assert out.startswith("vertices: a* b\n")

    def test_complex_of_ideal(self, cli):
        code, out, _ = cli("complex-of-ideal", fixture("fiber_profile.ideal"))
        assert code == 0
        assert out == golden("fiber_profile.cx")

    def test_ideal_round_trip(self, cli):
        _, out, _ = cli("complex-of-ideal", fixture("merge_ss.ideal"))
        assert out == golden("merge_ss.cx")

    def test_dual(self, cli):
        code, out, _ = cli("dual", fixture("boundary_12.cx"))
        assert code == 0
        assert out == "vertices: 1 2\nfacets: {}\n"

    def test_info(self, cli):
        code, out, _ = cli("info", fixture("fold_source.cx"))
        assert code == 0
        assert "facet count: 2\n" in out
        assert "cofacets: {1 3} {2 3}\n" in out

    def test_parse_error_is_located(self, cli, write_file):
        path = write_file("bad.cx", "vertices: a b\nfacets: {a c}\n")
        code, out, err = cli("dual", path)
        assert code == 2
        assert out == ""
        assert err == f"error: {path}: line 2, column 12: unknown label 'c'\n"

    def test_missing_file(self, cli, tmp_path):
        code, _, err = cli("info", tmp_path / "nothing.cx")
        assert code == 2
        assert "cannot read file" in err


@pytest.mark.integration
class TestProduct:
    @pytest.mark.parametrize("route", ["direct", "adjoint", "ideal"])
    def test_external_join(self, cli, route):
        code, out, _ = cli(
            "product",
            "--kind",
            "external_join",
            "--route",
            route,
            fixture("boundary_12.cx"),
            fixture("boundary_34.cx"),
        )
        assert code == 0
        assert out == golden("external_join.cx")

    @pytest.mark.parametrize("route", ["direct", "adjoint", "ideal"])
    def test_cone_union(self, cli, route):
        code, out, _ = cli(
            "product",
            "--kind",
            "cone-union",
            "--route",
            route,
            fixture("boundary_12.cx"),
            fixture("boundary_34.cx"),
        )
        assert code == 0
        assert out == golden("boundary_1234.cx")

    def test_cartesian_meet_lower(self, cli, write_file):
        point = write_file("point.cx", "vertices: a\nfacets: {a}\n")
        code, out, _ = cli(
            "product", "--kind", "cart_meet_lower", fixture("boundary_12.cx"), point
        )
        assert code == 0
        assert out == "vertices: (1,a) (2,a)\nfacets: {(1,a)} {(2,a)}\n"

    def test_shared_vertices_rejected(self, cli):
        code, _, err = cli(
            "product", "--kind", "or_union", fixture("boundary_12.cx"), fixture("boundary_12.cx")
        )
        assert code == 2
        assert "share labels" in err

    def test_unknown_kind(self, cli):
        code, _, _ = cli(
            "product", "--kind", "smash", fixture("boundary_12.cx"), fixture("boundary_34.cx")
        )
        assert code == 2


@pytest.mark.integration
class TestMorphism:
    def test_valid(self, cli):
        code, out, _ = cli(
            "morphism",
            "--category",
            "sc1",
            "--map",
            fixture("fold.map"),
            fixture("fold_source.cx"),
            fixture("points_ab.cx"),
        )
        assert code == 0
        assert out == "VALID category=sc1\ny_a -> x_1*x_2\ny_b -> x_3\n"

    def test_invalid_names_a_generator(self, cli):
        code, out, _ = cli(
            "morphism",
            "--category",
            "sc0",
            "--map",
            fixture("fold.map"),
            fixture("fold_source.cx"),
            fixture("empty_face_ab.cx"),
        )
        assert code == 1
        assert out == "INVALID reason=y_a\ny_a -> x_1 + x_2\ny_b -> x_3\n"

    def test_enumeration(self, cli, write_file):
        left = write_file("left.cx", "vertices: 1 2\nfacets: {1 2}\n")
        right = write_file("right.cx", "vertices: a b\nfacets: {a b}\n")
        code, out, _ = cli("morphism", "--category", "sc0", left, right)
        assert code == 0
        assert out.startswith("morphisms: 4\n")
        assert "map: 1->a 2->b\n" in out


@pytest.mark.integration
class TestCheck:
    def test_pass(self, cli):
        code, out, _ = cli("check", "--trials", "5", "--max-vertices", "3", "--seed", "1")
        assert code == 0
        assert out.startswith("seed: 1\ntrials: 5\n")
        assert out.endswith("failures: 0\nPASS\n")

    def test_environment_seed_wins(self, cli, monkeypatch):
        monkeypatch.setenv("SRCX_SEED", "99")
        code, out, _ = cli("check", "--trials", "2", "--max-vertices", "2", "--seed", "1")
        assert code == 0
        assert out.startswith("seed: 99\n")

    def test_malformed_environment_seed_ignored(self, cli, monkeypatch):
        monkeypatch.setenv("SRCX_SEED", "soon")
        _, out, _ = cli("check", "--trials", "1", "--max-vertices", "2", "--seed", "4")
        assert out.startswith("seed: 4\n")

    def test_same_seed_same_report(self, cli):
        argv = ("check", "--trials", "4", "--max-vertices", "3", "--seed", "12")
        assert cli(*argv) == cli(*argv)

    def test_too_many_vertices(self, cli):
        code, out, err = cli("check", "--trials", "1", "--max-vertices", "9")
        assert code == 2
        assert out == ""
        assert "max_vertices" in err


class TestUsage:
    def test_unknown_verb(self, cli):
        code, _, err = cli("frobnicate")
        assert code == 2
        assert err.startswith("error: srcx:")

    def test_missing_argument(self, cli):
        code, _, _ = cli("apply", "--functor", "ss", fixture("merge_source.cx"))
        assert code == 2

    def test_help(self, cli, capsys):
        code, _, _ = cli("--help")
        assert code == 0
        assert "complex-of-ideal" in capsys.readouterr().out
