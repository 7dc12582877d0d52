"""Tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from hyperdepth import __version__
from hyperdepth.cli.main import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VIOLATION, cli
from hyperdepth.utils.formats import parse_text


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("a b\nb c\nc d\n")
    return path


def run_json(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_OK, result.output
    return json.loads(result.output)


def test_version(runner):
    """Test --version prints the package version."""
    result = runner.invoke(cli, ["--version"])

    assert result.exit_code == 0
    assert __version__ in result.output


def test_forest_check_fixtures(runner):
    """Test verdicts on the two small example hypergraphs."""
    data = run_json(runner, ["forest-check", "small_hypertree"])
    assert data["command"] == "forest-check"
    assert data["result"]["verdict"] == "forest"
    assert data["result"]["tree"] is True
    assert len(data["input_digest"]) == 64

    data = run_json(runner, ["forest-check", "no_leaf_triangles"])
    assert data["result"]["verdict"] == "not_forest"
    assert data["result"]["tree"] is False
    assert data["result"]["oracle"] is False


def test_invariants(runner):
    """Test both invariants and their witnesses on the 12-vertex tree."""
    result = run_json(runner, ["invariants", "tree12_flat"])["result"]

    assert result["epsilon"] == 3
    assert len(result["epsilon_witness"]) == 3
    assert result["alpha2"] == 3
    assert len(result["alpha2_witness_centers"]) == 3


def test_depth_from_file(runner, p4_file):
    """Test depth of a path read from disk."""
    result = run_json(runner, ["depth", str(p4_file)])["result"]

    assert result == {"n": 4, "power": 1, "pd": 2, "depth": 2}


def test_depth_with_betti(runner, p4_file):
    """Test the Betti numbers are included on request."""
    result = runner.invoke(cli, ["depth", str(p4_file), "--betti"])

    assert result.exit_code == EXIT_OK
    assert "Betti table" in result.output


def test_depth_from_stdin(runner):
    """Test '-' reads the graph from standard input."""
    result = runner.invoke(cli, ["depth", "-", "--power", "3"], input="x y\n")

    assert result.exit_code == EXIT_OK
    assert json.loads(result.output)["result"]["depth"] == 1


def test_depth_function_csv(runner, p4_file):
    """Test CSV rows with and without a header."""
    result = runner.invoke(cli, ["depth-function", str(p4_file), "--max-power", "1", "--csv"])
    assert result.exit_code == EXIT_OK
    assert result.output == "1,2\n"

    result = runner.invoke(cli, ["depth-function", "tree12_flat", "-N", "1", "--csv", "--header"])
    assert result.output == "s,depth\n1,3\n"


@pytest.mark.slow
def test_depth_function_example_tree(runner):
    """Test the depth function of the 12-vertex tree up to s = 3."""
    result = runner.invoke(cli, ["depth-function", "fixtures/ex34", "--max-power", "3", "--csv"])

    assert result.exit_code == EXIT_OK
    assert result.output == "1,4\n2,3\n3,2\n"


def test_depth_function_json_uses_field(runner, p4_file):
    """Test the global field option reaches the report."""
    data = run_json(runner, ["--field", "p:32003", "depth-function", str(p4_file), "-N", "1"])

    assert data["field"] == "p:32003"
    assert data["result"]["depths"] == [2]


def test_verify_bound(runner, p4_file):
    """Test a bound that holds exits 0."""
    data = run_json(runner, ["verify-bound", str(p4_file), "--invariant", "alpha2", "-N", "1"])

    assert data["result"]["all_hold"] is True
    assert data["result"]["value"] == 2


def test_certificate_to_file(runner, tmp_path):
    """Test writing a certificate and its summary."""
    out = tmp_path / "cert.json"
    data = run_json(runner, ["certificate", "small_hypertree", "--power", "2", "--out", str(out)])

    assert data["result"]["all_hold"] is True
    cert = json.loads(out.read_text())
    assert cert["nodes"] == data["result"]["nodes"]
    assert cert["root"]["s"] == 2


def test_certificate_with_held_out_edge(runner, p4_file):
    """Test --h-edge moves an edge into H."""
    result = run_json(runner, ["certificate", str(p4_file), "--h-edge", "a b", "--seed", "3"])["result"]

    assert result["certificate"]["root"]["H_edges"] == [["a", "b"]]


def test_gen_round_trips(runner):
    """Test generated text parses back."""
    result = runner.invoke(cli, ["gen", "--kind", "hypertree", "--n", "12", "--edges", "4", "--seed", "1"])

    assert result.exit_code == EXIT_OK
    G = parse_text(result.output)
    assert len(G.edges) == 4


def test_input_errors_exit_2(runner, tmp_path):
    """Test unreadable inputs and bad options exit with status 2."""
    result = runner.invoke(cli, ["depth", "no-such-graph"])
    assert result.exit_code == EXIT_INPUT_ERROR
    assert "Error" in result.output

    bad = tmp_path / "bad.txt"
    bad.write_text("a b\na\n")
    assert runner.invoke(cli, ["forest-check", str(bad)]).exit_code == EXIT_INPUT_ERROR

    assert runner.invoke(cli, ["--field", "p:4", "depth", "tree12_flat"]).exit_code == EXIT_INPUT_ERROR
    assert runner.invoke(cli, ["verify-bound", "no_leaf_triangles"]).exit_code == EXIT_INPUT_ERROR


def test_gen_invalid_config_exit_2(runner):
    """Test generator parameter errors."""
    result = runner.invoke(cli, ["gen", "--n", "1"])

    assert result.exit_code == EXIT_INPUT_ERROR


def test_violation_exit_code_is_distinct():
    """Test the documented exit codes."""
    assert (EXIT_OK, EXIT_VIOLATION, EXIT_INPUT_ERROR) == (0, 1, 2)


@pytest.mark.slow
def test_selftest(runner):
    """Test the bundled examples reproduce."""
    result = runner.invoke(cli, ["selftest"])

    assert result.exit_code == EXIT_OK, result.output


@pytest.fixture
def projective_plane_file(tmp_path):
    """Stanley-Reisner non-faces of the six-vertex projective plane."""
    path = tmp_path / "rp2.txt"
    path.write_text("\n".join(" ".join(t) for t in
                              ["124", "125", "135", "136", "146", "234", "236", "256", "345", "456"]) + "\n")
    return path


@pytest.mark.parametrize("placement", ["group", "subcommand"])
def test_field_option_placements(runner, p4_file, placement):
    """Test --field is accepted before and after the subcommand."""
    if placement == "group":
        args = ["--field", "p:7", "depth", str(p4_file)]
    else:
        args = ["depth", str(p4_file), "--power", "1", "--field", "p:7"]
    data = run_json(runner, args)

    assert data["field"] == "p:7"
    assert data["result"]["depth"] == 2


def test_subcommand_field_overrides_group(runner, p4_file):
    """Test the subcommand value wins over the group value."""
    data = run_json(runner, ["--field", "q", "verify-bound", str(p4_file), "-N", "1", "--field", "p:7"])

    assert data["field"] == "p:7"
    assert data["result"]["all_hold"] is True


@pytest.mark.parametrize("placement", ["group", "subcommand"])
def test_jobs_option_placements(runner, p4_file, placement):
    """Test --jobs is accepted before and after the subcommand."""
    if placement == "group":
        args = ["--jobs", "2", "depth-function", str(p4_file), "--max-power", "2"]
    else:
        args = ["depth-function", str(p4_file), "--max-power", "2", "--jobs", "2"]
    data = run_json(runner, args)

    assert data["jobs"] == 2
    assert data["result"]["depths"] == run_json(runner, ["depth-function", str(p4_file), "-N", "2"])["result"]["depths"]


def test_subcommand_engine_options_are_validated(runner, p4_file):
    """Test bad subcommand-level values exit 2."""
    assert runner.invoke(cli, ["depth", str(p4_file), "--field", "p:4"]).exit_code == EXIT_INPUT_ERROR
    assert runner.invoke(cli, ["certificate", str(p4_file), "--jobs", "0"]).exit_code == EXIT_INPUT_ERROR


def test_published_fixture_paths(runner):
    """Test fixtures/<short name> resolves to the bundled examples."""
    result = run_json(runner, ["invariants", "fixtures/ex35"])["result"]
    assert (result["epsilon"], result["alpha2"]) == (3, 3)

    result = runner.invoke(cli, ["depth-function", "fixtures/ex34", "--max-power", "1", "--csv"])
    assert result.exit_code == EXIT_OK
    assert result.output == "1,4\n"

    assert run_json(runner, ["forest-check", "fixtures/ex22"])["result"]["verdict"] == "not_forest"
    assert run_json(runner, ["forest-check", "ex22_right"])["result"]["tree"] is True
    assert runner.invoke(cli, ["invariants", "fixtures/ex99"]).exit_code == EXIT_INPUT_ERROR


def test_report_records_arguments(runner, p4_file):
    """Test a saved report carries what is needed to rerun it."""
    data = run_json(runner, ["--jobs", "1", "depth", str(p4_file), "--power", "2"])

    assert data["command"] == "depth"
    assert data["arguments"]["source"] == str(p4_file)
    assert data["arguments"]["power"] == 2
    assert data["arguments"]["jobs"] == 1
    assert data["arguments"]["show_betti"] is False


def test_cross_check_mismatch_exits_1(runner, tmp_path, projective_plane_file):
    """Test a characteristic-dependent ideal fails the cross-check."""
    config = tmp_path / "hd.json"
    config.write_text(json.dumps({"prime_check": 2}))

    result = runner.invoke(cli, ["--config", str(config), "--cross-check", "depth", str(projective_plane_file)])
    assert result.exit_code == EXIT_VIOLATION
    assert "Cross-check failed" in result.output

    data = run_json(runner, ["--cross-check", "depth", str(projective_plane_file)])
    assert data["result"]["depth"] == 3


def test_experiment_command(runner):
    """Test the random hypertree experiment on two small trees."""
    data = run_json(runner, ["experiment", "--trees", "2", "--n", "8", "--edges", "2",
                             "--max-edge-size", "3", "--seed", "5", "-N", "2"])
    result = data["result"]

    assert data["command"] == "experiment"
    assert [run["seed"] for run in result["runs"]] == [5, 6]
    assert result["summary"]["trees"] == 2
    assert result["all_hold"] is True
    for run in result["runs"]:
        assert len(run["depths"]) == 2
        assert run["depths"][0] >= run["epsilon"]
