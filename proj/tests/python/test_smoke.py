"""Smoke tests for the python module and the CLI contract."""

import json
import os
import subprocess

import pytest

cyclex = pytest.importorskip("cyclex")

CLI = os.environ.get("CYCLEX_CLI")
SCHEMA = os.environ.get("CYCLEX_SCHEMA")


def test_graph6_round_trip():
    g = cyclex.Graph.from_graph6("Bw")
    assert g.order == 3
    assert g.size == 3
    assert g.to_graph6() == "Bw"
    c5 = cyclex.Graph.from_graph6("Dhc")
    assert cyclex.girth_circumference(c5) == (5, 5)


def test_constructions_and_conditions():
    k113 = cyclex.named_graph("K113")
    assert cyclex.is_locally_connected(k113)[0]
    assert not cyclex.is_fully_cycle_extendable(k113)[0]
    assert cyclex.is_weakly_pancyclic(k113)
    assert cyclex.degree_profile(k113) == (2, 4, [4, 4, 2, 2, 2])

    x = cyclex.named_graph("X")
    assert not cyclex.is_hamiltonian(x)
    assert cyclex.find_induced(x, cyclex.named_graph("K113")) is None
    assert cyclex.find_induced(x, cyclex.named_graph("claw")) is not None
    assert not cyclex.satisfies_condition_e1(x)[0]
    assert cyclex.hypothesis_membership(x) == []

    octahedron = cyclex.join_of(
        cyclex.Graph(2, []), cyclex.join_of(cyclex.Graph(2, []), cyclex.Graph(2, []))
    )
    assert cyclex.is_locally_dirac(octahedron)[0]
    assert cyclex.verify_theorem(octahedron, "T6")[0] == "verified"


def test_enumeration_counts():
    assert len(cyclex.enumerate_graphs(5, connected_only=True)) == 21
    assert len(cyclex.enumerate_graphs(6, connected_only=False)) == 156


def test_abc_and_trace():
    k4 = cyclex.complete_graph(4)
    a, b, c = cyclex.abc_partition(k4, [0, 1, 2], 3, 0)
    assert (a, b, c) == ([2], [], [1])
    trace = cyclex.trace_t6_sequence(k4, [0, 1, 2], 3, 0)
    assert trace["stalled_at"] == 4
    assert trace["u_seq"] == [0, 2, 1, 0]
    assert trace["invariants_ok"]
    assert not trace["bound_exceeded"]


def test_run_verify_clean():
    report = json.loads(cyclex.run_verify(theorem="all", n_max=5, jobs=2))
    assert report["clean"]
    assert report["command"] == "verify"
    search = json.loads(cyclex.run_conjecture_search(n_max=5, jobs=2))
    assert search["clean"]


def test_lattice_checks():
    ok, checks, failures = cyclex.proposition_lattice_checks()
    assert ok
    assert checks >= 9
    assert failures == []


@pytest.fixture(scope="module")
def schema():
    if not SCHEMA or not os.path.exists(SCHEMA):
        pytest.skip("schema path not provided")
    jsonschema = pytest.importorskip("jsonschema")
    with open(SCHEMA) as fh:
        return jsonschema.Draft7Validator(json.load(fh))


def run_cli(*args):
    assert CLI, "CYCLEX_CLI not set"
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@pytest.mark.skipif(not CLI, reason="CYCLEX_CLI not set")
class TestCli:
    def test_exit_codes(self):
        assert run_cli("check", "Bw").returncode == 0
        assert run_cli("check", "not-a-graph6-\x19").returncode == 2
        assert run_cli("verify", "--theorem", "all", "--n-max", "5").returncode == 0
        assert run_cli("verify", "--theorem", "nope", "--n-max", "5").returncode == 2
        assert run_cli("search", "--conjecture", "ryjacek", "--n-max", "4").returncode == 0
        assert run_cli("bogus-subcommand").returncode == 2

    def test_json_outputs_validate(self, schema):
        for args in (
            ("check", "D}o", "--format", "json"),
            ("verify", "--theorem", "T6", "--n-max", "5", "--format", "json"),
            ("search", "--conjecture", "ryjacek", "--n-max", "4", "--format", "json"),
            ("catalog", "--format", "json"),
        ):
            proc = run_cli(*args)
            assert proc.returncode == 0, proc.stderr
            payload = json.loads(proc.stdout)
            schema.validate(payload)

    def test_csv_has_fixed_header(self):
        proc = run_cli("verify", "--theorem", "T6", "--n-max", "4", "--format", "csv")
        assert proc.stdout.splitlines()[0] == (
            "record,theorem,examined,applicable,verified,violations,graph6,witness"
        )

    def test_report_bytes_are_deterministic(self):
        a = run_cli("verify", "--theorem", "all", "--n-max", "5", "--format", "json", "--jobs", "1")
        b = run_cli("verify", "--theorem", "all", "--n-max", "5", "--format", "json", "--jobs", "4")
        ja, jb = json.loads(a.stdout), json.loads(b.stdout)
        for j in (ja, jb):
            j.pop("wall_time_ms")
            j["config"].pop("jobs")
        assert ja == jb

    def test_check_file_input(self, tmp_path):
        corpus = tmp_path / "two.g6"
        corpus.write_text(">>graph6<<\nBw\nDhc\n")
        proc = run_cli("check", f"@{corpus}", "--format", "json")
        assert proc.returncode == 0
        assert len(json.loads(proc.stdout)["graphs"]) == 2

    def test_jobs_env_fallback(self):
        env = dict(os.environ, CYCLEX_JOBS="2")
        proc = subprocess.run(
            [CLI, "verify", "--theorem", "T6", "--n-max", "5", "--format", "json"],
            capture_output=True, text=True, env=env,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["config"]["jobs"] == 2
        # an explicit flag beats the environment
        proc = subprocess.run(
            [CLI, "verify", "--theorem", "T6", "--n-max", "5", "--jobs", "3", "--format", "json"],
            capture_output=True, text=True, env=env,
        )
        assert json.loads(proc.stdout)["config"]["jobs"] == 3
