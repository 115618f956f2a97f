import io
import json
import subprocess
import sys

from autclique import clique_boost, cycle_graph, emit_graph6, parse_edge_list, parse_graph6
from autclique.cli import run

C5_EDGES = "5\n0 1\n1 2\n2 3\n3 4\n4 0\n"


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def test_omega_of_k2():
    assert call(["omega"], "A_\n") == (0, "2\n", "")


def test_boost_c5_edge_list():
    status, out, _ = call(["boost", "--iterations", "1", "-f", "edges", "-t", "edges"], C5_EDGES)
    assert status == 0
    graph_text, _, cert_text = out.partition("n=")
    g = parse_edge_list(graph_text)
    assert (g.n, g.edge_count) == (10, 20)
    assert ("n=" + cert_text).splitlines()[:2] == ["n=5", "0 5"]


def test_boost_certificate_to_file(tmp_path):
    cert = tmp_path / "cert.txt"
    status, out, _ = call(["boost", "-k", "2", "-f", "edges", "--cert-out", str(cert)], C5_EDGES)
    assert status == 0
    assert parse_graph6(out.strip()).n == 20
    assert cert.read_text().startswith("n=5\n") and "n=10\n" in cert.read_text()


def test_boost_complete_graph_is_usage_error():
    status, out, err = call(["boost"], "A_\n")
    assert status == 2 and out == "" and "corollary_base" in err


def test_family_cyclic3():
    status, out, _ = call(["family", "--group", "cyclic:3", "--clique", "10", "--json"])
    assert status == 0
    graph_line, report_line = out.strip().splitlines()
    report = json.loads(report_line)
    assert report["verdict"] == "pass"
    assert report["aut_order"] == 3 and report["omega"] >= 10
    assert parse_graph6(graph_line).n == 36


def test_realize_and_aut():
    status, out, _ = call(["realize", "--group", "trivial", "-t", "edges"])
    assert status == 0
    assert parse_edge_list(out).edge_count == 6
    status, out, _ = call(["aut", "-f", "edges"], C5_EDGES)
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "order=10"
    assert all(line.startswith("p: ") for line in lines[1:])


def test_chi_and_report():
    assert call(["chi", "-f", "edges"], C5_EDGES) == (0, "3\n", "")
    status, out, _ = call(["report", "-f", "edges", "--json"], C5_EDGES)
    assert json.loads(out) == {"n": 5, "edge_count": 5, "omega": 2, "chi": 3,
                               "aut_order": 10, "connected": True, "genus_lb": 0}
    status, out, _ = call(["report", "-f", "edges"], C5_EDGES)
    assert "aut_order   10" in out


def test_verify_boost_statuses():
    boosted, _ = clique_boost(cycle_graph(5))
    status, out, _ = call(["verify-boost"], emit_graph6(boosted) + "\n")
    assert status == 0 and out.startswith("verdict: pass")
    status, out, _ = call(["verify-boost"], emit_graph6(cycle_graph(10)) + "\n")
    assert status == 1 and out.startswith("verdict: fail")
    status, _, _ = call(["verify-boost"], emit_graph6(cycle_graph(5)) + "\n")
    assert status == 2


def test_convert_round_trip_is_byte_identical(rng):
    from conftest import random_graph

    for _ in range(20):
        g6 = emit_graph6(random_graph(rng, rng.randint(0, 40))) + "\n"
        _, edges, _ = call(["convert", "-t", "edges"], g6)
        _, back, _ = call(["convert", "-f", "edges", "-t", "graph6"], edges)
        assert back == g6


def test_convert_to_dot():
    status, out, _ = call(["convert", "-t", "dot"], "A_\n")
    assert status == 0 and "0 -- 1;" in out


def test_usage_errors():
    assert call(["nonsense"])[0] == 2
    assert call([])[0] == 2
    assert call(["convert", "-f", "dot"], "graph G {}")[0] == 2
    assert call(["omega"], "A!\n")[0] == 2
    assert call(["omega", "/no/such/file"])[0] == 2
    assert call(["realize", "--group", "cyclic:x"])[0] == 2
    assert call(["omega", "-f", "edges"], "2\n0 0\n")[0] == 2


def test_input_from_file(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(C5_EDGES)
    assert call(["omega", "-f", "edges", str(path)]) == (0, "2\n", "")


def test_output_is_deterministic():
    runs = [call(["family", "--group", "klein4", "--clique", "5"]) for _ in range(2)]
    assert runs[0] == runs[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "autclique", "omega"], input="A_\n",
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "2\n"


def test_argparse_errors_go_to_given_stream():
    status, out, err = call(["family", "--group", "cyclic:3"])
    assert status == 2 and out == "" and "--clique" in err
