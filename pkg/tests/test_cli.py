import json

from compnum import cycle, complete, g_tn, read_digraph, read_edge_list, verify_realization, write_edge_list
from compnum.cli import Report, main


def _write(tmp_path, name, g):
    target = tmp_path / name
    target.write_text(write_edge_list(g))
    return str(target)


def test_compute_c4(tmp_path, capsys):
    infile = _write(tmp_path, "c4.txt", cycle(4))
    assert main(["compute", "--input", infile, "--exact", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["theta_e"] == 4
    assert report["exact"] == 2
    assert report["status"] == "tight"
    assert report["rule"] == "triangle-free"
    assert (tmp_path / "c4.txt.digraph").exists()
    d, topo = read_digraph((tmp_path / "c4.txt.digraph").read_text())
    assert verify_realization(cycle(4), __import__("compnum").Realization(d, 2, tuple(topo)))


def test_compute_k4_bounds(tmp_path, capsys):
    infile = _write(tmp_path, "k4.txt", complete(4))
    assert main(["compute", "--input", infile, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["theta_e"] == 1
    assert (report["opsut_lower"], report["opsut_upper"]) == (0, 1)
    assert report["main_upper"] == 1
    assert report["exact"] is None


def test_compute_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 3 1\ne 1 9\n")
    assert main(["compute", "--input", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_compute_cap_exceeded(tmp_path, capsys):
    infile = _write(tmp_path, "big.txt", g_tn(3, 1))
    assert main(["compute", "--input", infile, "--exact", "--cap", "5"]) == 3


def test_compute_deterministic(tmp_path, capsys):
    infile = _write(tmp_path, "c4.txt", cycle(4))
    outs = []
    for _ in range(2):
        assert main(["compute", "--input", infile, "--exact", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        data.pop("elapsed_ms")
        outs.append(json.dumps(data))
    assert outs[0] == outs[1]


def test_report_round_trip():
    report = Report(
        input="x", n=4, m=4, theta_e=4, theta_e_restricted_triangle=0,
        not_in_triangle_count=4, opsut_lower=2, opsut_upper=4, main_upper=2,
        exact=2, status="tight", rule="triangle-free", detail="d",
        theta_e_witness=[[0, 1], [1, 2]], realization_file=None, elapsed_ms=1.5,
    )
    assert Report.from_json(report.to_json()) == report


def test_generate_gtn(tmp_path, capsys):
    out = str(tmp_path / "g62.txt")
    assert main(["generate", "gtn", "--t", "6", "--n", "2", "--out", out]) == 0
    g = read_edge_list((tmp_path / "g62.txt").read_text())
    assert g == g_tn(6, 2)


def test_generate_circulant(tmp_path):
    out = str(tmp_path / "c72.txt")
    assert main(["generate", "circulant", "--n", "7", "--p", "2", "--out", out]) == 0
    assert read_edge_list((tmp_path / "c72.txt").read_text()).m == 14


def test_generate_invalid_params(tmp_path, capsys):
    out = str(tmp_path / "x.txt")
    assert main(["generate", "cycle", "--n", "2", "--out", out]) == 2
    assert main(["generate", "cycle", "--out", out]) == 2


def test_realize_default_and_infeasible(tmp_path, capsys):
    infile = _write(tmp_path, "c4.txt", cycle(4))
    out = str(tmp_path / "c4.digraph")
    assert main(["realize", "--input", infile, "--out", out]) == 0
    assert "verification: OK" in capsys.readouterr().out
    d, topo = read_digraph((tmp_path / "c4.digraph").read_text())
    assert d.n == 6
    assert main(["realize", "--input", infile, "--k", "1", "--out", out]) == 2


def test_realize_k2(tmp_path, capsys):
    from compnum import Graph

    infile = _write(tmp_path, "k2.txt", Graph(2, [(0, 1)]))
    out = str(tmp_path / "k2.digraph")
    assert main(["realize", "--input", infile, "--k", "1", "--out", out]) == 0
    d, _ = read_digraph((tmp_path / "k2.digraph").read_text())
    assert d.arcs == frozenset({(0, 2), (1, 2)})


def test_verify_small(capsys):
    assert main(["verify", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    assert "analyzed 18 graph classes" in out
    assert "0 failures" in out and "census" in out


def test_verify_opsut_n5(capsys):
    assert main(["verify", "--max-n", "5", "--checks", "opsut"]) == 0
    out = capsys.readouterr().out
    assert "analyzed 52 graph classes" in out
    assert "check opsut: 0 failures over 52 classes" in out


def test_verify_parallel_matches_serial(capsys):
    assert main(["verify", "--max-n", "4", "--checks", "ecc,tight", "--jobs", "2"]) == 0
    parallel = capsys.readouterr().out
    assert main(["verify", "--max-n", "4", "--checks", "ecc,tight", "--jobs", "1"]) == 0
    assert capsys.readouterr().out == parallel


def test_verify_rejects_bad_requests(capsys):
    assert main(["verify", "--max-n", "7", "--checks", "opsut"]) == 3
    assert main(["verify", "--max-n", "8", "--checks", "ecc"]) == 3
    assert main(["verify", "--max-n", "4", "--checks", "nosuch"]) == 2


def test_verify_ecc_at_n7_allowed():
    # structural check only, no exact solves: n = 7 is in range
    assert main(["verify", "--max-n", "7", "--checks", "ecc"]) == 0


def test_verify_all_checks_n5_fast(capsys):
    import time

    t0 = time.perf_counter()
    assert main(["verify", "--max-n", "5"]) == 0
    assert time.perf_counter() - t0 < 300


def test_report_schema_stable(tmp_path, capsys):
    infile = _write(tmp_path, "c4.txt", cycle(4))
    assert main(["compute", "--input", infile, "--exact", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert list(report) == [
        "input", "n", "m", "theta_e", "theta_e_restricted_triangle",
        "not_in_triangle_count", "opsut_lower", "opsut_upper", "main_upper",
        "exact", "status", "rule", "detail", "theta_e_witness",
        "realization_file", "elapsed_ms",
    ]
    for field in ("n", "m", "theta_e", "opsut_lower", "opsut_upper", "main_upper", "exact"):
        assert isinstance(report[field], int)


def test_compute_human_readable(tmp_path, capsys):
    infile = _write(tmp_path, "c4.txt", cycle(4))
    assert main(["compute", "--input", infile]) == 0
    out = capsys.readouterr().out
    assert "theta_E: 4" in out and "verdict: tight" in out


def test_cap_override_warns(tmp_path, capsys):
    infile = _write(tmp_path, "c4.txt", cycle(4))
    assert main(["compute", "--input", infile, "--cap", "14"]) == 0
    assert "warning" in capsys.readouterr().err


def test_harness_checks_catch_broken_records():
    # the verify checks must actually flag violations, not just pass
    from compnum.cli import _analyze, _check_main, _check_opsut

    good = _analyze((4, ((0, 1), (1, 2), (2, 3), (0, 3)), True))
    assert _check_opsut([good]) == [] and _check_main([good]) == []
    broken = dict(good, k=good["theta"] + 1)
    assert _check_opsut([broken]) == [broken]
    assert _check_main([broken]) == [broken]
