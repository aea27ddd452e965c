import json

from coverhom.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_nvpoly_passes(capsys):
    code, out = _run(capsys, "nvpoly", "--r", "3", "--n", "4")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert all(c["status"] == "pass" for c in report["checks"])
    assert report["config"]["k"] == 2


def test_verify_surface_k_too_small(capsys):
    code = main(["verify-surface", "--r", "3", "--genus", "2", "--k", "1"])
    assert code == 2


def test_verify_free_sorted_passes(capsys):
    code, out = _run(
        capsys,
        "verify-free", "--r", "3", "--n", "2", "--k", "1",
        "--variant", "sorted", "--samples", "100",
    )
    assert code == 0
    report = json.loads(out)
    names = [c["name"] for c in report["checks"]]
    assert "witness-free" in names


def test_bad_prime_exits_two(capsys):
    assert main(["nvpoly", "--r", "4", "--n", "2"]) == 2
    assert main(["verify-free", "--r", "9", "--n", "2"]) == 2


def test_missing_quotient_file_exits_two(capsys):
    assert main(["cover-report", "--quotient", "/nonexistent.json"]) == 2


def test_report_determinism(capsys):
    argv = ["verify-free", "--r", "3", "--n", "2", "--k", "1", "--samples", "50", "--seed", "9"]
    code1, out1 = _run(capsys, *argv)
    code2, out2 = _run(capsys, *argv)
    assert code1 == code2 == 0

    def strip_times(text):
        report = json.loads(text)
        for check in report["checks"]:
            check.pop("wall_time_s", None)
        return report

    assert strip_times(out1) == strip_times(out2)


def test_report_appends_jsonl(tmp_path, capsys):
    out = tmp_path / "report.json"
    argv = ["nvpoly", "--r", "3", "--n", "2", "--out", str(out)]
    assert main(argv) == 0
    assert main(argv) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 2
    assert all(json.loads(line)["schema"] == 1 for line in lines)


def test_cover_report_with_orbit(tmp_path, capsys):
    quot = tmp_path / "q.json"
    quot.write_text(
        json.dumps(
            {"domain": "free", "rank": 2, "type": "residue", "mod": 3, "images": [[1], [0]]}
        )
    )
    code, out = _run(
        capsys,
        "cover-report", "--quotient", str(quot), "--orbit", "all", "--max-word-len", "3",
    )
    assert code == 0
    report = json.loads(out)
    orbit = next(c for c in report["checks"] if c["name"] == "orbit-span")
    assert orbit["details"]["rank"] == orbit["details"]["dim_h1"] == 4


def test_crt_lift_command(capsys):
    code, out = _run(
        capsys,
        "crt-lift", "--primes", "3,5", "--n", "2", "--k", "1", "--samples", "20",
    )
    assert code == 0
    report = json.loads(out)
    lift = next(c for c in report["checks"] if c["name"] == "lift")
    assert lift["details"]["exponent"] == 930
    assert lift["details"]["modulus"] == 15


def test_witness_e2e_small(capsys):
    code, out = _run(
        capsys,
        "witness-e2e", "--r", "3", "--n", "2", "--k", "1",
        "--variant", "sorted", "--max-word-len", "2",
    )
    assert code == 0
    report = json.loads(out)
    names = [c["name"] for c in report["checks"]]
    assert "proper-subspace-certificate" in names
    assert all(c["status"] == "pass" for c in report["checks"])


def test_failed_check_exits_one(tmp_path, capsys):
    # a property violation becomes a fail record with the counterexample
    # and flips the exit code to 1
    from coverhom.cli import _finish, _timed
    from coverhom.errors import PropertyViolation

    def violating_check():
        raise PropertyViolation("boom", counterexample={"word": "x1"})

    checks = []
    record = _timed(checks, violating_check)
    assert record is None
    assert checks[0]["status"] == "fail"
    assert checks[0]["details"]["counterexample"] == {"word": "x1"}

    class Args:
        out = str(tmp_path / "r.json")

    assert _finish(Args(), "test", {}, checks) == 1


def test_witness_e2e_orbit_rank_guard(capsys):
    # a tripped size guard is a configuration problem: exit 2
    code = main(
        ["witness-e2e", "--r", "3", "--n", "2", "--k", "1", "--max-word-len", "2",
         "--orbit-rank", "--orbit-word-len", "3", "--guard-dim", "10"]
    )
    assert code == 2
