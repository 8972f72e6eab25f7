import pytest

from eventposet.cli import main


def test_build_summary(capsys):
    assert main(["build", "--gen", "lattice:8,8"]) == 0
    out = capsys.readouterr().out
    assert "events 64" in out
    assert "chain P length 8" in out


def test_build_writes_file(tmp_path, capsys):
    out_file = tmp_path / "poset.txt"
    assert main(["build", "--gen", "simplex:3", "--out", str(out_file)]) == 0
    content = out_file.read_text()
    assert content.startswith("events 6")
    assert "chain C1" in content
    capsys.readouterr()


def test_roundtrip_through_input_file(tmp_path, capsys):
    out_file = tmp_path / "poset.txt"
    main(["build", "--gen", "lattice:6,6", "--out", str(out_file)])
    capsys.readouterr()
    assert main(["build", "--input", str(out_file)]) == 0
    assert "events 36" in capsys.readouterr().out


def test_project_table(capsys):
    assert main(["project", "--gen", "simplex:2", "--chain", "C1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "0 (0,0)"   # bottom of C1
    assert lines[1] == "1 (1,.)"   # bottom of C2: forward projection only
    assert lines[2] == "2 (1,1)"   # top of C1
    assert lines[3] == "3 (.,0)"   # top of C2: backward projection only


def test_classify_table(capsys):
    assert main(["classify", "--gen", "lattice:12,12", "--chains", "P", "Q"]) == 0
    out = capsys.readouterr().out
    assert "II P|x|Q" in out
    assert " - -" in out  # events with missing projections


def test_relate(capsys):
    assert main(["relate", "--gen", "lattice:12,12", "--chains", "S", "P"]) == 0
    out = capsys.readouterr().out
    assert "m = 4" in out and "n = 1" in out


def test_relate_failure_exit_code(capsys):
    code = main(["relate", "--gen", "lattice:12,12", "--chains", "P", "Q"])
    assert code == 1
    assert "not linearly related" in capsys.readouterr().out


def test_quantify(capsys):
    lattice_event = lambda u, v: u * 12 + v
    args = [
        "quantify",
        "--gen", "lattice:12,12",
        "--interval", str(lattice_event(3, 1)), str(lattice_event(6, 2)),
        "--chains", "P", "Q",
    ]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert "pair = (3, 1)" in out
    assert "length = 2" in out
    assert "distance = 1" in out
    assert "scalar = 3 (time-like)" in out


def test_transform(capsys):
    assert main(["transform", "--m", "4", "--n", "1", "--pair", "2", "2"]) == 0
    out = capsys.readouterr().out
    assert "pair' = (4, 1)" in out
    assert "beta = 3/5" in out
    assert "gamma = 5/4" in out


def test_scalar(capsys):
    assert main(["scalar", "--pair", "4", "1"]) == 0
    out = capsys.readouterr().out
    assert "scalar = 4 (time-like)" in out
    assert "sigma = 2" in out


def test_scalar_accepts_negative_fractions(capsys):
    assert main(["scalar", "--pair", "-3/2", "3/2"]) == 0
    out = capsys.readouterr().out
    assert "scalar = -9/4 (space-like)" in out
    assert "sigma = 3/2i" in out


def test_dot_with_generated_lattice(tmp_path, capsys):
    from eventposet import format_poset_text
    from eventposet.verify import projection_lattice

    lattice = projection_lattice()
    source = tmp_path / "pi.txt"
    source.write_text(format_poset_text(lattice.poset, lattice.chains))
    x = lattice.event(6, 10)
    y = lattice.event(2, 10)
    code = main([
        "dot", "--input", str(source), "--x", str(x), "--y", str(y),
        "--chains", "P", "Q",
    ])
    assert code == 0
    assert "projection = 2" in capsys.readouterr().out


def test_export_hasse(capsys):
    assert main(["export", "--gen", "simplex:2", "--mode", "hasse"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph poset {")


def test_export_geometric_to_file(tmp_path, capsys):
    target = tmp_path / "view.gv"
    assert main([
        "export", "--gen", "lattice:12,12", "--mode", "geometric",
        "--out", str(target),
    ]) == 0
    assert target.read_text().startswith("graph chains {")


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["transform", "--m", "4"])
    assert exc.value.code == 2


def test_unknown_chain_is_usage_error():
    with pytest.raises(SystemExit):
        main(["project", "--gen", "lattice:8,8", "--chain", "Z"])


def test_domain_error_exits_1(capsys):
    # Event 54 = (4, 6) sits beyond P, away from Q: not between the pair.
    code = main([
        "quantify", "--gen", "lattice:12,12",
        "--interval", "54", "101", "--chains", "P", "Q",
    ])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_verify_exits_zero(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "[PASS]" in out
    assert "[FAIL]" not in out
