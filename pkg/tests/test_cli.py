import shutil

import pytest

from ringseg import read_pgm
from ringseg.cli import main
from ringseg.fileio import read_trace


@pytest.fixture
def work(tmp_path, data_dir):
    for p in data_dir.glob("*.pgm"):
        shutil.copy(p, tmp_path / p.name)
    return tmp_path


def test_entropy_of_constant(work, capsys):
    assert main(["entropy", str(work / "constant.pgm")]) == 0
    assert capsys.readouterr().out == "0.000000000000\n"


def test_ned_and_we(work, capsys):
    a = str(work / "random16.pgm")
    assert main(["ned", a, a]) == 0
    assert float(capsys.readouterr().out) == 0.0
    cb, st = str(work / "checkerboard.pgm"), str(work / "stripes.pgm")
    assert main(["we", cb, st]) == 0
    assert float(capsys.readouterr().out) == 0.0
    assert main(["ned", cb, st]) == 0
    assert capsys.readouterr().out == "1.500000000000\n"


def test_histogram_csv(work, capsys):
    assert main(["histogram", str(work / "constant.pgm")]) == 0
    assert capsys.readouterr().out == "level,count\n128,256\n"
    out = work / "h.csv"
    assert main(["histogram", str(work / "two_region.pgm"), "-o", str(out)]) == 0
    assert out.read_text() == "level,count\n0,2048\n200,2048\n"


def test_ringop_add_sub_restores_bytes(work):
    src = work / "random16.pgm"
    assert main(["ringop", str(src), str(work / "a.pgm"), "--op", "add", "--scalar", "100"]) == 0
    assert main(["ringop", str(work / "a.pgm"), str(work / "b.pgm"), "--op", "sub",
                 "--scalar", "100"]) == 0
    assert (work / "b.pgm").read_bytes() == src.read_bytes()


def test_saturating_round_trip_loses_data(work):
    src = work / "random16.pgm"
    main(["ringop", str(src), str(work / "a.pgm"), "--op", "sat-add", "--scalar", "100"])
    main(["ringop", str(work / "a.pgm"), str(work / "b.pgm"), "--op", "sat-sub",
          "--scalar", "100"])
    assert (work / "b.pgm").read_bytes() != src.read_bytes()


def test_ringop_neg_and_mul(work):
    src = work / "random16.pgm"
    assert main(["ringop", str(src), str(work / "n.pgm"), "--op", "neg"]) == 0
    assert read_pgm(work / "n.pgm") == -read_pgm(src)
    assert main(["ringop", str(src), str(work / "m.pgm"), "--op", "mul", "--scalar", "1"]) == 0
    assert (work / "m.pgm").read_bytes() == src.read_bytes()


def test_filter(work):
    out = work / "f.pgm"
    assert main(["filter", str(work / "two_region.pgm"), str(out), "--hs", "15",
                 "--hr", "12", "--profile", "epanechnikov"]) == 0
    assert out.read_bytes() == (work / "two_region.pgm").read_bytes()


def test_segment_writes_image_and_trace(work):
    out, trace = work / "s.pgm", work / "t.csv"
    args = ["segment", str(work / "noisy_two_region.pgm"), str(out), "--criterion", "ned",
            "--trace", str(trace)]
    assert main(args) == 0
    records = read_trace(trace)
    assert records[-1][1] <= 0.9
    first = (out.read_bytes(), trace.read_bytes())
    assert main(args) == 0
    assert (out.read_bytes(), trace.read_bytes()) == first


def test_segment_we_criterion(work):
    out, trace = work / "s.pgm", work / "t.csv"
    assert main(["segment", str(work / "noisy_two_region.pgm"), str(out),
                 "--criterion", "we", "--max-iter", "5", "--trace", str(trace)]) == 0
    assert 1 <= len(read_trace(trace)) <= 5


def test_profile(work, capsys):
    assert main(["profile", str(work / "two_region.pgm"), "--row", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "col,value" and len(lines) == 65
    assert lines[1] == "0,0" and lines[-1] == "63,200"


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["entropy"],
    ["entropy", "x.pgm", "--nope"],
    ["segment", "a.pgm", "b.pgm", "--criterion", "psnr"],
    ["filter", "a.pgm", "b.pgm", "--hs", "0"],
    ["ringop", "a.pgm", "b.pgm", "--op", "div"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "usage:" in capsys.readouterr().err


def test_domain_errors_exit_1(work, capsys):
    assert main(["entropy", str(work / "missing.pgm")]) == 1
    assert main(["ned", str(work / "random16.pgm"), str(work / "two_region.pgm")]) == 1
    assert main(["profile", str(work / "random16.pgm"), "--row", "99"]) == 1
    bad = work / "bad.pgm"
    bad.write_bytes(b"P7\n")
    assert main(["entropy", str(bad)]) == 1
    assert "error" in capsys.readouterr().err


def test_modulus_flag(work, capsys):
    assert main(["entropy", str(work / "two_region.pgm"), "--modulus", "201"]) == 0
    assert capsys.readouterr().out == "1.000000000000\n"
