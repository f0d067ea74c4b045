import os
import subprocess
import sys

import pytest

from scan_plotter import IoError, MalformedCsv, MissingColumn, PlotSpec, render
from scan_plotter.cli import main

SMALL_CSV = """q,t,re,im,fidelity
1,6.2831853071795862,0.25,-0.5,0.55901699437494745
2,12.566370614359172,-1,0,1
3,18.849555921538759,0,0,0
"""


@pytest.fixture(scope="module")
def figure_csvs(tmp_path_factory):
    """Figure windows produced through the primary CLI (the scan interface)."""
    directory = tmp_path_factory.mktemp("csv")
    fig1 = directory / "fig1.csv"
    fig2 = directory / "fig2.csv"
    commands = [
        ["scan", "--n", "16", "--set", "1,2,3,4,12,13,14,15", "--pair", "0,8",
         "--lattice", "2piZ", "--qmin", "7500", "--qmax", "8000", "--out", str(fig1)],
        ["scan", "--n", "16", "--set", "1,3,4,12,13,15", "--pair", "0,8",
         "--lattice", "oddHalfPi", "--qmin", "0", "--qmax", "249", "--out", str(fig2)],
    ]
    for command in commands:
        subprocess.run(
            [sys.executable, "-m", "circulant_walks", *command],
            check=True,
            capture_output=True,
        )
    return fig1, fig2


def write_csv(tmp_path, text, name="scan.csv"):
    path = tmp_path / name
    path.write_text(text)
    return path


class TestRender:
    def test_figure_1_window(self, figure_csvs, tmp_path):
        fig1, _ = figure_csvs
        out = tmp_path / "fig1.png"
        result = render(PlotSpec(str(fig1), str(out), title="window scan"))
        assert result.point_count == 501
        assert result.y_limits[0] <= 0.0 and result.y_limits[1] >= 1.0
        assert out.exists() and out.stat().st_size > 0

    def test_figure_2_window(self, figure_csvs, tmp_path):
        _, fig2 = figure_csvs
        out = tmp_path / "fig2.png"
        result = render(PlotSpec(str(fig2), str(out), x_column="q"))
        assert result.point_count == 250
        assert max(result.y) <= 1.0 + 1e-9
        assert out.exists()

    def test_single_row(self, tmp_path):
        path = write_csv(tmp_path, "q,t,re,im,fidelity\n0,1.5707,0,-1,1\n")
        result = render(PlotSpec(str(path), str(tmp_path / "one.png")))
        assert result.point_count == 1
        assert result.y == (1.0,)

    def test_input_is_not_modified(self, tmp_path):
        path = write_csv(tmp_path, SMALL_CSV)
        render(PlotSpec(str(path), str(tmp_path / "out.png")))
        assert path.read_text() == SMALL_CSV

    def test_re_and_im_columns(self, tmp_path):
        path = write_csv(tmp_path, SMALL_CSV)
        for column, expected in (("re", (0.25, -1.0, 0.0)), ("im", (-0.5, 0.0, 0.0))):
            result = render(PlotSpec(str(path), str(tmp_path / f"{column}.png"), y_column=column))
            assert result.y == expected
            assert result.y_limits == (-1.05, 1.05)

    def test_deterministic_data(self, tmp_path):
        path = write_csv(tmp_path, SMALL_CSV)
        first = render(PlotSpec(str(path), str(tmp_path / "a.png")))
        second = render(PlotSpec(str(path), str(tmp_path / "b.png")))
        assert (first.x, first.y) == (second.x, second.y)

    def test_replaces_existing_output(self, tmp_path):
        path = write_csv(tmp_path, SMALL_CSV)
        out = tmp_path / "out.png"
        out.write_bytes(b"stale")
        render(PlotSpec(str(path), str(out)))
        assert out.stat().st_size > 5

    def test_no_temp_files_left_behind(self, tmp_path):
        path = write_csv(tmp_path, SMALL_CSV)
        render(PlotSpec(str(path), str(tmp_path / "out.png")))
        assert sorted(p.name for p in tmp_path.iterdir()) == ["out.png", "scan.csv"]


class TestErrors:
    def test_missing_column(self, tmp_path):
        path = write_csv(tmp_path, "q,t,re,im\n1,6.28,0.5,0\n")
        with pytest.raises(MissingColumn):
            render(PlotSpec(str(path), str(tmp_path / "x.png")))

    def test_unknown_column_request(self, tmp_path):
        with pytest.raises(MissingColumn):
            PlotSpec("in.csv", "out.png", y_column="phase")

    def test_malformed_cell(self, tmp_path):
        path = write_csv(tmp_path, "q,t,re,im,fidelity\n1,6.28,0.5,0,not-a-number\n")
        with pytest.raises(MalformedCsv):
            render(PlotSpec(str(path), str(tmp_path / "x.png")))

    def test_ragged_row(self, tmp_path):
        path = write_csv(tmp_path, "q,t,re,im,fidelity\n1,6.28,0.5\n")
        with pytest.raises(MalformedCsv):
            render(PlotSpec(str(path), str(tmp_path / "x.png")))

    def test_header_only(self, tmp_path):
        path = write_csv(tmp_path, "q,t,re,im,fidelity\n")
        with pytest.raises(MalformedCsv):
            render(PlotSpec(str(path), str(tmp_path / "x.png")))

    def test_empty_file(self, tmp_path):
        path = write_csv(tmp_path, "")
        with pytest.raises(MalformedCsv):
            render(PlotSpec(str(path), str(tmp_path / "x.png")))

    def test_missing_input_file(self, tmp_path):
        with pytest.raises(IoError):
            render(PlotSpec(str(tmp_path / "absent.csv"), str(tmp_path / "x.png")))

    def test_unwritable_output(self, tmp_path):
        path = write_csv(tmp_path, SMALL_CSV)
        with pytest.raises(IoError):
            render(PlotSpec(str(path), str(tmp_path / "no-such-dir" / "x.png")))


class TestCli:
    def test_success(self, tmp_path, capsys):
        path = write_csv(tmp_path, SMALL_CSV)
        out = tmp_path / "out.png"
        code = main(["--in", str(path), "--out", str(out), "--x", "q", "--title", "demo"])
        assert code == 0
        assert "3 points" in capsys.readouterr().out
        assert out.exists()

    def test_error_exit_code(self, tmp_path, capsys):
        code = main(["--in", str(tmp_path / "absent.csv"), "--out", str(tmp_path / "x.png")])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["--out", "x.png"])
        assert excinfo.value.code == 2
