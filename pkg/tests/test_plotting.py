import math

from gallai import SweepConfig, run_sweep
from gallai.plotting import render_sweep_figure


def test_render_sweep_figure_writes_png(tmp_path):
    cfg = SweepConfig(n_values=(8, 12), c_values=(0.5, 1.0), seeds=(0, 1), method="auto", samples=200)
    records = run_sweep(cfg)
    out = tmp_path / "sweep.png"
    render_sweep_figure(records, out)
    data = out.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(data) > 1000


def test_render_skips_nan_medians(tmp_path):
    # a zero-hit cell produces nan ratio3; the figure must still render
    cfg = SweepConfig(n_values=(6,), c_values=(1.0, 2.0), seeds=(1,), method="naive", samples=5)
    records = run_sweep(cfg)
    assert any(math.isnan(r.ratio3) for r in records)
    out = tmp_path / "sparse.png"
    render_sweep_figure(records, out)
    assert out.exists()
