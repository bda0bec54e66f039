"""End-to-end smoke tests for the Python bindings."""

import math

import pytest

import tricontour as tc


def test_version():
    assert tc.__version__ == "0.1.0"


def test_geometry_metrics():
    a = tc.WidthParam(0.125)
    m = tc.shape_metrics(a)
    assert m.area == pytest.approx(math.pi * 15 / 16, rel=1e-12)
    assert m.perimeter == pytest.approx(2 * math.pi, rel=1e-12)
    assert a.regime == tc.Regime.STRICTLY_CONVEX
    with pytest.raises(tc.TricontourError):
        tc.WidthParam(0.5)


def test_weights_and_thresholds():
    seq = tc.jacobsthal_sequence(tc.WidthParam(0.125), 3)
    assert seq.values == pytest.approx([1.0, 0.25, 0.1875, 0.078125])
    assert tc.growth_ratio(tc.WidthParam(0.125)) == 0.5
    assert tc.smoothness_threshold(1) == 0.125
    assert tc.rational_sqrt(1) == (3, 8)
    assert tc.tail_sum(tc.WidthParam(0.0), 4) == 0.0


def test_series_dict_interop():
    s = tc.SpectralSeries({1: 1.0, -2: 0.25, 4: -0.125})
    assert len(s) == 3
    assert s[1] == 1.0
    assert s[99] == 0.0
    s[99] = 2j
    assert s.to_dict()[99] == 2j
    assert s.norm() == pytest.approx(math.sqrt(1 + 0.25**2 + 0.125**2 + 4))


def test_analysis_round_trip():
    a = tc.WidthParam(0.125)
    loop = tc.SampledLoop()
    loop.samples = [tc.triangle_point(a, 2 * math.pi * j / 64) for j in range(64)]
    f = tc.analyze(loop, 4)
    assert f[1] == pytest.approx(1.0, abs=1e-12)
    assert f[-2] == pytest.approx(0.25, abs=1e-12)
    assert f[4] == pytest.approx(-0.125, abs=1e-12)
    back = tc.synthesize(f, 64)
    assert tc.loop_distance(back, loop) < 1e-12


def test_operator_inversion():
    a = tc.WidthParam(1 / 24)
    f = tc.SpectralSeries({1: 1.0, -3: 0.5j, 7: -0.25})
    cfg = tc.OperatorConfig(a, n=12)
    back = tc.truncated_inverse(tc.triangle_transform(f, a), cfg)
    for k, c in f.to_dict().items():
        assert back[k] == pytest.approx(c, abs=1e-6)


def test_regularity_probe():
    rows = tc.diff_quotient_table(10, 40)
    assert [r.n for r in rows] == list(range(1, 11))
    assert all(r.quotient >= r.bound for r in rows)
    w = tc.ck_convergence_witness(tc.WidthParam(1 / 24), 1, 40)
    assert w.ratio == pytest.approx(0.5)
    assert w.partial_sum == pytest.approx(1.5, abs=1e-9)


def test_glyph_pipeline(tmp_path):
    csv = tmp_path / "square.csv"
    csv.write_text("0,0\n1,0\n1,1\n0,1\n")
    doc = tc.load_glyph(str(csv))
    assert len(doc.contours) == 1

    loops = tc.transform_glyph(doc, tc.WidthParam(1 / 24), 2, 8, 1024)
    svg = tc.emit_svg(loops)
    assert svg.startswith("<?xml")

    reparsed = tc.parse_svg_path(tc.extract_path_data(svg)[0])
    assert len(reparsed[0].vertices) >= 3

    with pytest.raises(tc.TricontourError):
        tc.transform_glyph(doc, tc.WidthParam(0.125), 6, 8, 4096)

    assert tc.minimal_transform_samples(6, 8) == 4097
    assert tc.sweep_filename(0.125, 3) == "a0.125_n3.svg"
