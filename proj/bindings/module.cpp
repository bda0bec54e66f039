// Python bindings for the core operations: curve geometry, weight
// sequences, sparse spectra, the transform pair, regularity diagnostics
// and the contour pipeline.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "tricontour/errors.hpp"
#include "tricontour/geometry.hpp"
#include "tricontour/glyph.hpp"
#include "tricontour/io.hpp"
#include "tricontour/jacobsthal.hpp"
#include "tricontour/operators.hpp"
#include "tricontour/regularity.hpp"
#include "tricontour/spectral.hpp"
#include "tricontour/svg.hpp"

namespace py = pybind11;
using namespace tricontour;

namespace {

SpectralSeries series_from_dict(const std::map<std::int64_t, cplx>& terms) {
  SpectralSeries s;
  for (const auto& [k, c] : terms) s.set(k, c);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fourier-type series on constant-width triangle curves";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "TricontourError");

  py::enum_<Regime>(m, "Regime")
      .value("CIRCLE", Regime::Circle)
      .value("STRONGLY_CONVEX", Regime::StronglyConvex)
      .value("STRICTLY_CONVEX", Regime::StrictlyConvex)
      .value("SELF_INTERSECTING", Regime::SelfIntersecting);

  py::class_<WidthParam>(m, "WidthParam")
      .def(py::init<double>(), py::arg("a"))
      .def_property_readonly("value", &WidthParam::value)
      .def_property_readonly("regime", &WidthParam::regime)
      .def_readonly_static("MAX_VALUE", &WidthParam::max_value)
      .def("__repr__", [](const WidthParam& a) {
        return "WidthParam(" + std::to_string(a.value()) + ")";
      });

  py::class_<ShapeMetrics>(m, "ShapeMetrics")
      .def_readonly("area", &ShapeMetrics::area)
      .def_readonly("perimeter", &ShapeMetrics::perimeter)
      .def_readonly("iso_ratio", &ShapeMetrics::iso_ratio)
      .def_readonly("convexity", &ShapeMetrics::convexity);

  m.def("support_function", &support_function, py::arg("a"), py::arg("t"));
  m.def("triangle_point", &triangle_point, py::arg("a"), py::arg("t"));
  m.def("curvature_radius", &curvature_radius, py::arg("a"), py::arg("t"));
  m.def("shape_metrics", &shape_metrics, py::arg("a"));

  py::class_<JacobsthalCoeffs>(m, "JacobsthalCoeffs")
      .def_readonly("values", &JacobsthalCoeffs::values)
      .def_readonly("ratio", &JacobsthalCoeffs::ratio);
  m.def("jacobsthal_sequence", &jacobsthal_sequence, py::arg("a"), py::arg("n"));
  m.def("jacobsthal_closed", &jacobsthal_closed, py::arg("a"), py::arg("ell"));
  m.def("growth_ratio", &growth_ratio, py::arg("a"));
  m.def("smoothness_threshold", &smoothness_threshold, py::arg("k"));
  m.def("max_smoothness", &max_smoothness, py::arg("a"));
  m.attr("INFINITE_SMOOTHNESS") = infinite_smoothness;
  m.def(
      "rational_sqrt",
      [](int k) {
        const Rational r = rational_sqrt(k);
        return py::make_tuple(r.num, r.den);
      },
      py::arg("k"), "Exact numerator/denominator of sqrt(a^2+a) at threshold k");
  m.def("tail_sum", &tail_sum, py::arg("a"), py::arg("n"));

  py::class_<SpectralSeries>(m, "SpectralSeries")
      .def(py::init<>())
      .def(py::init(&series_from_dict), py::arg("terms"))
      .def("set", &SpectralSeries::set, py::arg("k"), py::arg("c"))
      .def("add", &SpectralSeries::add, py::arg("k"), py::arg("c"))
      .def("at", &SpectralSeries::at, py::arg("k"))
      .def("__getitem__", &SpectralSeries::at)
      .def("__setitem__", &SpectralSeries::set)
      .def("__len__", &SpectralSeries::size)
      .def("prune", &SpectralSeries::prune, py::arg("eps") = default_prune)
      .def("norm", &SpectralSeries::norm)
      .def("max_abs_index", &SpectralSeries::max_abs_index)
      .def("to_dict",
           [](const SpectralSeries& s) {
             return std::map<std::int64_t, cplx>(s.terms().begin(),
                                                 s.terms().end());
           })
      .def("__repr__", [](const SpectralSeries& s) {
        return "SpectralSeries(" + std::to_string(s.size()) + " terms)";
      });

  py::class_<SampledLoop>(m, "SampledLoop")
      .def(py::init<>())
      .def_readwrite("samples", &SampledLoop::samples)
      .def("__len__", &SampledLoop::size);

  py::class_<Contour>(m, "Contour")
      .def(py::init<>())
      .def_readwrite("vertices", &Contour::vertices)
      .def("length", &Contour::length)
      .def("signed_area", &Contour::signed_area);

  m.def("analyze", &analyze, py::arg("loop"), py::arg("max_mode"),
        py::arg("prune_eps") = default_prune);
  m.def("synthesize", &synthesize, py::arg("series"), py::arg("sample_count"));
  m.def("evaluate", &evaluate, py::arg("series"), py::arg("t"));
  m.def("dilate", &dilate, py::arg("series"), py::arg("factor"));
  m.def("truncate", &tricontour::truncate, py::arg("series"),
        py::arg("max_mode"));
  m.def("loop_norm", &loop_norm, py::arg("loop"));
  m.def("loop_distance", &loop_distance, py::arg("f"), py::arg("g"));
  m.def("resample_arclength", &resample_arclength, py::arg("contour"),
        py::arg("sample_count"));

  py::class_<OperatorConfig>(m, "OperatorConfig")
      .def(py::init([](WidthParam a, int n, double prune_eps) {
             return OperatorConfig{a, n, prune_eps};
           }),
           py::arg("a"), py::arg("n") = 0, py::arg("prune_eps") = default_prune)
      .def_readwrite("a", &OperatorConfig::a)
      .def_readwrite("n", &OperatorConfig::n)
      .def_readwrite("prune_eps", &OperatorConfig::prune_eps);

  m.def("triangle_mode_spectrum", &triangle_mode_spectrum, py::arg("k"),
        py::arg("a"));
  m.def("triangle_transform", &triangle_transform, py::arg("f"), py::arg("a"),
        py::arg("prune_eps") = default_prune);
  m.def("truncated_inverse", &truncated_inverse, py::arg("f"), py::arg("cfg"));
  m.def("cw_coefficients", &cw_coefficients, py::arg("f"), py::arg("cfg"),
        py::arg("max_index"));
  m.def("cw_synthesize", &cw_synthesize, py::arg("coefficients"), py::arg("a"),
        py::arg("sample_count"));
  m.def("cw_inner_product", &cw_inner_product, py::arg("f"), py::arg("g"),
        py::arg("cfg"));

  m.def("inverse_sine_partial", &inverse_sine_partial, py::arg("a"),
        py::arg("n"), py::arg("t"));
  m.def("inverse_cosine_partial", &inverse_cosine_partial, py::arg("a"),
        py::arg("n"), py::arg("t"));
  py::class_<QuotientTableRow>(m, "QuotientTableRow")
      .def_readonly("n", &QuotientTableRow::n)
      .def_readonly("t_n", &QuotientTableRow::t_n)
      .def_readonly("quotient", &QuotientTableRow::quotient)
      .def_readonly("bound", &QuotientTableRow::bound);
  m.def("diff_quotient_table", &diff_quotient_table, py::arg("n_max"),
        py::arg("terms"), py::arg("a") = WidthParam(0.125));
  py::class_<CkWitness>(m, "CkWitness")
      .def_readonly("partial_sum", &CkWitness::partial_sum)
      .def_readonly("ratio", &CkWitness::ratio)
      .def_readonly("increments", &CkWitness::increments);
  m.def("ck_convergence_witness", &ck_convergence_witness, py::arg("a"),
        py::arg("k"), py::arg("terms"));

  m.def("parse_svg_path", &parse_svg_path, py::arg("path_data"));
  m.def("extract_path_data", &extract_path_data, py::arg("svg_document"));
  py::class_<RenderOptions>(m, "RenderOptions")
      .def(py::init<>())
      .def_readwrite("stroke_width", &RenderOptions::stroke_width)
      .def_readwrite("canvas_width", &RenderOptions::canvas_width)
      .def_readwrite("canvas_height", &RenderOptions::canvas_height)
      .def_readwrite("margin", &RenderOptions::margin)
      .def_readwrite("samples_out", &RenderOptions::samples_out);
  m.def("emit_svg", &emit_svg, py::arg("loops"),
        py::arg("options") = RenderOptions{}, py::arg("closed") = true);

  py::class_<GlyphDocument>(m, "GlyphDocument")
      .def(py::init<>())
      .def_readwrite("contours", &GlyphDocument::contours)
      .def_readwrite("source_name", &GlyphDocument::source_name);
  m.def("parse_points_csv", &parse_points_csv, py::arg("text"));
  m.def("normalize", &normalize, py::arg("contour"));
  m.def("load_glyph", &load_glyph, py::arg("path"));
  m.def("truncate_glyph", &truncate_glyph, py::arg("doc"), py::arg("max_mode"),
        py::arg("sample_count"));
  m.def("transform_glyph", &transform_glyph, py::arg("doc"), py::arg("a"),
        py::arg("n"), py::arg("max_mode"), py::arg("sample_count"));
  m.def("minimal_transform_samples", &minimal_transform_samples, py::arg("n"),
        py::arg("max_mode"));
  m.def("sweep_filename", &sweep_filename, py::arg("a"), py::arg("n"));

  m.def("spectrum_to_json", &spectrum_to_json, py::arg("series"));
  m.def("spectrum_from_json", &spectrum_from_json, py::arg("text"));
}
