// Command-line front end for the constant-width triangle series toolkit.
//
// Exit codes: 0 success, 2 unusable input (bad flags, malformed files),
// 3 violated precondition (parameter out of domain, sample budget too small).

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "tricontour/geometry.hpp"
#include "tricontour/glyph.hpp"
#include "tricontour/io.hpp"
#include "tricontour/jacobsthal.hpp"
#include "tricontour/operators.hpp"
#include "tricontour/regularity.hpp"
#include "tricontour/spectral.hpp"
#include "tricontour/svg.hpp"

namespace {

using namespace tricontour;

constexpr double pi = std::numbers::pi;

// Flag-level mistakes that CLI11 cannot catch (bad value syntax, missing
// companion flags). Reported like CLI11 parse errors: message, exit 2.
struct UsageError {
  std::string message;
};

double parse_real(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      std::size_t np = 0, dp = 0;
      const std::string ns = text.substr(0, slash);
      const std::string ds = text.substr(slash + 1);
      const double num = std::stod(ns, &np);
      const double den = std::stod(ds, &dp);
      if (np != ns.size() || dp != ds.size()) {
        throw UsageError{"cannot parse fraction '" + text + "'"};
      }
      if (den == 0.0) throw UsageError{"zero denominator in '" + text + "'"};
      return num / den;
    }
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw UsageError{"cannot parse real '" + text + "'"};
    return v;
  } catch (const std::invalid_argument&) {
    throw UsageError{"cannot parse real '" + text + "'"};
  } catch (const std::out_of_range&) {
    throw UsageError{"real value out of range: '" + text + "'"};
  }
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (tok.empty()) throw UsageError{"empty entry in list '" + text + "'"};
    out.push_back(parse_real(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError{"empty list '" + text + "'"};
  return out;
}

int parse_int(const std::string& text) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(text, &pos);
    if (pos != text.size()) throw UsageError{"cannot parse integer '" + text + "'"};
    return v;
  } catch (const std::invalid_argument&) {
    throw UsageError{"cannot parse integer '" + text + "'"};
  } catch (const std::out_of_range&) {
    throw UsageError{"integer out of range: '" + text + "'"};
  }
}

// Depth ranges are written "lo..hi" (inclusive) or as a single integer.
std::pair<int, int> parse_depth_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (hi < lo) throw UsageError{"empty depth range '" + text + "'"};
  return {lo, hi};
}

GlyphDocument load_input(const std::string& path, bool do_normalize) {
  GlyphDocument doc = load_glyph(path);
  if (do_normalize) {
    for (Contour& c : doc.contours) c = normalize(c);
  }
  return doc;
}

int default_analysis_samples(int max_mode) {
  return std::max(1024, 2 * max_mode + 1);
}

int default_transform_samples(int n, int max_mode) {
  const std::int64_t need = minimal_transform_samples(n, max_mode);
  if (need > std::numeric_limits<int>::max() - 1) {
    fail(errc::insufficient_samples,
         "depth " + std::to_string(n) + " with modes |k| <= " +
             std::to_string(max_mode) +
             " needs more samples than the synthesizer supports");
  }
  return std::max<int>(1024, static_cast<int>(need));
}

void write_svg_file(const std::string& path, const std::vector<SampledLoop>& loops,
                    const RenderOptions& opts, bool closed = true) {
  write_file(path, emit_svg(loops, opts, closed));
}

// ---- gamma ---------------------------------------------------------------

struct GammaArgs {
  std::string a;
  std::string svg_out;
  bool metrics = false;
};

int run_gamma(const GammaArgs& args) {
  const WidthParam a(parse_real(args.a));
  if (!args.svg_out.empty()) {
    RenderOptions opts;
    SampledLoop loop;
    loop.samples.reserve(opts.samples_out);
    for (int j = 0; j < opts.samples_out; ++j) {
      loop.samples.push_back(triangle_point(a, 2.0 * pi * j / opts.samples_out));
    }
    write_svg_file(args.svg_out, {loop}, opts);
    return 0;
  }
  const ShapeMetrics m = shape_metrics(a);
  std::printf("a\t%.17g\n", a.value());
  std::printf("regime\t%s\n", regime_name(m.convexity));
  std::printf("area\t%.17g\n", m.area);
  std::printf("perimeter\t%.17g\n", m.perimeter);
  std::printf("iso_ratio\t%.17g\n", m.iso_ratio);
  std::printf("min_curvature_radius\t%.17g\n", curvature_radius(a, 0.0));
  return 0;
}

// ---- truncate / transform ------------------------------------------------

struct TruncateArgs {
  std::string in;
  std::string out;
  int m = 0;
  int N = 0;  // 0 means "pick the default"
  bool normalize = false;
};

int run_truncate(const TruncateArgs& args) {
  const GlyphDocument doc = load_input(args.in, args.normalize);
  const int n_samples = args.N > 0 ? args.N : default_analysis_samples(args.m);
  const auto loops = truncate_glyph(doc, args.m, n_samples);
  write_svg_file(args.out, loops, RenderOptions{});
  return 0;
}

struct TransformArgs {
  std::string in;
  std::string out;
  std::string a;
  int n = 0;
  int m = 0;
  int N = 0;
  bool normalize = false;
};

int run_transform(const TransformArgs& args) {
  const WidthParam a(parse_real(args.a));
  const GlyphDocument doc = load_input(args.in, args.normalize);
  const int n_samples =
      args.N > 0 ? args.N : default_transform_samples(args.n, args.m);
  const auto loops = transform_glyph(doc, a, args.n, args.m, n_samples);
  write_svg_file(args.out, loops, RenderOptions{});
  return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string in;
  std::string outdir;
  std::string a;  // comma-separated list; empty means the default study grid
  std::string n;  // "lo..hi" range; empty means the default study grid
  int m = 0;
  int N = 0;
  bool normalize = false;
};

int run_sweep(const SweepArgs& args) {
  // (shape parameter, depth range) pairs of the default study grid
  std::vector<std::pair<double, std::pair<int, int>>> grid;
  if (args.a.empty() != args.n.empty()) {
    throw UsageError{"sweep needs --a and --n together (or neither for the default grid)"};
  }
  if (args.a.empty()) {
    grid = {{1.0 / 24, {0, 3}}, {0.125, {0, 6}}, {0.2, {3, 6}}};
  } else {
    const auto range = parse_depth_range(args.n);
    for (double a : parse_real_list(args.a)) grid.push_back({a, range});
  }

  const GlyphDocument doc = load_input(args.in, args.normalize);
  std::filesystem::create_directories(args.outdir);
  const RenderOptions opts;
  for (const auto& [a_value, range] : grid) {
    const WidthParam a(a_value);
    for (int n = range.first; n <= range.second; ++n) {
      const int n_samples =
          args.N > 0 ? args.N : default_transform_samples(n, args.m);
      const auto loops = transform_glyph(doc, a, n, args.m, n_samples);
      const std::filesystem::path path =
          std::filesystem::path(args.outdir) / sweep_filename(a_value, n);
      write_svg_file(path.string(), loops, opts);
      std::printf("%s\n", path.string().c_str());
    }
  }
  return 0;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string in;
  std::string a;  // with --n: emit frame coefficients instead of plain ones
  int m = 0;
  int n = -1;
  int N = 0;
  bool normalize = false;
};

int run_analyze(const AnalyzeArgs& args) {
  const bool framed = !args.a.empty() || args.n >= 0;
  if (framed && (args.a.empty() || args.n < 0)) {
    throw UsageError{"analyze needs --a and --n together for frame coefficients"};
  }
  const GlyphDocument doc = load_input(args.in, args.normalize);
  const int n_samples = args.N > 0 ? args.N : default_analysis_samples(args.m);

  for (std::size_t i = 0; i < doc.contours.size(); ++i) {
    if (doc.contours.size() > 1) {
      std::printf("# contour %zu\n", i);
    }
    const SampledLoop loop = resample_arclength(doc.contours[i], n_samples);
    const SpectralSeries f = analyze(loop, args.m);
    if (framed) {
      const OperatorConfig cfg{WidthParam(parse_real(args.a)), args.n,
                               default_prune};
      for (const auto& [k, c] : cw_coefficients(f, cfg, args.m)) {
        std::printf("%lld\t%.17g\t%.17g\n", static_cast<long long>(k), c.real(),
                    c.imag());
      }
    } else {
      for (const auto& [k, c] : f.terms()) {
        std::printf("%lld\t%.17g\t%.17g\n", static_cast<long long>(k), c.real(),
                    c.imag());
      }
    }
  }
  return 0;
}

// ---- probe -----------------------------------------------------------------

struct ProbeArgs {
  bool coeffs = false;
  bool quotient = false;
  bool graphs = false;
  std::string a = "1/8";
  int len = 20;
  int nmax = 20;
  std::string out;
};

int run_probe(const ProbeArgs& args) {
  if (!args.coeffs && !args.quotient && !args.graphs) {
    throw UsageError{"probe needs at least one of --coeffs, --quotient, --graphs"};
  }
  if (args.coeffs) {
    const WidthParam a(parse_real(args.a));
    if (args.len < 0) throw UsageError{"--len must be >= 0"};
    const auto seq = jacobsthal_sequence(a, args.len + 1);
    std::printf("# ell\tj\tratio\n");
    for (int ell = 0; ell <= args.len; ++ell) {
      std::printf("%d\t%.17g\t%.17g\n", ell, seq.values[ell],
                  seq.values[ell + 1] / seq.values[ell]);
    }
  }
  if (args.quotient) {
    const WidthParam a(parse_real(args.a));
    const auto table = diff_quotient_table(args.nmax, args.nmax + 40, a);
    std::printf("# n\tt_n\tquotient\tbound\n");
    for (const QuotientTableRow& row : table) {
      std::printf("%d\t%.17g\t%.17g\t%.17g\n", row.n, row.t_n, row.quotient,
                  row.bound);
    }
  }
  if (args.graphs) {
    if (args.out.empty()) throw UsageError{"probe --graphs needs --out <dir>"};
    const WidthParam a(parse_real(args.a));
    std::filesystem::create_directories(args.out);
    const int depth = 24;
    const int samples = 2048;
    SampledLoop sine_graph, cosine_graph;
    for (int j = 0; j < samples; ++j) {
      const double t = -pi + 2.0 * pi * j / (samples - 1);
      sine_graph.samples.emplace_back(t, inverse_sine_partial(a, depth, t));
      cosine_graph.samples.emplace_back(t, inverse_cosine_partial(a, depth, t));
    }
    char name[64];
    const RenderOptions opts;
    std::snprintf(name, sizeof name, "rsin_a%.6g.svg", a.value());
    const auto sine_path = std::filesystem::path(args.out) / name;
    write_svg_file(sine_path.string(), {sine_graph}, opts, /*closed=*/false);
    std::printf("%s\n", sine_path.string().c_str());
    std::snprintf(name, sizeof name, "rcos_a%.6g.svg", a.value());
    const auto cosine_path = std::filesystem::path(args.out) / name;
    write_svg_file(cosine_path.string(), {cosine_graph}, opts, /*closed=*/false);
    std::printf("%s\n", cosine_path.string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-type series on constant-width triangle curves"};
  app.require_subcommand(1);

  GammaArgs gamma_args;
  CLI::App* gamma = app.add_subcommand(
      "gamma", "Emit the base curve as SVG or print its shape metrics");
  gamma->add_option("--a", gamma_args.a, "shape parameter in [0, 1/3)")->required();
  CLI::Option* gamma_svg =
      gamma->add_option("--svg", gamma_args.svg_out, "write the curve to this SVG file");
  gamma->add_flag("--metrics", gamma_args.metrics, "print shape metrics (default)")
      ->excludes(gamma_svg);

  TruncateArgs trunc_args;
  CLI::App* truncate = app.add_subcommand(
      "truncate", "Bandlimit a contour file and write the result as SVG");
  truncate->add_option("--in", trunc_args.in, "input .svg or .csv contour")->required();
  truncate->add_option("--m", trunc_args.m, "largest retained mode |k|")->required();
  truncate->add_option("--N", trunc_args.N, "resampling grid size");
  truncate->add_option("--out", trunc_args.out, "output SVG path")->required();
  truncate->add_flag("--normalize", trunc_args.normalize,
                     "center, rescale and orient each contour first");

  TransformArgs trans_args;
  CLI::App* transform = app.add_subcommand(
      "transform", "Run the transform + truncated inverse pipeline on a contour file");
  transform->add_option("--in", trans_args.in, "input .svg or .csv contour")->required();
  transform->add_option("--a", trans_args.a, "shape parameter in [0, 1/3)")->required();
  transform->add_option("--n", trans_args.n, "inversion depth")->required();
  transform->add_option("--m", trans_args.m, "largest analyzed mode |k|")->required();
  transform->add_option("--N", trans_args.N, "resampling grid size");
  transform->add_option("--out", trans_args.out, "output SVG path")->required();
  transform->add_flag("--normalize", trans_args.normalize,
                      "center, rescale and orient each contour first");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Write a grid of transformed SVGs over shape parameters and depths");
  sweep->add_option("--in", sweep_args.in, "input .svg or .csv contour")->required();
  sweep->add_option("--a", sweep_args.a,
                    "comma-separated shape parameters (default: study grid)");
  sweep->add_option("--n", sweep_args.n, "depth range lo..hi (default: study grid)");
  sweep->add_option("--m", sweep_args.m, "largest analyzed mode |k|")->required();
  sweep->add_option("--N", sweep_args.N, "resampling grid size");
  sweep->add_option("--outdir", sweep_args.outdir, "output directory")->required();
  sweep->add_flag("--normalize", sweep_args.normalize,
                  "center, rescale and orient each contour first");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Print contour coefficients as TSV (plain, or frame with --a --n)");
  analyze->add_option("--in", analyze_args.in, "input .svg or .csv contour")->required();
  analyze->add_option("--m", analyze_args.m, "largest reported mode |k|")->required();
  analyze->add_option("--a", analyze_args.a, "shape parameter for frame coefficients");
  analyze->add_option("--n", analyze_args.n, "inversion depth for frame coefficients");
  analyze->add_option("--N", analyze_args.N, "resampling grid size");
  analyze->add_flag("--normalize", analyze_args.normalize,
                    "center, rescale and orient each contour first");

  ProbeArgs probe_args;
  CLI::App* probe = app.add_subcommand(
      "probe", "Print weight tables, quotient tables, or partial-sum graphs");
  probe->add_flag("--coeffs", probe_args.coeffs, "print (ell, weight, ratio) TSV");
  probe->add_flag("--quotient", probe_args.quotient,
                  "print the difference-quotient table");
  probe->add_flag("--graphs", probe_args.graphs,
                  "write partial-sum graphs as SVG to --out");
  probe->add_option("--a", probe_args.a, "shape parameter (default 1/8)");
  probe->add_option("--len", probe_args.len, "last weight index (default 20)");
  probe->add_option("--nmax", probe_args.nmax, "last quotient row (default 20)");
  probe->add_option("--out", probe_args.out, "output directory for --graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gamma->parsed()) return run_gamma(gamma_args);
    if (truncate->parsed()) return run_truncate(trunc_args);
    if (transform->parsed()) return run_transform(trans_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (probe->parsed()) return run_probe(probe_args);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "%s\n", e.message.c_str());
    return 2;
  } catch (const tricontour::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return tricontour::is_parse_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
