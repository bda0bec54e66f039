#include "tricontour/glyph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "tricontour/io.hpp"

namespace tricontour {

namespace {

bool parse_double(std::string_view text, double& out) {
  std::size_t begin = 0;
  while (begin < text.size() && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
  std::size_t end = text.size();
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  if (begin == end) return false;
  if (text[begin] == '+') ++begin;
  const char* first = text.data() + begin;
  const char* last = text.data() + end;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Contour parse_points_csv(const std::string& text) {
  Contour contour;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
    if (!blank && line[line.find_first_not_of(" \t")] != '#') {
      const std::size_t comma = line.find(',');
      double x = 0.0, y = 0.0;
      if (comma == std::string_view::npos ||
          !parse_double(line.substr(0, comma), x) ||
          !parse_double(line.substr(comma + 1), y)) {
        fail(errc::malformed_row,
             "line " + std::to_string(line_no) + " is not \"x,y\"");
      }
      contour.vertices.emplace_back(x, y);
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (contour.vertices.size() < 3) {
    fail(errc::too_few_points, "a contour needs at least 3 points, got " +
                                   std::to_string(contour.vertices.size()));
  }
  return contour;
}

Contour normalize(const Contour& contour) {
  const std::size_t n = contour.vertices.size();
  if (n < 3) {
    fail(errc::degenerate_contour, "contour needs at least 3 vertices");
  }
  cplx centroid{};
  for (const cplx& v : contour.vertices) centroid += v;
  centroid /= static_cast<double>(n);

  Contour out;
  out.vertices.reserve(n);
  double max_mod = 0.0;
  for (const cplx& v : contour.vertices) {
    const cplx w = v - centroid;
    max_mod = std::max(max_mod, std::abs(w));
    out.vertices.push_back(w);
  }
  if (!(max_mod > 0.0)) {
    fail(errc::degenerate_contour, "all vertices coincide");
  }
  for (cplx& v : out.vertices) v /= max_mod;

  const double area = out.signed_area();
  if (area == 0.0) {
    fail(errc::degenerate_contour, "contour encloses no area");
  }
  if (area < 0.0) {
    // reverse to counterclockwise, keeping vertex 0 as the start point
    std::reverse(out.vertices.begin() + 1, out.vertices.end());
  }
  return out;
}

GlyphDocument load_glyph(const std::string& path) {
  GlyphDocument doc;
  doc.source_name = path;

  const auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  const std::string text = read_file(path);
  if (ext == ".svg") {
    const std::vector<std::string> paths = extract_path_data(text);
    if (paths.empty()) {
      fail(errc::empty_path, "no <path> elements in " + path);
    }
    for (const std::string& d : paths) {
      for (Contour& c : parse_svg_path(d)) doc.contours.push_back(std::move(c));
    }
  } else if (ext == ".csv") {
    doc.contours.push_back(parse_points_csv(text));
  } else {
    fail(errc::invalid_parameter,
         "unsupported input type \"" + ext + "\" (expected .svg or .csv)");
  }
  if (doc.contours.empty()) {
    fail(errc::empty_input, "no contours in " + path);
  }
  return doc;
}

std::vector<SampledLoop> truncate_glyph(const GlyphDocument& doc, int max_mode,
                                        int sample_count) {
  if (doc.contours.empty()) fail(errc::empty_input, "glyph has no contours");
  std::vector<SampledLoop> out;
  out.reserve(doc.contours.size());
  for (const Contour& contour : doc.contours) {
    const SampledLoop loop = resample_arclength(contour, sample_count);
    const SpectralSeries series = analyze(loop, max_mode);
    out.push_back(synthesize(series, sample_count));
  }
  return out;
}

std::int64_t minimal_transform_samples(int n, int max_mode) {
  if (n < 0 || n > 50 || max_mode < 0) {
    fail(errc::invalid_parameter, "need 0 <= n <= 50 and max_mode >= 0");
  }
  return 2 * (std::int64_t{1} << n) * 4 * max_mode + 1;
}

std::vector<SampledLoop> transform_glyph(const GlyphDocument& doc, WidthParam a,
                                         int n, int max_mode, int sample_count) {
  if (doc.contours.empty()) fail(errc::empty_input, "glyph has no contours");
  const std::int64_t minimal = minimal_transform_samples(n, max_mode);
  if (sample_count < minimal) {
    fail(errc::insufficient_samples,
         "depth n = " + std::to_string(n) + " with modes |k| <= " +
             std::to_string(max_mode) + " dilates indices up to " +
             std::to_string((minimal - 1) / 2) + "; minimal N = " +
             std::to_string(minimal) + ", got " + std::to_string(sample_count));
  }
  const OperatorConfig cfg{a, n, default_prune};
  std::vector<SampledLoop> out;
  out.reserve(doc.contours.size());
  for (const Contour& contour : doc.contours) {
    const SampledLoop loop = resample_arclength(contour, sample_count);
    const SpectralSeries series = analyze(loop, max_mode);
    const SpectralSeries framed = triangle_transform(series, a);
    const SpectralSeries inverted = truncated_inverse(framed, cfg);
    out.push_back(synthesize(inverted, sample_count));
  }
  return out;
}

std::string sweep_filename(double a, int n) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "a%.6g_n%d.svg", a, n);
  return buf;
}

}  // namespace tricontour
