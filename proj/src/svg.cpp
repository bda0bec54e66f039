#include "tricontour/svg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

namespace tricontour {

namespace {

constexpr int kCurveChords = 16;  // uniform subdivision per Bezier segment

struct PathParser {
  std::string_view data;
  std::size_t pos = 0;

  std::vector<Contour> contours;
  std::vector<cplx> subpath;
  cplx current{};
  cplx subpath_start{};
  bool in_subpath = false;
  std::size_t subpath_offset = 0;

  [[noreturn]] void error(errc code, const std::string& what,
                          std::size_t offset) const {
    fail(code, what + " at byte " + std::to_string(offset));
  }

  void skip_separators() {
    while (pos < data.size()) {
      const char c = data[pos];
      if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool at_number_start() const {
    if (pos >= data.size()) return false;
    const char c = data[pos];
    return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.';
  }

  double read_number() {
    skip_separators();
    const std::size_t start = pos;
    std::size_t begin = pos;
    // from_chars rejects a leading '+', which SVG permits
    if (begin < data.size() && data[begin] == '+') ++begin;
    double value = 0.0;
    const char* first = data.data() + begin;
    const char* last = data.data() + data.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      error(errc::unsupported_command, "malformed number", start);
    }
    pos = static_cast<std::size_t>(ptr - data.data());
    return value;
  }

  cplx read_pair() {
    const double x = read_number();
    const double y = read_number();
    return cplx(x, y);
  }

  void push_vertex(cplx z) {
    subpath.push_back(z);
    current = z;
  }

  void begin_subpath(cplx z, std::size_t offset) {
    if (in_subpath && !subpath.empty()) {
      error(errc::unclosed_subpath,
            "new subpath started before Z closed the previous one", offset);
    }
    subpath.clear();
    subpath_offset = offset;
    in_subpath = true;
    subpath_start = z;
    push_vertex(z);
  }

  void flatten_cubic(cplx p0, cplx p1, cplx p2, cplx p3) {
    for (int i = 1; i <= kCurveChords; ++i) {
      const double u = static_cast<double>(i) / kCurveChords;
      const double v = 1.0 - u;
      const cplx z = v * v * v * p0 + 3.0 * v * v * u * p1 +
                     3.0 * v * u * u * p2 + u * u * u * p3;
      push_vertex(z);
    }
  }

  void flatten_quadratic(cplx p0, cplx p1, cplx p2) {
    for (int i = 1; i <= kCurveChords; ++i) {
      const double u = static_cast<double>(i) / kCurveChords;
      const double v = 1.0 - u;
      const cplx z = v * v * p0 + 2.0 * v * u * p1 + u * u * p2;
      push_vertex(z);
    }
  }

  void close_subpath(std::size_t offset) {
    if (!in_subpath || subpath.empty()) {
      error(errc::empty_path, "Z with no open subpath", offset);
    }
    // Drop an explicit trailing copy of the start point.
    if (subpath.size() > 1 && std::abs(subpath.back() - subpath.front()) < 1e-9) {
      subpath.pop_back();
    }
    if (subpath.size() < 3) {
      error(errc::degenerate_contour,
            "closed subpath has fewer than 3 distinct vertices", offset);
    }
    Contour c;
    c.vertices = std::move(subpath);
    contours.push_back(std::move(c));
    subpath = {};
    in_subpath = false;
    current = subpath_start;
  }

  void run() {
    char command = '\0';
    while (true) {
      skip_separators();
      if (pos >= data.size()) break;
      const std::size_t offset = pos;
      const char c = data[pos];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        command = c;
        ++pos;
      } else if (at_number_start()) {
        if (command == '\0') {
          error(errc::unsupported_command, "number before any command", offset);
        }
        // implicit repetition; a repeated M means L
        if (command == 'M') command = 'L';
        if (command == 'm') command = 'l';
      } else {
        error(errc::unsupported_command,
              std::string("unexpected character '") + c + "'", offset);
      }

      switch (command) {
        case 'M': begin_subpath(read_pair(), offset); break;
        case 'm': begin_subpath(current + read_pair(), offset); break;
        case 'L': require_open(offset); push_vertex(read_pair()); break;
        case 'l': require_open(offset); push_vertex(current + read_pair()); break;
        case 'H': require_open(offset); push_vertex(cplx(read_number(), current.imag())); break;
        case 'h': require_open(offset); push_vertex(cplx(current.real() + read_number(), current.imag())); break;
        case 'V': require_open(offset); push_vertex(cplx(current.real(), read_number())); break;
        case 'v': require_open(offset); push_vertex(cplx(current.real(), current.imag() + read_number())); break;
        case 'C': {
          require_open(offset);
          const cplx p0 = current;
          const cplx p1 = read_pair();
          const cplx p2 = read_pair();
          const cplx p3 = read_pair();
          flatten_cubic(p0, p1, p2, p3);
          break;
        }
        case 'c': {
          require_open(offset);
          const cplx p0 = current;
          const cplx p1 = p0 + read_pair();
          const cplx p2 = p0 + read_pair();
          const cplx p3 = p0 + read_pair();
          flatten_cubic(p0, p1, p2, p3);
          break;
        }
        case 'Q': {
          require_open(offset);
          const cplx p0 = current;
          const cplx p1 = read_pair();
          const cplx p2 = read_pair();
          flatten_quadratic(p0, p1, p2);
          break;
        }
        case 'q': {
          require_open(offset);
          const cplx p0 = current;
          const cplx p1 = p0 + read_pair();
          const cplx p2 = p0 + read_pair();
          flatten_quadratic(p0, p1, p2);
          break;
        }
        case 'Z':
        case 'z':
          close_subpath(offset);
          command = '\0';
          break;
        default:
          error(errc::unsupported_command,
                std::string("unsupported command '") + command + "'", offset);
      }
    }
    if (in_subpath && !subpath.empty()) {
      error(errc::unclosed_subpath, "path data ended inside an open subpath",
            subpath_offset);
    }
    if (contours.empty()) {
      fail(errc::empty_path, "path data contains no closed subpath");
    }
  }

  void require_open(std::size_t offset) const {
    if (!in_subpath) {
      error(errc::unsupported_command, "drawing command before any M", offset);
    }
  }
};

void append_fixed(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  out += buf;
}

void append_general(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  out += buf;
}

}  // namespace

std::vector<Contour> parse_svg_path(const std::string& path_data) {
  PathParser p;
  p.data = path_data;
  p.run();
  return std::move(p.contours);
}

std::vector<std::string> extract_path_data(const std::string& svg_document) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tag = svg_document.find("<path", pos);
    if (tag == std::string::npos) break;
    const std::size_t tag_end = svg_document.find('>', tag);
    if (tag_end == std::string::npos) break;
    // locate d= inside the tag
    std::size_t p = tag + 5;
    while (p < tag_end) {
      if (svg_document[p] == 'd' &&
          (std::isspace(static_cast<unsigned char>(svg_document[p - 1])) ||
           svg_document[p - 1] == '"' || svg_document[p - 1] == '\'')) {
        std::size_t q = p + 1;
        while (q < tag_end && std::isspace(static_cast<unsigned char>(svg_document[q]))) ++q;
        if (q < tag_end && svg_document[q] == '=') {
          ++q;
          while (q < tag_end && std::isspace(static_cast<unsigned char>(svg_document[q]))) ++q;
          if (q < tag_end && (svg_document[q] == '"' || svg_document[q] == '\'')) {
            const char quote = svg_document[q];
            const std::size_t val_start = q + 1;
            const std::size_t val_end = svg_document.find(quote, val_start);
            if (val_end != std::string::npos && val_end < tag_end) {
              out.push_back(svg_document.substr(val_start, val_end - val_start));
              break;
            }
          }
        }
      }
      ++p;
    }
    pos = tag_end + 1;
  }
  return out;
}

void RenderOptions::validate() const {
  if (!(canvas_width > 0.0) || !(canvas_height > 0.0)) {
    fail(errc::invalid_parameter, "canvas dimensions must be positive");
  }
  if (margin < 0.0 || 2.0 * margin >= canvas_width || 2.0 * margin >= canvas_height) {
    fail(errc::invalid_parameter, "margin must satisfy 0 <= 2*margin < canvas");
  }
  if (samples_out < 64) {
    fail(errc::invalid_parameter, "samples_out must be >= 64");
  }
  if (!(stroke_width > 0.0)) {
    fail(errc::invalid_parameter, "stroke width must be positive");
  }
}

FitTransform compute_fit(const std::vector<SampledLoop>& loops,
                         const RenderOptions& opts) {
  opts.validate();
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool first = true;
  for (const SampledLoop& loop : loops) {
    for (const cplx& z : loop.samples) {
      if (first) {
        xmin = xmax = z.real();
        ymin = ymax = z.imag();
        first = false;
      } else {
        xmin = std::min(xmin, z.real());
        xmax = std::max(xmax, z.real());
        ymin = std::min(ymin, z.imag());
        ymax = std::max(ymax, z.imag());
      }
    }
  }
  if (first) fail(errc::empty_input, "no samples to fit");

  const double avail_w = opts.canvas_width - 2.0 * opts.margin;
  const double avail_h = opts.canvas_height - 2.0 * opts.margin;
  const double w = xmax - xmin;
  const double h = ymax - ymin;
  FitTransform fit;
  if (w > 0.0 && h > 0.0) {
    fit.scale = std::min(avail_w / w, avail_h / h);
  } else if (w > 0.0) {
    fit.scale = avail_w / w;
  } else if (h > 0.0) {
    fit.scale = avail_h / h;
  } else {
    fit.scale = 1.0;  // single point; any scale renders the same
  }
  fit.src_center = cplx((xmin + xmax) / 2.0, (ymin + ymax) / 2.0);
  fit.dst_center = cplx(opts.canvas_width / 2.0, opts.canvas_height / 2.0);
  return fit;
}

std::string emit_svg(const std::vector<SampledLoop>& loops,
                     const RenderOptions& opts, bool closed) {
  if (loops.empty()) fail(errc::empty_input, "no loops to render");
  for (const SampledLoop& loop : loops) {
    if (loop.samples.empty()) fail(errc::empty_input, "loop with no samples");
  }
  const FitTransform fit = compute_fit(loops, opts);

  std::string out;
  out.reserve(loops.size() * 32 * 40);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  append_general(out, opts.canvas_width);
  out += "\" height=\"";
  append_general(out, opts.canvas_height);
  out += "\" viewBox=\"0 0 ";
  append_general(out, opts.canvas_width);
  out += " ";
  append_general(out, opts.canvas_height);
  out += "\">\n";
  // One y-flip on the group keeps every path's data in math orientation.
  out += "<g transform=\"matrix(1 0 0 -1 0 ";
  append_general(out, opts.canvas_height);
  out += ")\" fill=\"none\" stroke=\"#000000\" stroke-width=\"";
  append_general(out, opts.stroke_width);
  out += "\">\n";
  for (const SampledLoop& loop : loops) {
    out += "<path d=\"";
    for (std::size_t i = 0; i < loop.samples.size(); ++i) {
      const cplx z = fit.apply(loop.samples[i]);
      out += (i == 0) ? "M " : " L ";
      append_fixed(out, z.real());
      out += " ";
      append_fixed(out, z.imag());
    }
    if (closed) out += " Z";
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace tricontour
