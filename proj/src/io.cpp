#include "tricontour/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace tricontour {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(errc::io_error, "cannot read " + path);
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) fail(errc::io_error, "cannot write " + path);
}

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

SampledLoop parse_loop_csv(const std::string& text) {
  SampledLoop loop;
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
      double re = 0.0, im = 0.0;
      if (comma == std::string_view::npos ||
          !parse_double(line.substr(0, comma), re) ||
          !parse_double(line.substr(comma + 1), im)) {
        fail(errc::malformed_row,
             "line " + std::to_string(line_no) + " is not \"re,im\"");
      }
      loop.samples.emplace_back(re, im);
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (loop.samples.size() < 2) {
    fail(errc::too_few_points, "a sampled loop needs at least 2 rows, got " +
                                   std::to_string(loop.samples.size()));
  }
  return loop;
}

std::string loop_to_csv(const SampledLoop& loop) {
  std::string out;
  out.reserve(loop.samples.size() * 48);
  char buf[96];
  for (const cplx& z : loop.samples) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", z.real(), z.imag());
    out += buf;
  }
  return out;
}

std::string spectrum_to_json(const SpectralSeries& series) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : series.terms()) {
    arr.push_back({k, c.real(), c.imag()});
  }
  return arr.dump();
}

SpectralSeries spectrum_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed_row, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    fail(errc::malformed_row, "spectrum JSON must be an array of [k, re, im]");
  }
  SpectralSeries out;
  std::set<std::int64_t> seen;
  std::size_t idx = 0;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number() ||
        !entry[1].is_number() || !entry[2].is_number()) {
      fail(errc::malformed_row,
           "entry " + std::to_string(idx) + " is not [k, re, im]");
    }
    const double kd = entry[0].get<double>();
    const std::int64_t k = entry[0].is_number_integer()
                               ? entry[0].get<std::int64_t>()
                               : static_cast<std::int64_t>(kd);
    if (!entry[0].is_number_integer() && static_cast<double>(k) != kd) {
      fail(errc::malformed_row,
           "entry " + std::to_string(idx) + " has a non-integer mode index");
    }
    if (!seen.insert(k).second) {
      fail(errc::malformed_row,
           "entry " + std::to_string(idx) + " repeats mode index " +
               std::to_string(k));
    }
    out.set(k, cplx(entry[1].get<double>(), entry[2].get<double>()));
    ++idx;
  }
  return out;
}

}  // namespace tricontour
