#include "tricontour/spectral.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace tricontour {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::int64_t checked_mul(std::int64_t k, std::int64_t m) {
  if (m != 0) {
    const std::int64_t limit = std::numeric_limits<std::int64_t>::max();
    if (std::abs(k) > limit / std::abs(m)) {
      fail(errc::invalid_parameter, "dilated mode index overflows 64 bits");
    }
  }
  return k * m;
}

}  // namespace

SpectralSeries::SpectralSeries(std::map<std::int64_t, cplx> terms)
    : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = (it->second == cplx{}) ? terms_.erase(it) : std::next(it);
  }
}

void SpectralSeries::set(std::int64_t k, cplx c) {
  if (c == cplx{}) {
    terms_.erase(k);
  } else {
    terms_[k] = c;
  }
}

void SpectralSeries::add(std::int64_t k, cplx c) {
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) it->second += c;
  if (it->second == cplx{}) terms_.erase(it);
}

cplx SpectralSeries::at(std::int64_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? cplx{} : it->second;
}

std::int64_t SpectralSeries::max_abs_index() const {
  if (terms_.empty()) return 0;
  const std::int64_t lo = terms_.begin()->first;
  const std::int64_t hi = terms_.rbegin()->first;
  return std::max(std::abs(lo), std::abs(hi));
}

void SpectralSeries::prune(double eps) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < eps || it->second == cplx{}) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

double SpectralSeries::norm() const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_) acc += std::norm(c);
  return std::sqrt(acc);
}

double Contour::length() const {
  const std::size_t n = vertices.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::abs(vertices[(i + 1) % n] - vertices[i]);
  }
  return acc;
}

double Contour::signed_area() const {
  const std::size_t n = vertices.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx& u = vertices[i];
    const cplx& v = vertices[(i + 1) % n];
    acc += u.real() * v.imag() - v.real() * u.imag();
  }
  return 0.5 * acc;
}

SpectralSeries analyze(const SampledLoop& loop, int max_mode, double prune_eps) {
  if (max_mode < 0) fail(errc::invalid_parameter, "max_mode must be >= 0");
  const int n = loop.size();
  if (n < 2 || n <= 2 * max_mode) {
    fail(errc::insufficient_samples,
         "analysis of modes |k| <= " + std::to_string(max_mode) + " needs N > " +
             std::to_string(2 * max_mode) + " samples, got " + std::to_string(n));
  }
  SpectralSeries out;
  for (std::int64_t k = -max_mode; k <= max_mode; ++k) {
    cplx acc{};
    for (int j = 0; j < n; ++j) {
      const double angle = -two_pi * static_cast<double>(k) * j / n;
      acc += loop.samples[static_cast<std::size_t>(j)] * std::polar(1.0, angle);
    }
    acc /= static_cast<double>(n);
    if (std::abs(acc) >= prune_eps) out.set(k, acc);
  }
  return out;
}

SampledLoop synthesize(const SpectralSeries& series, int sample_count) {
  const std::int64_t top = series.max_abs_index();
  if (sample_count < 2 || top > (sample_count - 1) / 2) {
    fail(errc::insufficient_samples,
         "alias-free synthesis of modes up to |k| = " + std::to_string(top) +
             " needs N > 2*|k|, got N = " + std::to_string(sample_count));
  }
  SampledLoop loop;
  loop.samples.resize(static_cast<std::size_t>(sample_count));
  for (int j = 0; j < sample_count; ++j) {
    const double t = two_pi * j / sample_count;
    cplx acc{};
    for (const auto& [k, c] : series.terms()) {
      acc += c * std::polar(1.0, static_cast<double>(k) * t);
    }
    loop.samples[static_cast<std::size_t>(j)] = acc;
  }
  return loop;
}

cplx evaluate(const SpectralSeries& series, double t) {
  cplx acc{};
  for (const auto& [k, c] : series.terms()) {
    acc += c * std::polar(1.0, static_cast<double>(k) * t);
  }
  return acc;
}

SpectralSeries dilate(const SpectralSeries& series, std::int64_t dilation) {
  if (dilation == 0) fail(errc::zero_dilation, "dilation index must be nonzero");
  SpectralSeries out;
  for (const auto& [m, c] : series.terms()) {
    out.set(checked_mul(dilation, m), c);
  }
  return out;
}

SpectralSeries truncate(const SpectralSeries& series, std::int64_t max_mode) {
  if (max_mode < 0) fail(errc::invalid_parameter, "max_mode must be >= 0");
  SpectralSeries out;
  for (const auto& [k, c] : series.terms()) {
    if (std::abs(k) <= max_mode) out.set(k, c);
  }
  return out;
}

double loop_norm(const SampledLoop& loop) {
  if (loop.samples.empty()) return 0.0;
  double acc = 0.0;
  for (const cplx& z : loop.samples) acc += std::norm(z);
  return std::sqrt(acc / static_cast<double>(loop.samples.size()));
}

double loop_distance(const SampledLoop& a, const SampledLoop& b) {
  if (a.size() != b.size()) {
    fail(errc::invalid_parameter,
         "loops must have equal sample counts, got " + std::to_string(a.size()) +
             " and " + std::to_string(b.size()));
  }
  if (a.samples.empty()) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    acc += std::norm(a.samples[i] - b.samples[i]);
  }
  return std::sqrt(acc / static_cast<double>(a.samples.size()));
}

SampledLoop resample_arclength(const Contour& contour, int sample_count) {
  if (sample_count < 8) {
    fail(errc::invalid_parameter, "resampling needs at least 8 samples");
  }
  const std::size_t nv = contour.vertices.size();
  if (nv < 3) {
    fail(errc::degenerate_contour, "contour needs at least 3 vertices, got " +
                                       std::to_string(nv));
  }

  std::vector<double> cumulative(nv + 1, 0.0);
  for (std::size_t i = 0; i < nv; ++i) {
    const double seg = std::abs(contour.vertices[(i + 1) % nv] - contour.vertices[i]);
    cumulative[i + 1] = cumulative[i] + seg;
  }
  const double total = cumulative[nv];
  if (!(total > 0.0) || !std::isfinite(total)) {
    fail(errc::degenerate_contour, "contour has zero or non-finite perimeter");
  }

  SampledLoop loop;
  loop.samples.resize(static_cast<std::size_t>(sample_count));
  std::size_t seg = 0;
  for (int i = 0; i < sample_count; ++i) {
    const double s = total * i / sample_count;
    while (seg + 1 < nv && cumulative[seg + 1] <= s) ++seg;
    const double seg_len = cumulative[seg + 1] - cumulative[seg];
    const double u = seg_len > 0.0 ? (s - cumulative[seg]) / seg_len : 0.0;
    const cplx a = contour.vertices[seg];
    const cplx b = contour.vertices[(seg + 1) % nv];
    loop.samples[static_cast<std::size_t>(i)] = a + (b - a) * u;
  }
  return loop;
}

}  // namespace tricontour
