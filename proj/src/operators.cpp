#include "tricontour/operators.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace tricontour {

namespace {

std::int64_t scaled_index(std::int64_t m, std::int64_t factor) {
  if (m != 0) {
    const std::int64_t limit = std::numeric_limits<std::int64_t>::max();
    if (std::abs(m) > limit / std::abs(factor)) {
      fail(errc::invalid_parameter, "mode index overflows 64 bits");
    }
  }
  return m * factor;
}

}  // namespace

SpectralSeries triangle_mode_spectrum(std::int64_t k, WidthParam a) {
  SpectralSeries s;
  s.set(k, 1.0);
  const double av = a.value();
  if (av != 0.0) {
    s.add(scaled_index(k, -2), 2.0 * av);
    s.add(scaled_index(k, 4), -av);
  }
  return s;
}

SpectralSeries triangle_transform(const SpectralSeries& f, WidthParam a,
                                  double prune_eps) {
  const double av = a.value();
  SpectralSeries out;
  for (const auto& [m, c] : f.terms()) {
    out.add(m, c);
    if (av != 0.0) {
      out.add(scaled_index(m, -2), 2.0 * av * c);
      out.add(scaled_index(m, 4), -av * c);
    }
  }
  out.prune(prune_eps);
  return out;
}

SpectralSeries truncated_inverse(const SpectralSeries& f,
                                 const OperatorConfig& cfg) {
  if (cfg.n < 0) fail(errc::invalid_parameter, "truncation depth must be >= 0");
  if (cfg.n > 62) {
    fail(errc::invalid_parameter,
         "truncation depth " + std::to_string(cfg.n) +
             " exceeds 62, dilation index would overflow 64 bits");
  }
  const auto j = jacobsthal_sequence(cfg.a, cfg.n).values;
  SpectralSeries out;
  std::int64_t dil = 1;  // (-2)^l, the dilation of term l
  for (int l = 0; l <= cfg.n; ++l) {
    const double w = (l % 2 == 0) ? j[static_cast<std::size_t>(l)]
                                  : -j[static_cast<std::size_t>(l)];
    if (w != 0.0) {
      for (const auto& [m, c] : f.terms()) {
        out.add(scaled_index(m, dil), w * c);
      }
    }
    if (l < cfg.n) dil *= -2;
  }
  out.prune(cfg.prune_eps);
  return out;
}

std::map<std::int64_t, cplx> cw_coefficients(const SpectralSeries& f,
                                             const OperatorConfig& cfg,
                                             std::int64_t max_index) {
  if (max_index < 0) fail(errc::invalid_parameter, "max_index must be >= 0");
  const SpectralSeries inv = truncated_inverse(f, cfg);
  std::map<std::int64_t, cplx> out;
  for (const auto& [k, c] : inv.terms()) {
    if (std::abs(k) <= max_index) out.emplace(k, c);
  }
  return out;
}

SampledLoop cw_synthesize(const std::map<std::int64_t, cplx>& ctilde,
                          WidthParam a, int sample_count) {
  std::int64_t top = 0;
  for (const auto& [k, c] : ctilde) top = std::max(top, std::abs(k));
  // The transform stretches indices by up to 4, so alias freedom needs
  // N > 8 * max|k| regardless of cancellations in the particular spectrum.
  if (sample_count < 2 || top > (sample_count - 1) / 8) {
    fail(errc::insufficient_samples,
         "synthesis in the triangle frame with max|k| = " + std::to_string(top) +
             " needs N > 8*|k|, got N = " + std::to_string(sample_count));
  }
  SpectralSeries s;
  for (const auto& [k, c] : ctilde) {
    if (c == cplx{}) continue;
    s.add(k, c);
    const double av = a.value();
    if (av != 0.0) {
      s.add(scaled_index(k, -2), 2.0 * av * c);
      s.add(scaled_index(k, 4), -av * c);
    }
  }
  s.prune(default_prune);
  return synthesize(s, sample_count);
}

cplx cw_inner_product(const SpectralSeries& f, const SpectralSeries& g,
                      const OperatorConfig& cfg) {
  const SpectralSeries rf = truncated_inverse(f, cfg);
  const SpectralSeries rg = truncated_inverse(g, cfg);
  const SpectralSeries& small = rf.size() <= rg.size() ? rf : rg;
  const SpectralSeries& large = rf.size() <= rg.size() ? rg : rf;
  cplx acc{};
  for (const auto& [k, c] : small.terms()) {
    const cplx other = large.at(k);
    if (other == cplx{}) continue;
    acc += (&small == &rf) ? c * std::conj(other) : other * std::conj(c);
  }
  return acc;
}

}  // namespace tricontour
