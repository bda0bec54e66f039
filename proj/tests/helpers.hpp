#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "tricontour/errors.hpp"
#include "tricontour/spectral.hpp"

namespace testutil {

using tricontour::cplx;

// Deterministic by default; TRICONTOUR_SEED overrides for fuzzing sessions.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("TRICONTOUR_SEED")) {
    return std::strtoull(s, nullptr, 10);
  }
  return 20260819ull;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) {
  return std::mt19937_64(seed() + salt);
}

template <typename F>
std::optional<tricontour::errc> error_code_of(F&& f) {
  try {
    f();
  } catch (const tricontour::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

template <typename F>
std::string error_message_of(F&& f) {
  try {
    f();
  } catch (const tricontour::Error& e) {
    return e.what();
  }
  return {};
}

// Equispaced Riemann/trapezoid rule on [0, 2pi); exact for trig polynomials
// of degree below n.
template <typename F>
double periodic_integral(F&& f, int n) {
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    acc += f(2.0 * std::numbers::pi * j / n);
  }
  return acc * 2.0 * std::numbers::pi / n;
}

// Independent DFT used as the analysis oracle.
inline cplx brute_mode(const std::vector<cplx>& samples, std::int64_t k) {
  const std::size_t n = samples.size();
  cplx acc{};
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                         static_cast<double>(j) / static_cast<double>(n);
    acc += samples[j] * cplx(std::cos(angle), std::sin(angle));
  }
  return acc / static_cast<double>(n);
}

inline tricontour::SpectralSeries random_series(
    std::mt19937_64& gen, const std::vector<std::int64_t>& modes) {
  std::uniform_real_distribution<double> mag(0.3, 1.0);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  tricontour::SpectralSeries s;
  for (std::int64_t k : modes) {
    s.set(k, std::polar(mag(gen), arg(gen)));
  }
  return s;
}

inline std::vector<std::int64_t> random_modes(std::mt19937_64& gen, int count,
                                              std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> pick(lo, hi);
  std::vector<std::int64_t> modes;
  while (static_cast<int>(modes.size()) < count) {
    const std::int64_t k = pick(gen);
    bool dup = false;
    for (std::int64_t m : modes) dup = dup || (m == k);
    if (!dup) modes.push_back(k);
  }
  return modes;
}

// Bezier oracles evaluated by repeated linear interpolation.
inline cplx de_casteljau_cubic(cplx p0, cplx p1, cplx p2, cplx p3, double u) {
  auto lerp = [](cplx a, cplx b, double t) { return a + (b - a) * t; };
  const cplx a = lerp(p0, p1, u);
  const cplx b = lerp(p1, p2, u);
  const cplx c = lerp(p2, p3, u);
  return lerp(lerp(a, b, u), lerp(b, c, u), u);
}

inline cplx de_casteljau_quadratic(cplx p0, cplx p1, cplx p2, double u) {
  auto lerp = [](cplx a, cplx b, double t) { return a + (b - a) * t; };
  return lerp(lerp(p0, p1, u), lerp(p1, p2, u), u);
}

// Coefficient-wise L2 distance between two sparse spectra.
inline double series_distance(const tricontour::SpectralSeries& f,
                              const tricontour::SpectralSeries& g) {
  tricontour::SpectralSeries diff = f;
  for (const auto& [k, c] : g.terms()) diff.add(k, -c);
  return diff.norm();
}

}  // namespace testutil
