#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "tricontour/errors.hpp"

namespace tricontour {

using cplx = std::complex<double>;

inline constexpr double default_prune = 1e-15;

// Finite sparse Fourier spectrum: mode index k -> amplitude c_k, meaning
// sum_k c_k e^{ikt}. Indices are 64-bit because dilation by powers of two
// pushes them far past 32 bits at useful truncation depths. No stored
// amplitude is ever exactly zero.
class SpectralSeries {
 public:
  SpectralSeries() = default;
  explicit SpectralSeries(std::map<std::int64_t, cplx> terms);

  void set(std::int64_t k, cplx c);   // c == 0 erases the mode
  void add(std::int64_t k, cplx c);   // accumulates; exact cancellation erases
  cplx at(std::int64_t k) const;      // 0 for absent modes

  // Ref-qualified so iterating the terms of a temporary series (whose map
  // would dangle before the loop body runs) is a compile error.
  const std::map<std::int64_t, cplx>& terms() const& { return terms_; }
  const std::map<std::int64_t, cplx>& terms() const&& = delete;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t max_abs_index() const;  // 0 when empty

  void prune(double eps);  // drop modes with |c| < eps (or exactly 0)

  // sqrt(sum |c_k|^2); equals the normalized L2 norm of the synthesized
  // function by Parseval.
  double norm() const;

 private:
  std::map<std::int64_t, cplx> terms_;
};

// Closed curve sampled at the N equispaced angles t_j = 2*pi*j/N.
struct SampledLoop {
  std::vector<cplx> samples;

  int size() const { return static_cast<int>(samples.size()); }
};

// Closed polyline; the edge back from vertices.back() to vertices.front() is
// implicit. Vertices are complex points x + iy.
struct Contour {
  std::vector<cplx> vertices;

  double length() const;       // perimeter including the closing edge
  double signed_area() const;  // shoelace; positive = counterclockwise
};

// Fourier coefficients c_k = (1/N) sum_j f(t_j) e^{-ik t_j} for |k| <= max_mode.
// Exact (up to roundoff) for loops bandlimited below the Nyquist mode.
// Requires N > 2*max_mode. Amplitudes below prune_eps are dropped.
SpectralSeries analyze(const SampledLoop& loop, int max_mode,
                       double prune_eps = default_prune);

// Evaluate the series on the equispaced grid. Requires
// sample_count > 2*max_abs_index so the result is alias-free.
SampledLoop synthesize(const SpectralSeries& series, int sample_count);

// Pointwise sum of the series at angle t.
cplx evaluate(const SpectralSeries& series, double t);

// Index relabeling k -> dilation*k, the spectral image of t -> f(dilation*t).
// Exact and alias-free for any nonzero integer dilation.
SpectralSeries dilate(const SpectralSeries& series, std::int64_t dilation);

// Keep modes with |k| <= max_mode.
SpectralSeries truncate(const SpectralSeries& series, std::int64_t max_mode);

// Normalized discrete L2 norm sqrt((1/N) sum |z_j|^2) and distance.
double loop_norm(const SampledLoop& loop);
double loop_distance(const SampledLoop& a, const SampledLoop& b);

// Resample a closed polyline at sample_count points equispaced in arc length,
// starting at vertex 0. Requires sample_count >= 8 and a contour with at
// least 3 vertices and positive perimeter.
SampledLoop resample_arclength(const Contour& contour, int sample_count);

}  // namespace tricontour
