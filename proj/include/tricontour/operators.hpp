#pragma once

#include <cstdint>
#include <map>

#include "tricontour/jacobsthal.hpp"
#include "tricontour/spectral.hpp"

namespace tricontour {

struct OperatorConfig {
  WidthParam a;
  int n = 0;  // truncation depth of the inverse series
  double prune_eps = default_prune;
};

// Spectrum of the k-th basis curve t -> triangle_point(a, kt):
// {k: 1, -2k: 2a, 4k: -a}.
SpectralSeries triangle_mode_spectrum(std::int64_t k, WidthParam a);

// The basis-exchange operator f -> f + 2a*f(-2t) - a*f(4t) on spectra:
// each mode {m: c} contributes {m: c, -2m: 2ac, 4m: -ac}. Sends the circular
// harmonic e^{ikt} to the k-th triangle curve.
SpectralSeries triangle_transform(const SpectralSeries& f, WidthParam a,
                                  double prune_eps = default_prune);

// n-term truncation of the inverse of triangle_transform:
// sum_{l=0}^{n} (-1)^l j_l f((-2)^l t), accumulated in ascending l so
// results are bit-reproducible. Exact inverse in the limit for a < 1/8.
SpectralSeries truncated_inverse(const SpectralSeries& f,
                                 const OperatorConfig& cfg);

// Coefficients of f in the triangle-curve frame: the truncated-inverse
// spectrum restricted to |k| <= max_index. Missing keys mean zero.
std::map<std::int64_t, cplx> cw_coefficients(const SpectralSeries& f,
                                             const OperatorConfig& cfg,
                                             std::int64_t max_index);

// Evaluate sum_k ctilde_k * triangle_point(a, kt) on the equispaced grid.
// Requires sample_count > 8 * max|k| (the transform quadruples indices).
SampledLoop cw_synthesize(const std::map<std::int64_t, cplx>& ctilde,
                          WidthParam a, int sample_count);

// Parseval pairing of the truncated-inverse images of f and g: the inner
// product induced by the triangle frame at depth n.
cplx cw_inner_product(const SpectralSeries& f, const SpectralSeries& g,
                      const OperatorConfig& cfg);

}  // namespace tricontour
