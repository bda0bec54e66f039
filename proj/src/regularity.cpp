#include "tricontour/regularity.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tricontour {

double inverse_sine_partial(WidthParam a, int n, double t) {
  if (n < 0) fail(errc::invalid_parameter, "truncation depth must be >= 0");
  const auto j = jacobsthal_sequence(a, n).values;
  // sin is odd, so (-1)^l j_l sin((-1)^l 2^l t) collapses to j_l sin(2^l t).
  double acc = 0.0;
  for (int l = 0; l <= n; ++l) {
    acc += j[static_cast<std::size_t>(l)] * std::sin(std::ldexp(t, l));
  }
  return acc;
}

double inverse_cosine_partial(WidthParam a, int n, double t) {
  if (n < 0) fail(errc::invalid_parameter, "truncation depth must be >= 0");
  const auto j = jacobsthal_sequence(a, n).values;
  double acc = 0.0;
  for (int l = 0; l <= n; ++l) {
    const double term = j[static_cast<std::size_t>(l)] * std::cos(std::ldexp(t, l));
    acc += (l % 2 == 0) ? term : -term;
  }
  return acc;
}

std::vector<QuotientTableRow> diff_quotient_table(int n_max, int terms,
                                                  WidthParam a) {
  if (n_max < 1) fail(errc::invalid_parameter, "n_max must be >= 1");
  if (terms < n_max) {
    fail(errc::insufficient_terms,
         "quotients at t_n = pi/2^n need at least n series terms: terms = " +
             std::to_string(terms) + " < n_max = " + std::to_string(n_max));
  }
  std::vector<QuotientTableRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double t_n = std::ldexp(std::numbers::pi, -n);
    QuotientTableRow row;
    row.n = n;
    row.t_n = t_n;
    row.quotient = inverse_sine_partial(a, terms, t_n) / t_n;
    row.bound = 2.0 * n / (3.0 * std::numbers::pi);
    rows.push_back(row);
  }
  return rows;
}

CkWitness ck_convergence_witness(WidthParam a, int k, int terms) {
  if (k < 0) fail(errc::invalid_parameter, "derivative order must be >= 0");
  if (terms < 2) fail(errc::invalid_parameter, "need at least 2 terms");
  const auto j = jacobsthal_sequence(a, terms).values;
  CkWitness w;
  w.ratio = std::ldexp(growth_ratio(a), k);
  w.increments.reserve(j.size());
  double sum = 0.0;
  for (int l = 0; l <= terms; ++l) {
    // ldexp(j_l, k*l) forms 2^{kl} j_l without materializing 2^{kl}.
    const double inc = std::ldexp(j[static_cast<std::size_t>(l)], k * l);
    w.increments.push_back(inc);
    sum += inc;
  }
  w.partial_sum = sum;
  return w;
}

}  // namespace tricontour
