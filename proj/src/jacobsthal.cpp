#include "tricontour/jacobsthal.hpp"

#include <algorithm>
#include <cmath>

namespace tricontour {

JacobsthalCoeffs jacobsthal_sequence(WidthParam a, int n) {
  if (n < 0) fail(errc::invalid_parameter, "sequence length must be >= 0");
  const double av = a.value();
  std::vector<double> j;
  j.reserve(static_cast<std::size_t>(n) + 1);
  j.push_back(1.0);
  if (n >= 1) j.push_back(2.0 * av);
  for (int i = 2; i <= n; ++i) j.push_back(av * (2.0 * j[i - 1] + j[i - 2]));
  return JacobsthalCoeffs{a, std::move(j), growth_ratio(a)};
}

double jacobsthal_closed(WidthParam a, int ell) {
  if (ell < 0) fail(errc::invalid_parameter, "index must be >= 0");
  const double av = a.value();
  if (av == 0.0) {
    fail(errc::degenerate_parameter,
         "closed form needs a > 0; at a = 0 the sequence is 1, 0, 0, ...");
  }
  const double s = std::sqrt(av * av + av);
  return (std::pow(av + s, ell + 1) - std::pow(av - s, ell + 1)) / (2.0 * s);
}

double growth_ratio(WidthParam a) {
  const double av = a.value();
  return av + std::sqrt(av * av + av);
}

double smoothness_threshold(int k) {
  if (k < 0) fail(errc::invalid_parameter, "derivative order must be >= 0");
  const double p = std::ldexp(1.0, k);
  return 1.0 / (p * (p + 2.0));
}

int max_smoothness(WidthParam a) {
  if (a.value() == 0.0) return infinite_smoothness;
  int k = 0;
  while (a.value() < smoothness_threshold(k + 1)) ++k;
  return k;
}

Rational rational_sqrt(int k) {
  if (k < 0 || k > 30) {
    fail(errc::invalid_parameter,
         "order must lie in [0, 30] to stay within 64-bit integers");
  }
  const std::int64_t p = std::int64_t{1} << k;
  return Rational{p + 1, p * (p + 2)};
}

double tail_sum(WidthParam a, int n) {
  if (n < 0) fail(errc::invalid_parameter, "truncation depth must be >= 0");
  const double av = a.value();
  if (av == 0.0) return 0.0;  // j_l = 0 for l >= 1

  const double r = growth_ratio(a);
  if (!(r < 1.0)) {
    fail(errc::divergent_tail,
         "growth ratio " + std::to_string(r) + " >= 1, tail diverges");
  }

  // Inspect enough ratios for the geometric check to be meaningful even at
  // small n. It fails for every a > 0 (j_2/j_1 = 2a + 1/2 > r always), which
  // is exactly why the majorization j_{n+1}/(1-r) cannot be trusted here.
  const int probe = std::max(n + 1, 8);
  const auto seq = jacobsthal_sequence(a, probe).values;
  bool geometric = true;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] > r * seq[i - 1]) {
      geometric = false;
      break;
    }
  }
  if (geometric) return seq[static_cast<std::size_t>(n) + 1] / (1.0 - r);

  // Sum the tail directly; terms decay like r^l, so this terminates fast.
  double prev = seq[n];
  double cur = seq[static_cast<std::size_t>(n) + 1];
  double sum = 0.0;
  while (cur >= 1e-18) {
    sum += cur;
    const double next = av * (2.0 * cur + prev);
    prev = cur;
    cur = next;
  }
  return sum;
}

}  // namespace tricontour
