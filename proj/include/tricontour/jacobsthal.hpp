#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "tricontour/geometry.hpp"

namespace tricontour {

// Weight sequence of the inverse-operator series:
//   j_0 = 1,  j_1 = 2a,  j_n = a * (2*j_{n-1} + j_{n-2}).
// At a = 1 this is the classic Jacobsthal recurrence; here a < 1/3 keeps the
// generated series summable. Every truncation bound in the library is phrased
// in terms of these numbers.
struct JacobsthalCoeffs {
  WidthParam a;
  std::vector<double> values;  // j_0 .. j_n
  double ratio;                // asymptotic growth a + sqrt(a^2 + a)
};

JacobsthalCoeffs jacobsthal_sequence(WidthParam a, int n);

// Binet-style closed form ((a+s)^{l+1} - (a-s)^{l+1}) / (2s), s = sqrt(a^2+a).
// Undefined at a = 0 (s = 0); the recurrence gives 1, 0, 0, ... there.
double jacobsthal_closed(WidthParam a, int ell);

// Limit of j_{l+1}/j_l: a + sqrt(a^2 + a). Below 1/2 iff a < 1/8.
double growth_ratio(WidthParam a);

// Largest shape parameter whose inverse series still converges after k
// derivatives: 1/(2^k * (2^k + 2)). k = 0 gives 1/3, k = 1 gives 1/8.
double smoothness_threshold(int k);

// Largest k with a < smoothness_threshold(k); infinite_smoothness at a = 0.
int max_smoothness(WidthParam a);

inline constexpr int infinite_smoothness = std::numeric_limits<int>::max();

struct Rational {
  std::int64_t num;
  std::int64_t den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// sqrt(a^2 + a) is rational exactly at the smoothness thresholds:
// at a = smoothness_threshold(k) it equals (2^k + 1) / (2^k * (2^k + 2)).
Rational rational_sqrt(int k);

// Upper bound on sum_{l > n} j_l. The geometric majorization j_{n+1}/(1-r)
// is only used if consecutive ratios stay below r on the inspected range,
// which never happens for a > 0 (ratios oscillate around r), so in practice
// the tail is summed directly until terms drop below 1e-18.
double tail_sum(WidthParam a, int n);

}  // namespace tricontour
