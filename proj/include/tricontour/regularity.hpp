#pragma once

#include <vector>

#include "tricontour/jacobsthal.hpp"

namespace tricontour {

// Partial sum sum_{l=0}^{n} (-1)^l j_l sin((-1)^l 2^l t). The sign pairs
// merge, so this equals sum j_l sin(2^l t): a lacunary sine series whose
// smoothness is controlled by the growth ratio.
double inverse_sine_partial(WidthParam a, int n, double t);

// Cosine analogue sum_{l=0}^{n} (-1)^l j_l cos(2^l t); cosine is even, so the
// alternating signs survive.
double inverse_cosine_partial(WidthParam a, int n, double t);

struct QuotientTableRow {
  int n;
  double t_n;       // pi / 2^n
  double quotient;  // partial_sum(t_n) / t_n
  double bound;     // 2n / (3*pi)
};

// Difference quotients of the sine series at the dyadic angles t_n = pi/2^n
// for n = 1..n_max, evaluated with the given number of series terms
// (terms >= n_max required: fewer terms would cut the modes that make the
// quotient grow). Unbounded quotients certify the sum is not Lipschitz.
std::vector<QuotientTableRow> diff_quotient_table(int n_max, int terms,
                                                  WidthParam a = WidthParam(0.125));

// Convergence witness for k-th derivative control: partial sums of
// sum_l 2^{kl} j_l together with the governing ratio 2^k * growth_ratio(a).
// Increments eventually decay geometrically iff the ratio is below 1.
struct CkWitness {
  double partial_sum;
  double ratio;
  std::vector<double> increments;  // 2^{kl} j_l for l = 0..terms
};

CkWitness ck_convergence_witness(WidthParam a, int k, int terms);

}  // namespace tricontour
