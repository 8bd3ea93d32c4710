#pragma once

// Numerical side: the SU(n)-specialized figure-eight superpolynomial at roots
// of unity, the two volume-limit estimators, the Lobachevsky function, and
// the k_m window check.
//
// Conventions follow the product form: with bt = b - 1,
//   P_{N-1}(4_1; q^n, q, q^{-(N+n-2)}) at q = e^{i pi/(N+bt)}
//     = 1 + sum_{j=1}^{N-1} g(N,j),  g(N,j) = prod_{k<=j} f(N,k),
// and the admissibility condition is b >= 1 with (n-1-b)/2 not a positive
// integer (it keeps the third sine factor away from zero).

#include <complex>

#include "laurent.hpp"

namespace khexp {

bool is_admissible(int n, int b);
void require_admissible(int n, int b);  // raises inadmissible

// f(N,k) = 4 [sin(((n-2+bt)/2+k)pi/nu)/sin(k pi/nu)] sin((k+bt)pi/nu)
//          sin((-(n-2-bt)/2+k)pi/nu) with nu = N + bt.
double f_factor(int N, int k, int n, int b);

// 1 + sum_{j=1}^{N-1} g(N,j); real by construction, accumulated with
// compensated summation.
double specialized_fig8_sum(int N, int n, int b);

// The evaluation point for color N: q = e^{i pi/(N+b)}, t = q^{-(N+n-1)},
// a = q^n.
EvalPoint specialization_point(int N, int n, int b);

struct VolumeEstimate {
  int n = 0, b = 0, N = 0;
  std::complex<double> value_ratio;   // 2 pi log(P_N / P_{N-1})
  std::complex<double> value_direct;  // 2 pi log(P_N) / (N+1)
};

// Both estimators from the partial sums at colors N and N-1 (i.e. the sums
// with parameters N+1 and N).  Non-positive sums raise log_nonpositive
// rather than silently picking a branch.
VolumeEstimate limit_estimate(int n, int b, int N);

// Lobachevsky function Lambda(theta) = (1/2) sum_{k>=1} sin(2 k theta)/k^2,
// truncated once the Dirichlet-test tail bound drops below 1e-15.
double lobachevsky(double theta);

// 6 Lambda(pi/3), the hyperbolic volume of the figure-eight complement.
double figure_eight_volume();

struct KmWindow {
  int k_m = 0;       // argmax of |g(N,k)| located by direct scan
  int lo = 0, hi = 0;  // floor(5/6 (N+bt) - (3(n-2)+7bt)/4), floor(... + (n-2-bt)/2)
  bool ok = false;
};

KmWindow km_bound_check(int n, int b, int N);

}  // namespace khexp
