#pragma once

// Heegaard-Floer Poincare-polynomial expansion engine plus closed-form
// generators for alternating knots and Whitehead doubles.
//
// The expansion writes (-t)^gamma HFK(K; q^2, t) = 1 + KF(K;q,t)
// (q + t^-1 q^-1)^2.  All polynomials here live in q, t; the q-grading keeps
// the q^2 convention of the tables (even q-exponents throughout).

#include <utility>

#include "laurent.hpp"

namespace khexp {

struct HfkExpansion {
  int gamma = 0;
  LaurentPoly kf;
};

// (q + t^-1 q^-1)^2 = q^2 + 2 t^-1 + t^-2 q^-2.
LaurentPoly hfk_divisor();

// gamma comes from reducing h modulo q^2 = -t^-1 (where the divisor has its
// double root) and demanding a single term (-t)^{-gamma}; KF then comes from
// one exact division by the expanded square.
HfkExpansion hfk_extract(const LaurentPoly& h);

LaurentPoly hfk_reconstruct(int gamma, const LaurentPoly& kf);

// Ozsvath-Szabo form for alternating (and quasi-alternating) knots: from
// Delta(q) = sum a_s q^s with sigma even, HFK(q^2,t) = sum |a_s| t^{s+sigma/2}
// q^{2s}.  Setting t = -1 recovers +-Delta(q^2).
LaurentPoly alternating_hfk(const LaurentPoly& alexander, int sigma);

// n-th iterated untwisted Whitehead double of the figure-eight knot:
// HFK = 1 + 2^n (1+t^-1)^n (t q^2 + 2 + t^-1 q^-2), gamma = 0,
// KF = 2^n t (1+t^-1)^n.
std::pair<LaurentPoly, HfkExpansion> whitehead_fig8(int n);

// Untwisted Whitehead double of T(2,2m+1):
// HFK = 2m q^2 + (4m-1) t^-1 + 2m t^-2 q^-2
//       + (2 t^-1 q^2 + 4 t^-2 + 2 t^-3 q^-2) sum_{j<m} t^-2j,
// gamma = 1, KF = -2m t - 2 sum_{j<m} t^-2j.
std::pair<LaurentPoly, HfkExpansion> whitehead_torus(int m);

}  // namespace khexp
