#pragma once

// Kauffman-homology analogue of the expansion engine.  The conjectured
// expansion lives in the squared-variable picture:
//   (-t)^{N beta} F_N(a^2, q^2, t)
//     = 1 + sum_k F_k(a,q,t) A_{-1}(a,q,t) prod_i ({2(N+1-i)}/{2i})
//       B_{N+i-2}(a^2, q^2, t),
// with the extra law that F_1 is divisible by taq + t^-1 a^-1 q^-1.

#include <span>
#include <vector>

#include "corpus.hpp"
#include "laurent.hpp"

namespace khexp {

struct KauffmanExpansion {
  int beta = 0;
  std::vector<LaurentPoly> F;   // F_1..F_Nmax
  LaurentPoly f1_quotient;      // F_1 / (taq + t^-1 a^-1 q^-1), exact
  int verified_up_to = 0;
};

// a -> a^2, q -> q^2 and its inverse (inverse fails on odd exponents).
LaurentPoly to_squared(const LaurentPoly& p);
LaurentPoly from_squared(const LaurentPoly& p);

// taq + t^-1 a^-1 q^-1; vanishes exactly on a^2 = -t^-2 q^-2.
LaurentPoly f1_divisor();

// Basis term A_{-1}(a,q,t) ({2(N+1-i)}/{2i} products) B_{N+i-2}(a^2,q^2,t).
LaurentPoly kauffman_basis_term(int N, int k);

// F_N(K; a,q,t) rebuilt from (beta, F_1..F_N); the squared-picture polynomial
// is assembled and then unsquared.
LaurentPoly kauffman_reconstruct(int beta, std::span<const LaurentPoly> F, int N);

// Extraction from the colored Kauffman superpolynomials F_1..F_Nmax in their
// plain (a,q,t) variables.  Raises no_beta / not_divisible on expansion
// failure and f1_not_divisible when the F_1 clause fails.
KauffmanExpansion kauffman_extract(std::span<const LaurentPoly> F_polys);
KauffmanExpansion kauffman_extract(std::span<const PolyRecord> records);

// True iff F1 is divisible by taq + t^-1 a^-1 q^-1, decided by reduction in
// the quotient a^2 = -t^-2 q^-2.
bool f1_divisibility_check(const LaurentPoly& F1);

}  // namespace khexp
