#pragma once

// Cyclotomic-expansion engine for superpolynomials of colored HOMFLY-PT
// homology: basis construction, reconstruction, triangular coefficient
// extraction, the N=1 evaluation certificate, congruence checking, and the
// SU(n) / decategorified specializations.
//
// The expansion writes (-t)^{N alpha} P_N = 1 + sum_k H_k C_{N,k} over the
// basis C_{N,k} = A_{-1} prod_{i=1..k} ({N+1-i}/{i}) B_{N+i-1}, with
// A_i = a q^i + t^-1 a^-1 q^-i and B_i = t^2 a q^i + t^-1 a^-1 q^-i.

#include <span>
#include <vector>

#include "corpus.hpp"
#include "laurent.hpp"

namespace khexp {

// A_i and B_i building blocks.
LaurentPoly block_a(int i);
LaurentPoly block_b(int i);

// The two coprime quadratic factors of C_{1,1}: A_{-1} vanishes on
// a^2 = -t^-1 q^2 and B_1 on a^2 = -t^-3 q^-2.
SignedMonomial quadratic_of_block_a();        // a^2 = -t^-1 q^2
SignedMonomial quadratic_of_block_b(int i);   // a^2 = -t^-3 q^-2i, zero set of B_i

// C_{N,k} for 1 <= k <= N.
LaurentPoly basis_term(int N, int k);

struct ExpansionResult {
  int alpha = 0;
  std::vector<LaurentPoly> H;  // H_1..H_Nmax
  int verified_up_to = 0;
};

// P_N = (-t)^{-N alpha} (1 + sum_{k<=N} H_k C_{N,k}); N = 0 gives 1.
LaurentPoly reconstruct(int alpha, std::span<const LaurentPoly> H, int N);

// alpha from the N=1 quotient-ring reduction: r = P_1 mod (a^2 = -t^-1 q^2)
// must be a single term (-t)^m, and then alpha = -m.  Anything else raises
// no_alpha.  (C_{1,1} dies in that quotient, so the expansion forces this.)
int determine_alpha(const LaurentPoly& P1);

// Triangular extraction from P_1..P_Nmax; every exact division failure means
// the expansion fails for this data at that color.
ExpansionResult extract(std::span<const LaurentPoly> P);
// Record-level wrapper: validates a shared knot, homfly-super family, and
// consecutive colors from 1.
ExpansionResult extract(std::span<const PolyRecord> records);

// True iff (-t)^alpha P1 reduces to 1 in both quotients a^2 = -t^-1 q^2 and
// a^2 = -t^-3 q^-2; equivalent to the existence of the N=1 expansion since
// the two quadratics are coprime and their product is C_{1,1} up to a unit.
bool certify_n1(const LaurentPoly& P1, int alpha);

// Forms D = (-t)^{shift_N} P_N - (-t)^{shift_M} P_M and checks divisibility
// by both coprime factors of (a q^-1 + t^-1 a^-1 q)(t^2 a q^{N+M} +
// t^-1 a^-1 q^-{N+M}).  Shifts are caller-supplied: the congruence is stated
// with (-t)^{-Np} but the tabulated mirror convention satisfies (-t)^{+N
// alpha}.
bool congruence_check(const LaurentPoly& P_N, const LaurentPoly& P_M, int N, int M,
                      int shift_N, int shift_M);

// a -> q^n.
LaurentPoly specialize_su_n(const LaurentPoly& p, int n);
// t -> -1.
LaurentPoly decategorify(const LaurentPoly& p);

// Exact colored superpolynomial of the figure-eight knot:
// P_N = 1 + sum_k prod_{i=1..k} ({N+1-i}/{i}) A_{i-2} B_{N+i-1}.
// Its expansion has alpha = 0 and H_k = prod_{i=2..k} A_{i-2}.
LaurentPoly figure_eight_super(int N);

// The N+1-dimensional colored Jones of the figure-eight in Habiro's
// cyclotomic form, 1 + sum_k prod_{i=1..k} {N+1-i}{N+1+i}.
LaurentPoly figure_eight_jones_habiro(int N);

}  // namespace khexp
