#include "cyclotomic.hpp"

namespace khexp {

LaurentPoly block_a(int i) {
  LaurentPoly p;
  p.add_term({1, i, 0}, 1);
  p.add_term({-1, -i, -1}, 1);
  return p;
}

LaurentPoly block_b(int i) {
  LaurentPoly p;
  p.add_term({1, i, 2}, 1);
  p.add_term({-1, -i, -1}, 1);
  return p;
}

SignedMonomial quadratic_of_block_a() { return {-1, {0, 2, -1}}; }

SignedMonomial quadratic_of_block_b(int i) { return {-1, {0, -2 * i, -3}}; }

LaurentPoly basis_term(int N, int k) {
  if (k < 1 || k > N) fail(Errc::invalid_argument, "basis_term: need 1 <= k <= N");
  LaurentPoly out = block_a(-1) * qbinom_product(N, k, 1);
  for (int i = 1; i <= k; ++i) out = out * block_b(N + i - 1);
  return out;
}

LaurentPoly reconstruct(int alpha, std::span<const LaurentPoly> H, int N) {
  if (N < 0) fail(Errc::invalid_argument, "reconstruct: negative color");
  if (static_cast<int>(H.size()) < N)
    fail(Errc::invalid_argument, "reconstruct: need H_1..H_N");
  LaurentPoly acc = LaurentPoly::one();
  for (int k = 1; k <= N; ++k) acc += H[k - 1] * basis_term(N, k);
  return neg_t_power(-N * alpha) * acc;
}

int determine_alpha(const LaurentPoly& P1) {
  LaurentPoly r = reduce_mod_quadratic(P1, quadratic_of_block_a());
  if (r.term_count() != 1) fail(Errc::no_alpha, "N=1 reduction is not a single term");
  const auto& [e, c] = *r.terms().begin();
  if (e.a != 0 || e.q != 0)
    fail(Errc::no_alpha, "N=1 reduction is not a pure power of t");
  bool odd = ((e.t % 2) + 2) % 2 == 1;
  if (c != (odd ? Int(-1) : Int(1)))
    fail(Errc::no_alpha, "N=1 reduction is not a signed power (-t)^m");
  return -e.t;
}

ExpansionResult extract(std::span<const LaurentPoly> P) {
  if (P.empty()) fail(Errc::invalid_argument, "extract: no input polynomials");
  ExpansionResult res;
  res.alpha = determine_alpha(P[0]);
  for (int N = 1; N <= static_cast<int>(P.size()); ++N) {
    LaurentPoly D = neg_t_power(N * res.alpha) * P[N - 1] - LaurentPoly::one();
    for (int k = 1; k < N; ++k) D -= res.H[k - 1] * basis_term(N, k);
    res.H.push_back(exact_divide(D, basis_term(N, N), Var::a));
  }
  res.verified_up_to = static_cast<int>(P.size());
  return res;
}

ExpansionResult extract(std::span<const PolyRecord> records) {
  if (records.empty()) fail(Errc::invalid_argument, "extract: no input records");
  std::vector<LaurentPoly> P;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const PolyRecord& r = records[i];
    if (r.family != PolyFamily::homfly_super)
      fail(Errc::invalid_argument, "extract: records must be homfly-super");
    if (r.knot != records[0].knot)
      fail(Errc::invalid_argument, "extract: records must share a knot");
    if (r.color != static_cast<int>(i) + 1)
      fail(Errc::invalid_argument, "extract: colors must be consecutive from 1");
    P.push_back(r.poly);
  }
  return extract(std::span<const LaurentPoly>(P));
}

bool certify_n1(const LaurentPoly& P1, int alpha) {
  LaurentPoly shifted = neg_t_power(alpha) * P1;
  return reduce_mod_quadratic(shifted, quadratic_of_block_a()).is_one() &&
         reduce_mod_quadratic(shifted, quadratic_of_block_b(1)).is_one();
}

bool congruence_check(const LaurentPoly& P_N, const LaurentPoly& P_M, int N, int M,
                      int shift_N, int shift_M) {
  if (N < 1 || M < 1) fail(Errc::invalid_argument, "congruence_check: colors must be >= 1");
  LaurentPoly D = neg_t_power(shift_N) * P_N - neg_t_power(shift_M) * P_M;
  return reduce_mod_quadratic(D, quadratic_of_block_a()).is_zero() &&
         reduce_mod_quadratic(D, quadratic_of_block_b(N + M)).is_zero();
}

LaurentPoly specialize_su_n(const LaurentPoly& p, int n) {
  return substitute(p, Var::a, SignedMonomial{1, {0, n, 0}});
}

LaurentPoly decategorify(const LaurentPoly& p) {
  return substitute(p, Var::t, SignedMonomial{-1, {}});
}

LaurentPoly figure_eight_super(int N) {
  if (N < 0) fail(Errc::invalid_argument, "figure_eight_super: negative color");
  LaurentPoly out = LaurentPoly::one();
  LaurentPoly chain = LaurentPoly::one();  // prod_{i<=k} A_{i-2} B_{N+i-1}
  for (int k = 1; k <= N; ++k) {
    chain = chain * block_a(k - 2) * block_b(N + k - 1);
    out += qbinom_product(N, k, 1) * chain;
  }
  return out;
}

LaurentPoly figure_eight_jones_habiro(int N) {
  LaurentPoly out = LaurentPoly::one();
  LaurentPoly chain = LaurentPoly::one();
  for (int k = 1; k <= N; ++k) {
    chain = chain * qnum(N + 1 - k) * qnum(N + 1 + k);
    out += chain;
  }
  return out;
}

}  // namespace khexp
