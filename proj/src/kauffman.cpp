#include "kauffman.hpp"

#include "cyclotomic.hpp"

namespace khexp {

LaurentPoly to_squared(const LaurentPoly& p) {
  return dilate(dilate(p, Var::a, 2), Var::q, 2);
}

LaurentPoly from_squared(const LaurentPoly& p) {
  return undilate(undilate(p, Var::a, 2), Var::q, 2);
}

LaurentPoly f1_divisor() {
  LaurentPoly d;
  d.add_term({1, 1, 1}, 1);
  d.add_term({-1, -1, -1}, 1);
  return d;
}

namespace {

// B_i(a^2, q^2, t)
LaurentPoly block_b_squared(int i) {
  LaurentPoly p;
  p.add_term({2, 2 * i, 2}, 1);
  p.add_term({-2, -2 * i, -1}, 1);
  return p;
}

}  // namespace

LaurentPoly kauffman_basis_term(int N, int k) {
  if (k < 1 || k > N) fail(Errc::invalid_argument, "kauffman_basis_term: need 1 <= k <= N");
  LaurentPoly out = block_a(-1) * qbinom_product(N, k, 2);
  for (int i = 1; i <= k; ++i) out = out * block_b_squared(N + i - 2);
  return out;
}

LaurentPoly kauffman_reconstruct(int beta, std::span<const LaurentPoly> F, int N) {
  if (N < 0) fail(Errc::invalid_argument, "kauffman_reconstruct: negative color");
  if (static_cast<int>(F.size()) < N)
    fail(Errc::invalid_argument, "kauffman_reconstruct: need F_1..F_N");
  LaurentPoly acc = LaurentPoly::one();
  for (int k = 1; k <= N; ++k) acc += F[k - 1] * kauffman_basis_term(N, k);
  return from_squared(neg_t_power(-N * beta) * acc);
}

namespace {

int determine_beta(const LaurentPoly& G1) {
  LaurentPoly r = reduce_mod_quadratic(G1, quadratic_of_block_a());
  if (r.term_count() != 1) fail(Errc::no_beta, "N=1 reduction is not a single term");
  const auto& [e, c] = *r.terms().begin();
  if (e.a != 0 || e.q != 0) fail(Errc::no_beta, "N=1 reduction is not a pure power of t");
  bool odd = ((e.t % 2) + 2) % 2 == 1;
  if (c != (odd ? Int(-1) : Int(1)))
    fail(Errc::no_beta, "N=1 reduction is not a signed power (-t)^m");
  return -e.t;
}

}  // namespace

KauffmanExpansion kauffman_extract(std::span<const LaurentPoly> F_polys) {
  if (F_polys.empty()) fail(Errc::invalid_argument, "kauffman_extract: no input");
  std::vector<LaurentPoly> G;
  G.reserve(F_polys.size());
  for (const auto& f : F_polys) G.push_back(to_squared(f));

  KauffmanExpansion res;
  res.beta = determine_beta(G[0]);
  for (int N = 1; N <= static_cast<int>(G.size()); ++N) {
    LaurentPoly D = neg_t_power(N * res.beta) * G[N - 1] - LaurentPoly::one();
    for (int k = 1; k < N; ++k) D -= res.F[k - 1] * kauffman_basis_term(N, k);
    res.F.push_back(exact_divide(D, kauffman_basis_term(N, N), Var::a));
  }
  try {
    res.f1_quotient = exact_divide(res.F[0], f1_divisor(), Var::a);
  } catch (const Error& e) {
    if (e.code() == Errc::not_divisible)
      fail(Errc::f1_not_divisible, "F_1 is not divisible by taq + t^-1 a^-1 q^-1");
    throw;
  }
  res.verified_up_to = static_cast<int>(G.size());
  return res;
}

KauffmanExpansion kauffman_extract(std::span<const PolyRecord> records) {
  if (records.empty()) fail(Errc::invalid_argument, "kauffman_extract: no input records");
  std::vector<LaurentPoly> F;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const PolyRecord& r = records[i];
    if (r.family != PolyFamily::kauffman_super)
      fail(Errc::invalid_argument, "kauffman_extract: records must be kauffman-super");
    if (r.knot != records[0].knot)
      fail(Errc::invalid_argument, "kauffman_extract: records must share a knot");
    if (r.color != static_cast<int>(i) + 1)
      fail(Errc::invalid_argument, "kauffman_extract: colors must be consecutive from 1");
    F.push_back(r.poly);
  }
  return kauffman_extract(std::span<const LaurentPoly>(F));
}

bool f1_divisibility_check(const LaurentPoly& F1) {
  // taq + t^-1 a^-1 q^-1 = a^-1 q^-1 t^-1 (t^2 a^2 q^2 + 1)
  SignedMonomial r{-1, {0, -2, -2}};  // a^2 = -t^-2 q^-2
  return reduce_mod_quadratic(F1, r).is_zero();
}

}  // namespace khexp
