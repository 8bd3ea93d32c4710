#include "torus.hpp"

#include <numeric>

namespace khexp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(Errc::invalid_argument, "Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(Errc::invalid_argument, "Partition: parts must be weakly decreasing");
  }
}

Partition Partition::row(int m) {
  if (m < 1) fail(Errc::invalid_argument, "Partition::row: m must be >= 1");
  return Partition({m});
}

Partition Partition::column(int m) {
  if (m < 1) fail(Errc::invalid_argument, "Partition::column: m must be >= 1");
  return Partition(std::vector<int>(m, 1));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++conj[j];
  }
  return Partition(std::move(conj));
}

long long nu(const Partition& Q) {
  long long out = 0;
  const auto& parts = Q.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += static_cast<long long>(i) * parts[i];
  }
  return out;
}

namespace {

// x - x^-1 for x = A^ea qt~^eqt t~^ett, expanded over (A, q, t) using
// qt~ = -qt and t~ = q.
LaurentPoly bracket(int ea, int eqt, int ett) {
  int sign = (eqt % 2 == 0) ? 1 : -1;
  LaurentPoly out;
  out.add_term({ea, eqt + ett, eqt}, sign);
  out.add_term({-ea, -eqt - ett, -eqt}, -sign);
  return out;
}

}  // namespace

LaurentPoly MStarProduct::denominator() const {
  LaurentPoly out = LaurentPoly::one();
  for (const auto& f : denominator_factors) out = out * f;
  return out;
}

LaurentPoly MStarProduct::quotient() const {
  LaurentPoly out = numerator;
  for (const auto& f : denominator_factors) {
    Var principal = f.uses(Var::a) ? Var::a : (f.uses(Var::q) ? Var::q : Var::t);
    out = exact_divide(out, f, principal);
  }
  return out;
}

MStarProduct MStarProduct::times(const LaurentPoly& num, const LaurentPoly& den) const {
  MStarProduct out = *this;
  out.numerator = out.numerator * num;
  out.denominator_factors.push_back(den);
  return out;
}

SignedMonomial mstar_eval_first() { return {1, {0, 2, 0}}; }

SignedMonomial mstar_eval_second() { return {1, {0, -2, -2}}; }

MStarProduct mstar(const Partition& R) {
  if (R.empty()) fail(Errc::invalid_argument, "mstar: partition must be nonempty");
  MStarProduct out;
  out.numerator = LaurentPoly::one();
  Partition conj = R.conjugate();
  const auto& rows = R.parts();
  const auto& cols = conj.parts();
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    for (int j = 1; j <= rows[i - 1]; ++j) {
      // numerator: A qt~^{j-1} t~^{1-i} - inverse
      out.numerator = out.numerator * bracket(1, j - 1, 1 - i);
      // denominator: qt~^{arm} t~^{leg+1} - inverse
      int arm = rows[i - 1] - j;
      int leg = cols[j - 1] - i;
      out.denominator_factors.push_back(bracket(0, arm, leg + 1));
    }
  }
  return out;
}

int torus_alpha(int m, int n) {
  if (m < 1 || n <= m) fail(Errc::invalid_argument, "torus_alpha: need 1 <= m < n");
  if (std::gcd(m, n) != 1) fail(Errc::not_coprime, "torus_alpha: m and n must be coprime");
  return -(m - 1) * (n - 1) / 2;
}

}  // namespace khexp
