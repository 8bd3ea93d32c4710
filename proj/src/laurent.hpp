#pragma once

// Exact trivariate Laurent polynomial ring Z[a^{±1}, q^{±1}, t^{±1}].
//
// Values are immutable once built and safe to share across threads.  The term
// map is the canonical form: no zero coefficients are ever stored and the
// iteration order is lexicographic on the exponent triple (e_a, e_q, e_t), so
// two polynomials are equal iff their term maps are equal.

#include <array>
#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace khexp {

// Coefficients are arbitrary-precision integers: every division in this
// project is exact and the data products can in principle outgrow 64 bits.
using Int = boost::multiprecision::cpp_int;

enum class Var : int { a = 0, q = 1, t = 2 };

constexpr std::array<Var, 3> kAllVars{Var::a, Var::q, Var::t};

char var_name(Var v);
std::optional<Var> var_from_name(char c);

struct Exponents {
  int a = 0;
  int q = 0;
  int t = 0;

  int operator[](Var v) const;
  int& operator[](Var v);

  friend Exponents operator+(const Exponents& x, const Exponents& y) {
    return {x.a + y.a, x.q + y.q, x.t + y.t};
  }
  friend Exponents operator-(const Exponents& x, const Exponents& y) {
    return {x.a - y.a, x.q - y.q, x.t - y.t};
  }
  Exponents scaled(int k) const { return {k * a, k * q, k * t}; }

  // Lexicographic on (e_a, e_q, e_t); this is the canonical display order.
  auto operator<=>(const Exponents&) const = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Int>;

  LaurentPoly() = default;

  static LaurentPoly constant(Int c);
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly term(Int c, Exponents e);
  static LaurentPoly variable(Var v, int e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Int coeff(const Exponents& e) const;
  // Accumulates c into the coefficient at e, pruning zeros eagerly.
  void add_term(const Exponents& e, const Int& c);

  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator-(const LaurentPoly& x);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);

  // Power by a nonnegative integer.
  LaurentPoly pow(int n) const;

  bool uses(Var v) const;
  // Pre: !is_zero().
  std::pair<int, int> exponent_range(Var v) const;

 private:
  TermMap terms_;
};

// An invertible monomial with sign, e.g. -t^{-1}q^2.  Substitution and
// quotient-ring targets are always of this shape.
struct SignedMonomial {
  int sign = 1;  // +1 or -1
  Exponents exp;

  SignedMonomial inverse() const { return {sign, exp.scaled(-1)}; }
  friend SignedMonomial operator*(const SignedMonomial& x, const SignedMonomial& y) {
    return {x.sign * y.sign, x.exp + y.exp};
  }
  SignedMonomial pow(int k) const;
  LaurentPoly to_poly() const { return LaurentPoly::term(sign, exp); }
  // Recognizes a one-term polynomial with coefficient ±1.
  static std::optional<SignedMonomial> from_poly(const LaurentPoly& p);

  bool operator==(const SignedMonomial&) const = default;
};

// Replaces var by the target monomial; target must not involve var.  This is
// a ring homomorphism.
LaurentPoly substitute(const LaurentPoly& p, Var var, const SignedMonomial& target);

// Multiplies every exponent of var by factor (factor >= 1): the substitution
// var -> var^factor.
LaurentPoly dilate(const LaurentPoly& p, Var var, int factor);
// Inverse of dilate; fails with invalid_argument unless every exponent of var
// is divisible by factor.
LaurentPoly undilate(const LaurentPoly& p, Var var, int factor);

// Normal form in the quotient ring where var^2 = r (r a signed monomial in
// the other variables) and var stays invertible via var^{-1} = var * r^{-1}.
// Every term of the result has var-exponent 0 or 1.  The map is linear,
// idempotent, and multiplicative up to reduction; p is divisible by
// (var^2 - r) times a unit iff the result is zero.
LaurentPoly reduce_mod_quadratic(const LaurentPoly& p, const SignedMonomial& r,
                                 Var var = Var::a);

// Exact division: returns c with p = c * d.  The leading coefficient of d in
// the principal variable must be a signed monomial (a unit).  Fails with
// not_divisible when the remainder is nonzero.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d, Var principal);

// Quantum integer {p} = q^p - q^{-p}.
LaurentPoly qnum(int p);

// prod_{i=1..k} {step*(N+1-i)} / {step*i}, computed exactly as one quotient of
// the two expanded products.  Balanced Gaussian binomial [N choose k] in
// q^step: symmetric under q -> q^{-1} with nonnegative integer coefficients.
LaurentPoly qbinom_product(int N, int k, int step = 1);

// (-t)^k for any integer k.
LaurentPoly neg_t_power(int k);

struct EvalPoint {
  std::optional<std::complex<double>> a, q, t;

  const std::optional<std::complex<double>>& operator[](Var v) const;
  std::optional<std::complex<double>>& operator[](Var v);
};

// Sum of coeff * prod value^exponent, with integer-exponent powers (no branch
// cuts).  Accumulates in long double with compensated summation; for the
// polynomials in this project (<= a few hundred thousand terms, unit-modulus
// evaluation points) the relative error stays well under 1e-9.
// Fails with zero_base if a variable assigned 0 appears with a negative
// exponent, and invalid_argument if a used variable has no assignment.
std::complex<double> eval_complex(const LaurentPoly& p, const EvalPoint& at);

}  // namespace khexp
