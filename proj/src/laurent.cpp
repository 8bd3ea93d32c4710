#include "laurent.hpp"

#include <utility>

namespace khexp {

char var_name(Var v) {
  switch (v) {
    case Var::a: return 'a';
    case Var::q: return 'q';
    case Var::t: return 't';
  }
  return '?';
}

std::optional<Var> var_from_name(char c) {
  switch (c) {
    case 'a': return Var::a;
    case 'q': return Var::q;
    case 't': return Var::t;
    default: return std::nullopt;
  }
}

int Exponents::operator[](Var v) const {
  switch (v) {
    case Var::a: return a;
    case Var::q: return q;
    case Var::t: return t;
  }
  return 0;
}

int& Exponents::operator[](Var v) {
  switch (v) {
    case Var::q: return q;
    case Var::t: return t;
    default: return a;
  }
}

LaurentPoly LaurentPoly::constant(Int c) {
  LaurentPoly p;
  p.add_term({}, c);
  return p;
}

LaurentPoly LaurentPoly::term(Int c, Exponents e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int e) {
  Exponents ex;
  ex[v] = e;
  return term(1, ex);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{} &&
         terms_.begin()->second == 1;
}

Int LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& x) {
  LaurentPoly out;
  for (const auto& [e, c] : x.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  if (x.is_zero() || y.is_zero()) return out;
  // Iterate the smaller factor outermost; products here are typically a big
  // polynomial times a two-term building block.
  const LaurentPoly& small = x.term_count() <= y.term_count() ? x : y;
  const LaurentPoly& big = x.term_count() <= y.term_count() ? y : x;
  for (const auto& [es, cs] : small.terms_) {
    for (const auto& [eb, cb] : big.terms_) {
      out.add_term(es + eb, cs * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) fail(Errc::invalid_argument, "pow: negative exponent");
  LaurentPoly out = one();
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

bool LaurentPoly::uses(Var v) const {
  for (const auto& [e, c] : terms_) {
    if (e[v] != 0) return true;
  }
  return false;
}

std::pair<int, int> LaurentPoly::exponent_range(Var v) const {
  if (is_zero()) fail(Errc::invalid_argument, "exponent_range of zero polynomial");
  int lo = terms_.begin()->first[v];
  int hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e[v]);
    hi = std::max(hi, e[v]);
  }
  return {lo, hi};
}

SignedMonomial SignedMonomial::pow(int k) const {
  return {(k % 2 == 0) ? 1 : sign, exp.scaled(k)};
}

std::optional<SignedMonomial> SignedMonomial::from_poly(const LaurentPoly& p) {
  if (p.term_count() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  if (c == 1) return SignedMonomial{1, e};
  if (c == -1) return SignedMonomial{-1, e};
  return std::nullopt;
}

LaurentPoly substitute(const LaurentPoly& p, Var var, const SignedMonomial& target) {
  if (target.exp[var] != 0)
    fail(Errc::invalid_argument, "substitute: target involves the substituted variable");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    int k = e[var];
    Exponents ne = e;
    ne[var] = 0;
    ne = ne + target.exp.scaled(k);
    bool flip = target.sign < 0 && (k % 2 != 0);
    out.add_term(ne, flip ? Int(-c) : c);
  }
  return out;
}

LaurentPoly dilate(const LaurentPoly& p, Var var, int factor) {
  if (factor < 1) fail(Errc::invalid_argument, "dilate: factor must be >= 1");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ne[var] = e[var] * factor;
    out.add_term(ne, c);
  }
  return out;
}

LaurentPoly undilate(const LaurentPoly& p, Var var, int factor) {
  if (factor < 1) fail(Errc::invalid_argument, "undilate: factor must be >= 1");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[var] % factor != 0)
      fail(Errc::invalid_argument, "undilate: exponent not divisible by factor");
    Exponents ne = e;
    ne[var] = e[var] / factor;
    out.add_term(ne, c);
  }
  return out;
}

LaurentPoly reduce_mod_quadratic(const LaurentPoly& p, const SignedMonomial& r, Var var) {
  if (r.exp[var] != 0)
    fail(Errc::invalid_argument, "reduce_mod_quadratic: target involves the reduced variable");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    // e = 2k + rho with rho in {0,1}; var^e = (var^2)^k var^rho = r^k var^rho.
    int k = e[var] >= 0 ? e[var] / 2 : -((-e[var] + 1) / 2);
    int rho = e[var] - 2 * k;
    Exponents ne = e + r.exp.scaled(k);
    ne[var] = rho;
    bool flip = r.sign < 0 && (k % 2 != 0);
    out.add_term(ne, flip ? Int(-c) : c);
  }
  return out;
}

namespace {

// All terms of p with the given exponent of var, as a polynomial.
LaurentPoly slice_at(const LaurentPoly& p, Var var, int e) {
  LaurentPoly out;
  for (const auto& [ex, c] : p.terms()) {
    if (ex[var] == e) out.add_term(ex, c);
  }
  return out;
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d, Var principal) {
  if (d.is_zero()) fail(Errc::invalid_argument, "exact_divide: zero divisor");
  if (p.is_zero()) return {};

  auto [dlo, dhi] = d.exponent_range(principal);
  LaurentPoly lead = slice_at(d, principal, dhi);
  auto unit = SignedMonomial::from_poly(lead);
  if (!unit)
    fail(Errc::invalid_argument,
         "exact_divide: leading coefficient in the principal variable is not a unit");
  SignedMonomial inv = unit->inverse();

  // In an integral domain the extremal exponents of a product are additive,
  // so a true quotient has principal exponents in [plo - dlo, phi - dhi].
  auto [plo, phi] = p.exponent_range(principal);
  const int qmin = plo - dlo;

  LaurentPoly rem = p;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    auto [rlo, rhi] = rem.exponent_range(principal);
    int shift = rhi - dhi;
    if (shift < qmin) fail(Errc::not_divisible, "exact_divide: nonzero remainder");
    LaurentPoly top = slice_at(rem, principal, rhi);
    // tau = top / lead: multiply by the inverted unit monomial.
    LaurentPoly tau;
    for (const auto& [e, c] : top.terms()) {
      tau.add_term(e + inv.exp, inv.sign < 0 ? Int(-c) : c);
    }
    quot += tau;
    rem -= tau * d;
  }
  return quot;
}

LaurentPoly qnum(int p) {
  if (p == 0) return {};
  LaurentPoly out;
  out.add_term({0, p, 0}, 1);
  out.add_term({0, -p, 0}, -1);
  return out;
}

LaurentPoly qbinom_product(int N, int k, int step) {
  if (N < 0 || k < 0 || k > N) fail(Errc::invalid_argument, "qbinom_product: need 0 <= k <= N");
  if (step < 1) fail(Errc::invalid_argument, "qbinom_product: step must be >= 1");
  LaurentPoly num = LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  for (int i = 1; i <= k; ++i) {
    num = num * qnum(step * (N + 1 - i));
    den = den * qnum(step * i);
  }
  return exact_divide(num, den, Var::q);
}

LaurentPoly neg_t_power(int k) {
  return LaurentPoly::term((k % 2 == 0) ? 1 : -1, {0, 0, k});
}

const std::optional<std::complex<double>>& EvalPoint::operator[](Var v) const {
  switch (v) {
    case Var::q: return q;
    case Var::t: return t;
    default: return a;
  }
}

std::optional<std::complex<double>>& EvalPoint::operator[](Var v) {
  switch (v) {
    case Var::q: return q;
    case Var::t: return t;
    default: return a;
  }
}

namespace {

using CLD = std::complex<long double>;

CLD pow_int(CLD base, long e) {
  if (e < 0) return CLD(1.0L) / pow_int(base, -e);
  CLD out(1.0L);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace

std::complex<double> eval_complex(const LaurentPoly& p, const EvalPoint& at) {
  std::array<CLD, 3> vals{};
  std::array<bool, 3> present{};
  for (Var v : kAllVars) {
    if (at[v]) {
      vals[static_cast<int>(v)] = CLD(at[v]->real(), at[v]->imag());
      present[static_cast<int>(v)] = true;
    }
  }
  for (Var v : kAllVars) {
    if (!p.uses(v)) continue;
    if (!present[static_cast<int>(v)])
      fail(Errc::invalid_argument, std::string("eval_complex: no value for variable ") +
                                       var_name(v));
  }

  // Kahan-compensated accumulation.
  CLD sum(0.0L), comp(0.0L);
  for (const auto& [e, c] : p.terms()) {
    CLD v(static_cast<long double>(c.convert_to<double>()));
    // Exact double conversion can overflow only far beyond this project's
    // coefficient sizes; convert_to<double> handles the big-int narrowing.
    for (Var var : kAllVars) {
      int ex = e[var];
      if (ex == 0) continue;
      CLD base = vals[static_cast<int>(var)];
      if (base == CLD(0.0L)) {
        if (ex < 0) fail(Errc::zero_base, "eval_complex: zero base with negative exponent");
        v = CLD(0.0L);
        break;
      }
      v *= pow_int(base, ex);
    }
    CLD y = v - comp;
    CLD t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace khexp
