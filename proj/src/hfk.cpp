#include "hfk.hpp"

namespace khexp {

LaurentPoly hfk_divisor() {
  LaurentPoly d;
  d.add_term({0, 2, 0}, 1);
  d.add_term({0, 0, -1}, 2);
  d.add_term({0, -2, -2}, 1);
  return d;
}

HfkExpansion hfk_extract(const LaurentPoly& h) {
  if (h.uses(Var::a)) fail(Errc::invalid_argument, "hfk_extract: input uses variable a");
  // q^2 = -t^-1 kills (q + t^-1 q^-1)^2, so only the constant 1 survives.
  LaurentPoly r = reduce_mod_quadratic(h, SignedMonomial{-1, {0, 0, -1}}, Var::q);
  if (r.term_count() != 1) fail(Errc::no_gamma, "reduction is not a single term");
  const auto& [e, c] = *r.terms().begin();
  if (e.a != 0 || e.q != 0) fail(Errc::no_gamma, "reduction is not a pure power of t");
  bool odd = ((e.t % 2) + 2) % 2 == 1;
  if (c != (odd ? Int(-1) : Int(1)))
    fail(Errc::no_gamma, "reduction is not a signed power (-t)^m");
  HfkExpansion out;
  out.gamma = -e.t;
  // Divisibility by the full square is a single exact division.
  LaurentPoly numerator = neg_t_power(out.gamma) * h - LaurentPoly::one();
  out.kf = exact_divide(numerator, hfk_divisor(), Var::q);
  return out;
}

LaurentPoly hfk_reconstruct(int gamma, const LaurentPoly& kf) {
  return neg_t_power(-gamma) * (LaurentPoly::one() + kf * hfk_divisor());
}

LaurentPoly alternating_hfk(const LaurentPoly& alexander, int sigma) {
  if (alexander.uses(Var::a) || alexander.uses(Var::t))
    fail(Errc::invalid_argument, "alternating_hfk: Alexander polynomial must be in q");
  if (sigma % 2 != 0) fail(Errc::bad_signature, "alternating_hfk: sigma must be even");
  LaurentPoly out;
  for (const auto& [e, c] : alexander.terms()) {
    int s = e.q;
    out.add_term({0, 2 * s, s + sigma / 2}, abs(c));
  }
  return out;
}

std::pair<LaurentPoly, HfkExpansion> whitehead_fig8(int n) {
  if (n < 0) fail(Errc::invalid_argument, "whitehead_fig8: n must be >= 0");
  LaurentPoly one_plus_tinv;
  one_plus_tinv.add_term({}, 1);
  one_plus_tinv.add_term({0, 0, -1}, 1);
  LaurentPoly factor = one_plus_tinv.pow(n);
  Int scale = Int(1) << n;

  LaurentPoly bracket;  // t q^2 + 2 + t^-1 q^-2
  bracket.add_term({0, 2, 1}, 1);
  bracket.add_term({}, 2);
  bracket.add_term({0, -2, -1}, 1);

  LaurentPoly hfk = LaurentPoly::one() + LaurentPoly::constant(scale) * factor * bracket;
  HfkExpansion exp;
  exp.gamma = 0;
  exp.kf = LaurentPoly::term(scale, {0, 0, 1}) * factor;
  return {hfk, exp};
}

std::pair<LaurentPoly, HfkExpansion> whitehead_torus(int m) {
  if (m < 1) fail(Errc::invalid_argument, "whitehead_torus: m must be >= 1");
  // (1 - t^-2m)/(1 - t^-2) expanded as the finite geometric sum.
  LaurentPoly geom;
  for (int j = 0; j < m; ++j) geom.add_term({0, 0, -2 * j}, 1);

  LaurentPoly hfk;
  hfk.add_term({0, 2, 0}, 2 * m);
  hfk.add_term({0, 0, -1}, 4 * m - 1);
  hfk.add_term({0, -2, -2}, 2 * m);
  LaurentPoly tail;
  tail.add_term({0, 2, -1}, 2);
  tail.add_term({0, 0, -2}, 4);
  tail.add_term({0, -2, -3}, 2);
  hfk += tail * geom;

  HfkExpansion exp;
  exp.gamma = 1;
  LaurentPoly kf = LaurentPoly::term(-2 * m, {0, 0, 1});
  kf -= LaurentPoly::constant(2) * geom;
  exp.kf = kf;
  return {hfk, exp};
}

}  // namespace khexp
