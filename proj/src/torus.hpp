#pragma once

// Torus-knot helpers: partition statistics, the M*_R hook-content product,
// and alpha(T(m,n)).
//
// M*_R lives in the variables (A, qt~, t~) with A = a sqrt(-t), qt~ = -qt and
// t~ = q.  To avoid adjoining a square root, everything is encoded over the
// (a, q, t) exponent slots with the a-slot holding A: the two proof
// evaluations a^2 = -q^2 t^-1 and a^2 = -q^-2 t^-3 become the quadratics
// A^2 = q^2 and A^2 = q^-2 t^-2, so no conversion back to a is ever needed.

#include <vector>

#include "laurent.hpp"

namespace khexp {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // must be weakly decreasing, positive

  static Partition row(int m);     // (m)
  static Partition column(int m);  // (1^m)

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const;  // |Q|
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// nu(Q) = sum_i (i-1) Q_i, so nu((m)) = 0 and nu((1^m)) = m(m-1)/2.
long long nu(const Partition& Q);

// M*_R held as an exact fraction: the expanded numerator product and the list
// of denominator hook factors.  The value is generally not a Laurent
// polynomial; the proof only ever needs the numerator's vanishing under the
// two quadratics, plus exact quotients in the cases where they do exist.
struct MStarProduct {
  LaurentPoly numerator;
  std::vector<LaurentPoly> denominator_factors;

  LaurentPoly denominator() const;
  // Divides the numerator by each denominator factor in turn; raises
  // not_divisible if the fraction is not a Laurent polynomial.
  LaurentPoly quotient() const;
  // Fraction multiply by num/den.
  MStarProduct times(const LaurentPoly& num, const LaurentPoly& den) const;
};

// The two evaluation quadratics of the proof, on the A-axis.
SignedMonomial mstar_eval_first();   // A^2 = q^2       (a^2 = -q^2 t^-1)
SignedMonomial mstar_eval_second();  // A^2 = q^-2 t^-2 (a^2 = -q^-2 t^-3)

// Cell (i,j) runs over R one-based; numerator factor A qt~^{j-1} t~^{1-i} -
// inverse, denominator factor qt~^{arm} t~^{leg+1} - inverse with
// arm = R_i - j and leg = R'_j - i.
MStarProduct mstar(const Partition& R);

// alpha(T(m,n)) = -(m-1)(n-1)/2 for coprime 1 <= m < n.
int torus_alpha(int m, int n);

}  // namespace khexp
