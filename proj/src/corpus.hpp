#pragma once

// Data model, text format, and embedded datasets for the polynomial tables,
// plus lookup and validation services for the expansion engines.
//
// Text format, one polynomial per logical line: terms joined by '+', each
// term "coeff [a^i] [q^j] [t^k]" with signed decimal integers; whitespace
// insensitive.  Table exponents printed with the underline convention are
// encoded as negative exponents.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laurent.hpp"

namespace khexp {

LaurentPoly parse_poly(std::string_view text);
std::string serialize_poly(const LaurentPoly& p);

enum class PolyFamily : int {
  homfly_super = 0,
  kauffman_super = 1,
  hfk = 2,
  jones = 3,
};

enum class CoeffKind : int {
  alpha_h = 0,   // alpha with H_1, H_2, ... (colored HOMFLY-PT homology)
  beta_f = 1,    // beta with F_1, F_2, ... (colored Kauffman homology)
  gamma_kf = 2,  // gamma with KF (Heegaard-Floer)
};

std::string family_name(PolyFamily f);
std::optional<PolyFamily> family_from_name(std::string_view s);
std::string kind_name(CoeffKind k);
std::optional<CoeffKind> kind_from_name(std::string_view s);

struct KnotEntry {
  std::string name;
  int signature = 0;                     // always even
  std::optional<int> smooth_genus;       // g_4, >= 0 when known
  std::optional<int> rasmussen_s;
  std::optional<std::string> mirror_of;  // e.g. "T(2,3)"
  bool quasi_alternating = false;
};

struct PolyRecord {
  std::string knot;
  PolyFamily family = PolyFamily::homfly_super;
  int color = 1;  // N; 1 for hfk
  LaurentPoly poly;
  std::string source;
};

struct CoeffRecord {
  std::string knot;
  CoeffKind kind = CoeffKind::alpha_h;
  int invariant = 0;  // alpha, beta, or gamma
  // coefficients[k-1] is H_k / F_k; for gamma_kf a single entry holding KF.
  std::vector<LaurentPoly> coefficients;
  // For beta_f records: the tabulated F_1 / (taq + t^-1 a^-1 q^-1).
  std::optional<LaurentPoly> f1_quotient;
  std::string source;
};

struct VolumeReferenceRow {
  std::string knot;
  int n = 0, b = 0, N = 0;
  double re = 0.0, im = 0.0;
};

class Corpus {
 public:
  // The datasets compiled into the library.
  static Corpus embedded();
  // Loads the same file layout from a directory (overrides the embedded data).
  static Corpus from_directory(const std::string& dir);

  const KnotEntry& knot(std::string_view name) const;
  bool has_knot(std::string_view name) const;
  std::vector<std::string> knot_names() const;  // sorted

  const PolyRecord& poly(std::string_view knot, PolyFamily family, int color) const;
  bool has_poly(std::string_view knot, PolyFamily family, int color) const;
  std::vector<const PolyRecord*> polys() const;

  const CoeffRecord& coeffs(std::string_view knot, CoeffKind kind) const;
  bool has_coeffs(std::string_view knot, CoeffKind kind) const;
  std::vector<const CoeffRecord*> coeff_records() const;

  const LaurentPoly& alexander(std::string_view knot) const;
  bool has_alexander(std::string_view knot) const;

  const std::vector<VolumeReferenceRow>& volume_reference() const { return volume_ref_; }

  // Data-level consistency checks; returns one message per violation.
  // Cross-module checks (certificates, generated-HFK comparisons) live with
  // the engines that compute them.
  std::vector<std::string> validate() const;

 private:
  void load_file(const std::string& name, std::string_view content);
  void finish_load();

  std::map<std::string, KnotEntry, std::less<>> knots_;
  std::map<std::tuple<std::string, int, int>, PolyRecord, std::less<>> polys_;
  std::map<std::pair<std::string, int>, CoeffRecord, std::less<>> coeffs_;
  std::map<std::string, LaurentPoly, std::less<>> alexander_;
  std::vector<VolumeReferenceRow> volume_ref_;
};

}  // namespace khexp
