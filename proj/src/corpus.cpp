#include "corpus.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus_data.hpp"

namespace khexp {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse_error, "parse error at line " + std::to_string(line) + ", column " +
                                std::to_string(col) + ": " + what);
  }
};

Int parse_int(Cursor& c) {
  c.skip_ws();
  std::string digits;
  if (!c.eof() && (c.peek() == '-' || c.peek() == '+')) {
    digits.push_back(c.peek());
    c.advance();
  }
  std::size_t ndigits = 0;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    digits.push_back(c.peek());
    c.advance();
    ++ndigits;
  }
  if (ndigits == 0) c.error("expected an integer");
  return Int(digits);
}

int parse_small_int(Cursor& c) {
  Int v = parse_int(c);
  if (v > 1'000'000 || v < -1'000'000) c.error("exponent out of range");
  return v.convert_to<int>();
}

}  // namespace

LaurentPoly parse_poly(std::string_view text) {
  Cursor c{text};
  LaurentPoly out;
  bool any = false;
  c.skip_ws();
  if (c.eof()) c.error("empty polynomial");
  while (true) {
    // term: sign? digits? factor*, where factor = var['^' int]
    c.skip_ws();
    int sign = 1;
    if (!c.eof() && (c.peek() == '-' || c.peek() == '+')) {
      if (c.peek() == '-') sign = -1;
      c.advance();
      c.skip_ws();
    }
    Int coeff = sign;
    bool have_coeff = false;
    if (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = sign * parse_int(c);
      have_coeff = true;
    }
    Exponents e;
    bool have_factor = false;
    while (true) {
      c.skip_ws();
      if (c.eof()) break;
      auto var = var_from_name(c.peek());
      if (!var) break;
      c.advance();
      int ex = 1;
      if (!c.eof() && c.peek() == '^') {
        c.advance();
        ex = parse_small_int(c);
      }
      e[*var] += ex;
      have_factor = true;
    }
    if (!have_coeff && !have_factor) c.error("expected a term");
    out.add_term(e, coeff);
    any = true;
    c.skip_ws();
    if (c.eof()) break;
    char ch = c.peek();
    if (ch != '+' && ch != '-') c.error(std::string("unexpected character '") + ch + "'");
    // '+' separates terms; '-' both separates and signs the next term.
    if (ch == '+') c.advance();
  }
  if (!any) c.error("empty polynomial");
  return out;
}

std::string serialize_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (Var v : kAllVars) {
      if (e[v] != 0) os << ' ' << var_name(v) << '^' << e[v];
    }
  }
  return os.str();
}

std::string family_name(PolyFamily f) {
  switch (f) {
    case PolyFamily::homfly_super: return "homfly-super";
    case PolyFamily::kauffman_super: return "kauffman-super";
    case PolyFamily::hfk: return "hfk";
    case PolyFamily::jones: return "jones";
  }
  return "?";
}

std::optional<PolyFamily> family_from_name(std::string_view s) {
  if (s == "homfly-super" || s == "homfly") return PolyFamily::homfly_super;
  if (s == "kauffman-super" || s == "kauffman") return PolyFamily::kauffman_super;
  if (s == "hfk") return PolyFamily::hfk;
  if (s == "jones") return PolyFamily::jones;
  return std::nullopt;
}

std::string kind_name(CoeffKind k) {
  switch (k) {
    case CoeffKind::alpha_h: return "alpha+H";
    case CoeffKind::beta_f: return "beta+F";
    case CoeffKind::gamma_kf: return "gamma+KF";
  }
  return "?";
}

std::optional<CoeffKind> kind_from_name(std::string_view s) {
  if (s == "alpha+H" || s == "alpha") return CoeffKind::alpha_h;
  if (s == "beta+F" || s == "beta") return CoeffKind::beta_f;
  if (s == "gamma+KF" || s == "gamma") return CoeffKind::gamma_kf;
  return std::nullopt;
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& s, const std::string& ctx) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(Errc::parse_error, ctx + ": bad integer '" + s + "'");
  return v;
}

std::optional<int> to_opt_int(const std::string& s, const std::string& ctx) {
  if (s == "?") return std::nullopt;
  return to_int(s, ctx);
}

double to_double(const std::string& s, const std::string& ctx) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    fail(Errc::parse_error, ctx + ": bad number '" + s + "'");
  }
}

// F_1 = (taq + t^-1 a^-1 q^-1) * quotient
LaurentPoly f1_divisor() {
  LaurentPoly d;
  d.add_term({1, 1, 1}, 1);
  d.add_term({-1, -1, -1}, 1);
  return d;
}

}  // namespace

void Corpus::load_file(const std::string& name, std::string_view content) {
  std::string source;
  std::istringstream is{std::string(content)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string ctx = name + ":" + std::to_string(lineno);
    std::string_view sv = line;
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
    if (sv.empty()) continue;
    if (sv.front() == '#') {
      constexpr std::string_view kSrc = "# source:";
      if (sv.substr(0, kSrc.size()) == kSrc) {
        source = std::string(sv.substr(kSrc.size()));
        if (!source.empty() && source.front() == ' ') source.erase(0, 1);
      }
      continue;
    }

    auto colon = sv.find(':');
    std::vector<std::string> head =
        split_ws(colon == std::string_view::npos ? sv : sv.substr(0, colon));
    std::string_view body = colon == std::string_view::npos ? "" : sv.substr(colon + 1);

    if (name == "knots.txt") {
      if (head.size() != 6) fail(Errc::parse_error, ctx + ": expected 6 fields");
      KnotEntry k;
      k.name = head[0];
      k.signature = to_int(head[1], ctx);
      k.smooth_genus = to_opt_int(head[2], ctx);
      k.rasmussen_s = to_opt_int(head[3], ctx);
      k.quasi_alternating = head[4] == "y";
      if (head[5] != "-") k.mirror_of = head[5];
      if (!knots_.emplace(k.name, k).second)
        fail(Errc::parse_error, ctx + ": duplicate knot " + k.name);
    } else if (name == "alexander.txt") {
      if (head.size() != 1) fail(Errc::parse_error, ctx + ": expected 'knot : poly'");
      if (!alexander_.emplace(head[0], parse_poly(body)).second)
        fail(Errc::parse_error, ctx + ": duplicate Alexander polynomial for " + head[0]);
    } else if (name == "homfly_p1_thick.txt") {
      if (head.size() != 2) fail(Errc::parse_error, ctx + ": expected 'knot color : poly'");
      PolyRecord r;
      r.knot = head[0];
      r.family = PolyFamily::homfly_super;
      r.color = to_int(head[1], ctx);
      r.poly = parse_poly(body);
      r.source = source;
      auto key = std::make_tuple(r.knot, static_cast<int>(r.family), r.color);
      if (!polys_.emplace(key, std::move(r)).second)
        fail(Errc::parse_error, ctx + ": duplicate polynomial record");
    } else if (name == "homfly_h1_quasialternating.txt" || name == "homfly_h1_thick.txt" ||
               name == "homfly_h2.txt") {
      if (head.size() != 2) fail(Errc::parse_error, ctx + ": expected 'knot alpha : poly'");
      const std::string& knot = head[0];
      int invariant = to_int(head[1], ctx);
      int k = name == "homfly_h2.txt" ? 2 : 1;
      auto key = std::make_pair(knot, static_cast<int>(CoeffKind::alpha_h));
      auto it = coeffs_.find(key);
      if (it == coeffs_.end()) {
        CoeffRecord r;
        r.knot = knot;
        r.kind = CoeffKind::alpha_h;
        r.invariant = invariant;
        r.source = source;
        it = coeffs_.emplace(key, std::move(r)).first;
      } else if (it->second.invariant != invariant) {
        fail(Errc::parse_error, ctx + ": alpha disagrees with an earlier table for " + knot);
      }
      auto& coef = it->second.coefficients;
      if (static_cast<int>(coef.size()) < k) coef.resize(k);
      if (!coef[k - 1].is_zero())
        fail(Errc::parse_error, ctx + ": duplicate H_" + std::to_string(k) + " for " + knot);
      coef[k - 1] = parse_poly(body);
    } else if (name == "kauffman_f1_quotient.txt" || name == "kauffman_f2.txt") {
      if (head.size() != 2) fail(Errc::parse_error, ctx + ": expected 'knot beta : poly'");
      const std::string& knot = head[0];
      int invariant = to_int(head[1], ctx);
      auto key = std::make_pair(knot, static_cast<int>(CoeffKind::beta_f));
      auto it = coeffs_.find(key);
      if (it == coeffs_.end()) {
        CoeffRecord r;
        r.knot = knot;
        r.kind = CoeffKind::beta_f;
        r.invariant = invariant;
        r.source = source;
        it = coeffs_.emplace(key, std::move(r)).first;
      } else if (it->second.invariant != invariant) {
        fail(Errc::parse_error, ctx + ": beta disagrees with an earlier table for " + knot);
      }
      auto& rec = it->second;
      if (name == "kauffman_f1_quotient.txt") {
        if (rec.f1_quotient)
          fail(Errc::parse_error, ctx + ": duplicate F_1 quotient for " + knot);
        rec.f1_quotient = parse_poly(body);
        if (rec.coefficients.empty()) rec.coefficients.resize(1);
        rec.coefficients[0] = f1_divisor() * *rec.f1_quotient;
      } else {
        if (rec.coefficients.size() < 2) rec.coefficients.resize(2);
        if (!rec.coefficients[1].is_zero())
          fail(Errc::parse_error, ctx + ": duplicate F_2 for " + knot);
        rec.coefficients[1] = parse_poly(body);
      }
    } else if (name == "hfk_kf.txt") {
      if (head.size() != 2) fail(Errc::parse_error, ctx + ": expected 'knot gamma : poly'");
      CoeffRecord r;
      r.knot = head[0];
      r.kind = CoeffKind::gamma_kf;
      r.invariant = to_int(head[1], ctx);
      r.coefficients.push_back(parse_poly(body));
      r.source = source;
      auto key = std::make_pair(r.knot, static_cast<int>(CoeffKind::gamma_kf));
      if (!coeffs_.emplace(key, std::move(r)).second)
        fail(Errc::parse_error, ctx + ": duplicate KF record");
    } else if (name == "volume_reference.txt") {
      if (head.size() != 6) fail(Errc::parse_error, ctx + ": expected 'knot n b N re im'");
      VolumeReferenceRow row;
      row.knot = head[0];
      row.n = to_int(head[1], ctx);
      row.b = to_int(head[2], ctx);
      row.N = to_int(head[3], ctx);
      row.re = to_double(head[4], ctx);
      row.im = to_double(head[5], ctx);
      volume_ref_.push_back(row);
    } else {
      fail(Errc::io_error, "unrecognized corpus file: " + name);
    }
  }
}

void Corpus::finish_load() {
  for (const auto& [key, rec] : coeffs_) {
    if (!knots_.count(rec.knot))
      fail(Errc::parse_error, "coefficient record for unknown knot " + rec.knot);
  }
  for (const auto& [key, rec] : polys_) {
    if (!knots_.count(rec.knot))
      fail(Errc::parse_error, "polynomial record for unknown knot " + rec.knot);
  }
}

Corpus Corpus::embedded() {
  Corpus c;
  for (std::size_t i = 0; i < detail::kEmbeddedCorpusCount; ++i) {
    c.load_file(detail::kEmbeddedCorpus[i].name, detail::kEmbeddedCorpus[i].content);
  }
  c.finish_load();
  return c;
}

Corpus Corpus::from_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  Corpus c;
  if (!fs::is_directory(dir)) fail(Errc::io_error, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    c.load_file(path.filename().string(), buf.str());
  }
  c.finish_load();
  return c;
}

const KnotEntry& Corpus::knot(std::string_view name) const {
  auto it = knots_.find(name);
  if (it == knots_.end()) fail(Errc::not_found, "unknown knot: " + std::string(name));
  return it->second;
}

bool Corpus::has_knot(std::string_view name) const { return knots_.count(name) > 0; }

std::vector<std::string> Corpus::knot_names() const {
  std::vector<std::string> out;
  out.reserve(knots_.size());
  for (const auto& [name, k] : knots_) out.push_back(name);
  return out;
}

const PolyRecord& Corpus::poly(std::string_view knot, PolyFamily family, int color) const {
  auto it = polys_.find(std::make_tuple(std::string(knot), static_cast<int>(family), color));
  if (it == polys_.end())
    fail(Errc::not_found, "no " + family_name(family) + " record for " + std::string(knot) +
                              " at N=" + std::to_string(color));
  return it->second;
}

bool Corpus::has_poly(std::string_view knot, PolyFamily family, int color) const {
  return polys_.count(std::make_tuple(std::string(knot), static_cast<int>(family), color)) > 0;
}

std::vector<const PolyRecord*> Corpus::polys() const {
  std::vector<const PolyRecord*> out;
  for (const auto& [key, rec] : polys_) out.push_back(&rec);
  return out;
}

const CoeffRecord& Corpus::coeffs(std::string_view knot, CoeffKind kind) const {
  auto it = coeffs_.find(std::make_pair(std::string(knot), static_cast<int>(kind)));
  if (it == coeffs_.end())
    fail(Errc::not_found, "no " + kind_name(kind) + " record for " + std::string(knot));
  return it->second;
}

bool Corpus::has_coeffs(std::string_view knot, CoeffKind kind) const {
  return coeffs_.count(std::make_pair(std::string(knot), static_cast<int>(kind))) > 0;
}

std::vector<const CoeffRecord*> Corpus::coeff_records() const {
  std::vector<const CoeffRecord*> out;
  for (const auto& [key, rec] : coeffs_) out.push_back(&rec);
  return out;
}

const LaurentPoly& Corpus::alexander(std::string_view knot) const {
  auto it = alexander_.find(knot);
  if (it == alexander_.end())
    fail(Errc::not_found, "no Alexander polynomial for " + std::string(knot));
  return it->second;
}

bool Corpus::has_alexander(std::string_view knot) const { return alexander_.count(knot) > 0; }

namespace {

// var-exponent parity of every term: 0 (all even), 1 (all odd), -1 (mixed).
int parity(const LaurentPoly& p, Var v) {
  int seen = -2;
  for (const auto& [e, c] : p.terms()) {
    int par = ((e[v] % 2) + 2) % 2;
    if (seen == -2) seen = par;
    if (par != seen) return -1;
  }
  return seen;
}

}  // namespace

std::vector<std::string> Corpus::validate() const {
  std::vector<std::string> issues;
  auto flag = [&issues](const std::string& msg) { issues.push_back(msg); };

  for (const auto& [name, k] : knots_) {
    if (k.signature % 2 != 0) flag(name + ": odd signature " + std::to_string(k.signature));
    if (k.smooth_genus && *k.smooth_genus < 0)
      flag(name + ": negative smooth 4-ball genus");
  }

  for (const auto& [key, rec] : coeffs_) {
    const std::string& n = rec.knot;
    auto kit = knots_.find(n);
    if (kit == knots_.end()) continue;
    const KnotEntry& k = kit->second;

    for (const auto& c : rec.coefficients) {
      LaurentPoly back = parse_poly(serialize_poly(c));
      if (!(back == c)) flag(n + ": serialization round trip failed");
    }

    switch (rec.kind) {
      case CoeffKind::alpha_h: {
        if (k.smooth_genus && std::abs(rec.invariant) > *k.smooth_genus)
          flag(n + ": genus bound violated, |alpha| > g_4");
        if (k.quasi_alternating && rec.invariant != -k.signature / 2)
          flag(n + ": quasi-alternating but alpha != -sigma/2");
        // H_k has a-parity k+1 mod 2 (the basis term has k+1 a-odd factors).
        for (std::size_t i = 0; i < rec.coefficients.size(); ++i) {
          const auto& h = rec.coefficients[i];
          if (h.is_zero()) continue;
          int want = static_cast<int>(i) % 2;  // H_1 even, H_2 odd, ...
          if (parity(h, Var::a) != want)
            flag(n + ": H_" + std::to_string(i + 1) + " has unexpected a-parity");
        }
        break;
      }
      case CoeffKind::beta_f: {
        if (has_coeffs(n, CoeffKind::alpha_h)) {
          int alpha = coeffs(n, CoeffKind::alpha_h).invariant;
          if (rec.invariant != 2 * alpha) flag(n + ": beta != 2*alpha");
        }
        if (rec.f1_quotient) {
          if (parity(*rec.f1_quotient, Var::a) != 0 || parity(*rec.f1_quotient, Var::q) != 0)
            flag(n + ": F_1 quotient has unexpected parity");
        }
        for (const auto& f : rec.coefficients) {
          if (f.is_zero()) continue;
          if (parity(f, Var::a) != 1 || parity(f, Var::q) != 1)
            flag(n + ": Kauffman coefficient has unexpected parity");
        }
        break;
      }
      case CoeffKind::gamma_kf: {
        const LaurentPoly& kf = rec.coefficients.at(0);
        if (kf.uses(Var::a)) flag(n + ": KF uses variable a");
        if (!kf.is_zero() && parity(kf, Var::q) != 0) flag(n + ": KF has odd q-exponents");
        break;
      }
    }
  }

  for (const auto& [key, rec] : polys_) {
    LaurentPoly back = parse_poly(serialize_poly(rec.poly));
    if (!(back == rec.poly)) flag(rec.knot + ": polynomial serialization round trip failed");
    if (rec.family == PolyFamily::hfk && rec.poly.uses(Var::a))
      flag(rec.knot + ": hfk record uses variable a");
    if (rec.family == PolyFamily::jones &&
        (rec.poly.uses(Var::a) || rec.poly.uses(Var::t)))
      flag(rec.knot + ": jones record uses a or t");
  }

  for (const auto& [name, alex] : alexander_) {
    if (alex.uses(Var::a) || alex.uses(Var::t)) flag(name + ": Alexander polynomial not in q");
    // symmetric and Delta(1) = +-1
    LaurentPoly mirror;
    for (const auto& [e, c] : alex.terms()) mirror.add_term({0, -e.q, 0}, c);
    if (!(mirror == alex)) flag(name + ": Alexander polynomial not symmetric");
    Int at1 = 0;
    for (const auto& [e, c] : alex.terms()) at1 += c;
    if (at1 != 1 && at1 != -1) flag(name + ": Alexander polynomial with Delta(1) != +-1");
  }

  for (const auto& row : volume_ref_) {
    if (row.b < 1 || row.n < 2 || row.N < 2) flag("volume reference row out of range");
  }

  return issues;
}

}  // namespace khexp
