#include "volume.hpp"

#include <cmath>
#include <numbers>

namespace khexp {

namespace {

constexpr double kPi = std::numbers::pi;

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

bool is_admissible(int n, int b) {
  if (n < 2 || b < 1) return false;
  int d = n - 1 - b;
  return !(d > 0 && d % 2 == 0);
}

void require_admissible(int n, int b) {
  if (!is_admissible(n, b))
    fail(Errc::inadmissible,
         "need n >= 2, b >= 1 and (n-1-b)/2 not a positive integer");
}

double f_factor(int N, int k, int n, int b) {
  require_admissible(n, b);
  if (k < 1 || k > N - 1) fail(Errc::invalid_argument, "f_factor: need 1 <= k <= N-1");
  const double bt = b - 1;
  const double nu = N + bt;
  const double s1 = std::sin(((n - 2 + bt) / 2 + k) * kPi / nu);
  const double s2 = std::sin(k * kPi / nu);
  const double s3 = std::sin((k + bt) * kPi / nu);
  const double s4 = std::sin((-(n - 2 - bt) / 2 + k) * kPi / nu);
  return 4.0 * (s1 / s2) * s3 * s4;
}

double specialized_fig8_sum(int N, int n, int b) {
  require_admissible(n, b);
  if (N < 1) fail(Errc::invalid_argument, "specialized_fig8_sum: need N >= 1");
  KahanSum acc;
  acc.add(1.0);
  double g = 1.0;
  for (int j = 1; j <= N - 1; ++j) {
    g *= f_factor(N, j, n, b);
    acc.add(g);
  }
  return acc.sum;
}

EvalPoint specialization_point(int N, int n, int b) {
  require_admissible(n, b);
  std::complex<double> q = std::polar(1.0, kPi / (N + b));
  std::complex<double> t = std::polar(1.0, -kPi * (N + n - 1) / (N + b));
  std::complex<double> a = std::polar(1.0, kPi * n / (N + b));
  EvalPoint at;
  at.a = a;
  at.q = q;
  at.t = t;
  return at;
}

VolumeEstimate limit_estimate(int n, int b, int N) {
  require_admissible(n, b);
  if (N < 2) fail(Errc::invalid_argument, "limit_estimate: need N >= 2");
  // P_N at its own root of unity is the partial sum with parameter N+1.
  double p_now = specialized_fig8_sum(N + 1, n, b);
  double p_prev = specialized_fig8_sum(N, n, b);
  if (p_now <= 0.0 || p_prev <= 0.0)
    fail(Errc::log_nonpositive, "partial sum outside the principal log domain");
  VolumeEstimate out;
  out.n = n;
  out.b = b;
  out.N = N;
  out.value_ratio = {2.0 * kPi * (std::log(p_now) - std::log(p_prev)), 0.0};
  out.value_direct = {2.0 * kPi * std::log(p_now) / (N + 1), 0.0};
  return out;
}

namespace {

// Series sum with sin(2k theta) by stable rotation, re-seeded from std::sin
// every block; Dirichlet-test tail bound |tail| <= 1/(|sin theta| (M+1)^2).
double lobachevsky_series(double theta) {
  const double s = std::abs(std::sin(theta));
  if (s < 1e-300) return 0.0;
  const double target = 1e-15;
  double m = std::sqrt(1.0 / (s * target));
  const long M = static_cast<long>(m) + 1;

  constexpr long kBlock = 4096;
  KahanSum acc;
  const double c2 = std::cos(2.0 * theta);
  const double s2 = std::sin(2.0 * theta);
  for (long k0 = 1; k0 <= M; k0 += kBlock) {
    double sk = std::sin(2.0 * k0 * theta);
    double ck = std::cos(2.0 * k0 * theta);
    long hi = std::min(M, k0 + kBlock - 1);
    for (long k = k0; k <= hi; ++k) {
      acc.add(sk / (static_cast<double>(k) * static_cast<double>(k)));
      double ns = sk * c2 + ck * s2;
      double nc = ck * c2 - sk * s2;
      sk = ns;
      ck = nc;
    }
  }
  return acc.sum / 2.0;
}

}  // namespace

double lobachevsky(double theta) {
  // Odd and pi-periodic; reduce to [0, pi).
  double x = std::fmod(theta, kPi);
  if (x < 0) x += kPi;
  if (x == 0.0) return 0.0;
  // Near the period ends the series converges too slowly; route through the
  // duplication identity Lambda(2x) = 2 Lambda(x) + 2 Lambda(x + pi/2).
  constexpr double kMin = 0.05;
  if (x < kMin) return lobachevsky(2.0 * x) / 2.0 - lobachevsky(x + kPi / 2.0);
  if (kPi - x < kMin) return -lobachevsky(kPi - x);
  return lobachevsky_series(x);
}

double figure_eight_volume() { return 6.0 * lobachevsky(kPi / 3.0); }

KmWindow km_bound_check(int n, int b, int N) {
  require_admissible(n, b);
  if (N < 3) fail(Errc::invalid_argument, "km_bound_check: N too small");
  const double bt = b - 1;
  KmWindow w;
  double g = 1.0;
  double best = -1.0;
  for (int k = 1; k <= N - 1; ++k) {
    g *= f_factor(N, k, n, b);
    if (std::abs(g) > best) {
      best = std::abs(g);
      w.k_m = k;
    }
  }
  w.lo = static_cast<int>(std::floor(5.0 / 6.0 * (N + bt) - (3.0 * (n - 2) + 7.0 * bt) / 4.0));
  w.hi = static_cast<int>(std::floor(5.0 / 6.0 * (N + bt) + (n - 2 - bt) / 2.0));
  w.ok = w.lo <= w.k_m && w.k_m <= w.hi;
  return w;
}

}  // namespace khexp
