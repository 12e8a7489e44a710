#include "multitree/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace multitree {

std::vector<std::vector<std::int64_t>> adjacency_matrix(
    const WeightedForest& f) {
  std::vector<std::vector<std::int64_t>> a(
      f.order(), std::vector<std::int64_t>(f.order(), 0));
  for (const auto& e : f.edges()) {
    a[e.u][e.v] = e.w;
    a[e.v][e.u] = e.w;
  }
  return a;
}

Spectrum spectrum_of(const WeightedForest& f) {
  const int n = f.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : f.edges()) {
    a(e.u, e.v) = static_cast<double>(e.w);
    a(e.v, e.u) = static_cast<double>(e.w);
  }
  Spectrum s;
  if (n == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("symmetric eigensolve failed for n = " +
                           std::to_string(n));
  s.eigenvalues.assign(solver.eigenvalues().data(),
                       solver.eigenvalues().data() + n);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  for (double lam : s.eigenvalues) s.energy += std::abs(lam);
  return s;
}

double energy_eigen(const WeightedForest& f) { return spectrum_of(f).energy; }

namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813};
constexpr double kKronrodWeights[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785,
    0.169004726639267, 0.140653259715525, 0.104790010322250,
    0.063092092629979, 0.022935322010529};
// Gauss weights for the nodes at even positions 0, 2, 4, 6.
constexpr double kGaussWeights[4] = {0.417959183673469, 0.381830050505119,
                                     0.279705391489277, 0.129484966168870};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double k = kKronrodWeights[0] * f0;
  double g = kGaussWeights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double fi = f(mid + dx) + f(mid - dx);
    k += kKronrodWeights[i] * fi;
    if (i % 2 == 0) g += kGaussWeights[i / 2] * fi;
  }
  value = k * half;
  err = std::abs(k - g) * half;
}

// Adaptive bisection; panels accept at abs_tol. Throws QuadratureError when
// the panel budget runs out.
template <class F>
double adaptive_integrate(const F& f, double a, double b, double abs_tol) {
  struct Panel {
    double a, b;
  };
  std::vector<Panel> stack{{a, b}};
  double total = 0.0;
  int panels_used = 0;
  constexpr int kMaxPanels = 4000;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double v, err;
    gk15(f, p.a, p.b, v, err);
    if (!std::isfinite(v))
      throw QuadratureError("non-finite integrand value");
    if (err <= abs_tol || (p.b - p.a) < 1e-14) {
      total += v;
      continue;
    }
    if (++panels_used > kMaxPanels)
      throw QuadratureError("refinement budget exhausted");
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back({p.a, mid});
    stack.push_back({mid, p.b});
  }
  return total;
}

}  // namespace

double energy_coulson(const CoeffVector& c) {
  if (!c.b.empty() && c.b[0] != 1)
    throw ParameterError("coefficient vector must start with b_0 = 1");
  const int nu = c.matching_number();
  if (nu == 0) return 0.0;  // ln(1) integrand vanishes

  std::vector<double> b(nu + 1);
  for (int k = 0; k <= nu; ++k) b[k] = c.b[k].convert_to<double>();

  // Piece 1: [0,1] of x^-2 ln(sum b_k x^{2k}). The integrand tends to b_1
  // at 0; below x = 1e-4 use the series b_1 + (b_2 - b_1^2/2) x^2.
  auto near_zero = [&](double x) {
    const double b2 = nu >= 2 ? b[2] : 0.0;
    return b[1] + (b2 - 0.5 * b[1] * b[1]) * x * x;
  };
  auto piece_low = [&](double x) {
    if (x < 1e-4) return near_zero(x);
    double p = 0.0;
    for (int k = nu; k >= 0; --k) p = p * x * x + b[k];
    return std::log(p) / (x * x);
  };

  // Piece 2: [1,inf) maps to int_0^1 ln(P(1/u)) du with
  // ln(P(1/u)) = -2 nu ln u + ln(sum_j b_{nu-j} u^{2j}); the log-singular
  // part integrates to 2 nu exactly.
  auto piece_high = [&](double u) {
    double q = 0.0;
    for (int j = nu; j >= 0; --j) q = q * u * u + b[nu - j];
    return std::log(q);
  };

  constexpr double kPanelTol = 1e-6;
  const double low = adaptive_integrate(piece_low, 0.0, 1.0, kPanelTol);
  const double high = adaptive_integrate(piece_high, 0.0, 1.0, kPanelTol);
  return (2.0 / std::numbers::pi) * (low + 2.0 * nu + high);
}

double energy_closed(const NamedGraph& spec) {
  const double n = spec.n;
  const double m = static_cast<double>(spec.m);
  const double k = spec.k;
  switch (spec.kind) {
    case NamedGraph::Kind::BalancedStar: {
      if (!(spec.n >= 2 && spec.m >= spec.n - 1))
        throw ParameterError("BalancedStar needs n >= 2, m >= n-1");
      const double r = static_cast<double>(spec.m / (spec.n - 1));
      const double t = m - r * (n - 1);
      return 2.0 * std::sqrt(m * r + t * r + t);
    }
    case NamedGraph::Kind::ExtremalStar:
      if (!(spec.n >= 2 && spec.m >= spec.n - 1))
        throw ParameterError("ExtremalStar needs n >= 2, m >= n-1");
      return 2.0 * std::sqrt((m - n + 2) * (m - n + 2) + n - 2);
    case NamedGraph::Kind::UnitStarForest:
      if (!(spec.m >= 0 && spec.m <= spec.n - 2))
        throw ParameterError("UnitStarForest needs 0 <= m <= n-2");
      return 2.0 * std::sqrt(m);
    case NamedGraph::Kind::MinForest:
      if (!(1 <= spec.k && spec.k <= spec.n))
        throw ParameterError("MinForest needs 1 <= k <= n");
      return 2.0 * std::sqrt(n - k);
    case NamedGraph::Kind::MaxMatchForest:
      if (!(1 <= spec.k && spec.k <= spec.n && 2 * spec.k >= spec.n))
        throw ParameterError("MaxMatchForest needs 1 <= k <= n, 2k >= n");
      return 2.0 * (n - k);
    case NamedGraph::Kind::WeightedP4: {
      if (!(spec.wa >= 1 && spec.wb >= 1 && spec.wc >= 1))
        throw ParameterError("WeightedP4 needs positive weights");
      const double a = static_cast<double>(spec.wa);
      const double bmid = static_cast<double>(spec.wb);
      const double cc = static_cast<double>(spec.wc);
      return 2.0 * std::sqrt((a + cc) * (a + cc) + bmid * bmid);
    }
    default:
      throw ParameterError("no closed-form energy for " + spec.describe());
  }
}

}  // namespace multitree
