#include "hocm/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace hocm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^{-1/4}
constexpr int kNewtonCap = 64;

// Orthonormal Hermite polynomial P_m (orthonormal w.r.t. e^{-t^2}) and its
// derivative, P'_m = sqrt(2m) P_{m-1}. Same recurrence as phi_m without the
// Gaussian seed.
void hermite_poly_pair(int m, double t, double& pm, double& pm1) {
  double v0 = kPiQuarterInv;
  if (m == 0) {
    pm = v0;
    pm1 = 0.0;
    return;
  }
  double v1 = std::sqrt(2.0) * t * v0;
  for (int k = 1; k < m; ++k) {
    const double v2 = t * std::sqrt(2.0 / (k + 1)) * v1 - std::sqrt(k / (k + 1.0)) * v0;
    v0 = v1;
    v1 = v2;
  }
  pm = v1;
  pm1 = v0;
}

// Laguerre polynomials orthonormal w.r.t. e^{-u} on [0,inf):
// L_0 = 1, L_1 = 1-u, (k+1)L_{k+1} = (2k+1-u)L_k - k L_{k-1}.
void laguerre_poly_pair(int m, double u, double& lm, double& lm1) {
  double v0 = 1.0;
  if (m == 0) {
    lm = v0;
    lm1 = 0.0;
    return;
  }
  double v1 = 1.0 - u;
  for (int k = 1; k < m; ++k) {
    const double v2 = ((2.0 * k + 1.0 - u) * v1 - k * v0) / (k + 1);
    v0 = v1;
    v1 = v2;
  }
  lm = v1;
  lm1 = v0;
}

void legendre_poly_pair(int m, double t, double& pm, double& pm1) {
  double v0 = 1.0;
  if (m == 0) {
    pm = v0;
    pm1 = 0.0;
    return;
  }
  double v1 = t;
  for (int k = 1; k < m; ++k) {
    const double v2 = ((2.0 * k + 1.0) * t * v1 - k * v0) / (k + 1);
    v0 = v1;
    v1 = v2;
  }
  pm = v1;
  pm1 = v0;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int m) {
  if (m < 1) throw std::invalid_argument("gauss_hermite_rule: order must be >= 1");
  QuadratureRule rule;
  rule.order = m;
  rule.nodes.assign(static_cast<size_t>(m), 0.0);
  rule.weights.assign(static_cast<size_t>(m), 0.0);

  // Positive roots of P_m by sign-change bracketing on a grid fine enough to
  // separate them (spacing >= ~pi/sqrt(2m) near the origin), then bisection
  // plus a Newton polish. Robust at any order, unlike extrapolated seeds.
  const int half = m / 2;  // strictly positive roots; odd m adds the root at 0
  std::vector<double> roots;
  roots.reserve(static_cast<size_t>(half));
  const double upper = std::sqrt(2.0 * m + 1.0) + 0.5;
  const int grid = 8 * m;
  auto pm_at = [m](double t) {
    double pm, pm1;
    hermite_poly_pair(m, t, pm, pm1);
    return pm;
  };
  double x_prev = (m % 2 == 1) ? upper / grid * 1e-3 : 0.0;  // skip the known root at 0 for odd m
  double f_prev = pm_at(x_prev);
  for (int g = 1; g <= grid && static_cast<int>(roots.size()) < half; ++g) {
    const double x = upper * g / grid;
    const double fx = pm_at(x);
    if (f_prev == 0.0) {
      roots.push_back(x_prev);
    } else if (f_prev * fx < 0.0) {
      double lo = x_prev, hi = x, flo = f_prev;
      for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = pm_at(mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      double z = 0.5 * (lo + hi);
      for (int it = 0; it < 8; ++it) {
        double pm, pm1;
        hermite_poly_pair(m, z, pm, pm1);
        const double dp = std::sqrt(2.0 * m) * pm1;
        const double dz = pm / dp;
        z -= dz;
        if (std::abs(dz) <= 1e-16 * (1.0 + std::abs(z))) break;
      }
      roots.push_back(z);
    }
    x_prev = x;
    f_prev = fx;
  }
  if (static_cast<int>(roots.size()) != half)
    throw std::runtime_error("gauss_hermite_rule: root bracketing failed");

  // ascending nodes; w = 2/(P'_m)^2 = 1/sum_{k<m} P_k^2 via Christoffel-Darboux.
  // At extreme nodes P_{m-1} can overflow; the true weight has underflowed to
  // zero there and 2/inf = 0 is the right value.
  for (int i = 0; i < half; ++i) {
    const double z = roots[static_cast<size_t>(half - 1 - i)];
    double pm, pm1;
    hermite_poly_pair(m, z, pm, pm1);
    const double dp = std::sqrt(2.0 * m) * pm1;
    const double w = 2.0 / (dp * dp);
    rule.nodes[static_cast<size_t>(i)] = -z;
    rule.weights[static_cast<size_t>(i)] = w;
    rule.nodes[static_cast<size_t>(m - 1 - i)] = z;
    rule.weights[static_cast<size_t>(m - 1 - i)] = w;
  }
  if (m % 2 == 1) {
    double pm, pm1;
    hermite_poly_pair(m, 0.0, pm, pm1);
    const double dp = std::sqrt(2.0 * m) * pm1;
    rule.nodes[static_cast<size_t>(half)] = 0.0;
    rule.weights[static_cast<size_t>(half)] = 2.0 / (dp * dp);
  }
  return rule;
}

QuadratureRule gauss_laguerre_rule(int m) {
  if (m < 1) throw std::invalid_argument("gauss_laguerre_rule: order must be >= 1");
  QuadratureRule rule;
  rule.order = m;
  rule.nodes.assign(static_cast<size_t>(m), 0.0);
  rule.weights.assign(static_cast<size_t>(m), 0.0);

  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * m);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * m);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[static_cast<size_t>(i - 2)]);
    }
    int it = 0;
    for (; it < kNewtonCap; ++it) {
      double lm, lm1;
      laguerre_poly_pair(m, z, lm, lm1);
      // u L'_m(u) = m L_m(u) - m L_{m-1}(u)
      const double dp = m * (lm - lm1) / z;
      const double dz = lm / dp;
      z -= dz;
      if (std::abs(dz) <= 1e-14 * (1.0 + std::abs(z))) break;
    }
    if (it == kNewtonCap) throw std::runtime_error("gauss_laguerre_rule: Newton iteration did not converge");
    double lm, lm1;
    laguerre_poly_pair(m, z, lm, lm1);
    const double dp = m * (lm - lm1) / z;
    rule.nodes[static_cast<size_t>(i)] = z;
    rule.weights[static_cast<size_t>(i)] = 1.0 / (z * dp * dp);
  }
  return rule;
}

QuadratureRule gauss_legendre_rule(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre_rule: order must be >= 1");
  QuadratureRule rule;
  rule.order = m;
  rule.nodes.assign(static_cast<size_t>(m), 0.0);
  rule.weights.assign(static_cast<size_t>(m), 0.0);

  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (m + 0.5));
    int it = 0;
    for (; it < kNewtonCap; ++it) {
      double pm, pm1;
      legendre_poly_pair(m, z, pm, pm1);
      const double dp = m * (z * pm - pm1) / (z * z - 1.0);
      const double dz = pm / dp;
      z -= dz;
      if (std::abs(dz) <= 1e-15) break;
    }
    if (it == kNewtonCap) throw std::runtime_error("gauss_legendre_rule: Newton iteration did not converge");
    double pm, pm1;
    legendre_poly_pair(m, z, pm, pm1);
    const double dp = m * (z * pm - pm1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = -z;
    rule.weights[static_cast<size_t>(i)] = w;
    rule.nodes[static_cast<size_t>(m - 1 - i)] = z;
    rule.weights[static_cast<size_t>(m - 1 - i)] = w;
  }
  if (m % 2 == 1) rule.nodes[static_cast<size_t>(half - 1)] = 0.0;
  return rule;
}

double hermite_eval1d(int m, double t) {
  if (m < 0) throw std::invalid_argument("hermite_eval1d: negative degree");
  double v0 = kPiQuarterInv * std::exp(-t * t / 2.0);
  if (m == 0) return v0;
  double v1 = std::sqrt(2.0) * t * v0;
  for (int k = 1; k < m; ++k) {
    const double v2 = t * std::sqrt(2.0 / (k + 1)) * v1 - std::sqrt(k / (k + 1.0)) * v0;
    v0 = v1;
    v1 = v2;
  }
  return v1;
}

double hermite_poly1d(int m, double t) {
  if (m < 0) throw std::invalid_argument("hermite_poly1d: negative degree");
  double pm, pm1;
  hermite_poly_pair(m, t, pm, pm1);
  return pm;
}

double hermite_eval(const MultiIndex& alpha, std::span<const double> x) {
  if (alpha.dim() != static_cast<int>(x.size()))
    throw std::invalid_argument("hermite_eval: index/point dimension mismatch");
  double v = 1.0;
  for (int k = 0; k < alpha.dim(); ++k) v *= hermite_eval1d(alpha[k], x[static_cast<size_t>(k)]);
  return v;
}

}  // namespace hocm
