#include "hocm/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace hocm {

PhasePoint::PhasePoint(std::vector<double> x_, std::vector<double> xi_)
    : x(std::move(x_)), xi(std::move(xi_)) {
  if (x.size() != xi.size()) throw std::invalid_argument("PhasePoint: x/xi size mismatch");
}

double PhasePoint::norm_sq() const {
  double s = 0;
  for (double v : x) s += v * v;
  for (double v : xi) s += v * v;
  return s;
}

namespace {

// L_m^{(d)}(u) by the three-term recurrence
// (k+1) L_{k+1} = (2k+1+d-u) L_k - (k+d) L_{k-1}
double laguerre_value(int m, int d, double u) {
  double v0 = 1.0;
  if (m == 0) return v0;
  double v1 = 1.0 + d - u;
  for (int k = 1; k < m; ++k) {
    const double v2 = ((2.0 * k + 1.0 + d - u) * v1 - (k + d) * v0) / (k + 1);
    v0 = v1;
    v1 = v2;
  }
  return v1;
}

std::vector<double> laguerre_coeffs(int m, int d) {
  std::vector<double> c0{1.0};
  if (m == 0) return c0;
  std::vector<double> c1{1.0 + d, -1.0};
  for (int k = 1; k < m; ++k) {
    std::vector<double> c2(static_cast<size_t>(k + 2), 0.0);
    for (size_t j = 0; j < c1.size(); ++j) {
      c2[j] += (2.0 * k + 1.0 + d) * c1[j] / (k + 1);
      c2[j + 1] -= c1[j] / (k + 1);
    }
    for (size_t j = 0; j < c0.size(); ++j) c2[j] -= (k + d) * c0[j] / (k + 1);
    c0 = std::move(c1);
    c1 = std::move(c2);
  }
  return c1;
}

double factor_prefactor(int p, int q) {
  const int lo = std::min(p, q), hi = std::max(p, q);
  double ratio = 1.0;  // lo!/hi!
  for (int j = lo + 1; j <= hi; ++j) ratio /= j;
  double v = 2.0 * std::sqrt(ratio) * std::pow(std::sqrt(2.0), hi - lo);
  if (lo % 2 != 0) v = -v;
  return v;
}

std::complex<double> axis_value(int p, int q, double x, double xi, bool with_gaussian) {
  const std::complex<double> z{x, xi};
  const double zz = x * x + xi * xi;
  const int lo = std::min(p, q);
  const int d = std::abs(p - q);
  std::complex<double> ang{1.0, 0.0};
  const std::complex<double> base = (p >= q) ? std::conj(z) : z;
  for (int j = 0; j < d; ++j) ang *= base;
  std::complex<double> v = factor_prefactor(p, q) * ang * laguerre_value(lo, d, 2.0 * zz);
  if (with_gaussian) v *= std::exp(-zz);
  return v;
}

}  // namespace

std::complex<double> wigner1d_closed(int p, int q, double x, double xi) {
  return axis_value(p, q, x, xi, true);
}

std::complex<double> wigner1d_stripped(int p, int q, double x, double xi) {
  return axis_value(p, q, x, xi, false);
}

WignerBasisFunction::WignerBasisFunction(MultiIndex alpha, MultiIndex beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.dim() != beta_.dim())
    throw std::invalid_argument("WignerBasisFunction: index dimension mismatch");
  factors_.reserve(static_cast<size_t>(alpha_.dim()));
  for (int k = 0; k < alpha_.dim(); ++k) {
    AxisFactor f;
    f.p = beta_[k];  // first Wigner argument
    f.q = alpha_[k];
    f.angular = f.p - f.q;
    f.prefactor = factor_prefactor(f.p, f.q);
    f.radial_coeffs = laguerre_coeffs(std::min(f.p, f.q), std::abs(f.angular));
    factors_.push_back(std::move(f));
  }
}

std::complex<double> WignerBasisFunction::operator()(const PhasePoint& w) const {
  if (w.dim() != dim()) throw std::invalid_argument("WignerBasisFunction: point dimension mismatch");
  std::complex<double> v{1.0, 0.0};
  for (int k = 0; k < dim(); ++k)
    v *= axis_value(factors_[static_cast<size_t>(k)].p, factors_[static_cast<size_t>(k)].q,
                    w.x[static_cast<size_t>(k)], w.xi[static_cast<size_t>(k)], true);
  return v;
}

std::complex<double> WignerBasisFunction::stripped(const PhasePoint& w) const {
  if (w.dim() != dim()) throw std::invalid_argument("WignerBasisFunction: point dimension mismatch");
  std::complex<double> v{1.0, 0.0};
  for (int k = 0; k < dim(); ++k)
    v *= axis_value(factors_[static_cast<size_t>(k)].p, factors_[static_cast<size_t>(k)].q,
                    w.x[static_cast<size_t>(k)], w.xi[static_cast<size_t>(k)], false);
  return v;
}

WignerBasisFunction phi_closed_form(const MultiIndex& alpha, const MultiIndex& beta) {
  return WignerBasisFunction(alpha, beta);
}

namespace {

// W(phi_a, phi_b)(x,xi) with p = 2s substitution: the Gaussian of the shifted
// Hermite product is e^{-x^2-s^2}; the e^{-s^2} goes into the rule's weight.
std::complex<double> wigner1d_oracle(int a, int b, double x, double xi, const QuadratureRule& rule) {
  std::complex<double> acc{0.0, 0.0};
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = rule.nodes[i];
    const double poly = hermite_poly1d(a, x + s) * hermite_poly1d(b, x - s);
    const double ph = -2.0 * xi * s;
    acc += rule.weights[i] * poly * std::complex<double>{std::cos(ph), std::sin(ph)};
  }
  return 2.0 * std::exp(-x * x) * acc;
}

}  // namespace

std::complex<double> wigner_oracle(const MultiIndex& alpha, const MultiIndex& beta,
                                   const PhasePoint& w, const QuadratureRule& rule) {
  if (alpha.dim() != beta.dim() || alpha.dim() != w.dim())
    throw std::invalid_argument("wigner_oracle: dimension mismatch");
  std::complex<double> v{1.0, 0.0};
  for (int k = 0; k < alpha.dim(); ++k)
    v *= wigner1d_oracle(beta[k], alpha[k], w.x[static_cast<size_t>(k)], w.xi[static_cast<size_t>(k)], rule);
  return v;
}

std::complex<double> wigner_oracle_auto(const MultiIndex& alpha, const MultiIndex& beta,
                                        const PhasePoint& w, double tol) {
  int m = 32;
  std::complex<double> prev = wigner_oracle(alpha, beta, w, gauss_hermite_rule(m));
  for (m = 64; m <= 512; m *= 2) {
    const std::complex<double> cur = wigner_oracle(alpha, beta, w, gauss_hermite_rule(m));
    if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  throw std::runtime_error("wigner_oracle_auto: quadrature did not converge");
}

}  // namespace hocm
