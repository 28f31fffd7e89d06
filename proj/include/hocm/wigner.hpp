// Wigner transforms of Hermite basis pairs.
//
// Conventions, pinned once and verified against the integral oracle:
//   W(u,v)(x,xi) = int e^{-i xi.p} u(x + p/2) conj(v(x - p/2)) dp
//   Phi^{alpha,beta} = W(phi_beta, phi_alpha)
//
// Per axis, with z = x + i*xi and a >= b,
//   W(phi_a, phi_b)(x,xi) = 2 (-1)^b sqrt(b!/a!) (sqrt2 zbar)^{a-b}
//                           L_b^{(a-b)}(2|z|^2) e^{-|z|^2}
// and the conjugate for a < b. The radial factor is the associated Laguerre
// polynomial generated by its three-term recurrence. Everything here is
// evaluated in Gaussian-factored form so large degrees do not overflow.

#ifndef HOCM_WIGNER_HPP
#define HOCM_WIGNER_HPP

#include <complex>
#include <vector>

#include "hocm/hermite.hpp"
#include "hocm/indexing.hpp"

namespace hocm {

struct PhasePoint {
  std::vector<double> x;   // positions
  std::vector<double> xi;  // momenta

  PhasePoint() = default;
  PhasePoint(std::vector<double> x_, std::vector<double> xi_);

  int dim() const { return static_cast<int>(x.size()); }
  std::complex<double> z(int k) const { return {x[static_cast<size_t>(k)], xi[static_cast<size_t>(k)]}; }
  double norm_sq() const;  // ||x||^2 + ||xi||^2
};

// 1D Wigner transform W(phi_p, phi_q)(x,xi), closed form.
std::complex<double> wigner1d_closed(int p, int q, double x, double xi);
// Same without the e^{-|z|^2} factor (for quadratures folding the Gaussian
// into the weights).
std::complex<double> wigner1d_stripped(int p, int q, double x, double xi);

// Fast evaluator for Phi^{alpha,beta} = W(phi_beta, phi_alpha).
class WignerBasisFunction {
 public:
  WignerBasisFunction(MultiIndex alpha, MultiIndex beta);

  std::complex<double> operator()(const PhasePoint& w) const;
  // value * e^{+||w||^2}; polynomial of degree |alpha|+|beta|
  std::complex<double> stripped(const PhasePoint& w) const;

  const MultiIndex& alpha() const { return alpha_; }
  const MultiIndex& beta() const { return beta_; }
  int dim() const { return alpha_.dim(); }
  int poly_degree() const { return alpha_.degree() + beta_.degree(); }

  struct AxisFactor {
    int p = 0, q = 0;       // this axis contributes W(phi_p, phi_q), p = beta_k, q = alpha_k
    int angular = 0;        // p - q: zbar^{angular} for angular > 0, z^{-angular} otherwise
    double prefactor = 1;   // 2 (-1)^{min} sqrt(min!/max!) (sqrt2)^{|p-q|}
    std::vector<double> radial_coeffs;  // L_min^{(|p-q|)} in u = 2|z|^2, ascending powers
  };
  const std::vector<AxisFactor>& factors() const { return factors_; }

 private:
  MultiIndex alpha_, beta_;
  std::vector<AxisFactor> factors_;
};

WignerBasisFunction phi_closed_form(const MultiIndex& alpha, const MultiIndex& beta);

// Brute-force integral oracle for Phi^{alpha,beta}(w): the defining integral,
// computed per axis by Gauss-Hermite quadrature after factoring the Gaussian
// out of the shifted Hermite product. Independent of the closed form above.
std::complex<double> wigner_oracle(const MultiIndex& alpha, const MultiIndex& beta,
                                   const PhasePoint& w, const QuadratureRule& rule);

// Oracle with node doubling until two refinements agree within tol.
std::complex<double> wigner_oracle_auto(const MultiIndex& alpha, const MultiIndex& beta,
                                        const PhasePoint& w, double tol = 1e-11);

}  // namespace hocm

#endif
