// Orthonormal Hermite functions and Gaussian quadrature rules.
//
// phi_m is the L^2(R)-orthonormal Hermite function, built by the stable
// three-term recurrence
//     phi_0(t)     = pi^{-1/4} e^{-t^2/2}
//     phi_{m+1}(t) = t*sqrt(2/(m+1))*phi_m(t) - sqrt(m/(m+1))*phi_{m-1}(t),
// tensorized over coordinates in n dimensions. Orthonormality is the
// invariant everything downstream leans on.
//
// Gauss-Hermite rules (weight e^{-t^2}) drive the quantizer and the
// integral oracles; Gauss-Laguerre (weight e^{-u} on [0,inf)) and
// Gauss-Legendre rules are plumbing for the coarea path.

#ifndef HOCM_HERMITE_HPP
#define HOCM_HERMITE_HPP

#include <span>
#include <vector>

#include "hocm/indexing.hpp"

namespace hocm {

struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes are the roots of the degree-m physicists' Hermite polynomial; weights
// positive, summing to sqrt(pi); exact for t^j e^{-t^2}, j <= 2m-1.
// Newton iteration failing to converge is a hard error.
QuadratureRule gauss_hermite_rule(int m);

// Weight e^{-u} on [0, inf); exact for u^j e^{-u}, j <= 2m-1.
QuadratureRule gauss_laguerre_rule(int m);

// Weight 1 on [-1, 1]; exact for polynomials of degree <= 2m-1.
QuadratureRule gauss_legendre_rule(int m);

// phi_m(t), orthonormal 1D Hermite function.
double hermite_eval1d(int m, double t);

// phi_m(t) * e^{t^2/2}: the polynomial part, for quadratures that fold the
// Gaussian into the weight. Same recurrence, Gaussian-free seed.
double hermite_poly1d(int m, double t);

// phi_alpha(x) = prod_k phi_{alpha_k}(x_k)
double hermite_eval(const MultiIndex& alpha, std::span<const double> x);

// Per-axis node count making the quantizer integrals exact for a polynomial
// symbol of total degree D with coefficients up to shell K.
inline int quantizer_node_count(int poly_degree, int K) {
  return (poly_degree + 2 * K) / 2 + 1;
}

}  // namespace hocm

#endif
