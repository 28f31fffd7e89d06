// Weyl quantization over the Hermite basis by phase-space quadrature.
//
//   c_{alpha,beta} = <Op(f) phi_alpha, phi_beta>
//                  = (2 pi)^{-n} int f(x,xi) W(phi_alpha, phi_beta)(x,xi) dx dxi
//
// The Gaussian of the Wigner factor is folded into Gauss-Hermite weights per
// axis, so the remaining integrand for a polynomial symbol is polynomial and
// the coefficients are exact at finite node count (m >= (D + 2K)/2 + 1 per
// axis). Non-polynomial symbols go through node doubling until two successive
// refinements agree within 1e-10.
//
// coeff_coarea evaluates the same pairing as a radial integral of
// projective-orbit averages (sphere integral divided by the orbit length
// 2 pi sqrt(2 lambda)), cross-validating the direct quadrature on
// flow-invariant symbols.

#ifndef HOCM_QUANTIZER_HPP
#define HOCM_QUANTIZER_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include "hocm/block_algebra.hpp"
#include "hocm/coefficients.hpp"
#include "hocm/hermite.hpp"
#include "hocm/symbols.hpp"
#include "hocm/wigner.hpp"

namespace hocm {

// What the quantizer integrates: any phase-space evaluator plus the class
// metadata that steers node selection.
struct PhaseSpaceFn {
  std::function<std::complex<double>(const PhasePoint&)> eval;
  int n = 1;
  SymbolClass cls = SymbolClass::poly_bounded;
  int poly_degree = -1;  // >= 0 required when cls == polynomial
  std::string provenance;
};

PhaseSpaceFn as_phase_fn(const SymbolExpr& f);
PhaseSpaceFn as_phase_fn(const WignerBasisFunction& phi);  // schwartz
PhaseSpaceFn as_phase_fn(const AveragedSymbol& f);

// Single entry with an explicit per-axis rule.
std::complex<double> coeff(const PhaseSpaceFn& f, const MultiIndex& alpha, const MultiIndex& beta,
                           const QuadratureRule& rule);

// All entries |alpha|,|beta| <= K. Deterministic entry order and summation
// order regardless of how work is scheduled.
CoefficientMatrix coeff_matrix(const PhaseSpaceFn& f, int K, const QuadratureRule& rule);
// Rule selection from the class tag: exact node count for polynomial symbols,
// node doubling otherwise. The order actually used lands in the metadata.
CoefficientMatrix coeff_matrix(const PhaseSpaceFn& f, int K);

// Partial sum sum_{|a|,|b|<=K} c_{a,b} Phi^{a,b}(w) via the closed form.
std::complex<double> reconstruct(const CoefficientMatrix& C, const PhasePoint& w);

// Evaluator owning a snapshot of the coefficients and the closed-form basis,
// for grids.
class Reconstructor {
 public:
  explicit Reconstructor(CoefficientMatrix C);
  std::complex<double> operator()(const PhasePoint& w) const;

 private:
  CoefficientMatrix C_;
  std::vector<WignerBasisFunction> basis_;  // row-major over (i, j)
};

struct BlockExtraction {
  BlockOperator blocks;
  double off_block_residual = 0;  // max |c_{alpha,beta}| over |alpha| != |beta|
};

BlockExtraction block_extract(const CoefficientMatrix& C);

struct GrowthReport {
  std::vector<double> level_max;  // max |c| per level max(|alpha|, |beta|)
  double exponent = 0;            // log-log fit over levels >= 1
  bool rapid_decay = false;       // upper half of levels below 1e-12 * global max
};

// Requires cutoff >= 4 for a meaningful fit.
GrowthReport growth_diagnostic(const CoefficientMatrix& C);

// Quadrature over the unit sphere S^{2n-1}, coordinates stacked (x..., xi...).
// Deterministic for n in {1, 2} (circle / torus-parameterized rules exact for
// spherical polynomials up to `degree`), seeded Monte Carlo for n >= 3.
struct SphereRule {
  int n = 1;
  std::vector<std::vector<double>> points;  // 2n coords each, on the unit sphere
  std::vector<double> weights;              // sum to area(S^{2n-1})
  bool monte_carlo = false;
  std::uint64_t seed = 0;
};

SphereRule sphere_rule(int n, int degree);
SphereRule sphere_rule_monte_carlo(int n, int samples, std::uint64_t seed);

// <Op(f) phi_alpha, phi_beta> as a radial integral over lambda of
// projective-orbit averages; requires |alpha| = |beta| and flow-invariant f
// (violations are reported as errors, not silently accepted). For Monte Carlo
// sphere rules the standard error estimate is written to *std_error.
std::complex<double> coeff_coarea(const PhaseSpaceFn& f, const MultiIndex& alpha, const MultiIndex& beta,
                                  int radial_nodes, const SphereRule& sphere,
                                  double* std_error = nullptr);

}  // namespace hocm

#endif
