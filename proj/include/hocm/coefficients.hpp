// CoefficientMatrix: complex entries c_{alpha,beta} = <Op(f) phi_alpha, phi_beta>
// for all |alpha|, |beta| <= K in canonical order — the central representation
// of a quantized symbol. Always an exact representation of the compression
// P_{<=K} Op(f) P_{<=K}, never an approximation of an infinite object.

#ifndef HOCM_COEFFICIENTS_HPP
#define HOCM_COEFFICIENTS_HPP

#include <complex>
#include <string>
#include <vector>

#include "hocm/indexing.hpp"

namespace hocm {

struct CoeffMetadata {
  std::string source;                           // symbol text / catalog name / file
  int quadrature_order = 0;                     // per-axis nodes actually used
  std::string normalization = "op(1)=id";       // c = (2pi)^{-n} int f W(phi_a, phi_b)
  std::string ordering = "graded-lex-desc";
};

class CoefficientMatrix {
 public:
  CoefficientMatrix() = default;
  CoefficientMatrix(int n, int K);

  int n() const { return n_; }
  int cutoff() const { return K_; }
  int size() const { return static_cast<int>(basis_.size()); }  // total_dim(n, K)

  const std::vector<MultiIndex>& basis() const { return basis_; }
  int degree_of(int i) const { return degrees_[static_cast<size_t>(i)]; }
  int shell_offset(int k) const { return shell_offsets_[static_cast<size_t>(k)]; }
  int shell_size(int k) const {
    return shell_offsets_[static_cast<size_t>(k) + 1] - shell_offsets_[static_cast<size_t>(k)];
  }

  std::complex<double>& at(int i, int j) { return c_[static_cast<size_t>(i) * basis_.size() + j]; }
  std::complex<double> at(int i, int j) const { return c_[static_cast<size_t>(i) * basis_.size() + j]; }

  double max_abs() const;
  // max |c(i,j) - conj(c(j,i))|
  double hermiticity_defect() const;

  CoeffMetadata meta;

 private:
  int n_ = 0;
  int K_ = -1;
  std::vector<MultiIndex> basis_;   // enumerate_up_to(n, K)
  std::vector<int> degrees_;        // |basis_[i]|
  std::vector<int> shell_offsets_;  // K+2 entries, offsets into basis_
  std::vector<std::complex<double>> c_;
};

}  // namespace hocm

#endif
