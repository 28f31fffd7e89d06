// Shell-block algebra of quantized constants of motion.
//
// A constant of motion quantizes to a block-diagonal operator: one d_k x d_k
// matrix per degree shell. Blocks are stored in standard operator layout,
//   block[k](i,j) = <Op(f) phi_{idx_j}, phi_{idx_i}>,  idx in canonical shell order,
// so the Moyal product of two constants of motion is the plain per-shell
// matrix product in operator-composition order, with no truncation error.
// Spectra come from a cyclic Jacobi eigensolver on the Hermitian blocks.

#ifndef HOCM_BLOCK_ALGEBRA_HPP
#define HOCM_BLOCK_ALGEBRA_HPP

#include <complex>
#include <vector>

#include "hocm/coefficients.hpp"

namespace hocm {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::complex<double>& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  std::complex<double> operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;  // k-ascending accumulation
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix adjoint() const;

  double max_abs() const;
  double frobenius() const;
  bool is_hermitian(double tol) const;
  bool equal(const Matrix& o) const;  // bitwise entry equality

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::complex<double>> a_;
};

struct BlockOperator {
  int n = 1;
  int K = -1;
  std::vector<Matrix> blocks;  // blocks[k] is d_k x d_k
  bool hermitian = false;

  static BlockOperator zero(int n, int K, bool hermitian = true);
  static BlockOperator identity(int n, int K);
  double max_abs() const;
};

// Shell-wise product in operator-composition order: Op(f star g) = Op(f) Op(g).
// Exact: blocks of constants of motion do not couple shells. Cutoff or
// dimension mismatch is an error.
BlockOperator moyal_block(const BlockOperator& F, const BlockOperator& G);

// F star G - G star F per shell.
BlockOperator commutator(const BlockOperator& F, const BlockOperator& G);

// Coefficient form of conjugation by the oscillator evolution:
// c_{alpha,beta} -> e^{i t (|alpha|-|beta|)} c_{alpha,beta}. Block-diagonal
// matrices are fixed points for every t.
CoefficientMatrix conjugate_evolution(const CoefficientMatrix& C, double t);

// Orbit average in coefficient form: zero out all |alpha| != |beta| entries
// and return the shell blocks. Simultaneously the classical average of the
// symbol and the quantum average of the operator; idempotent.
BlockOperator weinstein_average_coeff(const CoefficientMatrix& C);

// Eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi rotations
// (off-diagonal Frobenius norm below 1e-12 * scale at convergence, 30-sweep
// cap). Non-convergence is a hard error.
std::vector<double> hermitian_eigenvalues(const Matrix& A);

struct SpectralData {
  std::vector<std::vector<double>> shell_eigenvalues;  // ascending per shell, d_k each
  std::vector<double> union_eigenvalues;               // sorted multiset union
  std::vector<double> shell_norms;                     // max |eigenvalue| per shell
  double sup_estimate = 0;                             // max over computed shells only
  bool unbounded_trend = false;                        // norms still growing at the cutoff
};

// Requires the Hermitian flag (real symbol); non-Hermitian input is an error.
SpectralData spectrum(const BlockOperator& F);

struct BoundednessReport {
  std::vector<double> shell_bounds;  // d_k * max|entry| per shell
  std::vector<double> weighted_sup;  // s_k = k^{n-1} * max|entry| per shell
  bool criterion_holds = false;      // trend on the observed shells, not a claim about the full operator
  double sup_estimate = 0;
};

BoundednessReport boundedness_check(const BlockOperator& F);

}  // namespace hocm

#endif
