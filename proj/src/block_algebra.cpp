#include "hocm/block_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hocm {

Matrix Matrix::identity(int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      std::complex<double> s{0.0, 0.0};
      for (int k = 0; k < cols_; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch in sum");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch in difference");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

double Matrix::max_abs() const {
  double m = 0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::frobenius() const {
  double s = 0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

bool Matrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

bool Matrix::equal(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i].real() != o.a_[i].real() || a_[i].imag() != o.a_[i].imag()) return false;
  return true;
}

BlockOperator BlockOperator::zero(int n, int K, bool hermitian) {
  BlockOperator b;
  b.n = n;
  b.K = K;
  b.hermitian = hermitian;
  b.blocks.reserve(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    const int d = static_cast<int>(shell_dim(n, k));
    b.blocks.emplace_back(d, d);
  }
  return b;
}

BlockOperator BlockOperator::identity(int n, int K) {
  BlockOperator b = zero(n, K, true);
  for (auto& blk : b.blocks) blk = Matrix::identity(blk.rows());
  return b;
}

double BlockOperator::max_abs() const {
  double m = 0;
  for (const Matrix& blk : blocks) m = std::max(m, blk.max_abs());
  return m;
}

namespace {
void require_compatible(const BlockOperator& F, const BlockOperator& G) {
  if (F.n != G.n) throw std::invalid_argument("block operators: dimension mismatch");
  if (F.K != G.K) throw std::invalid_argument("block operators: cutoff mismatch");
}
}  // namespace

BlockOperator moyal_block(const BlockOperator& F, const BlockOperator& G) {
  require_compatible(F, G);
  BlockOperator R;
  R.n = F.n;
  R.K = F.K;
  R.hermitian = false;  // product of Hermitian blocks need not be Hermitian
  R.blocks.reserve(F.blocks.size());
  for (size_t k = 0; k < F.blocks.size(); ++k) R.blocks.push_back(F.blocks[k] * G.blocks[k]);
  return R;
}

BlockOperator commutator(const BlockOperator& F, const BlockOperator& G) {
  require_compatible(F, G);
  BlockOperator R;
  R.n = F.n;
  R.K = F.K;
  R.hermitian = false;
  R.blocks.reserve(F.blocks.size());
  for (size_t k = 0; k < F.blocks.size(); ++k)
    R.blocks.push_back(F.blocks[k] * G.blocks[k] - G.blocks[k] * F.blocks[k]);
  return R;
}

CoefficientMatrix conjugate_evolution(const CoefficientMatrix& C, double t) {
  CoefficientMatrix R = C;
  const int N = C.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const int d = C.degree_of(i) - C.degree_of(j);
      if (d == 0) continue;  // block entries are exact fixed points
      R.at(i, j) = C.at(i, j) * std::polar(1.0, t * d);
    }
  return R;
}

BlockOperator weinstein_average_coeff(const CoefficientMatrix& C) {
  BlockOperator B = BlockOperator::zero(C.n(), C.cutoff(), false);
  for (int k = 0; k <= C.cutoff(); ++k) {
    const int off = C.shell_offset(k);
    const int d = C.shell_size(k);
    Matrix& blk = B.blocks[static_cast<size_t>(k)];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) blk(i, j) = C.at(off + j, off + i);  // operator layout: row = output index
  }
  B.hermitian = true;
  for (const Matrix& blk : B.blocks)
    if (!blk.is_hermitian(1e-12 * std::max(1.0, B.max_abs()))) {
      B.hermitian = false;
      break;
    }
  return B;
}

// ---------------------------------------------------------------------------
// cyclic Jacobi for Hermitian matrices

std::vector<double> hermitian_eigenvalues(const Matrix& A0) {
  if (A0.rows() != A0.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  const int d = A0.rows();
  std::vector<double> eig(static_cast<size_t>(d));
  if (d == 0) return eig;
  Matrix A = A0;
  const double scale = std::max(1.0, A.frobenius());
  const double tol = 1e-12 * scale;

  auto off_norm = [&]() {
    double s = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) s += 2.0 * std::norm(A(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < 30 && off_norm() > tol; ++sweep) {
    for (int p = 0; p < d - 1; ++p)
      for (int q = p + 1; q < d; ++q) {
        const std::complex<double> apq = A(p, q);
        const double beta = std::abs(apq);
        if (beta <= 1e-300) continue;
        // strip the phase, then the real symmetric 2x2 rotation
        const std::complex<double> phase = apq / beta;  // e^{i phi}
        const double app = A(p, p).real(), aqq = A(q, q).real();
        const double tau = (aqq - app) / (2.0 * beta);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const std::complex<double> upp{c, 0.0};
        const std::complex<double> upq{s, 0.0};
        const std::complex<double> uqp = -s * std::conj(phase);
        const std::complex<double> uqq = c * std::conj(phase);
        // columns: A <- A U
        for (int r = 0; r < d; ++r) {
          const std::complex<double> arp = A(r, p), arq = A(r, q);
          A(r, p) = arp * upp + arq * uqp;
          A(r, q) = arp * upq + arq * uqq;
        }
        // rows: A <- U^H A
        for (int r = 0; r < d; ++r) {
          const std::complex<double> apr = A(p, r), aqr = A(q, r);
          A(p, r) = std::conj(upp) * apr + std::conj(uqp) * aqr;
          A(q, r) = std::conj(upq) * apr + std::conj(uqq) * aqr;
        }
      }
  }
  if (off_norm() > tol) throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge in 30 sweeps");
  for (int i = 0; i < d; ++i) eig[static_cast<size_t>(i)] = A(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

SpectralData spectrum(const BlockOperator& F) {
  if (!F.hermitian) throw std::invalid_argument("spectrum: block operator is not flagged Hermitian");
  SpectralData s;
  s.shell_eigenvalues.reserve(F.blocks.size());
  for (const Matrix& blk : F.blocks) {
    std::vector<double> ev = hermitian_eigenvalues(blk);
    s.shell_norms.push_back(ev.empty() ? 0.0 : std::max(std::abs(ev.front()), std::abs(ev.back())));
    s.union_eigenvalues.insert(s.union_eigenvalues.end(), ev.begin(), ev.end());
    s.shell_eigenvalues.push_back(std::move(ev));
  }
  std::sort(s.union_eigenvalues.begin(), s.union_eigenvalues.end());
  for (double nk : s.shell_norms) s.sup_estimate = std::max(s.sup_estimate, nk);
  // trend only: is the last shell still pushing the running max?
  if (s.shell_norms.size() >= 3) {
    double prev_max = 0;
    for (size_t k = 0; k + 1 < s.shell_norms.size(); ++k) prev_max = std::max(prev_max, s.shell_norms[k]);
    s.unbounded_trend = s.shell_norms.back() > prev_max * (1.0 + 1e-9);
  }
  return s;
}

BoundednessReport boundedness_check(const BlockOperator& F) {
  BoundednessReport r;
  const size_t shells = F.blocks.size();
  r.shell_bounds.reserve(shells);
  r.weighted_sup.reserve(shells);
  for (size_t k = 0; k < shells; ++k) {
    const double m = F.blocks[k].max_abs();
    const double dk = static_cast<double>(F.blocks[k].rows());
    r.shell_bounds.push_back(dk * m);
    r.weighted_sup.push_back(std::pow(static_cast<double>(k), F.n - 1) * m);  // 0^0 = 1 at k=0, n=1
  }
  // criterion on observed shells: the weighted sequence must not attain its
  // maximum at the last shell
  if (shells <= 1) {
    r.criterion_holds = true;
  } else {
    double prev_max = 0;
    for (size_t k = 0; k + 1 < shells; ++k) prev_max = std::max(prev_max, r.weighted_sup[k]);
    r.criterion_holds = r.weighted_sup.back() <= prev_max * (1.0 + 1e-12) + 1e-300;
  }
  if (F.hermitian) {
    for (const Matrix& blk : F.blocks) {
      std::vector<double> ev = hermitian_eigenvalues(blk);
      if (!ev.empty()) r.sup_estimate = std::max(r.sup_estimate, std::max(std::abs(ev.front()), std::abs(ev.back())));
    }
  } else {
    for (double b : r.shell_bounds) r.sup_estimate = std::max(r.sup_estimate, b);
  }
  return r;
}

}  // namespace hocm
