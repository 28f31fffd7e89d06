#include "hocm/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace hocm {

CoefficientMatrix::CoefficientMatrix(int n, int K) : n_(n), K_(K) {
  if (n < 1) throw std::invalid_argument("CoefficientMatrix: dimension must be >= 1");
  if (K < 0) throw std::invalid_argument("CoefficientMatrix: cutoff must be >= 0");
  basis_ = enumerate_up_to(n, K);
  degrees_.reserve(basis_.size());
  for (const MultiIndex& a : basis_) degrees_.push_back(a.degree());
  shell_offsets_.assign(static_cast<size_t>(K) + 2, 0);
  for (int k = 0; k <= K; ++k)
    shell_offsets_[static_cast<size_t>(k) + 1] =
        shell_offsets_[static_cast<size_t>(k)] + static_cast<int>(shell_dim(n, k));
  c_.assign(basis_.size() * basis_.size(), {0.0, 0.0});
}

double CoefficientMatrix::max_abs() const {
  double m = 0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

double CoefficientMatrix::hermiticity_defect() const {
  double m = 0;
  const int N = size();
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
  return m;
}

}  // namespace hocm
