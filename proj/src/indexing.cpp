#include "hocm/indexing.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hocm {

int MultiIndex::degree() const {
  return std::accumulate(components.begin(), components.end(), 0);
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << ',';
    os << components[i];
  }
  os << ')';
  return os.str();
}

long long shell_dim(int n, int k) {
  if (n < 1) throw std::invalid_argument("shell_dim: dimension n must be >= 1");
  if (k < 0) throw std::invalid_argument("shell_dim: degree k must be >= 0");
  // binom(n+k-1, k), multiplicative form
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - 1 + j) / j;
  return r;
}

namespace {

void emit(int n_left, int k_left, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (n_left == 1) {
    prefix.push_back(k_left);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int c = k_left; c >= 0; --c) {
    prefix.push_back(c);
    emit(n_left - 1, k_left - c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Shell shell_enumerate(int n, int k) {
  if (n < 1) throw std::invalid_argument("shell_enumerate: dimension n must be >= 1");
  if (k < 0) throw std::invalid_argument("shell_enumerate: degree k must be >= 0");
  Shell s;
  s.n = n;
  s.k = k;
  s.indices.reserve(static_cast<size_t>(shell_dim(n, k)));
  std::vector<int> prefix;
  emit(n, k, prefix, s.indices);
  return s;
}

IndexRank index_rank(const MultiIndex& alpha) {
  const int n = alpha.dim();
  if (n < 1) throw std::invalid_argument("index_rank: empty multi-index");
  for (int c : alpha.components)
    if (c < 0) throw std::invalid_argument("index_rank: negative component");
  const int k = alpha.degree();
  // Count indices that precede alpha: at each position, indices whose
  // component there exceeds alpha's, with the remaining degree spread over
  // the remaining positions.
  long long pos = 0;
  int remaining = k;
  for (int i = 0; i < n - 1; ++i) {
    const int ai = alpha[i];
    for (int c = remaining; c > ai; --c) pos += shell_dim(n - 1 - i, remaining - c);
    remaining -= ai;
  }
  return IndexRank{k, static_cast<int>(pos)};
}

std::vector<MultiIndex> enumerate_up_to(int n, int K) {
  if (K < 0) throw std::invalid_argument("enumerate_up_to: cutoff K must be >= 0");
  std::vector<MultiIndex> all;
  all.reserve(static_cast<size_t>(total_dim(n, K)));
  for (int k = 0; k <= K; ++k) {
    Shell s = shell_enumerate(n, k);
    all.insert(all.end(), s.indices.begin(), s.indices.end());
  }
  return all;
}

long long total_dim(int n, int K) {
  if (n < 1) throw std::invalid_argument("total_dim: dimension n must be >= 1");
  if (K < 0) throw std::invalid_argument("total_dim: cutoff K must be >= 0");
  long long r = 1;
  for (int j = 1; j <= K; ++j) r = r * (n + j) / j;
  return r;
}

}  // namespace hocm
