// Multi-index enumeration for the Hermite basis of L^2(R^n).
//
// Degree shell k holds all alpha in N^n with |alpha| = k; its dimension is
// d_k = binom(n+k-1, k). The canonical order inside a shell is graded-lex
// descending (first component descending, ties broken on later components
// descending), so every matrix and file produced downstream is reproducible.

#ifndef HOCM_INDEXING_HPP
#define HOCM_INDEXING_HPP

#include <string>
#include <vector>

namespace hocm {

struct MultiIndex {
  std::vector<int> components;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> c) : components(c) {}
  explicit MultiIndex(std::vector<int> c) : components(std::move(c)) {}

  int dim() const { return static_cast<int>(components.size()); }
  int degree() const;  // |alpha| = sum of components
  int operator[](int i) const { return components[static_cast<size_t>(i)]; }

  bool operator==(const MultiIndex& o) const { return components == o.components; }
  std::string to_string() const;  // "(2,0,1)"
};

struct Shell {
  int n = 0;
  int k = 0;
  std::vector<MultiIndex> indices;  // canonical order, exhaustive
  int dim() const { return static_cast<int>(indices.size()); }
};

// d_k = binom(n+k-1, k)
long long shell_dim(int n, int k);

// All indices of degree k in canonical order. Computed combinatorially
// (recursive split on the first component), never by filtering a hypercube.
// n >= 1 required, k >= 0.
Shell shell_enumerate(int n, int k);

struct IndexRank {
  int shell = 0;     // |alpha|
  int position = 0;  // rank within shell_enumerate(n, |alpha|)
};

// Position of alpha in its shell, computed combinatorially; round-trips with
// shell_enumerate(n, |alpha|).indices[position].
IndexRank index_rank(const MultiIndex& alpha);

// All indices of degree <= K, shell by shell, canonical order inside shells.
std::vector<MultiIndex> enumerate_up_to(int n, int K);

// sum_{k<=K} d_k = binom(n+K, K)
long long total_dim(int n, int K);

}  // namespace hocm

#endif
