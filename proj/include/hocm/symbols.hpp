// Phase-space symbols: a small expression DSL with parser and evaluator, the
// catalog of named symbols, the classical flow, invariance checking, and the
// classical orbit average.
//
// Variables are x1..xn, xi1..xin, z1..zn, zb1..zbn with z_k = x_k + i*xi_k.
// Operators: + - * unary- ^ (nonnegative integer powers); functions: exp;
// builtin h0 = (||x||^2+||xi||^2)/2; literal i is the imaginary unit.
// Precedence: ^ > unary- > * > binary +-. See docs/symbol-grammar.ebnf.
//
// The class tag (polynomial / schwartz / poly-bounded) is declared, not
// inferred; construction enforces only cheap necessary conditions. The tag
// steers quadrature node selection in the quantizer.

#ifndef HOCM_SYMBOLS_HPP
#define HOCM_SYMBOLS_HPP

#include <complex>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hocm/indexing.hpp"
#include "hocm/wigner.hpp"

namespace hocm {

enum class SymbolClass { polynomial, schwartz, poly_bounded };

std::string to_string(SymbolClass c);
SymbolClass symbol_class_from_string(const std::string& s);

enum class VarKind { x, xi, z, zbar };

struct SymbolNode;
using NodePtr = std::shared_ptr<const SymbolNode>;

struct SymbolNode {
  enum class Kind { constant, variable, add, sub, mul, neg, pow, exp_fn, h0 };
  Kind kind = Kind::constant;
  std::complex<double> value{0.0, 0.0};  // constant
  VarKind var = VarKind::x;              // variable
  int var_index = 1;                     // 1-based
  NodePtr a, b;                          // operands
  int exponent = 0;                      // pow
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_variable, index_out_of_range };
  ParseError(Kind k, size_t pos, const std::string& msg)
      : std::runtime_error(msg), kind(k), position(pos) {}
  Kind kind;
  size_t position;  // byte offset into the source text
};

class SymbolExpr {
 public:
  SymbolExpr() = default;
  SymbolExpr(NodePtr root, int n, SymbolClass cls);

  int dim() const { return n_; }
  SymbolClass sym_class() const { return cls_; }
  const NodePtr& root() const { return root_; }

  std::complex<double> eval(const PhasePoint& w) const;
  std::complex<double> operator()(const PhasePoint& w) const { return eval(w); }

  bool contains_exp() const;
  // total degree in (x, xi); -1 when the AST contains exp
  int poly_degree() const;
  bool is_polynomial() const { return poly_degree() >= 0; }

  std::string to_string() const;
  bool same_tree(const SymbolExpr& o) const;  // structural equality

  // Re-tag with validation: polynomial requires an exp-free AST; schwartz
  // requires an exp node and numeric decay along a fixed ray fan.
  SymbolExpr with_class(SymbolClass cls) const;

  // construction helpers (used by the catalog and tests)
  static SymbolExpr constant(std::complex<double> v, int n);
  static SymbolExpr variable(VarKind kind, int index, int n);
  static SymbolExpr h0(int n);
  friend SymbolExpr operator+(const SymbolExpr&, const SymbolExpr&);
  friend SymbolExpr operator-(const SymbolExpr&, const SymbolExpr&);
  friend SymbolExpr operator*(const SymbolExpr&, const SymbolExpr&);
  friend SymbolExpr operator-(const SymbolExpr&);
  SymbolExpr pow(int e) const;
  SymbolExpr exp_of() const;  // exp(this)

 private:
  NodePtr root_;
  int n_ = 1;
  SymbolClass cls_ = SymbolClass::polynomial;
};

// Parse per the grammar; deterministic, whitespace-insensitive. Class tag:
// polynomial when exp-free, poly-bounded otherwise (override via with_class).
SymbolExpr parse_symbol(std::string_view text, int n);

// ---------------------------------------------------------------------------
// catalog

SymbolExpr catalog_h0(int n);
// m_{alpha,beta}(z) = z^alpha zbar^beta
SymbolExpr catalog_monomial(const MultiIndex& alpha, const MultiIndex& beta);
// x_j xi_k - x_k xi_j, axes 1-based
SymbolExpr catalog_angular_momentum(int j, int k, int n);

// Small real square matrix for the quadratic-symbol machinery.
struct RealMatrix {
  int size = 0;
  std::vector<double> a;  // row-major
  RealMatrix() = default;
  explicit RealMatrix(int s) : size(s), a(static_cast<size_t>(s) * s, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * size + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * size + j]; }
};

// Canonical symplectic matrix on stacked (x; xi): [[0, I], [-I, 0]].
// Pinned so that p_J = h0, i.e. the generator of the harmonic flow quantizes
// to the oscillator Hamiltonian.
RealMatrix symplectic_matrix(int n);

// p_A(w) = -1/2 w.(A J).w for A in the embedded unitary algebra
// (A J symmetric and A antisymmetric, checked numerically).
SymbolExpr catalog_quadratic(const RealMatrix& A, int n);

// Basis of the embedded unitary algebra u(n) as real 2n x 2n generators:
// per-axis energies, plane rotations, and symmetric mixers.
std::vector<std::pair<std::string, RealMatrix>> unitary_generator_basis(int n);

// String-addressed catalog for the CLI: "h0", "monomial:a1,..;b1,..",
// "angular:j,k", "ugen:i" (i-th unitary_generator_basis element).
SymbolExpr catalog_lookup(const std::string& name, int n);

// ---------------------------------------------------------------------------
// flow, invariance, averaging

// phi_t: x' = x cos t + xi sin t, xi' = -x sin t + xi cos t (z -> e^{-it} z)
PhasePoint classical_flow(double t, const PhasePoint& w);

struct FlowSample {
  PhasePoint w;
  double t = 0;
};
// Deterministic sample set (seeded) for invariance checks.
std::vector<FlowSample> make_flow_samples(int n, int count, unsigned seed);

struct InvarianceReport {
  bool invariant = false;
  double max_deviation = 0;
};

InvarianceReport flow_invariance_check(const std::function<std::complex<double>(const PhasePoint&)>& f,
                                       const std::vector<FlowSample>& samples, double tol);

inline InvarianceReport flow_invariance_check(const SymbolExpr& f, const std::vector<FlowSample>& samples,
                                              double tol) {
  return flow_invariance_check([&f](const PhasePoint& w) { return f.eval(w); }, samples, tol);
}

// Equispaced orbit average (1/N) sum_j f(phi_{t_j}(w)), t_j = 2 pi j / N.
// Exact for symbols whose orbit dependence is a trigonometric polynomial of
// degree < N; for a polynomial symbol of degree D, N = 2D+1 suffices.
class AveragedSymbol {
 public:
  AveragedSymbol(SymbolExpr base, int t_nodes);
  std::complex<double> eval(const PhasePoint& w) const;
  std::complex<double> operator()(const PhasePoint& w) const { return eval(w); }
  int dim() const { return base_.dim(); }
  int t_nodes() const { return t_nodes_; }
  const SymbolExpr& base() const { return base_; }

 private:
  SymbolExpr base_;
  int t_nodes_ = 1;
};

AveragedSymbol classical_average(const SymbolExpr& f, int t_nodes = 0);  // 0: 2*deg+1 (poly) or 64

}  // namespace hocm

#endif
