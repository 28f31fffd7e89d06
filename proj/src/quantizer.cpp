#include "hocm/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hocm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

double two_pi_pow(int n) {
  double v = 1;
  for (int k = 0; k < n; ++k) v *= kTwoPi;
  return v;
}

}  // namespace

PhaseSpaceFn as_phase_fn(const SymbolExpr& f) {
  PhaseSpaceFn fn;
  fn.eval = [f](const PhasePoint& w) { return f.eval(w); };
  fn.n = f.dim();
  fn.cls = f.sym_class();
  fn.poly_degree = f.poly_degree();
  fn.provenance = f.to_string();
  return fn;
}

PhaseSpaceFn as_phase_fn(const WignerBasisFunction& phi) {
  PhaseSpaceFn fn;
  fn.eval = [phi](const PhasePoint& w) { return phi(w); };
  fn.n = phi.dim();
  fn.cls = SymbolClass::schwartz;
  fn.poly_degree = -1;
  fn.provenance = "phi[" + phi.alpha().to_string() + "," + phi.beta().to_string() + "]";
  return fn;
}

PhaseSpaceFn as_phase_fn(const AveragedSymbol& f) {
  PhaseSpaceFn fn;
  fn.eval = [f](const PhasePoint& w) { return f.eval(w); };
  fn.n = f.dim();
  fn.cls = f.base().sym_class();
  fn.poly_degree = f.base().poly_degree();
  fn.provenance = "average(" + f.base().to_string() + ")";
  return fn;
}

namespace {

// Tensor grid over R^{2n}: per-axis Gauss-Hermite nodes in every x_k and xi_k
// coordinate; the rule's weight e^{-t^2} absorbs the Gaussian of the Wigner
// factor. Entries are then weighted sums of f * (Gaussian-stripped Wigner).
class QuantizeGrid {
 public:
  QuantizeGrid(const PhaseSpaceFn& f, int K, const QuadratureRule& rule) : n_(f.n), m_(rule.order) {
    // stripped 1D Wigner table: (p, q, ix, ixi) -> W~(phi_p, phi_q)(x_ix, xi_ixi)
    const int P = K + 1;
    table_.resize(static_cast<size_t>(P) * P * m_ * m_);
    for (int p = 0; p <= K; ++p)
      for (int q = 0; q <= K; ++q)
        for (int ix = 0; ix < m_; ++ix)
          for (int ixi = 0; ixi < m_; ++ixi)
            table_[idx(p, q, ix, ixi, K)] =
                wigner1d_stripped(p, q, rule.nodes[static_cast<size_t>(ix)],
                                  rule.nodes[static_cast<size_t>(ixi)]);
    // weighted symbol values on the grid, fixed lexicographic order
    const size_t points = power(static_cast<size_t>(m_), 2 * n_);
    fw_.resize(points);
    PhasePoint w(std::vector<double>(static_cast<size_t>(n_), 0.0),
                 std::vector<double>(static_cast<size_t>(n_), 0.0));
    std::vector<int> digits(static_cast<size_t>(2 * n_), 0);
    for (size_t g = 0; g < points; ++g) {
      double wprod = 1;
      for (int k = 0; k < n_; ++k) {
        w.x[static_cast<size_t>(k)] = rule.nodes[static_cast<size_t>(digits[static_cast<size_t>(k)])];
        w.xi[static_cast<size_t>(k)] = rule.nodes[static_cast<size_t>(digits[static_cast<size_t>(n_ + k)])];
        wprod *= rule.weights[static_cast<size_t>(digits[static_cast<size_t>(k)])] *
                 rule.weights[static_cast<size_t>(digits[static_cast<size_t>(n_ + k)])];
      }
      fw_[g] = wprod * f.eval(w);
      // increment mixed-radix counter
      for (size_t d = digits.size(); d-- > 0;) {
        if (++digits[d] < m_) break;
        digits[d] = 0;
      }
    }
    K_ = K;
  }

  std::complex<double> entry(const MultiIndex& alpha, const MultiIndex& beta) const {
    std::complex<double> acc{0.0, 0.0};
    std::vector<int> digits(static_cast<size_t>(2 * n_), 0);
    for (size_t g = 0; g < fw_.size(); ++g) {
      std::complex<double> wig{1.0, 0.0};
      for (int k = 0; k < n_; ++k)
        wig *= table_[idx(alpha[k], beta[k], digits[static_cast<size_t>(k)],
                          digits[static_cast<size_t>(n_ + k)], K_)];
      acc += fw_[g] * wig;
      for (size_t d = digits.size(); d-- > 0;) {
        if (++digits[d] < m_) break;
        digits[d] = 0;
      }
    }
    return acc / two_pi_pow(n_);
  }

 private:
  static size_t power(size_t b, int e) {
    size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }
  size_t idx(int p, int q, int ix, int ixi, int K) const {
    return ((static_cast<size_t>(p) * (K + 1) + q) * m_ + ix) * m_ + ixi;
  }

  int n_;
  int m_;
  int K_ = 0;
  std::vector<std::complex<double>> table_;
  std::vector<std::complex<double>> fw_;
};

CoefficientMatrix matrix_with_rule(const PhaseSpaceFn& f, int K, const QuadratureRule& rule) {
  CoefficientMatrix C(f.n, K);
  C.meta.source = f.provenance;
  C.meta.quadrature_order = rule.order;
  const QuantizeGrid grid(f, K, rule);
  const auto& basis = C.basis();
  const int N = C.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      C.at(i, j) = grid.entry(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
  return C;
}

double matrix_diff(const CoefficientMatrix& A, const CoefficientMatrix& B) {
  double m = 0;
  const int N = A.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m = std::max(m, std::abs(A.at(i, j) - B.at(i, j)));
  return m;
}

}  // namespace

std::complex<double> coeff(const PhaseSpaceFn& f, const MultiIndex& alpha, const MultiIndex& beta,
                           const QuadratureRule& rule) {
  if (alpha.dim() != f.n || beta.dim() != f.n) throw std::invalid_argument("coeff: dimension mismatch");
  // one-entry grid; K covers just the indices at hand
  const int K = std::max(alpha.degree(), beta.degree());
  QuantizeGrid grid(f, K, rule);
  return grid.entry(alpha, beta);
}

CoefficientMatrix coeff_matrix(const PhaseSpaceFn& f, int K, const QuadratureRule& rule) {
  return matrix_with_rule(f, K, rule);
}

CoefficientMatrix coeff_matrix(const PhaseSpaceFn& f, int K) {
  if (f.cls == SymbolClass::polynomial) {
    if (f.poly_degree < 0) throw std::invalid_argument("coeff_matrix: polynomial class requires a degree");
    return matrix_with_rule(f, K, gauss_hermite_rule(quantizer_node_count(f.poly_degree, K)));
  }
  // doubling until two successive refinements agree
  int m = 16;
  CoefficientMatrix prev = matrix_with_rule(f, K, gauss_hermite_rule(m));
  for (m = 32; m <= 256; m *= 2) {
    CoefficientMatrix cur = matrix_with_rule(f, K, gauss_hermite_rule(m));
    if (matrix_diff(prev, cur) <= 1e-10 * (1.0 + cur.max_abs())) return cur;
    prev = std::move(cur);
  }
  throw std::runtime_error("coeff_matrix: quadrature did not converge under node doubling");
}

std::complex<double> reconstruct(const CoefficientMatrix& C, const PhasePoint& w) {
  return Reconstructor(C)(w);
}

Reconstructor::Reconstructor(CoefficientMatrix C) : C_(std::move(C)) {
  const auto& basis = C_.basis();
  basis_.reserve(basis.size() * basis.size());
  for (const MultiIndex& a : basis)
    for (const MultiIndex& b : basis) basis_.emplace_back(a, b);
}

std::complex<double> Reconstructor::operator()(const PhasePoint& w) const {
  std::complex<double> acc{0.0, 0.0};
  const int N = C_.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const std::complex<double> c = C_.at(i, j);
      if (c.real() == 0.0 && c.imag() == 0.0) continue;
      acc += c * basis_[static_cast<size_t>(i) * N + j](w);
    }
  return acc;
}

BlockExtraction block_extract(const CoefficientMatrix& C) {
  BlockExtraction ex;
  ex.blocks = BlockOperator::zero(C.n(), C.cutoff(), false);
  const int N = C.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (C.degree_of(i) != C.degree_of(j))
        ex.off_block_residual = std::max(ex.off_block_residual, std::abs(C.at(i, j)));
  for (int k = 0; k <= C.cutoff(); ++k) {
    const int off = C.shell_offset(k);
    const int d = C.shell_size(k);
    Matrix& blk = ex.blocks.blocks[static_cast<size_t>(k)];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) blk(i, j) = C.at(off + j, off + i);  // operator layout
  }
  const double scale = std::max(1.0, C.max_abs());
  ex.blocks.hermitian = C.hermiticity_defect() <= 1e-10 * scale;
  return ex;
}

GrowthReport growth_diagnostic(const CoefficientMatrix& C) {
  if (C.cutoff() < 4) throw std::invalid_argument("growth_diagnostic: cutoff >= 4 required for a fit");
  GrowthReport r;
  r.level_max.assign(static_cast<size_t>(C.cutoff()) + 1, 0.0);
  const int N = C.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const int level = std::max(C.degree_of(i), C.degree_of(j));
      r.level_max[static_cast<size_t>(level)] =
          std::max(r.level_max[static_cast<size_t>(level)], std::abs(C.at(i, j)));
    }
  double global = 0;
  for (double v : r.level_max) global = std::max(global, v);
  // least squares on log-log over levels >= 1 with signal
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int l = 1; l <= C.cutoff(); ++l) {
    const double v = r.level_max[static_cast<size_t>(l)];
    if (v <= 1e-300) continue;
    const double lx = std::log(static_cast<double>(l)), ly = std::log(v);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  r.exponent = (count >= 2) ? (count * sxy - sx * sy) / (count * sxx - sx * sx) : 0.0;
  r.rapid_decay = true;
  for (int l = (C.cutoff() + 1) / 2; l <= C.cutoff(); ++l)
    if (r.level_max[static_cast<size_t>(l)] > 1e-12 * global) {
      r.rapid_decay = false;
      break;
    }
  return r;
}

// ---------------------------------------------------------------------------
// sphere rules and the coarea path

SphereRule sphere_rule(int n, int degree) {
  if (degree < 0) throw std::invalid_argument("sphere_rule: degree must be >= 0");
  SphereRule rule;
  rule.n = n;
  if (n == 1) {
    // circle, trapezoid in the angle; exact for trig degree < N
    const int N = degree + 2;
    for (int j = 0; j < N; ++j) {
      const double th = kTwoPi * j / N;
      rule.points.push_back({std::cos(th), std::sin(th)});
      rule.weights.push_back(kTwoPi / N);
    }
    return rule;
  }
  if (n == 2) {
    // S^3 via |z1| = sqrt(1-u), |z2| = sqrt(u), torus angles; dS = (1/2) du dth1 dth2
    const int Nth = degree + 2;
    const QuadratureRule gl = gauss_legendre_rule(degree / 2 + 2);
    for (size_t iu = 0; iu < gl.nodes.size(); ++iu) {
      const double u = 0.5 * (gl.nodes[iu] + 1.0);  // [0,1]
      const double wu = 0.5 * gl.weights[iu];
      const double r1 = std::sqrt(1.0 - u), r2 = std::sqrt(u);
      for (int j1 = 0; j1 < Nth; ++j1)
        for (int j2 = 0; j2 < Nth; ++j2) {
          const double t1 = kTwoPi * j1 / Nth, t2 = kTwoPi * j2 / Nth;
          rule.points.push_back({r1 * std::cos(t1), r2 * std::cos(t2),
                                 r1 * std::sin(t1), r2 * std::sin(t2)});
          rule.weights.push_back(0.5 * wu * (kTwoPi / Nth) * (kTwoPi / Nth));
        }
    }
    return rule;
  }
  throw std::invalid_argument("sphere_rule: deterministic rules cover n in {1,2}; use sphere_rule_monte_carlo");
}

SphereRule sphere_rule_monte_carlo(int n, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("sphere_rule_monte_carlo: need samples >= 1");
  SphereRule rule;
  rule.n = n;
  rule.monte_carlo = true;
  rule.seed = seed;
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  // area(S^{2n-1}) = 2 pi^n / (n-1)!
  double area = 2.0;
  for (int k = 0; k < n; ++k) area *= kPi;
  for (int k = 2; k < n; ++k) area /= k;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> p(static_cast<size_t>(2 * n));
    double norm = 0;
    do {
      norm = 0;
      for (double& v : p) {
        v = normal(gen);
        norm += v * v;
      }
    } while (norm == 0);
    norm = std::sqrt(norm);
    for (double& v : p) v /= norm;
    rule.points.push_back(std::move(p));
    rule.weights.push_back(area / samples);
  }
  return rule;
}

std::complex<double> coeff_coarea(const PhaseSpaceFn& f, const MultiIndex& alpha, const MultiIndex& beta,
                                  int radial_nodes, const SphereRule& sphere, double* std_error) {
  if (alpha.dim() != f.n || beta.dim() != f.n || sphere.n != f.n)
    throw std::invalid_argument("coeff_coarea: dimension mismatch");
  if (alpha.degree() != beta.degree())
    throw std::invalid_argument("coeff_coarea: |alpha| = |beta| required (the pairing is shell-diagonal)");
  // the theorem's hypothesis: f must be a constant of motion
  const auto samples = make_flow_samples(f.n, 24, 20240531u);
  const InvarianceReport inv = flow_invariance_check(f.eval, samples, 1e-8);
  if (!inv.invariant)
    throw std::invalid_argument("coeff_coarea: symbol is not flow-invariant (max deviation " +
                                std::to_string(inv.max_deviation) + ")");

  // W(phi_alpha, phi_beta) factors per axis as (p,q) = (alpha_k, beta_k)
  std::vector<std::pair<int, int>> axes;
  for (int k = 0; k < f.n; ++k) axes.emplace_back(alpha[k], beta[k]);

  const QuadratureRule gl = gauss_laguerre_rule(radial_nodes);
  std::complex<double> acc{0.0, 0.0};
  double var_acc = 0;
  PhasePoint w(std::vector<double>(static_cast<size_t>(f.n), 0.0),
               std::vector<double>(static_cast<size_t>(f.n), 0.0));
  const size_t np = sphere.points.size();
  for (size_t iq = 0; iq < gl.nodes.size(); ++iq) {
    const double u = gl.nodes[iq];  // u = 2 lambda; the Wigner Gaussian e^{-u} sits in the weight
    const double r = std::sqrt(u);
    std::complex<double> sphere_sum{0.0, 0.0};
    double abs2_sum = 0;
    for (size_t ip = 0; ip < np; ++ip) {
      const auto& p = sphere.points[ip];
      for (int k = 0; k < f.n; ++k) {
        w.x[static_cast<size_t>(k)] = r * p[static_cast<size_t>(k)];
        w.xi[static_cast<size_t>(k)] = r * p[static_cast<size_t>(f.n + k)];
      }
      std::complex<double> wig{1.0, 0.0};
      for (int k = 0; k < f.n; ++k)
        wig *= wigner1d_stripped(axes[static_cast<size_t>(k)].first, axes[static_cast<size_t>(k)].second,
                                 w.x[static_cast<size_t>(k)], w.xi[static_cast<size_t>(k)]);
      const std::complex<double> v = f.eval(w) * wig;
      sphere_sum += sphere.weights[ip] * v;
      abs2_sum += std::norm(v);
    }
    // unit-sphere sum -> sphere of radius r -> projective-orbit integral
    const double scale_to_sphere = std::pow(r, 2.0 * f.n - 1.0);
    const double orbit_length = kTwoPi * r;
    const std::complex<double> cp_integral = sphere_sum * scale_to_sphere / orbit_length;
    acc += gl.weights[iq] * cp_integral;
    if (sphere.monte_carlo && np > 1) {
      // sphere_sum = (area/N) sum v_i; Var(sphere_sum) ~ area^2/N * sample variance of v
      const std::complex<double> mean = sphere_sum / (sphere.weights[0] * static_cast<double>(np));
      const double sample_var = std::max(0.0, abs2_sum / np - std::norm(mean));
      const double area = sphere.weights[0] * static_cast<double>(np);
      const double factor = gl.weights[iq] * scale_to_sphere / orbit_length;
      var_acc += factor * factor * area * area * sample_var / static_cast<double>(np);
    }
  }
  // <Op(f) phi_a, phi_b> = (2pi)^{-n} * 2 pi * int_0^inf CP(lambda) dlambda, dlambda = du/2
  const double outer = kTwoPi * 0.5 / two_pi_pow(f.n);
  if (std_error) *std_error = sphere.monte_carlo ? std::sqrt(var_acc) * outer : 0.0;
  return acc * outer;
}

}  // namespace hocm
