#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "json.hpp"

#include "hocm/json_io.hpp"
#include "hocm/quantizer.hpp"
#include "oracles.hpp"

using namespace hocm;
using Complex = std::complex<double>;

namespace {

Matrix random_hermitian(int d, std::mt19937& gen) {
  std::uniform_real_distribution<double> v(-2.0, 2.0);
  Matrix A(d, d);
  for (int i = 0; i < d; ++i) {
    A(i, i) = v(gen);
    for (int j = i + 1; j < d; ++j) {
      A(i, j) = Complex(v(gen), v(gen));
      A(j, i) = std::conj(A(i, j));
    }
  }
  return A;
}

}  // namespace

TEST_CASE("Jacobi solves the 2x2 Hermitian problem in closed form") {
  Matrix A(2, 2);
  A(0, 0) = 2.0;
  A(1, 1) = 2.0;
  A(0, 1) = Complex(0.0, 1.0);
  A(1, 0) = Complex(0.0, -1.0);
  const std::vector<double> ev = hermitian_eigenvalues(A);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-13));

  std::mt19937 gen(5);
  std::uniform_real_distribution<double> v(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix B(2, 2);
    B(0, 0) = v(gen);
    B(1, 1) = v(gen);
    B(0, 1) = Complex(v(gen), v(gen));
    B(1, 0) = std::conj(B(0, 1));
    const double mean = 0.5 * (B(0, 0).real() + B(1, 1).real());
    const double delta = 0.5 * (B(0, 0).real() - B(1, 1).real());
    const double radius = std::sqrt(delta * delta + std::norm(B(0, 1)));
    const std::vector<double> ev2 = hermitian_eigenvalues(B);
    CHECK(ev2[0] == doctest::Approx(mean - radius).epsilon(1e-12));
    CHECK(ev2[1] == doctest::Approx(mean + radius).epsilon(1e-12));
  }
}

TEST_CASE("Jacobi agrees with the characteristic-polynomial oracle") {
  std::mt19937 gen(17);
  for (int d = 3; d <= 7; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix A = random_hermitian(d, gen);
      const std::vector<double> jac = hermitian_eigenvalues(A);
      REQUIRE(static_cast<int>(jac.size()) == d);
      const std::vector<double> oracle = hocm_test::charpoly_eigenvalues(A);
      for (int i = 0; i < d; ++i)
        CHECK(jac[static_cast<size_t>(i)] == doctest::Approx(oracle[static_cast<size_t>(i)]).epsilon(1e-8));
      // moment checks independent of root-finding
      double tr = 0, fro2 = 0;
      for (int i = 0; i < d; ++i) tr += A(i, i).real();
      fro2 = A.frobenius() * A.frobenius();
      double s1 = 0, s2 = 0;
      for (double l : jac) {
        s1 += l;
        s2 += l * l;
      }
      CHECK(s1 == doctest::Approx(tr).epsilon(1e-10));
      CHECK(s2 == doctest::Approx(fro2).epsilon(1e-10));
    }
}

TEST_CASE("Jacobi edge cases") {
  Matrix d1(1, 1);
  d1(0, 0) = -4.5;
  CHECK(hermitian_eigenvalues(d1)[0] == doctest::Approx(-4.5));
  Matrix z(3, 3);
  for (double ev : hermitian_eigenvalues(z)) CHECK(ev == 0.0);
  Matrix diag(3, 3);
  diag(0, 0) = 3.0;
  diag(1, 1) = -1.0;
  diag(2, 2) = 2.0;
  const std::vector<double> ev = hermitian_eigenvalues(diag);
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(3.0));
}

TEST_CASE("spectrum of the oscillator: k + n/2 with multiplicity d_k") {
  const CoefficientMatrix C = coeff_matrix(as_phase_fn(catalog_h0(2)), 3);
  const BlockExtraction ex = block_extract(C);
  const SpectralData s = spectrum(ex.blocks);
  for (int k = 0; k <= 3; ++k) {
    const auto& ev = s.shell_eigenvalues[static_cast<size_t>(k)];
    REQUIRE(static_cast<long long>(ev.size()) == shell_dim(2, k));
    for (double l : ev) CHECK(std::abs(l - (k + 1.0)) < 1e-9);
    CHECK(s.shell_norms[static_cast<size_t>(k)] == doctest::Approx(k + 1.0).epsilon(1e-12));
  }
  CHECK(s.sup_estimate == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(s.unbounded_trend);
  CHECK(s.union_eigenvalues.size() == static_cast<size_t>(total_dim(2, 3)));
}

TEST_CASE("angular momentum spectrum matches the independent oracle and the golden file") {
  const CoefficientMatrix C = coeff_matrix(as_phase_fn(catalog_angular_momentum(1, 2, 2)), 5);
  const BlockExtraction ex = block_extract(C);
  REQUIRE(ex.blocks.hermitian);
  const SpectralData s = spectrum(ex.blocks);
  // independent brute-force diagonalization of the same blocks
  for (int k = 0; k <= 5; ++k) {
    const std::vector<double> oracle = hocm_test::charpoly_eigenvalues(ex.blocks.blocks[static_cast<size_t>(k)]);
    const auto& jac = s.shell_eigenvalues[static_cast<size_t>(k)];
    REQUIRE(oracle.size() == jac.size());
    for (size_t i = 0; i < jac.size(); ++i) CHECK(std::abs(jac[i] - oracle[i]) < 1e-8);
  }
  // golden file, frozen from the oracle run
  const auto golden = nlohmann::json::parse(read_text_file(std::string(HOCM_GOLDEN_DIR) +
                                                           "/angular_momentum_spectrum.json"));
  REQUIRE(golden.at("cutoff").get<int>() == 5);
  for (const auto& shell : golden.at("shells")) {
    const int k = shell.at("shell").get<int>();
    const auto ev = shell.at("eigenvalues").get<std::vector<double>>();
    const auto& jac = s.shell_eigenvalues[static_cast<size_t>(k)];
    REQUIRE(ev.size() == jac.size());
    for (size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(jac[i] - ev[i]) < 1e-8);
  }
}

TEST_CASE("spectrum requires the Hermitian flag") {
  BlockOperator B = BlockOperator::zero(1, 2, false);
  CHECK_THROWS_AS(spectrum(B), std::invalid_argument);
}

TEST_CASE("moyal product: identity, squares, and cutoff discipline") {
  const CoefficientMatrix Ch = coeff_matrix(as_phase_fn(catalog_h0(1)), 4);
  const BlockOperator H = block_extract(Ch).blocks;
  const BlockOperator I = BlockOperator::identity(1, 4);
  const BlockOperator IH = moyal_block(I, H);
  for (int k = 0; k <= 4; ++k)
    CHECK(std::abs(IH.blocks[static_cast<size_t>(k)](0, 0) - H.blocks[static_cast<size_t>(k)](0, 0)) == 0.0);
  const BlockOperator H2 = moyal_block(H, H);
  for (int k = 0; k <= 4; ++k)
    CHECK(std::abs(H2.blocks[static_cast<size_t>(k)](0, 0) - (k + 0.5) * (k + 0.5)) < 1e-12);
  const BlockOperator other = BlockOperator::zero(1, 3);
  CHECK_THROWS_AS(moyal_block(H, other), std::invalid_argument);
}

TEST_CASE("commutators: oscillator blocks are central, generic pairs are not") {
  const BlockOperator H = block_extract(coeff_matrix(as_phase_fn(catalog_h0(2)), 3)).blocks;
  std::mt19937 gen(23);
  BlockOperator R = BlockOperator::zero(2, 3, false);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  for (Matrix& blk : R.blocks)
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) blk(i, j) = Complex(v(gen), v(gen));
  CHECK(commutator(H, R).max_abs() < 1e-11);  // h0 blocks are scalar

  const BlockOperator F = block_extract(coeff_matrix(as_phase_fn(catalog_angular_momentum(1, 2, 2)), 3)).blocks;
  const SymbolExpr sym = catalog_monomial({1, 0}, {0, 1}) + catalog_monomial({0, 1}, {1, 0});
  const BlockOperator G = block_extract(coeff_matrix(as_phase_fn(sym), 3)).blocks;
  CHECK(commutator(F, G).blocks[1].max_abs() > 0.1);
}

TEST_CASE("quantized unitary-algebra generators commute with the oscillator blocks") {
  const BlockOperator H = block_extract(coeff_matrix(as_phase_fn(catalog_h0(2)), 3)).blocks;
  for (const auto& [name, gen] : unitary_generator_basis(2)) {
    (void)name;
    const CoefficientMatrix C = coeff_matrix(as_phase_fn(catalog_quadratic(gen, 2)), 3);
    const BlockExtraction ex = block_extract(C);
    CHECK(ex.off_block_residual < 1e-8);
    CHECK(commutator(ex.blocks, H).max_abs() < 1e-11);
  }
}

TEST_CASE("conjugate_evolution phases entries by shell distance") {
  CoefficientMatrix C(1, 3);
  for (int i = 0; i < C.size(); ++i)
    for (int j = 0; j < C.size(); ++j) C.at(i, j) = Complex(1.0, 0.0);
  const CoefficientMatrix C0 = conjugate_evolution(C, 0.0);
  for (int i = 0; i < C.size(); ++i)
    for (int j = 0; j < C.size(); ++j) CHECK(C0.at(i, j) == Complex(1.0, 0.0));
  const double t = 0.37;
  const CoefficientMatrix Ct = conjugate_evolution(C, t);
  for (int i = 0; i < C.size(); ++i)
    for (int j = 0; j < C.size(); ++j) {
      const int d = C.degree_of(i) - C.degree_of(j);
      CHECK(std::abs(Ct.at(i, j) - std::polar(1.0, t * d)) < 1e-15);
    }
  // |alpha| - |beta| = 2 at t = pi/2 flips the sign
  const CoefficientMatrix Cq = conjugate_evolution(C, 1.5707963267948966);
  CHECK(std::abs(Cq.at(2, 0) + 1.0) < 1e-15);
}

TEST_CASE("weinstein average: projection in coefficient form") {
  // x1 couples only adjacent shells, so its average vanishes
  const CoefficientMatrix X = coeff_matrix(as_phase_fn(parse_symbol("x1", 1)), 4);
  const BlockOperator AX = weinstein_average_coeff(X);
  CHECK(AX.max_abs() < 1e-13);
  // an already block-diagonal matrix is untouched
  const CoefficientMatrix H = coeff_matrix(as_phase_fn(catalog_h0(1)), 4);
  const BlockOperator AH = weinstein_average_coeff(H);
  const BlockOperator BH = block_extract(H).blocks;
  for (int k = 0; k <= 4; ++k)
    CHECK((AH.blocks[static_cast<size_t>(k)] - BH.blocks[static_cast<size_t>(k)]).max_abs() == 0.0);
  // averaging kills conjugation phases: average after evolution = average
  const CoefficientMatrix Xt = conjugate_evolution(X, 1.234);
  const BlockOperator AXt = weinstein_average_coeff(Xt);
  for (int k = 0; k <= 4; ++k)
    CHECK((AXt.blocks[static_cast<size_t>(k)] - AX.blocks[static_cast<size_t>(k)]).max_abs() < 1e-15);
}

TEST_CASE("boundedness criterion: growth fails it, decay and projections pass") {
  const BlockOperator H = block_extract(coeff_matrix(as_phase_fn(catalog_h0(1)), 6)).blocks;
  const BoundednessReport rh = boundedness_check(H);
  CHECK_FALSE(rh.criterion_holds);
  CHECK(rh.sup_estimate == doctest::Approx(6.5).epsilon(1e-10));

  const BlockOperator P = block_extract(coeff_matrix(as_phase_fn(phi_closed_form(MultiIndex{0}, MultiIndex{0})), 6)).blocks;
  const BoundednessReport rp = boundedness_check(P);
  CHECK(rp.criterion_holds);
  CHECK(rp.sup_estimate == doctest::Approx(1.0).epsilon(1e-7));

  // synthetic c_{alpha,beta} = delta / (|alpha|+1)^n
  CoefficientMatrix S(2, 6);
  for (int i = 0; i < S.size(); ++i)
    S.at(i, i) = 1.0 / std::pow(S.degree_of(i) + 1.0, 2.0);
  const BoundednessReport rs = boundedness_check(block_extract(S).blocks);
  CHECK(rs.criterion_holds);
}

TEST_CASE("matrix product accumulates in fixed order and adjoint reverses products") {
  std::mt19937 gen(29);
  const Matrix A = random_hermitian(4, gen), B = random_hermitian(4, gen);
  const Matrix AB = A * B;
  CHECK(AB.adjoint().equal(B * A));  // bitwise, Hermitian factors
  const Matrix C = (A * B) * A;
  const Matrix D = A * (B * A);
  CHECK((C - D).max_abs() < 1e-13);  // associativity to round-off for generic entries
}
