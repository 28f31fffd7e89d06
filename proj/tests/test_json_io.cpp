#include "doctest.h"

#include <complex>

#include "hocm/json_io.hpp"
#include "hocm/quantizer.hpp"

using namespace hocm;

TEST_CASE("coefficient JSON carries the required schema and round-trips bitwise") {
  const CoefficientMatrix C = coeff_matrix(as_phase_fn(parse_symbol("x1*xi1 + 0.125*x1", 1)), 3);
  const nlohmann::ordered_json j = coefficient_to_json(C);
  for (const char* key : {"n", "cutoff", "ordering", "normalization", "entries", "quadrature_order",
                          "source", "version"})
    CHECK(j.contains(key));
  CHECK(j["ordering"] == "graded-lex-desc");
  CHECK(j["normalization"] == "op(1)=id");
  CHECK(j["entries"].size() == static_cast<size_t>(C.size()) * C.size());

  const CoefficientMatrix R = coefficient_from_json(nlohmann::json::parse(j.dump()));
  REQUIRE(R.n() == C.n());
  REQUIRE(R.cutoff() == C.cutoff());
  for (int i = 0; i < C.size(); ++i)
    for (int jj = 0; jj < C.size(); ++jj) {
      CHECK(R.at(i, jj).real() == C.at(i, jj).real());
      CHECK(R.at(i, jj).imag() == C.at(i, jj).imag());
    }
}

TEST_CASE("serialization is deterministic") {
  const CoefficientMatrix C = coeff_matrix(as_phase_fn(catalog_h0(1)), 2);
  CHECK(coefficient_to_json(C).dump(2) == coefficient_to_json(C).dump(2));
}

TEST_CASE("malformed coefficient files are rejected") {
  const CoefficientMatrix C = coeff_matrix(as_phase_fn(catalog_h0(1)), 1);
  nlohmann::ordered_json j = coefficient_to_json(C);
  {
    nlohmann::json bad = nlohmann::json::parse(j.dump());
    bad["ordering"] = "row-major";
    CHECK_THROWS_AS(coefficient_from_json(bad), std::invalid_argument);
  }
  {
    nlohmann::json bad = nlohmann::json::parse(j.dump());
    bad["entries"].erase(0);
    CHECK_THROWS_AS(coefficient_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("block and spectral serialization") {
  const CoefficientMatrix C = coeff_matrix(as_phase_fn(catalog_h0(2)), 2);
  const BlockExtraction ex = block_extract(C);
  const nlohmann::ordered_json bj = block_to_json(ex.blocks);
  CHECK(bj["hermitian"].get<bool>());
  CHECK(bj["blocks"].size() == 3);
  CHECK(bj["blocks"][2]["dim"] == 3);

  const SpectralData s = spectrum(ex.blocks);
  const nlohmann::ordered_json sj = spectral_to_json(s, C.n(), C.cutoff());
  CHECK(sj["shells"].size() == 3);
  CHECK(sj["union"].size() == static_cast<size_t>(total_dim(2, 2)));

  const std::string csv = spectral_to_csv(s, "version=test");
  CHECK(csv.rfind("# version=test\nshell,eigenvalue\n", 0) == 0);
  // one data row per eigenvalue
  size_t rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == 2 + static_cast<size_t>(total_dim(2, 2)));
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_shortest(0.5) == "0.5");
  CHECK(format_shortest(1.0 / 3.0) == "0.3333333333333333");
  const double v = 0.1 + 0.2;
  CHECK(std::stod(format_shortest(v)) == v);
}
