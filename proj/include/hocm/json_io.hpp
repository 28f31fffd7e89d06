// JSON/CSV serialization of coefficient matrices, block operators and
// spectral data. Entries are written in canonical order with shortest
// round-trip decimals, so identical runs produce byte-identical files.

#ifndef HOCM_JSON_IO_HPP
#define HOCM_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "hocm/block_algebra.hpp"
#include "hocm/coefficients.hpp"

namespace hocm {

// Coefficient file schema:
// { "n", "cutoff", "ordering": "graded-lex-desc", "normalization": "op(1)=id",
//   "quadrature_order", "source", "version",
//   "entries": [ {"alpha": [...], "beta": [...], "re", "im"}, ... ] }
// entries in canonical (row-major basis) order.
nlohmann::ordered_json coefficient_to_json(const CoefficientMatrix& C);
CoefficientMatrix coefficient_from_json(const nlohmann::json& j);

nlohmann::ordered_json block_to_json(const BlockOperator& B);

nlohmann::ordered_json spectral_to_json(const SpectralData& S, int n, int cutoff);

// "shell,eigenvalue" rows; leading '#' comment lines carry the run tags.
std::string spectral_to_csv(const SpectralData& S, const std::string& tag_comment);

std::string format_shortest(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace hocm

#endif
