#include "hocm/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hocm/version.hpp"

namespace hocm {

std::string format_shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json coefficient_to_json(const CoefficientMatrix& C) {
  nlohmann::ordered_json j;
  j["n"] = C.n();
  j["cutoff"] = C.cutoff();
  j["ordering"] = C.meta.ordering;
  j["normalization"] = C.meta.normalization;
  j["quadrature_order"] = C.meta.quadrature_order;
  j["source"] = C.meta.source;
  j["version"] = kVersion;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  const auto& basis = C.basis();
  const int N = C.size();
  for (int i = 0; i < N; ++i)
    for (int jj = 0; jj < N; ++jj) {
      nlohmann::ordered_json e;
      e["alpha"] = basis[static_cast<size_t>(i)].components;
      e["beta"] = basis[static_cast<size_t>(jj)].components;
      e["re"] = C.at(i, jj).real();
      e["im"] = C.at(i, jj).imag();
      entries.push_back(std::move(e));
    }
  j["entries"] = std::move(entries);
  return j;
}

CoefficientMatrix coefficient_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int K = j.at("cutoff").get<int>();
  if (j.at("ordering").get<std::string>() != "graded-lex-desc")
    throw std::invalid_argument("coefficient_from_json: unsupported ordering tag");
  if (j.at("normalization").get<std::string>() != "op(1)=id")
    throw std::invalid_argument("coefficient_from_json: unsupported normalization tag");
  CoefficientMatrix C(n, K);
  if (j.contains("quadrature_order")) C.meta.quadrature_order = j["quadrature_order"].get<int>();
  if (j.contains("source")) C.meta.source = j["source"].get<std::string>();
  const auto& entries = j.at("entries");
  const size_t N = static_cast<size_t>(C.size());
  if (entries.size() != N * N)
    throw std::invalid_argument("coefficient_from_json: entry count does not match n/cutoff");
  for (const auto& e : entries) {
    const MultiIndex a(e.at("alpha").get<std::vector<int>>());
    const MultiIndex b(e.at("beta").get<std::vector<int>>());
    if (a.dim() != n || b.dim() != n)
      throw std::invalid_argument("coefficient_from_json: index dimension mismatch");
    const IndexRank ra = index_rank(a), rb = index_rank(b);
    if (ra.shell > K || rb.shell > K)
      throw std::invalid_argument("coefficient_from_json: index degree exceeds the cutoff");
    const int i = C.shell_offset(ra.shell) + ra.position;
    const int jj = C.shell_offset(rb.shell) + rb.position;
    C.at(i, jj) = {e.at("re").get<double>(), e.at("im").get<double>()};
  }
  return C;
}

nlohmann::ordered_json block_to_json(const BlockOperator& B) {
  nlohmann::ordered_json j;
  j["n"] = B.n;
  j["cutoff"] = B.K;
  j["ordering"] = "graded-lex-desc";
  j["normalization"] = "op(1)=id";
  j["hermitian"] = B.hermitian;
  j["version"] = kVersion;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (size_t k = 0; k < B.blocks.size(); ++k) {
    const Matrix& blk = B.blocks[k];
    nlohmann::ordered_json e;
    e["shell"] = k;
    e["dim"] = blk.rows();
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (int i = 0; i < blk.rows(); ++i) {
      nlohmann::ordered_json rrow = nlohmann::ordered_json::array();
      nlohmann::ordered_json irow = nlohmann::ordered_json::array();
      for (int jj = 0; jj < blk.cols(); ++jj) {
        rrow.push_back(blk(i, jj).real());
        irow.push_back(blk(i, jj).imag());
      }
      re.push_back(std::move(rrow));
      im.push_back(std::move(irow));
    }
    e["re"] = std::move(re);
    e["im"] = std::move(im);
    blocks.push_back(std::move(e));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

nlohmann::ordered_json spectral_to_json(const SpectralData& S, int n, int cutoff) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["cutoff"] = cutoff;
  j["ordering"] = "graded-lex-desc";
  j["normalization"] = "op(1)=id";
  j["version"] = kVersion;
  nlohmann::ordered_json shells = nlohmann::ordered_json::array();
  for (size_t k = 0; k < S.shell_eigenvalues.size(); ++k) {
    nlohmann::ordered_json e;
    e["shell"] = k;
    e["dim"] = S.shell_eigenvalues[k].size();
    e["eigenvalues"] = S.shell_eigenvalues[k];
    e["norm"] = S.shell_norms[k];
    shells.push_back(std::move(e));
  }
  j["shells"] = std::move(shells);
  j["union"] = S.union_eigenvalues;
  j["sup_estimate"] = S.sup_estimate;
  j["unbounded_trend"] = S.unbounded_trend;
  return j;
}

std::string spectral_to_csv(const SpectralData& S, const std::string& tag_comment) {
  std::ostringstream os;
  if (!tag_comment.empty()) os << "# " << tag_comment << "\n";
  os << "shell,eigenvalue\n";
  for (size_t k = 0; k < S.shell_eigenvalues.size(); ++k)
    for (double ev : S.shell_eigenvalues[k]) os << k << ',' << format_shortest(ev) << "\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hocm
