// hocm — command-line front end: quantize phase-space symbols over the
// Hermite basis, inspect block spectra, compose with the Moyal product,
// average, dump Wigner functions on grids, and run the verification suite.
//
// Exit codes: 0 success, 1 verification/numerical failure, 2 usage error.

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hocm/block_algebra.hpp"
#include "hocm/json_io.hpp"
#include "hocm/quantizer.hpp"
#include "hocm/symbols.hpp"
#include "hocm/verify.hpp"
#include "hocm/version.hpp"
#include "hocm/wigner.hpp"

namespace {

using hocm::CoefficientMatrix;
using nlohmann::ordered_json;

struct SymbolSource {
  std::string symbol_text;
  std::string catalog_name;
  std::string coeff_json_path;

  int count() const {
    return (symbol_text.empty() ? 0 : 1) + (catalog_name.empty() ? 0 : 1) +
           (coeff_json_path.empty() ? 0 : 1);
  }
  std::string describe() const {
    if (!symbol_text.empty()) return "symbol:" + symbol_text;
    if (!catalog_name.empty()) return "catalog:" + catalog_name;
    return "file:" + coeff_json_path;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

hocm::SymbolExpr resolve_symbol(const SymbolSource& src, int n, const std::string& cls_override) {
  hocm::SymbolExpr f = src.symbol_text.empty() ? hocm::catalog_lookup(src.catalog_name, n)
                                               : hocm::parse_symbol(src.symbol_text, n);
  if (!cls_override.empty()) f = f.with_class(hocm::symbol_class_from_string(cls_override));
  return f;
}

CoefficientMatrix load_coefficient_file(const std::string& path) {
  std::string text;
  try {
    text = hocm::read_text_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return hocm::coefficient_from_json(nlohmann::json::parse(text));
}

CoefficientMatrix quantize_source(const SymbolSource& src, int n, int K, int quad_order,
                                  const std::string& cls_override) {
  if (!src.coeff_json_path.empty()) return load_coefficient_file(src.coeff_json_path);
  const hocm::SymbolExpr f = resolve_symbol(src, n, cls_override);
  const hocm::PhaseSpaceFn fn = hocm::as_phase_fn(f);
  if (quad_order > 0) return hocm::coeff_matrix(fn, K, hocm::gauss_hermite_rule(quad_order));
  return hocm::coeff_matrix(fn, K);
}

void attach_run_tags(ordered_json& j, const std::string& command, std::uint64_t seed) {
  j["command"] = command;
  j["seed"] = seed;
}

void write_json(const std::string& path, const ordered_json& j) {
  hocm::write_text_file(path, j.dump(2) + "\n");
}

std::string run_tag_comment(const CoefficientMatrix& C, std::uint64_t seed) {
  std::ostringstream os;
  os << "version=" << hocm::kVersion << " normalization=" << C.meta.normalization
     << " ordering=" << C.meta.ordering << " quadrature_order=" << C.meta.quadrature_order
     << " seed=" << seed;
  return os.str();
}

int command_quantize(const SymbolSource& src, int n, int K, int quad_order,
                     const std::string& cls_override, const std::string& out, std::uint64_t seed) {
  const CoefficientMatrix C = quantize_source(src, n, K, quad_order, cls_override);
  ordered_json j = hocm::coefficient_to_json(C);
  attach_run_tags(j, "quantize", seed);
  write_json(out, j);
  std::cout << "wrote " << out << " (n=" << C.n() << ", cutoff=" << C.cutoff()
            << ", quadrature_order=" << C.meta.quadrature_order << ")\n";
  return 0;
}

int command_spectrum(const SymbolSource& src, int n, int K, int quad_order,
                     const std::string& cls_override, const std::string& out_base, std::uint64_t seed) {
  const CoefficientMatrix C = quantize_source(src, n, K, quad_order, cls_override);
  const hocm::BlockExtraction ex = hocm::block_extract(C);
  if (!ex.blocks.hermitian) {
    std::cerr << "spectrum: coefficient matrix is not Hermitian (defect "
              << C.hermiticity_defect() << "); spectra need a real symbol\n";
    return 1;
  }
  const hocm::SpectralData S = hocm::spectrum(ex.blocks);
  ordered_json j = hocm::spectral_to_json(S, C.n(), C.cutoff());
  j["off_block_residual"] = ex.off_block_residual;
  j["quadrature_order"] = C.meta.quadrature_order;
  j["source"] = C.meta.source;
  attach_run_tags(j, "spectrum", seed);
  write_json(out_base + ".json", j);
  hocm::write_text_file(out_base + ".csv", hocm::spectral_to_csv(S, run_tag_comment(C, seed)));
  std::cout << "wrote " << out_base << ".json and " << out_base << ".csv (sup estimate "
            << S.sup_estimate << ", off-block residual " << ex.off_block_residual << ")\n";
  return 0;
}

int command_moyal(const std::string& path_a, const std::string& path_b, const std::string& out,
                  std::uint64_t seed) {
  const CoefficientMatrix A = load_coefficient_file(path_a);
  const CoefficientMatrix B = load_coefficient_file(path_b);
  if (A.n() != B.n())
    throw UsageError("moyal: dimension mismatch: " + std::to_string(A.n()) + " vs " +
                     std::to_string(B.n()));
  if (A.cutoff() != B.cutoff())
    throw UsageError("moyal: cutoff mismatch: " + std::to_string(A.cutoff()) + " vs " +
                     std::to_string(B.cutoff()));
  const hocm::BlockExtraction ea = hocm::block_extract(A);
  const hocm::BlockExtraction eb = hocm::block_extract(B);
  const hocm::BlockOperator P = hocm::moyal_block(ea.blocks, eb.blocks);
  // embed the block product back into coefficient form
  CoefficientMatrix C(A.n(), A.cutoff());
  C.meta.source = "moyal(" + A.meta.source + ", " + B.meta.source + ")";
  C.meta.quadrature_order = std::max(A.meta.quadrature_order, B.meta.quadrature_order);
  for (int k = 0; k <= C.cutoff(); ++k) {
    const int off = C.shell_offset(k);
    const hocm::Matrix& blk = P.blocks[static_cast<size_t>(k)];
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) C.at(off + j, off + i) = blk(i, j);
  }
  ordered_json j = hocm::coefficient_to_json(C);
  j["off_block_residual_inputs"] = {ea.off_block_residual, eb.off_block_residual};
  attach_run_tags(j, "moyal", seed);
  write_json(out, j);
  std::cout << "wrote " << out << " (shell-wise operator product; input residuals "
            << ea.off_block_residual << ", " << eb.off_block_residual << ")\n";
  return 0;
}

int command_average(const SymbolSource& src, int n, int K, int quad_order,
                    const std::string& cls_override, bool both_paths, int t_nodes,
                    const std::string& out, std::uint64_t seed) {
  const CoefficientMatrix C = quantize_source(src, n, K, quad_order, cls_override);
  const hocm::BlockOperator avg = hocm::weinstein_average_coeff(C);
  ordered_json j = hocm::block_to_json(avg);
  j["source"] = C.meta.source;
  j["quadrature_order"] = C.meta.quadrature_order;
  if (both_paths) {
    if (src.coeff_json_path.empty() == false)
      throw UsageError("average: --both-paths needs a symbolic source (--symbol or --catalog)");
    const hocm::SymbolExpr f = resolve_symbol(src, n, cls_override);
    const hocm::AveragedSymbol favg = hocm::classical_average(f, t_nodes);
    const CoefficientMatrix C2 = quad_order > 0
                                     ? hocm::coeff_matrix(hocm::as_phase_fn(favg), K,
                                                          hocm::gauss_hermite_rule(quad_order))
                                     : hocm::coeff_matrix(hocm::as_phase_fn(favg), K);
    const hocm::BlockExtraction e2 = hocm::block_extract(C2);
    double disc = e2.off_block_residual;
    for (size_t k = 0; k < avg.blocks.size(); ++k)
      disc = std::max(disc, (avg.blocks[k] - e2.blocks.blocks[k]).max_abs());
    j["paths_discrepancy"] = disc;
    j["t_nodes"] = favg.t_nodes();
  }
  attach_run_tags(j, "average", seed);
  write_json(out, j);
  std::cout << "wrote " << out;
  if (both_paths) std::cout << " (both-path discrepancy " << j["paths_discrepancy"].get<double>() << ")";
  std::cout << "\n";
  return 0;
}

int command_wigner_grid(const std::vector<int>& alpha, const std::vector<int>& beta, double lo,
                        double hi, int points, const std::string& out, std::uint64_t seed) {
  if (alpha.empty() || alpha.size() != beta.size())
    throw UsageError("wigner-grid: --alpha and --beta need equal nonzero lengths");
  const int n = static_cast<int>(alpha.size());
  if (points < 2) throw UsageError("wigner-grid: need at least 2 points per axis");
  const hocm::WignerBasisFunction phi =
      hocm::phi_closed_form(hocm::MultiIndex(alpha), hocm::MultiIndex(beta));
  std::ostringstream os;
  os << "# version=" << hocm::kVersion << " normalization=op(1)=id ordering=graded-lex-desc"
     << " quadrature_order=0 seed=" << seed << "\n";
  for (int k = 1; k <= n; ++k) os << "x" << k << ",";
  for (int k = 1; k <= n; ++k) os << "xi" << k << ",";
  os << "re,im\n";
  // full tensor grid over all 2n coordinates, row-major
  std::vector<int> digits(static_cast<size_t>(2 * n), 0);
  const auto coord = [&](int d) { return lo + (hi - lo) * digits[static_cast<size_t>(d)] / (points - 1); };
  for (;;) {
    hocm::PhasePoint w(std::vector<double>(static_cast<size_t>(n), 0.0),
                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int k = 0; k < n; ++k) {
      w.x[static_cast<size_t>(k)] = coord(k);
      w.xi[static_cast<size_t>(k)] = coord(n + k);
    }
    const std::complex<double> v = phi(w);
    for (int k = 0; k < n; ++k) os << hocm::format_shortest(w.x[static_cast<size_t>(k)]) << ",";
    for (int k = 0; k < n; ++k) os << hocm::format_shortest(w.xi[static_cast<size_t>(k)]) << ",";
    os << hocm::format_shortest(v.real()) << "," << hocm::format_shortest(v.imag()) << "\n";
    size_t d = digits.size();
    for (; d-- > 0;) {
      if (++digits[d] < points) break;
      digits[d] = 0;
    }
    if (d == static_cast<size_t>(-1)) break;
  }
  hocm::write_text_file(out, os.str());
  std::cout << "wrote " << out << "\n";
  return 0;
}

int command_verify(const std::string& suite, int max_n, int max_K) {
  hocm::VerifyOptions opt;
  if (max_n > 0) opt.max_n = max_n;
  if (max_K > 0) opt.max_K = max_K;
  std::vector<std::string> names;
  if (suite == "all") {
    names = hocm::verification_check_names();
  } else {
    std::stringstream ss(suite);
    std::string part;
    while (std::getline(ss, part, ',')) names.push_back(part);
  }
  bool all_pass = true;
  for (const std::string& name : names) {
    const hocm::CheckResult r = hocm::run_verification_check(name, opt);
    std::cout << hocm::format_check_line(r) << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-space quantization of oscillator constants of motion"};
  app.set_version_flag("--version", hocm::kVersion);
  app.require_subcommand(1);

  // shared options per subcommand
  struct Common {
    SymbolSource src;
    int n = 1;
    int cutoff = 4;
    int quad_order = 0;  // 0 = auto: exact rule for polynomial symbols, doubling otherwise
    std::string symbol_class;
    std::string out;
    std::uint64_t seed = 0;
  };

  auto add_symbol_opts = [](CLI::App* cmd, Common& c, bool allow_file) {
    auto* s = cmd->add_option("--symbol", c.src.symbol_text, "inline symbol expression");
    auto* g = cmd->add_option("--catalog", c.src.catalog_name,
                              "catalog name: h0 | monomial:a1,..;b1,.. | angular:j,k | ugen:i");
    s->excludes(g);
    g->excludes(s);
    if (allow_file) {
      auto* fopt = cmd->add_option("--coeff-json", c.src.coeff_json_path, "coefficient JSON input");
      fopt->excludes(s)->excludes(g);
      s->excludes(fopt);
      g->excludes(fopt);
    }
    cmd->add_option("--n", c.n, "phase-space dimension n");
    cmd->add_option("--cutoff", c.cutoff, "degree cutoff K");
    cmd->add_option("--quad-order", c.quad_order, "per-axis quadrature order (0 = auto)");
    cmd->add_option("--class", c.symbol_class, "symbol class override: polynomial|schwartz|poly-bounded");
    cmd->add_option("--seed", c.seed, "RNG seed recorded in outputs (Monte Carlo paths only)");
  };

  Common qc;
  CLI::App* quantize = app.add_subcommand("quantize", "quantize a symbol to a coefficient JSON");
  add_symbol_opts(quantize, qc, false);
  quantize->add_option("--out", qc.out, "output path")->default_val("coefficients.json");

  Common sc;
  CLI::App* spectrum = app.add_subcommand("spectrum", "per-shell spectrum of a quantized symbol");
  add_symbol_opts(spectrum, sc, true);
  spectrum->add_option("--out", sc.out, "output base path (.json and .csv)")->default_val("spectrum");

  std::string moyal_a, moyal_b, moyal_out;
  std::uint64_t moyal_seed = 0;
  CLI::App* moyal = app.add_subcommand("moyal", "shell-wise Moyal product of two coefficient files");
  moyal->add_option("a", moyal_a, "left coefficient JSON")->required();
  moyal->add_option("b", moyal_b, "right coefficient JSON")->required();
  moyal->add_option("--out", moyal_out, "output path")->default_val("moyal.json");
  moyal->add_option("--seed", moyal_seed, "RNG seed recorded in outputs");

  Common ac;
  bool both_paths = false;
  int t_nodes = 0;
  CLI::App* average = app.add_subcommand("average", "orbit average in coefficient form (block JSON)");
  add_symbol_opts(average, ac, true);
  average->add_flag("--both-paths", both_paths,
                    "also quantize the classical average and report the discrepancy");
  average->add_option("--t-nodes", t_nodes, "orbit quadrature nodes (0 = 2*degree+1)");
  average->add_option("--out", ac.out, "output path")->default_val("average.json");

  std::vector<int> ga, gb;
  double glo = -4.0, ghi = 4.0;
  int gpoints = 17;
  std::string gout = "wigner.csv";
  std::uint64_t gseed = 0;
  CLI::App* grid = app.add_subcommand("wigner-grid", "dump a Wigner basis function on a grid as CSV");
  grid->add_option("--alpha", ga, "alpha components (comma separated)")->required()->delimiter(',');
  grid->add_option("--beta", gb, "beta components (comma separated)")->required()->delimiter(',');
  grid->add_option("--min", glo, "grid minimum per coordinate");
  grid->add_option("--max", ghi, "grid maximum per coordinate");
  grid->add_option("--points", gpoints, "points per coordinate");
  grid->add_option("--out", gout, "output CSV path");
  grid->add_option("--seed", gseed, "RNG seed recorded in outputs");

  std::string suite = "all";
  int vmax_n = 0, vmax_K = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", suite, "all, or a comma-separated list of check names");
  verify->add_option("--n", vmax_n, "cap the dimensions exercised");
  verify->add_option("--cutoff", vmax_K, "cap the cutoffs exercised");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (quantize->parsed()) {
      if (qc.src.count() != 1) throw UsageError("quantize: exactly one of --symbol/--catalog required");
      return command_quantize(qc.src, qc.n, qc.cutoff, qc.quad_order, qc.symbol_class, qc.out, qc.seed);
    }
    if (spectrum->parsed()) {
      if (sc.src.count() != 1)
        throw UsageError("spectrum: exactly one of --symbol/--catalog/--coeff-json required");
      return command_spectrum(sc.src, sc.n, sc.cutoff, sc.quad_order, sc.symbol_class, sc.out, sc.seed);
    }
    if (moyal->parsed()) return command_moyal(moyal_a, moyal_b, moyal_out, moyal_seed);
    if (average->parsed()) {
      if (ac.src.count() != 1)
        throw UsageError("average: exactly one of --symbol/--catalog/--coeff-json required");
      return command_average(ac.src, ac.n, ac.cutoff, ac.quad_order, ac.symbol_class, both_paths,
                             t_nodes, ac.out, ac.seed);
    }
    if (grid->parsed()) return command_wigner_grid(ga, gb, glo, ghi, gpoints, gout, gseed);
    if (verify->parsed()) return command_verify(suite, vmax_n, vmax_K);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hocm::ParseError& e) {
    std::cerr << "error: symbol parse failed at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
