// The verification suite: every library-level guarantee as a named,
// machine-checked property with a pinned tolerance. `hocm verify` and the
// acceptance test binary both run these.

#ifndef HOCM_VERIFY_HPP
#define HOCM_VERIFY_HPP

#include <string>
#include <vector>

namespace hocm {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0;   // the quantity compared against the tolerance
  double tolerance = 0;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 2;    // cap on the dimensions exercised (pinned defaults otherwise)
  int max_K = 99;   // cap on cutoffs (never below what a check minimally needs)
};

const std::vector<std::string>& verification_check_names();

CheckResult run_verification_check(const std::string& name, const VerifyOptions& opt = {});

std::vector<CheckResult> run_verification(const VerifyOptions& opt = {});

std::string format_check_line(const CheckResult& r);

}  // namespace hocm

#endif
