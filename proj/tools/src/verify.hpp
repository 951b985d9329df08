#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace seifinv::cli {

struct VerifyOptions {
  std::uint64_t seed = 1;
  long cases = 500;
  long k_max = 50;
};

struct VerifyOutcome {
  bool ok = true;
  long checked = 0;
  std::string counterexample;  // first mismatch, when !ok
};

const std::vector<std::string>& verify_suites();

/// Throws std::invalid_argument for an unknown suite name. Progress lines go to `log`.
VerifyOutcome run_verify(const std::string& suite, const VerifyOptions& opt, std::ostream& log);

}  // namespace seifinv::cli
