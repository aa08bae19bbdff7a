// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <iostream>

#include "semispec/spectra.hpp"
#include "semispec/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  semispec::VerifyConfig config;
  config.spectrum_limit = semispec::spectrum_limit_from_env(config.spectrum_limit);
  int failures = 0;
  for (const auto& e : semispec::verify_registry()) {
    const auto start = clock::now();
    semispec::CriterionResult r;
    try {
      r = e.run(config);
    } catch (const std::exception& ex) {
      r = {e.id, e.key, false, {std::string("error: ") + ex.what()}};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
    std::cout << "criterion " << e.id << ": " << (r.pass ? "PASS" : "FAIL") << " " << e.key
              << " (" << ms << " ms)\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    if (!r.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
