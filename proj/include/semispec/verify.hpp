#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace semispec {

/// Outcome of one named check, with human-readable evidence lines.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;
  nlohmann::json to_json() const;
};

struct VerifyConfig {
  std::uint64_t nat_bound = 200;
  std::uint64_t seed = 20240611;
  std::size_t hardening_samples = 1000;
  std::size_t surjectivity_samples = 200;
  unsigned congruence_bound = 6;
  unsigned congruence_bound_raised = 8;
  std::size_t spectrum_limit = 16;
};

CriterionResult verify_spec_nat(const VerifyConfig& c = {});
CriterionResult verify_poly_ksp(const VerifyConfig& c = {});
CriterionResult verify_bx_hardening(const VerifyConfig& c = {});
CriterionResult verify_sheaf_lemma(const VerifyConfig& c = {});
CriterionResult verify_ktt(const VerifyConfig& c = {});
CriterionResult verify_sp_injectivity(const VerifyConfig& c = {});
CriterionResult verify_radical(const VerifyConfig& c = {});
CriterionResult verify_universal_valuation(const VerifyConfig& c = {});
CriterionResult verify_hardness(const VerifyConfig& c = {});
CriterionResult verify_properties(const VerifyConfig& c = {});

struct VerifyEntry {
  int id;
  std::string key;
  std::function<CriterionResult(const VerifyConfig&)> run;
};
/// spec-nat, poly-ksp, bx-hardening, sheaf-lemma, ktt, sp-injectivity,
/// radical, universal-valuation, hardness, properties, in that order.
const std::vector<VerifyEntry>& verify_registry();

}  // namespace semispec
