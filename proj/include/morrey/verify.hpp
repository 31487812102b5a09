#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace morrey::verify {

enum class Plan { OpNorms, Nuclear, Tong, ClassifierConsistency, All };

Plan plan_from_string(const std::string& name);  // throws on unknown plan
const char* plan_name(Plan p);

/// One verification case. formula / lower / upper are the compared values
/// (property-style cases use 1.0 = held, 0.0 = failed in lower/upper).
struct CaseResult {
  std::string id;
  nlohmann::ordered_json params;
  double formula = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::string status;  // certified-exact | sandwich-consistent | violated | skipped | timeout
  double runtime_s = 0.0;
};

struct Tolerances {
  double exact = 1e-9;        // formula certification
  double coincidence = 1e-12; // norm coincidence identities
  double overshoot = 1e-12;   // sampled ratios may not exceed exact formulas beyond this
  double residual = 1e-10;    // certificate reconstruction residual
  double mc_sigma = 3.0;      // Monte-Carlo tolerance in standard errors
};

struct VerificationReport {
  std::string plan;
  std::uint64_t seed = 42;
  long long budget = 256;  // cases with 2^{jd} above this are skipped
  Tolerances tol;
  std::vector<CaseResult> cases;

  bool any_violated() const;
  std::size_t count(const std::string& status) const;

  /// Deterministic JSON (schema "morrey-verify/1"): fixed key order, cases in
  /// declared grid order. Byte-identical across runs for fixed inputs.
  nlohmann::ordered_json to_json() const;
  std::string to_string() const;  // to_json().dump(2) + newline
};

/// Runs the requested suite. Deterministic given (plan, seed, budget); cases
/// that would exceed the budget are emitted with status "skipped", never
/// dropped. per_case_timeout_s caps a single case's runtime (status "timeout").
VerificationReport run_suite(Plan plan, std::uint64_t seed, long long budget,
                             double per_case_timeout_s = 10.0);

}  // namespace morrey::verify
