#pragma once

// Subcommands of the `zpd` tool. Each returns the process exit code and
// writes its JSON result to `out`; diagnostics go to `err`.
//
// Exit codes: 0 ProvenZPD / success, 1 ProvenNotZPD / check failed,
// 2 Unknown, 64 unreadable input, 65 invalid use (flag contradicted, missing
// layout, bad parameters), 70 internal error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zpd/io.hpp"

namespace zpd {

namespace exit_code {
inline constexpr int kProvenZPD = 0;
inline constexpr int kProvenNotZPD = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kInputError = 64;
inline constexpr int kUsageError = 65;
inline constexpr int kInternalError = 70;
}  // namespace exit_code

int exit_code_for(VerdictKind kind);

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSampleBudget = 5000;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000;

struct CheckOptions {
  /// Samples over Q, projective points over F_p. Defaults to $ZPD_BUDGET, then
  /// the per-field defaults above.
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  bool assume_no_zero_divisors = false;
  std::optional<std::string> emit_cert;
  /// Adds wall-clock timing to the report (makes it non-reproducible).
  bool timing = false;
};

struct CheckResult {
  json report;
  std::optional<json> certificate;
  int exit = exit_code::kInternalError;
};

/// Runs the decision procedure matching the algebra's field. BudgetExceeded
/// over F_p becomes an Unknown report; FlagMisuse propagates.
CheckResult run_check(const AnyAlgebra& alg, const CheckOptions& options, const std::string& source = "");

int cmd_check(const std::string& source, const CheckOptions& options, std::ostream& out, std::ostream& err);
int cmd_catalog(const std::string& name, const std::string& parameters, const std::string& field,
                const std::optional<std::string>& output, std::ostream& out, std::ostream& err);
int cmd_dsum(const std::vector<std::string>& sources, const std::optional<std::string>& output, std::ostream& out,
             std::ostream& err);
int cmd_verify(const std::string& algebra_source, const std::string& certificate_path, std::ostream& out,
               std::ostream& err);
int cmd_props(const std::string& source, std::ostream& out, std::ostream& err);
int cmd_lemmas(const std::string& source, std::optional<std::uint64_t> budget, std::ostream& out, std::ostream& err);

/// verify_certificate on a parsed certificate, as a JSON report.
json verification_report(const AnyAlgebra& alg, const json& certificate, bool& ok);

}  // namespace zpd
