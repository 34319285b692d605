#include "zpd/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "zpd/constructions.hpp"

namespace zpd {

int exit_code_for(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ProvenZPD: return exit_code::kProvenZPD;
    case VerdictKind::ProvenNotZPD: return exit_code::kProvenNotZPD;
    case VerdictKind::Unknown: return exit_code::kUnknown;
  }
  return exit_code::kInternalError;
}

namespace {

std::uint64_t resolve_budget(const CheckOptions& options, FieldSpec field) {
  if (options.budget) return *options.budget;
  if (const char* env = std::getenv("ZPD_BUDGET"); env && *env) {
    char* end = nullptr;
    auto value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) throw InvalidParameter(std::string("ZPD_BUDGET must be a positive integer, got '") + env + "'");
    return value;
  }
  return field.is_prime_field() ? kDefaultEnumerationBudget : kDefaultSampleBudget;
}

json dims_json(const VerdictDims& d) {
  return {{"n", d.n}, {"dim_A2", d.dim_a2}, {"dim_ker", d.dim_ker}, {"dim_span", d.dim_span}};
}

template <class F>
json evidence_json(const Verdict<F>& v) {
  return std::visit(
      [](const auto& o) -> json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Certificate<F>>) {
          return {{"kind", "Certificate"}, {"pairs", o.pairs.size()}};
        } else if constexpr (std::is_same_v<T, ExhaustiveGap>) {
          return {{"kind", "ExhaustiveGap"}, {"dim_span", o.dim_span}, {"dim_ker", o.dim_ker}};
        } else if constexpr (std::is_same_v<T, NoZeroDivisorsAssumed>) {
          return {{"kind", "NoZeroDivisorsAssumed"}, {"dim_ker", o.dim_ker}};
        } else {
          return {{"kind", "SaturationStats"},
                  {"samples_tried", o.samples_tried},
                  {"dim_reached", o.dim_reached},
                  {"dim_required", o.dim_required}};
        }
      },
      v.outcome);
}

// Maps library exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  } catch (const FieldMismatch& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kInternalError;
  }
}

void print_notes(const std::vector<std::string>& notes, std::ostream& err) {
  for (const auto& n : notes) err << "note: " << n << "\n";
}

void emit(const json& j, const std::optional<std::string>& output, std::ostream& out) {
  if (output) {
    write_json_file(*output, j);
  } else {
    out << j.dump(2) << "\n";
  }
}

}  // namespace

CheckResult run_check(const AnyAlgebra& alg, const CheckOptions& options, const std::string& source) {
  const FieldSpec field = field_of(alg);
  const std::uint64_t budget_value = resolve_budget(options, field);
  const auto started = std::chrono::steady_clock::now();

  SaturationBudget budget;
  budget.prng_seed = options.seed;
  json budget_json;
  CheckResult result;
  json report = {{"tool", "zpd"},
                 {"version", kToolVersion},
                 {"input", {{"source", source}, {"hash", algebra_hash(alg)}, {"name", std::visit([](const auto& a) { return a.name(); }, alg)}, {"field", field_to_json(field)}}}};

  auto finish = [&](const auto& verdict, const char* procedure) {
    report["procedure"] = procedure;
    report["verdict"] = to_string(verdict.kind());
    report["evidence"] = evidence_json(verdict);
    report["dims"] = dims_json(verdict.dims);
    report["samples"] = verdict.samples;
    if (const auto* cert = verdict.certificate()) {
      using A = std::conditional_t<std::is_same_v<std::decay_t<decltype(verdict)>, Verdict<Rationals>>, RationalAlgebra, ModularAlgebra>;
      result.certificate = certificate_to_json(std::get<A>(alg), *cert);
    }
    result.exit = exit_code_for(verdict.kind());
  };

  if (field.is_prime_field()) {
    if (options.assume_no_zero_divisors) {
      throw FlagMisuse("--assume-no-zero-divisors applies to Q only; the F_p decision is exact");
    }
    budget.max_enumeration = budget_value;
    budget_json = {{"max_enumeration", budget.max_enumeration}};
    const auto& typed = std::get<ModularAlgebra>(alg);
    try {
      finish(decide_zpd_exhaustive(typed, budget), "exhaustive");
    } catch (const BudgetExceeded& e) {
      auto ker = ker_mu(typed);
      Verdict<PrimeField> unknown;
      unknown.outcome = SaturationStats{0, 0, ker.dim()};
      unknown.dims = {typed.dim(), typed.dim() * typed.dim() - ker.dim(), ker.dim(), 0};
      finish(unknown, "exhaustive");
      report["budget_exceeded"] = {{"required", e.required()}, {"budget", e.budget()}};
    }
  } else {
    budget.max_samples = budget_value;
    budget_json = {{"max_samples", budget.max_samples},
                   {"seed", budget.prng_seed},
                   {"assume_no_zero_divisors", options.assume_no_zero_divisors}};
    SaturationOptions sat;
    sat.assume_no_zero_divisors = options.assume_no_zero_divisors;
    finish(saturate_zpd(std::get<RationalAlgebra>(alg), budget, sat), "saturation");
  }
  report["budget"] = budget_json;

  if (result.certificate) {
    if (options.emit_cert) {
      report["certificate"] = {{"path", *options.emit_cert}};
    } else {
      report["certificate"] = *result.certificate;
    }
  }
  if (options.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  result.report = std::move(report);
  return result;
}

int cmd_check(const std::string& source, const CheckOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto loaded = load_algebra(source);
    print_notes(loaded.notes, err);
    auto result = run_check(loaded.algebra, options, source);
    if (options.emit_cert && result.certificate) write_json_file(*options.emit_cert, *result.certificate);
    out << result.report.dump(2) << "\n";
    return result.exit;
  });
}

int cmd_catalog(const std::string& name, const std::string& parameters, const std::string& field,
                const std::optional<std::string>& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto built = catalog(name, parameters, FieldSpec::parse(field));
    print_notes(built.notes, err);
    emit(algebra_to_json(built.algebra), output, out);
    return 0;
  });
}

int cmd_dsum(const std::vector<std::string>& sources, const std::optional<std::string>& output, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    std::vector<AnyAlgebra> parts;
    for (const auto& s : sources) {
      auto loaded = load_algebra(s);
      print_notes(loaded.notes, err);
      parts.push_back(std::move(loaded.algebra));
    }
    emit(algebra_to_json(direct_sum(parts)), output, out);
    return 0;
  });
}

json verification_report(const AnyAlgebra& any, const json& certificate, bool& ok) {
  return std::visit(
      [&](const auto& alg) -> json {
        auto cert = certificate_from_json(certificate, alg);
        auto report = verify_certificate(alg, cert);
        ok = report.ok;
        json out = {{"ok", report.ok},
                    {"message", report.message},
                    {"pairs", cert.pairs.size()},
                    {"span_dim", report.span_dim},
                    {"required_dim", report.required_dim},
                    {"failing_pair", report.failing_pair ? json(*report.failing_pair) : json(nullptr)}};
        if (certificate.contains("algebra_hash")) {
          out["hash_match"] = certificate["algebra_hash"] == algebra_hash(any);
        }
        return out;
      },
      any);
}

int cmd_verify(const std::string& algebra_source, const std::string& certificate_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    auto loaded = load_algebra(algebra_source);
    auto cert = read_json_file(certificate_path);
    bool ok = false;
    auto report = verification_report(loaded.algebra, cert, ok);
    out << report.dump(2) << "\n";
    if (!ok) err << "verification failed: " << report["message"].get<std::string>() << "\n";
    return ok ? 0 : 1;
  });
}

int cmd_props(const std::string& source, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto loaded = load_algebra(source);
    print_notes(loaded.notes, err);
    json report = std::visit(
        [](const auto& alg) -> json {
          auto flags = classify(alg);
          json identity = nullptr;
          if (flags.identity) {
            identity = json::array();
            for (const auto& x : *flags.identity) identity.push_back(alg.field().to_string(x));
          }
          auto a2 = a_squared(alg);
          return {{"name", alg.name()},
                  {"field", field_to_json(alg.field().spec())},
                  {"dim", alg.dim()},
                  {"is_commutative", flags.is_commutative},
                  {"is_anticommutative", flags.is_anticommutative},
                  {"is_associative", flags.is_associative},
                  {"satisfies_jacobi", flags.satisfies_jacobi},
                  {"is_lie", flags.is_lie},
                  {"has_identity", identity},
                  {"dim_A2", a2.dim()},
                  {"dim_ker", alg.dim() * alg.dim() - a2.dim()}};
        },
        loaded.algebra);
    out << report.dump(2) << "\n";
    return 0;
  });
}

int cmd_lemmas(const std::string& source, std::optional<std::uint64_t> budget, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto loaded = load_algebra(source);
    print_notes(loaded.notes, err);
    const std::uint64_t cap = budget.value_or(kDefaultEnumerationBudget);
    json report = std::visit(
        [&](const auto& alg) -> json {
          using A = std::decay_t<decltype(alg)>;
          auto kernel = check_kernel_decomposition(alg);
          json r = {{"kernel_decomposition", kernel.holds},
                    {"kernel_dims", {{"lhs", kernel.lhs_dim}, {"rhs", kernel.rhs_dim}}},
                    {"pure_tensor_decomposition", nullptr},
                    {"dims", nullptr}};
          if constexpr (std::is_same_v<A, ModularAlgebra>) {
            auto pure = check_pure_tensor_decomposition(alg, cap);
            r["pure_tensor_decomposition"] = pure.holds;
            r["dims"] = {{"lhs", pure.lhs_dim}, {"rhs", pure.rhs_dim}};
          }
          return r;
        },
        loaded.algebra);
    out << report.dump(2) << "\n";
    bool holds = report["kernel_decomposition"].get<bool>() &&
                 (report["pure_tensor_decomposition"].is_null() || report["pure_tensor_decomposition"].get<bool>());
    return holds ? 0 : 1;
  });
}

}  // namespace zpd
