#pragma once

#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "polyzeta/multipolylog.hpp"
#include "polyzeta/precision.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

enum class IdentityKind { kConstant, kParametric };
/// kStrict: both sides series-backed, compared against tol(prec).
/// kEstimated: a quadrature or extrapolated side adds 10x its error estimate.
enum class TolClass { kStrict, kEstimated };

struct Sample {
  std::string label;
  std::vector<BigRational> params;
};

/// Memo for expensive shared subterms (catalog integrals) within one run.
class EvalCache {
 public:
  Estimate get(const std::string& key, const std::function<Estimate()>& compute);

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_future<Estimate>> entries_;
};

using Evaluator = std::function<Estimate(const Sample&, const PrecisionPolicy&, EvalCache&)>;

struct IdentityRecord {
  std::string id;
  std::string paper_ref;
  IdentityKind kind = IdentityKind::kConstant;
  std::vector<Sample> samples;
  TolClass tol_class = TolClass::kStrict;
  Evaluator lhs;
  Evaluator rhs;
};

enum class Status { kPass, kFail, kUnconverged };
std::string_view status_name(Status s);

struct ReportEntry {
  std::string id;
  std::string paper_ref;
  Status status = Status::kFail;
  /// Values at the sample with the largest |lhs - rhs| / tolerance.
  XReal abs_diff;
  XReal tolerance;
  std::string worst_sample;
  long long millis = 0;
  /// Exception text when an evaluation failed.
  std::string detail;
};

struct VerificationReport {
  int precision_digits = 0;
  std::vector<ReportEntry> results;
  int passed = 0;
  int failed = 0;

  bool all_passed() const { return failed == 0; }
  /// {"precision_digits", "results": [{"id", "paper_ref", "status",
  /// "abs_diff", "tolerance", "millis"}], "passed", "failed"}; decimal strings
  /// carry precision_digits significant digits.
  std::string to_json(int indent = 2) const;
};

const std::vector<IdentityRecord>& list_identities();
/// Raises DomainError for an unknown id.
const IdentityRecord& find_identity(std::string_view id);

/// `perturbation` is added to every right-hand side (negative controls).
ReportEntry verify(std::string_view id, const PrecisionPolicy& prec, double perturbation = 0.0);
ReportEntry verify(const IdentityRecord& rec, const PrecisionPolicy& prec, EvalCache& cache,
                   double perturbation = 0.0);

/// Results keep registry order whether or not the records run concurrently.
VerificationReport verify_all(const PrecisionPolicy& prec, bool parallel = false,
                              const std::map<std::string, double>& perturbations = {});

}  // namespace polyzeta
