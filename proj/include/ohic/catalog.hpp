#pragma once

// Identity registry and verification engine.
//
// Every record binds one published identity (or a small family of them)
// to a check over a fixed default parameter grid:
//   SER   truncated power series compared coefficient by coefficient
//   COMB  finite sums compared exactly over an index range
//   NUM   infinite series summed with a rigorous tail bound vs a closed form
//   INT   tanh-sinh quadrature vs a closed form

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ohic/bigfloat.hpp"
#include "ohic/powerseries.hpp"

namespace ohic {

enum class IdentityKind { kSer, kComb, kNum, kInt };
enum class ExpectedStatus { kPass, kSuspect };
enum class Status { kPass, kFail, kError };

std::string_view kind_name(IdentityKind k);  // "SER", ...
/// Accepts "ser" or "SER" etc.
std::optional<IdentityKind> parse_kind(std::string_view s);
std::string_view expected_status_name(ExpectedStatus s);
std::optional<ExpectedStatus> parse_expected_status(std::string_view s);
std::string_view status_name(Status s);
std::optional<Status> parse_status(std::string_view s);

inline constexpr long kMaxCombIndex = 200;
inline constexpr const char* kDefaultNumTolerance = "1e-30";
inline constexpr const char* kDefaultIntTolerance = "1e-25";

struct RunOptions {
  /// Series order for SER; also the top index n for COMB, capped at kMaxCombIndex.
  long order = kDefaultSeriesOrder;
  long prec = kDefaultPrecisionBits;
  /// Overrides the per-kind defaults when set.
  std::optional<std::string> tol;
};

struct IdentityRecord {
  std::string id;
  IdentityKind kind;
  std::string paper_location;
  /// Default parameter grid, e.g. "n=0..N; p=0..4".
  std::string parameters;
  ExpectedStatus expected_status = ExpectedStatus::kPass;
};

/// A named evaluation of a NUM or INT record. The asserted reading decides
/// the status; the others are measured and reported only.
struct Reading {
  std::string name;
  bool asserted = false;
  long cases = 0;
  Status status = Status::kPass;
  std::string worst_case;
  std::string residual_mid;
  std::string residual_rad;

  friend bool operator==(const Reading&, const Reading&) = default;
};

struct VerificationReport {
  std::string id;
  IdentityKind kind = IdentityKind::kSer;
  std::string params;
  ExpectedStatus expected_status = ExpectedStatus::kPass;
  Status status = Status::kPass;
  long cases = 0;
  /// SER/COMB: index and parameters of the first mismatch.
  std::optional<long> first_mismatch_index;
  std::optional<std::string> mismatch_case;
  std::optional<std::string> lhs_at_mismatch;
  std::optional<std::string> rhs_at_mismatch;
  /// NUM/INT: the worst residual over the asserted cases.
  std::optional<std::string> residual_mid;
  std::optional<std::string> residual_rad;
  std::optional<std::string> tolerance;
  std::optional<std::string> worst_case;
  std::vector<Reading> readings;
  std::optional<std::string> error;
  long elapsed_ms = 0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Whole catalog, or one kind, sorted by id.
std::vector<IdentityRecord> list_identities(std::optional<IdentityKind> filter = std::nullopt);
/// nullopt for an unknown id.
std::optional<IdentityRecord> find_identity(std::string_view id);

/// Runs one record. Unknown ids throw std::invalid_argument; failures inside
/// the check are reported as status error.
VerificationReport verify(std::string_view id, const RunOptions& opts = {});
VerificationReport verify_series(std::string_view id, long order);
VerificationReport verify_comb(std::string_view id, long max_n);
VerificationReport verify_numeric(std::string_view id, long prec, const std::string& tol);
VerificationReport verify_integral(std::string_view id, long prec, const std::string& tol);

/// Runs the matching records on up to `jobs` threads; ordered by id.
std::vector<VerificationReport> verify_all(std::optional<IdentityKind> filter, const RunOptions& opts,
                                           unsigned jobs);

/// True unless a record expected to pass did not.
bool suite_passed(const std::vector<VerificationReport>& reports);

/// One SER case: the direct coefficient sequence and the pipeline result.
struct SeriesCase {
  std::string params;
  TruncatedSeries lhs;
  TruncatedSeries rhs;
};
/// The series pairs a SER record compares, for inspection in tests.
std::vector<SeriesCase> series_cases(std::string_view id, long order);

std::string to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(std::string_view text);
std::string to_csv(const std::vector<VerificationReport>& reports);
std::string to_markdown(const std::vector<VerificationReport>& reports, const RunOptions& opts);

}  // namespace ohic
