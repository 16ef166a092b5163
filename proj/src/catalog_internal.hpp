#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ohic/catalog.hpp"
#include "ohic/closedform.hpp"
#include "ohic/sequences.hpp"

namespace ohic::detail {

struct CheckContext {
  long order = kDefaultSeriesOrder;
  long max_n = 64;
  long prec = kDefaultPrecisionBits;
  BigFloat tol{kDefaultPrecisionBits};
};

/// Collects comparisons for one record. Exact comparisons stop at the first
/// mismatch; numeric ones track the worst residual per reading.
class Recorder {
 public:
  explicit Recorder(const CheckContext& ctx) : ctx_(ctx) {}

  const CheckContext& ctx() const { return ctx_; }

  void exact(const std::string& params, long index, const BigRational& lhs, const BigRational& rhs);
  void series(const std::string& params, const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  /// Asserted comparison; lands in the primary reading.
  void numeric(const std::string& params, const Enclosure& lhs, const Enclosure& rhs);
  /// Informational comparison under a named reading.
  void reading(const std::string& name, const std::string& params, const Enclosure& lhs, const Enclosure& rhs);
  /// Names the asserted reading so it is listed next to the others.
  void name_primary(const std::string& name) { primary_name_ = name; }

  void fill(VerificationReport& r) const;

 private:
  struct Acc {
    bool asserted = false;
    long cases = 0;
    bool failed = false;
    std::optional<BigFloat> worst;
    std::string worst_case;
    std::string mid;
    std::string rad;
  };
  void accumulate(Acc& acc, const std::string& params, const Enclosure& lhs, const Enclosure& rhs);

  const CheckContext& ctx_;
  long exact_cases_ = 0;
  std::optional<long> mismatch_index_;
  std::string mismatch_case_;
  std::string mismatch_lhs_;
  std::string mismatch_rhs_;
  Acc primary_;
  std::string primary_name_;
  std::vector<std::pair<std::string, Acc>> readings_;
};

/// tol / divisor, raised to a few ulps above the rounding floor of `prec` so
/// an unreachable tolerance ends in a failed comparison instead of a runaway sum.
BigFloat reachable_target(const BigFloat& tol, unsigned long divisor, long prec);

using CheckFn = std::function<void(Recorder&)>;

struct Entry {
  IdentityRecord record;
  CheckFn check;
};

void add_series_entries(std::vector<Entry>& out);
void add_comb_entries(std::vector<Entry>& out);
void add_numeric_entries(std::vector<Entry>& out);
void add_integral_entries(std::vector<Entry>& out);

/// SER cases by id; empty for an unknown id.
std::vector<SeriesCase> build_series_cases(std::string_view id, long order);

}  // namespace ohic::detail
