// ohic: list, verify and evaluate catalog identities.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "ohic/catalog.hpp"
#include "ohic/closedform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string id;
  std::string kind;
  long order = ohic::kDefaultSeriesOrder;
  std::optional<long> prec;
  std::optional<std::string> tol;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "json";
  std::string out;
  std::string expr;
};

std::optional<ohic::IdentityKind> kind_filter(const Config& c) {
  if (c.kind.empty()) return std::nullopt;
  auto k = ohic::parse_kind(c.kind);
  if (!k) throw UsageError("unknown kind '" + c.kind + "' (expected ser, comb, num or int)");
  return k;
}

long precision(const Config& c) {
  if (c.prec) return *c.prec;
  if (const char* env = std::getenv("OHIC_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v < ohic::kMinPrecisionBits || v > ohic::kMaxPrecisionBits) {
      throw UsageError(std::string("OHIC_PRECISION_BITS must be an integer in [64, 1024], got '") + env + "'");
    }
    return v;
  }
  return ohic::kDefaultPrecisionBits;
}

void check_tolerance(const std::string& tol, long prec) {
  ohic::BigFloat v;
  try {
    v = ohic::BigFloat::parse(tol, prec);
  } catch (const std::exception&) {
    throw UsageError("tolerance '" + tol + "' is not a decimal number");
  }
  if (!v.is_finite() || v.sign() <= 0) throw UsageError("tolerance must be positive, got '" + tol + "'");
}

int cmd_list(const Config& c) {
  auto records = ohic::list_identities(kind_filter(c));
  std::cout << std::left << std::setw(8) << "id" << std::setw(6) << "kind" << std::setw(9) << "expected"
            << std::setw(40) << "params"
            << "location\n";
  for (const auto& r : records) {
    std::cout << std::setw(8) << r.id << std::setw(6) << ohic::kind_name(r.kind) << std::setw(9)
              << ohic::expected_status_name(r.expected_status) << std::setw(40) << r.parameters << r.paper_location
              << "\n";
  }
  return kExitOk;
}

std::string summary_status(const ohic::VerificationReport& r) {
  if (r.expected_status == ohic::ExpectedStatus::kSuspect) return "suspect-residual";
  return std::string(ohic::status_name(r.status));
}

void print_summary(std::ostream& os, const std::vector<ohic::VerificationReport>& reports) {
  for (const auto& r : reports) {
    os << std::left << std::setw(8) << r.id << std::setw(17) << summary_status(r) << r.cases << " cases, "
       << r.elapsed_ms << " ms";
    if (r.first_mismatch_index) os << ", first mismatch at index " << *r.first_mismatch_index << " (" << r.mismatch_case.value_or("") << ")";
    if (r.residual_mid) os << ", residual " << *r.residual_mid << " +- " << r.residual_rad.value_or("");
    if (r.error) os << ", error: " << *r.error;
    os << "\n";
    for (const auto& x : r.readings) {
      os << "        " << x.name << (x.asserted ? " (asserted)" : "") << ": " << ohic::status_name(x.status)
         << ", residual " << x.residual_mid << " +- " << x.residual_rad << " at " << x.worst_case << "\n";
    }
  }
}

int cmd_verify(const Config& c) {
  if (c.order < 8 || c.order > ohic::kMaxSeriesOrder) throw UsageError("--order must lie in [8, 256]");
  ohic::RunOptions opts;
  opts.order = c.order;
  opts.prec = precision(c);
  opts.tol = c.tol;
  if (opts.tol) check_tolerance(*opts.tol, opts.prec);
  auto filter = kind_filter(c);

  std::vector<ohic::VerificationReport> reports;
  if (!c.id.empty()) {
    auto rec = ohic::find_identity(c.id);
    if (!rec) throw UsageError("unknown identity id '" + c.id + "'");
    if (filter && rec->kind != *filter) throw UsageError(c.id + " is not of kind " + c.kind);
    reports.push_back(ohic::verify(c.id, opts));
  } else {
    reports = ohic::verify_all(filter, opts, c.jobs);
  }

  std::string body;
  if (c.format == "json") {
    body = ohic::to_json(reports);
  } else if (c.format == "csv") {
    body = ohic::to_csv(reports);
  } else {
    body = ohic::to_markdown(reports, opts);
  }
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    f << body;
    if (!f) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return kExitFail;
    }
  }
  print_summary(std::cerr, reports);
  return ohic::suite_passed(reports) ? kExitOk : kExitFail;
}

int cmd_eval(const Config& c) {
  long prec = precision(c);
  try {
    ohic::Enclosure v = ohic::eval(ohic::parse_closed_form(c.expr), prec);
    std::cout << v.to_string() << "\n";
  } catch (const ohic::ParseError& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("domain error: ") + e.what());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify harmonic-number and Fibonacci identities"};
  app.require_subcommand(1);
  Config cfg;

  auto* list = app.add_subcommand("list", "List catalog records");
  list->add_option("--kind", cfg.kind, "ser, comb, num or int");

  auto* verify = app.add_subcommand("verify", "Run catalog records and write a report");
  verify->add_option("--id", cfg.id, "Single record id, e.g. SER-03");
  verify->add_option("--kind", cfg.kind, "ser, comb, num or int");
  verify->add_option("--order", cfg.order, "Series order; also the COMB index bound (capped at 200)")
      ->check(CLI::Range(8L, ohic::kMaxSeriesOrder));
  verify->add_option("--prec", cfg.prec, "Working precision in bits")
      ->check(CLI::Range(ohic::kMinPrecisionBits, ohic::kMaxPrecisionBits));
  verify->add_option("--tol", cfg.tol, "Residual tolerance for NUM and INT records");
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  verify->add_option("--format", cfg.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  verify->add_option("--out", cfg.out, "Write the report here instead of stdout");

  auto* eval = app.add_subcommand("eval", "Evaluate a closed-form expression");
  eval->add_option("expr", cfg.expr, "Prefix expression, e.g. div(ln(2),mul(2,sqrt(2)))")->required();
  eval->add_option("--prec", cfg.prec, "Working precision in bits")
      ->check(CLI::Range(ohic::kMinPrecisionBits, ohic::kMaxPrecisionBits));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*list) return cmd_list(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_eval(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
