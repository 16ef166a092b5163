// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Set OHIC_NIGHTLY=1 for the order-128 / n <= 200 configuration.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "ohic/catalog.hpp"

namespace {

using namespace ohic;

struct Criterion {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      why << " [" << msg << "]";
    }
  }
};

int failures = 0;

void report(int n, const std::string& name, Criterion& c, const std::string& detail) {
  std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << n << "  " << name << ": " << detail << c.why.str()
            << std::endl;
  if (!c.ok) ++failures;
}

int run_command(const std::string& cmd, std::string* out = nullptr) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
    if (out) out->append(buf.data(), n);
  }
  int status = pclose(p);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<VerificationReport> of_kind(const std::vector<VerificationReport>& all, IdentityKind k) {
  std::vector<VerificationReport> out;
  for (const auto& r : all) {
    if (r.kind == k) out.push_back(r);
  }
  return out;
}

double seconds(const std::vector<VerificationReport>& rs) {
  long ms = 0;
  for (const auto& r : rs) ms += r.elapsed_ms;
  return ms / 1000.0;
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

void exact_suite(Criterion& c, const std::vector<VerificationReport>& rs, std::size_t count, const char* what) {
  c.require(rs.size() == count, std::to_string(rs.size()) + " records");
  for (const auto& r : rs) {
    c.require(r.status == Status::kPass, r.id + " " + std::string(status_name(r.status)) + r.error.value_or(""));
    c.require(!r.first_mismatch_index, r.id + std::string(" mismatch in ") + what);
  }
}

void residual_suite(Criterion& c, const std::vector<VerificationReport>& rs, const BigFloat& tol) {
  for (const auto& r : rs) {
    if (r.expected_status == ExpectedStatus::kSuspect) continue;
    c.require(r.status == Status::kPass, r.id + " " + std::string(status_name(r.status)) + r.error.value_or(""));
    if (!r.residual_mid || !r.residual_rad) {
      c.require(false, r.id + " has no residual");
      continue;
    }
    BigFloat mid = BigFloat::parse(*r.residual_mid, 64), rad = BigFloat::parse(*r.residual_rad, 64);
    c.require(mpfr_cmpabs(mid.get(), tol.get()) <= 0 && rad <= tol, r.id + " residual above tolerance");
  }
}

}  // namespace

int main() {
  const bool nightly = std::getenv("OHIC_NIGHTLY") != nullptr;
  const std::string cli = OHIC_CLI_PATH;

  // Criterion 7 first: two full CLI runs; the first also feeds criteria 3 to 5.
  std::string run1, run2;
  int code1 = run_command(cli + " verify --format json 2>/dev/null", &run1);
  int code2 = run_command(cli + " verify --format json 2>/dev/null", &run2);
  std::vector<VerificationReport> all;
  try {
    all = reports_from_json(run1);
  } catch (const std::exception& e) {
    std::cout << "FAIL  CLI report did not parse: " << e.what() << "\n";
    return 1;
  }

  {
    Criterion c;
    RunOptions o;
    std::vector<VerificationReport> rs = of_kind(all, IdentityKind::kSer);
    exact_suite(c, rs, 17, "series");
    double t = seconds(rs);
    c.require(t < 30, "runtime");
    if (nightly) {
      o.order = 128;
      exact_suite(c, verify_all(IdentityKind::kSer, o, 1), 17, "series at order 128");
    }
    for (const auto& sc : series_cases("SER-03", 64)) c.require(sc.lhs[3] == rat(92, 3) && sc.rhs[3] == rat(92, 3), "[x^3] 92/3");
    auto h2n = series_cases("SER-05", 64);
    c.require(h2n.size() == 1 && h2n[0].rhs[2] == rat(25, 2), "[x^2] 25/2");
    auto cor = series_cases("SER-09", 64);
    bool m0 = false;
    for (const auto& sc : series_cases("SER-10", 64)) {
      if (sc.params == "m=0") m0 = sc.rhs == cor[0].rhs;
    }
    c.require(m0, "SER-10 m=0 vs SER-09");
    report(1, "exact series suite", c,
           std::to_string(rs.size()) + " SER records, order " + (nightly ? "64 and 128" : "64") + ", " + fmt(t));
  }
  {
    Criterion c;
    std::vector<VerificationReport> rs = of_kind(all, IdentityKind::kComb);
    if (nightly) {
      RunOptions o;
      o.order = kMaxCombIndex;
      rs = verify_all(IdentityKind::kComb, o, 1);
    }
    exact_suite(c, rs, 20, "finite sums");
    double t = seconds(rs);
    c.require(t < 60, "runtime");
    report(2, "exact combinatorial suite", c,
           std::to_string(rs.size()) + " COMB records, n <= " + (nightly ? "200" : "64") + ", " + fmt(t));
  }
  {
    Criterion c;
    auto rs = of_kind(all, IdentityKind::kNum);
    c.require(rs.size() == 18, "record count");
    residual_suite(c, rs, BigFloat::parse(kDefaultNumTolerance, 64, MPFR_RNDU));
    double t = seconds(rs);
    c.require(t < 120, "runtime");
    report(3, "numeric series suite", c, "17 asserted NUM records within 1e-30 at 192 bits, " + fmt(t));
  }
  {
    Criterion c;
    auto rs = of_kind(all, IdentityKind::kInt);
    c.require(rs.size() == 3, "record count");
    residual_suite(c, rs, BigFloat::parse(kDefaultIntTolerance, 64, MPFR_RNDU));
    double t = seconds(rs);
    c.require(t < 120, "runtime");
    report(4, "integral suite", c, "3 INT records within 1e-25 at 192 bits, " + fmt(t));
  }
  {
    Criterion c;
    std::string detail;
    const VerificationReport* s = nullptr;
    for (const auto& r : all) {
      if (r.id == "NUM-15") s = &r;
    }
    c.require(s != nullptr, "NUM-15 missing");
    if (s) {
      c.require(s->expected_status == ExpectedStatus::kSuspect, "not suspect");
      c.require(s->residual_mid.has_value(), "no residual");
      std::map<std::string, const Reading*> by_name;
      for (const auto& x : s->readings) by_name[x.name] = &x;
      c.require(by_name.count("literal") && by_name.count("t_substituted"), "readings");
      for (const auto& [name, x] : by_name) detail += name + " " + x->residual_mid + "; ";
      VerificationReport forced = *s;
      forced.status = Status::kFail;
      c.require(suite_passed({forced}), "suspect affects suite status");
    }
    c.require(code1 == 0, "CLI exit code " + std::to_string(code1));
    report(5, "suspect handling", c, detail + "CLI exit " + std::to_string(code1));
  }
  {
    Criterion c;
    std::string names;
    for (const char* bin : {OHIC_PROPERTY_BINARIES}) {
      std::string out;
      int code = run_command(std::string(bin) + " --gtest_filter='*Property*' --gtest_brief=1 2>&1", &out);
      std::smatch m;
      std::regex ran("([0-9]+) tests? from [0-9]+ test suites? ran");
      long n = std::regex_search(out, m, ran) ? std::stol(m[1]) : 0;
      std::string base = std::string(bin).substr(std::string(bin).find_last_of('/') + 1);
      c.require(code == 0 && n > 0, base);
      names += base + " " + std::to_string(n) + ", ";
    }
    report(6, "property suites", c, names + "property tests green");
  }
  {
    Criterion c;
    std::regex timing("\"elapsed_ms\": [0-9]+");
    c.require(code1 == 0 && code2 == 0, "exit codes");
    c.require(!run1.empty(), "empty report");
    c.require(std::regex_replace(run1, timing, "") == std::regex_replace(run2, timing, ""), "reports differ");
    report(7, "determinism", c, "two verify --format json runs equal up to elapsed_ms");
  }
  return failures == 0 ? 0 : 1;
}
