#include "ohic/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "catalog_internal.hpp"

namespace ohic {

std::string_view kind_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::kSer: return "SER";
    case IdentityKind::kComb: return "COMB";
    case IdentityKind::kNum: return "NUM";
    case IdentityKind::kInt: return "INT";
  }
  return "?";
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::optional<IdentityKind> parse_kind(std::string_view s) {
  std::string u = upper(s);
  for (auto k : {IdentityKind::kSer, IdentityKind::kComb, IdentityKind::kNum, IdentityKind::kInt}) {
    if (u == kind_name(k)) return k;
  }
  return std::nullopt;
}

std::string_view expected_status_name(ExpectedStatus s) { return s == ExpectedStatus::kPass ? "pass" : "suspect"; }

std::optional<ExpectedStatus> parse_expected_status(std::string_view s) {
  if (s == "pass") return ExpectedStatus::kPass;
  if (s == "suspect") return ExpectedStatus::kSuspect;
  return std::nullopt;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kError: return "error";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view s) {
  for (auto v : {Status::kPass, Status::kFail, Status::kError}) {
    if (s == status_name(v)) return v;
  }
  return std::nullopt;
}

namespace detail {

void Recorder::exact(const std::string& params, long index, const BigRational& lhs, const BigRational& rhs) {
  ++exact_cases_;
  if (mismatch_index_ || lhs == rhs) return;
  mismatch_index_ = index;
  mismatch_case_ = params;
  mismatch_lhs_ = lhs.to_string();
  mismatch_rhs_ = rhs.to_string();
}

void Recorder::series(const std::string& params, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  long upto = std::min(lhs.order(), rhs.order());
  exact_cases_ += upto + 1;
  if (mismatch_index_) return;
  if (auto i = first_mismatch(lhs, rhs, upto)) {
    mismatch_index_ = *i;
    mismatch_case_ = params;
    mismatch_lhs_ = lhs[*i].to_string();
    mismatch_rhs_ = rhs[*i].to_string();
  }
}

void Recorder::accumulate(Acc& acc, const std::string& params, const Enclosure& lhs, const Enclosure& rhs) {
  Enclosure diff = lhs - rhs;
  ++acc.cases;
  if (!diff.within(ctx_.tol)) acc.failed = true;
  BigFloat m = diff.mag();
  if (!acc.worst || m > *acc.worst) {
    acc.worst = m;
    acc.worst_case = params;
    acc.mid = diff.mid().to_string(6);
    acc.rad = diff.rad().to_string(3);
  }
}

void Recorder::numeric(const std::string& params, const Enclosure& lhs, const Enclosure& rhs) {
  primary_.asserted = true;
  accumulate(primary_, params, lhs, rhs);
}

void Recorder::reading(const std::string& name, const std::string& params, const Enclosure& lhs,
                       const Enclosure& rhs) {
  auto it = std::find_if(readings_.begin(), readings_.end(), [&](const auto& p) { return p.first == name; });
  if (it == readings_.end()) {
    readings_.emplace_back(name, Acc{});
    it = std::prev(readings_.end());
  }
  accumulate(it->second, params, lhs, rhs);
}

void Recorder::fill(VerificationReport& r) const {
  r.cases = exact_cases_ + primary_.cases;
  bool failed = false;
  if (mismatch_index_) {
    failed = true;
    r.first_mismatch_index = mismatch_index_;
    r.mismatch_case = mismatch_case_;
    r.lhs_at_mismatch = mismatch_lhs_;
    r.rhs_at_mismatch = mismatch_rhs_;
  }
  auto to_reading = [](const std::string& name, const Acc& a) {
    return Reading{name, a.asserted, a.cases, a.failed ? Status::kFail : Status::kPass, a.worst_case, a.mid, a.rad};
  };
  if (primary_.cases > 0) {
    failed = failed || primary_.failed;
    r.residual_mid = primary_.mid;
    r.residual_rad = primary_.rad;
    r.worst_case = primary_.worst_case;
    if (!primary_name_.empty()) r.readings.push_back(to_reading(primary_name_, primary_));
  }
  for (const auto& [name, acc] : readings_) r.readings.push_back(to_reading(name, acc));
  r.status = failed ? Status::kFail : Status::kPass;
}

BigFloat reachable_target(const BigFloat& tol, unsigned long divisor, long prec) {
  BigFloat t(prec), floor(prec);
  mpfr_div_ui(t.get(), tol.get(), divisor, MPFR_RNDD);
  mpfr_set_si_2exp(floor.get(), 1, -(prec - 16), MPFR_RNDU);
  return t < floor ? floor : t;
}

namespace {

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    add_series_entries(e);
    add_comb_entries(e);
    add_numeric_entries(e);
    add_integral_entries(e);
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.record.id < b.record.id; });
    return e;
  }();
  return entries;
}

const Entry* find_entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.record.id == id) return &e;
  }
  return nullptr;
}

std::string tolerance_text(IdentityKind kind, const RunOptions& opts) {
  if (opts.tol) return *opts.tol;
  return kind == IdentityKind::kInt ? kDefaultIntTolerance : kDefaultNumTolerance;
}

std::string run_params(const Entry& e, const CheckContext& ctx) {
  std::string p = e.record.parameters;
  switch (e.record.kind) {
    case IdentityKind::kSer: p += "; N=" + std::to_string(ctx.order); break;
    case IdentityKind::kComb: p += "; N=" + std::to_string(ctx.max_n); break;
    default: p += "; prec=" + std::to_string(ctx.prec); break;
  }
  return p;
}

void validate(const RunOptions& opts) {
  if (opts.order < 0 || opts.order > kMaxSeriesOrder) {
    throw std::invalid_argument("order must lie in [0, " + std::to_string(kMaxSeriesOrder) + "]");
  }
  if (opts.prec < kMinPrecisionBits || opts.prec > kMaxPrecisionBits) {
    throw std::invalid_argument("precision must lie in [" + std::to_string(kMinPrecisionBits) + ", " +
                                std::to_string(kMaxPrecisionBits) + "]");
  }
}

VerificationReport run_entry(const Entry& e, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = e.record.id;
  r.kind = e.record.kind;
  r.expected_status = e.record.expected_status;
  CheckContext ctx;
  ctx.order = opts.order;
  ctx.max_n = std::min(opts.order, kMaxCombIndex);
  ctx.prec = opts.prec;
  r.params = run_params(e, ctx);
  bool numeric = e.record.kind == IdentityKind::kNum || e.record.kind == IdentityKind::kInt;
  try {
    if (numeric) {
      std::string tol = tolerance_text(e.record.kind, opts);
      r.tolerance = tol;
      ctx.tol = BigFloat::parse(tol, opts.prec, MPFR_RNDD);
      if (ctx.tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    }
    Recorder rec(ctx);
    e.check(rec);
    rec.fill(r);
  } catch (const std::exception& ex) {
    r.status = Status::kError;
    r.error = ex.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace
}  // namespace detail

std::vector<IdentityRecord> list_identities(std::optional<IdentityKind> filter) {
  std::vector<IdentityRecord> out;
  for (const auto& e : detail::registry()) {
    if (!filter || e.record.kind == *filter) out.push_back(e.record);
  }
  return out;
}

std::optional<IdentityRecord> find_identity(std::string_view id) {
  const auto* e = detail::find_entry(id);
  if (!e) return std::nullopt;
  return e->record;
}

VerificationReport verify(std::string_view id, const RunOptions& opts) {
  detail::validate(opts);
  const auto* e = detail::find_entry(id);
  if (!e) throw std::invalid_argument("unknown identity id: " + std::string(id));
  return detail::run_entry(*e, opts);
}

namespace {

VerificationReport verify_kind(std::string_view id, IdentityKind kind, const RunOptions& opts) {
  auto rec = find_identity(id);
  if (!rec) throw std::invalid_argument("unknown identity id: " + std::string(id));
  if (rec->kind != kind) throw std::invalid_argument(std::string(id) + " is not a " + std::string(kind_name(kind)) + " record");
  return verify(id, opts);
}

}  // namespace

VerificationReport verify_series(std::string_view id, long order) {
  RunOptions o;
  o.order = order;
  return verify_kind(id, IdentityKind::kSer, o);
}

VerificationReport verify_comb(std::string_view id, long max_n) {
  if (max_n < 0 || max_n > kMaxCombIndex) {
    throw std::invalid_argument("COMB index bound must lie in [0, " + std::to_string(kMaxCombIndex) + "]");
  }
  RunOptions o;
  o.order = max_n;
  return verify_kind(id, IdentityKind::kComb, o);
}

VerificationReport verify_numeric(std::string_view id, long prec, const std::string& tol) {
  RunOptions o;
  o.prec = prec;
  o.tol = tol;
  return verify_kind(id, IdentityKind::kNum, o);
}

VerificationReport verify_integral(std::string_view id, long prec, const std::string& tol) {
  RunOptions o;
  o.prec = prec;
  o.tol = tol;
  return verify_kind(id, IdentityKind::kInt, o);
}

std::vector<VerificationReport> verify_all(std::optional<IdentityKind> filter, const RunOptions& opts,
                                           unsigned jobs) {
  detail::validate(opts);
  warm_up_sequence_tables();
  std::vector<const detail::Entry*> todo;
  for (const auto& e : detail::registry()) {
    if (!filter || e.record.kind == *filter) todo.push_back(&e);
  }
  std::vector<VerificationReport> out(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) out[i] = detail::run_entry(*todo[i], opts);
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(todo.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return r.expected_status == ExpectedStatus::kSuspect || r.status == Status::kPass;
  });
}

std::vector<SeriesCase> series_cases(std::string_view id, long order) {
  auto rec = find_identity(id);
  if (!rec || rec->kind != IdentityKind::kSer) throw std::invalid_argument("not a SER record: " + std::string(id));
  return detail::build_series_cases(id, order);
}

// ---------------------------------------------------------------- serialization

namespace {

using nlohmann::json;

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

json to_json_value(const VerificationReport& r) {
  json j;
  j["id"] = r.id;
  j["kind"] = kind_name(r.kind);
  j["params"] = r.params;
  j["status"] = status_name(r.status);
  j["expected_status"] = expected_status_name(r.expected_status);
  j["cases"] = r.cases;
  put(j, "first_mismatch_index", r.first_mismatch_index);
  put(j, "mismatch_case", r.mismatch_case);
  put(j, "lhs_at_mismatch", r.lhs_at_mismatch);
  put(j, "rhs_at_mismatch", r.rhs_at_mismatch);
  put(j, "residual_mid", r.residual_mid);
  put(j, "residual_rad", r.residual_rad);
  put(j, "tolerance", r.tolerance);
  put(j, "worst_case", r.worst_case);
  put(j, "error", r.error);
  if (!r.readings.empty()) {
    json arr = json::array();
    for (const auto& x : r.readings) {
      arr.push_back({{"name", x.name},
                     {"asserted", x.asserted},
                     {"cases", x.cases},
                     {"status", status_name(x.status)},
                     {"worst_case", x.worst_case},
                     {"residual_mid", x.residual_mid},
                     {"residual_rad", x.residual_rad}});
    }
    j["readings"] = arr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

template <class T>
T require(std::optional<T> v, const std::string& what) {
  if (!v) throw std::invalid_argument("invalid report field: " + what);
  return *v;
}

VerificationReport from_json_value(const json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.kind = require(parse_kind(j.at("kind").get<std::string>()), "kind");
  r.params = j.at("params").get<std::string>();
  r.status = require(parse_status(j.at("status").get<std::string>()), "status");
  r.expected_status = require(parse_expected_status(j.at("expected_status").get<std::string>()), "expected_status");
  r.cases = j.at("cases").get<long>();
  get(j, "first_mismatch_index", r.first_mismatch_index);
  get(j, "mismatch_case", r.mismatch_case);
  get(j, "lhs_at_mismatch", r.lhs_at_mismatch);
  get(j, "rhs_at_mismatch", r.rhs_at_mismatch);
  get(j, "residual_mid", r.residual_mid);
  get(j, "residual_rad", r.residual_rad);
  get(j, "tolerance", r.tolerance);
  get(j, "worst_case", r.worst_case);
  get(j, "error", r.error);
  if (j.contains("readings")) {
    for (const auto& x : j.at("readings")) {
      r.readings.push_back(Reading{x.at("name").get<std::string>(), x.at("asserted").get<bool>(),
                                   x.at("cases").get<long>(),
                                   require(parse_status(x.at("status").get<std::string>()), "reading status"),
                                   x.at("worst_case").get<std::string>(), x.at("residual_mid").get<std::string>(),
                                   x.at("residual_rad").get<std::string>()});
    }
  }
  r.elapsed_ms = j.at("elapsed_ms").get<long>();
  return r;
}

std::vector<std::string> columns() {
  return {"id", "kind", "expected_status", "status", "params", "cases", "first_mismatch_index", "mismatch_case",
          "lhs_at_mismatch", "rhs_at_mismatch", "residual_mid", "residual_rad", "tolerance", "worst_case",
          "readings", "error", "elapsed_ms"};
}

std::string readings_text(const VerificationReport& r) {
  std::string s;
  for (const auto& x : r.readings) {
    if (!s.empty()) s += " | ";
    s += x.name + (x.asserted ? " (asserted)" : "") + ": " + std::string(status_name(x.status)) + ", residual " +
         x.residual_mid + " +- " + x.residual_rad + " at " + x.worst_case;
  }
  return s;
}

std::vector<std::string> row(const VerificationReport& r) {
  auto opt = [](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::optional<long>>) {
      return v ? std::to_string(*v) : std::string();
    } else {
      return v ? *v : std::string();
    }
  };
  return {r.id,
          std::string(kind_name(r.kind)),
          std::string(expected_status_name(r.expected_status)),
          std::string(status_name(r.status)),
          r.params,
          std::to_string(r.cases),
          opt(r.first_mismatch_index),
          opt(r.mismatch_case),
          opt(r.lhs_at_mismatch),
          opt(r.rhs_at_mismatch),
          opt(r.residual_mid),
          opt(r.residual_rad),
          opt(r.tolerance),
          opt(r.worst_case),
          readings_text(r),
          opt(r.error),
          std::to_string(r.elapsed_ms)};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json_value(r));
  return arr.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(std::string_view text) {
  json arr = json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("report JSON must be an array");
  std::vector<VerificationReport> out;
  for (const auto& j : arr) out.push_back(from_json_value(j));
  return out;
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
    os << "\n";
  };
  line(columns());
  for (const auto& r : reports) line(row(r));
  return os.str();
}

std::string to_markdown(const std::vector<VerificationReport>& reports, const RunOptions& opts) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "order=" << opts.order << ", comb_max_n=" << std::min(opts.order, kMaxCombIndex) << ", prec=" << opts.prec
     << ", tol=" << (opts.tol ? *opts.tol : std::string("NUM ") + kDefaultNumTolerance + ", INT " + kDefaultIntTolerance)
     << "\n\n";
  auto cols = columns();
  os << "|";
  for (const auto& c : cols) os << " " << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& r : reports) {
    os << "|";
    for (const auto& f : row(r)) os << " " << md_field(f) << " |";
    os << "\n";
  }
  return os.str();
}

}  // namespace ohic
