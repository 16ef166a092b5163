#include "ohic/closedform.hpp"

#include <cctype>
#include <optional>

namespace ohic {

struct ClosedForm::Node {
  Kind kind;
  std::vector<ClosedForm> children;
  BigRational q;
  Constant c = Constant::kPi;
  long index = 0;
  std::optional<GibonacciParams> params;
};

namespace {

using Kind = ClosedForm::Kind;

struct KindName {
  Kind kind;
  std::string_view name;
  int arity;  // -1: two or more
};

constexpr KindName kNames[] = {
    {Kind::kAdd, "add", -1},   {Kind::kSub, "sub", 2},       {Kind::kMul, "mul", -1},
    {Kind::kDiv, "div", 2},    {Kind::kNeg, "neg", 1},       {Kind::kPowInt, "pow", 2},
    {Kind::kSqrt, "sqrt", 1},  {Kind::kLn, "ln", 1},         {Kind::kExp, "exp", 1},
    {Kind::kArcsin, "arcsin", 1}, {Kind::kAbs, "abs", 1},    {Kind::kFibonacci, "fibonacci", 1},
    {Kind::kLucas, "lucas", 1}, {Kind::kGibonacci, "gibonacci", 3},
};

std::string_view kind_name(Kind k) {
  for (const auto& n : kNames) {
    if (n.kind == k) return n.name;
  }
  return k == Kind::kRational ? "rational" : "constant";
}

const KindName* find_function(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return &n;
  }
  if (name == "pow_int") return find_function("pow");
  return nullptr;
}

bool is_unary(Kind k) {
  switch (k) {
    case Kind::kNeg: case Kind::kSqrt: case Kind::kLn: case Kind::kExp: case Kind::kArcsin: case Kind::kAbs:
      return true;
    default:
      return false;
  }
}

bool is_nary(Kind k) { return k == Kind::kAdd || k == Kind::kMul || k == Kind::kSub || k == Kind::kDiv; }

}  // namespace

ClosedForm::ClosedForm(const BigRational& q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kRational;
  n->q = q;
  node_ = std::move(n);
}

ClosedForm::ClosedForm(Constant c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConstant;
  n->c = c;
  node_ = std::move(n);
}

ClosedForm ClosedForm::fibonacci(long j) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kFibonacci;
  n->index = j;
  return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::lucas(long j) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLucas;
  n->index = j;
  return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::gibonacci(const GibonacciParams& p, long j) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kGibonacci;
  n->index = j;
  n->params = p;
  return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::unary(Kind k, ClosedForm x) {
  if (!is_unary(k)) throw std::invalid_argument("not a unary node kind");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children.push_back(std::move(x));
  return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::binary(Kind k, ClosedForm a, ClosedForm b) {
  if (!is_nary(k)) throw std::invalid_argument("not a binary node kind");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children.push_back(std::move(a));
  n->children.push_back(std::move(b));
  return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::nary(Kind k, std::vector<ClosedForm> args) {
  if (k != Kind::kAdd && k != Kind::kMul) throw std::invalid_argument("only add and mul are n-ary");
  if (args.size() < 2) throw std::invalid_argument("n-ary node needs at least two arguments");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children = std::move(args);
  return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::pow_int(ClosedForm x, long k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPowInt;
  n->index = k;
  n->children.push_back(std::move(x));
  return ClosedForm(std::move(n));
}

ClosedForm::Kind ClosedForm::kind() const { return node_->kind; }
const std::vector<ClosedForm>& ClosedForm::children() const { return node_->children; }
const BigRational& ClosedForm::rational() const { return node_->q; }
Constant ClosedForm::constant() const { return node_->c; }
long ClosedForm::index() const { return node_->index; }
const GibonacciParams& ClosedForm::params() const { return node_->params.value(); }

std::string ClosedForm::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kRational:
      return n.q.to_string();
    case Kind::kConstant:
      return std::string(constant_name(n.c));
    case Kind::kFibonacci:
    case Kind::kLucas:
      return std::string(kind_name(n.kind)) + "(" + std::to_string(n.index) + ")";
    case Kind::kGibonacci:
      return "gibonacci(" + n.params->a.to_string() + "," + n.params->b.to_string() + "," + std::to_string(n.index) + ")";
    case Kind::kPowInt:
      return "pow(" + n.children[0].to_string() + "," + std::to_string(n.index) + ")";
    default:
      break;
  }
  std::string s = std::string(kind_name(n.kind)) + "(";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i) s += ",";
    s += n.children[i].to_string();
  }
  return s + ")";
}

namespace {

Enclosure eval_at(const ClosedForm& cf, long prec, const std::string& path) {
  auto child = [&](std::size_t i) {
    const ClosedForm& c = cf.children()[i];
    return eval_at(c, prec, path + "[" + std::to_string(i) + "]." + std::string(kind_name(c.kind())));
  };
  try {
    switch (cf.kind()) {
      case Kind::kRational:
        return Enclosure::exact(cf.rational(), prec);
      case Kind::kConstant:
        return constant(cf.constant(), prec);
      case Kind::kFibonacci:
        return Enclosure::exact(BigRational(ohic::fibonacci(cf.index())), prec);
      case Kind::kLucas:
        return Enclosure::exact(BigRational(ohic::lucas(cf.index())), prec);
      case Kind::kGibonacci:
        return Enclosure::exact(ohic::gibonacci(cf.params(), cf.index()), prec);
      case Kind::kAdd: {
        Enclosure acc = child(0);
        for (std::size_t i = 1; i < cf.children().size(); ++i) acc = acc + child(i);
        return acc;
      }
      case Kind::kMul: {
        Enclosure acc = child(0);
        for (std::size_t i = 1; i < cf.children().size(); ++i) acc = acc * child(i);
        return acc;
      }
      case Kind::kSub:
        return child(0) - child(1);
      case Kind::kDiv:
        return child(0) / child(1);
      case Kind::kNeg:
        return -child(0);
      case Kind::kPowInt:
        return ohic::pow_int(child(0), cf.index());
      case Kind::kSqrt:
        return ohic::sqrt(child(0));
      case Kind::kLn:
        return ohic::ln(child(0));
      case Kind::kExp:
        return ohic::exp(child(0));
      case Kind::kArcsin:
        return ohic::arcsin(child(0));
      case Kind::kAbs:
        return ohic::abs(child(0));
    }
  } catch (const EvalError&) {
    throw;
  } catch (const DomainError& e) {
    throw EvalError(path, e.what());
  }
  throw EvalError(path, "unknown node kind");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ClosedForm parse_all() {
    ClosedForm e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input '" + std::string(s_.substr(pos_, 8)) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_number() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return (c == '-' || c == '+') && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
  }

  BigRational number() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_number()) fail("expected a number");
    if (s_[pos_] == '-' || s_[pos_] == '+') ++pos_;
    auto digits = [&] {
      const std::size_t d0 = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == d0) fail("expected digits");
    };
    digits();
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) {
      ++pos_;
      digits();
    }
    try {
      return BigRational::parse(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  long integer() {
    const std::size_t start = pos_;
    BigRational q = number();
    if (!q.is_integer() || !q.num().fits_long()) {
      pos_ = start;
      skip_ws();
      fail("expected an integer");
    }
    return q.num().to_long();
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail(pos_ < s_.size() ? "unexpected character '" + std::string(1, s_[pos_]) + "'"
                                            : "unexpected end of input");
    return std::string(s_.substr(start, pos_ - start));
  }

  ClosedForm expr() {
    if (at_number()) return ClosedForm(number());
    const std::size_t start = pos_;
    std::string name = identifier();
    if (!peek('(')) {
      try {
        return ClosedForm(parse_constant(name));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("unknown constant '" + name + "'");
      }
    }
    const KindName* fn = find_function(name);
    if (!fn) {
      pos_ = start;
      fail("unknown function '" + name + "'");
    }
    expect('(');
    ClosedForm out = [&]() -> ClosedForm {
      switch (fn->kind) {
        case Kind::kFibonacci:
          return ClosedForm::fibonacci(integer());
        case Kind::kLucas:
          return ClosedForm::lucas(integer());
        case Kind::kGibonacci: {
          const std::size_t at = pos_;
          BigRational a = number();
          expect(',');
          BigRational b = number();
          expect(',');
          long j = integer();
          if (a.is_zero() && b.is_zero()) {
            pos_ = at;
            fail("gibonacci seeds must not both be 0");
          }
          return ClosedForm::gibonacci(GibonacciParams(a, b), j);
        }
        case Kind::kPowInt: {
          ClosedForm x = expr();
          expect(',');
          return ClosedForm::pow_int(std::move(x), integer());
        }
        default:
          break;
      }
      std::vector<ClosedForm> args{expr()};
      while (peek(',')) {
        ++pos_;
        args.push_back(expr());
      }
      const int n = static_cast<int>(args.size());
      if ((fn->arity == -1 && n < 2) || (fn->arity >= 0 && n != fn->arity)) {
        fail(std::string(fn->name) + " takes " + (fn->arity == -1 ? "at least 2" : std::to_string(fn->arity)) +
             " argument(s), got " + std::to_string(n));
      }
      if (fn->arity == 1) return ClosedForm::unary(fn->kind, std::move(args[0]));
      if (fn->arity == -1) return ClosedForm::nary(fn->kind, std::move(args));
      return ClosedForm::binary(fn->kind, std::move(args[0]), std::move(args[1]));
    }();
    expect(')');
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Enclosure eval(const ClosedForm& cf, long prec) { return eval_at(cf, prec, std::string(kind_name(cf.kind()))); }

ClosedForm parse_closed_form(std::string_view text) { return Parser(text).parse_all(); }

ClosedForm binet(const GibonacciParams& p, long j) {
  const ClosedForm alpha(Constant::kAlpha), beta(Constant::kBeta);
  const ClosedForm a(p.a), b(p.b);
  return ((b - a * beta) * pow_int(alpha, j) + (a * alpha - b) * pow_int(beta, j)) / (alpha - beta);
}

Enclosure binet_residual(const GibonacciParams& p, long j, long prec) {
  if (j > kGibonacciRecurrenceBound || j < -kGibonacciRecurrenceBound) {
    throw std::invalid_argument("binet_residual: |j| must be at most " + std::to_string(kGibonacciRecurrenceBound));
  }
  return eval(binet(p, j) - ClosedForm::gibonacci(p, j), prec);
}

Enclosure sqrt_power_identity_residual(long r, int sign, long prec) {
  if (r < 0) throw std::invalid_argument("sqrt_power_identity_residual: r must be nonnegative");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const ClosedForm alpha(Constant::kAlpha), beta(Constant::kBeta);
  const bool even = r % 2 == 0;
  ClosedForm first = sqrt(pow_int(alpha, r));
  ClosedForm second = sqrt(even ? pow_int(beta, r) : -pow_int(beta, r));
  ClosedForm base = even ? ClosedForm::lucas(r) : ClosedForm(Constant::kSqrt5) * ClosedForm::fibonacci(r);
  ClosedForm lhs = sign > 0 ? first + second : first - second;
  ClosedForm rhs = sqrt(sign > 0 ? base + ClosedForm(2) : base - ClosedForm(2));
  return eval(lhs - rhs, prec);
}

}  // namespace ohic
