#pragma once

// Closed-form expression trees evaluated to enclosures.
//
// Text notation (prefix, whitespace ignored):
//   literal     17, -3/4, 0.125
//   constant    pi sqrt5 alpha beta ln2 ln3 ln5 ln_alpha
//   sequence    fibonacci(j) lucas(j) gibonacci(a, b, j)
//   unary       neg sqrt ln exp arcsin abs
//   binary      add sub mul div, pow(x, k) with integer k
// add and mul also take more than two arguments.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ohic/bigfloat.hpp"
#include "ohic/sequences.hpp"

namespace ohic {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Evaluation failure with the path of the offending node, e.g. "mul[1].ln".
class EvalError : public DomainError {
 public:
  EvalError(const std::string& path, const std::string& msg)
      : DomainError("at " + path + ": " + msg), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ClosedForm {
 public:
  enum class Kind {
    kRational, kConstant, kFibonacci, kLucas, kGibonacci,
    kAdd, kSub, kMul, kDiv, kNeg, kPowInt, kSqrt, kLn, kExp, kArcsin, kAbs,
  };

  ClosedForm(const BigRational& q);  // NOLINT: literals convert implicitly
  ClosedForm(long v) : ClosedForm(BigRational(v)) {}  // NOLINT
  ClosedForm(Constant c);  // NOLINT

  static ClosedForm fibonacci(long j);
  static ClosedForm lucas(long j);
  static ClosedForm gibonacci(const GibonacciParams& p, long j);
  static ClosedForm unary(Kind k, ClosedForm x);
  static ClosedForm binary(Kind k, ClosedForm a, ClosedForm b);
  /// add or mul over two or more terms.
  static ClosedForm nary(Kind k, std::vector<ClosedForm> args);
  static ClosedForm pow_int(ClosedForm x, long k);

  Kind kind() const;
  const std::vector<ClosedForm>& children() const;
  const BigRational& rational() const;
  Constant constant() const;
  long index() const;
  const GibonacciParams& params() const;

  /// Prefix notation; parse(to_string()) rebuilds an identical tree.
  std::string to_string() const;

  friend ClosedForm operator+(ClosedForm a, ClosedForm b) { return binary(Kind::kAdd, std::move(a), std::move(b)); }
  friend ClosedForm operator-(ClosedForm a, ClosedForm b) { return binary(Kind::kSub, std::move(a), std::move(b)); }
  friend ClosedForm operator*(ClosedForm a, ClosedForm b) { return binary(Kind::kMul, std::move(a), std::move(b)); }
  friend ClosedForm operator/(ClosedForm a, ClosedForm b) { return binary(Kind::kDiv, std::move(a), std::move(b)); }
  friend ClosedForm operator-(ClosedForm a) { return unary(Kind::kNeg, std::move(a)); }

 private:
  struct Node;
  explicit ClosedForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline ClosedForm sqrt(ClosedForm x) { return ClosedForm::unary(ClosedForm::Kind::kSqrt, std::move(x)); }
inline ClosedForm ln(ClosedForm x) { return ClosedForm::unary(ClosedForm::Kind::kLn, std::move(x)); }
inline ClosedForm exp(ClosedForm x) { return ClosedForm::unary(ClosedForm::Kind::kExp, std::move(x)); }
inline ClosedForm arcsin(ClosedForm x) { return ClosedForm::unary(ClosedForm::Kind::kArcsin, std::move(x)); }
inline ClosedForm abs(ClosedForm x) { return ClosedForm::unary(ClosedForm::Kind::kAbs, std::move(x)); }
inline ClosedForm pow_int(ClosedForm x, long k) { return ClosedForm::pow_int(std::move(x), k); }

/// Enclosure of the tree's value. Throws EvalError on domain violations.
Enclosure eval(const ClosedForm& cf, long prec);

/// Throws ParseError (with the byte offset) on malformed input.
ClosedForm parse_closed_form(std::string_view text);

/// ((b - a beta) alpha^j + (a alpha - b) beta^j) / (alpha - beta).
ClosedForm binet(const GibonacciParams& p, long j);

/// binet(p, j) - G_j(a, b) evaluated; encloses 0. Requires |j| <= 512.
Enclosure binet_residual(const GibonacciParams& p, long j, long prec);

/// sqrt(alpha^r) +- sqrt(+-beta^r) - sqrt(L_r +- 2) for even r, and with
/// sqrt(5) F_r in place of L_r and -beta^r under the root for odd r.
/// Requires r >= 0.
Enclosure sqrt_power_identity_residual(long r, int sign, long prec);

}  // namespace ohic
