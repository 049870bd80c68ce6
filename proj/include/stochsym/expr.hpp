#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stochsym/rational.hpp"

namespace stochsym {

enum class NodeKind : std::uint8_t {
  IntConst,
  RationalConst,
  DecimalConst,
  Variable,
  Sum,
  Product,
  Power,
  Negate,
  FuncApp,
};

enum class Func : std::uint8_t { Exp, Log, Sqrt, Sin, Cos };

const char* func_name(Func f);
std::optional<Func> func_from_name(const std::string& name);

/// Thrown by eval_numeric when a point is outside an expression's domain
/// (log of a non-positive number, division by zero, negative fractional
/// powers, non-finite results).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct ExprNode;
}

/// Immutable symbolic expression tree. Copies are cheap handle copies; all
/// operations on expressions are pure, so values can be shared freely across
/// threads.
class Expr {
 public:
  Expr();  // the zero constant

  static Expr integer(long long v);
  static Expr rational(const Rational& r);  // demotes to integer when den == 1
  static Expr rational(long long num, long long den);
  static Expr decimal(double v);
  static Expr variable(std::string name);
  static Expr sum(std::vector<Expr> terms);       // [] -> 0, [e] -> e
  static Expr product(std::vector<Expr> factors); // [] -> 1, [e] -> e
  static Expr power(Expr base, Expr exponent);
  static Expr negate(Expr e);
  static Expr call(Func f, Expr arg);

  NodeKind kind() const;
  long long int_value() const;
  const Rational& rational_value() const;
  double decimal_value() const;
  const std::string& name() const;
  Func func() const;
  const std::vector<Expr>& children() const;
  const Expr& child(std::size_t i) const;
  std::size_t arity() const;

  bool is_constant() const;  // integer, rational or decimal node
  bool is_integer_constant(long long v) const;
  bool is_zero_literal() const { return is_integer_constant(0); }
  bool is_one_literal() const { return is_integer_constant(1); }
  /// Exact rational value when this is an integer or rational node.
  std::optional<Rational> rational_constant() const;
  /// Numeric value when this is any constant node.
  std::optional<double> constant_value() const;

  std::size_t hash() const;
  std::string str() const;

  /// Deterministic total order used for canonical sorting. Returns <0, 0, >0.
  static int compare(const Expr& a, const Expr& b);

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  const detail::ExprNode* raw() const { return node_.get(); }

 private:
  explicit Expr(std::shared_ptr<const detail::ExprNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::ExprNode> node_;
};

// Convenience builders used throughout the library and tests.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

/// Free variables, sorted by name.
std::set<std::string> free_variables(const Expr& e);
bool depends_on(const Expr& e, const std::string& var);

/// Double-precision evaluation at a point binding every free variable.
/// Throws DomainError on domain violations, std::invalid_argument on unbound
/// variables.
double eval_numeric(const Expr& e,
                    const std::map<std::string, double>& point);

}  // namespace stochsym
