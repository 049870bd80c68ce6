#include "stochsym/expr.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace stochsym {

namespace detail {

struct ExprNode {
  NodeKind kind;
  // payload
  long long int_value = 0;
  Rational rational_value;
  double decimal_value = 0.0;
  std::string name;
  Func func = Func::Exp;
  std::vector<Expr> children;
  std::size_t hash = 0;
};

}  // namespace detail

using detail::ExprNode;

namespace {

std::size_t hash_mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t compute_hash(const ExprNode& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x2545f4914f6cdd1dULL;
  switch (n.kind) {
    case NodeKind::IntConst:
      h = hash_mix(h, std::hash<long long>{}(n.int_value));
      break;
    case NodeKind::RationalConst:
      h = hash_mix(h, std::hash<long long>{}(n.rational_value.num()));
      h = hash_mix(h, std::hash<long long>{}(n.rational_value.den()));
      break;
    case NodeKind::DecimalConst:
      h = hash_mix(h, std::hash<double>{}(n.decimal_value));
      break;
    case NodeKind::Variable:
      h = hash_mix(h, std::hash<std::string>{}(n.name));
      break;
    case NodeKind::FuncApp:
      h = hash_mix(h, static_cast<std::size_t>(n.func));
      break;
    default:
      break;
  }
  for (const Expr& c : n.children) h = hash_mix(h, c.hash());
  return h;
}

std::shared_ptr<const ExprNode> make_node(ExprNode n) {
  n.hash = compute_hash(n);
  return std::make_shared<const ExprNode>(std::move(n));
}

const std::shared_ptr<const ExprNode>& zero_node() {
  static const std::shared_ptr<const ExprNode> z = [] {
    ExprNode n;
    n.kind = NodeKind::IntConst;
    n.int_value = 0;
    return make_node(std::move(n));
  }();
  return z;
}

}  // namespace

const char* func_name(Func f) {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
  }
  return "?";
}

std::optional<Func> func_from_name(const std::string& name) {
  if (name == "exp") return Func::Exp;
  if (name == "log") return Func::Log;
  if (name == "sqrt") return Func::Sqrt;
  if (name == "sin") return Func::Sin;
  if (name == "cos") return Func::Cos;
  return std::nullopt;
}

Expr::Expr() : node_(zero_node()) {}

Expr Expr::integer(long long v) {
  ExprNode n;
  n.kind = NodeKind::IntConst;
  n.int_value = v;
  return Expr(make_node(std::move(n)));
}

Expr Expr::rational(const Rational& r) {
  if (r.is_integer()) return integer(r.num());
  ExprNode n;
  n.kind = NodeKind::RationalConst;
  n.rational_value = r;
  return Expr(make_node(std::move(n)));
}

Expr Expr::rational(long long num, long long den) {
  return rational(Rational(num, den));
}

Expr Expr::decimal(double v) {
  ExprNode n;
  n.kind = NodeKind::DecimalConst;
  n.decimal_value = v;
  return Expr(make_node(std::move(n)));
}

Expr Expr::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  ExprNode n;
  n.kind = NodeKind::Variable;
  n.name = std::move(name);
  return Expr(make_node(std::move(n)));
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) return integer(0);
  if (terms.size() == 1) return terms.front();
  ExprNode n;
  n.kind = NodeKind::Sum;
  n.children = std::move(terms);
  return Expr(make_node(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return integer(1);
  if (factors.size() == 1) return factors.front();
  ExprNode n;
  n.kind = NodeKind::Product;
  n.children = std::move(factors);
  return Expr(make_node(std::move(n)));
}

Expr Expr::power(Expr base, Expr exponent) {
  ExprNode n;
  n.kind = NodeKind::Power;
  n.children = {std::move(base), std::move(exponent)};
  return Expr(make_node(std::move(n)));
}

Expr Expr::negate(Expr e) {
  ExprNode n;
  n.kind = NodeKind::Negate;
  n.children = {std::move(e)};
  return Expr(make_node(std::move(n)));
}

Expr Expr::call(Func f, Expr arg) {
  ExprNode n;
  n.kind = NodeKind::FuncApp;
  n.func = f;
  n.children = {std::move(arg)};
  return Expr(make_node(std::move(n)));
}

NodeKind Expr::kind() const { return node_->kind; }
long long Expr::int_value() const { return node_->int_value; }
const Rational& Expr::rational_value() const { return node_->rational_value; }
double Expr::decimal_value() const { return node_->decimal_value; }
const std::string& Expr::name() const { return node_->name; }
Func Expr::func() const { return node_->func; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
const Expr& Expr::child(std::size_t i) const { return node_->children[i]; }
std::size_t Expr::arity() const { return node_->children.size(); }
std::size_t Expr::hash() const { return node_->hash; }

bool Expr::is_constant() const {
  return kind() == NodeKind::IntConst || kind() == NodeKind::RationalConst ||
         kind() == NodeKind::DecimalConst;
}

bool Expr::is_integer_constant(long long v) const {
  return kind() == NodeKind::IntConst && int_value() == v;
}

std::optional<Rational> Expr::rational_constant() const {
  if (kind() == NodeKind::IntConst) return Rational(int_value());
  if (kind() == NodeKind::RationalConst) return rational_value();
  return std::nullopt;
}

std::optional<double> Expr::constant_value() const {
  switch (kind()) {
    case NodeKind::IntConst: return static_cast<double>(int_value());
    case NodeKind::RationalConst: return rational_value().to_double();
    case NodeKind::DecimalConst: return decimal_value();
    default: return std::nullopt;
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return Expr::compare(a, b) == 0;
}

int Expr::compare(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return 0;
  auto ka = static_cast<int>(a.kind());
  auto kb = static_cast<int>(b.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind()) {
    case NodeKind::IntConst:
      if (a.int_value() != b.int_value())
        return a.int_value() < b.int_value() ? -1 : 1;
      return 0;
    case NodeKind::RationalConst: {
      const Rational& ra = a.rational_value();
      const Rational& rb = b.rational_value();
      if (ra == rb) return 0;
      return ra < rb ? -1 : 1;
    }
    case NodeKind::DecimalConst:
      if (a.decimal_value() != b.decimal_value())
        return a.decimal_value() < b.decimal_value() ? -1 : 1;
      return 0;
    case NodeKind::Variable:
      return a.name().compare(b.name());
    case NodeKind::FuncApp:
      if (a.func() != b.func())
        return static_cast<int>(a.func()) < static_cast<int>(b.func()) ? -1 : 1;
      break;
    default:
      break;
  }
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    int c = compare(a.child(i), b.child(i));
    if (c != 0) return c;
  }
  return 0;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) {
  return Expr::sum({a, Expr::negate(b)});
}
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
  return Expr::product({a, Expr::power(b, Expr::integer(-1))});
}
Expr operator-(const Expr& a) { return Expr::negate(a); }

namespace {

void collect_vars(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == NodeKind::Variable) {
    out.insert(e.name());
    return;
  }
  for (const Expr& c : e.children()) collect_vars(c, out);
}

bool depends_on_impl(const Expr& e, const std::string& var) {
  if (e.kind() == NodeKind::Variable) return e.name() == var;
  for (const Expr& c : e.children())
    if (depends_on_impl(c, var)) return true;
  return false;
}

}  // namespace

std::set<std::string> free_variables(const Expr& e) {
  std::set<std::string> out;
  collect_vars(e, out);
  return out;
}

bool depends_on(const Expr& e, const std::string& var) {
  return depends_on_impl(e, var);
}

namespace {

double checked(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value in evaluation");
  return v;
}

double eval_impl(const Expr& e, const std::map<std::string, double>& point) {
  switch (e.kind()) {
    case NodeKind::IntConst: return static_cast<double>(e.int_value());
    case NodeKind::RationalConst: return e.rational_value().to_double();
    case NodeKind::DecimalConst: return e.decimal_value();
    case NodeKind::Variable: {
      auto it = point.find(e.name());
      if (it == point.end())
        throw std::invalid_argument("unbound variable: " + e.name());
      return it->second;
    }
    case NodeKind::Sum: {
      double acc = 0.0;
      for (const Expr& c : e.children()) acc += eval_impl(c, point);
      return checked(acc);
    }
    case NodeKind::Product: {
      double acc = 1.0;
      for (const Expr& c : e.children()) acc *= eval_impl(c, point);
      return checked(acc);
    }
    case NodeKind::Power: {
      double b = eval_impl(e.child(0), point);
      // Exact integer exponents avoid std::pow domain pitfalls for b < 0.
      if (auto r = e.child(1).rational_constant(); r && r->is_integer()) {
        long long k = r->num();
        if (b == 0.0 && k < 0) throw DomainError("division by zero");
        return checked(std::pow(b, static_cast<double>(k)));
      }
      double x = eval_impl(e.child(1), point);
      if (b == 0.0 && x < 0) throw DomainError("division by zero");
      if (b < 0.0) throw DomainError("fractional power of negative base");
      return checked(std::pow(b, x));
    }
    case NodeKind::Negate:
      return -eval_impl(e.child(0), point);
    case NodeKind::FuncApp: {
      double a = eval_impl(e.child(0), point);
      switch (e.func()) {
        case Func::Exp: return checked(std::exp(a));
        case Func::Log:
          if (a <= 0.0) throw DomainError("log of non-positive value");
          return checked(std::log(a));
        case Func::Sqrt:
          if (a < 0.0) throw DomainError("sqrt of negative value");
          return checked(std::sqrt(a));
        case Func::Sin: return checked(std::sin(a));
        case Func::Cos: return checked(std::cos(a));
      }
      break;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

double eval_numeric(const Expr& e, const std::map<std::string, double>& point) {
  return eval_impl(e, point);
}

// ---------------------------------------------------------------------------
// Printing. Output conforms to the expression grammar, so printed forms can
// be re-parsed.
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: sum < product < unary minus < power < atom.
enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

void print(const Expr& e, std::ostringstream& out, int parent_prec);

void print_paren(const Expr& e, std::ostringstream& out, int prec,
                 int parent_prec) {
  if (prec < parent_prec) {
    out << '(';
    print(e, out, 0);
    out << ')';
  } else {
    print(e, out, parent_prec);
  }
}

bool leading_minus(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::IntConst: return e.int_value() < 0;
    case NodeKind::RationalConst: return e.rational_value().is_negative();
    case NodeKind::DecimalConst: return e.decimal_value() < 0;
    case NodeKind::Negate: return true;
    case NodeKind::Product:
      return e.arity() > 0 && leading_minus(e.child(0));
    default: return false;
  }
}

// Strips one leading sign, returning the positive counterpart.
Expr strip_minus(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::IntConst: return Expr::integer(-e.int_value());
    case NodeKind::RationalConst: return Expr::rational(-e.rational_value());
    case NodeKind::DecimalConst: return Expr::decimal(-e.decimal_value());
    case NodeKind::Negate: return e.child(0);
    case NodeKind::Product: {
      std::vector<Expr> fs = e.children();
      Expr head = strip_minus(fs[0]);
      if (head.is_one_literal()) fs.erase(fs.begin());
      else fs[0] = head;
      return Expr::product(std::move(fs));
    }
    default: return e;
  }
}

void print_decimal(double v, std::ostringstream& out) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // Ensure the token re-parses as a decimal, not an integer.
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  out << s;
}

void print(const Expr& e, std::ostringstream& out, int parent_prec) {
  switch (e.kind()) {
    case NodeKind::IntConst:
      if (e.int_value() < 0) {
        print_paren(Expr::negate(Expr::integer(-e.int_value())), out, kUnary,
                    parent_prec);
      } else {
        out << e.int_value();
      }
      return;
    case NodeKind::RationalConst: {
      const Rational& r = e.rational_value();
      if (r.is_negative()) {
        print_paren(Expr::negate(Expr::rational(-r)), out, kUnary, parent_prec);
        return;
      }
      if (parent_prec >= kProduct) out << '(';
      out << r.num() << '/' << r.den();
      if (parent_prec >= kProduct) out << ')';
      return;
    }
    case NodeKind::DecimalConst:
      if (e.decimal_value() < 0) {
        print_paren(Expr::negate(Expr::decimal(-e.decimal_value())), out,
                    kUnary, parent_prec);
        return;
      }
      print_decimal(e.decimal_value(), out);
      return;
    case NodeKind::Variable:
      out << e.name();
      return;
    case NodeKind::Sum: {
      if (parent_prec > kSum) out << '(';
      bool first = true;
      for (const Expr& term : e.children()) {
        if (leading_minus(term)) {
          out << (first ? "-" : " - ");
          print(strip_minus(term), out, kSum + 1);
        } else {
          if (!first) out << " + ";
          print(term, out, kSum + 1);
        }
        first = false;
      }
      if (parent_prec > kSum) out << ')';
      return;
    }
    case NodeKind::Product: {
      if (leading_minus(e)) {
        print_paren(Expr::negate(strip_minus(e)), out, kUnary, parent_prec);
        return;
      }
      if (parent_prec > kProduct) out << '(';
      bool first = true;
      for (const Expr& f : e.children()) {
        // Negative exponents print as division.
        if (f.kind() == NodeKind::Power) {
          auto r = f.child(1).rational_constant();
          if (r && r->is_negative() && !first) {
            out << "/";
            Rational pos = -*r;
            Expr inv = pos.is_one() ? f.child(0)
                                    : Expr::power(f.child(0),
                                                  Expr::rational(pos));
            print(inv, out, kProduct + 1);
            continue;
          }
        }
        if (!first) out << '*';
        print(f, out, kProduct + 1);
        first = false;
      }
      if (parent_prec > kProduct) out << ')';
      return;
    }
    case NodeKind::Power: {
      if (parent_prec > kPower) out << '(';
      print(e.child(0), out, kPower + 1);
      out << '^';
      // The exponent of a right-associative '^' may be a unary minus.
      const Expr& x = e.child(1);
      if (x.kind() == NodeKind::Power || x.kind() == NodeKind::FuncApp ||
          x.kind() == NodeKind::Variable ||
          (x.kind() == NodeKind::IntConst && x.int_value() >= 0) ||
          (x.kind() == NodeKind::DecimalConst && x.decimal_value() >= 0)) {
        print(x, out, kPower);
      } else {
        out << '(';
        print(x, out, 0);
        out << ')';
      }
      if (parent_prec > kPower) out << ')';
      return;
    }
    case NodeKind::Negate: {
      if (parent_prec > kUnary) out << '(';
      out << '-';
      print(e.child(0), out, kUnary);
      if (parent_prec > kUnary) out << ')';
      return;
    }
    case NodeKind::FuncApp:
      out << func_name(e.func()) << '(';
      print(e.child(0), out, 0);
      out << ')';
      return;
  }
}

}  // namespace

std::string Expr::str() const {
  std::ostringstream out;
  print(*this, out, 0);
  return out.str();
}

}  // namespace stochsym
