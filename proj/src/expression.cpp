#include "burnside/expression.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace burnside {

struct ExprNode {
  enum class Kind { number, variable, negate, add, sub, mul, div, pow, call };
  Kind kind;
  Real number;
  std::string name;
  std::vector<std::shared_ptr<const ExprNode>> args;
};

namespace {

using Node = std::shared_ptr<const ExprNode>;
using Kind = ExprNode::Kind;

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = {
      "exp", "ln", "log", "sqrt", "abs", "lgamma", "gamma", "psi", "psi1", "b", "theta", "H"};
  return names;
}

bool is_function(const std::string& name) {
  for (const auto& f : function_names())
    if (f == name) return true;
  return false;
}

Node make(Kind kind, std::vector<Node> args, std::string name = {}) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->args = std::move(args);
  n->name = std::move(name);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node n = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Node expression() {
    Node lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make(Kind::add, {lhs, term()});
      else if (accept('-'))
        lhs = make(Kind::sub, {lhs, term()});
      else
        return lhs;
    }
  }

  Node term() {
    Node lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make(Kind::mul, {lhs, unary()});
      else if (accept('/'))
        lhs = make(Kind::div, {lhs, unary()});
      else
        return lhs;
    }
  }

  Node unary() {
    if (accept('-')) return make(Kind::negate, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  // right associative; -x^2 = -(x^2)
  Node power() {
    Node base = primary();
    if (accept('^')) return make(Kind::pow, {base, unary()});
    return base;
  }

  Node primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Node n = expression();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (accept('(')) {
        if (!is_function(name)) {
          pos_ = start;
          fail("unknown function '" + name + "'");
        }
        Node arg = expression();
        expect(')');
        return make(Kind::call, {arg}, name);
      }
      if (is_function(name)) fail("function '" + name + "' needs an argument");
      return make(Kind::variable, {}, name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Node number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string literal(text_.substr(start, pos_ - start));
    if (literal == ".") {
      pos_ = start;
      fail("malformed number");
    }
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::number;
    n->number = Real(literal);
    return n;
  }
};

struct Evaluator {
  const Real& x;
  const std::map<std::string, Real>& params;
  const EvalPrecision& prec;

  Real variable(const std::string& name) const {
    if (name == "x") return x;
    if (auto it = params.find(name); it != params.end()) return it->second;
    if (name == "pi") return pi_real();
    if (name == "e") return exp(Real(1));
    throw std::invalid_argument("unbound identifier '" + name + "'");
  }

  static void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
  }

  Real call(const std::string& f, const Real& a) const {
    if (f == "exp") return exp(a);
    if (f == "ln" || f == "log") {
      require(a > 0, "log of a nonpositive value");
      return log(a);
    }
    if (f == "sqrt") {
      require(a >= 0, "sqrt of a negative value");
      return sqrt(a);
    }
    if (f == "abs") return abs(a);
    if (f == "lgamma" || f == "gamma") {
      require(a > 0, f + " needs a positive argument");
      const Real lg = log_gamma(a, prec);
      return f == "gamma" ? exp(lg) : lg;
    }
    if (f == "psi" || f == "psi1") {
      require(a > 0, f + " needs a positive argument");
      return f == "psi" ? digamma(a, prec) : trigamma(a, prec);
    }
    if (f == "b") return catalog_eval(CatalogFunction::b(), a, prec);
    if (f == "theta") return catalog_eval(CatalogFunction::theta(), a, prec);
    return catalog_eval(CatalogFunction::H(), a, prec);
  }

  Real operator()(const ExprNode& n) const {
    switch (n.kind) {
      case Kind::number:
        return n.number;
      case Kind::variable:
        return variable(n.name);
      case Kind::negate:
        return -(*this)(*n.args[0]);
      case Kind::add:
        return (*this)(*n.args[0]) + (*this)(*n.args[1]);
      case Kind::sub:
        return (*this)(*n.args[0]) - (*this)(*n.args[1]);
      case Kind::mul:
        return (*this)(*n.args[0]) * (*this)(*n.args[1]);
      case Kind::div: {
        const Real d = (*this)(*n.args[1]);
        require(d != 0, "division by zero");
        return (*this)(*n.args[0]) / d;
      }
      case Kind::pow: {
        const Real base = (*this)(*n.args[0]);
        const Real p = (*this)(*n.args[1]);
        if (p == floor(p) && abs(p) < 1024) return pow(base, p);
        require(base > 0, "non-integer power of a nonpositive value");
        return exp(p * log(base));
      }
      case Kind::call:
        return call(n.name, (*this)(*n.args[0]));
    }
    throw std::logic_error("bad expression node");
  }
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(text).parse();
  return e;
}

Real Expression::eval(const Real& x, const std::map<std::string, Real>& params,
                      const EvalPrecision& prec) const {
  if (!root_) throw std::invalid_argument("empty expression");
  return Evaluator{x, params, prec}(*root_);
}

}  // namespace burnside
