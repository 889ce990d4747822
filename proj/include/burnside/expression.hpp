#pragma once

// Real-valued formulas in x and named parameters, used for the sides of the
// bound catalog. Grammar in docs/expression_grammar.md.

#include "burnside/expoly_parser.hpp"
#include "burnside/gamma_ref.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace burnside {

struct ExprNode;

class Expression {
 public:
  /// Throws ParseError.
  static Expression parse(std::string_view text);

  /// Unbound identifiers other than x, pi, e raise std::invalid_argument;
  /// math errors (log of a nonpositive value, ...) raise std::domain_error.
  Real eval(const Real& x, const std::map<std::string, Real>& params = {},
            const EvalPrecision& prec = {}) const;

  const std::string& text() const { return text_; }
  bool empty() const { return root_ == nullptr; }

 private:
  std::string text_;
  std::shared_ptr<const ExprNode> root_;
};

}  // namespace burnside
