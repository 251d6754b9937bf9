#pragma once

// Expression language over the ternary superspace.
//
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*'? factor)*
//   factor := number | 'q' | gen | '(' expr ')' | '[' expr ',' expr ']'
//           | '{' expr ',' expr ',' expr '}'
//           | 'cbr' '(' grade ',' grade ',' grade ';' expr ',' expr ',' expr [';' expr] ')'
//           | 'star' '(' expr ')' | 'act' '(' expr (',' expr)* ';' expr ')'
//   grade  := '(' int (',' int)* ')'
//   gen    := name ['^' int | '_' int | '_{' int int '}'] ['[' int ']']
//
// Complex scalars are written as parenthesised sums, e.g. (1+2*q)*theta^0.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ternalg/exactnum.hpp"
#include "ternalg/ncalg.hpp"

namespace ternalg {

class SuperspaceAlgebra;

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class UnknownName : public std::invalid_argument {
 public:
  UnknownName(const std::string& name, int line, int column);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct Expr {
  enum class Kind { kGenerator, kNumber, kQ, kSum, kNegate, kProduct, kCommutator, kSymmetric, kColour, kStar, kAct };

  Kind kind = Kind::kNumber;
  std::string name;                      // kGenerator
  Rational number;                       // kNumber
  std::vector<int> signs;                // kSum: +1 / -1 per child
  std::vector<std::vector<int>> grades;  // kColour
  bool has_target = false;               // kColour: last child is the target
  std::vector<Expr> children;            // kAct: operators then target
  int line = 1;
  int column = 1;

  /// Structural equality, ignoring source positions.
  friend bool operator==(const Expr& a, const Expr& b);
};

Expr parse_expression(std::string_view source);
/// Canonical text that parses back to an equal tree.
std::string render(const Expr& e);

enum class EvalMode { kNormal, kRaw };
/// kRaw keeps products as written (no reordering), for cross-checks.
Element evaluate(const Expr& e, const SuperspaceAlgebra& alg, EvalMode mode = EvalMode::kNormal);
Element evaluate(std::string_view source, const SuperspaceAlgebra& alg, EvalMode mode = EvalMode::kNormal);

}  // namespace ternalg
