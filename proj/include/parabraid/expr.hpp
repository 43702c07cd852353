#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "parabraid/freealg.hpp"

namespace parabraid {

// Surface syntax for free-algebra elements:
//
//   expr     := ["-"] term (("+"|"-") term)*
//   term     := rational? atom+
//   atom     := gen | "I" | "[" expr "," expr "]" | "{" expr "," expr "}"
//             | "<" expr "," expr "," expr ">" | "(" expr ")"
//   gen      := "B" digits ("+"|"-")
//   rational := digits ("/" digits)?
//
// Juxtaposition binds tighter than "+"/"-"; whitespace is insignificant.

struct ExprAst;

struct AtomAst {
    enum class Kind { gen, unit, commutator, anticommutator, triple, paren };
    Kind kind = Kind::unit;
    GenSym gen{};
    std::vector<ExprAst> args;

    friend bool operator==(const AtomAst&, const AtomAst&);
};

struct TermAst {
    bool has_coeff = false;
    Rational coeff = 1;
    std::vector<AtomAst> atoms;

    friend bool operator==(const TermAst&, const TermAst&);
};

struct ExprAst {
    // (sign, term) with sign in {+1, -1}; the first sign may be -1 only for a
    // leading minus.
    std::vector<std::pair<int, TermAst>> terms;

    friend bool operator==(const ExprAst&, const ExprAst&);
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, int column)
        : std::runtime_error(message + " (column " + std::to_string(column + 1) + ")"),
          column_(column) {}
    int column() const { return column_; }

  private:
    int column_;
};

ExprAst parse_expr(const std::string& text);
std::string print_expr(const ExprAst& ast);

// Lowers the tree through the free-algebra operations.  When max_mode > 0,
// a generator with a larger mode index raises ParseError.
NCPoly lower_expr(const ExprAst& ast, int max_mode = 0);

NCPoly parse_poly(const std::string& text, int max_mode = 0);

// One relator per line; blank lines and lines starting with '#' are skipped.
// Errors are rethrown with the line number prepended.
std::vector<NCPoly> parse_relator_file(const std::string& content, int max_mode = 0);

}  // namespace parabraid
