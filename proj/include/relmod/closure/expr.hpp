#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relmod::closure {

/// Formal object built from atoms by tensor products, direct sums and
/// retracts.
struct Expr {
  enum class Kind { atom, tensor, sum, retract };
  Kind kind = Kind::atom;
  std::string atom;
  std::vector<Expr> kids;

  static Expr make_atom(std::string name);
  static Expr tensor(std::vector<Expr> factors);
  static Expr sum(std::vector<Expr> summands);
  static Expr retract(Expr inner);
  bool operator==(const Expr&) const = default;
};

class ExprError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grammar: sum := prod ('+' prod)*; prod := factor ('*' factor)*;
/// factor := name ['^' n] | 'retract(' sum ')' | '(' sum ')'.
/// name^n is the n-fold tensor power (n >= 1).
Expr parse_expr(std::string_view text);
std::string to_string(const Expr& e);

/// One summand of an expanded expression: a tensor word (sorted, since the
/// category is braided), possibly only up to a retract.
struct Term {
  bool retract = false;
  std::vector<std::string> word;
  auto operator<=>(const Term&) const = default;
};

/// Distributes tensor over sums and pulls retracts outward
/// (retract(X) (x) Y is a retract of X (x) Y). Sorted.
std::vector<Term> expand(const Expr& e);

/// Tensor of atoms (single atom when the word has length 1).
Expr word_expr(const std::vector<std::string>& word);

}  // namespace relmod::closure
