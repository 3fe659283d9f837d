#pragma once

// Terms over a signature, substitutions, environments and interpretation.
//
// A Term is an immutable tree with shared structure: copying is cheap and
// equality is structural.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

class Term {
 public:
  enum class Kind { Var, App };

  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> children = {});

  Kind kind() const noexcept { return node_->kind; }
  bool is_var() const noexcept { return node_->kind == Kind::Var; }
  /// Variable name (without '?') or operation symbol.
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<Term>& children() const noexcept { return node_->children; }

  /// 0 for variables and constants, 1 + max child depth otherwise.
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t node_count() const noexcept { return node_->nodes; }

  /// Surface syntax: `?x`, `e`, `f(?x,g(?y))`.
  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> children;
    std::size_t depth;
    std::size_t nodes;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Variables of `t` in order of first occurrence, without duplicates.
std::vector<std::string> variables(const Term& t);
void collect_variables(const Term& t, std::vector<std::string>& out);

/// Throws UnknownSymbol / ArityMismatch if `t` is not well formed over `sig`.
void check_term(const Signature& sig, const Term& t);

struct Equation {
  Term lhs;
  Term rhs;

  std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
  Equation swapped() const { return {rhs, lhs}; }

  friend bool operator==(const Equation&, const Equation&) = default;
  friend auto operator<=>(const Equation&, const Equation&) = default;
};

/// Variables of both sides, lhs first, in order of first occurrence.
std::vector<std::string> variables(const Equation& eq);

/// Finite map from variables to terms; unmapped variables are fixed.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Term>> init) : map_(init) {}

  void set(std::string var, Term t) { map_.insert_or_assign(std::move(var), std::move(t)); }
  const Term* find(const std::string& var) const;
  Term operator()(const std::string& var) const;

  const std::map<std::string, Term>& entries() const noexcept { return map_; }
  bool empty() const noexcept { return map_.empty(); }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Term> map_;
};

Term substitute(const Substitution& sigma, const Term& t);
Equation substitute(const Substitution& sigma, const Equation& eq);

/// The substitution x -> substitute(outer, inner(x)), defined on the union of
/// both domains; applying it equals applying `inner` then `outer`.
Substitution compose(const Substitution& outer, const Substitution& inner);

/// Assignment of carrier values to variables, kept in binding order.
class Environment {
 public:
  Environment() = default;
  Environment(std::initializer_list<std::pair<std::string, Elem>> init);

  void bind(const std::string& var, Elem value);
  std::optional<Elem> lookup(const std::string& var) const;
  std::span<const std::pair<std::string, Elem>> bindings() const noexcept { return bindings_; }
  bool empty() const noexcept { return bindings_.empty(); }

  /// `x=1 y=0`
  std::string to_string() const;

  friend bool operator==(const Environment&, const Environment&) = default;

 private:
  std::vector<std::pair<std::string, Elem>> bindings_;
};

/// Recursive interpretation of `t` in `alg` under `rho`. Throws
/// UnboundVariable, UnknownSymbol, ArityMismatch or OutOfRange.
Elem evaluate(const FiniteAlgebra& alg, const Term& t, const Environment& rho);

/// The unique homomorphism from the term algebra extending `h`, computed by an
/// explicit post-order walk. Agrees with evaluate on every input.
Elem free_lift(const FiniteAlgebra& alg, const Environment& h, const Term& t);

/// Every environment over `vars` with values in [0, size), in lexicographic
/// order (first variable most significant). Throws CapExceeded when
/// size^|vars| exceeds `cap`.
std::vector<Environment> all_environments(std::span<const std::string> vars,
                                          std::size_t size, std::size_t cap);

/// All terms of depth <= max_depth over `sig` and `vars`. Ordered by depth,
/// then variables before symbols (in signature order), then lexicographically
/// by child positions in the output list. Throws CapExceeded beyond `cap`.
std::vector<Term> enumerate_terms(const Signature& sig, std::span<const std::string> vars,
                                  std::size_t max_depth, std::size_t cap = 1'000'000);

}  // namespace ualg
