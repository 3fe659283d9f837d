#pragma once

// Proof objects for the six-rule equational calculus (hypothesis,
// reflexivity, symmetry, transitivity, congruence, substitution), a checker
// that synthesizes each proof's conclusion, a bounded proof search, and a
// soundness audit against finite models.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/eqlogic.hpp"
#include "ualg/term.hpp"

namespace ualg {

class Proof {
 public:
  enum class Kind { Hyp, Refl, Sym, Trans, App, Sub };

  static Proof hyp(std::size_t index);
  static Proof refl(Term t);
  static Proof sym(Proof p);
  static Proof trans(Proof left, Proof right);
  static Proof app(std::string symbol, std::vector<Proof> args);
  static Proof sub(Proof p, Substitution sigma);

  Kind kind() const noexcept { return node_->kind; }
  std::size_t hypothesis() const noexcept { return node_->index; }
  const Term& term() const { return *node_->term; }
  const std::string& symbol() const noexcept { return node_->symbol; }
  const std::vector<Proof>& premises() const noexcept { return node_->premises; }
  const Substitution& substitution() const noexcept { return node_->sigma; }

  /// Height of the proof tree; leaves have height 1.
  std::size_t height() const noexcept { return node_->height; }

  /// s-expression form, e.g. `(sub (hyp 0) ((x ?y)))`.
  std::string to_string() const;

  friend bool operator==(const Proof& a, const Proof& b);

 private:
  struct Node {
    Kind kind = Kind::Hyp;
    std::size_t index = 0;
    std::optional<Term> term;
    std::string symbol;
    std::vector<Proof> premises;
    Substitution sigma;
    std::size_t height = 1;
  };

  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Proof make(Node node);

  std::shared_ptr<const Node> node_;
};

class TransMismatchError : public Error {
 public:
  TransMismatchError(Term left_middle, Term right_middle);
  const Term& left_middle() const noexcept { return left_; }
  const Term& right_middle() const noexcept { return right_; }

 private:
  Term left_;
  Term right_;
};

/// Synthesizes the conclusion of `p` bottom-up. Throws BadHypothesis,
/// TransMismatchError, ArityMismatch or UnknownSymbol.
Equation check_proof(const Signature& sig, std::span<const Equation> axioms, const Proof& p);

struct SearchLimits {
  std::size_t max_depth = 4;
  std::size_t max_term_size = 16;  // node count of intermediate terms
  std::size_t node_budget = 100'000;
};

enum class SearchStatus { Found, Refuted, BudgetExhausted };

std::string_view to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::Refuted;
  std::optional<Proof> proof;
  std::size_t nodes = 0;
};

/// Iterative deepening over proof height. Refuted means no proof exists
/// within the limits (not that the goal is false); BudgetExhausted means the
/// search was cut short.
SearchResult search_proof(const Signature& sig, std::span<const Equation> axioms,
                          const Equation& goal, const SearchLimits& limits = {});

/// One-way matching: a substitution sigma with substitute(sigma, pattern) ==
/// target, if any.
std::optional<Substitution> match(const Term& pattern, const Term& target);

struct AuditEntry {
  std::size_t proof;
  std::size_t algebra;
  Equation conclusion;
  bool models_axioms = false;
  SatResult sat;
};

struct AuditReport {
  std::vector<Equation> conclusions;
  std::vector<AuditEntry> entries;
  std::size_t violations = 0;  // models of the axioms refuting a conclusion

  bool clean() const noexcept { return violations == 0; }
};

/// Checks every proof, then every conclusion against every pool algebra that
/// models the axioms. A checker error aborts the audit by propagating.
AuditReport soundness_audit(const Signature& sig, std::span<const Equation> axioms,
                            std::span<const Proof> proofs, std::span<const FiniteAlgebra> pool,
                            std::size_t cap = 1'000'000);

}  // namespace ualg
