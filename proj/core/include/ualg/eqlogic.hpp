#pragma once

// Satisfaction of identities by finite algebras and finite classes.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/term.hpp"

namespace ualg {

struct SatResult {
  bool holds = true;
  /// First failing environment in lexicographic order over the equation's
  /// variables (order of first occurrence, lhs then rhs).
  std::optional<Environment> counterexample;
};

/// Decides alg |= eq by running every environment. Throws CapExceeded when
/// |alg|^|vars| exceeds `cap`.
SatResult satisfies(const FiniteAlgebra& alg, const Equation& eq, std::size_t cap = 1'000'000);

struct ClassSatResult {
  bool holds = true;
  std::optional<Environment> counterexample;
  std::optional<std::size_t> failing_algebra;
};

ClassSatResult class_satisfies(std::span<const FiniteAlgebra> k, const Equation& eq,
                               std::size_t cap = 1'000'000);

struct ModResult {
  bool holds = true;
  std::optional<Environment> counterexample;
  std::optional<std::size_t> failing_equation;
};

/// alg in Mod(E): the first failing equation is reported.
ModResult mod_check(const FiniteAlgebra& alg, std::span<const Equation> e,
                    std::size_t cap = 1'000'000);

/// Every pair (p, q) of terms from enumerate_terms(sig, vars, depth) that
/// holds in all of K, ordered by (index of p, index of q). The diagonal is
/// included.
std::vector<Equation> theory_upto(const Signature& sig, std::span<const FiniteAlgebra> k,
                                  std::span<const std::string> vars, std::size_t depth,
                                  const Caps& caps = {});

}  // namespace ualg
